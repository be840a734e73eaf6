# gridtiling/exceptions.py

from core.exceptions import LabError


class InvalidInstance(LabError):
    pass


class IndexOutOfRange(LabError):
    pass


class InfeasibleParams(LabError):
    pass
