# reduction/exceptions.py

from core.exceptions import LabError
from gridtiling.exceptions import InvalidInstance  # noqa: F401 (re-exported)


class StructureError(LabError):
    """
    A center set of cost at most 2n^2 must have a rigid shape; each subclass
    names the structural fact a given center set breaks, and the gadget.
    """

    def __init__(self, message, cell=None):
        super().__init__(message)
        self.cell = cell


class MissingYCenter(StructureError):
    pass


class CycleCenterCountMismatch(StructureError):
    pass


class NonEquidistantCycleCenters(StructureError):
    pass


class NoMatchingElement(StructureError):
    pass


class StrayCenter(StructureError):
    pass
