# core/exceptions.py


class LabError(Exception):
    """ Root of every error raised by the lab's library code. """


class RationalParseError(LabError, ValueError):
    pass


class InvalidGraph(LabError):
    pass


class InvalidVertex(LabError):
    def __init__(self, vertex, vertex_count):
        super().__init__(f"vertex {vertex} is not in 0..{vertex_count - 1}")
        self.vertex = vertex


class DisconnectedGraph(LabError):
    pass


class FormatError(LabError):
    """ A text file that does not follow its format; `line` is 1-based (0 = whole file). """

    def __init__(self, message, line=0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line
