"""Exception hierarchy shared by every module."""


class CurvError(Exception):
    """Base class for all library errors."""


class IndexOutOfRange(CurvError, IndexError):
    pass


class SelfLoop(CurvError, ValueError):
    pass


class InvalidSubset(CurvError, ValueError):
    pass


class DimensionTooSmall(CurvError, ValueError):
    pass


class AmbiguousDimension(CurvError, RuntimeError):
    pass


class ParamOutOfRange(CurvError, ValueError):
    pass


class UnknownName(CurvError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""



class OverlappingCorrespondence(CurvError, ValueError):
    pass


class ParseError(CurvError, ValueError):
    """Malformed graph or report document; carries a 1-based position."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
