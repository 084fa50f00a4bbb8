"""Exception hierarchy shared by the computational modules."""


class NWSchurError(Exception):
    """Base class for all errors raised by this package."""


class DiagramParseError(NWSchurError, ValueError):
    """Raised when diagram text cannot be parsed.

    ``line`` and ``column`` are 1-based positions in the input when known.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)


class PreconditionError(NWSchurError, ValueError):
    """An operation was called on input outside its domain."""


class NotNorthwestError(PreconditionError):
    pass


class BlowupNotClosedError(PreconditionError):
    pass


class SizeBoundError(PreconditionError):
    """The brute-force oracle refuses instances above its configured size."""


class NonExactDivision(NWSchurError, ArithmeticError):
    """Polynomial division left a non-zero remainder."""


class NotSymmetricError(NWSchurError, ValueError):
    pass


class NotPolynomialError(NWSchurError, ValueError):
    pass


class NonDominantLeadingTermError(NWSchurError, ValueError):
    pass
