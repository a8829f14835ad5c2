"""Exception hierarchy shared by every module of the package."""


class AlgebraError(Exception):
    """Base class for computation errors."""


class RingMismatchError(AlgebraError, ValueError):
    """Operands live in different rings (or have different variable counts)."""


class SingularMatrixError(AlgebraError, ValueError):
    pass


class ResourceError(AlgebraError):
    """A configured work cap (pair count, step count, ...) was hit."""


class CapExceededError(ResourceError):
    """An enumeration or lattice exceeded its size cap.

    ``partial_count`` records how far the computation got.
    """

    def __init__(self, message, partial_count=None):
        super().__init__(message)
        self.partial_count = partial_count


class GinDisagreementError(AlgebraError):
    """No two random coordinate changes produced the same initial ideal."""


class NotStableError(AlgebraError, ValueError):
    pass


class MacaulayViolationError(AlgebraError, ValueError):
    """The requested function is not an O-sequence."""


class NotHilbertPolynomialError(AlgebraError, ValueError):
    pass


class DepthZeroError(AlgebraError):
    pass


class DimensionError(AlgebraError, ValueError):
    pass


class ParseError(ValueError):
    """Syntax error in an ideal document; ``position`` is a 0-based offset."""

    def __init__(self, message, position=None, line=None):
        where = ""
        if line is not None:
            where = f" (line {line}"
            where += f", column {position})" if position is not None else ")"
        elif position is not None:
            where = f" (at offset {position})"
        super().__init__(message + where)
        self.position = position
        self.line = line


class NonHomogeneousError(ParseError):
    pass
