"""Exception hierarchy shared by every layer of the package."""


class SolvShadowError(Exception):
    """Base class for all package errors."""


class InvariantViolation(SolvShadowError):
    """A verified postcondition failed; indicates a bug, not bad input."""


class FieldMismatch(SolvShadowError):
    pass


class NotSemisimple(SolvShadowError):
    pass


class NonSolvableInput(SolvShadowError):
    pass


class JacobiViolation(SolvShadowError):
    def __init__(self, triple, residual):
        self.triple = triple
        self.residual = residual
        shown = ", ".join(str(x) for x in residual)
        super().__init__(f"Jacobi identity fails on basis triple {triple}: residual [{shown}]")


class NotADerivation(SolvShadowError):
    pass


class NotASubalgebra(SolvShadowError):
    pass


class NotACartan(SolvShadowError):
    pass


class DegeneratePairing(SolvShadowError):
    pass


class NotClosed(SolvShadowError):
    """Bracket closure of ``(id + phi) s`` fails for the basis pair ``(i, j)``."""

    def __init__(self, i, j, bracket):
        self.pair = (i, j)
        self.bracket = bracket
        super().__init__(f"[(id+phi)e{i}, (id+phi)e{j}] leaves the modified subspace")


class DocumentSyntaxError(SolvShadowError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)


class NonSymmetric(SolvShadowError, ValueError):
    pass


class NonPositiveDefinite(SolvShadowError, ValueError):
    pass
