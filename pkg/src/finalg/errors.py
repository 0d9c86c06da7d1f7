"""Exception hierarchy shared by all modules."""


class FinalgError(Exception):
    pass


class DimensionError(FinalgError, ValueError):
    pass


class DomainError(FinalgError, ValueError):
    pass


class IncompatibleAlgebraError(FinalgError, ValueError):
    pass


class SingularMatrixError(FinalgError, ArithmeticError):
    pass


class NotInvertibleError(FinalgError, ArithmeticError):
    pass


class ConvergenceError(FinalgError, ArithmeticError):
    """Iteration cap reached; ``detail`` holds residuals or the last iterate."""

    def __init__(self, message, detail=None):
        super().__init__(message)
        self.detail = detail


class ConvergenceDomainError(DomainError):
    """|lambda| does not exceed the element norm, so the Neumann series may diverge."""

    def __init__(self, lam_abs: float, norm: float):
        super().__init__(f"|lambda|={lam_abs:.17g} norm={norm:.17g}")
        self.lam_abs = lam_abs
        self.norm = norm


class ValidationError(FinalgError, ValueError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
