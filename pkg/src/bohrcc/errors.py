"""Exception types shared across the package."""


class BohrccError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(BohrccError, ValueError):
    """A user-supplied parameter is outside its admissible range."""


class DomainError(BohrccError, ValueError):
    """An evaluation point or operand violates a domain precondition."""


class PrecisionError(BohrccError, RuntimeError):
    """Requested accuracy cannot be certified (truncation tail too large)."""


class BudgetError(BohrccError, RuntimeError):
    """An adaptive routine exhausted its evaluation budget before reaching
    the requested tolerance.  Carries the best estimate found so far."""

    def __init__(self, message, best=None, error_estimate=None):
        super().__init__(message)
        self.best = best
        self.error_estimate = error_estimate


class NoRootError(BohrccError, RuntimeError):
    """A radius equation shows no sign change on (0, 1).  The defining
    inequalities guarantee a root, so this signals an integrand bug."""


class InconsistencyError(BohrccError, RuntimeError):
    """Two routes that must agree numerically disagreed; implementation bug."""
