"""Exception hierarchy. Every numerical failure derives from ZetaKitError."""


class ZetaKitError(Exception):
    pass


class DomainError(ZetaKitError, ValueError):
    """Argument outside the domain of the operation."""


class PoleError(DomainError):
    """Argument sits on a pole (Gamma at non-positive integers, zeta at s=1)."""


class ConvergenceError(ZetaKitError, ArithmeticError):
    """A series, product or quadrature did not reach its tolerance."""


class ConsistencyError(ZetaKitError, ArithmeticError):
    """A quantity that must be real (or symmetric) came out otherwise."""


class EmptyTableError(DomainError):
    """An operation needing zeros received an empty zero table."""


class MissedZerosError(ZetaKitError):
    """Zero count of a scan disagrees with the Riemann-von Mangoldt count."""

    def __init__(self, message, table=None, report=None):
        super().__init__(message)
        self.table = table
        self.report = report


class SieveBudgetError(DomainError):
    """Requested sieve exceeds the configured memory budget or the sieve is too small."""


class CacheCorruptionError(ZetaKitError):
    """A zero-cache file failed its header or monotonicity checks."""
