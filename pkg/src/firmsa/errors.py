"""Exception hierarchy shared by all firmsa modules."""


class FirmsaError(Exception):
    """Base class for every error raised by this package."""


class SchemaError(FirmsaError):
    """A JSON/CSV document does not match the expected file schema."""


class InvariantViolation(FirmsaError):
    """A domain object fails one of its defining invariants.

    The message always names the violated invariant.
    """


class NotHermitian(InvariantViolation):
    pass


class NoConvergence(FirmsaError):
    """The eigensolver failed to converge; no result is returned."""


class DomainError(FirmsaError):
    """An eigenvalue is materially negative where a PSD input is required."""


class DimensionMismatch(FirmsaError):
    pass


class BadRank(FirmsaError):
    pass


class SingularTotal(FirmsaError):
    """The block sum in a POVM construction is numerically singular."""


class BadPartition(FirmsaError):
    pass


class NotRank1(FirmsaError):
    pass


class NotOrthonormal(FirmsaError):
    pass


class InvalidExponent(FirmsaError):
    pass


class ConfigError(FirmsaError):
    pass
