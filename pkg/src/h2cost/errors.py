"""Exception types shared across the package."""


class H2CostError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(H2CostError, ValueError):
    """An input is outside the mathematical domain of an operation."""


class ValidationError(H2CostError, ValueError):
    """A value violates a model invariant (bad price, duplicate state, ...)."""


class SchemaError(H2CostError, ValueError):
    """A file is structurally malformed (missing column, unknown key, ...)."""
