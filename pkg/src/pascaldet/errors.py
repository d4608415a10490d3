class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class PreconditionError(DomainError):
    """Input violates a stated hypothesis (e.g. log-concavity, positivity)."""


class SizeLimitError(DomainError):
    """Instance exceeds the configured enumeration bound."""
