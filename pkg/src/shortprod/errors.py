"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class SearchCapExceeded(RuntimeError):
    """The band search ran past its iteration cap without finding a violation."""


class InconclusiveScan(RuntimeError):
    """A brute-force scan reached its cap before reaching a verdict."""
