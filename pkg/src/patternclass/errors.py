"""Exception types shared across the package."""

from __future__ import annotations


class PatternError(ValueError):
    """Invalid pattern construction or an operation outside its domain."""


class NotInCatalogError(KeyError):
    """A family bit-set is not one of the 87 catalogued families."""


class OracleLimitError(ValueError):
    """Exhaustive search refused because the graph exceeds the size bound."""

    def __init__(self, n: int, limit: int, what: str = "oracle"):
        self.n = n
        self.limit = limit
        super().__init__(f"{what} refuses graphs with n={n} > limit={limit}")


class GraphParseError(ValueError):
    """Malformed graph text; ``line`` is 1-based, or None when not line-bound."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class FamilyParseError(ValueError):
    """Unknown pattern name or index in a family expression."""


class InvalidCertificateError(ValueError):
    """An ordering does not avoid the pattern it is supposed to avoid."""

    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)
