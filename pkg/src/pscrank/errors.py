"""Exception hierarchy shared by all modules."""


class PscRankError(Exception):
    """Base class for every error raised by pscrank."""


class ExprSyntaxError(PscRankError):
    """Malformed group expression. ``pos`` is the 0-based offset of the problem."""

    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} (at position {pos})")


class DomainError(PscRankError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class ResourceLimitError(PscRankError):
    """A finite group would exceed the configured element cap."""


class SchemaError(PscRankError, ValueError):
    """A class-data file does not satisfy its schema."""
