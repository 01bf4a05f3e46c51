"""Exception types shared across the package."""


class InvalidLetteringError(ValueError):
    """A word/decoder pair violates the well-formedness rules."""


class ParseError(ValueError):
    """Malformed textual input; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CapabilityError(RuntimeError):
    """The request exceeds a documented desk-scale bound of this toolkit."""
