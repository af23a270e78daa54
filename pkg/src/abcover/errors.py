"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """An argument violates a documented precondition."""


class ResourceLimitError(RuntimeError):
    """The requested computation exceeds a configured size limit."""


class NumericFailureError(RuntimeError):
    """An iterative numeric routine failed to converge."""


class Graph6ParseError(ValueError):
    """Malformed graph6 input.

    Carries the byte offset of the first offending character and, when
    parsing a multi-line stream, the 1-based line number.
    """

    def __init__(self, message: str, offset: int | None = None,
                 line: int | None = None):
        self.base_message = message
        self.offset = offset
        self.line = line
        parts = [message]
        if offset is not None:
            parts.append(f"at byte offset {offset}")
        if line is not None:
            parts.append(f"on line {line}")
        super().__init__(" ".join(parts))


class CorpusCoverageError(InvalidParameterError):
    """A verification campaign cannot prove its corpus covers the claim."""
