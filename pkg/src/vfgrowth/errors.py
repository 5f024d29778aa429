"""Shared exception types.

InputError covers anything wrong with user-supplied data (bad grammar, bad
group theory); CapExceeded covers aborts on configured resource limits.  The
command line maps these to exit codes 1 and 2.
"""


class InputError(ValueError):
    pass


class ParseError(InputError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.line = line
        self.col = col
        if line:
            message = f"line {line}, col {col}: {message}"
        super().__init__(message)


class EmbeddingError(InputError):
    pass


class CapExceeded(RuntimeError):
    pass
