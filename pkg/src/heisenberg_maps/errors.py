"""Exception types raised across the package."""


class HeisenbergError(Exception):
    """Base class for every error raised by heisenberg_maps."""


class DimensionMismatch(HeisenbergError, ValueError):
    pass


class NotSquare(HeisenbergError, ValueError):
    pass


class IndexOutOfRange(HeisenbergError, IndexError):
    pass


class SizeMismatch(HeisenbergError, ValueError):
    pass


class NotInCn(HeisenbergError, ValueError):
    """A matrix that must vanish on its outer boundary does not."""


class NotCommuting(HeisenbergError, ValueError):
    pass


class InvalidDecomposition(HeisenbergError, ValueError):
    pass


class UnsupportedN(HeisenbergError, ValueError):
    pass


class WrongCoefficientCount(HeisenbergError, ValueError):
    pass


class ParseError(HeisenbergError, ValueError):
    """Malformed text input. ``line`` is 1-based, or None when not tied to a line."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
