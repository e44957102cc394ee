"""Exception types shared across the package.

The CLI maps these onto exit codes: InputError -> 1, hypothesis warnings
(reported in result records, not raised) -> 2, ResourceCapError -> 3.
"""


class LojexError(Exception):
    """Base class for all package errors."""


class InputError(LojexError, ValueError):
    """Malformed user input (text, flags, inconsistent data)."""


class ParseError(InputError):
    """Syntax error in polynomial/ideal text, with a position."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} (at position {pos}: {text[pos:pos + 12]!r})")
        self.text = text
        self.pos = pos


class DimensionError(InputError):
    """Operands live in different ambient dimensions."""


class DomainError(LojexError, ValueError):
    """Operation applied outside its stated preconditions."""


class InfiniteValueError(DomainError):
    """A finite value was required (finite colength, finite sigma, ...)."""


class ResourceCapError(LojexError, RuntimeError):
    """A hard resource cap (S-pair queue, search bound) was exceeded."""
