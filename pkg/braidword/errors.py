"""Exception hierarchy shared by the codec, the braid engine and the CLI."""

from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:
    from .paths import Violation


class BraidWordError(ValueError):
    """Base class for every error raised on bad input to the engine."""


class AmbientMismatchError(BraidWordError):
    """Operands live over different generator or strand counts."""


class LetterRangeError(BraidWordError):
    """A letter index falls outside the ambient range."""


class ParseError(BraidWordError):
    """Text could not be parsed into a word, path or g-base."""


class ArityError(ParseError):
    """A serialized g-base holds the wrong number of paths."""


class ShapeError(BraidWordError):
    """A word lacks the conjugate shape (or reducedness) an operation needs."""


class PathValidationError(BraidWordError):
    """A path list breaks one or more encoding conventions."""

    def __init__(self, violations: Sequence["Violation"]):
        self.violations = tuple(violations)
        details = "; ".join(str(v) for v in self.violations)
        super().__init__(f"invalid path list: {details}")


class GrowthLimitError(BraidWordError):
    """A g-base outgrew the total length allowed for one computation."""
