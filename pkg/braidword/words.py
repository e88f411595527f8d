"""
Words over the standard generators γ_1..γ_n of the free fundamental group of
the n-punctured disk.

Letters are stored in Tietze form: the signed integer `+k` stands for γ_k and
`-k` for γ_k^{-1}. FGLetter is the structured view of one such integer.
"""

from dataclasses import dataclass
from itertools import pairwise
from typing import Iterable, Iterator, Optional, Sequence

from .errors import AmbientMismatchError, LetterRangeError, ParseError


@dataclass(frozen=True, slots=True)
class FGLetter:
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {self.sign}")
        if self.index < 1:
            raise LetterRangeError(f"generator index must be positive, got {self.index}")

    @classmethod
    def from_tietze(cls, value: int) -> "FGLetter":
        return cls(abs(value), 1 if value > 0 else -1)

    @property
    def tietze(self) -> int:
        return self.index * self.sign

    def inverse(self) -> "FGLetter":
        return FGLetter(self.index, -self.sign)

    def __str__(self) -> str:
        return f"{'+' if self.sign > 0 else '-'}{self.index}"


@dataclass(frozen=True, slots=True)
class FGWord:
    """A (not necessarily reduced) word in γ_1..γ_n, carrying its ambient n."""

    tietze: tuple[int, ...]
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise AmbientMismatchError(f"generator count must be positive, got {self.n}")
        for value in self.tietze:
            if value == 0 or abs(value) > self.n:
                raise LetterRangeError(f"letter {value} out of range for {self.n} generators")

    @classmethod
    def identity(cls, n: int) -> "FGWord":
        return cls((), n)

    @classmethod
    def generator(cls, index: int, n: int, sign: int = 1) -> "FGWord":
        return cls((index * sign,), n)

    @classmethod
    def from_letters(cls, letters: Iterable[FGLetter], n: int) -> "FGWord":
        return cls(tuple(letter.tietze for letter in letters), n)

    @property
    def letters(self) -> tuple[FGLetter, ...]:
        return tuple(FGLetter.from_tietze(value) for value in self.tietze)

    def __len__(self) -> int:
        return len(self.tietze)

    def __iter__(self) -> Iterator[FGLetter]:
        return (FGLetter.from_tietze(value) for value in self.tietze)

    def __getitem__(self, k: int) -> FGLetter:
        return FGLetter.from_tietze(self.tietze[k])

    def __str__(self) -> str:
        return format_fgword(self)

    def is_identity(self) -> bool:
        return not self.tietze


@dataclass(frozen=True, slots=True)
class ConjugateShape:
    """Decomposition w ≡ Q^{-1} core Q."""

    q: FGWord
    core: FGLetter


def _reduce_tietze(values: Iterable[int]) -> list[int]:
    stack: list[int] = []
    for value in values:
        if stack and stack[-1] == -value:
            stack.pop()
        else:
            stack.append(value)
    return stack


def free_reduce(w: FGWord) -> FGWord:
    """
    Return the freely reduced form of `w`.

    Single stack scan: each letter is pushed once and popped at most once,
    so cascading cancellations cost nothing extra.
    """
    reduced = _reduce_tietze(w.tietze)
    if len(reduced) == len(w.tietze):
        return w
    return FGWord(tuple(reduced), w.n)


def invert(w: FGWord) -> FGWord:
    return FGWord(tuple(-value for value in reversed(w.tietze)), w.n)


def concat(a: FGWord, b: FGWord) -> FGWord:
    if a.n != b.n:
        raise AmbientMismatchError(f"cannot concatenate words over {a.n} and {b.n} generators")
    return FGWord(a.tietze + b.tietze, a.n)


def substitute(w: FGWord, images: Sequence[FGWord]) -> FGWord:
    """
    Apply the homomorphism γ_j ↦ images[j-1] to `w` and freely reduce.

    Image letters are streamed straight into the reduction stack, so the cost
    is linear in the length of the unreduced image.
    """
    if len(images) != w.n:
        raise AmbientMismatchError(f"substitution needs {w.n} images, got {len(images)}")
    if not images:
        return w
    target_n = images[0].n
    if any(image.n != target_n for image in images):
        raise AmbientMismatchError("substitution images live over different generator counts")

    forward = [image.tietze for image in images]
    backward = [tuple(-value for value in reversed(image)) for image in forward]

    stack: list[int] = []
    for value in w.tietze:
        chunk = forward[value - 1] if value > 0 else backward[-value - 1]
        for letter in chunk:
            if stack and stack[-1] == -letter:
                stack.pop()
            else:
                stack.append(letter)
    return FGWord(tuple(stack), target_n)


def is_reduced(w: FGWord) -> bool:
    return all(a != -b for a, b in pairwise(w.tietze))


def conjugate_shape(w: FGWord) -> Optional[ConjugateShape]:
    """
    Split `w` as Q^{-1} γ Q when its letters mirror around the middle one.

    Returns None (not a conjugate) for even lengths or a broken mirror.
    Negative cores are returned as found.
    """
    values = w.tietze
    length = len(values)
    if length % 2 == 0:
        return None
    k = length // 2
    for i in range(k):
        if values[i] != -values[length - 1 - i]:
            return None
    return ConjugateShape(FGWord(values[k + 1 :], w.n), FGLetter.from_tietze(values[k]))


def parse_fgword(text: str, n: int) -> FGWord:
    """Parse whitespace-separated signed integers (`+3 +2 -3`); empty text is the identity."""
    values = []
    for token in text.split():
        try:
            value = int(token)
        except ValueError as exc:
            raise ParseError(f"malformed letter token {token!r}") from exc
        if value == 0:
            raise ParseError("letter token 0 does not name a generator")
        if abs(value) > n:
            raise LetterRangeError(f"letter {token} out of range for {n} generators")
        values.append(value)
    return FGWord(tuple(values), n)


def format_fgword(w: FGWord) -> str:
    return " ".join(f"{value:+d}" for value in w.tietze)
