"""
Braid words, the braid move on g-bases, ProcessWord in its syntactic and
geometric forms, g-base multiplication and the word-problem decision.

A braid word over n strands is stored in Tietze form: `k` is σ_k (the
half-twist H_k of the standard frame) and `-k` is σ_k^{-1}.
"""

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import (
    AmbientMismatchError,
    BraidWordError,
    GrowthLimitError,
    LetterRangeError,
    ParseError,
    ShapeError,
)
from .paths import GBase, PathList, path_to_syntactic, standard_gbase, syntactic_to_path
from .utils import get_logger
from .words import (
    FGWord,
    concat,
    conjugate_shape,
    format_fgword,
    free_reduce,
    invert,
    is_reduced,
    parse_fgword,
    substitute,
)

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class BraidLetter:
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {self.sign}")
        if self.index < 1:
            raise LetterRangeError(f"half-twist index must be positive, got {self.index}")

    @classmethod
    def from_tietze(cls, value: int) -> "BraidLetter":
        return cls(abs(value), 1 if value > 0 else -1)

    @property
    def tietze(self) -> int:
        return self.index * self.sign

    def __str__(self) -> str:
        return str(self.tietze)


@dataclass(frozen=True, slots=True)
class BraidWord:
    tietze: tuple[int, ...]
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise BraidWordError(f"strand count must be positive, got {self.n}")
        for value in self.tietze:
            if value == 0 or abs(value) >= self.n:
                raise LetterRangeError(f"letter {value} out of range for {self.n} strands")

    @classmethod
    def identity(cls, n: int) -> "BraidWord":
        return cls((), n)

    @property
    def letters(self) -> tuple[BraidLetter, ...]:
        return tuple(BraidLetter.from_tietze(value) for value in self.tietze)

    def __len__(self) -> int:
        return len(self.tietze)

    def __iter__(self) -> Iterator[BraidLetter]:
        return (BraidLetter.from_tietze(value) for value in self.tietze)

    def __str__(self) -> str:
        return format_braid(self)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple(-value for value in reversed(self.tietze)), self.n)

    def concat(self, other: "BraidWord") -> "BraidWord":
        if self.n != other.n:
            raise AmbientMismatchError(f"cannot concatenate braids on {self.n} and {other.n} strands")
        return BraidWord(self.tietze + other.tietze, self.n)


def free_cancel(w: BraidWord) -> BraidWord:
    """Drop adjacent σ_i σ_i^{-1} pairs (cascading) from a braid word."""
    stack: list[int] = []
    for value in w.tietze:
        if stack and stack[-1] == -value:
            stack.pop()
        else:
            stack.append(value)
    if len(stack) == len(w.tietze):
        return w
    return BraidWord(tuple(stack), w.n)


def parse_braid(text: str, n: int) -> BraidWord:
    """Parse whitespace-separated nonzero signed integers (`1 -2 1`) over `n` strands."""
    values = []
    for token in text.split():
        try:
            value = int(token)
        except ValueError as exc:
            raise ParseError(f"malformed braid letter {token!r}") from exc
        if value == 0:
            raise ParseError("braid letter 0 does not name a half-twist")
        if abs(value) >= n:
            raise LetterRangeError(f"braid letter {token} out of range for {n} strands")
        values.append(value)
    return BraidWord(tuple(values), n)


def format_braid(w: BraidWord) -> str:
    return " ".join(str(value) for value in w.tietze)


@dataclass(frozen=True)
class SyntacticGBase:
    """
    A g-base written in the standard generators: element k is the image of γ_k.

    Construction only checks arity; `check` reports the remaining invariants
    and is run on every g-base that comes from outside the engine.
    """

    elements: tuple[FGWord, ...]

    def __post_init__(self):
        if not self.elements:
            raise AmbientMismatchError("a g-base needs at least one element")
        n = self.elements[0].n
        if any(element.n != n for element in self.elements):
            raise AmbientMismatchError("g-base elements live over different generator counts")
        if len(self.elements) != n:
            raise AmbientMismatchError(f"a g-base over {n} generators needs {n} elements, got {len(self.elements)}")

    @classmethod
    def standard(cls, n: int) -> "SyntacticGBase":
        if n < 1:
            raise BraidWordError(f"strand count must be positive, got {n}")
        return cls(tuple(FGWord.generator(i, n) for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return self.elements[0].n

    @property
    def cores(self) -> tuple[int, ...]:
        return tuple(abs(element.tietze[len(element) // 2]) if element.tietze else 0 for element in self.elements)

    def total_length(self) -> int:
        return sum(len(element) for element in self.elements)

    def is_standard(self) -> bool:
        return all(element.tietze == (k,) for k, element in enumerate(self.elements, start=1))

    def __getitem__(self, k: int) -> FGWord:
        return self.elements[k]

    def __iter__(self) -> Iterator[FGWord]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return format_syntactic_gbase(self)

    def check(self) -> list[str]:
        problems = []
        for k, element in enumerate(self.elements, start=1):
            if not is_reduced(element):
                problems.append(f"element {k} '{element}' is not freely reduced")
            shape = conjugate_shape(element)
            if shape is None:
                problems.append(f"element {k} '{element}' is not of the form Q^-1 g Q")
            elif shape.core.sign < 0:
                problems.append(f"element {k} '{element}' has a negative core")
        if problems:
            return problems

        if sorted(self.cores) != list(range(1, self.n + 1)):
            problems.append(f"core indices {self.cores} are not a permutation of 1..{self.n}")
        boundary = free_reduce(FGWord(tuple(v for element in reversed(self.elements) for v in element.tietze), self.n))
        if boundary.tietze != tuple(range(self.n, 0, -1)):
            problems.append(f"boundary product '{boundary}' differs from the descending product of the generators")
        return problems


def parse_syntactic_gbase(text: str, n: int) -> SyntacticGBase:
    lines = text.splitlines()
    if len(lines) != n:
        raise ParseError(f"expected {n} element lines, got {len(lines)}")
    gbase = SyntacticGBase(tuple(parse_fgword(line, n) for line in lines))
    problems = gbase.check()
    if problems:
        raise ShapeError("; ".join(problems))
    return gbase


def format_syntactic_gbase(gbase: SyntacticGBase) -> str:
    return "\n".join(format_fgword(element) for element in gbase.elements)


def _move_pair(a: FGWord, b: FGWord, sign: int) -> tuple[FGWord, FGWord]:
    """New values of elements i, i+1 under H_i (sign +1) or H_i^{-1} (sign -1)."""
    if sign > 0:
        return b, free_reduce(concat(concat(b, a), invert(b)))
    return free_reduce(concat(concat(invert(a), b), a)), a


def braid_move(gbase: SyntacticGBase, i: int, sign: int = 1) -> SyntacticGBase:
    if not 1 <= i < gbase.n:
        raise LetterRangeError(f"braid move {i} out of range for {gbase.n} strands")
    if sign not in (1, -1):
        raise ValueError(f"braid move sign must be +1 or -1, got {sign}")
    elements = list(gbase.elements)
    elements[i - 1], elements[i] = _move_pair(elements[i - 1], elements[i], sign)
    return SyntacticGBase(tuple(elements))


def process_word_syntactic(
    w: BraidWord, pre_cancel: bool = True, max_total_length: Optional[int] = None
) -> SyntacticGBase:
    """
    Act with `w` on the standard g-base, scanning its letters from the last
    to the first. Only the two touched elements are reduced at each step.

    Element lengths can grow exponentially in the word length. With
    `max_total_length` set, GrowthLimitError is raised as soon as the
    g-base exceeds it.
    """
    word = free_cancel(w) if pre_cancel else w
    gbase = SyntacticGBase.standard(w.n)
    for step, value in enumerate(reversed(word.tietze), start=1):
        gbase = braid_move(gbase, abs(value), 1 if value > 0 else -1)
        if max_total_length is not None and gbase.total_length() > max_total_length:
            raise GrowthLimitError(f"g-base exceeded {max_total_length} letters after {step} of {len(word)} moves")
    logger.debug("Processed %d letters on %d strands, total g-base length %d", len(word), w.n, gbase.total_length())
    return gbase


def process_word_geometric(w: BraidWord, pre_cancel: bool = True) -> GBase:
    """
    Same action as `process_word_syntactic`, holding the g-base as paths.

    Per letter only the two touched paths go through the codec, take the
    braid move as words and come back as canonical paths.
    """
    word = free_cancel(w) if pre_cancel else w
    paths = list(standard_gbase(w.n).paths)
    for value in reversed(word.tietze):
        i = abs(value)
        a, b = _move_pair(path_to_syntactic(paths[i - 1]), path_to_syntactic(paths[i]), 1 if value > 0 else -1)
        paths[i - 1] = syntactic_to_path(a)
        paths[i] = syntactic_to_path(b)
    return GBase(tuple(paths))


def gbase_to_syntactic(gbase: GBase) -> SyntacticGBase:
    return SyntacticGBase(tuple(free_reduce(path_to_syntactic(path)) for path in gbase.paths))


def syntactic_to_gbase(gbase: SyntacticGBase) -> GBase:
    return GBase(tuple(syntactic_to_path(element) for element in gbase.elements))


def multiply(first: GBase, second: GBase) -> GBase:
    """
    G-base of the braid β_1 β_2 from the g-bases of β_1 and β_2.

    Every element of `first` is rewritten with γ_j replaced by element j of
    `second`, reduced, and turned back into a path.
    """
    if first.n != second.n:
        raise AmbientMismatchError(f"cannot multiply g-bases over {first.n} and {second.n} punctures")
    first_words = [path_to_syntactic(path) for path in first.paths]
    second_words = [path_to_syntactic(path) for path in second.paths]
    product: Sequence[PathList] = [syntactic_to_path(substitute(word, second_words)) for word in first_words]
    return GBase(tuple(product))


def words_equal(first: BraidWord, second: BraidWord, pre_cancel: bool = True) -> bool:
    """Decide first = second in B_n by comparing reduced g-bases letter by letter."""
    if first.n != second.n:
        raise AmbientMismatchError(f"cannot compare braids on {first.n} and {second.n} strands")
    return process_word_syntactic(first, pre_cancel) == process_word_syntactic(second, pre_cancel)


def unprocess(gbase: SyntacticGBase) -> BraidWord:
    """
    Recover a braid word acting on the standard g-base as `gbase`.

    Applies, while the g-base is not standard, the braid move that shortens
    it most. A move applied to the g-base of β gives the g-base of σ β, so the
    answer is the sequence of applied letters inverted in place.
    """
    problems = gbase.check()
    if problems:
        raise ShapeError("; ".join(problems))

    applied: list[int] = []
    current = gbase
    length = current.total_length()
    while not current.is_standard():
        best = None
        for i in range(1, current.n):
            for sign in (1, -1):
                candidate = braid_move(current, i, sign)
                candidate_length = candidate.total_length()
                if candidate_length < length and (best is None or candidate_length < best[0]):
                    best = (candidate_length, i * sign, candidate)
        if best is None:
            raise ShapeError(f"no braid move shortens the g-base (total length {length})")
        length, letter, current = best
        applied.append(letter)

    logger.debug("Unprocessed g-base into %d letters", len(applied))
    return BraidWord(tuple(-letter for letter in applied), gbase.n)
