"""
Independent ground truth for differential testing.

`artin_oracle` computes the action of a braid word on the free group by
plain letter replacement, scanning the word from its first letter to its
last. It deliberately shares no code with the braid-move engine beyond the
word value types.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .braids import BraidWord, SyntacticGBase, words_equal
from .errors import BraidWordError
from .pipeline import load_pipeline
from .sampling import make_rng, random_braid_words
from .utils import get_logger
from .words import FGWord

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise BraidWordError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.images) + ")"


def _replacement_table(value: int) -> dict[int, tuple[int, ...]]:
    # images of γ_i and γ_{i+1} under σ_i (value > 0) or σ_i^{-1}; other generators are fixed
    i = abs(value)
    if value > 0:
        return {i: (i + 1,), i + 1: (i + 1, i, -(i + 1))}
    return {i: (-i, i + 1, i), i + 1: (i,)}


def _cancel_pairs(letters: list[int]) -> list[int]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] + x == 0:
            del out[-1]
        else:
            out.append(x)
    return out


def artin_oracle(w: BraidWord) -> SyntacticGBase:
    elements = [[k] for k in range(1, w.n + 1)]
    for value in w.tietze:
        table = _replacement_table(value)
        for pos, element in enumerate(elements):
            rewritten: list[int] = []
            for x in element:
                image = table.get(abs(x))
                if image is None:
                    rewritten.append(x)
                elif x > 0:
                    rewritten.extend(image)
                else:
                    rewritten.extend(-y for y in reversed(image))
            elements[pos] = _cancel_pairs(rewritten)
    return SyntacticGBase(tuple(FGWord(tuple(element), w.n) for element in elements))


def perm_of(w: BraidWord) -> Permutation:
    """Symmetric-group image of `w`: each letter swaps the values i and i+1, signs ignored."""
    images = list(range(1, w.n + 1))
    for value in w.tietze:
        i = abs(value)
        images = [i + 1 if v == i else i if v == i + 1 else v for v in images]
    return Permutation(tuple(images))


@dataclass(frozen=True, slots=True)
class OracleFailure:
    index: int
    word: BraidWord
    reason: str


@dataclass
class OracleReport:
    checked: int
    seed: Optional[int]
    pipeline: str
    failures: list[OracleFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def counterexample(self) -> Optional[BraidWord]:
        return self.failures[0].word if self.failures else None

    def summary(self) -> str:
        lines = [
            f"oracle-check: {'PASS' if self.passed else 'FAIL'}",
            f"  pipeline: {self.pipeline}",
            f"  seed: {self.seed}",
            f"  words checked: {self.checked}",
            f"  failures: {len(self.failures)}",
        ]
        if self.failures:
            first = self.failures[0]
            lines.append(f"  first counterexample (word {first.index}, n={first.word.n}): {first.word}")
            lines.append(f"  reason: {first.reason}")
        return "\n".join(lines)


def _check_word(index: int, word: BraidWord, previous: Optional[BraidWord], pipeline: str) -> list[OracleFailure]:
    failures = []
    normal = load_pipeline(pipeline).normal_form(word)
    if normal != artin_oracle(word):
        failures.append(OracleFailure(index, word, "pipeline g-base differs from the substitution oracle"))
    if normal.cores != perm_of(word).images:
        failures.append(OracleFailure(index, word, f"core indices {normal.cores} differ from {perm_of(word)}"))
    if previous is not None and previous.n == word.n and words_equal(previous, word):
        if perm_of(previous) != perm_of(word):
            failures.append(OracleFailure(index, word, f"equal to word {index - 1} with a different permutation"))
    return failures


def _check_chunk(chunk: list[tuple[int, BraidWord, Optional[BraidWord]]], pipeline: str) -> list[OracleFailure]:
    failures = []
    for index, word, previous in chunk:
        failures.extend(_check_word(index, word, previous, pipeline))
    return failures


def oracle_check(
    count: int,
    max_strands: int = 6,
    max_length: int = 40,
    seed: Optional[int] = None,
    workers: int = 1,
    pipeline: str = "syn",
) -> OracleReport:
    """
    Run a seeded differential campaign of `count` random words.

    Every word is checked against the substitution oracle and the
    permutation projection, and every consecutive pair over the same strand
    count must not be equal with different permutations. With `workers > 1`
    chunks are checked in a process pool and merged back in input order.
    """
    words = random_braid_words(make_rng(seed), count, max_strands, max_length)
    items = [(k, word, words[k - 1] if k > 0 else None) for k, word in enumerate(words)]

    if workers <= 1 or count < 2:
        failures = _check_chunk(items, pipeline)
    else:
        size = -(-len(items) // workers)
        chunks = [items[start : start + size] for start in range(0, len(items), size)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = ex.map(_check_chunk, chunks, [pipeline] * len(chunks))
            failures = [failure for part in parts for failure in part]

    report = OracleReport(checked=count, seed=seed, pipeline=pipeline, failures=failures)
    if report.passed:
        logger.info("Oracle campaign passed on %d words (seed %s)", count, seed)
    else:
        logger.error("Oracle campaign found %d failures; first on %s", len(failures), report.counterexample)
    return report
