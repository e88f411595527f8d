"""Seeded random workloads for campaigns, tests and benchmarks."""

from typing import Optional

import numpy as np

from .braids import BraidWord
from .errors import BraidWordError
from .words import FGWord


def make_rng(seed: Optional[int]) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_braid_word(rng: np.random.Generator, n: int, length: int) -> BraidWord:
    """Uniform random letters σ_i^{±1}, 1 <= i <= n-1."""
    if length < 0:
        raise BraidWordError(f"word length must be non-negative, got {length}")
    if length == 0:
        return BraidWord.identity(n)
    if n < 2:
        raise BraidWordError(f"a braid on {n} strand(s) has no letters")
    indices = rng.integers(1, n, size=length)
    signs = rng.choice((-1, 1), size=length)
    return BraidWord(tuple(int(v) for v in indices * signs), n)


def random_braid_words(rng: np.random.Generator, count: int, max_strands: int, max_length: int) -> list[BraidWord]:
    """`count` words with strand count uniform in 2..max_strands and length uniform in 0..max_length."""
    if max_strands < 2:
        raise BraidWordError(f"max_strands must be at least 2, got {max_strands}")
    words = []
    for _ in range(count):
        n = int(rng.integers(2, max_strands + 1))
        length = int(rng.integers(0, max_length + 1))
        words.append(random_braid_word(rng, n, length))
    return words


def random_conjugate_word(rng: np.random.Generator, n: int, half_length: int) -> FGWord:
    """
    A freely reduced Q^{-1} γ_m Q with |Q| = half_length and a positive core.

    The first letter of Q avoids γ_m^{±1} so nothing cancels at the core.
    """
    core = int(rng.integers(1, n + 1))
    if half_length > 0 and n < 2:
        raise BraidWordError("a conjugate with a non-empty prefix needs at least 2 generators")
    q: list[int] = []
    while len(q) < half_length:
        value = int(rng.integers(1, n + 1)) * int(rng.choice((-1, 1)))
        if not q and abs(value) == core:
            continue
        if q and value == -q[-1]:
            continue
        q.append(value)
    head = [-value for value in reversed(q)]
    return FGWord(tuple(head + [core] + q), n)


def twist_power_word(n: int, k: int) -> BraidWord:
    """
    The k-th power of the full twist (σ_1 ⋯ σ_{n-1})^n.

    The full twist conjugates every element of the g-base by the boundary
    loop, so element lengths grow linearly in |k|.
    """
    twist = tuple(range(1, n)) * n
    word = BraidWord(twist * abs(k), n)
    return word if k >= 0 else word.inverse()
