"""
Geometric encoding of g-base elements as link lists, and the codec between
link lists and conjugate-shaped free words.

A path starts at the base point u, written (-1,0), and walks through
waypoints (i,1) just above the puncture k_i and (i,-1) just below it until
it reaches its terminal puncture (m,0). The loop it stands for circles k_m
counterclockwise at the end and retraces the path back to u.

In serialized form every path is followed by a (-1,0) link; a PathList value
stops at its terminal link.
"""

import re
from dataclasses import dataclass
from itertools import pairwise
from typing import Iterator, Optional, Sequence

from .errors import ArityError, BraidWordError, ParseError, PathValidationError, ShapeError
from .utils import get_logger
from .words import FGWord, conjugate_shape, free_reduce, is_reduced

logger = get_logger(__name__)

U_POINT = -1
ABOVE = 1
ON = 0
BELOW = -1


@dataclass(frozen=True, slots=True)
class Link:
    point: int
    position: int

    def __post_init__(self):
        if self.position not in (BELOW, ON, ABOVE):
            raise ParseError(f"link position must be -1, 0 or 1, got {self.position} in {self}")
        if self.point == U_POINT:
            if self.position != ON:
                raise ParseError(f"the base point is only written (-1,0), got {self}")
        elif self.point < 1:
            raise ParseError(f"link point must be -1 or a puncture index >= 1, got {self}")

    @property
    def is_base(self) -> bool:
        return self.point == U_POINT

    def __str__(self) -> str:
        return f"({self.point},{self.position})"


BASE_LINK = Link(U_POINT, ON)


@dataclass(frozen=True, slots=True)
class PathList:
    links: tuple[Link, ...]
    n: int

    @classmethod
    def standard(cls, index: int, n: int) -> "PathList":
        return cls((BASE_LINK, Link(index, ON)), n)

    @property
    def terminal(self) -> int:
        return self.links[-1].point

    def __len__(self) -> int:
        return len(self.links)

    def __iter__(self) -> Iterator[Link]:
        return iter(self.links)

    def __str__(self) -> str:
        return format_path(self)


@dataclass(frozen=True)
class GBase:
    """An ordered n-tuple of paths over the same n punctures."""

    paths: tuple[PathList, ...]

    def __post_init__(self):
        if not self.paths:
            raise ArityError("a g-base needs at least one path")
        n = self.paths[0].n
        if any(path.n != n for path in self.paths):
            raise ArityError("g-base paths live over different puncture counts")
        if len(self.paths) != n:
            raise ArityError(f"a g-base over {n} punctures needs {n} paths, got {len(self.paths)}")

    @property
    def n(self) -> int:
        return self.paths[0].n

    @property
    def terminals(self) -> tuple[int, ...]:
        return tuple(path.terminal for path in self.paths)

    def __getitem__(self, k: int) -> PathList:
        return self.paths[k]

    def __iter__(self) -> Iterator[PathList]:
        return iter(self.paths)

    def __len__(self) -> int:
        return len(self.paths)

    def __str__(self) -> str:
        return format_gbase(self)


@dataclass(frozen=True, slots=True)
class Violation:
    index: int
    rule: str
    message: str
    path: Optional[int] = None

    def __str__(self) -> str:
        where = f"link {self.index}" if self.path is None else f"path {self.path + 1}, link {self.index}"
        return f"{where}: {self.message} [{self.rule}]"


def standard_gbase(n: int) -> GBase:
    if n < 1:
        raise BraidWordError(f"strand count must be positive, got {n}")
    return GBase(tuple(PathList.standard(i, n) for i in range(1, n + 1)))


def link_turns(links: Sequence[Link]) -> list[Optional[int]]:
    """
    Rotational sense (+1 counterclockwise, -1 clockwise) in which each
    above/below link passes its puncture, or None when it cannot be told.

    A run of links at one puncture winds in a single sense, read off the last
    link of the run and the side the path leaves toward.
    """
    turns: list[Optional[int]] = [None] * len(links)
    for idx in range(len(links) - 2, -1, -1):
        link = links[idx]
        if link.is_base or link.position == ON:
            continue
        nxt = links[idx + 1]
        if nxt.is_base:
            continue
        if nxt.point == link.point:
            if nxt.position == -link.position:
                turns[idx] = turns[idx + 1]
        elif nxt.point == link.point - 1:
            turns[idx] = link.position
        elif nxt.point == link.point + 1:
            turns[idx] = -link.position
    return turns


def validate_path(path: PathList) -> list[Violation]:
    """Return every broken encoding convention of `path`; an empty list means valid."""
    links = path.links
    if not links:
        return [Violation(0, "empty", "path has no links")]

    violations = []
    last = len(links) - 1
    if links[0] != BASE_LINK:
        violations.append(Violation(0, "start", f"path must start at the base point (-1,0), got {links[0]}"))
    if links[last].position != ON or links[last].is_base:
        violations.append(Violation(last, "terminal", f"path must end at a puncture (p,0), got {links[last]}"))

    for idx, link in enumerate(links):
        if link.is_base:
            if idx > 0:
                violations.append(Violation(idx, "interior-base", "the base point may only start a path"))
            continue
        if link.point > path.n:
            violations.append(Violation(idx, "range", f"point {link.point} out of range for {path.n} punctures"))
        if link.position == ON and idx != last:
            violations.append(Violation(idx, "interior-terminal", f"{link} may only end a path"))

    for idx, (a, b) in enumerate(pairwise(links), start=1):
        if a.is_base:
            if b.position == BELOW:
                violations.append(Violation(idx, "below-after-base", f"the base point cannot connect to {b}"))
        elif not b.is_base:
            if abs(a.point - b.point) > 1:
                violations.append(Violation(idx, "jump", f"{a} -> {b} skips over punctures"))
            elif a == b:
                violations.append(Violation(idx, "repeat", f"{b} repeats the previous link"))

    turns = link_turns(links)
    for idx, link in enumerate(links):
        if link.position == ABOVE and turns[idx] is None:
            violations.append(Violation(idx, "unresolved-turn", f"cannot tell which way the path passes {link}"))

    return violations


def path_to_syntactic(path: PathList) -> FGWord:
    """
    Read the loop of `path` as a word in the standard generators.

    Below-links add nothing, every above-link adds γ_i or γ_i^{-1} according
    to the sense it passes k_i, the terminal link adds γ_m; the word is then
    closed into Q^{-1} γ_m Q by appending the inverse of everything but its
    last letter.
    """
    violations = validate_path(path)
    if violations:
        raise PathValidationError(violations)

    turns = link_turns(path.links)
    head = []
    for idx, link in enumerate(path.links):
        if link.position == ABOVE:
            head.append(turns[idx] * link.point)
        elif link.position == ON and not link.is_base:
            head.append(link.point)
    tail = [-value for value in reversed(head[:-1])]
    return FGWord(tuple(head + tail), path.n)


def syntactic_to_path(w: FGWord) -> PathList:
    """
    Build the canonical link list of a reduced word Q^{-1} γ_m Q.

    Only the letters up to and including the middle one are read: each letter
    moves the path below the punctures between the previous point and its own
    and then over its own puncture; the middle letter lands on k_m.
    """
    shape = conjugate_shape(w)
    if shape is None:
        raise ShapeError(f"word '{w}' is not of the form Q^-1 g Q")
    if not is_reduced(w):
        raise ShapeError(f"word '{w}' is not freely reduced")
    if shape.core.sign < 0:
        raise ShapeError(f"word '{w}' has a negative core; a path always ends in a positive loop")

    values = w.tietze
    middle = len(values) // 2
    if middle == 0:
        return PathList((BASE_LINK, Link(values[0], ON)), w.n)

    links = [BASE_LINK, Link(abs(values[0]), ABOVE)]
    last_point = abs(values[0])
    last_positive = values[0] > 0
    for k in range(1, middle + 1):
        current = abs(values[k])
        positive = values[k] > 0
        if not last_positive:
            if last_point < current:
                passage = range(last_point + 1, current)
                arrive_below = positive
            else:
                passage = range(last_point, current, -1)
                arrive_below = not positive
        elif last_point > current:
            passage = range(last_point - 1, current, -1)
            arrive_below = not positive
        else:
            passage = range(last_point, current)
            arrive_below = positive

        links.extend(Link(c, BELOW) for c in passage)
        if k == middle:
            # the approach side is absorbed by the terminal loop
            links.append(Link(current, ON))
        else:
            if arrive_below:
                links.append(Link(current, BELOW))
            links.append(Link(current, ABOVE))
        last_point, last_positive = current, positive

    return PathList(tuple(links), w.n)


def reduce_path(path: PathList) -> PathList:
    """Canonical representative of the homotopy class of `path`."""
    return syntactic_to_path(free_reduce(path_to_syntactic(path)))


def split_gbase(links: Sequence[Link], n: int) -> tuple[PathList, ...]:
    """Break a serialized g-base at its (-1,0) separators into n paths."""
    if not links or links[0] != BASE_LINK:
        raise ParseError("a serialized g-base must start with (-1,0)")
    if len(links) < 2 or links[-1] != BASE_LINK:
        raise ParseError("a serialized g-base must end with a trailing (-1,0)")

    segments: list[list[Link]] = []
    for idx, link in enumerate(links[:-1]):
        if link.is_base:
            if segments and len(segments[-1]) == 1:
                raise ParseError(f"empty path before separator at link {idx}")
            segments.append([link])
        else:
            segments[-1].append(link)
    if len(segments[-1]) == 1:
        raise ParseError("empty path before the trailing separator")

    if len(segments) != n:
        raise ArityError(f"expected {n} paths in the g-base, found {len(segments)}")
    return tuple(PathList(tuple(segment), n) for segment in segments)


def join_gbase(paths: Sequence[PathList]) -> tuple[Link, ...]:
    joined: list[Link] = []
    for path in paths:
        joined.extend(path.links)
    joined.append(BASE_LINK)
    return tuple(joined)


def validate_gbase(gbase: GBase) -> list[Violation]:
    violations = []
    for k, path in enumerate(gbase.paths):
        violations.extend(
            Violation(v.index, v.rule, v.message, path=k) for v in validate_path(path)
        )
    if not violations and sorted(gbase.terminals) != list(range(1, gbase.n + 1)):
        violations.append(
            Violation(0, "terminal-permutation", f"terminal points {gbase.terminals} are not a permutation")
        )
    return violations


_LINK_LIST = re.compile(r"(\(-?\d+,-?\d+\)(,\(-?\d+,-?\d+\))*)?")
_LINK = re.compile(r"\((-?\d+),(-?\d+)\)")


def parse_links(text: str) -> tuple[Link, ...]:
    compact = "".join(text.split())
    if not _LINK_LIST.fullmatch(compact):
        raise ParseError(f"malformed link list {text!r}; expected '(p,q),(p,q),...'")
    return tuple(Link(int(p), int(q)) for p, q in _LINK.findall(compact))


def parse_path(text: str, n: int) -> PathList:
    links = parse_links(text)
    if not links:
        raise ParseError("empty path")
    if len(links) > 1 and links[-1] == BASE_LINK:
        links = links[:-1]
    return PathList(links, n)


def format_path(path: PathList) -> str:
    return ",".join(str(link) for link in (*path.links, BASE_LINK))


def parse_gbase(text: str, n: int) -> GBase:
    gbase = GBase(split_gbase(parse_links(text), n))
    violations = validate_gbase(gbase)
    if violations:
        raise PathValidationError(violations)
    logger.debug("Parsed g-base over %d punctures with terminals %s", n, gbase.terminals)
    return gbase


def format_gbase(gbase: GBase) -> str:
    return ",".join(str(link) for link in join_gbase(gbase.paths))
