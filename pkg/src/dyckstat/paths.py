"""Lattice paths over the steps u = (1, 1) and d = (1, -1).

A path is stored as its canonical text form, a string over ``{'u', 'd'}``,
together with cached level extrema.  Positions come in two flavours:

* step indices ``0 .. len - 1`` address steps;
* point indices ``0 .. len`` address lattice points between steps, point
  ``p`` sitting after the first ``p`` steps.

Enumeration order is lexicographic with ``u < d`` throughout.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterator

from .errors import DyckError, InvariantError

__all__ = [
    "Step",
    "LatticePath",
    "PathKind",
    "DYCK",
    "FREE",
    "partial",
    "as_path",
    "levels",
    "validate",
    "enumerate_words",
    "enumerate_paths",
    "enumerate_primitive",
    "reverse",
    "concat",
    "lowest_valley_splits",
    "split_primitive_components",
]

_WORD = re.compile(r"[ud]*\Z")


class Step(str, enum.Enum):
    U = "u"
    D = "d"

    @property
    def delta(self) -> int:
        return 1 if self is Step.U else -1


@dataclass(frozen=True)
class LatticePath:
    """Immutable u/d step sequence with level bookkeeping."""

    steps: str
    final_level: int = field(init=False, compare=False, repr=False)
    min_level: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.steps, str) or not _WORD.match(self.steps):
            raise DyckError(f"path must be a string over 'u'/'d', got {self.steps!r}")
        h = lo = 0
        for c in self.steps:
            h += 1 if c == "u" else -1
            if h < lo:
                lo = h
        object.__setattr__(self, "final_level", h)
        object.__setattr__(self, "min_level", lo)

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps

    def __iter__(self) -> Iterator[Step]:
        return (Step(c) for c in self.steps)

    def __add__(self, other: LatticePath) -> LatticePath:
        return concat(self, other)

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def is_dyck(self) -> bool:
        return self.min_level == 0 and self.final_level == 0

    @property
    def is_partial_dyck(self) -> bool:
        return self.min_level == 0

    @property
    def is_free_dyck(self) -> bool:
        return self.final_level == 0

    @property
    def is_primitive(self) -> bool:
        if not self.steps or not self.is_dyck:
            return False
        # exactly one return step: the level leaves 0 and only comes back at the end
        return levels(self.steps).count(0) == 2

    def levels(self) -> list[int]:
        return levels(self.steps)


@dataclass(frozen=True)
class PathKind:
    """One of ``dyck``, ``partial`` (with an end level) or ``free``."""

    name: str
    end_level: int = 0

    def __post_init__(self):
        if self.name not in ("dyck", "partial", "free"):
            raise DyckError(f"unknown path kind {self.name!r}")
        if self.end_level < 0:
            raise DyckError("end_level must be >= 0")
        if self.name != "partial" and self.end_level != 0:
            raise DyckError(f"{self.name} paths end at level 0")

    def __str__(self) -> str:
        return f"partial({self.end_level})" if self.name == "partial" else self.name


DYCK = PathKind("dyck")
FREE = PathKind("free")


def partial(end_level: int) -> PathKind:
    return PathKind("partial", end_level)


def as_path(p: LatticePath | str) -> LatticePath:
    return p if isinstance(p, LatticePath) else LatticePath(p)


def levels(word: str) -> list[int]:
    """Prefix sums of ``word``; entry ``p`` is the level of point ``p``."""
    out = [0]
    h = 0
    for c in word:
        h += 1 if c == "u" else -1
        out.append(h)
    return out


def validate(path: LatticePath | str, kind: PathKind) -> bool:
    p = as_path(path)
    if kind.name == "dyck":
        return p.is_dyck
    if kind.name == "free":
        return p.is_free_dyck
    return p.is_partial_dyck and p.final_level == kind.end_level


def _check_length(kind: PathKind, length: int) -> None:
    if length < 0:
        raise DyckError("length must be nonnegative")
    if kind.name == "partial":
        if length < kind.end_level or (length - kind.end_level) % 2:
            raise DyckError(
                f"no partial path of length {length} ends at level {kind.end_level}"
            )
    elif length % 2:
        raise DyckError(f"{kind.name} paths have even length, got {length}")


def enumerate_words(kind: PathKind, length: int) -> Iterator[str]:
    """Yield the text form of every path of ``kind`` and ``length``.

    Suffix lists are memoised per (remaining length, level), so the cost is
    linear in the output size.
    """
    _check_length(kind, length)
    target = kind.end_level
    floor = None if kind.name == "free" else 0
    memo: dict[tuple[int, int], list[str]] = {}

    def suffixes(rem: int, h: int) -> list[str]:
        key = (rem, h)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if rem == 0:
            out = [""] if h == target else []
        else:
            out = []
            if abs(h + 1 - target) <= rem - 1:
                out.extend("u" + w for w in suffixes(rem - 1, h + 1))
            if (floor is None or h - 1 >= floor) and abs(h - 1 - target) <= rem - 1:
                out.extend("d" + w for w in suffixes(rem - 1, h - 1))
        memo[key] = out
        return out

    yield from suffixes(length, 0)


def enumerate_paths(kind: PathKind, length: int) -> Iterator[LatticePath]:
    """Every path of the given kind and length, each once, ``u < d`` order."""
    for w in enumerate_words(kind, length):
        yield LatticePath(w)


def enumerate_primitive(length: int) -> Iterator[LatticePath]:
    if length < 2 or length % 2:
        raise DyckError(f"primitive paths have even positive length, got {length}")
    # u w d is primitive iff w is a Dyck path; the order is inherited from w
    for w in enumerate_words(DYCK, length - 2):
        yield LatticePath("u" + w + "d")


_SWAP = str.maketrans("ud", "du")


def reverse(path: LatticePath | str) -> LatticePath:
    """The path read right to left with u and d exchanged."""
    return LatticePath(as_path(path).steps[::-1].translate(_SWAP))


def concat(a: LatticePath | str, b: LatticePath | str) -> LatticePath:
    return LatticePath(as_path(a).steps + as_path(b).steps)


def lowest_valley_splits(path: LatticePath | str) -> tuple[int, int, int]:
    """Return ``(leftmost, rightmost, min_level)`` for the lowest points.

    ``leftmost`` and ``rightmost`` are the smallest and largest point
    indices at which ``min_level`` is attained.
    """
    p = as_path(path)
    if not p.steps:
        raise DyckError("lowest_valley_splits needs a nonempty path")
    lv = levels(p.steps)
    lo = p.min_level
    left = lv.index(lo)
    right = len(lv) - 1 - lv[::-1].index(lo)
    return left, right, lo


def split_primitive_components(path: LatticePath | str) -> list[LatticePath]:
    p = as_path(path)
    if not p.is_dyck:
        raise InvariantError("input is a Dyck path", p.steps)
    parts = []
    start = h = 0
    for i, c in enumerate(p.steps):
        h += 1 if c == "u" else -1
        if h == 0:
            parts.append(LatticePath(p.steps[start : i + 1]))
            start = i + 1
    return parts


def split_last_passage(word: str, m: int) -> list[str]:
    """Split a word ending at level ``h >= m`` as ``X0 u X1 u ... u Xm``.

    ``X1 .. Xm`` are Dyck words (each piece follows the last visit to the
    level just below it); ``X0`` ends at level ``h - m``.
    """
    lv = levels(word)
    h = lv[-1]
    pieces: list[str] = []
    end = len(word)
    for t in range(h - 1, h - m - 1, -1):
        p = end
        while p >= 0 and lv[p] != t:
            p -= 1
        if p < 0 or word[p] != "u":
            raise InvariantError("word decomposes into u-separated Dyck pieces", word)
        pieces.append(word[p + 1 : end])
        end = p
    pieces.append(word[:end])
    pieces.reverse()
    return pieces


def split_first_passage(word: str, m: int) -> list[str]:
    """Split a word as ``X0 d X1 d ... d Xm`` by first descents.

    ``X0 .. X(m-1)`` are Dyck words: each ends where the level first drops
    below its starting level.  ``Xm`` is whatever remains.
    """
    pieces: list[str] = []
    start = 0
    h = 0
    base = 0
    i = 0
    n = len(word)
    while len(pieces) < m:
        if i >= n:
            raise InvariantError("word has enough first descents", word)
        if word[i] == "d" and h == base:
            pieces.append(word[start:i])
            base -= 1
            start = i + 1
        h += 1 if word[i] == "u" else -1
        i += 1
    pieces.append(word[start:])
    return pieces


def is_dyck_word(word: str) -> bool:
    h = 0
    for c in word:
        h += 1 if c == "u" else -1
        if h < 0:
            return False
    return h == 0

