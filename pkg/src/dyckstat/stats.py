"""Peaks, valleys, their weights and symmetry classes.

A maximal mountain is a factor ``u^i d^j`` (``i, j >= 1``) that cannot be
extended on either side; it holds exactly one peak.  Maximal valleys
``d^i u^j`` are defined the same way.  The weight of either is
``min(i, j)`` and the class compares ``i`` with ``j``:

    i == j  symmetric
    i >  j  left asymmetric
    i <  j  right asymmetric
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Collection, Iterator, Union

from .errors import DyckError
from .paths import LatticePath, PathKind, as_path, enumerate_paths, enumerate_primitive

__all__ = [
    "Statistic",
    "SymmetryClass",
    "PeakRecord",
    "ValleyRecord",
    "MarkedPath",
    "scan_peaks",
    "scan_valleys",
    "scan",
    "count_stat",
    "marked_set",
    "marked_family",
    "FAMILIES",
]


class Statistic(str, enum.Enum):
    PEAK = "peak"
    VALLEY = "valley"


class SymmetryClass(str, enum.Enum):
    SYMMETRIC = "symmetric"
    LEFT = "left"
    RIGHT = "right"

    @classmethod
    def of(cls, first: int, second: int) -> SymmetryClass:
        if first == second:
            return cls.SYMMETRIC
        return cls.LEFT if first > second else cls.RIGHT


@dataclass(frozen=True)
class PeakRecord:
    """A maximal mountain ``u^ups d^downs`` starting at step ``start``."""

    start: int
    ups: int
    downs: int
    level: int

    @property
    def weight(self) -> int:
        return min(self.ups, self.downs)

    @property
    def cls(self) -> SymmetryClass:
        return SymmetryClass.of(self.ups, self.downs)

    @property
    def apex(self) -> int:
        """Point index of the peak."""
        return self.start + self.ups


@dataclass(frozen=True)
class ValleyRecord:
    """A maximal valley ``d^downs u^ups`` starting at step ``start``."""

    start: int
    downs: int
    ups: int
    level: int

    @property
    def weight(self) -> int:
        return min(self.downs, self.ups)

    @property
    def cls(self) -> SymmetryClass:
        return SymmetryClass.of(self.downs, self.ups)

    @property
    def nadir(self) -> int:
        """Point index of the valley."""
        return self.start + self.downs


Record = Union[PeakRecord, ValleyRecord]

_MOUNTAIN = re.compile(r"(u+)(d+)")
_VALLEY = re.compile(r"(d+)(u+)")


def _runs(word: str, pattern: re.Pattern) -> Iterator[tuple[int, int, int, int]]:
    # greedy non-overlapping matches are exactly the maximal run pairs:
    # each match starts right after a run of the opposite letter
    h = 0
    last = 0
    for m in pattern.finditer(word):
        s = m.start()
        seg = word[last:s]
        h += 2 * seg.count("u") - len(seg)
        a, b = len(m.group(1)), len(m.group(2))
        first = 1 if word[s] == "u" else -1
        yield s, a, b, h + first * a
        h += first * (a - b)
        last = m.end()


def scan_peaks(path: LatticePath | str) -> list[PeakRecord]:
    """One record per peak, left to right."""
    word = path if isinstance(path, str) else path.steps
    return [PeakRecord(s, a, b, lvl) for s, a, b, lvl in _runs(word, _MOUNTAIN)]


def scan_valleys(path: LatticePath | str) -> list[ValleyRecord]:
    """One record per valley, left to right."""
    word = path if isinstance(path, str) else path.steps
    return [ValleyRecord(s, a, b, lvl) for s, a, b, lvl in _runs(word, _VALLEY)]


def scan(path: LatticePath | str, statistic: Statistic) -> list:
    return scan_peaks(path) if Statistic(statistic) is Statistic.PEAK else scan_valleys(path)


ClassFilter = Union[SymmetryClass, Collection[SymmetryClass], None]


def _class_set(cls: ClassFilter) -> frozenset | None:
    if cls is None:
        return None
    if isinstance(cls, (SymmetryClass, str)):
        return frozenset([SymmetryClass(cls)])
    return frozenset(SymmetryClass(c) for c in cls)


def _matches(rec: Record, classes: frozenset | None, weight: int | None) -> bool:
    if classes is not None and rec.cls not in classes:
        return False
    return weight is None or rec.weight == weight


def count_stat(
    path: LatticePath | str,
    statistic: Statistic,
    cls: ClassFilter = None,
    weight: int | None = None,
) -> int:
    """Number of peaks (or valleys) with the given class and weight.

    ``None`` for ``cls`` or ``weight`` matches anything.
    """
    classes = _class_set(cls)
    return sum(1 for rec in scan(path, statistic) if _matches(rec, classes, weight))


@dataclass(frozen=True)
class MarkedPath:
    """A path with one distinguished peak or valley.

    ``index`` is a position in ``scan(path, statistic)``, so the mark
    survives any rewrite that keeps the record order.
    """

    path: LatticePath
    statistic: Statistic
    index: int

    def __post_init__(self):
        if not isinstance(self.path, LatticePath):
            object.__setattr__(self, "path", LatticePath(self.path))
        object.__setattr__(self, "statistic", Statistic(self.statistic))
        n = len(scan(self.path, self.statistic))
        if not 0 <= self.index < n:
            raise DyckError(
                f"mark index {self.index} out of range: path has {n} {self.statistic.value}s"
            )

    @property
    def record(self) -> Record:
        return scan(self.path, self.statistic)[self.index]

    def __str__(self) -> str:
        return f"{self.path.steps}[{self.statistic.value} {self.index}]"


def mark_at(path: LatticePath | str, statistic: Statistic, point: int) -> MarkedPath:
    """Mark the peak whose apex (or valley whose nadir) is at ``point``."""
    p = as_path(path)
    statistic = Statistic(statistic)
    for i, rec in enumerate(scan(p, statistic)):
        where = rec.apex if statistic is Statistic.PEAK else rec.nadir
        if where == point:
            return MarkedPath(p, statistic, i)
    raise DyckError(f"no {statistic.value} at point {point} of {p.steps!r}")


def _marks(words, statistic: Statistic, classes, weight) -> Iterator[MarkedPath]:
    for w in words:
        p = LatticePath(w) if isinstance(w, str) else w
        for i, rec in enumerate(scan(p.steps, statistic)):
            if _matches(rec, classes, weight):
                yield MarkedPath(p, statistic, i)


def marked_set(
    kind: PathKind,
    length: int,
    statistic: Statistic,
    cls: ClassFilter = None,
    weight: int | None = None,
) -> Iterator[MarkedPath]:
    """Every (path, mark) with the marked record matching ``cls`` and ``weight``."""
    return _marks(enumerate_paths(kind, length), Statistic(statistic), _class_set(cls), weight)


_S, _L = SymmetryClass.SYMMETRIC, SymmetryClass.LEFT

# name -> (statistic, classes, path length from (n, k)) over Dyck paths
FAMILIES = {
    "S": (Statistic.PEAK, (_S,), lambda n: 2 * (n + 1)),
    "L": (Statistic.PEAK, (_L,), lambda n: 2 * (n + 3)),
    "S_STAR": (Statistic.PEAK, (_S, _L), lambda n: 2 * (n + 1)),
    "V": (Statistic.VALLEY, (_S,), lambda n: 2 * (n + 2)),
    "V_L": (Statistic.VALLEY, (_L,), lambda n: 2 * (n + 3)),
    "V_STAR": (Statistic.VALLEY, (_S, _L), lambda n: 2 * (n + 2)),
}


def marked_family(name: str, n: int, k: int, r: int | None = None) -> Iterator[MarkedPath]:
    """The marked sets counted by the triangles, indexed as ``(n, k)``.

    ``S``, ``L``, ``S_STAR``, ``V``, ``V_L``, ``V_STAR`` live on Dyck paths;
    ``SP`` and ``LP`` are symmetric and left asymmetric peaks of weight
    ``k + 1`` on partial paths of length ``2n - r`` ending at level ``r``;
    ``PRIM_SYM`` and ``PRIM_LASYM`` mark primitive paths of length
    ``2(n + 4)`` and ``2(n + 3)``.
    """
    if n < 0 or k < 0:
        raise DyckError("n and k must be nonnegative")
    if name in FAMILIES:
        stat, classes, length = FAMILIES[name]
        return marked_set(PathKind("dyck"), length(n), stat, classes, k + 1)
    if name in ("SP", "LP"):
        if r is None or r < 0:
            raise DyckError(f"{name} needs r >= 0")
        cls = _S if name == "SP" else _L
        if n < r:
            return iter(())
        return marked_set(PathKind("partial", r), 2 * n - r, Statistic.PEAK, cls, k + 1)
    if name == "PRIM_SYM":
        words = enumerate_primitive(2 * (n + 4))
        return _marks(words, Statistic.PEAK, frozenset([_S]), k + 1)
    if name == "PRIM_LASYM":
        words = enumerate_primitive(2 * (n + 3))
        return _marks(words, Statistic.PEAK, frozenset([_L]), k + 1)
    raise DyckError(f"unknown marked family {name!r}")
