"""Brute-force counts by exhaustive enumeration.

Nothing in here touches the closed forms or the series code: every number
comes from listing paths and scanning them.  Work is measured in scan
steps (paths times path length) and capped, so the same call either
succeeds or fails regardless of machine speed.
"""
from __future__ import annotations

import os
from collections import Counter

from .errors import DomainError, ResourceError
from .paths import DYCK, FREE, PathKind, enumerate_words
from .stats import SymmetryClass, _runs, _MOUNTAIN, _VALLEY

__all__ = ["DEFAULT_CAP", "brute_count", "work_cap", "BRUTE_IDS"]

DEFAULT_CAP = 10**7

SYM, LEFT, RIGHT = SymmetryClass.SYMMETRIC, SymmetryClass.LEFT, SymmetryClass.RIGHT

BRUTE_IDS = (
    "CATALAN", "C_PARTIAL", "F", "S", "E", "L", "S_STAR", "V", "V_L", "V_STAR",
    "SP_TOTAL", "AP_TOTAL", "SV_TOTAL", "ALPHA", "BETA", "SP_PARTIAL",
    "LP_PARTIAL", "PRIM_SYM", "PRIM_LASYM",
)


def work_cap() -> int:
    env = os.environ.get("DYCKSTAT_BRUTE_CAP")
    return int(env) if env else DEFAULT_CAP


class _Tally:
    __slots__ = ("paths", "work", "hist")

    def __init__(self):
        self.paths = 0
        self.work = 0
        self.hist: Counter = Counter()


def _scan_into(tally: _Tally, word: str) -> None:
    hist = tally.hist
    for _, a, b, _ in _runs(word, _MOUNTAIN):
        hist["peak", SymmetryClass.of(a, b), min(a, b)] += 1
    for _, a, b, _ in _runs(word, _VALLEY):
        hist["valley", SymmetryClass.of(a, b), min(a, b)] += 1


def _words(source: str, length: int, end_level: int):
    if source == "dyck":
        return enumerate_words(DYCK, length)
    if source == "partial":
        return enumerate_words(PathKind("partial", end_level), length)
    if source == "free":
        return enumerate_words(FREE, length)
    if source == "u_dyck":
        return ("u" + w for w in enumerate_words(DYCK, length))
    if source == "primitive":
        return (w for w in enumerate_words(DYCK, length) if _is_primitive(w))
    raise ValueError(source)


def _is_primitive(w: str) -> bool:
    if not w:
        return False
    h = 0
    for c in w[:-1]:
        h += 1 if c == "u" else -1
        if h == 0:
            return False
    return True


_CACHE: dict[tuple, _Tally] = {}


def _get(source: str, length: int, end_level: int, cap: int, scan: bool = True) -> _Tally:
    """Tally of all ``source`` paths of ``length``; cached once complete."""
    if length < 0:
        return _Tally()
    key = (source, length, end_level, scan)
    t = _CACHE.get(key)
    if t is None:
        t = _Tally()
        for w in _words(source, length, end_level):
            t.paths += 1
            t.work += max(len(w), 1)
            if t.work > cap:
                break
            if scan:
                _scan_into(t, w)
        else:
            _CACHE[key] = t
    if t.work > cap:
        raise ResourceError(
            f"enumerating {source} paths of length {length} exceeds the cap of {cap} scan steps"
        )
    return t


def _marks(t: _Tally, stat: str, classes, weight: int | None = None) -> int:
    return sum(
        c for (s, cls, w), c in t.hist.items()
        if s == stat and cls in classes and (weight is None or w == weight)
    )


def _pairs(n: int, k: int, first_starts_ud: bool, cap: int) -> int:
    """Size of the pair set: (free path, partial path ending at k), total length 2n - k."""
    total = 0
    for m in range(k, n + 1):  # the partial path has length 2m - k
        second = _get("partial", 2 * m - k, k, cap, scan=False).paths
        flen = 2 * (n - m)
        if first_starts_ud:
            first = 1 if flen == 0 else _count_free_ud(flen, cap)
        else:
            first = _get("free", flen, 0, cap, scan=False).paths
        total += first * second
    return total


def _count_free_ud(length: int, cap: int) -> int:
    # free paths beginning with u d are u d followed by any free path
    return _get("free", length - 2, 0, cap, scan=False).paths


def brute_count(
    count_id: str,
    n: int,
    k: int | None = None,
    r: int | None = None,
    cap: int | None = None,
) -> int:
    """Count by enumerating the underlying paths and scanning them."""
    if count_id not in BRUTE_IDS:
        raise DomainError(f"unknown count id {count_id!r}")
    k = 0 if k is None else k
    r = 0 if r is None else r
    if n < 0 or k < 0 or r < 0:
        raise DomainError(f"negative index in {count_id}(n={n}, k={k}, r={r})")
    cap = work_cap() if cap is None else cap
    w = k + 1

    if count_id == "CATALAN":
        return _get("dyck", 2 * n, 0, cap, scan=False).paths
    if count_id == "C_PARTIAL":
        if k > n:
            return 0
        return _get("partial", 2 * n - k, k, cap, scan=False).paths
    if count_id in ("F", "E"):
        if k > n:
            return 0
        return _pairs(n, k, count_id == "F", cap)
    if count_id == "S":
        return _marks(_get("dyck", 2 * (n + 1), 0, cap), "peak", (SYM,), w)
    if count_id == "L":
        return _marks(_get("dyck", 2 * (n + 3), 0, cap), "peak", (LEFT,), w)
    if count_id == "S_STAR":
        return _marks(_get("dyck", 2 * (n + 1), 0, cap), "peak", (SYM, LEFT), w)
    if count_id == "V":
        return _marks(_get("dyck", 2 * (n + 2), 0, cap), "valley", (SYM,), w)
    if count_id == "V_L":
        return _marks(_get("dyck", 2 * (n + 3), 0, cap), "valley", (LEFT,), w)
    if count_id == "V_STAR":
        return _marks(_get("dyck", 2 * (n + 2), 0, cap), "valley", (SYM, LEFT), w)
    if count_id == "SP_TOTAL":
        return _marks(_get("dyck", 2 * (n + 1), 0, cap), "peak", (SYM,))
    if count_id == "AP_TOTAL":
        return _marks(_get("dyck", 2 * (n + 3), 0, cap), "peak", (LEFT, RIGHT))
    if count_id == "SV_TOTAL":
        return _marks(_get("dyck", 2 * (n + 2), 0, cap), "valley", (SYM,))
    if count_id == "ALPHA":
        return _marks(_get("u_dyck", 2 * n, 0, cap), "peak", (SYM,), w)
    if count_id == "BETA":
        return _marks(_get("u_dyck", 2 * n, 0, cap), "peak", (LEFT,), w)
    if count_id in ("SP_PARTIAL", "LP_PARTIAL"):
        if n < r:
            return 0
        t = _get("partial", 2 * n - r, r, cap)
        return _marks(t, "peak", (SYM,) if count_id == "SP_PARTIAL" else (LEFT,), w)
    if count_id == "PRIM_SYM":
        return _marks(_get("primitive", 2 * (n + 4), 0, cap), "peak", (SYM,), w)
    if count_id == "PRIM_LASYM":
        return _marks(_get("primitive", 2 * (n + 3), 0, cap), "peak", (LEFT,), w)
    raise AssertionError(count_id)
