"""Constructive bijections between marked Dyck paths and path pairs.

Set names, all indexed by ``(n, k)``:

* ``S(n, k)``: Dyck paths of length ``2(n+1)`` with a marked symmetric peak
  of weight ``k+1``; ``L(n, k)`` the same for left asymmetric peaks on
  length ``2(n+3)``.
* ``V(n, k)``: length ``2(n+2)``, marked symmetric valley of weight
  ``k+1``; ``VL(n, k)``: length ``2(n+3)``, marked left asymmetric valley.
* ``F(n, k)``: pairs ``(F, D)`` with ``F`` empty or a free Dyck path
  starting ``ud``, ``D`` a partial Dyck path ending at level ``k`` and
  ``|F| + |D| = 2n - k``.  ``E(n, k)`` drops the ``ud`` condition on ``F``.

The maps:

==================  ========================================
``pyramid_lift``    S(n,k) -> S(n+j,k+j), L(n,k) -> L(n+j,k+j)
``phi``             S(n,0) -> F(n,0)
``phi_prime``       L(n,0) -> E(n+2,2)
``theta``           V(n,k) -> E(n,2k)
``rho``             VL(n,k) -> E(n+2,2k+2)
``eta``             L(n,0) -> V(n+2,1)
``valley_shift``    V(n+2,k+1) -> VL(n,k)
==================  ========================================

Each has an inverse.  Marks on rebuilt paths are placed at the point the
construction produced, never by searching for a matching shape.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import DyckError, InvariantError
from .paths import (
    DYCK,
    FREE,
    LatticePath,
    PathKind,
    as_path,
    enumerate_words,
    levels,
    lowest_valley_splits,
    split_first_passage,
    split_last_passage,
    split_primitive_components,
)
from .stats import MarkedPath, Statistic, SymmetryClass, mark_at

__all__ = [
    "PathPair",
    "in_F",
    "in_E",
    "enumerate_F",
    "enumerate_E",
    "pyramid_lift",
    "pyramid_drop",
    "phi",
    "phi_inv",
    "phi_prime",
    "phi_prime_inv",
    "theta",
    "theta_inv",
    "rho",
    "rho_inv",
    "eta",
    "eta_inv",
    "valley_shift",
    "valley_shift_inv",
]

PEAK, VALLEY = Statistic.PEAK, Statistic.VALLEY
SYM, LEFT = SymmetryClass.SYMMETRIC, SymmetryClass.LEFT


@dataclass(frozen=True)
class PathPair:
    first: LatticePath
    second: LatticePath

    def __post_init__(self):
        object.__setattr__(self, "first", as_path(self.first))
        object.__setattr__(self, "second", as_path(self.second))

    @property
    def length(self) -> int:
        return len(self.first) + len(self.second)

    def __iter__(self):
        return iter((self.first, self.second))

    def __str__(self) -> str:
        return f"({self.first.steps or 'ε'}, {self.second.steps or 'ε'})"


def _pair_violation(pair: PathPair, n: int, k: int, needs_ud: bool) -> str | None:
    f, d = pair
    if not f.is_free_dyck:
        return "first component is a free Dyck path"
    if needs_ud and f.steps and not f.steps.startswith("ud"):
        return "first component is empty or starts with ud"
    if not (d.is_partial_dyck and d.final_level == k):
        return f"second component is a partial Dyck path ending at level {k}"
    if pair.length != 2 * n - k:
        return f"component lengths sum to 2n - k = {2 * n - k}"
    return None


def in_F(pair: PathPair, n: int, k: int) -> bool:
    return _pair_violation(pair, n, k, True) is None


def in_E(pair: PathPair, n: int, k: int) -> bool:
    return _pair_violation(pair, n, k, False) is None


def _pair_index(pair: PathPair, needs_ud: bool) -> tuple[int, int]:
    """Recover ``(n, k)`` from a pair, raising if it is not a valid pair."""
    k = pair.second.final_level
    total = pair.length + k
    if k < 0 or total % 2:
        raise InvariantError("second component is a partial Dyck path", pair.second.steps)
    n = total // 2
    bad = _pair_violation(pair, n, k, needs_ud)
    if bad:
        raise InvariantError(bad, str(pair))
    return n, k


def _enumerate_pairs(n: int, k: int, needs_ud: bool) -> Iterator[PathPair]:
    for m in range(k, n + 1):
        flen = 2 * (n - m)
        if needs_ud:
            firsts = [""] if flen == 0 else ["ud" + w for w in enumerate_words(FREE, flen - 2)]
        else:
            firsts = list(enumerate_words(FREE, flen))
        seconds = list(enumerate_words(PathKind("partial", k), 2 * m - k))
        for f in firsts:
            for d in seconds:
                yield PathPair(LatticePath(f), LatticePath(d))


def enumerate_F(n: int, k: int) -> Iterator[PathPair]:
    """Every pair in ``F(n, k)``."""
    return _enumerate_pairs(n, k, True)


def enumerate_E(n: int, k: int) -> Iterator[PathPair]:
    """Every pair in ``E(n, k)``."""
    return _enumerate_pairs(n, k, False)


def _require(m: MarkedPath, statistic: Statistic, classes, weight: int | None, what: str):
    if m.statistic is not statistic:
        raise InvariantError(f"mark is a {statistic.value}", str(m))
    if not m.path.is_dyck:
        raise InvariantError("marked path is a Dyck path", m.path.steps)
    rec = m.record
    if rec.cls not in classes or (weight is not None and rec.weight != weight):
        raise InvariantError(f"mark is {what}", str(m))
    return rec


# -- pyramid insertion -----------------------------------------------------


def pyramid_lift(m: MarkedPath, j: int) -> MarkedPath:
    """Insert ``u^j d^j`` at the apex of the marked peak."""
    if j <= 0:
        raise DyckError("pyramid height j must be positive")
    if m.statistic is not PEAK:
        raise InvariantError("mark is a peak", str(m))
    rec = m.record
    if rec.cls not in (SYM, LEFT):
        raise InvariantError("marked peak is symmetric or left asymmetric", str(m))
    w = m.path.steps
    a = rec.apex
    return MarkedPath(LatticePath(w[:a] + "u" * j + "d" * j + w[a:]), PEAK, m.index)


def pyramid_drop(m: MarkedPath, j: int) -> MarkedPath:
    """Remove ``u^j d^j`` from the apex of the marked peak."""
    if j <= 0:
        raise DyckError("pyramid height j must be positive")
    if m.statistic is not PEAK:
        raise InvariantError("mark is a peak", str(m))
    rec = m.record
    if rec.cls not in (SYM, LEFT):
        raise InvariantError("marked peak is symmetric or left asymmetric", str(m))
    if rec.weight <= j:
        raise InvariantError(f"marked peak has weight > {j}", str(m))
    w = m.path.steps
    a = rec.apex
    return MarkedPath(LatticePath(w[: a - j] + w[a + j :]), PEAK, m.index)


# -- phi: S(n,0) <-> F(n,0) ------------------------------------------------


def phi(m: MarkedPath) -> PathPair:
    rec = _require(m, PEAK, (SYM,), 1, "a symmetric peak of weight 1")
    w = m.path.steps
    a = rec.apex  # the marked ud occupies steps a-1, a
    if rec.level == 1:
        before, after = w[: a - 1], w[a + 1 :]
        if not before:
            return PathPair(LatticePath(""), LatticePath(after))
        # before = u P2 d
        return PathPair(LatticePath("ud" + before[1:-1]), LatticePath(after))
    # the primitive component holding the peak is P1 d (ud) u P2
    pos = 0
    for comp in split_primitive_components(w):
        if pos < a < pos + len(comp):
            break
        pos += len(comp)
    r = comp.steps
    rel = a - pos
    q2, q1 = w[:pos], w[pos + len(r) :]
    p1, p2 = r[: rel - 2], r[rel + 2 :]
    return PathPair(LatticePath("ud" + p2 + q2 + p1), LatticePath(q1))


def phi_inv(pair: PathPair) -> MarkedPath:
    n, k = _pair_index(pair, needs_ud=True)
    if k != 0:
        raise InvariantError("second component is a Dyck path", pair.second.steps)
    f, q1 = pair.first.steps, pair.second.steps
    if not f:
        return mark_at("ud" + q1, PEAK, 1)
    p2 = f[2:]
    lo = pair.first.min_level
    if lo >= -1:
        q = "u" + p2 + "d" + "ud" + q1
        return mark_at(q, PEAK, len(p2) + 3)
    # p2 = P3 Q2 P4, Q2 the Dyck stretch between the leftmost and rightmost lowest points
    left, right, _ = lowest_valley_splits(p2)
    p3, q2, p4 = p2[:left], p2[left:right], p2[right:]
    head = q2 + p4 + "d"
    return mark_at(head + "ud" + "u" + p3 + q1, PEAK, len(head) + 1)


# -- phi': L(n,0) <-> E(n+2,2) ---------------------------------------------


def phi_prime(m: MarkedPath) -> PathPair:
    rec = _require(m, PEAK, (LEFT,), 1, "a left asymmetric peak of weight 1")
    w = m.path.steps
    s = rec.start
    j = rec.ups - 2
    i = rec.level - rec.ups
    q1 = w[:s]
    rest = w[s + rec.ups + 1 :]  # after u^(j+2) d
    if not rest or rest[0] != "u":
        raise InvariantError("marked mountain is followed by an up step", str(m))
    if i == 0 and j == 0:
        q3, q4, q5 = split_first_passage(rest[1:], 2)
        q2 = ""
    else:
        q3, q4, q5, q2 = split_first_passage(rest[1:], 3)
    second = LatticePath(q5 + "u" + q4 + "u" + q3)
    if i == 0 and j == 0:
        return PathPair(LatticePath(q1), second)
    return PathPair(LatticePath(q2 + "d" + q1 + "u" * j), second)


def phi_prime_inv(pair: PathPair) -> MarkedPath:
    n, k = _pair_index(pair, needs_ud=False)
    if k != 2:
        raise InvariantError("second component ends at level 2", pair.second.steps)
    p5, p4, p3 = split_last_passage(pair.second.steps, 2)
    tail = "u" + p3 + "d" + p4 + "d" + p5
    f = pair.first
    if f.is_dyck:
        return mark_at(f.steps + "uud" + tail, PEAK, len(f) + 2)
    left, _, _ = lowest_valley_splits(f)
    word = f.steps
    q2 = word[: left - 1]
    after = word[left:]
    j = len(after) - len(after.rstrip("u"))
    q1 = after[: len(after) - j]
    q = q1 + "u" * (j + 2) + "d" + tail + "d" + q2
    return mark_at(q, PEAK, len(q1) + j + 2)


# -- theta: V(n,k) <-> E(n,2k) and rho: VL(n,k) <-> E(n+2,2k+2) --------------


def _valley_split(m: MarkedPath, pieces_before: int, pieces_after: int):
    """Cut a path around its marked valley into the u/d separated Dyck pieces.

    Returns ``(Q0, before, after, Q0')`` with ``before`` the Dyck pieces in
    front of the last ``pieces_before`` down steps of the valley and
    ``after`` the pieces behind its up run.
    """
    rec = m.record
    w = m.path.steps
    cut = rec.nadir - pieces_before  # start of the last pieces_before down steps
    head = split_last_passage(w[:cut], pieces_before)
    q0, before = head[0], head[1:]
    tail_start = rec.nadir + rec.ups
    tail = w[tail_start:]
    if not tail or tail[0] != "d":
        raise InvariantError("marked valley is followed by a down step", str(m))
    if rec.level == 0:
        after = split_first_passage(tail[1:], pieces_after - 1)
        q0p = None
    else:
        parts = split_first_passage(tail[1:], pieces_after)
        after, q0p = parts[:-1], parts[-1]
    return q0, before, after, q0p


def _valley_image(q0: str, before, after, q0p) -> PathPair:
    second = LatticePath("u".join(list(before) + list(after)))
    if q0p is None:
        return PathPair(LatticePath(q0), second)
    return PathPair(LatticePath(q0p + "d" + q0), second)


def _valley_rebuild(first: LatticePath, pieces: list[str], n_before: int, downs: int, ups: int):
    """Inverse of the valley cut: returns the word and the nadir point."""
    before, after = pieces[:n_before], pieces[n_before:]
    if first.is_dyck:
        q0, q0p = first.steps, None
    else:
        left, _, _ = lowest_valley_splits(first)
        q0p, q0 = first.steps[: left - 1], first.steps[left:]
    head = q0 + "".join("u" + p for p in before)
    body = "d" * downs + "u" * ups + "".join("d" + p for p in after)
    nadir = len(head) + downs
    word = head + body + ("" if q0p is None else "d" + q0p)
    return word, nadir


def theta(m: MarkedPath) -> PathPair:
    rec = _require(m, VALLEY, (SYM,), None, "a symmetric valley")
    k = rec.weight - 1
    # symmetric: the whole d-run is d^(k+1), preceded by the u closing Q_k
    q0, before, after, q0p = _valley_split(m, k + 1, k + 1)
    # before = Q1..Qk followed by the empty piece between the last u and the valley
    if before[-1]:
        raise InvariantError("marked valley is preceded by an up step", str(m))
    return _valley_image(q0, before[:-1], after, q0p)


def theta_inv(pair: PathPair) -> MarkedPath:
    n, end = _pair_index(pair, needs_ud=False)
    if end % 2:
        raise InvariantError("second component ends at an even level", pair.second.steps)
    k = end // 2
    pieces = split_last_passage(pair.second.steps, 2 * k)
    # Q0 u P1 .. u Pk u d^(k+1) u^(k+1) d P(k+1) .. d P(2k+1)
    word, nadir = _valley_rebuild(pair.first, pieces[:k] + [""] + pieces[k:], k + 1, k + 1, k + 1)
    return mark_at(word, VALLEY, nadir)


def rho(m: MarkedPath) -> PathPair:
    rec = _require(m, VALLEY, (LEFT,), None, "a left asymmetric valley")
    k = rec.weight - 1
    q0, before, after, q0p = _valley_split(m, k + 2, k + 1)
    return _valley_image(q0, before, after, q0p)


def rho_inv(pair: PathPair) -> MarkedPath:
    n, end = _pair_index(pair, needs_ud=False)
    if end % 2 or end < 2:
        raise InvariantError("second component ends at an even level >= 2", pair.second.steps)
    k = end // 2 - 1
    pieces = split_last_passage(pair.second.steps, 2 * k + 2)
    word, nadir = _valley_rebuild(pair.first, pieces, k + 2, k + 2, k + 1)
    return mark_at(word, VALLEY, nadir)


# -- eta: L(n,0) <-> V(n+2,1) ----------------------------------------------


def eta(m: MarkedPath) -> MarkedPath:
    rec = _require(m, PEAK, (LEFT,), 1, "a left asymmetric peak of weight 1")
    w = m.path.steps
    s = rec.start
    j = rec.ups - 2
    q1 = w[:s]
    rest = w[s + rec.ups + 1 :]
    if not rest or rest[0] != "u":
        raise InvariantError("marked mountain is followed by an up step", str(m))
    q2, q3 = split_first_passage(rest[1:], 1)
    head = q1 + "u" * (j + 1) + q2 + "u"
    return mark_at(head + "dduu" + "d" + q3, VALLEY, len(head) + 2)


def eta_inv(m: MarkedPath) -> MarkedPath:
    rec = _require(m, VALLEY, (SYM,), 2, "a symmetric valley of weight 2")
    w = m.path.steps
    s = rec.start
    # w = Q1 u^(j+1) Q2 u dduu d Q3
    prefix = w[: s - 1]
    lv = levels(prefix)
    h = lv[-1]
    p = len(prefix)
    while lv[p] != h - 1:
        p -= 1
    q2 = prefix[p + 1 :]
    run_end = p + 1
    run_start = run_end
    while run_start > 0 and prefix[run_start - 1] == "u":
        run_start -= 1
    j = run_end - run_start - 1
    q1 = prefix[:run_start]
    q3 = w[s + 5 :]
    q = q1 + "u" * (j + 2) + "d" + "u" + q2 + "d" + q3
    return mark_at(q, PEAK, len(q1) + j + 2)


# -- valley_shift: V(n+2,k+1) <-> VL(n,k) ----------------------------------


def valley_shift(m: MarkedPath) -> MarkedPath:
    rec = _require(m, VALLEY, (SYM,), None, "a symmetric valley")
    if rec.weight < 2:
        raise InvariantError("marked symmetric valley has weight >= 2", str(m))
    return rho_inv(theta(m))


def valley_shift_inv(m: MarkedPath) -> MarkedPath:
    return theta_inv(rho(m))
