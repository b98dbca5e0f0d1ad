"""Self-verification suites.

Each suite returns a :class:`Report` of named checks.  Failures are report
content, never exceptions: a check that blows up is recorded as failed with
the error text as its detail.
"""
from __future__ import annotations

import time
from functools import lru_cache
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import bijections as bj
from .formulas import count
from .oracle import brute_count
from .reference import SEQUENCE_COUNT_ID, SEQUENCES, TABLE_COUNT_ID, ERRATA, table_cells
from .series import (
    Series,
    catalan_series,
    central_binomial_series,
    named_gf,
    sqrt_one_minus_4x,
    triangle,
    x,
)
from .paths import DYCK
from .stats import FAMILIES, marked_set

__all__ = ["Check", "Report", "SUITES", "verify_suite", "bijection_cases", "check_bijection"]

SUITES = ("tables", "bijections", "series", "sequences", "all")

# largest domain checked exhaustively by the bijection suite
MAX_DOMAIN = 5000
SERIES_ORDER = 20


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    counterexample: str | None = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "counterexample": self.counterexample,
        }


@dataclass
class Report:
    suite: str
    max_n: int
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "max_n": self.max_n,
            "passed": self.passed,
            "total": len(self.checks),
            "failed": len(self.failures),
            "seconds": round(self.seconds, 3),
            "checks": [c.to_dict() for c in self.checks],
        }


def _guard(name: str, fn: Callable[[], Check]) -> Check:
    try:
        return fn()
    except Exception as exc:  # a crash is a failed check, not a crashed suite
        return Check(name, False, f"{type(exc).__name__}: {exc}")


# -- tables ------------------------------------------------------------------


def _table_checks(max_n: int) -> Iterable[Check]:
    for table_id, cid in TABLE_COUNT_ID.items():
        R = triangle(table_id, max(max_n, 1))
        for n, k, printed in table_cells(table_id, max_n):
            name = f"table {table_id} n={n} k={k}"

            def cell(n=n, k=k, printed=printed, name=name, table_id=table_id, cid=cid):
                # valley triangles hold column k at row n, same as the tables
                got = {
                    "formula": count(cid, n, k),
                    "series": R.entry(n, k),
                    "brute": brute_count(cid, n, k),
                }
                ok = all(v == printed for v in got.values())
                detail = f"printed {printed}, " + ", ".join(f"{m} {v}" for m, v in got.items())
                if not ok and ERRATA.get((table_id, n, k)) is not None:
                    detail += f"; known misprint, value should be {ERRATA[table_id, n, k]}"
                return Check(name, ok, detail)

            yield _guard(name, cell)


# -- sequences ---------------------------------------------------------------


def _sequence_checks(max_n: int) -> Iterable[Check]:
    for seq, values in SEQUENCES.items():
        cid = SEQUENCE_COUNT_ID[seq]
        top = min(max_n, len(values) - 1)
        name = f"sequence {seq} n<={top}"

        def run(cid=cid, values=values, top=top, name=name):
            gf = named_gf(cid, top)
            for n in range(top + 1):
                f, s = count(cid, n), gf[n]
                if not f == s == values[n]:
                    return Check(name, False, f"n={n}: listed {values[n]}, sum {f}, gf {s}")
            return Check(name, True, f"{top + 1} terms match by summation and by gf")

        yield _guard(name, run)


# -- series identities -------------------------------------------------------


def _series_identities(order: int) -> list[tuple[str, Callable[[], tuple[Series, Series]]]]:
    N = order
    C = catalan_series(N)
    P = central_binomial_series(N)
    Q = sqrt_one_minus_4x(N)
    X = x(N)
    one = Series.constant(1, N)

    def binom_series(r):
        from math import comb
        return Series.of([comb(2 * n + r, n) for n in range(N + 1)])

    out = [
        ("C = 1 + x C^2", lambda: (C, one + X * C * C)),
        ("sqrt(1-4x)^2 = 1 - 4x", lambda: (Q * Q, one - X * 4)),
        ("sqrt(1-4x) = 1 - 2x C", lambda: (Q, one - X * C * 2)),
        ("C = 1/(1 - xC)", lambda: (C * (one - X * C), one)),
    ]
    for r in (1, 2, 3, 4):
        out.append((f"sum binom(2n+{r}, n) x^n = C^{r}/sqrt(1-4x)",
                    lambda r=r: (binom_series(r), C ** r * P)))
    for k in range(4):
        out.append((f"S_{k} + x^2 L_{k} = x^{k}/sqrt(1-4x)",
                    lambda k=k: (named_gf("S", N, k) + named_gf("L", N, k).shift(2), P.shift(k))))
        out.append((f"V_{k} + x VL_{k} = x^{2*k} C^{2*k+2}/sqrt(1-4x)",
                    lambda k=k: (named_gf("V", N, k) + named_gf("V_L", N, k).shift(1),
                                 (C ** (2 * k + 2) * P).shift(2 * k))))
        out.append((f"beta_{k}: x^3 L_{k} + x^{k+1} C = x^{k+1}(1 + 1/sqrt(1-4x))/2",
                    lambda k=k: (named_gf("L", N, k).shift(3) + C.shift(k + 1),
                                 (one + P).shift(k + 1).exact_div(2))))
        out.append((f"beta_{k}: x^{k+1}(1 + 1/sqrt(1-4x))/2 = x^{k+1}/(C sqrt(1-4x))",
                    lambda k=k: ((one + P).shift(k + 1).exact_div(2), (P / C).shift(k + 1))))
        out.append((f"alpha_{k}: x S_{k} - x^{k+1} C = x^{k+2} C/sqrt(1-4x)",
                    lambda k=k: (named_gf("S", N, k).shift(1) - C.shift(k + 1), named_gf("ALPHA", N, k))))
    out.append(("sp gf = (1/2x)(1 + (5x-1)/((1-x)sqrt(1-4x)))",
                lambda: _sp_closed(N)))
    out.append(("ap gf = (1/x^3)((1-3x)/((1-x)sqrt(1-4x)) - 1)",
                lambda: _ap_closed(N)))
    return out


def _sp_closed(N: int) -> tuple[Series, Series]:
    # compare 2x * sp(x) with 1 + (5x - 1)/((1-x) sqrt(1-4x)), one order higher
    M = N + 1
    X, one = x(M), Series.constant(1, M)
    rhs = one + (X * 5 - 1) * central_binomial_series(M) * (one - X).inverse()
    lhs = named_gf("SP_TOTAL", M).shift(1) * 2
    return lhs, rhs


def _ap_closed(N: int) -> tuple[Series, Series]:
    M = N + 3
    X, one = x(M), Series.constant(1, M)
    rhs = (one - X * 3) * central_binomial_series(M) * (one - X).inverse() - 1
    return named_gf("AP_TOTAL", M).shift(3), rhs


def _series_checks(order: int) -> Iterable[Check]:
    for name, build in _series_identities(order):
        def run(name=name, build=build):
            lhs, rhs = build()
            for n in range(min(lhs.order, rhs.order) + 1):
                if lhs[n] != rhs[n]:
                    return Check(name, False, f"[x^{n}] {lhs[n]} != {rhs[n]}")
            return Check(name, True, f"equal to order {min(lhs.order, rhs.order)}")

        yield _guard(name, run)


# -- bijections --------------------------------------------------------------


@dataclass
class BijectionCase:
    name: str
    forward: Callable
    backward: Callable
    domain: Callable[[], Iterable]
    codomain: Callable[[], Iterable]
    size: int  # closed-form size of the domain, used only to skip huge cases
    image_ok: Callable[[object], bool] | None = None


def _show(obj) -> str:
    return str(obj)


def check_bijection(case: BijectionCase) -> Check:
    """Exhaustive round trip, image discipline and cardinality for one case."""
    domain = list(case.domain())
    codomain = set(case.codomain())
    images = set()
    for item in domain:
        try:
            img = case.forward(item)
        except Exception as exc:
            return Check(case.name, False, f"forward raised {exc}", _show(item))
        if case.image_ok is not None and not case.image_ok(img):
            return Check(case.name, False, "image violates codomain invariants", _show(item))
        if img not in codomain:
            return Check(case.name, False, f"image {img} not in codomain", _show(item))
        try:
            back = case.backward(img)
        except Exception as exc:
            return Check(case.name, False, f"inverse raised {exc}", _show(item))
        if back != item:
            return Check(case.name, False, f"inverse gave {back}", _show(item))
        images.add(img)
    for y in codomain:
        try:
            again = case.forward(case.backward(y))
        except Exception as exc:
            return Check(case.name, False, f"raised {exc}", _show(y))
        if again != y:
            return Check(case.name, False, f"forward(inverse) gave {again}", _show(y))
    if not len(images) == len(domain) == len(codomain):
        return Check(
            case.name, False,
            f"|image| {len(images)}, |domain| {len(domain)}, |codomain| {len(codomain)}",
        )
    return Check(case.name, True, f"{len(domain)} elements")


@lru_cache(maxsize=64)
def _family_by_weight(name: str, n: int) -> dict[int, tuple]:
    # one pass over the underlying paths serves every k at this n
    buckets: dict[int, list] = {}
    stat, classes, length = FAMILIES[name]
    for m in marked_set(DYCK, length(n), stat, classes):
        buckets.setdefault(m.record.weight - 1, []).append(m)
    return {k: tuple(v) for k, v in buckets.items()}


def _fam(name, n, k):
    return lambda: _family_by_weight(name, n).get(k, ())


def bijection_cases(max_n: int) -> list[BijectionCase]:
    """Every bijection at every index with ``n <= max_n`` and a small enough domain."""
    cases: list[BijectionCase] = []
    for n in range(max_n + 1):
        for k in range(n + 1):
            for j in (1, 2):
                for fam in ("S", "L", "S_STAR"):
                    cases.append(BijectionCase(
                        f"pyramid_lift j={j} {fam}({n},{k})",
                        lambda m, j=j: bj.pyramid_lift(m, j),
                        lambda m, j=j: bj.pyramid_drop(m, j),
                        _fam(fam, n, k), _fam(fam, n + j, k + j), count(fam, n, k),
                    ))
        cases.append(BijectionCase(
            f"phi S({n},0) -> F({n},0)", bj.phi, bj.phi_inv,
            _fam("S", n, 0), lambda n=n: bj.enumerate_F(n, 0), count("S", n, 0),
            lambda p, n=n: bj.in_F(p, n, 0),
        ))
        cases.append(BijectionCase(
            f"phi_prime L({n},0) -> E({n + 2},2)", bj.phi_prime, bj.phi_prime_inv,
            _fam("L", n, 0), lambda n=n: bj.enumerate_E(n + 2, 2), count("L", n, 0),
            lambda p, n=n: bj.in_E(p, n + 2, 2),
        ))
        cases.append(BijectionCase(
            f"eta L({n},0) -> V({n + 2},1)", bj.eta, bj.eta_inv,
            _fam("L", n, 0), _fam("V", n + 2, 1), count("L", n, 0),
        ))
        for k in range(n // 2 + 1):
            cases.append(BijectionCase(
                f"theta V({n},{k}) -> E({n},{2 * k})", bj.theta, bj.theta_inv,
                _fam("V", n, k), lambda n=n, k=k: bj.enumerate_E(n, 2 * k), count("V", n, k),
                lambda p, n=n, k=k: bj.in_E(p, n, 2 * k),
            ))
            cases.append(BijectionCase(
                f"rho VL({n},{k}) -> E({n + 2},{2 * k + 2})", bj.rho, bj.rho_inv,
                _fam("V_L", n, k), lambda n=n, k=k: bj.enumerate_E(n + 2, 2 * k + 2),
                count("V_L", n, k),
                lambda p, n=n, k=k: bj.in_E(p, n + 2, 2 * k + 2),
            ))
            cases.append(BijectionCase(
                f"valley_shift V({n + 2},{k + 1}) -> VL({n},{k})",
                bj.valley_shift, bj.valley_shift_inv,
                _fam("V", n + 2, k + 1), _fam("V_L", n, k), count("V", n + 2, k + 1),
            ))
    return [c for c in cases if c.size <= MAX_DOMAIN]


def _bijection_checks(max_n: int) -> Iterable[Check]:
    for case in bijection_cases(max_n):
        yield _guard(case.name, lambda case=case: check_bijection(case))


def verify_suite(suite: str, max_n: int) -> Report:
    """Run one suite (or ``all``) and collect a report."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    t0 = time.perf_counter()
    report = Report(suite, max_n)
    parts = SUITES[:-1] if suite == "all" else (suite,)
    for part in parts:
        if part == "tables":
            report.checks.extend(_table_checks(max_n))
        elif part == "sequences":
            report.checks.extend(_sequence_checks(max_n))
        elif part == "series":
            report.checks.extend(_series_checks(max(SERIES_ORDER, max_n)))
        elif part == "bijections":
            report.checks.extend(_bijection_checks(max_n))
    report.seconds = time.perf_counter() - t0
    return report
