"""Truncated formal power series with exact integer coefficients.

Everything here stays in the integers.  Division is only ever by a series
whose constant term is a unit (``+1`` or ``-1``), computed as the
multiplicative inverse by the usual triangular recurrence.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .errors import DomainError, DyckError

__all__ = [
    "Series",
    "RiordanArray",
    "catalan_series",
    "central_binomial_series",
    "sqrt_one_minus_4x",
    "geometric",
    "named_gf",
    "riordan_entry",
    "triangle",
    "GF_IDS",
    "TRIANGLE_ARRAYS",
]


@dataclass(frozen=True)
class Series:
    """Coefficients ``c_0 .. c_N`` of a power series known up to ``x^N``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise DyckError("a series needs at least the constant term")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def of(cls, coeffs: Sequence[int], order: int | None = None) -> Series:
        cs = list(coeffs)
        if order is not None:
            cs = (cs + [0] * (order + 1))[: order + 1]
        return cls(tuple(cs))

    @classmethod
    def constant(cls, c: int, order: int) -> Series:
        return cls.of([c], order)

    @classmethod
    def monomial(cls, m: int, order: int, c: int = 1) -> Series:
        """``c x^m`` truncated at ``order``."""
        cs = [0] * (order + 1)
        if m <= order:
            cs[m] = c
        return cls(tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside 0..{self.order}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> Series:
        return Series(self.coeffs[: order + 1]) if order < self.order else self

    def _coerce(self, other) -> Series:
        if isinstance(other, Series):
            return other
        if isinstance(other, int):
            return Series.constant(other, self.order)
        return NotImplemented

    def __add__(self, other) -> Series:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order) + 1
        return Series(tuple(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])))

    __radd__ = __add__

    def __neg__(self) -> Series:
        return Series(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> Series:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Series:
        return (-self) + other

    def __mul__(self, other) -> Series:
        if isinstance(other, int):
            return Series(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return Series(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, m: int) -> Series:
        if m < 0:
            return self.inverse() ** (-m)
        result = Series.constant(1, self.order)
        base = self
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def shift(self, m: int) -> Series:
        """Multiply by ``x^m``, keeping the order."""
        if m < 0:
            raise DyckError("shift needs m >= 0")
        return Series(((0,) * m + self.coeffs)[: self.order + 1])

    def inverse(self) -> Series:
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise DyckError(f"series with constant term {c0} has no integer inverse")
        a = self.coeffs
        inv = [c0]
        for n in range(1, self.order + 1):
            s = sum(a[i] * inv[n - i] for i in range(1, n + 1))
            inv.append(-c0 * s)
        return Series(tuple(inv))

    def __truediv__(self, other) -> Series:
        if isinstance(other, int):
            if other not in (1, -1):
                raise DyckError("only division by units stays in the integers")
            return self * other
        return self * other.inverse()

    def exact_div(self, d: int) -> Series:
        """Divide every coefficient by ``d``, which must divide each exactly."""
        out = []
        for c in self.coeffs:
            q, rem = divmod(c, d)
            if rem:
                raise DyckError(f"coefficient {c} is not divisible by {d}")
            out.append(q)
        return Series(tuple(out))


def x(order: int) -> Series:
    return Series.monomial(1, order)


@lru_cache(maxsize=None)
def catalan_series(order: int) -> Series:
    """``C(x)``, solved from ``C = 1 + x C^2`` one coefficient at a time."""
    c = [1]
    for n in range(1, order + 1):
        c.append(sum(c[i] * c[n - 1 - i] for i in range(n)))
    return Series(tuple(c))


@lru_cache(maxsize=None)
def sqrt_one_minus_4x(order: int) -> Series:
    """``sqrt(1 - 4x) = 1 - 2x C(x)``."""
    return 1 - catalan_series(order).shift(1) * 2


@lru_cache(maxsize=None)
def central_binomial_series(order: int) -> Series:
    """``1 / sqrt(1 - 4x)``."""
    return sqrt_one_minus_4x(order).inverse()


def geometric(s: Series) -> Series:
    """``1 / (1 - s)`` for ``s`` with zero constant term."""
    if s[0] != 0:
        raise DyckError("geometric series needs a zero constant term")
    return (1 - s).inverse()


# id -> parameters it takes (beyond the truncation order)
GF_IDS = {
    "CATALAN": (),
    "C_PARTIAL": ("k",),
    "CENTRAL_BINOMIAL": (),
    "SP_TOTAL": (),
    "AP_TOTAL": (),
    "SV_TOTAL": (),
    "F": ("k",),
    "S": ("k",),
    "E": ("k",),
    "L": ("k",),
    "S_STAR": ("k",),
    "V": ("k",),
    "V_L": ("k",),
    "V_STAR": ("k",),
    "ALPHA": ("k",),
    "BETA": ("k",),
    "SP_PARTIAL": ("k", "r"),
    "LP_PARTIAL": ("k", "r"),
    "PRIM_SYM": ("k",),
    "PRIM_LASYM": ("k",),
}


@lru_cache(maxsize=4096)
def named_gf(gf_id: str, order: int, k: int = 0, r: int = 0) -> Series:
    """Generating function ``gf_id`` truncated at ``x^order``.

    Every series is assembled from ``C(x)`` and ``1/sqrt(1 - 4x)`` with
    integer arithmetic only.  ``k`` and ``r`` are ignored by ids that do
    not take them.
    """
    if gf_id not in GF_IDS:
        raise DyckError(f"unknown generating function {gf_id!r}")
    if order < 0 or k < 0 or r < 0:
        raise DomainError("order, k and r must be nonnegative")
    N = order
    C = catalan_series(N)
    P = central_binomial_series(N)
    one = Series.constant(1, N)
    X = x(N)

    if gf_id == "CATALAN":
        return C
    if gf_id == "CENTRAL_BINOMIAL":
        return P
    if gf_id == "C_PARTIAL":
        return (C ** (k + 1)).shift(k)
    if gf_id == "SP_TOTAL":
        return C * geometric(X) * (one + X * P)
    if gf_id == "AP_TOTAL":
        return (C ** 3) * P * geometric(X) * 2
    if gf_id == "SV_TOTAL":
        return C * P * geometric((X * C) ** 2)
    if gf_id == "F":
        return ((one + X * P) * C ** (k + 1)).shift(k)
    if gf_id == "S":
        return (C * (one + X * P)).shift(k)
    if gf_id == "E":
        return (C ** (k + 1) * P).shift(k)
    if gf_id == "L":
        return (C ** 3 * P).shift(k)
    if gf_id == "S_STAR":
        return P.shift(k)
    if gf_id == "V":
        return (C ** (2 * k + 1) * P).shift(2 * k)
    if gf_id == "V_L":
        return (C ** (2 * k + 3) * P).shift(2 * k)
    if gf_id == "V_STAR":
        return (C ** (2 * k + 2) * P).shift(2 * k)
    if gf_id == "ALPHA":
        return (C * P).shift(k + 2)
    if gf_id == "BETA":
        # 1/C = 1 - xC
        return ((one - X * C) * P).shift(k + 1)
    if gf_id == "SP_PARTIAL":
        return (C ** (r + 1) * (one + X * P * (r + 1))).shift(k + r + 1)
    if gf_id == "LP_PARTIAL":
        return (C ** (r - 1) * P * (one * r + (X * C * C) ** 2)).shift(k + r + 1)
    if gf_id == "PRIM_SYM":
        return (C ** 3 * P).shift(k)
    if gf_id == "PRIM_LASYM":
        return (C * P).shift(k)
    raise AssertionError(gf_id)


@dataclass
class RiordanArray:
    """Lower triangular array with entries ``[x^n] d(x) h(x)^k``."""

    d: Series
    h: Series
    _powers: list = field(default_factory=list, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.d[0] != 1:
            raise DyckError("a Riordan array needs d(0) = 1")
        if self.h[0] != 0:
            raise DyckError("a Riordan array needs h(0) = 0")
        if self.d.order != self.h.order:
            n = min(self.d.order, self.h.order)
            self.d, self.h = self.d.truncate(n), self.h.truncate(n)
        self._powers = [Series.constant(1, self.order)]

    @property
    def order(self) -> int:
        return self.d.order

    @property
    def proper(self) -> bool:
        return self.order >= 1 and self.h[1] != 0

    def column(self, k: int) -> Series:
        while len(self._powers) <= k:
            self._powers.append(self._powers[-1] * self.h)
        return self.d * self._powers[k]

    def entry(self, n: int, k: int) -> int:
        if not (0 <= n <= self.order and 0 <= k <= self.order):
            raise DomainError(f"entry ({n}, {k}) outside 0..{self.order}")
        return self.column(k)[n]

    def row_sums(self) -> Series:
        """``d / (1 - h)``, the generating function of the row sums."""
        return self.d * geometric(self.h)

    def rows(self, count: int) -> list[list[int]]:
        return [[self.entry(n, k) for k in range(n + 1)] for n in range(count)]


def riordan_entry(R: RiordanArray, n: int, k: int) -> int:
    return R.entry(n, k)


def _triangle_pair(table_id: str, N: int) -> tuple[Series, Series]:
    C = catalan_series(N)
    P = central_binomial_series(N)
    X = x(N)
    one = Series.constant(1, N)
    xC = X * C
    pairs = {
        "1.1": lambda: (C, xC),
        "2.1": lambda: (C * (one + X * P), xC),
        "2.2": lambda: (C * (one + X * P), X),
        "2.3": lambda: (C * P, xC),
        "2.4": lambda: (C ** 3 * P, X),
        "2.5": lambda: (P, X),
        "3.1": lambda: (C * P, xC * xC),
        "3.2": lambda: (C ** 3 * P, xC * xC),
        "3.3": lambda: (C * C * P, xC * xC),
    }
    if table_id not in pairs:
        raise DyckError(f"unknown table id {table_id!r}")
    return pairs[table_id]()


TRIANGLE_ARRAYS = ("1.1", "2.1", "2.2", "2.3", "2.4", "2.5", "3.1", "3.2", "3.3")


@lru_cache(maxsize=64)
def triangle(table_id: str, order: int) -> RiordanArray:
    """The Riordan array behind a published triangle."""
    d, h = _triangle_pair(table_id, order)
    return RiordanArray(d, h)
