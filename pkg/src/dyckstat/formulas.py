"""Closed-form counts on arbitrary-precision integers.

Index conventions (all sets live on Dyck paths unless stated):

==============  ==========================================================
``CATALAN``     Dyck paths of length ``2n``
``C_PARTIAL``   partial Dyck paths of length ``2n - k`` ending at level k
``F``, ``E``    pair sets (free path, partial path) of total length 2n - k
``S``           symmetric peaks of weight k+1 over Dyck paths of length 2(n+1)
``L``           left asymmetric peaks of weight k+1, length 2(n+3)
``S_STAR``      symmetric or left asymmetric peaks of weight k+1, 2(n+1)
``V``           symmetric valleys of weight k+1, length 2(n+2)
``V_L``         left asymmetric valleys of weight k+1, length 2(n+3)
``V_STAR``      symmetric or left asymmetric valleys of weight k+1, 2(n+2)
``SP_TOTAL``    all symmetric peaks, length 2(n+1)
``AP_TOTAL``    all asymmetric peaks, length 2(n+3)
``SV_TOTAL``    all symmetric valleys, length 2(n+2)
``ALPHA``       symmetric peaks of weight k+1 over ``u`` + (Dyck paths of length 2n)
``BETA``        left asymmetric peaks of weight k+1 over the same
``SP_PARTIAL``  symmetric peaks of weight k+1 over partial paths of
                length 2n - r ending at level r
``LP_PARTIAL``  left asymmetric peaks, same paths
``PRIM_SYM``    symmetric peaks of weight k+1 over primitive paths of length 2(n+4)
``PRIM_LASYM``  left asymmetric peaks of weight k+1, primitive, length 2(n+3)
==============  ==========================================================

Negative indices raise :class:`DomainError`; positions where the counted
set is empty return 0.
"""
from __future__ import annotations

import math

from .errors import DomainError

__all__ = ["COUNT_IDS", "binomial", "count", "catalan"]

# id -> argument names
COUNT_IDS = {
    "CATALAN": ("n",),
    "C_PARTIAL": ("n", "k"),
    "F": ("n", "k"),
    "S": ("n", "k"),
    "E": ("n", "k"),
    "L": ("n", "k"),
    "S_STAR": ("n", "k"),
    "V": ("n", "k"),
    "V_L": ("n", "k"),
    "V_STAR": ("n", "k"),
    "SP_TOTAL": ("n",),
    "AP_TOTAL": ("n",),
    "SV_TOTAL": ("n",),
    "ALPHA": ("n", "k"),
    "BETA": ("n", "k"),
    "SP_PARTIAL": ("n", "k", "r"),
    "LP_PARTIAL": ("n", "k", "r"),
    "PRIM_SYM": ("n", "k"),
    "PRIM_LASYM": ("n", "k"),
}


def binomial(a: int, b: int) -> int:
    """``a`` choose ``b`` for ``a >= 0``; zero when ``b`` is out of range."""
    if a < 0:
        raise DomainError(f"binomial with negative upper index {a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def _choose(a: int, b: int) -> int:
    # subset-counting convention: nothing to choose from a negative pool
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def _exact(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"{num}/{den} is not an integer")
    return q


def catalan(n: int) -> int:
    return _exact(binomial(2 * n, n), n + 1)


def _c_partial(n: int, k: int) -> int:
    if k > n:
        return 0
    return _exact((k + 1) * binomial(2 * n - k, n), n + 1)


def _f(n: int, k: int) -> int:
    if k > n:
        return 0
    b = binomial(2 * n - k, n)
    first = _exact((k + 1) * b, n + 1)
    second = 0 if n == k else _exact((n - k) * b, 2 * n - k)
    return first + second


def _s(n: int, k: int) -> int:
    if k > n:
        return 0
    if k == n:
        return 1
    m = n - k
    return _exact((m + 3) * catalan(m), 2)


def _sp_total(n: int) -> int:
    return 1 + sum(_exact((i + 3) * catalan(i), 2) for i in range(1, n + 1))


def _sp_partial(n: int, k: int, r: int) -> int:
    if n < k + r + 1:
        return 0
    m = n - k
    first = _exact((r + 1) * binomial(2 * m - r - 2, m - 1), m)
    # second binomial written with its lower index m - r - 2 so that the
    # boundary m = r + 1 vanishes instead of touching a negative upper index
    second = (r + 1) * _choose(2 * m - r - 3, m - r - 2)
    return first + second


def sp_partial_single_fraction(n: int, k: int, r: int) -> int | None:
    """The one-fraction form of ``SP_PARTIAL``; ``None`` where it is 0/0."""
    if n < k + r + 1:
        return 0
    m = n - k
    den = (2 * m - r - 2) * (2 * m - r - 1)
    if den == 0:
        return None
    num = (r + 1) * ((m + 1) * (m - r) - 2) * binomial(2 * m - r - 1, m)
    return _exact(num, den)


def _lp_partial(n: int, k: int, r: int) -> int:
    if n < k + r + 1:
        return 0
    m = n - k
    return r * _choose(2 * m - r - 3, m - r - 1) + _choose(2 * m - r - 3, m)


def _alpha(n: int, k: int) -> int:
    m = n - k - 2
    return binomial(2 * m + 1, m) if m >= 0 else 0


def _beta(n: int, k: int) -> int:
    m = n - k - 1
    if m < 0:
        return 0
    # x^(k+1) (1 + 1/sqrt(1-4x)) / 2
    return 1 if m == 0 else _exact(binomial(2 * m, m), 2)


def count(count_id: str, n: int, k: int | None = None, r: int | None = None) -> int:
    """Evaluate the closed form for ``count_id`` at the given indices."""
    if count_id not in COUNT_IDS:
        raise DomainError(f"unknown count id {count_id!r}")
    args = COUNT_IDS[count_id]
    if "k" in args and k is None:
        raise DomainError(f"{count_id} needs k")
    if "r" in args and r is None:
        raise DomainError(f"{count_id} needs r")
    k = 0 if k is None else k
    r = 0 if r is None else r
    if n < 0 or k < 0 or r < 0:
        raise DomainError(f"negative index in {count_id}(n={n}, k={k}, r={r})")

    if count_id == "CATALAN":
        return catalan(n)
    if count_id == "C_PARTIAL":
        return _c_partial(n, k)
    if count_id == "F":
        return _f(n, k)
    if count_id == "S":
        return _s(n, k)
    if count_id == "E":
        return binomial(2 * n - k + 1, n - k) if k <= n else 0
    if count_id == "L":
        return binomial(2 * n - 2 * k + 3, n - k) if k <= n else 0
    if count_id == "S_STAR":
        return binomial(2 * n - 2 * k, n - k) if k <= n else 0
    if count_id == "V":
        return binomial(2 * n - 2 * k + 1, n - 2 * k) if 2 * k <= n else 0
    if count_id == "V_L":
        return binomial(2 * n - 2 * k + 3, n - 2 * k) if 2 * k <= n else 0
    if count_id == "V_STAR":
        return binomial(2 * n - 2 * k + 2, n - 2 * k) if 2 * k <= n else 0
    if count_id == "SP_TOTAL":
        return _sp_total(n)
    if count_id == "AP_TOTAL":
        return 2 * sum(binomial(2 * i + 3, i) for i in range(n + 1))
    if count_id == "SV_TOTAL":
        return sum(binomial(2 * j + 1, n + 1) for j in range(n + 1))
    if count_id == "ALPHA":
        return _alpha(n, k)
    if count_id == "BETA":
        return _beta(n, k)
    if count_id == "SP_PARTIAL":
        return _sp_partial(n, k, r)
    if count_id == "LP_PARTIAL":
        return _lp_partial(n, k, r)
    if count_id == "PRIM_SYM":
        if k == n + 3:
            # the lone pyramid u^(n+4) d^(n+4) has weight n + 4 and is not
            # counted by x^k C^3 / sqrt(1 - 4x)
            raise DomainError("PRIM_SYM closed form does not cover k = n + 3")
        return binomial(2 * (n - k) + 3, n - k) if k <= n else 0
    if count_id == "PRIM_LASYM":
        return binomial(2 * (n - k) + 1, n - k) if k <= n else 0
    raise AssertionError(count_id)
