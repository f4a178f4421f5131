"""Explicit nested-sum formulas for the Heun coefficients.

Three variants share one shape. For a pair ``(l, j)`` with ``l <= j`` a weight
``t(l, j)`` is fixed; ``f_{m,n}`` sums ``prod_s t(l_s, j_s)`` over all index
chains ``0 <= l_1 <= j_1 < l_2 <= j_2 < ... < l_m <= j_m < n``:

``GENERAL_F``
    ``f_{m,n} = (-1)^m k^(2n-2m) sum prod  j!(g)_j(a)_l(b)_l / (l!(g)_l(a)_{j+1}(b)_{j+1})
    * k^(-2(j-l)) * (w - (1-k^2) delta l)``, ``f_{0,n} = k^(2n)``;
    ``c_n = (a)_n(b)_n / (n!(g)_n) * sum_m f_{m,n}``.
``DELTA0_G``
    the ``delta = 0`` case with ``w`` factored out: ``f_{m,n} = g_{m,n} w^m``.
``BETA_PLUS_ONE_F``
    ``delta = beta + 1``: ``f~_{m,n} = (-1)^m sum prod j!(a)_j(b)_l(g)_l / (l!(a)_l(b)_{j+1}(g)_{j+1})
    * k^(2(j-l))``, ``f~_{0,n} = 1``; ``c_n = (b)_n/n! * sum_m f~_{m,n} w^m``.

Each variant has a brute-force chain enumerator (the oracle) and a dynamic
program built on the column recursion

    f_{m,n} = s * f_{m,n-1} - R_n * sum_{l=m-1}^{n-1} r^(n-1-l) W_l f_{m-1,l}

whose inner sum is carried as a running accumulator, so a full table costs
O(N^2) scalar operations.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from . import kernels
from . import scalar as sc
from ._fallback import dp_column_sums, dp_sweep
from .errors import InvalidParameterError, NotApplicableError, ZeroDenominatorError
from .params import HeunValentParams, WConvention
from .recurrence import CoefficientTable, Method
from .scalar import Mode, Scalar

#: largest n accepted by the enumerators unless overridden
NAIVE_MAX_N = 12
#: largest order accepted in exact mode unless overridden
EXACT_MAX_ORDER = 64


class Variant(str, enum.Enum):
    GENERAL_F = "general-f"
    DELTA0_G = "delta0-g"
    BETA_PLUS_ONE_F = "beta-plus-one-f"


class Evaluation(str, enum.Enum):
    NAIVE = "naive-enumeration"
    DP = "dynamic-program"


@dataclass(frozen=True)
class NestedSumTable:
    """``f[m][n]`` for ``0 <= m <= n <= N``; entries with ``m > n`` are zero."""

    params: HeunValentParams
    order: int
    entries: Tuple[Tuple[Scalar, ...], ...]
    variant: Variant
    evaluation: Evaluation

    def get(self, m: int, n: int) -> Scalar:
        if not 0 <= n <= self.order:
            raise IndexError(f"n={n} outside 0..{self.order}")
        if m == -1 or m > n:
            return sc.zero(self.params.mode)
        if m < -1:
            raise IndexError(f"m={m} is below -1")
        return self.entries[m][n]

    def column(self, n: int) -> List[Scalar]:
        return [self.entries[m][n] for m in range(n + 1)]


# ---------------------------------------------------------------------------
# index chains


def index_chains(m: int, n: int) -> Iterator[Tuple[int, ...]]:
    """Yield every chain ``(l_1, j_1, ..., l_m, j_m)`` for horizon ``n`` in
    lexicographic order, using an odometer instead of recursion."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    if m == 0:
        yield ()
        return
    if m > n:
        return
    size = 2 * m
    t = _minimal_suffix([0] * size, 0, 0)
    yield tuple(t)
    while True:
        for i in range(size - 1, -1, -1):
            _minimal_suffix(t, i, t[i] + 1)
            if t[-1] < n:
                yield tuple(t)
                break
        else:
            return


def _minimal_suffix(t: List[int], i: int, value: int) -> List[int]:
    # even slots are l_s, odd slots j_s; only j_s < l_{s+1} is strict
    t[i] = value
    for p in range(i + 1, len(t)):
        t[p] = t[p - 1] + (1 if p % 2 == 0 else 0)
    return t


def count_chains(m: int, n: int) -> int:
    """Number of index chains; shifting ``l_s, j_s`` by ``s-1, s`` makes them
    ``2m`` distinct values below ``n + m``."""
    if m < 0 or n < 0:
        return 0
    return math.comb(n + m, 2 * m)


# ---------------------------------------------------------------------------
# preconditions and shared factors


def _require_nonzero(values: Sequence[Scalar], what: str) -> None:
    for i, x in enumerate(values):
        if x == 0:
            raise ZeroDenominatorError(f"{what} vanishes at index {i}")


def _check_general(v: HeunValentParams, n: int) -> None:
    if v.w_convention is not WConvention.GENERAL:
        raise NotApplicableError("the general nested sum expects the general w convention")
    _require_nonzero(sc.pochhammer_table(v.alpha, n)[1:], "(alpha)_{j+1}")
    _require_nonzero(sc.pochhammer_table(v.beta, n)[1:], "(beta)_{j+1}")


def _check_beta_plus_one(v: HeunValentParams, n: int) -> None:
    if v.w_convention is not WConvention.BETA_PLUS_ONE:
        raise NotApplicableError("the beta-plus-one nested sum expects delta = beta + 1 and its w convention")
    if sc.is_nonpositive_integer(v.beta):
        raise InvalidParameterError(f"beta={v.beta} is a non-positive integer; (beta)_n f~ is not evaluated at poles")
    _require_nonzero(sc.pochhammer_table(v.alpha, max(n - 1, 0)), "(alpha)_l")


def _check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise InvalidParameterError(f"{what} n={n} exceeds the cap {cap}; raise the cap explicitly")


def _exact_order_cap(v: HeunValentParams, N: int, max_order: int) -> None:
    if N < 0:
        raise InvalidParameterError(f"order N must be non-negative, got {N}")
    if v.mode is Mode.EXACT and N > max_order:
        raise InvalidParameterError(f"exact-mode order N={N} exceeds the cap {max_order}")


def _enumerate(m: int, n: int, weight) -> Scalar:
    weight = functools.lru_cache(maxsize=None)(weight)
    total = None
    for chain in index_chains(m, n):
        term = None
        for s in range(m):
            factor = weight(chain[2 * s], chain[2 * s + 1])
            term = factor if term is None else term * factor
        total = term if total is None else total + term
    return total


# ---------------------------------------------------------------------------
# general delta


def f_general_naive(v: HeunValentParams, m: int, n: int, max_n: int = NAIVE_MAX_N) -> Scalar:
    """``f_{m,n}`` by explicit enumeration of all index chains."""
    if not 0 <= m <= n:
        raise InvalidParameterError(f"need 0 <= m <= n, got m={m}, n={n}")
    _check_cap(n, max_n, "enumeration")
    _check_general(v, n)
    k2 = v.k * v.k
    if m == 0:
        return k2 ** n
    if m > n:
        return sc.zero(v.mode)
    P, fact = sc.pochhammer, math.factorial
    a, b, g, d, w = v.alpha, v.beta, v.gamma, v.delta, v.w

    def weight(l, j):
        num = fact(j) * P(g, j) * P(a, l) * P(b, l)
        den = fact(l) * P(g, l) * P(a, j + 1) * P(b, j + 1)
        return num / den / k2 ** (j - l) * (w - (1 - k2) * d * l)

    total = _enumerate(m, n, weight)
    if total is None:
        return sc.zero(v.mode)
    return (-1) ** m * k2 ** (n - m) * total


def _products(first: Scalar, step, count: int) -> List[Scalar]:
    """``[first, first*step(0), first*step(0)*step(1), ...]`` (``count`` entries).

    The factor tables are built from step ratios: in float mode the single
    Pochhammer symbols overflow long before their ratios do.
    """
    out = [first]
    for i in range(count - 1):
        out.append(out[-1] * step(i))
    return out[:count]


def _general_factors(v: HeunValentParams, N: int, with_w: bool):
    k2 = v.k * v.k
    a, b, g = v.alpha, v.beta, v.gamma
    one = sc.one(v.mode)
    # R_n = (n-1)!(g)_{n-1}/((a)_n(b)_n), n >= 1
    R = [0 * one] + (_products(one / (a * b), lambda i: (i + 1) * (g + i) / ((a + i + 1) * (b + i + 1)), N)
                     if N > 0 else [])
    W = _prefactors(v, N - 1) if N > 0 else []
    if with_w:
        W = [x * (v.w - (1 - k2) * v.delta * l) for l, x in enumerate(W)]
    base = _products(one, lambda i: k2, N + 1)
    return base, R, W, k2


def _run_dp(v, base, R, W, scale_self, scale_acc, N, backend):
    if v.mode is Mode.EXACT:
        rows = dp_sweep(base, R, W, scale_self, scale_acc, N)
        return tuple(tuple(r) for r in rows)
    arr = kernels.dp_sweep_float(base, R, W, scale_self, scale_acc, N, backend=backend)
    return tuple(tuple(complex(x) for x in row) for row in arr)


def _run_column_sums(v, base, R, W, scale_self, scale_acc, N, x, backend):
    if v.mode is Mode.EXACT:
        return dp_column_sums(base, R, W, scale_self, scale_acc, N, x)
    arr = kernels.dp_column_sums_float(base, R, W, scale_self, scale_acc, N, x, backend=backend)
    return [complex(c) for c in arr]


def f_general_dp(v: HeunValentParams, N: int, backend=None) -> NestedSumTable:
    """Whole table ``f[m][n]``, ``n <= N``, from the column recursion."""
    if N < 0:
        raise InvalidParameterError(f"order N must be non-negative, got {N}")
    _check_general(v, N)
    base, R, W, k2 = _general_factors(v, N, with_w=True)
    entries = _run_dp(v, base, R, W, k2, sc.one(v.mode), N, backend)
    return NestedSumTable(v, N, entries, Variant.GENERAL_F, Evaluation.DP)


def _prefactors(v: HeunValentParams, N: int) -> List[Scalar]:
    """``(a)_n(b)_n/(n!(g)_n)`` for ``n = 0..N``."""
    a, b, g = v.alpha, v.beta, v.gamma
    return _products(sc.one(v.mode), lambda i: (a + i) * (b + i) / ((i + 1) * (g + i)), N + 1)


def closed_form_coefficients(v: HeunValentParams, N: int, backend=None,
                             max_order: int = EXACT_MAX_ORDER) -> CoefficientTable:
    """``c_n = (a)_n(b)_n/(n!(g)_n) * sum_{m=0}^{n} f_{m,n}``."""
    _exact_order_cap(v, N, max_order)
    _check_general(v, N)
    base, R, W, k2 = _general_factors(v, N, with_w=True)
    one = sc.one(v.mode)
    sums = _run_column_sums(v, base, R, W, k2, one, N, one, backend)
    pref = _prefactors(v, N)
    return CoefficientTable(v, tuple(p * s for p, s in zip(pref, sums)), Method.CLOSED_FORM)


# ---------------------------------------------------------------------------
# delta = 0


def _check_delta0(v: HeunValentParams) -> None:
    if v.w_convention is not WConvention.GENERAL:
        raise NotApplicableError("the delta = 0 formula expects the general w convention")
    if v.delta != 0:
        raise NotApplicableError(f"the delta = 0 formula needs delta = 0, got {v.delta}")


def g_delta0_naive(v: HeunValentParams, m: int, n: int, max_n: int = NAIVE_MAX_N) -> Scalar:
    """``w``-free ``g_{m,n}`` (``m >= 1``) by enumeration; ``delta`` is ignored."""
    if not 1 <= m <= n:
        raise InvalidParameterError(f"need 1 <= m <= n, got m={m}, n={n}")
    _check_cap(n, max_n, "enumeration")
    _check_general(v, n)
    k2 = v.k * v.k
    P, fact = sc.pochhammer, math.factorial
    a, b, g = v.alpha, v.beta, v.gamma

    def weight(l, j):
        return (fact(j) * P(g, j) * P(a, l) * P(b, l)) / (fact(l) * P(g, l) * P(a, j + 1) * P(b, j + 1)) / k2 ** (j - l)

    return (-1) ** m * k2 ** (n - m) * _enumerate(m, n, weight)


def g_delta0_dp(v: HeunValentParams, N: int, backend=None) -> NestedSumTable:
    """Table of ``g_{m,n}``; row 0 holds ``k^(2n)`` so that ``c_n`` is a
    polynomial in ``w`` with these coefficients."""
    if N < 0:
        raise InvalidParameterError(f"order N must be non-negative, got {N}")
    _check_general(v, N)
    base, R, W, k2 = _general_factors(v, N, with_w=False)
    entries = _run_dp(v, base, R, W, k2, sc.one(v.mode), N, backend)
    return NestedSumTable(v, N, entries, Variant.DELTA0_G, Evaluation.DP)


def delta0_coefficients(v: HeunValentParams, N: int, backend=None,
                        max_order: int = EXACT_MAX_ORDER) -> CoefficientTable:
    """``c_n = (a)_n(b)_n/(n!(g)_n) * (k^(2n) + sum_{m>=1} g_{m,n} w^m)``."""
    _check_delta0(v)
    _exact_order_cap(v, N, max_order)
    _check_general(v, N)
    base, R, W, k2 = _general_factors(v, N, with_w=False)
    sums = _run_column_sums(v, base, R, W, k2, sc.one(v.mode), N, v.w, backend)
    values = [p * s for p, s in zip(_prefactors(v, N), sums)]
    return CoefficientTable(v, tuple(values), Method.CLOSED_FORM_DELTA0)


# ---------------------------------------------------------------------------
# delta = beta + 1


def _as_beta_plus_one(v: HeunValentParams) -> HeunValentParams:
    if v.w_convention is WConvention.BETA_PLUS_ONE:
        return v
    if v.delta != v.beta + 1:
        raise NotApplicableError(f"the beta-plus-one formula needs delta = beta + 1, got delta={v.delta}")
    k2 = v.k * v.k
    return v.with_(w=v.beta * v.gamma - v.q * k2, w_convention=WConvention.BETA_PLUS_ONE)


def f_beta_plus_one_naive(v: HeunValentParams, m: int, n: int, max_n: int = NAIVE_MAX_N) -> Scalar:
    """``f~_{m,n}`` by enumeration (``w``-free)."""
    if not 0 <= m <= n:
        raise InvalidParameterError(f"need 0 <= m <= n, got m={m}, n={n}")
    _check_cap(n, max_n, "enumeration")
    v = _as_beta_plus_one(v)
    _check_beta_plus_one(v, n)
    if m == 0:
        return sc.one(v.mode)
    k2 = v.k * v.k
    P, fact = sc.pochhammer, math.factorial
    a, b, g = v.alpha, v.beta, v.gamma

    def weight(l, j):
        num = fact(j) * P(a, j) * P(b, l) * P(g, l)
        den = fact(l) * P(a, l) * P(b, j + 1) * P(g, j + 1)
        return num / den * k2 ** (j - l)

    return (-1) ** m * _enumerate(m, n, weight)


def _beta_plus_one_factors(v: HeunValentParams, N: int):
    k2 = v.k * v.k
    one = sc.one(v.mode)
    a, b, g = v.alpha, v.beta, v.gamma
    # R~_n = (n-1)!(a)_{n-1}/((b)_n(g)_n), W~_l = (b)_l(g)_l/(l!(a)_l)
    R = [0 * one] + (_products(one / (b * g), lambda i: (i + 1) * (a + i) / ((b + i + 1) * (g + i + 1)), N)
                     if N > 0 else [])
    W = _products(one, lambda i: (b + i) * (g + i) / ((i + 1) * (a + i)), N)
    return [one] * (N + 1), R, W, k2


def f_beta_plus_one_dp(v: HeunValentParams, N: int, backend=None) -> NestedSumTable:
    """Table of ``f~_{m,n}`` from

        f~_{m,n} - f~_{m,n-1} = -(n-1)!(a)_{n-1}/((b)_n(g)_n)
                                 * sum_l (b)_l(g)_l/(l!(a)_l) k^(2(n-1-l)) f~_{m-1,l}
    """
    if N < 0:
        raise InvalidParameterError(f"order N must be non-negative, got {N}")
    v = _as_beta_plus_one(v)
    _check_beta_plus_one(v, N)
    base, R, W, k2 = _beta_plus_one_factors(v, N)
    entries = _run_dp(v, base, R, W, sc.one(v.mode), k2, N, backend)
    return NestedSumTable(v, N, entries, Variant.BETA_PLUS_ONE_F, Evaluation.DP)


def beta_plus_one_coefficients(v: HeunValentParams, N: int, backend=None,
                               max_order: int = EXACT_MAX_ORDER) -> CoefficientTable:
    """``c_n = (b)_n/n! * sum_m f~_{m,n} w^m`` for ``delta = beta + 1``.

    General-convention input with ``delta = beta + 1`` is re-expressed first.
    """
    v = _as_beta_plus_one(v)
    _exact_order_cap(v, N, max_order)
    _check_beta_plus_one(v, N)
    base, R, W, k2 = _beta_plus_one_factors(v, N)
    sums = _run_column_sums(v, base, R, W, sc.one(v.mode), k2, N, v.w, backend)
    pref = _products(sc.one(v.mode), lambda i: (v.beta + i) / (i + 1), N + 1)
    values = [p * s for p, s in zip(pref, sums)]
    return CoefficientTable(v, tuple(values), Method.CLOSED_FORM_BETA_PLUS_ONE)
