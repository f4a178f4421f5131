"""Jacobi matrices from birth-death rates, their Green functions, and the
diagonal-perturbation identities that connect them to the Heun coefficients.

Everything here runs in float64: the subdiagonal ``a_n = sqrt(lambda_n mu_{n+1})``
leaves the rationals.

Truncation. Lower-triangular products commute with truncation to a leading
block, so ``G``, ``(I + G D)^{-1} G`` and the kernel vectors are exact on any
block. ``J`` is tridiagonal, so ``J G`` on an ``N x N`` block needs row ``N`` of
``G``; kernels therefore carry ``margin`` extra rows and residual checks look
at the leading block only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import scalar as sc
from .errors import InvalidParameterError, NotApplicableError, ZeroDenominatorError
from .params import HeunValentParams, WConvention
from .recurrence import CoefficientTable, Method

DEFAULT_MARGIN = 2


@dataclass(frozen=True)
class BirthDeathRates:
    """``lambda_n = k^2 (n+alpha)(n+beta)``, ``mu_n = n (n+gamma-1)``,
    ``gamma_n = (1-k^2) delta n``."""

    k: float
    alpha: float
    beta: float
    gamma: float
    delta: float = 0.0

    def birth(self, n):
        return self.k ** 2 * (n + self.alpha) * (n + self.beta)

    def death(self, n):
        return n * (n + self.gamma - 1)

    def shift(self, n):
        return (1 - self.k ** 2) * self.delta * n

    def unperturbed(self) -> "BirthDeathRates":
        return BirthDeathRates(self.k, self.alpha, self.beta, self.gamma, 0.0)


def _real_float(x, name: str) -> float:
    if not sc.is_real(x):
        raise NotApplicableError(f"{name} must be real for the Jacobi-matrix path, got {x}")
    return sc.real_part(x)


def rates_from_params(v: HeunValentParams) -> BirthDeathRates:
    if v.w_convention is not WConvention.GENERAL:
        v = v.as_general()
    k = _real_float(v.k, "k")
    alpha, beta, gamma = (_real_float(getattr(v, n), n) for n in ("alpha", "beta", "gamma"))
    delta = _real_float(v.delta, "delta")
    if min(alpha, beta, gamma) <= 0:
        raise NotApplicableError(f"birth-death rates need alpha, beta, gamma > 0, got {alpha}, {beta}, {gamma}")
    if not 0 < k < 1:
        raise NotApplicableError(f"k must lie in (0, 1), got {k}")
    return BirthDeathRates(k, alpha, beta, gamma, delta)


@dataclass(frozen=True)
class JacobiMatrixTrunc:
    """Leading ``N x N`` block: diagonal ``b[0..N-1]``, subdiagonal ``a[0..N-2]``.

    ``a`` may hold one extra entry ``a[N-1]`` (the coupling to the first
    discarded row) which polynomial recurrences need.
    """

    b: np.ndarray
    a: np.ndarray

    def __post_init__(self):
        if self.a.shape[0] < self.b.shape[0] - 1:
            raise ValueError("subdiagonal too short for the diagonal")
        if np.any(self.a <= 0):
            raise InvalidParameterError("Jacobi subdiagonal entries must be positive")

    @property
    def order(self) -> int:
        return self.b.shape[0]

    def dense(self) -> np.ndarray:
        N = self.order
        off = self.a[: N - 1]
        return np.diag(self.b) + np.diag(off, 1) + np.diag(off, -1)

    def perturbed(self, diag: np.ndarray) -> "JacobiMatrixTrunc":
        return JacobiMatrixTrunc(self.b + diag[: self.order], self.a)


def jacobi_from_rates(r: BirthDeathRates, N: int) -> JacobiMatrixTrunc:
    """``a_n = sqrt(lambda_n mu_{n+1})``, ``b_n = lambda_n + mu_n + gamma_n``."""
    n = np.arange(N + 1, dtype=float)
    lam, mu = r.birth(n), r.death(n)
    a = np.sqrt(lam[:N] * mu[1:N + 1])
    b = lam[:N] + mu[:N] + r.shift(n[:N])
    return JacobiMatrixTrunc(b, a)


def heun_diagonal_shift(r: BirthDeathRates, size: int) -> np.ndarray:
    """``D = (1-k^2) delta diag(0, 1, 2, ...)``."""
    return r.shift(np.arange(size, dtype=float))


def kernel_vector_p0(r: BirthDeathRates, N: int) -> np.ndarray:
    """``P_n(0) = (-1)^n sqrt(lambda_0..lambda_{n-1} / (mu_1..mu_n))`` for ``n < N``."""
    if r.delta != 0:
        raise InvalidParameterError("the birth-death kernel formula needs gamma_n = 0 (delta = 0)")
    n = np.arange(max(N - 1, 0), dtype=float)
    ratios = r.birth(n) / r.death(n + 1)
    mags = np.sqrt(np.concatenate(([1.0], np.cumprod(ratios))))
    signs = np.where(np.arange(N) % 2 == 0, 1.0, -1.0)
    return (signs * mags)[:N]


def kernel_vector_p0_delta0(v: HeunValentParams, N: int) -> np.ndarray:
    """``P_n(0) = (-1)^n k^n sqrt((alpha)_n (beta)_n / (n! (gamma)_n))``."""
    r = rates_from_params(v)
    out = np.empty(N)
    for n in range(N):
        ratio = 1.0
        for i in range(n):
            ratio *= (r.alpha + i) * (r.beta + i) / ((i + 1) * (r.gamma + i))
        out[n] = (-1) ** n * r.k ** n * math.sqrt(ratio)
    return out


@dataclass(frozen=True)
class TriangularKernel:
    """Strictly lower-triangular Green function on ``order + margin`` rows."""

    matrix: np.ndarray
    order: int
    margin: int

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    @property
    def block(self) -> np.ndarray:
        return self.matrix[: self.order, : self.order]

    def entries(self):
        """``(m, n, G[m, n])`` for ``0 <= n < m < order``."""
        for m in range(self.order):
            for n in range(m):
                yield m, n, float(self.matrix[m, n])


def green_function(J: JacobiMatrixTrunc, p0: np.ndarray, N: int,
                   margin: int = DEFAULT_MARGIN) -> TriangularKernel:
    """``G_{m,n} = (sum_{j=n}^{m-1} 1/(a_j P_j(0) P_{j+1}(0))) P_m(0) P_n(0)`` for ``m > n``."""
    size = N + margin
    if J.order < size or p0.shape[0] < size:
        raise ValueError(f"need Jacobi data and P(0) on {size} rows")
    p = p0[:size]
    if np.any(p == 0):
        raise ZeroDenominatorError("some P_j(0) vanishes; the kernel formula does not apply")
    inv = 1.0 / (J.a[: size - 1] * p[:-1] * p[1:])
    S = np.concatenate(([0.0], np.cumsum(inv)))
    G = (S[:, None] - S[None, :]) * np.outer(p, p)
    G[np.triu_indices(size)] = 0.0
    return TriangularKernel(G, N, margin)


def green_direct_solve(J: JacobiMatrixTrunc, N: int, margin: int = DEFAULT_MARGIN) -> TriangularKernel:
    """Green function from ``J G = I`` row by row:
    ``G[i+1] = (e_i - b_i G[i] - a_{i-1} G[i-1]) / a_i``, ``G[0] = 0``.

    This is forward substitution with ``J`` minus its first column, which is
    lower triangular with diagonal ``a_i``.
    """
    size = N + margin
    if J.order < size - 1:
        raise ValueError(f"need Jacobi data on {size - 1} rows")
    G = np.zeros((size, size))
    for i in range(size - 1):
        row = -J.b[i] * G[i]
        row[i] += 1.0
        if i > 0:
            row -= J.a[i - 1] * G[i - 1]
        G[i + 1] = row / J.a[i]
    return TriangularKernel(G, N, margin)


def green_delta0_closed_form(v: HeunValentParams, m: int, n: int) -> float:
    """Green function entry for the ``delta = 0`` Heun rates in closed form."""
    if m <= n:
        return 0.0
    r = rates_from_params(v)
    k, al, be, ga = r.k, r.alpha, r.beta, r.gamma

    def P(x, j):
        return math.prod(x + i for i in range(j))

    root = math.sqrt(P(al, m) * P(al, n) * P(be, m) * P(be, n)
                     / (math.factorial(m) * math.factorial(n) * P(ga, m) * P(ga, n)))
    total = math.fsum(k ** (-2 * j) * math.factorial(j) * P(ga, j) / (P(al, j + 1) * P(be, j + 1))
                      for j in range(n, m))
    return (-1) ** (m + n + 1) * k ** (m + n - 2) * root * total


def _nilpotent_series(T: np.ndarray, X: np.ndarray) -> np.ndarray:
    """``sum_{k>=0} T^k X`` for strictly lower-triangular ``T``.

    ``T^k`` vanishes for ``k >= size``; the loop also stops once a term is
    exactly zero.
    """
    acc = X.copy()
    term = X
    for _ in range(T.shape[0]):
        term = T @ term
        if not term.any():
            break
        acc += term
    return acc


def _diag_vector(D, size: int) -> np.ndarray:
    d = np.zeros(size) if D is None else np.asarray(D, dtype=float)
    if d.ndim != 1 or d.shape[0] < size:
        raise ValueError(f"diagonal perturbation must be a vector with at least {size} entries")
    return d[:size]


def perturbed_green(G: TriangularKernel, D) -> TriangularKernel:
    """``G~ = (I + G D)^{-1} G`` summed as ``sum_k (-G D)^k G``."""
    d = _diag_vector(D, G.size)
    return TriangularKernel(_nilpotent_series(-G.matrix * d[None, :], G.matrix), G.order, G.margin)


def perturbed_kernel(G: TriangularKernel, D, p0: np.ndarray) -> np.ndarray:
    """``P~(0) = (I + G D)^{-1} P(0)`` on ``G.size`` entries."""
    d = _diag_vector(D, G.size)
    return _nilpotent_series(-G.matrix * d[None, :], np.asarray(p0[: G.size], dtype=float))


def eval_polynomials(G: TriangularKernel, D, p0: np.ndarray, x) -> np.ndarray:
    """``P~(x) = (I - G (x I - D))^{-1} P(0)``; ``D = None`` gives ``(I - x G)^{-1} P(0)``.

    Complex ``x`` is accepted. Entries past ``G.order`` are exact as well but
    callers usually read the leading ``G.order`` only.
    """
    d = _diag_vector(D, G.size)
    dtype = complex if isinstance(x, complex) else float
    T = G.matrix * (x - d)[None, :]
    return _nilpotent_series(T.astype(dtype), np.asarray(p0[: G.size], dtype=dtype))


def polynomials_by_recurrence(J: JacobiMatrixTrunc, x, N: int) -> np.ndarray:
    """``a_{n-1} P_{n-1} + (b_n - x) P_n + a_n P_{n+1} = 0``, ``P_0 = 1``."""
    dtype = complex if isinstance(x, complex) else float
    P = np.zeros(N, dtype=dtype)
    if N == 0:
        return P
    P[0] = 1.0
    prev = 0.0
    for n in range(N - 1):
        back = J.a[n - 1] * prev if n > 0 else 0.0
        P[n + 1] = ((x - J.b[n]) * P[n] - back) / J.a[n]
        prev = P[n]
    return P


def right_inverse_residual(J: JacobiMatrixTrunc, G: TriangularKernel) -> float:
    """``max |J G - I|`` over the leading ``G.order`` block, scaled by
    ``1 + max|J| max|G|``."""
    size = G.size
    if J.order < size:
        raise ValueError("Jacobi matrix smaller than the kernel")
    Jd = JacobiMatrixTrunc(J.b[:size], J.a[:size]).dense()
    R = (Jd @ G.matrix)[: G.order, : G.order] - np.eye(G.order)
    scale = 1.0 + np.abs(Jd).max() * np.abs(G.matrix).max()
    return float(np.abs(R).max() / scale)


def kernel_residual(J: JacobiMatrixTrunc, p: np.ndarray, N: int) -> float:
    """``max |J P(0)|`` over the first ``N`` rows, scaled by ``max|J| max|P|``."""
    size = N + 1
    Jd = JacobiMatrixTrunc(J.b[:size], J.a[:size]).dense()
    r = (Jd @ p[:size])[:N]
    return float(np.abs(r).max() / (np.abs(Jd).max() * np.abs(p[:size]).max()))


def heun_coefficients_via_green(v: HeunValentParams, N: int, margin: int = DEFAULT_MARGIN,
                                rates: Optional[BirthDeathRates] = None) -> CoefficientTable:
    """``c_n = P_n(0) * P~_n(w)`` where ``P(0)`` belongs to the ``delta = 0``
    matrix and ``P~`` to the matrix shifted by ``(1-k^2) delta diag(0, 1, ...)``."""
    if N < 0:
        raise InvalidParameterError(f"order N must be non-negative, got {N}")
    if sc.is_nonpositive_integer(v.gamma):
        raise InvalidParameterError(f"gamma={v.gamma} is a non-positive integer")
    g = v.as_general()
    r = rates or rates_from_params(g)
    w = _real_float(g.w, "w")
    size = N + 1 + margin
    r0 = r.unperturbed()
    J0 = jacobi_from_rates(r0, size)
    p0 = kernel_vector_p0(r0, size)
    G = green_function(J0, p0, N + 1, margin)
    Pw = eval_polynomials(G, heun_diagonal_shift(r, G.size), p0, w)
    values = p0[: N + 1] * Pw[: N + 1]
    return CoefficientTable(v.as_mode("float"), tuple(complex(x) for x in values), Method.GREEN_PATH)
