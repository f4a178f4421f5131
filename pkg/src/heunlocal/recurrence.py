"""Coefficients of the local Heun solution from the three-term recurrence.

This is the shortest path from the defining equations to ``c_n`` and acts as
the oracle for every other method in the package.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from . import kernels
from . import scalar as sc
from ._fallback import recurrence_sweep
from .errors import InvalidParameterError
from .params import HeunCanonicalParams, HeunValentParams, to_canonical
from .scalar import Mode, Scalar


class Method(str, enum.Enum):
    RECURRENCE = "recurrence"
    CLOSED_FORM = "closed-form"
    CLOSED_FORM_DELTA0 = "closed-form-delta0"
    CLOSED_FORM_BETA_PLUS_ONE = "closed-form-beta-plus-one"
    GREEN_PATH = "green-path"


@dataclass(frozen=True)
class CoefficientTable:
    params: Union[HeunValentParams, HeunCanonicalParams]
    values: Tuple[Scalar, ...]
    method: Method

    def __post_init__(self):
        if not self.values:
            raise ValueError("a coefficient table holds at least c_0")
        if self.values[0] != 1:
            raise ValueError(f"c_0 must equal 1, got {self.values[0]}")

    @property
    def order(self) -> int:
        return len(self.values) - 1

    @property
    def mode(self) -> Mode:
        return self.params.mode

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]


def _check_order(N: int) -> None:
    if N < 0:
        raise InvalidParameterError(f"order N must be non-negative, got {N}")


def recurrence_coefficients(c: HeunCanonicalParams, N: int, backend=None) -> CoefficientTable:
    """``c_0..c_N`` for canonical parameters via

        -q c_0 + a gamma c_1 = 0
        A_n c_{n-1} - (B_n + q) c_n + C_n c_{n+1} = 0,   n >= 1
    """
    _check_order(N)
    args = (c.alpha, c.beta, c.gamma, c.delta, c.epsilon, c.a, c.q)
    if c.mode is Mode.EXACT:
        values = recurrence_sweep(*args, N)
    else:
        values = [complex(x) for x in kernels.recurrence_sweep_float(*args, N, backend=backend)]
    return CoefficientTable(c, tuple(values), Method.RECURRENCE)


def recurrence_coefficients_valent(v: HeunValentParams, N: int) -> CoefficientTable:
    """Same recurrence written with ``k`` and ``w``:

        B_n = n((n-1+gamma)(1 + 1/k^2) + delta/k^2 + alpha + beta - gamma - delta + 1)
        C_n = (n+1)(n+gamma)/k^2,   q from the convention of ``v``.
    """
    _check_order(N)
    k2 = v.k * v.k
    q = v.q
    one = sc.one(v.mode)
    values: List[Scalar] = [one]
    prev, cur = one * 0, one
    for n in range(N):
        A = (n - 1 + v.alpha) * (n - 1 + v.beta)
        B = n * ((n - 1 + v.gamma) * (1 + 1 / k2) + v.delta / k2
                 + v.alpha + v.beta - v.gamma - v.delta + 1)
        C = (n + 1) * (n + v.gamma) / k2
        nxt = ((B + q) * cur - A * prev) / C
        values.append(nxt)
        prev, cur = cur, nxt
    return CoefficientTable(v, tuple(values), Method.RECURRENCE)


def recurrence_residuals(c: HeunCanonicalParams, values: Sequence[Scalar]) -> List[Scalar]:
    """``A_n c_{n-1} - (B_n+q) c_n + C_n c_{n+1}`` for ``1 <= n <= N-1``,
    plus the ``n = 0`` row ``-q c_0 + a gamma c_1`` in front."""
    out = []
    if len(values) > 1:
        out.append(-c.q * values[0] + c.a * c.gamma * values[1])
    for n in range(1, len(values) - 1):
        A = (n - 1 + c.alpha) * (n - 1 + c.beta)
        B = n * ((n - 1 + c.gamma) * (1 + c.a) + c.a * c.delta + c.epsilon)
        C = (n + 1) * (n + c.gamma) * c.a
        out.append(A * values[n - 1] - (B + c.q) * values[n] + C * values[n + 1])
    return out


def coefficients_for(v: HeunValentParams, N: int, backend=None) -> CoefficientTable:
    """Recurrence table for Valent parameters through the canonical form."""
    table = recurrence_coefficients(to_canonical(v), N, backend=backend)
    return CoefficientTable(v, table.values, Method.RECURRENCE)
