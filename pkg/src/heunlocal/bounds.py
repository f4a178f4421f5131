"""Explicit envelopes ``|c_n| <= bound(n)`` and a checker for coefficient tables.

Three estimates are available:

``general``
    ``|(alpha)_n| (d)_n^2 / (n! |(gamma)_n|^2) * exp(t/(1-k^2) * H_n)`` with
    ``d = max(1, |alpha|, |beta|, |gamma|)``, ``t = |w| + (1-k^2)|delta|``.
    This is the estimate in its original form. It is *not* a valid envelope
    everywhere: for ``n = 1`` and ``alpha -> 0`` it tends to zero while
    ``c_1 = (alpha beta k^2 - w)/gamma`` does not.
``general-derived``
    ``(d)_n^2 / (n! |(gamma)_n|) * exp(t/(1-k^2) * H_n)``; the same chain
    estimate applied to the Pochhammer pattern of the general nested sum.
``beta-plus-one``
    ``exp(pi^2 |w| / (6 (1-k^2))) * (d)_n^2 / (n! |(gamma)_n|)`` for
    ``delta = beta + 1``, with ``w`` in that family's convention.

Bounds are evaluated in log space and returned as floats (``inf`` on overflow).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, List, Optional

from . import scalar as sc
from .errors import InvalidParameterError, NotApplicableError
from .params import HeunValentParams, WConvention
from .recurrence import CoefficientTable

ESTIMATES = ("general", "general-derived", "beta-plus-one")
#: relative slack allowed when comparing a coefficient with its envelope
SLACK = 1e-12


@dataclass(frozen=True)
class BoundParams:
    d: float
    t: float
    k: float

    def __post_init__(self):
        if self.d < 1 or self.t < 0 or not 0 < self.k < 1:
            raise InvalidParameterError(f"invalid bound parameters {self}")


def bound_params(v: HeunValentParams) -> BoundParams:
    g = v.as_general()
    k = sc.real_part(g.k)
    d = max(1.0, abs(complex(g.alpha)), abs(complex(g.beta)), abs(complex(g.gamma)))
    t = abs(complex(g.w)) + (1 - k * k) * abs(complex(g.delta))
    return BoundParams(d, t, k)


def _safe_exp(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


def _check_gamma(v: HeunValentParams) -> None:
    if sc.is_nonpositive_integer(v.gamma):
        raise NotApplicableError(f"gamma={v.gamma} is a non-positive integer")


def iter_log_bounds(v: HeunValentParams, estimate: str = "general") -> Iterator[float]:
    """``log bound(n)`` for ``n = 0, 1, 2, ...`` (unbounded), built from the
    per-step ratios ``bound(n+1)/bound(n)``."""
    if estimate not in ESTIMATES:
        raise ValueError(f"unknown estimate {estimate!r}; expected one of {ESTIMATES}")
    _check_gamma(v)
    if estimate == "beta-plus-one":
        v = _beta_plus_one_view(v)
    bp = bound_params(v)
    alpha, gamma = complex(v.alpha), complex(v.gamma)
    one_minus = 1 - bp.k * bp.k
    if estimate == "beta-plus-one":
        log_b = math.pi ** 2 * abs(complex(v.w)) / (6 * one_minus)
        rate = 0.0
    else:
        log_b = 0.0
        rate = bp.t / one_minus
    n = 0
    while True:
        yield log_b
        step = 2 * math.log(bp.d + n) - math.log(n + 1) + rate / (n + 1)
        g = abs(gamma + n)
        if estimate == "general":
            step += _log(abs(alpha + n)) - 2 * _log(g)
        else:
            step -= _log(g)
        log_b += step
        n += 1


def _log(x: float) -> float:
    return math.log(x) if x > 0 else -math.inf


def log_bound_table(v: HeunValentParams, N: int, estimate: str = "general") -> List[float]:
    """``log bound(n)`` for ``n = 0..N``."""
    if N < 0:
        raise InvalidParameterError("N must be non-negative")
    return list(itertools.islice(iter_log_bounds(v, estimate), N + 1))


def _beta_plus_one_view(v: HeunValentParams) -> HeunValentParams:
    if v.w_convention is WConvention.BETA_PLUS_ONE:
        return v
    if v.delta != v.beta + 1:
        raise NotApplicableError("the beta-plus-one estimate needs delta = beta + 1")
    k2 = v.k * v.k
    return v.with_(w=v.beta * v.gamma - v.q * k2, w_convention=WConvention.BETA_PLUS_ONE)


def bound_table(v: HeunValentParams, N: int, estimate: str = "general") -> List[float]:
    return [_safe_exp(x) for x in log_bound_table(v, N, estimate)]


def bound_general(v: HeunValentParams, n: int) -> float:
    return bound_table(v, n, "general")[n]


def bound_general_derived(v: HeunValentParams, n: int) -> float:
    return bound_table(v, n, "general-derived")[n]


def bound_beta_plus_one(v: HeunValentParams, n: int) -> float:
    return bound_table(v, n, "beta-plus-one")[n]


def default_estimate(v: HeunValentParams) -> str:
    return "beta-plus-one" if v.w_convention is WConvention.BETA_PLUS_ONE else "general"


@dataclass(frozen=True)
class EnvelopeRow:
    n: int
    abs_c: float
    bound: float
    ratio: float
    ok: bool


@dataclass(frozen=True)
class EnvelopeReport:
    estimate: str
    rows: List[EnvelopeRow]

    @property
    def all_ok(self) -> bool:
        return all(r.ok for r in self.rows)

    @property
    def worst_ratio(self) -> float:
        return max(r.ratio for r in self.rows)

    @property
    def failures(self) -> List[EnvelopeRow]:
        return [r for r in self.rows if not r.ok]


def check_envelope(table: CoefficientTable, estimate: Optional[str] = None) -> EnvelopeReport:
    """Compare ``|c_n|`` with ``bound(n) * (1 + 1e-12)`` row by row."""
    v = table.params
    if not isinstance(v, HeunValentParams):
        raise NotApplicableError("envelopes are stated for (k, w) parameters")
    estimate = estimate or default_estimate(v)
    bounds = bound_table(v, table.order, estimate)
    rows = []
    for n, (c, b) in enumerate(zip(table.values, bounds)):
        a = abs(complex(c))
        ratio = a / b if b > 0 else (0.0 if a == 0 else math.inf)
        rows.append(EnvelopeRow(n, a, b, ratio, a <= b * (1 + SLACK)))
    return EnvelopeReport(estimate, rows)
