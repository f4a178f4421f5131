"""Summation of ``F(z) = sum c_n z^n`` on the open unit disk, and a dispatcher
over the coefficient algorithms."""

from __future__ import annotations

import math
from dataclasses import dataclass
from . import closed_form, jacobi, recurrence
from .bounds import iter_log_bounds
from .errors import ConvergenceError, DomainError, InvalidParameterError, NotApplicableError
from .params import HeunValentParams, WConvention
from .recurrence import CoefficientTable, Method
from .scalar import Mode

DEFAULT_TOL = 1e-10
DEFAULT_CAP = 4096
#: the Green path is O(N^3) and its kernel vector underflows like k^n
GREEN_MAX_TERMS = 512
SMALL_RUN = 8
_FIRST_ORDER = 64
_TAIL_MAX_TERMS = 1_000_000


def coefficients(v: HeunValentParams, N: int, method: Method = Method.RECURRENCE,
                 backend=None) -> CoefficientTable:
    """``c_0..c_N`` by ``method``; the table keeps the caller's parameters."""
    method = Method(method)
    if method is Method.RECURRENCE:
        table = recurrence.coefficients_for(v, N, backend=backend)
    elif method is Method.CLOSED_FORM:
        table = closed_form.closed_form_coefficients(v.as_general(), N, backend=backend)
    elif method is Method.CLOSED_FORM_DELTA0:
        g = v.as_general()
        if g.delta != 0:
            raise NotApplicableError(f"{method.value} needs delta = 0, got delta={g.delta}")
        table = closed_form.delta0_coefficients(g, N, backend=backend)
    elif method is Method.CLOSED_FORM_BETA_PLUS_ONE:
        if v.delta != v.beta + 1:
            raise NotApplicableError(f"{method.value} needs delta = beta + 1")
        table = closed_form.beta_plus_one_coefficients(v, N, backend=backend)
    else:
        table = jacobi.heun_coefficients_via_green(v, N)
    params = v if table.params.mode is v.mode else v.as_mode(table.params.mode)
    return CoefficientTable(params, table.values, method)


def applicable_methods(v: HeunValentParams):
    """Methods whose preconditions hold for ``v`` (checked by a tiny trial run)."""
    out = []
    for m in Method:
        try:
            coefficients(v, 2, m)
        except (NotApplicableError, InvalidParameterError, ZeroDivisionError):
            continue
        out.append(m)
    return out


@dataclass(frozen=True)
class EvalResult:
    value: complex
    terms_used: int
    tail_estimate: float
    method: Method
    #: True when ``tail_estimate`` comes from a proven envelope
    certified: bool

    def __post_init__(self):
        if self.terms_used < 1 or not self.tail_estimate >= 0:
            raise ValueError("inconsistent evaluation result")


def _tail_estimate_name(v: HeunValentParams) -> str:
    # the original general-delta estimate fails for small |alpha|; the
    # derived one is used as the safeguard
    if v.w_convention is WConvention.BETA_PLUS_ONE:
        return "beta-plus-one"
    return "general-derived"


def analytic_tails(v: HeunValentParams, r: float, tol: float, upto: int):
    """``T[n] = sum_{m>n} bound(m) r^m`` for ``n = 0..upto`` (``inf`` where the
    envelope sum cannot be closed).

    Envelope terms are summed until they fall below ``tol/100`` while
    shrinking; the remainder past that point is closed geometrically with the
    last term ratio.
    """
    terms = []
    log_r = math.log(r)
    small = tol / 100
    prev = None
    remainder = 0.0
    for m, lb in enumerate(iter_log_bounds(v, _tail_estimate_name(v))):
        x = lb + m * log_r
        t = math.exp(x) if x < 700 else math.inf
        terms.append(t)
        if prev is not None and m > upto and t < small:
            step = x - prev
            if step < 0:
                q = math.exp(step)
                remainder = t * q / (1 - q)
                break
        prev = x
        if m > _TAIL_MAX_TERMS:
            return [math.inf] * (upto + 1)
    suffix = [0.0] * (len(terms) + 1)
    suffix[-1] = remainder
    for m in range(len(terms) - 1, -1, -1):
        suffix[m] = suffix[m + 1] + terms[m]
    return [suffix[n + 1] for n in range(upto + 1)]


def evaluate(v: HeunValentParams, z, tol: float = DEFAULT_TOL, method: Method = Method.RECURRENCE,
             cap: int = DEFAULT_CAP, backend=None) -> EvalResult:
    """Adaptive partial sum of the local Heun series at ``z`` (``|z| < 1``).

    Terms are added until ``|c_n z^n| < tol * max(1, |S_n|)`` for 8 consecutive
    ``n``; the stop is then pushed out until the envelope tail
    ``sum_{m>n} bound(m) |z|^m`` is below the same threshold, when the
    envelope can be closed within ``cap`` terms.
    """
    method = Method(method)
    if not tol > 0:
        raise InvalidParameterError("tol must be positive")
    z = complex(z)
    r = abs(z)
    if r >= 1:
        raise DomainError(f"|z| = {r} is outside the open unit disk")
    if z == 0:
        return EvalResult(complex(1.0), 1, 0.0, method, True)
    if method is Method.GREEN_PATH:
        cap = min(cap, GREEN_MAX_TERMS)
    vf = v.as_mode(Mode.FLOAT)

    N = min(_FIRST_ORDER, cap)
    while True:
        c = coefficients(vf, N, method, backend=backend).values
        stop, partial = _empirical_stop(c, z, tol)
        if stop is not None:
            break
        if N >= cap:
            raise ConvergenceError(f"no run of {SMALL_RUN} negligible terms within {cap} terms")
        N = min(2 * N, cap)

    tails = analytic_tails(vf, r, tol, max(cap, stop))
    target = None
    for n in range(stop, len(tails)):
        if tails[n] <= tol * max(1.0, abs(partial[min(n, len(partial) - 1)])):
            target = n
            break
    if target is None:
        last = [abs(c[n] * z ** n) for n in range(stop - SMALL_RUN + 1, stop + 1)]
        empirical = max(last) * r / (1 - r)
        return EvalResult(partial[stop], stop + 1, empirical, method, False)
    if target > N:
        c = coefficients(vf, target, method, backend=backend).values
        partial = _partial_sums(c, z)
    return EvalResult(partial[target], target + 1, tails[target], method, True)


def _partial_sums(c, z):
    out = []
    s = 0j
    p = 1 + 0j
    comp = 0j
    for cn in c:
        # compensated summation
        y = cn * p - comp
        t = s + y
        comp = (t - s) - y
        s = t
        out.append(s)
        p *= z
    return out


def _empirical_stop(c, z, tol):
    partial = _partial_sums(c, z)
    run = 0
    p = 1 + 0j
    for n, cn in enumerate(c):
        if abs(cn * p) < tol * max(1.0, abs(partial[n])):
            run += 1
            if run >= SMALL_RUN:
                return n, partial
        else:
            run = 0
        p *= z
    return None, partial
