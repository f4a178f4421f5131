"""Parametrizations of Heun's equation and lossless conversion between them.

The canonical form carries ``(alpha, beta, gamma, delta, epsilon, a, q)``.
The ``(k, w)`` form sets ``a = 1/k**2`` and fixes ``q`` through ``w``; the
meaning of ``w`` depends on :class:`WConvention`:

* ``GENERAL``:       ``q = -w/k**2 + alpha*beta``
* ``BETA_PLUS_ONE``: ``q = -(w - beta*gamma)/k**2``, only with ``delta = beta + 1``
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Any, Dict, Optional

from . import scalar as sc
from .errors import InvalidParameterError, ModeError, UnsupportedParameterError
from .scalar import Mode, Scalar

FUCHS_TOLERANCE = 1e-12
ROUNDTRIP_TOLERANCE = 1e-13


class WConvention(str, enum.Enum):
    GENERAL = "general"
    BETA_PLUS_ONE = "beta-plus-one"


def epsilon_of(alpha: Scalar, beta: Scalar, gamma: Scalar, delta: Scalar) -> Scalar:
    """Exponent at ``z = a`` forced by the Fuchs condition."""
    return alpha + beta + 1 - gamma - delta


def _check_gamma(gamma: Scalar) -> None:
    if sc.is_nonpositive_integer(gamma):
        raise InvalidParameterError(f"gamma={gamma} is a non-positive integer (or within tolerance of one)")


@dataclass(frozen=True)
class HeunCanonicalParams:
    alpha: Scalar
    beta: Scalar
    gamma: Scalar
    delta: Scalar
    epsilon: Scalar
    a: Scalar
    q: Scalar

    def __post_init__(self):
        mode = sc.common_mode(getattr(self, f.name) for f in fields(self))
        residual = self.gamma + self.delta + self.epsilon - (self.alpha + self.beta + 1)
        if mode is Mode.EXACT:
            if residual != 0:
                raise InvalidParameterError("Fuchs condition gamma+delta+epsilon = alpha+beta+1 violated")
        elif abs(residual) > FUCHS_TOLERANCE * max(1.0, abs(self.alpha + self.beta + 1)):
            raise InvalidParameterError(f"Fuchs condition violated by {abs(residual):.3g}")
        _check_gamma(self.gamma)
        if abs(self.a) <= 1:
            raise InvalidParameterError(f"|a| must exceed 1, got a={self.a}")

    @property
    def mode(self) -> Mode:
        return sc.mode_of(self.a)

    @classmethod
    def make(cls, mode: Mode = Mode.EXACT, *, alpha, beta, gamma, delta, a, q, epsilon=None):
        vals = [sc.to_scalar(x, mode) for x in (alpha, beta, gamma, delta)]
        eps = epsilon_of(*vals) if epsilon is None else sc.to_scalar(epsilon, mode)
        return cls(*vals, eps, sc.to_scalar(a, mode), sc.to_scalar(q, mode))


@dataclass(frozen=True)
class HeunValentParams:
    k: Scalar
    alpha: Scalar
    beta: Scalar
    gamma: Scalar
    delta: Scalar
    w: Scalar
    w_convention: WConvention = WConvention.GENERAL

    def __post_init__(self):
        object.__setattr__(self, "w_convention", WConvention(self.w_convention))
        mode = sc.common_mode([self.k, self.alpha, self.beta, self.gamma, self.delta, self.w])
        if not sc.is_real(self.k):
            raise InvalidParameterError("k must be real")
        k = sc.real_part(self.k)
        if not 0 < k < 1:
            raise InvalidParameterError(f"k must lie in (0, 1), got {self.k}")
        if self.w_convention is WConvention.BETA_PLUS_ONE:
            gap = self.delta - (self.beta + 1)
            if (gap != 0) if mode is Mode.EXACT else abs(gap) > FUCHS_TOLERANCE * max(1.0, abs(self.delta)):
                raise InvalidParameterError("beta-plus-one convention requires delta = beta + 1")
        _check_gamma(self.gamma)

    @classmethod
    def make(cls, mode: Mode = Mode.EXACT, *, k, alpha, beta, gamma, delta=None, w,
             w_convention: WConvention = WConvention.GENERAL):
        """Build from loose inputs (ints, strings, floats); ``delta`` defaults
        to ``beta + 1`` under the beta-plus-one convention."""
        conv = WConvention(w_convention)
        b = sc.to_scalar(beta, mode)
        if delta is None:
            if conv is not WConvention.BETA_PLUS_ONE:
                raise InvalidParameterError("delta is required for the general convention")
            d = b + 1
        else:
            d = sc.to_scalar(delta, mode)
        return cls(sc.to_scalar(k, mode), sc.to_scalar(alpha, mode), b,
                   sc.to_scalar(gamma, mode), d, sc.to_scalar(w, mode), conv)

    @property
    def mode(self) -> Mode:
        return sc.mode_of(self.k)

    @property
    def epsilon(self) -> Scalar:
        return epsilon_of(self.alpha, self.beta, self.gamma, self.delta)

    @property
    def a(self) -> Scalar:
        return 1 / (self.k * self.k)

    @property
    def q(self) -> Scalar:
        k2 = self.k * self.k
        if self.w_convention is WConvention.GENERAL:
            return -self.w / k2 + self.alpha * self.beta
        return -(self.w - self.beta * self.gamma) / k2

    def with_(self, **changes) -> "HeunValentParams":
        data = {f.name: getattr(self, f.name) for f in fields(self)}
        data.update(changes)
        return HeunValentParams(**data)

    def as_general(self) -> "HeunValentParams":
        """Same equation, ``w`` re-expressed in the general convention."""
        if self.w_convention is WConvention.GENERAL:
            return self
        k2 = self.k * self.k
        return self.with_(w=k2 * (self.alpha * self.beta - self.q), w_convention=WConvention.GENERAL)

    def as_mode(self, mode: Mode) -> "HeunValentParams":
        """Float copy of exact parameters (or the identity)."""
        mode = Mode(mode)
        if mode is self.mode:
            return self
        if mode is Mode.EXACT:
            raise ModeError("float parameters are not converted to exact rationals implicitly")
        return self.with_(**{n: complex(getattr(self, n)) for n in ("k", "alpha", "beta", "gamma", "delta", "w")})

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {}
        for name in ("k", "alpha", "beta", "gamma", "delta", "w"):
            out[name] = _scalar_to_json(getattr(self, name))
        out["w_convention"] = self.w_convention.value
        return out

    @classmethod
    def from_json(cls, obj: Dict[str, Any], mode: Optional[Mode] = None) -> "HeunValentParams":
        if mode is None:
            mode = Mode.EXACT if all(isinstance(obj.get(n), (str, int)) and not isinstance(obj.get(n), bool)
                                     for n in ("k", "alpha", "beta", "gamma", "w")) else Mode.FLOAT
        vals = {n: _scalar_from_json(obj[n], mode) for n in ("k", "alpha", "beta", "gamma", "w")}
        delta = obj.get("delta")
        return cls.make(mode, delta=None if delta is None else _scalar_from_json(delta, mode),
                        w_convention=obj.get("w_convention", "general"), **vals)


def _scalar_to_json(x: Scalar):
    if isinstance(x, Fraction):
        return str(x)
    z = complex(x)
    if z.imag == 0:
        return z.real
    return {"re": z.real, "im": z.imag}


def _scalar_from_json(v, mode: Mode):
    if isinstance(v, dict):
        if Mode(mode) is Mode.EXACT:
            raise ModeError("exact mode rejects complex inputs")
        return complex(float(v["re"]), float(v["im"]))
    return v


def to_canonical(v: HeunValentParams) -> HeunCanonicalParams:
    return HeunCanonicalParams(v.alpha, v.beta, v.gamma, v.delta, v.epsilon, v.a, v.q)


def _exact_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    rn, rd = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def from_canonical(c: HeunCanonicalParams,
                   convention: WConvention = WConvention.GENERAL) -> HeunValentParams:
    """Invert ``a = 1/k**2`` and the ``q``-substitution of ``convention``."""
    convention = WConvention(convention)
    if c.mode is Mode.EXACT:
        if c.a <= 1:
            raise UnsupportedParameterError(f"a must be real and > 1, got {c.a}")
        root = _exact_sqrt(c.a)
        if root is None:
            raise UnsupportedParameterError(f"a={c.a} is not the square of a rational; k would be irrational")
        k = 1 / root
    else:
        a = complex(c.a)
        if a.imag != 0 or a.real <= 1:
            raise UnsupportedParameterError(f"a must be real and > 1, got {c.a}")
        k = complex(1 / math.sqrt(a.real))
    k2 = k * k
    if convention is WConvention.GENERAL:
        w = k2 * (c.alpha * c.beta - c.q)
    else:
        w = c.beta * c.gamma - c.q * k2
    return HeunValentParams(k, c.alpha, c.beta, c.gamma, c.delta, w, convention)
