"""Arithmetic substrate: exact rationals and machine complex numbers.

Two modes exist. ``Mode.EXACT`` values are :class:`fractions.Fraction`
(always reduced, positive denominator); ``Mode.FLOAT`` values are Python
``complex``. A computation runs in one mode only; :func:`common_mode`
rejects mixtures instead of letting Python coerce them silently.
"""

from __future__ import annotations

import enum
import math
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from numbers import Number
from typing import Iterable, List, Union

from .errors import InvalidParameterError, ModeError

Scalar = Union[Fraction, complex]

#: distance to a non-positive integer below which float-mode gamma is rejected
POLE_TOLERANCE = 1e-9


class Mode(str, enum.Enum):
    EXACT = "exact"
    FLOAT = "float"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, an integer or a decimal string as an exact fraction.

    Decimals are taken literally, so ``"0.1"`` is ``1/10``.
    """
    s = text.strip()
    try:
        if "/" in s:
            num, den = s.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(Decimal(s))
    except (ValueError, ZeroDivisionError, InvalidOperation) as exc:
        raise InvalidParameterError(f"cannot parse {text!r} as an exact rational") from exc


def to_scalar(value, mode: Mode) -> Scalar:
    """Convert ``value`` into the representation used by ``mode``."""
    mode = Mode(mode)
    if mode is Mode.EXACT:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, bool):
            raise InvalidParameterError("booleans are not scalars")
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return parse_rational(value)
        if isinstance(value, float):
            if not math.isfinite(value):
                raise InvalidParameterError(f"non-finite value {value!r}")
            # exact binary value of the float; callers wanting 1/10 pass "0.1"
            return Fraction(value)
        if isinstance(value, complex):
            raise ModeError("exact mode rejects complex inputs")
        raise InvalidParameterError(f"unsupported scalar {value!r}")
    if isinstance(value, str):
        s = value.strip()
        if "/" in s:
            return complex(float(parse_rational(s)))
        try:
            return complex(s.replace(" ", ""))
        except ValueError as exc:
            raise InvalidParameterError(f"cannot parse {value!r} as a number") from exc
    if isinstance(value, (Number, Fraction)) and not isinstance(value, bool):
        z = complex(value)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise InvalidParameterError(f"non-finite value {value!r}")
        return z
    raise InvalidParameterError(f"unsupported scalar {value!r}")


def mode_of(x) -> Mode:
    if isinstance(x, Fraction):
        return Mode.EXACT
    if isinstance(x, complex):
        return Mode.FLOAT
    raise ModeError(f"{type(x).__name__} is not a scalar of either mode")


def common_mode(values: Iterable) -> Mode:
    modes = {mode_of(v) for v in values}
    if len(modes) != 1:
        raise ModeError(f"mixed arithmetic modes: {sorted(m.value for m in modes)}")
    return modes.pop()


def one(mode: Mode) -> Scalar:
    return Fraction(1) if Mode(mode) is Mode.EXACT else complex(1.0)


def zero(mode: Mode) -> Scalar:
    return Fraction(0) if Mode(mode) is Mode.EXACT else complex(0.0)


def pochhammer(x: Scalar, n: int) -> Scalar:
    """Rising factorial ``x (x+1) ... (x+n-1)``, computed as a forward product."""
    if n < 0:
        raise ValueError("pochhammer order must be non-negative")
    result = x * 0 + 1
    for i in range(n):
        result *= x + i
    return result


def pochhammer_table(x: Scalar, n: int) -> List[Scalar]:
    """``[(x)_0, (x)_1, ..., (x)_n]``."""
    out = [x * 0 + 1]
    for i in range(n):
        out.append(out[-1] * (x + i))
    return out


def harmonic(n: int, mode: Mode = Mode.EXACT) -> Scalar:
    """``sum_{j=1}^{n} 1/j``; zero for ``n == 0``."""
    if n < 0:
        raise ValueError("harmonic index must be non-negative")
    if Mode(mode) is Mode.EXACT:
        return sum((Fraction(1, j) for j in range(1, n + 1)), Fraction(0))
    return complex(math.fsum(1.0 / j for j in range(1, n + 1)))


def is_nonpositive_integer(x: Scalar, tol: float = POLE_TOLERANCE) -> bool:
    """True when ``x`` lies in {0, -1, -2, ...} (within ``tol`` in float mode)."""
    if isinstance(x, Fraction):
        return x.denominator == 1 and x <= 0
    z = complex(x)
    if z.real > tol:
        return False
    nearest = round(z.real)
    return abs(z - nearest) <= tol and nearest <= 0


def is_real(x: Scalar) -> bool:
    return isinstance(x, Fraction) or complex(x).imag == 0.0


def real_part(x: Scalar) -> float:
    return float(x) if isinstance(x, Fraction) else complex(x).real


def format_scalar(x: Scalar) -> str:
    """Exact values as ``p/q`` (or ``p``); floats with 17 significant digits."""
    if isinstance(x, Fraction):
        return str(x)
    return format(complex(x).real, ".17g")
