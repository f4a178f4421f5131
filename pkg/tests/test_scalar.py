from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from heunlocal import scalar as sc
from heunlocal.errors import ModeError


def test_parse_rational_forms():
    assert sc.parse_rational("3/4") == Fraction(3, 4)
    assert sc.parse_rational("0.1") == Fraction(1, 10)
    assert sc.parse_rational("-2") == -2


def test_float_mode_is_complex():
    assert sc.to_scalar("0.5", sc.Mode.FLOAT) == 0.5 + 0j
    assert isinstance(sc.to_scalar(1, sc.Mode.FLOAT), complex)


def test_mixed_modes_rejected():
    with pytest.raises(ModeError):
        sc.common_mode([Fraction(1), 1.0 + 0j])


@given(st.fractions(min_value=-5, max_value=5), st.integers(0, 12))
def test_pochhammer_shift(x, n):
    # (x)_{n+1} = (x)_n (x + n)
    assert sc.pochhammer(x, n + 1) == sc.pochhammer(x, n) * (x + n)


def test_pochhammer_table_and_harmonic():
    assert sc.pochhammer_table(Fraction(1), 4) == [1, 1, 2, 6, 24]
    assert sc.harmonic(3) == Fraction(11, 6)
    assert sc.harmonic(0) == 0


@pytest.mark.parametrize("x,expected", [(0, True), (-3, True), (Fraction(-1, 2), False), (2, False),
                                        (complex(-2, 1e-12), True), (complex(-2, 1e-3), False)])
def test_nonpositive_integer_detection(x, expected):
    x = Fraction(x) if not isinstance(x, complex) else x
    assert sc.is_nonpositive_integer(x) is expected


def test_format_scalar():
    assert sc.format_scalar(Fraction(-13, 96)) == "-13/96"
    assert sc.format_scalar(0.1 + 0j) == "0.10000000000000001"
