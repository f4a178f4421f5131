from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from heunlocal.errors import InvalidParameterError, ModeError, UnsupportedParameterError
from heunlocal.params import (HeunCanonicalParams, HeunValentParams, WConvention, from_canonical,
                              to_canonical)

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=9)
ks = st.sampled_from([Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(3, 5)])


def test_canonical_of_reference_set(exact_params):
    c = to_canonical(exact_params)
    assert c.a == 4 and c.epsilon == 1 and c.q == -2
    assert c.gamma + c.delta + c.epsilon == c.alpha + c.beta + 1


@given(ks, rationals, rationals, rationals.filter(lambda g: not (g <= 0 and g.denominator == 1)), rationals,
       rationals, st.sampled_from(list(WConvention)))
def test_round_trip_exact(k, a, b, g, d, w, conv):
    if conv is WConvention.BETA_PLUS_ONE:
        d = b + 1
    v = HeunValentParams(k, a, b, g, d, w, conv)
    assert from_canonical(to_canonical(v), conv) == v


def test_round_trip_float():
    v = HeunValentParams.make("float", k=0.3, alpha=1.5, beta=0.25 + 1j, gamma=2, delta=-1, w=0.7)
    back = from_canonical(to_canonical(v))
    for name in ("k", "alpha", "beta", "gamma", "delta", "w"):
        assert abs(getattr(back, name) - getattr(v, name)) <= 1e-13 * max(1, abs(getattr(v, name)))


def test_beta_plus_one_q_substitution():
    v = HeunValentParams.make("exact", k="1/2", alpha=1, beta=2, gamma=3, w=1, w_convention="beta-plus-one")
    assert v.delta == 3
    assert v.q == -(1 - 6) * 4
    g = v.as_general()
    assert g.q == v.q and g.w_convention is WConvention.GENERAL


@pytest.mark.parametrize("gamma", [0, -1, -2, "-7"])
def test_gamma_poles_rejected(gamma):
    with pytest.raises(InvalidParameterError):
        HeunValentParams.make("exact", k="1/2", alpha=1, beta=2, gamma=gamma, delta=0, w=1)


@pytest.mark.parametrize("k", ["0", "1", "3/2", "-1/2"])
def test_k_range(k):
    with pytest.raises(InvalidParameterError):
        HeunValentParams.make("exact", k=k, alpha=1, beta=2, gamma=3, delta=0, w=1)


def test_fuchs_violation():
    with pytest.raises(InvalidParameterError):
        HeunCanonicalParams.make("exact", alpha=1, beta=2, gamma=3, delta=0, epsilon=5, a=4, q=0)


def test_beta_plus_one_requires_matching_delta():
    with pytest.raises(InvalidParameterError):
        HeunValentParams.make("exact", k="1/2", alpha=1, beta=2, gamma=3, delta=0, w=1,
                              w_convention="beta-plus-one")


def test_irrational_k_unsupported():
    c = HeunCanonicalParams.make("exact", alpha=1, beta=2, gamma=3, delta=0, a=2, q=0)
    with pytest.raises(UnsupportedParameterError):
        from_canonical(c)


def test_json_round_trip(exact_params):
    assert HeunValentParams.from_json(exact_params.to_json()) == exact_params
    f = HeunValentParams.make("float", k=0.5, alpha=1, beta=2j, gamma=3, delta=0, w=1)
    assert f.to_json()["beta"] == {"re": 0.0, "im": 2.0}
    assert HeunValentParams.from_json(f.to_json()) == f


def test_exact_rejects_complex_json():
    with pytest.raises(ModeError):
        HeunValentParams.from_json({"k": "1/2", "alpha": 1, "beta": {"re": 1, "im": 1}, "gamma": 3,
                                    "delta": 0, "w": 1}, mode="exact")


def test_float_to_exact_refused():
    f = HeunValentParams.make("float", k=0.5, alpha=1, beta=2, gamma=3, delta=0, w=1)
    with pytest.raises(ModeError):
        f.as_mode("exact")
