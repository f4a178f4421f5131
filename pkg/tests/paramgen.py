"""Seeded parameter generators shared by the test modules."""

import random
from fractions import Fraction

from heunlocal.params import HeunValentParams, WConvention

K_CHOICES = (Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3))


def rational(rng, lo, hi, open_low=False):
    den = rng.randint(1, 7)
    lo_num = int(lo * den) + (1 if open_low else 0)
    return Fraction(rng.randint(lo_num, int(hi * den)), den)


def exact_general(rng, delta=None):
    return HeunValentParams.make(
        "exact", k=rng.choice(K_CHOICES),
        alpha=rational(rng, 0, 5, True), beta=rational(rng, 0, 5, True), gamma=rational(rng, 0, 5, True),
        delta=rational(rng, -2, 2) if delta is None else delta, w=rational(rng, -3, 3))


def exact_beta_plus_one(rng, w=None):
    return HeunValentParams.make(
        "exact", k=rng.choice(K_CHOICES),
        alpha=rational(rng, 0, 5, True), beta=rational(rng, 0, 5, True), gamma=rational(rng, 0, 5, True),
        w=rational(rng, -3, 3) if w is None else w, w_convention=WConvention.BETA_PLUS_ONE)


def _cplx(rng, lo, hi, spread=2.0):
    return complex(rng.uniform(lo, hi), rng.uniform(-spread, spread))


def _gamma(rng):
    # keep a distance from the poles 0, -1, -2, ...
    while True:
        g = _cplx(rng, -3, 5)
        if min(abs(g + j) for j in range(4)) > 0.1:
            return g


def complex_general(rng):
    return HeunValentParams.make(
        "float", k=rng.uniform(0.05, 0.95), alpha=_cplx(rng, -3, 5), beta=_cplx(rng, -3, 5),
        gamma=_gamma(rng), delta=_cplx(rng, -2, 2), w=_cplx(rng, -3, 3, 3.0))


def complex_beta_plus_one(rng):
    return HeunValentParams.make(
        "float", k=rng.uniform(0.05, 0.95), alpha=_cplx(rng, -3, 5), beta=_cplx(rng, -3, 5),
        gamma=_gamma(rng), w=_cplx(rng, -3, 3, 3.0), w_convention=WConvention.BETA_PLUS_ONE)


def sets(factory, count, seed, **kw):
    rng = random.Random(seed)
    return [factory(rng, **kw) for _ in range(count)]
