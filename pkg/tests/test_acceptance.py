"""Acceptance criteria. Each test records a single pass/fail line, and the
lines are repeated in the terminal summary."""

import random
import subprocess
import sys
from fractions import Fraction

import numpy as np

from acceptance_log import record
from heunlocal import jacobi
from heunlocal.bounds import check_envelope
from heunlocal.closed_form import (beta_plus_one_coefficients, closed_form_coefficients, delta0_coefficients,
                                   f_beta_plus_one_dp, f_beta_plus_one_naive, f_general_dp, f_general_naive)
from heunlocal.params import HeunValentParams
from heunlocal.recurrence import Method, recurrence_coefficients_valent
from heunlocal.series import _partial_sums, applicable_methods, coefficients, evaluate

import paramgen as pg

N_EXACT = 12


def _mismatches(a, b):
    return [n for n, (x, y) in enumerate(zip(a.values, b.values)) if x != y]


def test_criterion_1_closed_form_equals_recurrence():
    bad = []
    for i, v in enumerate(pg.sets(pg.exact_general, 100, seed=101)):
        if _mismatches(closed_form_coefficients(v, N_EXACT), recurrence_coefficients_valent(v, N_EXACT)):
            bad.append(i)
    assert record("1", not bad, f"100 exact sets, n <= 12, {len(bad)} with a nonzero discrepancy")


def test_criterion_2_delta0_specialization():
    bad = []
    for i, v in enumerate(pg.sets(pg.exact_general, 50, seed=202, delta=0)):
        d0 = delta0_coefficients(v, N_EXACT)
        cf = closed_form_coefficients(v, N_EXACT)
        rec = recurrence_coefficients_valent(v, N_EXACT)
        if _mismatches(d0, cf) or _mismatches(d0, rec):
            bad.append(i)
    assert record("2", not bad, f"50 exact sets with delta = 0, n <= 12, {len(bad)} mismatching")


def test_criterion_3_beta_plus_one():
    bad = []
    for i, v in enumerate(pg.sets(pg.exact_beta_plus_one, 50, seed=303)):
        if _mismatches(beta_plus_one_coefficients(v, N_EXACT), recurrence_coefficients_valent(v, N_EXACT)):
            bad.append(i)
    rng = random.Random(304)
    power_bad = []
    for v in [pg.exact_beta_plus_one(rng, w=0) for _ in range(10)]:
        c = beta_plus_one_coefficients(v, 20).values
        expect, term = [], Fraction(1)
        for n in range(21):
            expect.append(term)
            term = term * (v.beta + n) / (n + 1)
        if list(c) != expect:
            power_bad.append(v)
    ok = not bad and not power_bad
    assert record("3", ok, f"50 exact sets n <= 12 ({len(bad)} mismatching); "
                           f"w = 0 gives (beta)_n/n! for n <= 20 on 10 sets ({len(power_bad)} mismatching)")


def test_criterion_4_dp_matches_enumeration():
    bad = []
    general = pg.sets(pg.exact_general, 25, seed=404)
    bp1 = pg.sets(pg.exact_beta_plus_one, 25, seed=405)
    for v in general:
        dp = f_general_dp(v, 8)
        bad += [("general", m, n) for n in range(9) for m in range(n + 1)
                if dp.get(m, n) != f_general_naive(v, m, n)]
    for v in bp1:
        dp = f_beta_plus_one_dp(v, 8)
        bad += [("beta+1", m, n) for n in range(9) for m in range(n + 1)
                if dp.get(m, n) != f_beta_plus_one_naive(v, m, n)]
    assert record("4", not bad, f"2 x 25 exact sets, 0 <= m <= n <= 8, {len(bad)} entries differing")


def _green_setup(N=40, margin=2):
    v = HeunValentParams.make("float", k=0.5, alpha=1.0, beta=2.0, gamma=3.0, delta=0.5, w=1.0)
    r = jacobi.rates_from_params(v)
    size = N + margin + 1
    r0 = r.unperturbed()
    J0 = jacobi.jacobi_from_rates(r0, size)
    p0 = jacobi.kernel_vector_p0(r0, size)
    G = jacobi.green_function(J0, p0, N, margin)
    D = jacobi.heun_diagonal_shift(r, size)
    return J0, p0, G, D, N, margin


def test_criterion_5_green_identities():
    J0, p0, G, D, N, margin = _green_setup()
    res = {}
    res["JG-I"] = jacobi.right_inverse_residual(J0, G)
    direct = jacobi.green_direct_solve(J0, N, margin)
    scale = np.abs(direct.block).max()
    res["formula-vs-solve"] = float(np.abs(G.block - direct.block).max() / scale)
    Jp = J0.perturbed(D)
    res["Jp Gp - I"] = jacobi.right_inverse_residual(Jp, jacobi.perturbed_green(G, D))
    res["Jp Pp(0)"] = jacobi.kernel_residual(Jp, jacobi.perturbed_kernel(G, D, p0), N)
    worst_poly = 0.0
    for x in (-2.0, -1.0, 0.0, 1.0, 2.0):
        got = jacobi.eval_polynomials(G, D, p0, x)[:30]
        ref = jacobi.polynomials_by_recurrence(Jp, x, 30)
        worst_poly = max(worst_poly, float(np.max(np.abs(got - ref) / np.maximum(np.abs(ref), 1e-300))))
    ok = all(x <= 1e-10 for x in res.values()) and worst_poly <= 1e-9
    detail = ", ".join(f"{k} {x:.1e}" for k, x in res.items()) + f", polynomials {worst_poly:.1e}"
    assert record("5", ok, f"N=40 margin 2: {detail}")


def test_criterion_6_generating_function():
    rng = random.Random(606)
    worst = 0.0
    for _ in range(25):
        v = pg.exact_general(rng, delta=pg.rational(rng, -1, 2))
        oracle = recurrence_coefficients_valent(v, 25).values
        got = coefficients(v, 25, Method.GREEN_PATH).values
        for c, g in zip(oracle, got):
            worst = max(worst, abs(g - complex(c)) / abs(complex(c)))
    assert record("6", worst <= 1e-8, f"25 positive sets, delta in [-1, 2], n <= 25, worst relative {worst:.1e}")


# alpha -> 0 with c_1 = (alpha beta k^2 - w)/gamma held away from zero
STATED_BOUND_WITNESS = dict(k=0.5, alpha=0.01, beta=1.0, gamma=1.0, delta=0.0, w=1.0)


def _envelope_failures(param_sets, estimate, N=40):
    fails, worst = 0, 0.0
    for v in param_sets:
        rep = check_envelope(coefficients(v, N), estimate)
        fails += not rep.all_ok
        worst = max(worst, rep.worst_ratio)
    return fails, worst


def test_criterion_7_general_bound_as_stated():
    sets = pg.sets(pg.complex_general, 99, seed=707)
    sets.append(HeunValentParams.make("float", **STATED_BOUND_WITNESS))
    fails, worst = _envelope_failures(sets, "general")
    assert record("7.general", fails == 0,
                  f"original general-delta estimate, 100 complex sets, n <= 40: "
                  f"{fails} violating, worst ratio {worst:.3g}")


def test_criterion_7_general_bound_derived():
    sets = pg.sets(pg.complex_general, 99, seed=707)
    sets.append(HeunValentParams.make("float", **STATED_BOUND_WITNESS))
    fails, worst = _envelope_failures(sets, "general-derived")
    assert record("7.general-derived", fails == 0,
                  f"corrected general-delta estimate, same 100 sets: {fails} violating, worst ratio {worst:.3g}")


def test_criterion_7_beta_plus_one_bound():
    fails, worst = _envelope_failures(pg.sets(pg.complex_beta_plus_one, 100, seed=708), "beta-plus-one")
    assert record("7.beta-plus-one", fails == 0,
                  f"delta = beta + 1 estimate, 100 complex sets, n <= 40: {fails} violating, worst ratio {worst:.3g}")


def test_criterion_8_series_evaluation():
    tol = 1e-10
    v = HeunValentParams.make("exact", k="1/2", alpha=1, beta=2, gamma=3, delta=0, w=1)
    at_zero = {m.value: evaluate(v, 0, method=m).value for m in applicable_methods(v)}
    zero_ok = all(x == 1 for x in at_zero.values())

    bp1 = HeunValentParams.make("exact", k="1/2", alpha=1, beta=1, gamma="3/2", w=0, w_convention="beta-plus-one")
    two = evaluate(bp1, 0.5, tol=tol).value
    two_ok = abs(two - 2.0) <= 1e-10

    worst = 0.0
    for z in (0.9, -0.9, 0.9j, 0.5 + 0.5j, -0.3, 0.7, 0.9 * np.exp(2j)):
        for p in (v, bp1):
            res = evaluate(p, z, tol=tol)
            c = coefficients(p.as_mode("float"), 2 * res.terms_used).values
            worst = max(worst, abs(_partial_sums(c, complex(z))[-1] - res.value))
    ok = zero_ok and two_ok and worst < 10 * tol
    assert record("8", ok, f"F(0) = 1 for {len(at_zero)} methods: {zero_ok}; F(1/2) - 2 = {abs(two - 2):.1e}; "
                           f"truncation doubling worst change {worst:.1e} for |z| <= 0.9")


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "heunlocal.cli", *args], capture_output=True, text=True)


def test_criterion_9_cli_end_to_end():
    import json
    outcomes = []
    for v in pg.sets(pg.exact_general, 3, seed=101):
        flags = [f"--{n}={v.to_json()[n]}" for n in ("k", "alpha", "beta", "gamma", "delta", "w")]
        proc = _cli("compare", *flags, "--mode", "exact", "-N", "12")
        meta = json.loads(proc.stdout)["meta"] if proc.returncode == 0 else {}
        outcomes.append(proc.returncode == 0 and meta.get("max_abs_discrepancy") == "0")
    bad = _cli("coeffs", "--k=1/2", "--alpha=1", "--beta=2", "--gamma=-2", "--delta=0", "--w=1")
    ok = all(outcomes) and bad.returncode == 2
    assert record("9", ok, f"exact compare on 3 criterion-1 sets: {sum(outcomes)}/3 zero discrepancy with exit 0; "
                           f"gamma = -2 exits {bad.returncode}")
