import numpy as np
import pytest

from heunlocal import kernels
from heunlocal.closed_form import closed_form_coefficients, delta0_coefficients
from heunlocal.params import HeunValentParams, to_canonical
from heunlocal.recurrence import recurrence_coefficients

needs_compiled = pytest.mark.skipif(not kernels.HAVE_COMPILED, reason="compiled extension not built")


@pytest.fixture
def float_params():
    return HeunValentParams.make("float", k=0.6, alpha=1.3 + 0.2j, beta=0.7, gamma=2.1, delta=-0.4, w=0.9 - 0.3j)


@needs_compiled
@pytest.mark.parametrize("N", [0, 1, 5, 200])
def test_recurrence_backends_agree(float_params, N):
    c = to_canonical(float_params)
    a = recurrence_coefficients(c, N, backend="cython").values
    b = recurrence_coefficients(c, N, backend="python").values
    np.testing.assert_allclose(a, b, rtol=1e-14, atol=0)


@needs_compiled
@pytest.mark.parametrize("fn", [closed_form_coefficients, delta0_coefficients])
def test_column_sum_backends_agree(float_params, fn):
    v = float_params.with_(delta=0j) if fn is delta0_coefficients else float_params
    a = fn(v, 80, backend="cython").values
    b = fn(v, 80, backend="python").values
    np.testing.assert_allclose(a, b, rtol=1e-13, atol=0)


@needs_compiled
def test_dp_sweep_backends_agree():
    rng = np.random.default_rng(3)
    base, R, W = (rng.normal(size=30) + 1j * rng.normal(size=30) for _ in range(3))
    a = kernels.dp_sweep_float(base, R, W, 0.36, 1.0, 29, backend="cython")
    b = kernels.dp_sweep_float(base, R, W, 0.36, 1.0, 29, backend="python")
    np.testing.assert_allclose(np.asarray(a), np.asarray(b), rtol=1e-13, atol=1e-300)


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.recurrence_sweep_float(1, 2, 3, 0, 1, 4, 0, 3, backend="fortran")


def test_backend_label():
    assert kernels.BACKEND in ("cython", "python")
