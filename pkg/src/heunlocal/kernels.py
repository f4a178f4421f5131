"""Kernel selection: compiled ``_kernels`` when importable, else ``_fallback``.

Set ``HEUNLOCAL_PURE_PYTHON=1`` to force the fallback.
"""

import os

import numpy as np

from . import _fallback

try:
    if os.environ.get("HEUNLOCAL_PURE_PYTHON"):
        raise ImportError("pure-Python kernels forced")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

HAVE_COMPILED = _compiled is not None
BACKEND = "cython" if HAVE_COMPILED else "python"


def recurrence_sweep_float(alpha, beta, gamma, delta, epsilon, a, q, N, backend=None):
    """Float recurrence as a complex ndarray of length ``N + 1``."""
    if _use_compiled(backend):
        return _compiled.recurrence_sweep(alpha, beta, gamma, delta, epsilon, a, q, N)
    return np.array(_fallback.recurrence_sweep(alpha, beta, gamma, delta, epsilon, a, q, N),
                    dtype=np.complex128)


def dp_sweep_float(base, R, W, scale_self, scale_acc, N, backend=None):
    """Float nested-sum table as a complex ``(N+1, N+1)`` ndarray."""
    if _use_compiled(backend):
        return _compiled.dp_sweep(base, R, W, complex(scale_self), complex(scale_acc), N)
    return np.array(_fallback.dp_sweep([complex(x) for x in base], [complex(x) for x in R],
                                       [complex(x) for x in W], complex(scale_self),
                                       complex(scale_acc), N), dtype=np.complex128)


def _use_compiled(backend):
    if backend is None:
        return HAVE_COMPILED
    if backend == "cython":
        if not HAVE_COMPILED:
            raise ImportError("compiled kernels are not built")
        return True
    if backend == "python":
        return False
    raise ValueError(f"unknown backend {backend!r}")


def dp_column_sums_float(base, R, W, scale_self, scale_acc, N, x, backend=None):
    """Float column sums ``sum_m f[m][n] x^m`` as a complex ndarray."""
    if _use_compiled(backend):
        return _compiled.dp_column_sums(base, R, W, complex(scale_self), complex(scale_acc), N, complex(x))
    return np.array(_fallback.dp_column_sums([complex(v) for v in base], [complex(v) for v in R],
                                             [complex(v) for v in W], complex(scale_self),
                                             complex(scale_acc), N, complex(x)), dtype=np.complex128)
