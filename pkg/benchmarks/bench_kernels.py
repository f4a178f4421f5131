"""Time the compiled and pure-Python float kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import timeit

from heunlocal import kernels
from heunlocal.closed_form import _general_factors
from heunlocal.params import HeunValentParams, to_canonical


def cases():
    v = HeunValentParams.make("float", k=0.6, alpha=1.3 + 0.2j, beta=0.7, gamma=2.1, delta=-0.4, w=0.9 - 0.3j)
    c = to_canonical(v)
    rec_args = (c.alpha, c.beta, c.gamma, c.delta, c.epsilon, c.a, c.q)
    yield "recurrence N=20000", lambda b: kernels.recurrence_sweep_float(*rec_args, 20000, backend=b)
    base, R, W, k2 = _general_factors(v, 400, with_w=True)
    yield "dp table N=400", lambda b: kernels.dp_sweep_float(base, R, W, k2, 1.0, 400, backend=b)
    base, R, W, k2 = _general_factors(v, 1500, with_w=False)
    yield "column sums N=1500", lambda b: kernels.dp_column_sums_float(base, R, W, k2, 1.0, 1500, v.w, backend=b)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not kernels.HAVE_COMPILED:
        print("compiled extension not available; only the Python backend can run")
    print(f"{'kernel':<22}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, fn in cases():
        py = min(timeit.repeat(lambda: fn("python"), number=1, repeat=args.repeat))
        if kernels.HAVE_COMPILED:
            cy = min(timeit.repeat(lambda: fn("cython"), number=1, repeat=args.repeat))
            print(f"{name:<22}{py:>12.4f}{cy:>12.5f}{py / cy:>9.0f}x")
        else:
            print(f"{name:<22}{py:>12.4f}{'-':>12}{'-':>10}")


if __name__ == "__main__":
    main()
