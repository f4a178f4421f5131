"""Pure-Python kernels.

Generic over the scalar type, so the exact (Fraction) path always runs
here; the float path uses these only when the compiled module is missing.
"""


def recurrence_sweep(alpha, beta, gamma, delta, epsilon, a, q, N):
    """Forward three-term recurrence; returns ``[c_0, ..., c_N]``.

    ``C_n`` must be non-zero for ``0 <= n < N``; callers check gamma.
    """
    one = q * 0 + 1
    c = [one]
    prev, cur = q * 0, one
    for n in range(N):
        A = (n - 1 + alpha) * (n - 1 + beta)
        B = n * ((n - 1 + gamma) * (1 + a) + a * delta + epsilon)
        C = (n + 1) * (n + gamma) * a
        nxt = ((B + q) * cur - A * prev) / C
        c.append(nxt)
        prev, cur = cur, nxt
    return c


def dp_sweep(base, R, W, scale_self, scale_acc, N):
    """Fill ``f[m][n]`` for ``0 <= m <= n <= N`` from the column recursion

        f[m][n] = scale_self * f[m][n-1] - R[n] * S[m-1][n]
        S[m-1][n] = scale_acc * S[m-1][n-1] + W[n-1] * f[m-1][n-1]

    with ``f[0][n] = base[n]`` and ``f[m][n] = 0`` for ``m > n``.
    """
    zero = base[0] * 0
    f = [list(base[: N + 1])]
    for m in range(1, N + 1):
        prev = f[m - 1]
        row = [zero] * (N + 1)
        acc = zero
        val = zero
        for n in range(m, N + 1):
            acc = scale_acc * acc + W[n - 1] * prev[n - 1]
            val = scale_self * val - R[n] * acc
            row[n] = val
        f.append(row)
    return f


def dp_column_sums(base, R, W, scale_self, scale_acc, N, x):
    """``sum_m f[m][n] x^m`` for ``n = 0..N`` without storing the table.

    Same recursion as :func:`dp_sweep`, swept one ``m``-row at a time.
    """
    zero = base[0] * 0
    prev = list(base[: N + 1])
    sums = list(prev)
    power = x * 0 + 1
    for m in range(1, N + 1):
        power = power * x
        row = [zero] * (N + 1)
        acc = zero
        val = zero
        for n in range(m, N + 1):
            acc = scale_acc * acc + W[n - 1] * prev[n - 1]
            val = scale_self * val - R[n] * acc
            row[n] = val
            sums[n] = sums[n] + val * power
        prev = row
    return sums
