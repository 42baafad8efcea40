"""Independent brute-force reimplementations used to cross-check the
library.  Everything here is deliberately written with plain loops (or
exact rational arithmetic) and must stay independent of the package
internals it checks."""

from fractions import Fraction

import numpy as np


def brute_sign(x):
    if x > 0:
        return 1.0
    if x < 0:
        return -1.0
    return 0.0


def brute_sign_matrix(a):
    m, n = len(a), len(a[0])
    return [[brute_sign(a[i][j]) for i in range(m)] for j in range(n)]


def brute_row_one_norms(a):
    return [sum(abs(v) for v in row) for row in a]


def brute_baseline_step(a, b, z):
    m, n = len(a), len(a[0])
    d = []
    for i in range(m):
        norm = sum(abs(v) for v in a[i])
        resid = b[i] - sum(a[i][j] * z[j] for j in range(n))
        d.append(resid / (m * norm))
    s = brute_sign_matrix(a)
    return [z[j] + sum(s[j][i] * d[i] for i in range(m)) for j in range(n)]


def brute_jacobi_step(b_mat, rhs, x):
    m = len(b_mat)
    out = []
    for i in range(m):
        acc = rhs[i]
        for j in range(m):
            if j != i:
                acc -= b_mat[i][j] * x[j]
        out.append(acc / b_mat[i][i])
    return out


def brute_gauss_seidel_step(b_mat, rhs, x):
    m = len(b_mat)
    out = list(x)
    for i in range(m):
        acc = rhs[i]
        for j in range(i):
            acc -= b_mat[i][j] * out[j]
        for j in range(i + 1, m):
            acc -= b_mat[i][j] * x[j]
        out.append(0)
        out[i] = acc / b_mat[i][i]
    return out[:m]


def rational_rref(rows):
    """Exact Gauss-Jordan elimination over the rationals.

    Returns (matrix of Fractions, pivot column list)."""
    work = [[Fraction(v) for v in row] for row in rows]  # exact, floats included
    m = len(work)
    n = len(work[0])
    pivots = []
    r = 0
    for c in range(n):
        if r >= m:
            break
        piv = next((i for i in range(r, m) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        pv = work[r][c]
        work[r] = [v / pv for v in work[r]]
        for i in range(m):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    return work, pivots


def rational_rref_floats(rows):
    mat, pivots = rational_rref(rows)
    return np.array([[float(v) for v in row] for row in mat]), pivots


def random_partitioned(rng, m=None, n=None, lo=2, hi=10):
    """Random well-posed underdetermined system: nonzero head diagonal,
    nonzero tail row norms (resampled until both hold)."""
    if m is None:
        m = int(rng.integers(lo, hi + 1))
    if n is None:
        n = int(rng.integers(m + 1, 2 * m + 6))
    while True:
        a = rng.uniform(-10.0, 10.0, size=(m, n))
        head = a[:, :m]
        tail = a[:, m:]
        if np.all(np.abs(np.diag(head)) > 0.5) and \
                np.all(np.abs(tail).sum(axis=1) > 0.5):
            return a, m, n
