"""Dense matrix/vector helpers and the solver-specific primitives.

All values are plain float64 numpy arrays.  Matrices are row-major 2-D
arrays, vectors are 1-D arrays.  Constructors reject NaN/Inf so every
downstream routine may assume finite inputs.
"""

import numpy as np

from .errors import DimensionMismatch, SingularTriangular

NORM_ONE = "one"
NORM_INF = "inf"
NORM_FRO = "fro"

NORM_KINDS = (NORM_ONE, NORM_INF, NORM_FRO)


def as_matrix(data) -> np.ndarray:
    """Validate and return a 2-D float64 matrix (finite entries only)."""
    a = np.array(data, dtype=float)
    if a.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D matrix, got ndim={a.ndim}")
    if a.size and not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite (no NaN/Inf)")
    return a


def as_vector(data) -> np.ndarray:
    """Validate and return a 1-D float64 vector (finite entries only)."""
    v = np.array(data, dtype=float)
    if v.ndim != 1:
        raise DimensionMismatch(f"expected a 1-D vector, got ndim={v.ndim}")
    if v.size and not np.all(np.isfinite(v)):
        raise ValueError("vector entries must be finite (no NaN/Inf)")
    return v


def sign_matrix(a: np.ndarray) -> np.ndarray:
    """Entrywise signs (+1/0/-1) of the transpose of ``a``.

    sign(0) is exactly 0; no tolerance band, the sign pattern is
    structural rather than numerical.
    """
    return np.sign(np.asarray(a, dtype=float)).T


def row_one_norms(a: np.ndarray) -> np.ndarray:
    """l1 norm of every row: result[i] = sum_j |a[i][j]|."""
    return np.abs(a).sum(axis=1)


def matrix_norm(a: np.ndarray, which: str) -> float:
    """Induced 1-norm, induced infinity-norm, or Frobenius norm."""
    a = np.asarray(a, dtype=float)
    if a.size == 0:
        return 0.0
    if which == NORM_ONE:
        return float(np.abs(a).sum(axis=0).max())
    if which == NORM_INF:
        return float(np.abs(a).sum(axis=1).max())
    if which == NORM_FRO:
        return float(np.sqrt((a * a).sum()))
    raise ValueError(f"unknown norm kind: {which!r}")


def vector_norm(v: np.ndarray, which: str) -> float:
    if which == NORM_ONE:
        return float(np.abs(v).sum())
    if which == NORM_INF:
        return float(np.abs(v).max()) if v.size else 0.0
    raise ValueError(f"unknown vector norm kind: {which!r}")


def singularity_threshold(a: np.ndarray) -> float:
    """Scale-relative zero test for pivots/diagonals: 1e-12 * ||a||_inf
    (or 1e-12 when the matrix is all zeros)."""
    scale = matrix_norm(a, NORM_INF)
    return 1e-12 * (scale if scale > 0.0 else 1.0)


def forward_substitution(l: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Solve l @ y = rhs for lower-triangular l without forming an inverse."""
    l = np.asarray(l, dtype=float)
    rhs = np.asarray(rhs, dtype=float)
    m = l.shape[0]
    if l.shape != (m, m):
        raise DimensionMismatch("triangular solve needs a square matrix")
    if rhs.shape != (m,):
        raise DimensionMismatch("right-hand side length must match matrix size")
    thr = singularity_threshold(l)
    if np.any(np.abs(np.diag(l)) <= thr):
        raise SingularTriangular("zero (or near-zero) diagonal in triangular solve")
    y = np.empty(m)
    for i in range(m):
        y[i] = (rhs[i] - l[i, :i] @ y[:i]) / l[i, i]
    return y


def back_substitution(u: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Solve u @ y = rhs for upper-triangular u; rhs may be 1-D or 2-D
    (solved column by column)."""
    u = np.asarray(u, dtype=float)
    rhs = np.asarray(rhs, dtype=float)
    m = u.shape[0]
    if u.shape != (m, m):
        raise DimensionMismatch("triangular solve needs a square matrix")
    thr = singularity_threshold(u)
    if np.any(np.abs(np.diag(u)) <= thr):
        raise SingularTriangular("zero (or near-zero) diagonal in triangular solve")
    y = np.empty_like(rhs, dtype=float)
    for i in range(m - 1, -1, -1):
        y[i] = (rhs[i] - u[i, i + 1:] @ y[i + 1:]) / u[i, i]
    return y


def right_divide_lower(b_mat: np.ndarray, l: np.ndarray) -> np.ndarray:
    """Return b_mat @ inv(l) for lower-triangular l, computed by
    triangular solves on the transposed system (X l = B)."""
    return back_substitution(l.T, np.asarray(b_mat, dtype=float).T).T
