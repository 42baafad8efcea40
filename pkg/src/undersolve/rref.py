"""Reduced row echelon form and the exact-solution pipeline.

Reducing [A b] to RREF makes the pivot-column block an exact identity,
so a generalized iteration on the reduced system restores the head block
from the tail in one sweep: every iteration lands on an exact solution.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NotUnderdetermined
from .iterate import (
    GENERALIZED_METHODS,
    METHOD_GJACOBI,
    SolveReport,
    SolverConfig,
    run_partitioned,
)
from .linalg import as_matrix, as_vector, matrix_norm
from .partition import PartitionedSystem, disassemble

DEFAULT_RREF_TOLERANCE = 1e-10


@dataclass(frozen=True)
class RrefResult:
    matrix: np.ndarray
    rank: int
    pivot_columns: tuple
    consistent: bool   # meaningful for augmented input: no pivot in last column


def rref(a, tolerance: float = DEFAULT_RREF_TOLERANCE) -> RrefResult:
    """Gauss-Jordan elimination with partial row pivoting.

    Entries at or below tolerance * ||working matrix||_inf are snapped to
    exact zero during pivot search; pivot entries are set to exactly 1 and
    the rest of each pivot column to exactly 0 by assignment.
    """
    work = as_matrix(a).copy()
    if tolerance < 0:
        raise ValueError("tolerance must be nonnegative")
    m, n = work.shape
    pivots = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        scale = matrix_norm(work, "inf")
        thr = tolerance * (scale if scale > 0 else 1.0)
        cand = np.abs(work[row:, col])
        best = int(np.argmax(cand))
        if cand[best] <= thr:
            work[row:, col][cand <= thr] = 0.0
            continue
        piv = row + best
        if piv != row:
            work[[row, piv]] = work[[piv, row]]
        work[row] /= work[row, col]
        work[row, col] = 1.0
        for r in range(m):
            if r != row and work[r, col] != 0.0:
                work[r] -= work[r, col] * work[row]
                work[r, col] = 0.0
        pivots.append(col)
        row += 1
    return RrefResult(
        matrix=work,
        rank=len(pivots),
        pivot_columns=tuple(pivots),
        consistent=(n - 1) not in pivots,
    )


def reduced_system(a, b, tolerance: float = DEFAULT_RREF_TOLERANCE):
    """RREF of the augmented [a b]; returns (result, a_bar, b_bar) with
    zero rows dropped.  a_bar keeps a's original column order."""
    a = as_matrix(a)
    b = as_vector(b)
    aug = np.column_stack([a, b])
    result = rref(aug, tolerance)
    r = result.rank if result.consistent else result.rank - 1
    a_bar = result.matrix[:r, :-1].copy()
    b_bar = result.matrix[:r, -1].copy()
    return result, a_bar, b_bar


def exact_solve(a, b, x0=None, config: SolverConfig = None,
                tolerance: float = DEFAULT_RREF_TOLERANCE) -> SolveReport:
    """Reduce (a, b) to RREF and run a generalized method on the reduced
    system, whose pivot-led head block is the identity.

    Inconsistent systems yield a report with status "error" and error
    kind "inconsistent".  Rank-deficient consistent systems are handled
    by dropping zero rows before partitioning.
    """
    a = as_matrix(a)
    b = as_vector(b)
    m, n = a.shape
    if m >= n:
        raise NotUnderdetermined("exact solve requires m < n")
    if config is None:
        config = SolverConfig(method=METHOD_GJACOBI)
    if config.method not in GENERALIZED_METHODS:
        raise ValueError("exact solve supports the generalized methods only")
    x0 = as_vector(x0) if x0 is not None else np.zeros(n)

    result, a_bar, b_bar = reduced_system(a, b, tolerance)
    if not result.consistent:
        return SolveReport(
            status="error",
            solution=x0,
            iterations=0,
            residual_norms=[],
            config=config,
            error="inconsistent",
        )
    pivots = list(result.pivot_columns)
    free = [j for j in range(n) if j not in pivots]
    perm = pivots + free
    r = len(pivots)
    sys = PartitionedSystem(
        b_head=a_bar[:, pivots].copy(),
        b_tail=a_bar[:, free].copy(),
        rhs=b_bar,
        column_perm=tuple(perm),
        m=r,
        n=n,
    )
    split0 = disassemble(x0, perm, r)
    return run_partitioned(a_bar, b_bar, sys, split0, config)
