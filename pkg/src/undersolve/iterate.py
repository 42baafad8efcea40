"""Stationary iteration steps and the solve driver.

Five methods are exposed:

* ``baseline``  - sign-matrix update on the full rectangular system
* ``gjacobi``   - sign-matrix update on the tail block, Jacobi sweep on the head
* ``ggs``       - sign-matrix update on the tail block, Gauss-Seidel sweep on the head
* ``jacobi``    - classical Jacobi on a square system
* ``gs``        - classical Gauss-Seidel on a square system

Step functions are pure; ``run`` wires them into a loop with residual
tracking, convergence/stagnation/divergence detection, and reporting.
"""

from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from .errors import (
    DimensionMismatch,
    NotUnderdetermined,
    SolverError,
    ZeroDiagonal,
    ZeroRow,
    ZeroTailRow,
)
from .linalg import (
    NORM_INF,
    NORM_ONE,
    as_matrix,
    as_vector,
    forward_substitution,
    row_one_norms,
    sign_matrix,
    singularity_threshold,
    vector_norm,
)
from .partition import (
    POLICY_IDENTITY,
    PartitionedSystem,
    SplitIterate,
    assemble,
    disassemble,
    partition_system,
)

METHOD_BASELINE = "baseline"
METHOD_GJACOBI = "gjacobi"
METHOD_GGS = "ggs"
METHOD_JACOBI = "jacobi"
METHOD_GS = "gs"

METHODS = (METHOD_BASELINE, METHOD_GJACOBI, METHOD_GGS, METHOD_JACOBI, METHOD_GS)
UNDERDETERMINED_METHODS = (METHOD_BASELINE, METHOD_GJACOBI, METHOD_GGS)
GENERALIZED_METHODS = (METHOD_GJACOBI, METHOD_GGS)
SQUARE_METHODS = (METHOD_JACOBI, METHOD_GS)

STATUS_CONVERGED = "converged"
STATUS_MAX_ITERATIONS = "max_iterations"
STATUS_STAGNATED = "stagnated"
STATUS_DIVERGED = "diverged"
STATUS_ERROR = "error"

DIVERGENCE_FACTOR = 1e12
STAGNATION_REL_CHANGE = 1e-14


@dataclass(frozen=True)
class SolverConfig:
    method: str = METHOD_GJACOBI
    epsilon: float = 1e-8
    max_iterations: int = 10000
    residual_norm: str = NORM_ONE
    permutation_policy: str = POLICY_IDENTITY
    stagnation_window: int = 10

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method: {self.method!r}")
        if not self.epsilon > 0:
            raise ValueError("epsilon must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")
        if self.residual_norm not in (NORM_ONE, NORM_INF):
            raise ValueError("residual norm must be 'one' or 'inf'")
        if self.stagnation_window < 2:
            raise ValueError("stagnation_window must be at least 2")


@dataclass
class SolveReport:
    status: str
    solution: np.ndarray          # original column order
    iterations: int
    residual_norms: list
    config: SolverConfig
    conditions: Optional[object] = None   # ConditionReport when available
    error: Optional[str] = None           # error kind when status == "error"
    column_perm: Optional[tuple] = None


def baseline_step(a, b, z):
    """One sign-matrix iteration on the full system: z + s(A) d with
    d[i] = (b[i] - A_i z) / (m * ||A_i||_1)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    z = np.asarray(z, dtype=float)
    m = a.shape[0]
    norms = row_one_norms(a)
    if np.any(norms == 0.0):
        raise ZeroRow("matrix has an all-zero row")
    d = (b - a @ z) / (m * norms)
    return z + sign_matrix(a) @ d


def _tail_update(sys: PartitionedSystem, x: SplitIterate):
    """Shared Step 1: sign-matrix update of the tail block."""
    norms = row_one_norms(sys.b_tail)
    if np.any(norms == 0.0):
        raise ZeroTailRow("tail block has an all-zero row")
    b_tilde = sys.rhs - sys.b_head @ x.head
    d = (b_tilde - sys.b_tail @ x.tail) / (sys.m * norms)
    return x.tail + sign_matrix(sys.b_tail) @ d


def generalized_jacobi_step(sys: PartitionedSystem, x: SplitIterate) -> SplitIterate:
    """Tail update followed by one Jacobi sweep on the head, driven by
    the freshly updated tail."""
    new_tail = _tail_update(sys, x)
    diag = np.diag(sys.b_head)
    if np.any(np.abs(diag) <= singularity_threshold(sys.b_head)):
        raise ZeroDiagonal("head block has a zero diagonal entry")
    b_hat = sys.rhs - sys.b_tail @ new_tail
    r_part = sys.b_head - np.diag(diag)
    new_head = (-r_part @ x.head + b_hat) / diag
    return SplitIterate(head=new_head, tail=new_tail)


def generalized_gauss_seidel_step(sys: PartitionedSystem, x: SplitIterate) -> SplitIterate:
    """Tail update followed by one Gauss-Seidel sweep on the head
    (forward solve with the lower triangle)."""
    new_tail = _tail_update(sys, x)
    b_hat = sys.rhs - sys.b_tail @ new_tail
    lower = np.tril(sys.b_head)
    r_part = sys.b_head - lower
    new_head = forward_substitution(lower, -r_part @ x.head + b_hat)
    return SplitIterate(head=new_head, tail=new_tail)


def classical_jacobi_step(b_mat, rhs, x):
    """x' = D^-1 (-(B - D) x + rhs) for square B."""
    b_mat = np.asarray(b_mat, dtype=float)
    diag = np.diag(b_mat)
    if np.any(np.abs(diag) <= singularity_threshold(b_mat)):
        raise ZeroDiagonal("matrix has a zero diagonal entry")
    r_part = b_mat - np.diag(diag)
    return (-r_part @ np.asarray(x, dtype=float) + np.asarray(rhs, dtype=float)) / diag


def classical_gauss_seidel_step(b_mat, rhs, x):
    """Solve L x' = -(B - L) x + rhs with L the lower triangle of B."""
    b_mat = np.asarray(b_mat, dtype=float)
    lower = np.tril(b_mat)
    r_part = b_mat - lower
    rhs_eff = -r_part @ np.asarray(x, dtype=float) + np.asarray(rhs, dtype=float)
    return forward_substitution(lower, rhs_eff)


def _iterate_loop(config, x0_full, residual_of, advance):
    """Shared driver: residual tracking plus stop conditions.

    ``residual_of`` maps the opaque iterate state to a residual norm;
    ``advance`` maps state to the next state.  Returns a SolveReport with
    the solution left as the final full vector supplied by ``advance``.
    """
    state = x0_full
    r = residual_of(state)
    history = [r]
    if r < config.epsilon:
        return state, STATUS_CONVERGED, history, None
    floor = max(r, 1e-300)
    stagnant = 0
    for _ in range(config.max_iterations):
        try:
            state = advance(state)
        except SolverError as exc:
            return state, STATUS_ERROR, history, exc
        r_new = residual_of(state)
        history.append(r_new)
        if not np.isfinite(r_new) or r_new > DIVERGENCE_FACTOR * floor:
            return state, STATUS_DIVERGED, history, None
        if r_new < config.epsilon:
            return state, STATUS_CONVERGED, history, None
        if abs(r_new - history[-2]) < STAGNATION_REL_CHANGE * max(history[-2], 1e-300):
            stagnant += 1
            if stagnant >= config.stagnation_window:
                return state, STATUS_STAGNATED, history, None
        else:
            stagnant = 0
    return state, STATUS_MAX_ITERATIONS, history, None


def run_partitioned(a, b, sys: PartitionedSystem, x0_split: SplitIterate,
                    config: SolverConfig) -> SolveReport:
    """Drive a generalized method on a pre-built partition.

    Residuals are measured against (a, b) with iterates assembled back to
    original column order, so reports are comparable across permutation
    policies.
    """
    step = (generalized_jacobi_step if config.method == METHOD_GJACOBI
            else generalized_gauss_seidel_step)

    def residual_of(split):
        full = assemble(split, sys.column_perm)
        return vector_norm(a @ full - b, config.residual_norm)

    final, status, history, exc = _iterate_loop(
        config, x0_split, residual_of, lambda s: step(sys, s))
    conditions = _try_conditions(sys, config.method)
    return SolveReport(
        status=status,
        solution=assemble(final, sys.column_perm),
        iterations=len(history) - 1,
        residual_norms=history,
        config=config,
        conditions=conditions,
        error=getattr(exc, "kind", None) if exc is not None else None,
        column_perm=sys.column_perm,
    )


def _try_conditions(sys, method):
    from .convergence import check_conditions
    try:
        return check_conditions(sys, method)
    except SolverError:
        return None


def run(a, b, x0, config: SolverConfig) -> SolveReport:
    """Solve Ax=b with the configured method starting from x0.

    The initial residual is checked first: an x0 that already meets the
    threshold converges in zero iterations.
    """
    a = as_matrix(a)
    b = as_vector(b)
    m, n = a.shape
    if b.shape != (m,):
        raise DimensionMismatch("rhs length must equal the number of rows")
    x0 = as_vector(x0) if x0 is not None else np.zeros(n)
    if x0.shape != (n,):
        raise DimensionMismatch("x0 length must equal the number of columns")

    if config.method in UNDERDETERMINED_METHODS and m >= n:
        raise NotUnderdetermined("method requires m < n")
    if config.method in SQUARE_METHODS and m != n:
        raise DimensionMismatch("classical methods require a square matrix")

    if config.method in GENERALIZED_METHODS:
        sys = partition_system(a, b, config.permutation_policy)
        split0 = disassemble(x0, sys.column_perm, m)
        return run_partitioned(a, b, sys, split0, config)

    if config.method == METHOD_BASELINE:
        advance = lambda z: baseline_step(a, b, z)
    elif config.method == METHOD_JACOBI:
        advance = lambda z: classical_jacobi_step(a, b, z)
    else:
        advance = lambda z: classical_gauss_seidel_step(a, b, z)

    residual_of = lambda z: vector_norm(a @ z - b, config.residual_norm)
    final, status, history, exc = _iterate_loop(config, x0, residual_of, advance)
    return SolveReport(
        status=status,
        solution=np.asarray(final, dtype=float),
        iterations=len(history) - 1,
        residual_norms=history,
        config=config,
        error=getattr(exc, "kind", None) if exc is not None else None,
    )
