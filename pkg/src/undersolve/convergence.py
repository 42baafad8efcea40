"""Sufficient-condition checks for the generalized iterations.

Convergence is certified per matrix norm: both factor bounds must hold in
the SAME submultiplicative norm (1, infinity, or Frobenius).  Failure to
certify never means divergence; the conditions are sufficient only.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ZeroDiagonal, ZeroTailRow
from .iterate import GENERALIZED_METHODS, METHOD_GJACOBI
from .linalg import (
    NORM_KINDS,
    NORM_ONE,
    matrix_norm,
    right_divide_lower,
    row_one_norms,
    sign_matrix,
    singularity_threshold,
)
from .partition import PartitionedSystem


@dataclass(frozen=True)
class NormConditionRecord:
    norm_kind: str
    c1: float          # ||I - B D^-1|| (Jacobi) or ||I - B L^-1|| (Gauss-Seidel)
    c2: float          # ||m I - tail * s(tail) * N(tail)^-1||
    certified: bool    # c1 < 1 and c2 < m, strictly, in this norm
    cauchy_bound: float  # informational step-size bound, same norm


@dataclass(frozen=True)
class ConditionReport:
    method: str
    per_norm: tuple
    overall_certified: bool


def check_conditions(sys: PartitionedSystem, method: str) -> ConditionReport:
    """Evaluate both convergence-condition factors in every supported norm."""
    if method not in GENERALIZED_METHODS:
        raise ValueError(f"conditions are defined for {GENERALIZED_METHODS}, got {method!r}")
    m = sys.m
    norms_tail = row_one_norms(sys.b_tail)
    if np.any(norms_tail == 0.0):
        raise ZeroTailRow("tail block has an all-zero row")
    identity = np.eye(m)

    # tail factor: m*I - B~ s(B~) N(B~)^-1, shared by both methods
    tail_product = (sys.b_tail @ sign_matrix(sys.b_tail)) / norms_tail[np.newaxis, :]
    tail_factor = m * identity - tail_product

    if method == METHOD_GJACOBI:
        diag = np.diag(sys.b_head)
        if np.any(np.abs(diag) <= singularity_threshold(sys.b_head)):
            raise ZeroDiagonal("head block has a zero diagonal entry")
        head_factor = identity - sys.b_head / diag[np.newaxis, :]
        inv_applied = lambda mat: mat / diag[:, np.newaxis]   # D^-1 @ mat
    else:
        lower = np.tril(sys.b_head)
        head_factor = identity - right_divide_lower(sys.b_head, lower)
        inv_applied = lambda mat: np.linalg.solve(lower, mat)

    sign_scaled = sign_matrix(sys.b_tail) / norms_tail[np.newaxis, :]

    records = []
    for kind in NORM_KINDS:
        c1 = matrix_norm(head_factor, kind)
        c2 = matrix_norm(tail_factor, kind)
        bound = (matrix_norm(inv_applied(identity - tail_product / m), kind)
                 + matrix_norm(sign_scaled, kind) / m)
        records.append(NormConditionRecord(
            norm_kind=kind,
            c1=c1,
            c2=c2,
            certified=bool(c1 < 1.0 and c2 < m),
            cauchy_bound=bound,
        ))
    return ConditionReport(
        method=method,
        per_norm=tuple(records),
        overall_certified=any(r.certified for r in records),
    )


def contraction_factor(report: ConditionReport, m: int) -> Optional[float]:
    """Best certified per-step residual ratio bound, c1 * (c2 / m);
    None when no norm certifies."""
    certified = [r.c1 * (r.c2 / m) for r in report.per_norm if r.certified]
    return min(certified) if certified else None


def certifying_records(report: ConditionReport):
    return [r for r in report.per_norm if r.certified]
