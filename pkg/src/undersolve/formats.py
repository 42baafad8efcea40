"""Reading and writing matrices, vectors, and solve reports.

CSV carries one matrix row per line; Matrix Market is supported in both
coordinate and array variants (real, general).  Reports serialize to
JSON with sorted keys so identical runs produce byte-identical output;
floats use shortest round-trip repr, which re-parses bit-identically.
"""

import json
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DimensionMismatch, ParseError, RaggedRows, UnsupportedFormat
from .iterate import SolveReport, SolverConfig
from .convergence import ConditionReport, NormConditionRecord
from .linalg import as_matrix, as_vector


@dataclass(frozen=True)
class ProblemFile:
    a: np.ndarray
    b: np.ndarray
    x0: Optional[np.ndarray] = None
    name: str = ""

    def __post_init__(self):
        if self.a.shape[0] != self.b.shape[0]:
            raise DimensionMismatch("rhs length must equal the matrix row count")
        if self.x0 is not None and self.x0.shape[0] != self.a.shape[1]:
            raise DimensionMismatch("x0 length must equal the matrix column count")


# ---------------------------------------------------------------- CSV

def read_csv_matrix(text: str) -> np.ndarray:
    rows = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip().rstrip("\r")
        if not line:
            continue
        tokens = [t.strip() for t in line.split(",")]
        try:
            row = [float(t) for t in tokens]
        except ValueError:
            raise ParseError(f"non-numeric token in {line!r}", line=lineno)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise RaggedRows(f"row on line {lineno} has {len(row)} entries, expected {width}")
        rows.append(row)
    if not rows:
        raise ParseError("no rows found")
    return as_matrix(rows)


def write_csv_matrix(a) -> str:
    a = as_matrix(a)
    return "\n".join(",".join(repr(v) for v in row) for row in a.tolist()) + "\n"


def read_csv_vector(text: str) -> np.ndarray:
    mat = read_csv_matrix(text)
    if mat.shape[1] == 1:
        return mat[:, 0].copy()
    if mat.shape[0] == 1:
        return mat[0].copy()
    raise DimensionMismatch("vector file must have a single row or column")


def write_csv_vector(v) -> str:
    v = as_vector(v)
    return "\n".join(repr(x) for x in v.tolist()) + "\n"


# ------------------------------------------------------- Matrix Market

MM_BANNER = "%%MatrixMarket"


def read_matrix_market(text: str) -> np.ndarray:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty input", line=1)
    header = lines[0].rstrip("\r").split()
    if len(header) != 5 or header[0] != MM_BANNER:
        raise ParseError("malformed MatrixMarket header", line=1)
    _, obj, form, field, symmetry = [h.lower() for h in header]
    if obj != "matrix":
        raise UnsupportedFormat(f"unsupported object {obj!r}")
    if form not in ("coordinate", "array"):
        raise UnsupportedFormat(f"unsupported format {form!r}")
    if field not in ("real", "integer"):
        raise UnsupportedFormat(f"unsupported field {field!r}")
    if symmetry != "general":
        raise UnsupportedFormat(f"unsupported symmetry {symmetry!r}")

    body = [(i + 1, ln.rstrip("\r").strip()) for i, ln in enumerate(lines)]
    data = [(no, ln) for no, ln in body[1:] if ln and not ln.startswith("%")]
    if not data:
        raise ParseError("missing size line")
    size_no, size_line = data[0]
    tokens = size_line.split()
    entries = data[1:]

    if form == "coordinate":
        if len(tokens) != 3:
            raise ParseError("coordinate size line needs 'rows cols nnz'", line=size_no)
        try:
            m, n, nnz = (int(t) for t in tokens)
        except ValueError:
            raise ParseError("non-integer size line", line=size_no)
        if len(entries) != nnz:
            raise ParseError(f"expected {nnz} entries, found {len(entries)}", line=size_no)
        mat = np.zeros((m, n))
        for no, ln in entries:
            parts = ln.split()
            if len(parts) != 3:
                raise ParseError("coordinate entry needs 'i j value'", line=no)
            try:
                i, j, v = int(parts[0]), int(parts[1]), float(parts[2])
            except ValueError:
                raise ParseError("malformed coordinate entry", line=no)
            if not (1 <= i <= m and 1 <= j <= n):
                raise ParseError("coordinate entry out of range", line=no)
            mat[i - 1, j - 1] = v
        return mat

    if len(tokens) != 2:
        raise ParseError("array size line needs 'rows cols'", line=size_no)
    try:
        m, n = (int(t) for t in tokens)
    except ValueError:
        raise ParseError("non-integer size line", line=size_no)
    if len(entries) != m * n:
        raise ParseError(f"expected {m * n} values, found {len(entries)}", line=size_no)
    values = []
    for no, ln in entries:
        try:
            values.append(float(ln))
        except ValueError:
            raise ParseError(f"malformed value {ln!r}", line=no)
    # array format stores column-major
    return np.array(values).reshape((n, m)).T.copy()


def write_matrix_market(a, form: str = "coordinate") -> str:
    a = as_matrix(a)
    m, n = a.shape
    if form == "coordinate":
        lines = [f"{MM_BANNER} matrix coordinate real general"]
        nz = [(i, j, float(a[i, j])) for i in range(m) for j in range(n)
              if a[i, j] != 0.0]
        lines.append(f"{m} {n} {len(nz)}")
        lines.extend(f"{i + 1} {j + 1} {repr(v)}" for i, j, v in nz)
    elif form == "array":
        lines = [f"{MM_BANNER} matrix array real general", f"{m} {n}"]
        lines.extend(repr(float(a[i, j])) for j in range(n) for i in range(m))
    else:
        raise ValueError(f"unknown MatrixMarket form: {form!r}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------ reports

def _conditions_to_obj(report: ConditionReport):
    if report is None:
        return None
    return {
        "method": report.method,
        "overall_certified": report.overall_certified,
        "per_norm": [
            {
                "norm": r.norm_kind,
                "c1": r.c1,
                "c2": r.c2,
                "certified": r.certified,
                "cauchy_bound": r.cauchy_bound,
            }
            for r in report.per_norm
        ],
    }


def _conditions_from_obj(obj):
    if obj is None:
        return None
    return ConditionReport(
        method=obj["method"],
        per_norm=tuple(
            NormConditionRecord(
                norm_kind=r["norm"],
                c1=r["c1"],
                c2=r["c2"],
                certified=r["certified"],
                cauchy_bound=r["cauchy_bound"],
            )
            for r in obj["per_norm"]
        ),
        overall_certified=obj["overall_certified"],
    )


def write_report(report: SolveReport) -> str:
    obj = {
        "status": report.status,
        "error": report.error,
        "iterations": report.iterations,
        "residual_norms": list(report.residual_norms),
        "solution": list(np.asarray(report.solution, dtype=float)),
        "column_perm": list(report.column_perm) if report.column_perm else None,
        "config": {
            "method": report.config.method,
            "epsilon": report.config.epsilon,
            "max_iterations": report.config.max_iterations,
            "residual_norm": report.config.residual_norm,
            "permutation_policy": report.config.permutation_policy,
            "stagnation_window": report.config.stagnation_window,
        },
        "conditions": _conditions_to_obj(report.conditions),
    }
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def read_report(text: str) -> SolveReport:
    obj = json.loads(text)
    cfg = obj["config"]
    return SolveReport(
        status=obj["status"],
        solution=np.array(obj["solution"], dtype=float),
        iterations=obj["iterations"],
        residual_norms=list(obj["residual_norms"]),
        config=SolverConfig(
            method=cfg["method"],
            epsilon=cfg["epsilon"],
            max_iterations=cfg["max_iterations"],
            residual_norm=cfg["residual_norm"],
            permutation_policy=cfg["permutation_policy"],
            stagnation_window=cfg["stagnation_window"],
        ),
        conditions=_conditions_from_obj(obj.get("conditions")),
        error=obj.get("error"),
        column_perm=tuple(obj["column_perm"]) if obj.get("column_perm") else None,
    )


# --------------------------------------------------------- file paths

def load_matrix_file(path) -> np.ndarray:
    text = open(path, encoding="utf-8").read()
    if str(path).lower().endswith(".mtx"):
        return read_matrix_market(text)
    return read_csv_matrix(text)


def load_vector_file(path) -> np.ndarray:
    text = open(path, encoding="utf-8").read()
    if str(path).lower().endswith(".mtx"):
        mat = read_matrix_market(text)
        if mat.shape[1] == 1:
            return mat[:, 0].copy()
        if mat.shape[0] == 1:
            return mat[0].copy()
        raise DimensionMismatch("vector file must have a single row or column")
    return read_csv_vector(text)
