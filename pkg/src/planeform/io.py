"""File formats: matrix JSON documents and Graphviz DOT digraphs.

A matrix document is a JSON object::

    {"n": 2, "mode": "exact", "entries": [["0", "-1"], ["1", "2"]]}

with ``mode`` either ``"exact"`` or ``"approx"`` and every entry in the
scalar text form. Plane matrices add ``"partition": "1,1"`` and
``"coeffs": [["-1", "2"]]``.
"""

from __future__ import annotations

import json
from typing import Any

from .arith import EXACT, NUMERIC, format_scalar, is_zero, parse_scalar
from .errors import ArgumentError, ParseError
from .linalg import Matrix
from .partition import Partition
from .plane import PlaneMatrix, plane_matrix

FILE_MODES = {EXACT: "exact", NUMERIC: "approx"}
_FROM_FILE = {"exact": EXACT, "approx": NUMERIC, "numeric": NUMERIC}


def matrix_to_dict(m: Matrix | PlaneMatrix) -> dict:
    plane = m if isinstance(m, PlaneMatrix) else None
    mat = plane.matrix if plane else m
    doc: dict[str, Any] = {
        "n": mat.n,
        "mode": FILE_MODES[mat.mode],
        "entries": [[format_scalar(x) for x in row] for row in mat.rows],
    }
    if plane:
        doc["partition"] = str(plane.partition)
        doc["coeffs"] = [[format_scalar(a) for a in c] for c in plane.coeffs]
    return doc


def dumps_matrix(m: Matrix | PlaneMatrix) -> str:
    doc = matrix_to_dict(m)
    rows = ",\n    ".join(json.dumps(r) for r in doc.pop("entries"))
    head = json.dumps(doc)[1:-1]
    # one matrix row per line keeps diffs readable
    return "{" + head + ',\n  "entries": [\n    ' + rows + "\n  ]\n}\n"


def matrix_from_dict(doc: dict) -> Matrix | PlaneMatrix:
    try:
        mode = _FROM_FILE[doc.get("mode", "exact")]
        entries = doc["entries"]
        n = int(doc.get("n", len(entries)))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed matrix document: {exc}") from None
    if len(entries) != n or any(len(r) != n for r in entries):
        raise ParseError(f"entries must be {n} rows of {n} scalars")
    rows = [[parse_scalar(str(x), mode) for x in r] for r in entries]
    mat = Matrix(rows, mode)
    if "partition" not in doc:
        return mat
    pi = Partition.parse(str(doc["partition"]))
    coeffs = [[parse_scalar(str(a), mode) for a in c] for c in doc.get("coeffs", [])]
    try:
        plane = plane_matrix(pi, coeffs, mode)
    except ArgumentError as exc:
        raise ParseError(f"inconsistent plane matrix document: {exc}") from None
    if not plane.matrix.allclose(mat):
        raise ParseError("entries do not match the stated partition and coefficients")
    return PlaneMatrix(pi, plane.coeffs, mat)


def loads_matrix(text: str) -> Matrix | PlaneMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("a matrix document must be a JSON object")
    return matrix_from_dict(doc)


def read_matrix(path: str) -> Matrix | PlaneMatrix:
    with open(path, encoding="utf-8") as fh:
        return loads_matrix(fh.read())


def write_matrix(m: Matrix | PlaneMatrix, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_matrix(m))


def to_dot(m: Matrix | PlaneMatrix, tol: float = 0.0) -> str:
    """Digraph with an edge ``e_j -> e_i`` for every nonzero ``m[i][j]``.

    Entries other than 1 become edge labels. Nodes are listed in index order,
    edges in (j, i) order.
    """
    mat = m.matrix if isinstance(m, PlaneMatrix) else m
    lines = ["digraph {"]
    lines += [f"  e{k + 1};" for k in range(mat.n)]
    for j in range(mat.n):
        for i in range(mat.n):
            x = mat[i, j]
            if is_zero(x, tol):
                continue
            if x == 1:
                lines.append(f"  e{j + 1} -> e{i + 1};")
            else:
                lines.append(f'  e{j + 1} -> e{i + 1} [label="{format_scalar(x)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(m: Matrix | PlaneMatrix, out_path: str) -> None:
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write(to_dot(m))


__all__ = [
    "dumps_matrix",
    "export_dot",
    "loads_matrix",
    "matrix_from_dict",
    "matrix_to_dict",
    "read_matrix",
    "to_dot",
    "write_matrix",
]
