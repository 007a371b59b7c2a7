"""Coxeter matrix ingestion, Gram matrices and named presets.

A Coxeter system is described by its symmetric matrix of orders m_ij with
m_ii = 1 and m_ij in {2, 3, ...} or infinity for i != j.  Infinity is
encoded as the integer 0 throughout (including JSON input) so matrices stay
integer-typed.  The classical geometric representation is used: the Gram
matrix has unit diagonal, entries -cos(pi/m_ij) for finite labels, and
exactly -1 for infinite ones.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .scalar import AlgebraicScalar, FieldSpec, make_field

INFINITY = 0  # matrix encoding of an infinite label


@dataclass(frozen=True)
class CoxeterSystem:
    rank: int
    matrix: tuple  # tuple of tuples of int, 0 = infinity
    field: FieldSpec
    gram: tuple  # tuple of tuples of AlgebraicScalar

    def label(self, i: int, j: int) -> int:
        return self.matrix[i][j]

    def is_infinite_label(self, i: int, j: int) -> bool:
        return self.matrix[i][j] == INFINITY

    def __repr__(self):
        return f"CoxeterSystem(rank={self.rank}, matrix={self.matrix})"


def build_system(matrix) -> CoxeterSystem:
    """Validate a Coxeter matrix and attach its exact Gram matrix."""
    rows = [tuple(int(x) for x in row) for row in matrix]
    rank = len(rows)
    if rank < 1:
        raise ValueError("rank must be at least 1")
    for i, row in enumerate(rows):
        if len(row) != rank:
            raise ValueError("matrix is not square")
        if row[i] != 1:
            raise ValueError(f"diagonal entry m[{i}][{i}] must be 1")
        for j in range(rank):
            if i != j and row[j] != INFINITY and row[j] < 2:
                raise ValueError(f"off-diagonal entry m[{i}][{j}] must be >= 2 or 0 (infinity)")
            if rows[j][i] != row[j]:
                raise ValueError("matrix is not symmetric")
    labels = [rows[i][j] for i in range(rank) for j in range(i + 1, rank) if rows[i][j] != INFINITY]
    field = make_field(labels)
    minus_one = field.rational(-1)
    gram = []
    for i in range(rank):
        grow = []
        for j in range(rank):
            if i == j:
                grow.append(field.one)
            elif rows[i][j] == INFINITY:
                grow.append(minus_one)
            else:
                grow.append(-field.cos_value(rows[i][j]))
        gram.append(tuple(grow))
    return CoxeterSystem(rank, tuple(rows), field, tuple(gram))


def _path_matrix(labels):
    """Path-shaped Coxeter graph: consecutive generators joined by ``labels``."""
    rank = len(labels) + 1
    m = [[2] * rank for _ in range(rank)]
    for i in range(rank):
        m[i][i] = 1
    for i, lab in enumerate(labels):
        m[i][i + 1] = m[i + 1][i] = lab
    return m


def preset(name: str) -> CoxeterSystem:
    """Named systems; parameterized names are ``universal:k``, ``rank3:m,n``
    and ``triangle:p,q,r``."""
    if name == "A2":
        return build_system(_path_matrix([3]))
    if name == "B2":
        return build_system(_path_matrix([4]))
    if name == "H3":
        return build_system(_path_matrix([5, 3]))
    if name == "Dinf":
        return build_system([[1, INFINITY], [INFINITY, 1]])
    if name == "Atilde2":
        return build_system([[1, 3, 3], [3, 1, 3], [3, 3, 1]])
    if name == "Gtilde2":
        # generators (1,2,3) with orders m12 = 6, m23 = 3, m13 = 2
        return build_system(_path_matrix([6, 3]))
    if name.startswith("universal:"):
        k = int(name.split(":", 1)[1])
        if k < 2:
            raise ValueError("universal:k needs k >= 2")
        m = [[INFINITY] * k for _ in range(k)]
        for i in range(k):
            m[i][i] = 1
        return build_system(m)
    if name.startswith("rank3:"):
        a, b = (int(x) for x in name.split(":", 1)[1].split(","))
        return build_system(_path_matrix([a, b]))
    if name.startswith("triangle:"):
        p, q, r = (int(x) for x in name.split(":", 1)[1].split(","))
        return build_system([[1, p, r], [p, 1, q], [r, q, 1]])
    raise ValueError(f"unknown preset {name!r}")


def system_from_json(text: str) -> CoxeterSystem:
    """JSON form: {"rank": r, "m": [[...]]} with 0 meaning infinity."""
    data = json.loads(text)
    ranks = int(data["rank"])
    m = data["m"]
    if len(m) != ranks:
        raise ValueError("rank field disagrees with matrix size")
    return build_system(m)


def system_to_json(sys: CoxeterSystem) -> str:
    return json.dumps({"rank": sys.rank, "m": [list(r) for r in sys.matrix]})
