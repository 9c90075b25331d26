from fractions import Fraction
from typing import List, Sequence, Tuple

import sympy

from neighborly.utils.rationals import from_sympy, to_sympy

Vector = Tuple[Fraction, ...]


def to_matrix(rows: Sequence[Sequence[Fraction]]) -> sympy.Matrix:
    return sympy.Matrix([[to_sympy(Fraction(v)) for v in row] for row in rows])


def lifted_rows(points: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    """The (d+1) x n matrix whose columns are the points with a trailing 1."""
    if not points:
        return []
    d = len(points[0])
    rows = [[Fraction(p[t]) for p in points] for t in range(d)]
    rows.append([Fraction(1)] * len(points))
    return rows


def determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    return from_sympy(to_matrix(rows).det(method="bareiss"))


def determinant_sign(rows: Sequence[Sequence[Fraction]]) -> int:
    value = determinant(rows)
    return (value > 0) - (value < 0)


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows:
        return 0
    return int(to_matrix(rows).rank())


def nullspace(rows: Sequence[Sequence[Fraction]]) -> List[Vector]:
    """Kernel basis read off the reduced row echelon form.

    One vector per free column, with a 1 in that column and 0 in the other
    free columns, so the basis is fully determined by the input.
    """
    return [tuple(from_sympy(v) for v in column) for column in to_matrix(rows).nullspace()]


def transpose(rows: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    return [list(column) for column in zip(*rows)]


def mat_vec(rows: Sequence[Sequence[Fraction]], vector: Sequence[Fraction]) -> Vector:
    return tuple(sum((a * x for a, x in zip(row, vector)), Fraction(0)) for row in rows)
