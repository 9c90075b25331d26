"""Exact feasibility for small linear systems over the rationals.

Every decision in the geometry modules (hull intersection, separation,
sign-pattern realization, origin membership) reduces to one question: does
``A x = b`` have a solution with ``x >= 0``? This module answers it with a
phase-one simplex over ``Fraction`` using Bland's rule, so it terminates on
degenerate systems and never rounds.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence

logger = logging.getLogger(__name__)


class SimplexTableau:
    """Dense phase-one tableau.

    Columns ``0..n-1`` are the structural variables, ``n..n+m-1`` the
    artificial ones. ``cost`` holds reduced costs of the phase-one objective
    (sum of artificials); ``value`` is its current value.
    """

    def __init__(self, rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]):
        self.m = len(rows)
        self.n = len(rows[0]) if self.m else 0
        self.A: List[List[Fraction]] = []
        self.b: List[Fraction] = []
        for row, value in zip(rows, rhs):
            row = [Fraction(v) for v in row]
            value = Fraction(value)
            if value < 0:
                row = [-v for v in row]
                value = -value
            artificial = [Fraction(0)] * self.m
            artificial[len(self.A)] = Fraction(1)
            self.A.append(row + artificial)
            self.b.append(value)
        self.width = self.n + self.m
        self.basis = [self.n + i for i in range(self.m)]
        self.cost = [Fraction(0)] * self.width
        for j in range(self.n):
            self.cost[j] = -sum((self.A[i][j] for i in range(self.m)), Fraction(0))
        self.value = sum(self.b, Fraction(0))

    def pivot(self, i: int, j: int) -> None:
        piv = self.A[i][j]
        row = [v / piv for v in self.A[i]]
        self.A[i] = row
        self.b[i] = self.b[i] / piv
        for k in range(self.m):
            if k == i:
                continue
            f = self.A[k][j]
            if f:
                self.A[k] = [a - f * r for a, r in zip(self.A[k], row)]
                self.b[k] -= f * self.b[i]
        f = self.cost[j]
        if f:
            self.cost = [c - f * r for c, r in zip(self.cost, row)]
            self.value += f * self.b[i]
        self.basis[i] = j

    def bland_step(self) -> bool:
        """One pivot by Bland's rule; False once no improving column remains."""
        entering = next((j for j in range(self.width) if self.cost[j] < 0), None)
        if entering is None:
            return False
        candidates = [
            (self.b[i] / self.A[i][entering], self.basis[i], i)
            for i in range(self.m)
            if self.A[i][entering] > 0
        ]
        # phase one is bounded below by zero, so a candidate always exists
        _, _, leaving = min(candidates)
        self.pivot(leaving, entering)
        return True

    def solve(self) -> None:
        steps = 0
        while self.bland_step():
            steps += 1
        logger.debug(f"Phase one finished after {steps} pivots, residual {self.value}")

    def solution(self) -> List[Fraction]:
        x = [Fraction(0)] * self.n
        for i, var in enumerate(self.basis):
            if var < self.n:
                x[var] = self.b[i]
        return x


def find_nonnegative_solution(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> Optional[List[Fraction]]:
    """Return some x >= 0 with rows @ x == rhs, or None if none exists."""
    if not rows:
        return []
    tableau = SimplexTableau(rows, rhs)
    if tableau.n == 0:
        return [] if all(v == 0 for v in tableau.b) else None
    tableau.solve()
    if tableau.value != 0:
        return None
    x = tableau.solution()
    for row, value in zip(rows, rhs):
        if sum((Fraction(a) * xi for a, xi in zip(row, x)), Fraction(0)) != Fraction(value):
            raise ArithmeticError("Exact simplex produced a non-solution")
    return x


def join_free(x: Sequence[Fraction], offset: int, count: int) -> List[Fraction]:
    """Recover ``count`` free variables stored as (plus, minus) pairs from ``offset``."""
    return [x[offset + 2 * t] - x[offset + 2 * t + 1] for t in range(count)]
