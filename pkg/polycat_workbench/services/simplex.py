"""
Exact Simplex
Two-phase tableau simplex over Fractions with Bland's rule
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

_logger = logging.getLogger(__name__)

OPTIMAL = 'optimal'
INFEASIBLE = 'infeasible'
UNBOUNDED = 'unbounded'


@dataclass
class LPResult:
    status: str
    value: Optional[Fraction] = None
    solution: Optional[List[Fraction]] = None


class SimplexTableau:
    """
    Tableau for min c.x subject to A x = b, x >= 0

    Rows hold [A | b] in the current basis; cost holds reduced costs with
    the negated objective value in its last slot.
    """

    def __init__(self, A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]):
        self.m = len(A)
        self.n = len(A[0]) if A else 0
        self.rows: List[List[Fraction]] = []
        for row, rhs in zip(A, b):
            row = [Fraction(x) for x in row] + [Fraction(rhs)]
            if row[-1] < 0:
                row = [-x for x in row]
            self.rows.append(row)
        self.basis: List[int] = []
        self.cost: List[Fraction] = []
        self.pivots = 0

    def pivot(self, i: int, j: int):
        piv = self.rows[i][j]
        self.rows[i] = [x / piv for x in self.rows[i]]
        for k in range(len(self.rows)):
            if k != i and self.rows[k][j] != 0:
                factor = self.rows[k][j]
                self.rows[k] = [a - factor * p for a, p in zip(self.rows[k], self.rows[i])]
        if self.cost[j] != 0:
            factor = self.cost[j]
            self.cost = [a - factor * p for a, p in zip(self.cost, self.rows[i])]
        self.basis[i] = j
        self.pivots += 1

    def set_cost(self, c: Sequence[Fraction]):
        """Reduced costs of c relative to the current basis"""
        self.cost = [Fraction(x) for x in c] + [Fraction(0)]
        for i, j in enumerate(self.basis):
            if self.cost[j] != 0:
                factor = self.cost[j]
                self.cost = [a - factor * p for a, p in zip(self.cost, self.rows[i])]

    def bland_step(self, columns: int) -> str:
        entering = next((j for j in range(columns) if self.cost[j] < 0), None)
        if entering is None:
            return OPTIMAL
        candidates = [(self.rows[i][-1] / self.rows[i][entering], self.basis[i], i)
                      for i in range(len(self.rows)) if self.rows[i][entering] > 0]
        if not candidates:
            return UNBOUNDED
        _, _, leaving = min(candidates)
        self.pivot(leaving, entering)
        return 'go_on'

    def run(self, columns: int) -> str:
        while True:
            status = self.bland_step(columns)
            if status != 'go_on':
                return status

    def value(self) -> Fraction:
        return -self.cost[-1]

    def solution(self, columns: int) -> List[Fraction]:
        x = [Fraction(0)] * columns
        for i, j in enumerate(self.basis):
            if j < columns:
                x[j] = self.rows[i][-1]
        return x


def minimize(c: Sequence[Fraction], A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> LPResult:
    """
    Solve min c.x s.t. A x = b, x >= 0 exactly

    Phase one drives artificial variables out; redundant rows are dropped.

    Returns:
        LPResult with status optimal, infeasible or unbounded
    """
    n = len(c)
    if not A:
        # no constraints: optimum is 0 unless some cost is negative
        if any(Fraction(x) < 0 for x in c):
            return LPResult(UNBOUNDED)
        return LPResult(OPTIMAL, Fraction(0), [Fraction(0)] * n)
    tableau = SimplexTableau(A, b)
    m = tableau.m
    for i, row in enumerate(tableau.rows):
        artificial = [Fraction(1) if k == i else Fraction(0) for k in range(m)]
        tableau.rows[i] = row[:-1] + artificial + row[-1:]
    tableau.basis = [n + i for i in range(m)]
    tableau.set_cost([Fraction(0)] * n + [Fraction(1)] * m)
    tableau.run(n + m)
    if tableau.value() > 0:
        _logger.debug(f"LP infeasible after {tableau.pivots} pivots")
        return LPResult(INFEASIBLE)
    keep = []
    for i, j in enumerate(tableau.basis):
        if j < n:
            keep.append(i)
            continue
        column = next((k for k in range(n) if tableau.rows[i][k] != 0), None)
        if column is not None:
            tableau.pivot(i, column)
            keep.append(i)
    tableau.rows = [tableau.rows[i][:n] + tableau.rows[i][-1:] for i in keep]
    tableau.basis = [tableau.basis[i] for i in keep]
    tableau.set_cost(c)
    status = tableau.run(n)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    _logger.debug(f"LP optimum {tableau.value()} after {tableau.pivots} pivots")
    return LPResult(OPTIMAL, tableau.value(), tableau.solution(n))
