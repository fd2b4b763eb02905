"""Gauss-Jordan elimination over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import NoSolution, Underdetermined


def rank(matrix: Sequence[Sequence]) -> int:
    rows = [[Fraction(x) for x in row] for row in matrix]
    return _reduce(rows, len(rows[0]) if rows else 0)[1]


def _reduce(rows: list[list[Fraction]], ncols: int):
    """Row-reduce in place on the first ``ncols`` columns; returns pivot columns and rank."""
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots, r


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve ``matrix @ x = rhs`` exactly.

    Raises NoSolution when the system is inconsistent and Underdetermined
    when it is consistent but the solution is not unique.
    """
    if len(matrix) != len(rhs):
        raise ValueError("matrix and right-hand side have different lengths")
    if not matrix:
        raise Underdetermined("empty system")
    ncols = len(matrix[0])
    rows = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    pivots, rk = _reduce(rows, ncols)
    for row in rows[rk:]:
        if row[-1] != 0:
            raise NoSolution("inconsistent pairing constraints")
    if rk < ncols:
        raise Underdetermined(f"rank {rk} < {ncols} unknowns")
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = rows[i][-1]
    return x
