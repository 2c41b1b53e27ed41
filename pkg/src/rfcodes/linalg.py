"""Gaussian elimination over a finite field, on matrices of element indices."""
from __future__ import annotations

from typing import Sequence


def rref(field, rows: Sequence[Sequence[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivots are chosen as the first row with a nonzero entry in the column.
    """
    M = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(M)) if M[i][c]), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        inv = field.inv(M[r][c])
        M[r] = [field.mul(inv, x) for x in M[r]]
        pivot_row = M[r]
        for i in range(len(M)):
            t = M[i][c]
            if i != r and t:
                M[i] = [field.sub(x, field.mul(t, y)) for x, y in zip(M[i], pivot_row)]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(field, rows: Sequence[Sequence[int]], ncols: int) -> int:
    return len(rref(field, rows, ncols)[1])


def nullspace(field, rows: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Basis of the right kernel; one vector per free column, in column order."""
    R, pivots = rref(field, rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [0] * ncols
        v[free] = 1
        for row, pc in zip(R, pivots):
            v[pc] = field.neg(row[free])
        basis.append(v)
    return basis
