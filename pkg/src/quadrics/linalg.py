"""Tiny exact linear algebra over the (Gaussian) rationals.

Matrices are lists of rows of exact scalars.  Everything here is plain
Gaussian elimination; sizes never exceed a few dozen rows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Tuple

from .scalars import Scalar, coerce_scalar


def mat_copy(M):
    return [[coerce_scalar(x) for x in row] for row in M]


def rref(M) -> Tuple[List[List[Scalar]], List[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    A = mat_copy(M)
    if not A:
        return A, []
    rows, cols = len(A), len(A[0])
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        pv = A[r][c]
        A[r] = [x / pv for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A, pivots


def rank(M) -> int:
    return len(rref(M)[1])


def nullspace(M) -> List[List[Scalar]]:
    """Basis of the right kernel."""
    if not M:
        return []
    A, pivots = rref(M)
    cols = len(M[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -A[r][fc]
        basis.append([coerce_scalar(x) for x in v])
    return basis


def solve(M, rhs) -> Optional[List[Scalar]]:
    """One solution of M x = rhs, or None when inconsistent."""
    if not M:
        return [] if all(b == 0 for b in rhs) else None
    cols = len(M[0])
    aug = [row + [b] for row, b in zip(mat_copy(M), rhs)]
    A, pivots = rref(aug)
    for row in A:
        if all(x == 0 for x in row[:cols]) and row[cols] != 0:
            return None
    x = [Fraction(0)] * cols
    for r, pc in enumerate(pivots):
        if pc == cols:
            return None
        x[pc] = A[r][cols]
    return [coerce_scalar(v) for v in x]


def det(M) -> Scalar:
    A = mat_copy(M)
    n = len(A)
    sign = 1
    out = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        pv = A[k][k]
        out = out * pv
        for i in range(k + 1, n):
            if A[i][k] != 0:
                f = A[i][k] / pv
                A[i] = [x - f * y for x, y in zip(A[i], A[k])]
    return coerce_scalar(out * sign)
