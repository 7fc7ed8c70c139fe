"""Small exact linear algebra over Fractions: determinant, solve, rank.

Plain Gaussian elimination with the first nonzero pivot; everything here is
desk scale (matrices of a few dozen rows), so no pivoting strategy or
fraction-free tricks are needed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _copy(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    m = _copy(rows)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] == 0:
                continue
            factor = m[r][col] * inv
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
    return det


def solve(rows: Sequence[Sequence[Fraction]],
          rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve a square system exactly; raises ValueError when singular."""
    m = _copy(rows)
    n = len(m)
    if any(len(row) != n for row in m) or len(rhs) != n:
        raise ValueError("solve needs a square matrix and a matching vector")
    b = [Fraction(x) for x in rhs]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            b[col], b[pivot] = b[pivot], b[col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] == 0:
                continue
            factor = m[r][col] * inv
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
            b[r] -= factor * b[col]
    x = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        acc = b[r]
        for c in range(r + 1, n):
            acc -= m[r][c] * x[c]
        x[r] = acc / m[r][r]
    return x


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    m = _copy(rows)
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    r = 0
    for col in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][col]
        for i in range(r + 1, n_rows):
            if m[i][col] == 0:
                continue
            factor = m[i][col] * inv
            for c in range(col, n_cols):
                m[i][c] -= factor * m[r][c]
        r += 1
        if r == n_rows:
            break
    return r
