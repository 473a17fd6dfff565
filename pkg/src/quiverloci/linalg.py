"""Exact linear algebra over the rationals.

Matrices are lists of rows of ``Fraction`` (ints are accepted).  Ranks use
fraction-free elimination on integer rows.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Matrix = list[list[Fraction]]


def zeros(r: int, c: int) -> Matrix:
    return [[Fraction(0)] * c for _ in range(r)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def to_fraction_matrix(rows: Sequence[Sequence], r: int | None = None, c: int | None = None) -> Matrix:
    out = [[Fraction(x) for x in row] for row in rows]
    if r is not None and len(out) != r:
        raise ValueError(f"expected {r} rows, got {len(out)}")
    if c is not None and any(len(row) != c for row in out):
        raise ValueError(f"expected {c} columns")
    return out


def matmul(a: Matrix, b: Matrix, inner: int | None = None) -> Matrix:
    if not a:
        return []
    n = len(b) if inner is None else inner
    cols = len(b[0]) if b else 0
    return [[sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(cols)] for i in range(len(a))]


def transpose(a: Matrix, cols: int | None = None) -> Matrix:
    if not a:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*a)]


def _integer_rows(a: Sequence[Sequence]) -> list[list[int]]:
    rows = []
    for row in a:
        fr = [Fraction(x) for x in row]
        den = lcm(*(x.denominator for x in fr)) if fr else 1
        ints = [int(x * den) for x in fr]
        if any(ints):
            rows.append(ints)
    return rows


def rank(a: Sequence[Sequence]) -> int:
    """Rank by fraction-free Gaussian elimination."""
    rows = _integer_rows(a)
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][col]
            if f:
                row = [p[col] * rows[i][k] - f * p[k] for k in range(ncols)]
                g = 0
                for x in row:
                    g = gcd(g, x)
                rows[i] = [x // g for x in row] if g > 1 else row
        r += 1
        if r == len(rows):
            break
    return r


def rref(a: Matrix, ncols: int) -> tuple[Matrix, list[int]]:
    m = [list(map(Fraction, row)) for row in a]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def right_nullspace(a: Matrix, ncols: int) -> Matrix:
    """Basis of {x : a x = 0}, returned as the columns of an ncols x k matrix."""
    red, pivots = rref(a, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis_vectors = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis_vectors.append(v)
    return [[vec[i] for vec in basis_vectors] for i in range(ncols)]


def left_nullspace(a: Matrix, nrows: int, ncols: int) -> Matrix:
    """Basis of {y : y a = 0} as the rows of a k x nrows matrix."""
    at = [[a[i][j] for i in range(nrows)] for j in range(ncols)]
    cols = right_nullspace(at, nrows)
    k = len(cols[0]) if cols else 0
    return [[cols[i][j] for i in range(nrows)] for j in range(k)]


def solve(a: Matrix, b: Sequence, n: int) -> list[Fraction]:
    """Unique solution of a x = b for square nonsingular ``a``."""
    aug = [list(map(Fraction, row)) + [Fraction(bi)] for row, bi in zip(a, b)]
    red, pivots = rref(aug, n)
    if pivots != list(range(n)):
        raise ValueError("system is not uniquely solvable")
    return [red[i][n] for i in range(n)]


def determinant(a: Matrix) -> Fraction:
    m = [list(map(Fraction, row)) for row in a]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for i in range(col + 1, n):
            f = m[i][col] / m[col][col]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return det
