"""Small exact linear algebra over the rationals.

Matrices are lists of rows; entries may be ints or Fractions and results are
always Fractions.  Sizes here never exceed a few hundred rows by eight
columns, so plain Gaussian elimination is the right tool.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def to_fractions(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(v) for v in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def integer_basis(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Independent integer rows with the same rational span (fraction-free echelon)."""
    echelon: list[tuple[int, list[int]]] = []
    for v in rows:
        v = [int(a) for a in v]
        for p, row in echelon:
            if v[p]:
                a, b = row[p], v[p]
                v = [a * x - b * y for x, y in zip(v, row)]
        lead = next((k for k, a in enumerate(v) if a), None)
        if lead is None:
            continue
        g = 0
        for a in v:
            g = math.gcd(g, a)
        v = [a // g for a in v]
        echelon.append((lead, v))
    return [row for _, row in echelon]


def row_reduce(rows: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Return the reduced row echelon form (nonzero rows only) and pivot columns."""
    if rows and all(isinstance(a, int) for row in rows for a in row):
        rows = integer_basis(rows)
    A = to_fractions(rows)
    if not A:
        return [], []
    ncols = len(A[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((k for k in range(r, len(A)) if A[k][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        pv = A[r][c]
        A[r] = [v / pv for v in A[r]]
        for k in range(len(A)):
            if k != r and A[k][c] != 0:
                f = A[k][c]
                A[k] = [a - f * b for a, b in zip(A[k], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_reduce(rows)[1])


def inverse(M: Sequence[Sequence]) -> Matrix:
    n = len(M)
    aug = [list(row) + e for row, e in zip(to_fractions(M), identity(n))]
    R, pivots = row_reduce(aug)
    if pivots[:n] != list(range(n)) or len(R) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R]


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Basis of {v : A v = 0}."""
    R, pivots = row_reduce(rows)
    if ncols is None:
        ncols = len(rows[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def ldl(G: Sequence[Sequence]) -> tuple[Matrix, list[Fraction]]:
    """Exact LDL^T factorisation of a symmetric positive definite matrix.

    Returns (L, D) with L unit lower triangular, so that
    x^T G x = sum_k D[k] * (x_k + sum_{j>k} L[j][k] x_j)**2.
    """
    n = len(G)
    Gf = to_fractions(G)
    L = identity(n)
    D = [Fraction(0)] * n
    for j in range(n):
        D[j] = Gf[j][j] - sum((L[j][k] ** 2 * D[k] for k in range(j)), Fraction(0))
        if D[j] <= 0:
            raise ValueError("matrix is not positive definite")
        for i in range(j + 1, n):
            s = sum((L[i][k] * L[j][k] * D[k] for k in range(j)), Fraction(0))
            L[i][j] = (Gf[i][j] - s) / D[j]
    return L, D


class Span:
    """Membership oracle for the rational span of a set of vectors.

    Stores an integral basis of the annihilator, so a membership test is a
    handful of integer dot products.
    """

    def __init__(self, vectors: Sequence[Sequence], dim: int):
        self.dim = dim
        vectors = [list(v) for v in vectors]
        self.basis, self.pivots = row_reduce(vectors) if vectors else ([], [])
        if vectors:
            ann = nullspace(vectors, dim)
        else:
            ann = identity(dim)
        self._checks = [_primitive(v) for v in ann]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def __contains__(self, v: Sequence) -> bool:
        return all(sum(a * b for a, b in zip(c, v)) == 0 for c in self._checks)


def _primitive(v: Sequence[Fraction]) -> list[int]:
    """Clear denominators of a rational vector."""
    den = 1
    for a in v:
        den = den * a.denominator // math.gcd(den, a.denominator)
    return [int(a * den) for a in v]
