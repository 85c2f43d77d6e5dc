"""Exact dense linear algebra over the rationals.

Rows are reduced fraction-free: integer rows, cross-multiplication, then division by
the row content, so no rational arithmetic happens inside elimination.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Sequence

Matrix = list[list[Fraction]]


def zeros(m: int, n: int) -> Matrix:
    return [[Fraction(0)] * n for _ in range(m)]


def identity(n: int) -> Matrix:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = Fraction(1)
    return out


def shape(M: Sequence[Sequence[object]], ncols: int | None = None) -> tuple[int, int]:
    if not M:
        return 0, ncols or 0
    return len(M), len(M[0])


def matmul(A: Sequence[Sequence[Fraction]], B: Sequence[Sequence[Fraction]], inner: int | None = None,
           ncols: int | None = None) -> Matrix:
    m = len(A)
    n = len(B[0]) if B else (ncols or 0)
    k = len(B)
    out = zeros(m, n)
    for i in range(m):
        Ai = A[i]
        row = out[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(n):
                    b = Bt[j]
                    if b:
                        row[j] += a * b
    return out


def add(A: Matrix, B: Matrix) -> Matrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scale(A: Matrix, c: object) -> Matrix:
    c = Fraction(c)
    return [[a * c for a in row] for row in A]


def transpose(A: Sequence[Sequence[Fraction]], ncols: int | None = None) -> Matrix:
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def is_zero(A: Sequence[Sequence[object]]) -> bool:
    return all(not v for row in A for v in row)


def _integer_row(row: Sequence[object]) -> list[int]:
    fr = [Fraction(v) for v in row]
    den = reduce(math.lcm, (f.denominator for f in fr), 1)
    return [int(f * den) for f in fr]


def _primitive(row: list[int]) -> list[int]:
    g = reduce(math.gcd, row, 0)
    if g > 1:
        return [v // g for v in row]
    return row


class Echelon:
    """Incremental fraction-free row echelon form for greedy independence tests."""

    def __init__(self) -> None:
        self.rows: list[tuple[int, list[int]]] = []

    def reduce(self, v: Sequence[object]) -> list[int]:
        w = _integer_row(v)
        for j, r in self.rows:
            c = w[j]
            if c:
                p = r[j]
                w = _primitive([p * x - c * y for x, y in zip(w, r)])
        return w

    def add(self, v: Sequence[object]) -> bool:
        """Insert v if independent of the current rows; report whether it was inserted."""
        w = self.reduce(v)
        for j, x in enumerate(w):
            if x:
                if x < 0:
                    w = [-y for y in w]
                self.rows.append((j, w))
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)


def independent_rows(M: Sequence[Sequence[object]]) -> list[int]:
    """Indices of the greedily chosen rows forming a basis of the row space."""
    ech = Echelon()
    return [i for i, row in enumerate(M) if ech.add(row)]


def rank(M: Sequence[Sequence[object]]) -> int:
    if not M or not M[0]:
        return 0
    # eliminate along the shorter side
    if len(M[0]) < len(M):
        M = transpose(M)  # type: ignore[arg-type]
    return len(independent_rows(M))


def inverse(M: Sequence[Sequence[object]]) -> Matrix:
    """Gauss-Jordan inverse; raises ZeroDivisionError on a singular matrix."""
    n = len(M)
    A = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        A[c], A[piv] = A[piv], A[c]
        p = A[c][c]
        A[c] = [v / p for v in A[c]]
        for r in range(n):
            if r != c and A[r][c]:
                f = A[r][c]
                Ar, Ac = A[r], A[c]
                A[r] = [x - f * y for x, y in zip(Ar, Ac)]
    return [row[n:] for row in A]


def kernel_basis(M: Sequence[Sequence[object]], ncols: int) -> Matrix:
    """Basis (as rows) of {v : M v = 0}."""
    rref_rows: list[list[Fraction]] = []
    pivots: list[int] = []
    A = [[Fraction(v) for v in row] for row in M]
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        A[r] = [v / p for v in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    rref_rows = A[:r]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(rref_rows, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis
