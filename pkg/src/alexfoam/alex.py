"""Alexander polynomial of a braid closure from the reduced Burau representation."""

from __future__ import annotations

from .braid import BraidWord
from .qalg import LaurentPoly

BurauMatrix = list[list[LaurentPoly]]


def _t(e: int, c: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(e, c, var="t")


def _zero() -> LaurentPoly:
    return LaurentPoly({}, var="t")


def _identity(n: int) -> BurauMatrix:
    return [[_t(0) if i == j else _zero() for j in range(n)] for i in range(n)]


def burau_generator(strands: int, i: int, sign: int) -> BurauMatrix:
    """Reduced Burau matrix of sigma_i^sign, size strands-1.

    Rows/columns i-2, i-1, i (0-based) carry the block
    [[1, t, 0], [0, -t, 0], [0, 1, 1]] for sigma_i, truncated at the borders.
    """
    n = strands - 1
    M = _identity(n)
    c = i - 1  # 0-based index of the diagonal -t entry
    if sign > 0:
        M[c][c] = _t(1, -1)
        if c - 1 >= 0:
            M[c - 1][c] = _t(1)
        if c + 1 < n:
            M[c + 1][c] = _t(0)
    else:
        M[c][c] = _t(-1, -1)
        if c - 1 >= 0:
            M[c - 1][c] = _t(0)
        if c + 1 < n:
            M[c + 1][c] = _t(-1)
    return M


def _matmul(A: BurauMatrix, B: BurauMatrix) -> BurauMatrix:
    n = len(A)
    out = [[_zero() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for k in range(n):
            a = A[i][k]
            if a.is_zero():
                continue
            for j in range(n):
                if not B[k][j].is_zero():
                    out[i][j] = out[i][j] + a * B[k][j]
    return out


def burau(word: BraidWord) -> BurauMatrix:
    M = _identity(word.strands - 1)
    for i, s in word.letters:
        M = _matmul(M, burau_generator(word.strands, i, s))
    return M


def determinant(M: BurauMatrix) -> LaurentPoly:
    """Cofactor expansion with memoization on column subsets."""
    n = len(M)
    if n == 0:
        return _t(0)
    memo: dict[tuple[int, int], LaurentPoly] = {}

    def det(row: int, cols: int) -> LaurentPoly:
        if row == n:
            return _t(0)
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = _zero()
        sign = 1
        for j in range(n):
            if cols >> j & 1:
                continue
            a = M[row][j]
            if not a.is_zero():
                term = a * det(row + 1, cols | (1 << j))
                total = total + (term if sign > 0 else -term)
            sign = -sign
        memo[key] = total
        return total

    return det(0, 0)


def _normalize(p: LaurentPoly) -> LaurentPoly:
    """Shift to be symmetric under t <-> 1/t and scale so the value at 1 is 1."""
    lo, hi = p.min_exp(), p.max_exp()
    if (lo + hi) % 2:
        raise ArithmeticError(f"{p} cannot be made symmetric")
    p = p.shift(-(lo + hi) // 2)
    v = p.evaluate(1)
    if v == 0:
        raise ArithmeticError(f"{p} vanishes at 1")
    return p * LaurentPoly.const(1 / v, p.var)


def alexander(word: BraidWord) -> LaurentPoly:
    if word.components() != 1:
        raise ValueError("multi-component link unsupported")
    k = word.strands
    if k == 1:
        return _t(0)
    B = burau(word)
    n = k - 1
    I_minus_B = [[(_t(0) if i == j else _zero()) - B[i][j] for j in range(n)] for i in range(n)]
    d = determinant(I_minus_B)
    norm = LaurentPoly({e: 1 for e in range(k)}, var="t")
    return _normalize(d.divmod_exact(norm))


def alexander_q(word: BraidWord) -> LaurentPoly:
    """The Alexander polynomial with t -> q^2, normalized to value 1 at q = 1."""
    p = alexander(word).substitute_power(2, var="q")
    return p * LaurentPoly.const(1 / p.evaluate(1))
