"""Exact scalar arithmetic and rational linear algebra.

Bernoulli numbers, divisor power sums, the Kronecker symbol (12/n), and a
small dense matrix type with exact Gaussian elimination. Everything here is
computed over the rationals; nothing ever rounds.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, SingularMatrixError

#: The exact rational scalar used throughout the package.
Rational = Fraction

_bernoulli_lock = threading.Lock()
_bernoulli_table = [Fraction(1)]


def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m under the x/(e^x - 1) convention (B_1 = -1/2).

    Computed with the recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0, which
    follows from multiplying the generating function by e^x - 1. The table
    is memoized (and lock-protected), so repeated calls are O(1).
    """
    if not isinstance(m, int) or m < 0:
        raise DomainError(f"bernoulli index must be a non-negative integer, got {m!r}")
    if m >= len(_bernoulli_table):
        with _bernoulli_lock:
            while len(_bernoulli_table) <= m:
                n = len(_bernoulli_table)
                acc = Fraction(0)
                for j in range(n):
                    bj = _bernoulli_table[j]
                    if bj:
                        acc += math.comb(n + 1, j) * bj
                _bernoulli_table.append(-acc / (n + 1))
    return _bernoulli_table[m]


def sigma(power: int, n) -> int:
    """Divisor power sum sigma_power(n) = sum of d**power over divisors d of n.

    Accepts an int or a Fraction and returns 0 unless n is a positive
    integer, so expressions like sigma(2k-1, n/r) are total without any
    divisibility check at the call site.
    """
    if not isinstance(power, int) or power < 1:
        raise DomainError(f"sigma power must be a positive integer, got {power!r}")
    if isinstance(n, Fraction):
        if n.denominator != 1:
            return 0
        n = n.numerator
    elif not isinstance(n, int):
        raise TypeError(f"sigma argument must be an int or Fraction, got {type(n).__name__}")
    if n <= 0:
        return 0
    return sum(d ** power for d in divisors(n))


def kronecker12(n: int) -> int:
    """Kronecker symbol (12/n): +1 for n = +-1, -1 for n = +-5 (mod 12), else 0."""
    r = n % 12
    if r in (1, 11):
        return 1
    if r in (5, 7):
        return -1
    return 0


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of a positive integer."""
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"divisors wants a positive integer, got {n!r}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    large.reverse()
    return small + large


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of a positive integer as {prime: exponent}."""
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"factorize wants a positive integer, got {n!r}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class Matrix:
    """Immutable dense matrix over the exact rationals."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise DomainError("matrix must have at least one row and one column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise DomainError("matrix rows must all have the same length")
        self._rows = data

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return len(self._rows[0])

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def __getitem__(self, key):
        i, j = key
        return self._rows[i][j]

    def matvec(self, vector: Sequence) -> tuple:
        if len(vector) != self.ncols:
            raise DomainError("vector length does not match matrix width")
        return tuple(sum(a * Fraction(x) for a, x in zip(row, vector)) for row in self._rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._rows == other._rows

    def __repr__(self):
        return f"Matrix({[list(map(str, row)) for row in self._rows]})"


def solve_linear_system(matrix: Matrix, rhs: Sequence) -> tuple:
    """Exact solution x of matrix @ x = rhs by Gaussian elimination.

    Pivots on the first nonzero entry down each column (smallest row index
    wins), which keeps runs bit-for-bit deterministic. Raises
    SingularMatrixError for a rank-deficient matrix.
    """
    n = matrix.nrows
    if matrix.ncols != n:
        raise DomainError("solve_linear_system wants a square matrix")
    if len(rhs) != n:
        raise DomainError("right-hand side length does not match the matrix")
    a = [list(matrix.row(i)) for i in range(n)]
    b = [Fraction(x) for x in rhs]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            raise SingularMatrixError(f"matrix is rank-deficient at column {col}")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            b[col], b[pivot] = b[pivot], b[col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            factor = a[r][col] * inv
            if factor:
                arow, acol = a[r], a[col]
                for c in range(col, n):
                    arow[c] -= factor * acol[c]
                b[r] -= factor * b[col]
    x = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        acc = b[r]
        arow = a[r]
        for c in range(r + 1, n):
            acc -= arow[c] * x[c]
        x[r] = acc / arow[r]
    return tuple(x)


def determinant(matrix: Matrix) -> Fraction:
    """Exact determinant via the same pivoting strategy as solve_linear_system."""
    n = matrix.nrows
    if matrix.ncols != n:
        raise DomainError("determinant wants a square matrix")
    a = [list(matrix.row(i)) for i in range(n)]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            factor = a[r][col] * inv
            if factor:
                arow, acol = a[r], a[col]
                for c in range(col, n):
                    arow[c] -= factor * acol[c]
    return det
