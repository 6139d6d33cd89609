"""Exact binomial coefficients, binomial minors and their determinants.

``binom(a, b)`` follows the extended convention: it is ``0`` whenever
``b < 0`` or ``b > a``, which keeps Pascal's identity valid for every
integer ``b``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import NegativeUpper, NonIntegerQuotient, ShapeMismatch
from .gf2 import BitMatrix


def binom(a: int, b: int) -> int:
    if a < 0:
        raise NegativeUpper(f"upper index must be non-negative, got {a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def binom_parity(a: int, b: int) -> int:
    """``binom(a, b) mod 2`` by Lucas: odd iff the bits of ``b`` are a subset of those of ``a``."""
    if a < 0:
        raise NegativeUpper(f"upper index must be non-negative, got {a}")
    if b < 0 or b > a:
        return 0
    return int(a & b == b)


def pascal_row_mod2(a: int) -> int:
    """Row ``a`` of Pascal's triangle mod 2 as a bitset (bit ``b`` = ``binom(a, b) mod 2``).

    Built as the product of ``1 + x**(2**k)`` over the set bits of ``a``.
    """
    if a < 0:
        raise NegativeUpper(f"upper index must be non-negative, got {a}")
    row = 1
    k = 0
    while a >> k:
        if (a >> k) & 1:
            row |= row << (1 << k)
        k += 1
    return row


def check_selection(rows: Sequence[int]) -> tuple[int, ...]:
    rows = tuple(int(r) for r in rows)
    if any(r < 0 for r in rows):
        raise ValueError(f"row indices must be non-negative: {rows}")
    if any(x >= y for x, y in zip(rows, rows[1:])):
        raise ValueError(f"row indices must be strictly increasing: {rows}")
    return rows


@dataclass(frozen=True)
class BinomialSubmatrix:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    exact: tuple[tuple[int, ...], ...]
    mod2: BitMatrix


def binomial_submatrix(rows: Sequence[int], cols: Sequence[int]) -> BinomialSubmatrix:
    """The matrix ``(binom(rows[i], cols[j]))`` together with its reduction mod 2."""
    rows = check_selection(rows)
    cols = tuple(int(c) for c in cols)
    if len(rows) != len(cols):
        raise ShapeMismatch(f"{len(rows)} rows but {len(cols)} columns")
    exact = tuple(tuple(binom(a, b) for b in cols) for a in rows)
    mod2 = BitMatrix.from_array([[v & 1 for v in r] for r in exact]) if rows else BitMatrix(0, 0)
    return BinomialSubmatrix(rows, cols, exact, mod2)


def vandermonde_product(values: Sequence[int]) -> int:
    """``prod_{i<j} (values[j] - values[i])``."""
    out = 1
    for j in range(len(values)):
        for i in range(j):
            out *= values[j] - values[i]
    return out


def superfactorial(n: int) -> int:
    """``prod_{k=0}^{n-1} k!``."""
    out = 1
    f = 1
    for k in range(1, n):
        f *= k
        out *= f
    return out


def minor_vandermonde(rows: Sequence[int]) -> int:
    """``det B(rows; 0..n-1)`` as the product of differences over ``prod k!``."""
    rows = check_selection(rows)
    q, rem = divmod(vandermonde_product(rows), superfactorial(len(rows)))
    if rem:
        raise NonIntegerQuotient(f"difference product not divisible for rows {rows}")
    return q


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination determinant of an integer matrix."""
    a = [list(map(int, r)) for r in matrix]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ShapeMismatch("determinant needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k]), None)
            if p is None:
                return 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def minor_bareiss(rows: Sequence[int], cols: Sequence[int] | None = None) -> int:
    """Determinant of ``B(rows; cols)`` on the literal matrix (column order matters for sign)."""
    rows = check_selection(rows)
    if cols is None:
        cols = range(len(rows))
    return bareiss_det(binomial_submatrix(rows, cols).exact)


def triangular_minor_closed_form(n: int) -> int:
    """``det B(t_0..t_{n-1}; 0..n-1) = prod_{i=1}^{n-1} (2i-1)^(n-i)``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out = 1
    for i in range(1, n):
        out *= (2 * i - 1) ** (n - i)
    return out


__all__ = [
    "binom",
    "binom_parity",
    "pascal_row_mod2",
    "BinomialSubmatrix",
    "binomial_submatrix",
    "vandermonde_product",
    "superfactorial",
    "minor_vandermonde",
    "bareiss_det",
    "minor_bareiss",
    "triangular_minor_closed_form",
]
