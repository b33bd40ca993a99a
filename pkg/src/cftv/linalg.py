"""Small dense linear algebra on Python scalars (Fraction, int, complex)."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Any, Sequence

import numpy as np


def is_exact(x: Any) -> bool:
    return isinstance(x, Rational)


def all_exact(values) -> bool:
    return all(is_exact(v) for v in values)


def det(matrix: Sequence[Sequence[Any]]):
    """Determinant by Gaussian elimination with nonzero pivoting.

    Exact when every entry is rational (the result is a Fraction); otherwise
    the entries are promoted to complex and numpy is used.
    """
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if any(len(r) != n for r in rows):
        raise ValueError("det of a non-square matrix")
    if not all(all_exact(r) for r in rows):
        return complex(np.linalg.det(np.array(rows, dtype=complex)))
    a = [[Fraction(v) for v in r] for r in rows]
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        p = a[col][col]
        result *= p
        for r in range(col + 1, n):
            f = a[r][col] / p
            if f:
                row_r, row_c = a[r], a[col]
                for c in range(col + 1, n):
                    row_r[c] -= f * row_c[c]
    return sign * result


def matmul(a, b):
    """Product of two list-of-lists matrices (exact entries stay exact)."""
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum((row[k] * b[k][j] for k in range(inner)), 0) for j in range(cols)] for row in a]


def as_matrix(A) -> np.ndarray | list:
    """Normalize a matrix argument.

    Lists of rationals stay as Python lists (exact path); anything else
    becomes a complex ndarray.
    """
    if isinstance(A, np.ndarray) and A.dtype != object:
        return A.astype(complex)
    rows = [list(r) for r in A]
    if rows and all(all_exact(r) for r in rows):
        return rows
    return np.array(rows, dtype=complex)


def check_square(A) -> int:
    if isinstance(A, np.ndarray):
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {A.shape}")
        return A.shape[0]
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("expected a square matrix")
    return n
