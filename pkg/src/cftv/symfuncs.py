"""Schur functions, Weyl dimensions and Schur-expansion coefficients.

Scalar functions accept Python numbers.  When every input is rational the
arithmetic is carried out in :class:`fractions.Fraction` and the result is
exact; otherwise complex floating point is used.  The ``*_batch`` variants
work on numpy arrays of spectra and are what the Monte Carlo code calls.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Literal, Sequence

import numpy as np

from .linalg import all_exact, as_matrix, check_square, det, is_exact, matmul
from .partitions import Partition, conjugate, partitions_of_weight

Scalar = complex | Fraction | int | float


# ---------------------------------------------------------------------------
# power sums and the h / e bases
# ---------------------------------------------------------------------------

def power_sums(A, k_max: int) -> list:
    """p_k = Tr(A^k) for k = 1..k_max."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    A = as_matrix(A)
    n = check_square(A)
    out = []
    if isinstance(A, np.ndarray):
        P = np.eye(n, dtype=complex)
        for _ in range(k_max):
            P = P @ A
            out.append(complex(np.trace(P)))
        return out
    P = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(k_max):
        P = matmul(P, A)
        out.append(sum((P[i][i] for i in range(n)), Fraction(0)))
    return out


def spectrum_power_sums(x: Sequence[Scalar], k_max: int) -> list:
    exact = all_exact(x)
    vals = [Fraction(v) for v in x] if exact else [complex(v) for v in x]
    zero = Fraction(0) if exact else 0j
    return [sum((v**k for v in vals), zero) for k in range(1, k_max + 1)]


def symmetric_bases_from_power_sums(
    p: Sequence[Scalar], r_max: int, basis: Literal["complete", "elementary"] = "complete"
) -> list:
    """h_0..h_{r_max} (or e_0..e_{r_max}) from p_1..p_{r_max} via Newton.

    ``r h_r = sum_{i=1}^r p_i h_{r-i}`` and
    ``r e_r = sum_{i=1}^r (-1)^{i-1} p_i e_{r-i}``.
    """
    if basis not in ("complete", "elementary"):
        raise ValueError(f"unknown basis {basis!r}")
    if len(p) < r_max:
        raise ValueError(f"need {r_max} power sums, got {len(p)}")
    exact = all_exact(p[:r_max])
    one = Fraction(1) if exact else 1 + 0j
    out = [one]
    for r in range(1, r_max + 1):
        acc = 0 * one
        for i in range(1, r + 1):
            term = p[i - 1] * out[r - i]
            if basis == "elementary" and i % 2 == 0:
                term = -term
            acc += term
        out.append(acc / r if not exact else acc / Fraction(r))
    return out


# ---------------------------------------------------------------------------
# Schur functions
# ---------------------------------------------------------------------------

def _jacobi_trudi(lam: Partition, h: Sequence[Scalar]):
    l = lam.length
    zero = h[0] * 0

    def hh(k: int):
        return h[k] if k >= 0 else zero

    return det([[hh(lam[i] - i + j) for j in range(l)] for i in range(l)])


def schur_eval(lam: Sequence[int], x: Sequence[Scalar]):
    """s_lambda(x_1, ..., x_n) via Jacobi-Trudi over Newton-derived h_r.

    Coincident x_i are fine.  Returns 0 when length(lambda) > n.
    """
    lam = Partition(lam)
    exact = all_exact(x)
    if lam.length > len(x):
        return Fraction(0) if exact else 0j
    if not lam:
        return Fraction(1) if exact else 1 + 0j
    r_max = lam[0] + lam.length - 1
    h = symmetric_bases_from_power_sums(spectrum_power_sums(x, r_max), r_max)
    return _jacobi_trudi(lam, h)


def schur_of_matrix(lam: Sequence[int], A):
    """s_lambda of the eigenvalues of A, without an eigendecomposition."""
    lam = Partition(lam)
    A = as_matrix(A)
    n = check_square(A)
    exact = not isinstance(A, np.ndarray)
    if lam.length > n:
        return Fraction(0) if exact else 0j
    if not lam:
        return Fraction(1) if exact else 1 + 0j
    r_max = lam[0] + lam.length - 1
    h = symmetric_bases_from_power_sums(power_sums(A, r_max), r_max)
    return _jacobi_trudi(lam, h)


def schur_bialternant(lam: Sequence[int], x: Sequence[complex]) -> complex:
    """Ratio det(x_i^{n+lambda_j-j}) / det(x_i^{n-j}); singular on ties."""
    lam = Partition(lam)
    n = len(x)
    if lam.length > n:
        return 0j
    parts = lam.padded(n)
    xs = np.asarray(x, dtype=complex)
    num = np.array([[xi ** (n + parts[j] - j - 1) for j in range(n)] for xi in xs])
    den = np.array([[xi ** (n - j - 1) for j in range(n)] for xi in xs])
    return complex(np.linalg.det(num) / np.linalg.det(den))


def _ssyt_rows(shape: tuple[int, ...], n: int):
    """Yield SSYT of the given shape with entries 1..n as tuples of rows."""

    def rows_from(i: int, above: tuple[int, ...] | None):
        if i == len(shape):
            yield ()
            return
        length = shape[i]

        def fill(pos: int, prev: int, acc: tuple[int, ...]):
            if pos == length:
                yield acc
                return
            lo = prev
            if above is not None:
                lo = max(lo, above[pos] + 1)
            for v in range(lo, n + 1):
                yield from fill(pos + 1, v, acc + (v,))

        for row in fill(0, 1, ()):
            for rest in rows_from(i + 1, row):
                yield (row,) + rest

    yield from rows_from(0, None)


SSYT_MAX_WEIGHT = 8
SSYT_MAX_VARS = 6


def schur_ssyt_oracle(lam: Sequence[int], x: Sequence[Scalar]):
    """Brute-force s_lambda(x) as a sum of tableau monomials.

    Independent of the Jacobi-Trudi path; limited to |lambda| <= 8 and at
    most 6 variables.
    """
    lam = Partition(lam)
    if lam.weight > SSYT_MAX_WEIGHT or len(x) > SSYT_MAX_VARS:
        raise ValueError(
            f"SSYT oracle limited to |lambda| <= {SSYT_MAX_WEIGHT} and <= {SSYT_MAX_VARS} variables"
        )
    exact = all_exact(x)
    vals = [Fraction(v) for v in x] if exact else [complex(v) for v in x]
    total = Fraction(0) if exact else 0j
    for tab in _ssyt_rows(tuple(lam), len(vals)):
        mono = Fraction(1) if exact else 1 + 0j
        for row in tab:
            for v in row:
                mono *= vals[v - 1]
        total += mono
    return total


def weyl_dimension(lam: Sequence[int], n: int) -> Fraction:
    """s_lambda(1_n) from the Weyl product formula (0 when length > n)."""
    lam = Partition(lam)
    if n < 1:
        raise ValueError("n must be positive")
    if lam.length > n:
        return Fraction(0)
    parts = lam.padded(n)
    val = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            val *= Fraction(parts[i] - parts[j] + j - i, j - i)
    return val


# ---------------------------------------------------------------------------
# batched evaluation for Monte Carlo
# ---------------------------------------------------------------------------

def schur_batch(lam: Sequence[int], x: np.ndarray) -> np.ndarray:
    """s_lambda evaluated row-wise on a (batch, n) array of spectra."""
    lam = Partition(lam)
    x = np.asarray(x)
    batch, n = x.shape
    if lam.length > n:
        return np.zeros(batch, dtype=x.dtype)
    if not lam:
        return np.ones(batch, dtype=x.dtype)
    r_max = lam[0] + lam.length - 1
    p = [np.sum(x**k, axis=1) for k in range(1, r_max + 1)]
    h = [np.ones(batch, dtype=p[0].dtype)]
    for r in range(1, r_max + 1):
        acc = sum(p[i - 1] * h[r - i] for i in range(1, r + 1))
        h.append(acc / r)
    l = lam.length
    if l == 1:
        return h[lam[0]]
    zero = np.zeros(batch, dtype=h[0].dtype)
    M = np.empty((batch, l, l), dtype=h[0].dtype)
    for i in range(l):
        for j in range(l):
            k = lam[i] - i + j
            M[:, i, j] = h[k] if k >= 0 else zero
    return np.linalg.det(M)


def schur_of_matrix_batch(lam: Sequence[int], A: np.ndarray) -> np.ndarray:
    """s_lambda of each matrix in a (batch, n, n) stack, via power sums."""
    lam = Partition(lam)
    A = np.asarray(A)
    batch, n, _ = A.shape
    if lam.length > n:
        return np.zeros(batch, dtype=complex)
    if not lam:
        return np.ones(batch, dtype=complex)
    r_max = lam[0] + lam.length - 1
    p = []
    P = A
    for _ in range(r_max):
        p.append(np.trace(P, axis1=1, axis2=2))
        P = P @ A
    h = [np.ones(batch, dtype=complex)]
    for r in range(1, r_max + 1):
        h.append(sum(p[i - 1] * h[r - i] for i in range(1, r + 1)) / r)
    l = lam.length
    M = np.zeros((batch, l, l), dtype=complex)
    for i in range(l):
        for j in range(l):
            k = lam[i] - i + j
            if k >= 0:
                M[:, i, j] = h[k]
    return np.linalg.det(M)


# ---------------------------------------------------------------------------
# expansion coefficients
# ---------------------------------------------------------------------------

def exp_coeff(lam: Sequence[int]) -> Fraction:
    """Coefficient of s_lambda in exp(p_1); independent of the dimension."""
    lam = Partition(lam)
    l = lam.length
    num = 1
    for i in range(l):
        for j in range(i + 1, l):
            num *= lam[i] - i - lam[j] + j
    den = 1
    for j in range(l):
        den *= math.factorial(l + lam[j] - j - 1)
    return Fraction(num, den)


def multiplicative_expansion_coeff(alpha: Sequence[Scalar] | Callable[[int], Scalar],
                                   lam: Sequence[int], m: int):
    """det(alpha_{lambda_k - k + j})_{j,k=1..m}, with alpha_r = 0 for r < 0.

    ``alpha`` is either a sequence (alpha_0, alpha_1, ...) or a callable r -> alpha_r.
    """
    lam = Partition(lam)
    parts = lam.padded(m)
    need = (parts[0] if parts else 0) + m - 1
    if callable(alpha):
        get = alpha
        zero = alpha(0) * 0
    else:
        if len(alpha) <= need:
            raise ValueError(f"need alpha_0..alpha_{need}, got {len(alpha)} entries")
        zero = alpha[0] * 0

        def get(r):
            return alpha[r]

    def a(r: int):
        return get(r) if r >= 0 else zero

    return det([[a(parts[k] - k + j) for k in range(m)] for j in range(m)])


def _rising(x, k: int):
    """Gamma(x + k) / Gamma(x) for integer k of either sign."""
    val = x * 0 + 1
    if k >= 0:
        for i in range(k):
            val *= x + i
    else:
        for i in range(1, -k + 1):
            val /= x - i
    return val


def _coerce_a(a):
    if isinstance(a, float) and a.is_integer():
        return Fraction(int(a))
    if is_exact(a):
        return Fraction(a)
    return float(a)


def hua_coeff_bosonic(lam: Sequence[int], a, m: int):
    """beta_lambda in prod_j (1 - z_j)^{-a} = sum beta s_lambda(1_m) s_lambda(z).

    Each Gamma ratio Gamma(a+lambda_j-j+1)/Gamma(a-j+1) is a finite rising
    product, so there are no poles to avoid; rational ``a`` gives an exact result.
    """
    lam = Partition(lam)
    if a < 0:
        raise ValueError("a must be >= 0")
    a = _coerce_a(a)
    parts = lam.padded(m)
    val = a * 0 + 1
    for j, lj in enumerate(parts, start=1):
        val *= _rising(a - j + 1, lj)
        val *= Fraction(math.factorial(m - j), math.factorial(m + lj - j))
    return val


def hua_coeff_fermionic(lam: Sequence[int], a, m: int):
    """beta_lambda in prod_j (1 + z_j)^{a} = sum beta s_lambda(1_m) s_lambda(z).

    Gamma(a+m-j+1)/Gamma(a-lambda_j+j) is written as a rising product from
    a-lambda_j+j; for integer a it hits zero exactly when the series terminates.
    """
    lam = Partition(lam)
    if a < 0:
        raise ValueError("a must be >= 0")
    a = _coerce_a(a)
    parts = lam.padded(m)
    val = a * 0 + 1
    for j, lj in enumerate(parts, start=1):
        val *= _rising(a - lj + j, m + lj - 2 * j + 1)
        val *= Fraction(math.factorial(m - j), math.factorial(m + lj - j))
    return val


# ---------------------------------------------------------------------------
# truncated Schur series
# ---------------------------------------------------------------------------

def tail_bound(radius: float, n_vars: int, K: int) -> float:
    """Crude bound on sum_{w>K} C(w+n_vars-1, n_vars-1) radius^w.

    Bounds the tail of any Schur series whose weight-w block is dominated by
    h_w of ``n_vars`` quantities of modulus <= radius.
    """
    if not 0 <= radius < 1:
        raise ValueError("radius must lie in [0, 1)")
    if radius == 0:
        return 0.0
    total = 0.0
    w = K + 1
    while True:
        term = math.comb(w + n_vars - 1, n_vars - 1) * radius**w
        total += term
        if term < 1e-18 * max(total, 1e-300) or w > K + 10_000:
            break
        w += 1
    return total


def cauchy_partial_sum(t: Sequence[Scalar], x: Sequence[Scalar], K: int, dual: bool = False):
    """sum_{|lambda|<=K} s_lambda(t) s_lambda(x)  (s_lambda'(x) if dual)."""
    total = None
    for w in range(K + 1):
        for lam in partitions_of_weight(w, len(t)):
            other = conjugate(lam) if dual else lam
            term = schur_eval(lam, t) * schur_eval(other, x)
            total = term if total is None else total + term
    return total


def schur_series(coeff: Callable[[Partition], Scalar], x: Sequence[Scalar], K: int,
                 max_length: int | None = None):
    """sum_{|lambda|<=K, l(lambda)<=max_length} coeff(lambda) s_lambda(x)."""
    if max_length is None:
        max_length = len(x)
    total = 0
    for w in range(K + 1):
        for lam in partitions_of_weight(w, max_length):
            c = coeff(lam)
            if c:
                total += c * schur_eval(lam, x)
    return total


__all__ = [
    "power_sums",
    "spectrum_power_sums",
    "symmetric_bases_from_power_sums",
    "schur_eval",
    "schur_of_matrix",
    "schur_bialternant",
    "schur_ssyt_oracle",
    "weyl_dimension",
    "schur_batch",
    "schur_of_matrix_batch",
    "exp_coeff",
    "multiplicative_expansion_coeff",
    "hua_coeff_bosonic",
    "hua_coeff_fermionic",
    "tail_bound",
    "cauchy_partial_sum",
    "schur_series",
]
