"""Exact reference values: Selberg constants, Schur-weighted Selberg
integrals (product and Gram-determinant routes), Schur-moment right-hand
sides and the Bessel-determinant formula for the U(N) Fourier integral.

Gamma functions at positive integers are evaluated as factorials, so all
quantities with integer parameters come out as exact Fractions.  Anything
else falls back to floating point via log-Gamma.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

import numpy as np

from .linalg import det
from .partitions import Partition, conjugate, shifted_parts
from .quadrature import quad
from .special import j0
from .symfuncs import weyl_dimension

Derivation = Literal["product-form", "gram-determinant", "binomial-determinant", "quadrature"]


@dataclass(frozen=True)
class ClosedFormValue:
    value: Fraction | float
    derivation: Derivation

    @property
    def exact(self) -> bool:
        return isinstance(self.value, Fraction)

    def __float__(self) -> float:
        return float(self.value)


def _as_exact(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float) and x.is_integer():
        return Fraction(int(x))
    return x


def _gamma(x):
    """Gamma(x) for x > 0: exact factorial at integers, float otherwise."""
    x = _as_exact(x)
    if x <= 0:
        raise ValueError(f"Gamma argument {x} is not positive")
    if isinstance(x, Fraction) and x.denominator == 1:
        return Fraction(math.factorial(x.numerator - 1))
    return math.exp(math.lgamma(float(x)))


def beta(a, b):
    """Euler Beta function; exact for positive integer arguments."""
    a, b = _as_exact(a), _as_exact(b)
    if a <= 0 or b <= 0:
        raise ValueError(f"Beta({a}, {b}) needs positive arguments")
    if all(isinstance(v, Fraction) and v.denominator == 1 for v in (a, b)):
        return _gamma(a) * _gamma(b) / _gamma(a + b)
    return math.exp(math.lgamma(float(a)) + math.lgamma(float(b)) - math.lgamma(float(a + b)))


def _det(rows):
    """Exact determinant for rational entries, real float otherwise."""
    val = det(rows)
    return val.real if isinstance(val, complex) else val


def _vandermonde(f: Sequence[int]) -> int:
    out = 1
    for i in range(len(f)):
        for j in range(i + 1, len(f)):
            out *= f[i] - f[j]
    return out


# ---------------------------------------------------------------------------
# Selberg normalizations
# ---------------------------------------------------------------------------

def selberg_constant_bosonic(N: int, n: int, m: int) -> Fraction:
    """c^N_{n,m}: mass of prod x^{n-m}(1-x)^{N-n-m} Delta^2 on [0,1]^m."""
    if not (1 <= m <= n and N >= n + m):
        raise ValueError(f"need 1 <= m <= n and N >= n+m, got N={N}, n={n}, m={m}")
    val = Fraction(1)
    for j in range(m):
        val *= Fraction(math.factorial(1 + j) * math.factorial(n - m + j)
                        * math.factorial(N - n - m + j), math.factorial(N - m + j))
    return val


def selberg_constant_fermionic(N: int, n: int, m: int) -> Fraction:
    """k^N_{n,m}: mass of prod x^{n-m}(1+x)^{-N-n-m} Delta^2 on [0,inf)^m."""
    if not (1 <= m <= n and N >= 1):
        raise ValueError(f"need 1 <= m <= n and N >= 1, got N={N}, n={n}, m={m}")
    val = Fraction(1)
    for j in range(m):
        val *= Fraction(math.factorial(1 + j) * math.factorial(n - m + j) * math.factorial(N + j),
                        math.factorial(N + n + j))
    return val


# ---------------------------------------------------------------------------
# Schur-weighted Selberg integrals
# ---------------------------------------------------------------------------

def _check_pq(p, q):
    if p <= 0 or q <= 0:
        raise ValueError("p and q must be positive")


def schur_selberg_bosonic(lam: Sequence[int], p, q, m: int,
                          route: Literal["product", "gram", "binomial"] = "product"
                          ) -> ClosedFormValue:
    """S^B_lambda(p,q;m) = int_{[0,1]^m} s_lambda(x) prod x^{p-1}(1-x)^{q-1} Delta^2 dx.

    ``route`` selects the product formula, the Gram determinant
    m! det B(m+p+f_j-i, q), or the equivalent binomial determinant
    m! det B(m+p+f_j-i, q+i-1).
    """
    _check_pq(p, q)
    p, q = _as_exact(p), _as_exact(q)
    f = shifted_parts(Partition(lam), m)
    if route == "product":
        val = math.factorial(m) * _vandermonde(f)
        for j in range(1, m + 1):
            fj = f[j - 1]
            val = val * _gamma(q + j - 1) * _gamma(p + fj) / _gamma(m + p + q + fj - 1)
        return ClosedFormValue(val, "product-form")
    if route == "gram":
        rows = [[beta(m + p + f[j] - i, q) for j in range(m)] for i in range(1, m + 1)]
        return ClosedFormValue(math.factorial(m) * _det(rows), "gram-determinant")
    if route == "binomial":
        rows = [[beta(m + p + f[j] - i, q + i - 1) for j in range(m)] for i in range(1, m + 1)]
        return ClosedFormValue(math.factorial(m) * _det(rows), "binomial-determinant")
    raise ValueError(f"unknown route {route!r}")


def _check_fermionic_integrable(f, q, m):
    for j, fj in enumerate(f, start=1):
        if q + m - fj - 1 <= 0:
            raise ValueError(
                f"integral diverges: q + m - f_{j} - 1 = {q + m - fj - 1} <= 0 (f_{j} = {fj})"
            )


def schur_selberg_fermionic(lam: Sequence[int], p, q, m: int,
                            route: Literal["product", "gram", "binomial"] = "product"
                            ) -> ClosedFormValue:
    """S^F_lambda(p,q;m) = int_{[0,inf)^m} s_lambda(x) prod x^{p-1}(1+x)^{-(p+q+2m-2)} Delta^2 dx.

    Gram route: m! det B(m+p+f_j-i, q+m-f_j-2+i); binomial route:
    m! det B(m+p+f_j-i, q+m-f_j-1).
    """
    _check_pq(p, q)
    p, q = _as_exact(p), _as_exact(q)
    f = shifted_parts(Partition(lam), m)
    _check_fermionic_integrable(f, q, m)
    if route == "product":
        val = math.factorial(m) * _vandermonde(f)
        for j in range(1, m + 1):
            fj = f[j - 1]
            val = val * _gamma(p + fj) * _gamma(q + m - fj - 1) / _gamma(p + q + 2 * m - j - 1)
        return ClosedFormValue(val, "product-form")
    if route == "gram":
        rows = [[beta(m + p + f[j] - i, q + m - f[j] - 2 + i) for j in range(m)]
                for i in range(1, m + 1)]
        return ClosedFormValue(math.factorial(m) * _det(rows), "gram-determinant")
    if route == "binomial":
        rows = [[beta(m + p + f[j] - i, q + m - f[j] - 1) for j in range(m)]
                for i in range(1, m + 1)]
        return ClosedFormValue(math.factorial(m) * _det(rows), "binomial-determinant")
    raise ValueError(f"unknown route {route!r}")


def binomial_determinant_identity(p: Sequence, q: Sequence) -> tuple:
    """Both sides of det B(p_j - i, q_j + i) = det B(p_j - i, q_j + 1), i, j = 1..m."""
    m = len(p)
    lhs = _det([[beta(p[j] - i, q[j] + i) for j in range(m)] for i in range(1, m + 1)])
    rhs = _det([[beta(p[j] - i, q[j] + 1) for j in range(m)] for i in range(1, m + 1)])
    return lhs, rhs


def gamma_determinant_identity(p: Sequence) -> tuple:
    """Both sides of det Gamma(p_j + m - i) = prod Gamma(p_j) prod_{i<j}(p_i - p_j)."""
    m = len(p)
    lhs = _det([[_gamma(p[j] + m - i) for j in range(m)] for i in range(1, m + 1)])
    rhs = _vandermonde([_as_exact(v) for v in p])
    for v in p:
        rhs = rhs * _gamma(v)
    return lhs, rhs


# ---------------------------------------------------------------------------
# Schur moments of truncations and of the fermionic measure
# ---------------------------------------------------------------------------

def rhs_schur_moment_bosonic(lam: Sequence[int], N: int, n: int, m: int) -> Fraction:
    """s_lambda(1_m) s_lambda(1_n) / s_lambda(1_N)."""
    lam = Partition(lam)
    if not (1 <= m <= N and 1 <= n <= N):
        raise ValueError(f"need m, n <= N, got N={N}, n={n}, m={m}")
    if lam.length > min(m, n):
        return Fraction(0)
    return weyl_dimension(lam, m) * weyl_dimension(lam, n) / weyl_dimension(lam, N)


def rhs_schur_moment_fermionic(lam: Sequence[int], N: int, n: int, m: int) -> Fraction:
    """s_lambda(1_n) s_lambda(1_m) / s_lambda'(1_N)."""
    lam = Partition(lam)
    if lam and lam[0] > N:
        raise ValueError(f"lambda_1 = {lam[0]} > N = {N}: s_lambda'(1_N) vanishes")
    if lam.length > min(m, n):
        return Fraction(0)
    return weyl_dimension(lam, m) * weyl_dimension(lam, n) / weyl_dimension(conjugate(lam), N)


def normalized_selberg_average_bosonic(lam: Sequence[int], N: int, n: int, m: int) -> Fraction:
    """S^B_lambda(n-m+1, N-n-m+1; m) / c^N_{n,m}."""
    val = schur_selberg_bosonic(lam, n - m + 1, N - n - m + 1, m).value
    return val / selberg_constant_bosonic(N, n, m)


def normalized_selberg_average_fermionic(lam: Sequence[int], N: int, n: int, m: int) -> Fraction:
    """S^F_lambda(n-m+1, N+1; m) / k^N_{n,m}; the exponent N+n+m equals p+q+2m-2."""
    val = schur_selberg_fermionic(lam, n - m + 1, N + 1, m).value
    return val / selberg_constant_fermionic(N, n, m)


# ---------------------------------------------------------------------------
# Fourier transform of the Haar measure
# ---------------------------------------------------------------------------

def _bessel_entry(N: int, m: int, j: int, d: float, abs_tol: float) -> float:
    power = 2 * (m - j) + 1
    expo = N - 2 * m
    return quad(lambda q: j0(2.0 * q * d) * q**power * (1.0 - q * q) ** expo,
                0.0, 1.0, abs_tol=abs_tol)[0]


def _bessel_normalization(N: int, m: int) -> Fraction:
    # small-d limit of det(E) / prod_{j<k}(d_j^2 - d_k^2), from the J0 series
    A = [[Fraction((-1) ** r, math.factorial(r) ** 2) * beta(m - j + r + 1, N - 2 * m + 1) / 2
          for r in range(m)] for j in range(1, m + 1)]
    return (-1) ** (m * (m - 1) // 2) * det(A)


def bessel_determinant_formula(N: int, m: int, d: Sequence[float],
                               abs_tol: float = 1e-12) -> float:
    """int_{U(N)} exp(-i Tr(Y*UX + X*U*Y)) dmu for N >= 2m; d = singular values of XY*.

    det( int_0^1 J0(2 q d_k) q^{2(m-j)+1} (1-q^2)^{N-2m} dq ) / prod_{j<k}(d_j^2 - d_k^2),
    scaled to equal 1 at d = 0.
    """
    d = [float(v) for v in d]
    if len(d) != m:
        raise ValueError(f"expected {m} singular values, got {len(d)}")
    if 2 * m > N:
        raise ValueError(f"formula requires 2m <= N, got N={N}, m={m}")
    if any(v < 0 for v in d):
        raise ValueError("singular values must be non-negative")
    if all(v == 0 for v in d):
        return 1.0
    for i in range(m):
        for k in range(i + 1, m):
            if d[i] == d[k]:
                raise ValueError(f"coincident singular values d_{i + 1} = d_{k + 1} = {d[i]}")
    E = np.array([[_bessel_entry(N, m, j, dk, abs_tol) for dk in d] for j in range(1, m + 1)])
    vdm = 1.0
    for i in range(m):
        for k in range(i + 1, m):
            vdm *= d[i] ** 2 - d[k] ** 2
    return float(np.linalg.det(E) / vdm / float(_bessel_normalization(N, m)))


__all__ = [
    "ClosedFormValue",
    "beta",
    "selberg_constant_bosonic",
    "selberg_constant_fermionic",
    "schur_selberg_bosonic",
    "schur_selberg_fermionic",
    "binomial_determinant_identity",
    "gamma_determinant_identity",
    "rhs_schur_moment_bosonic",
    "rhs_schur_moment_fermionic",
    "normalized_selberg_average_bosonic",
    "normalized_selberg_average_fermionic",
    "bessel_determinant_formula",
]
