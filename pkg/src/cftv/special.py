"""Bessel J0, Y0, I0 and log-Gamma on the positive real axis.

Three regimes for J0/Y0:

* x <= 8: power series;
* 8 < x <= 25: Miller backward recurrence for J_{2k}, normalized by
  J0 + 2 sum J_{2k} = 1, with Y0 from the Neumann series in the J_{2k};
* x > 25: Hankel asymptotic expansion, truncated at the smallest term.

The Hankel expansion alone only reaches ~2e-8 at x = 8, which is why the
middle band exists.  Absolute error is below 1e-12 on (0, 50].
"""

from __future__ import annotations

import math
from typing import Literal

import numpy as np

EULER_GAMMA = 0.57721566490153286061
SERIES_MAX = 8.0
ASYMPTOTIC_MIN = 25.0


def _j0_series(x: np.ndarray) -> np.ndarray:
    q = -(x * x) / 4.0
    term = np.ones_like(x)
    total = np.ones_like(x)
    for k in range(1, 60):
        term = term * q / (k * k)
        total = total + term
        if np.all(np.abs(term) < 1e-18):
            break
    return total


def _y0_series(x: np.ndarray) -> np.ndarray:
    q = (x * x) / 4.0
    term = np.ones_like(x)
    harmonic = 0.0
    acc = np.zeros_like(x)
    for k in range(1, 60):
        term = term * q / (k * k)
        harmonic += 1.0 / k
        acc = acc + (1 if k % 2 else -1) * harmonic * term
        if np.all(np.abs(term) * harmonic < 1e-18):
            break
    return (2.0 / math.pi) * ((np.log(x / 2.0) + EULER_GAMMA) * _j0_series(x) + acc)


def _miller(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """J0(x) and Y0(x) by backward recurrence (vectorized, x > 0)."""
    start = int(np.max(x)) + 40
    start += start % 2
    j_next = np.zeros_like(x)  # J_{n+1}
    j_cur = np.full_like(x, 1e-30)  # J_n, arbitrary scale
    norm = np.zeros_like(x)
    neumann = np.zeros_like(x)
    for n in range(start, 0, -1):
        j_prev = (2.0 * n / x) * j_cur - j_next
        j_next, j_cur = j_cur, j_prev
        k = n - 1
        if k > 0 and k % 2 == 0:
            norm = norm + 2.0 * j_cur
            neumann = neumann + (-1) ** (k // 2) * j_cur / (k // 2)
        big = np.abs(j_cur) > 1e250
        if np.any(big):
            scale = np.where(big, 1e-250, 1.0)
            j_cur, j_next = j_cur * scale, j_next * scale
            norm, neumann = norm * scale, neumann * scale
    norm = norm + j_cur
    j0 = j_cur / norm
    sum_j2k = neumann / norm
    y0 = (2.0 / math.pi) * ((np.log(x / 2.0) + EULER_GAMMA) * j0 - 2.0 * sum_j2k)
    return j0, y0


def _hankel(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # P0, Q0 series in 1/(8x); mu = 0
    p = np.ones_like(x)
    q = np.zeros_like(x)
    term = np.ones_like(x)
    last = np.full_like(x, np.inf)
    active = np.ones_like(x, dtype=bool)
    for k in range(1, 80):
        term = term * (-((2 * k - 1) ** 2)) / (k * 8.0 * x)
        mag = np.abs(term)
        active &= mag < last
        last = np.where(active, mag, last)
        contrib = np.where(active, term, 0.0)
        if k % 2:
            q = q + contrib * (1 if (k // 2) % 2 == 0 else -1)
        else:
            p = p + contrib * (1 if (k // 2) % 2 == 0 else -1)
        if not np.any(active & (mag > 1e-20)):
            break
    chi = x - math.pi / 4.0
    amp = np.sqrt(2.0 / (math.pi * x))
    return amp * (p * np.cos(chi) - q * np.sin(chi)), amp * (p * np.sin(chi) + q * np.cos(chi))


def _bands(x: np.ndarray):
    lo = x <= SERIES_MAX
    hi = x > ASYMPTOTIC_MIN
    mid = ~lo & ~hi
    return lo, mid, hi


def j0(x):
    """Bessel function of the first kind, order zero (even in x)."""
    arr = np.abs(np.asarray(x, dtype=float))
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    out = np.empty_like(arr)
    lo, mid, hi = _bands(arr)
    if lo.any():
        out[lo] = _j0_series(arr[lo])
    if mid.any():
        out[mid] = _miller(arr[mid])[0]
    if hi.any():
        out[hi] = _hankel(arr[hi])[0]
    return float(out[0]) if scalar else out


def y0(x):
    """Bessel function of the second kind (Neumann), order zero; x > 0."""
    arr = np.asarray(x, dtype=float)
    if np.any(arr <= 0):
        raise ValueError("Y0 requires x > 0")
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    out = np.empty_like(arr)
    lo, mid, hi = _bands(arr)
    if lo.any():
        out[lo] = _y0_series(arr[lo])
    if mid.any():
        out[mid] = _miller(arr[mid])[1]
    if hi.any():
        out[hi] = _hankel(arr[hi])[1]
    return float(out[0]) if scalar else out


def i0(x):
    """Modified Bessel function I0 by its (positive-term) power series."""
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    q = arr * arr / 4.0
    term = np.ones_like(arr)
    total = np.ones_like(arr)
    for k in range(1, 400):
        term = term * q / (k * k)
        total = total + term
        if np.all(term <= 1e-17 * total):
            break
    return float(total[0]) if scalar else total


def k0_imag(u):
    """Macdonald function K0 at i*u for real u != 0.

    K0(iu) = -(pi/2) [Y0(|u|) + i sgn(u) J0(|u|)]
    """
    arr = np.asarray(u, dtype=float)
    if np.any(arr == 0):
        raise ValueError("K0(iu) is singular at u = 0")
    a = np.abs(arr)
    out = -(math.pi / 2.0) * (y0(a) + 1j * np.sign(arr) * j0(a))
    return complex(out) if np.ndim(out) == 0 else out


def log_gamma(x: float) -> float:
    return math.lgamma(x)


def special(kind: Literal["J0", "Y0", "logGamma", "I0"], x: float) -> float:
    """Dispatch by name; the CLI and reports refer to functions this way."""
    if kind == "J0":
        return j0(x)
    if kind == "Y0":
        if x <= 0:
            raise ValueError("Y0 requires x > 0")
        return y0(x)
    if kind == "I0":
        return i0(x)
    if kind == "logGamma":
        if x <= 0 and float(x).is_integer():
            raise ValueError("logGamma has poles at non-positive integers")
        return log_gamma(x)
    raise ValueError(f"unknown special function {kind!r}")
