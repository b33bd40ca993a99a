"""Samplers for Haar unitaries, truncations and the induced radial laws.

Every sampler takes a :class:`SeededRng` and an optional ``size``.  With
``size=None`` a single sample is returned; otherwise a leading batch axis of
length ``size`` is added.  All matrices are complex128 ndarrays.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class SeededRng:
    """Counter-based (Philox) stream keyed by ``(seed, stream)``."""

    seed: int
    stream: int = 0
    _gen: np.random.Generator = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not 0 <= self.seed < 2**64 or not 0 <= self.stream < 2**64:
            raise ValueError("seed and stream must be unsigned 64-bit integers")
        bitgen = np.random.Philox(key=self.seed + (self.stream << 64))
        object.__setattr__(self, "_gen", np.random.Generator(bitgen))

    @property
    def generator(self) -> np.random.Generator:
        return self._gen

    def spawn(self, stream: int) -> "SeededRng":
        return SeededRng(self.seed, stream)


def _shape(size, *dims):
    return dims if size is None else (size, *dims)


def sample_ginibre(rows: int, cols: int, rng: SeededRng, size: int | None = None) -> np.ndarray:
    """i.i.d. standard complex Gaussians (E|z|^2 = 1)."""
    if rows < 1 or cols < 1:
        raise ValueError("rows and cols must be positive")
    g = rng.generator
    shape = _shape(size, rows, cols)
    re = g.standard_normal(shape)
    im = g.standard_normal(shape)
    return (re + 1j * im) * np.sqrt(0.5)


def _haar_columns(N: int, k: int, rng: SeededRng, size: int | None) -> np.ndarray:
    """First k columns of a Haar unitary: QR of an N x k Ginibre with phase fix."""
    z = sample_ginibre(N, k, rng, size)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    ph = d / np.abs(d)
    return q * ph[..., None, :]


def sample_haar_unitary(N: int, rng: SeededRng, size: int | None = None) -> np.ndarray:
    if N < 1:
        raise ValueError("N must be positive")
    return _haar_columns(N, N, rng, size)


def sample_special_unitary(N: int, rng: SeededRng, size: int | None = None) -> np.ndarray:
    """Haar U(N) sample divided by the principal N-th root of its determinant."""
    u = sample_haar_unitary(N, rng, size)
    if N == 1:
        return np.ones_like(u)
    phase = np.angle(np.linalg.det(u))
    root = np.exp(1j * phase / N)
    return u / np.asarray(root)[..., None, None]


def truncate_block(U: np.ndarray, n: int, m: int) -> np.ndarray:
    """Principal n x m sub-block (works on single matrices and batches)."""
    rows, cols = U.shape[-2:]
    if not (1 <= n <= rows and 1 <= m <= cols):
        raise ValueError(f"cannot take a {n}x{m} block of a {rows}x{cols} matrix")
    return U[..., :n, :m]


def _gram_eigenvalues(q: np.ndarray) -> np.ndarray:
    g = np.swapaxes(q.conj(), -1, -2) @ q
    return np.linalg.eigvalsh(g)


def sample_truncation_radial(N: int, n: int, m: int, rng: SeededRng,
                             size: int | None = None) -> np.ndarray:
    """Eigenvalues (ascending) of Q*Q for the n x m truncation of Haar U(N).

    When N < n + m, m + n - N of them sit at 1.
    """
    if not 1 <= m <= n <= N:
        raise ValueError(f"need 1 <= m <= n <= N, got N={N}, n={n}, m={m}")
    if n == N:
        return np.ones(_shape(size, m))
    h = _haar_columns(N, m, rng, size)
    x = _gram_eigenvalues(h[..., :n, :])
    return np.clip(x, 0.0, 1.0)


def sample_jacobi_radial(a: int, b: int, m: int, rng: SeededRng,
                         size: int | None = None) -> np.ndarray:
    """m points with joint density prod x^a (1-x)^b times squared Vandermonde."""
    if a < 0 or b < 0 or int(a) != a or int(b) != b:
        raise ValueError("Jacobi parameters must be non-negative integers")
    if m < 1:
        raise ValueError("m must be positive")
    return sample_truncation_radial(a + b + 2 * m, a + m, m, rng, size)


def sample_fermionic_radial(N: int, n: int, m: int, rng: SeededRng,
                            size: int | None = None) -> np.ndarray:
    """Eigenvalues of Q*Q under det(I + Q*Q)^{-N-m-n} on n x m matrices.

    y ~ Jacobi(n - m, N) mapped by x = y / (1 - y).  The Jacobi points are
    the eigenvalues of Q*Q for the top n rows of an (N+n+m) x m Haar frame;
    with P the remaining rows, 1 - y are those of P*P, so x solves the
    pencil Q*Q v = x P*P v.  This avoids cancellation in 1 - y.
    """
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    if N < 1:
        raise ValueError("N must be positive")
    h = _haar_columns(N + n + m, m, rng, size)
    q, p = h[..., :n, :], h[..., n:, :]
    qq = np.swapaxes(q.conj(), -1, -2) @ q
    pp = np.swapaxes(p.conj(), -1, -2) @ p
    low = np.linalg.cholesky(pp)
    inv = np.linalg.inv(low)
    x = np.linalg.eigvalsh(inv @ qq @ np.swapaxes(inv.conj(), -1, -2))
    return np.clip(x, 0.0, None)


def sample_fermionic_matrix(N: int, n: int, m: int, rng: SeededRng,
                            size: int | None = None) -> np.ndarray:
    """Q = H sqrt(X) V* with H Haar on the Stiefel manifold and V Haar on U(m)."""
    x = sample_fermionic_radial(N, n, m, rng, size)
    h = _haar_columns(n, m, rng, size)
    v = sample_haar_unitary(m, rng, size)
    return (h * np.sqrt(x)[..., None, :]) @ np.swapaxes(v.conj(), -1, -2)


def sample_boundary_truncation(N: int, m: int, rng: SeededRng,
                               size: int | None = None) -> np.ndarray:
    """U diag(Z, I_{2m-N}) V* with Z the (N-m) x (N-m) truncation of Haar U(N)."""
    if not N < 2 * m < 2 * N:
        raise ValueError(f"boundary parametrization needs N < 2m < 2N, got N={N}, m={m}")
    k = N - m
    z = _haar_columns(N, k, rng, size)[..., :k, :]
    u = sample_haar_unitary(m, rng, size)
    v = sample_haar_unitary(m, rng, size)
    mid = np.zeros(_shape(size, m, m), dtype=complex)
    mid[..., :k, :k] = z
    idx = np.arange(k, m)
    mid[..., idx, idx] = 1.0
    return u @ mid @ np.swapaxes(v.conj(), -1, -2)


ENSEMBLES = ("haar", "su", "truncation", "jacobi-radial", "fermionic", "boundary")
