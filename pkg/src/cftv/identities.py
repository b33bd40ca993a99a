"""Registry of verification checks.

Each check wires samplers, integrands and closed forms together and returns
a :class:`CheckResult` made of one or more :class:`Part` comparisons.  A
part is stochastic (z-score against a threshold), exact (Fraction
equality) or deterministic (absolute residual against a tolerance).

Every Monte Carlo estimate inside a check draws from its own seed, derived
from the check seed and the estimate's label, so the two sides of an
identity are never computed from shared random numbers.
"""

from __future__ import annotations

import math
import zlib
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable

import numpy as np

from . import closed_forms as cf
from .ensembles import (
    SeededRng,
    sample_boundary_truncation,
    sample_fermionic_matrix,
    sample_fermionic_radial,
    sample_ginibre,
    sample_haar_unitary,
    sample_jacobi_radial,
    sample_special_unitary,
    sample_truncation_radial,
    truncate_block,
)
from .montecarlo import DEFAULT_Z, Estimate, compare, default_samples, estimate_mean, estimate_means
from .partitions import Partition, conjugate, enumerate_partitions, partitions_of_weight
from .quadrature import quad
from .special import i0, j0, k0_imag, y0
from .symfuncs import (
    cauchy_partial_sum,
    exp_coeff,
    hua_coeff_bosonic,
    hua_coeff_fermionic,
    multiplicative_expansion_coeff,
    schur_batch,
    schur_eval,
    schur_of_matrix,
    schur_of_matrix_batch,
    schur_series,
    spectrum_power_sums,
    symmetric_bases_from_power_sums,
    weyl_dimension,
)

DEFAULT_SEED = 20_250_101
PRESET_SEED = 7_777


class ConfigError(ValueError):
    """Parameters outside the regime a check supports."""


# ---------------------------------------------------------------------------
# configuration and results
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckConfig:
    N: int | None = None
    n: int | None = None
    m: int | None = None
    lam: Partition | None = None
    mu: Partition | None = None
    variant: str | None = None
    n_samples: int = field(default_factory=default_samples)
    seed: int = DEFAULT_SEED
    z_threshold: float = DEFAULT_Z
    K: int = 30
    matrices: dict = field(default_factory=dict)
    shards: int = 1

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "n": self.n,
            "m": self.m,
            "lambda": None if self.lam is None else self.lam.text(),
            "mu": None if self.mu is None else self.mu.text(),
            "variant": self.variant,
            "n_samples": self.n_samples,
            "seed": self.seed,
            "z_threshold": self.z_threshold,
            "K": self.K,
            "matrices": {k: encode_matrix(v) for k, v in sorted(self.matrices.items())},
            "shards": self.shards,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CheckConfig":
        return cls(
            N=d.get("N"), n=d.get("n"), m=d.get("m"),
            lam=None if d.get("lambda") is None else Partition.parse(d["lambda"]),
            mu=None if d.get("mu") is None else Partition.parse(d["mu"]),
            variant=d.get("variant"),
            n_samples=d["n_samples"], seed=d["seed"], z_threshold=d["z_threshold"],
            K=d["K"],
            matrices={k: decode_matrix(v) for k, v in d.get("matrices", {}).items()},
            shards=d.get("shards", 1),
        )


def encode_matrix(a) -> list:
    a = np.asarray(a, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in a]


def decode_matrix(rows) -> np.ndarray:
    return np.array([[complex(re, im) for re, im in row] for row in rows])


def encode_value(v) -> dict:
    if isinstance(v, Estimate):
        return v.to_dict()
    if isinstance(v, Fraction):
        return {"exact": f"{v.numerator}/{v.denominator}"}
    z = complex(v)
    return {"value_re": z.real, "value_im": z.imag}


def decode_value(d: dict):
    if "exact" in d:
        return Fraction(d["exact"])
    if "value_re" in d:
        z = complex(d["value_re"], d["value_im"])
        return z.real if z.imag == 0 else z
    return Estimate.from_dict(d)


@dataclass
class Part:
    label: str
    lhs: object
    rhs: object
    kind: str  # "stochastic" | "exact" | "tolerance"
    z: float | None = None
    threshold: float | None = None
    residual: float | None = None
    tol: float | None = None

    @property
    def passed(self) -> bool:
        if self.kind == "stochastic":
            return self.z is not None and self.z <= self.threshold
        if self.kind == "exact":
            return self.lhs == self.rhs
        return self.residual is not None and self.residual <= self.tol

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "kind": self.kind,
            "lhs": encode_value(self.lhs),
            "rhs": encode_value(self.rhs),
            "z": self.z,
            "threshold": self.threshold,
            "residual": self.residual,
            "tol": self.tol,
            "pass": self.passed,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Part":
        return cls(d["label"], decode_value(d["lhs"]), decode_value(d["rhs"]), d["kind"],
                   d["z"], d["threshold"], d["residual"], d["tol"])


@dataclass
class CheckResult:
    name: str
    regime: str
    config: dict
    parts: list[Part] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and bool(self.parts) and all(p.passed for p in self.parts)

    @property
    def headline(self) -> Part | None:
        """The part reported as lhs/rhs/z: the worst stochastic part, else the first failure."""
        stochastic = [p for p in self.parts if p.kind == "stochastic"]
        if stochastic:
            return max(stochastic, key=lambda p: p.z)
        failing = [p for p in self.parts if not p.passed]
        return (failing or self.parts or [None])[0]

    def to_dict(self) -> dict:
        head = self.headline
        return {
            "name": self.name,
            "regime": self.regime,
            "config": self.config,
            "lhs": None if head is None else encode_value(head.lhs),
            "rhs": None if head is None else encode_value(head.rhs),
            "z": None if head is None else head.z,
            "pass": self.passed,
            "notes": "; ".join(self.notes),
            "parts": [p.to_dict() for p in self.parts],
            "error": self.error,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CheckResult":
        notes = [s for s in d.get("notes", "").split("; ") if s]
        return cls(d["name"], d["regime"], d["config"],
                   [Part.from_dict(p) for p in d.get("parts", [])], notes, d.get("error"))


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def derive_seed(seed: int, label: str) -> int:
    """Independent 63-bit seed for the estimate called ``label``."""
    ss = np.random.SeedSequence([seed, zlib.crc32(label.encode())])
    return int(ss.generate_state(1, np.uint64)[0] >> np.uint64(1))


def preset_matrix(label: str, rows: int, cols: int, norm: float = 1.0) -> np.ndarray:
    """Deterministic pseudo-random matrix with spectral norm ``norm``."""
    g = sample_ginibre(rows, cols, SeededRng(PRESET_SEED, zlib.crc32(label.encode())))
    return g * (norm / np.linalg.norm(g, 2))


def _dag(a: np.ndarray) -> np.ndarray:
    return np.swapaxes(np.conj(a), -1, -2)


def _tr(a: np.ndarray) -> np.ndarray:
    return np.trace(a, axis1=-2, axis2=-1)


class _Run:
    """Per-check context: collects parts and echoes the resolved configuration."""

    def __init__(self, name: str, regime: str, cfg: CheckConfig):
        self.cfg = cfg
        self.result = CheckResult(name, regime, {})
        self.echo: dict = {}
        self.matrices: dict = dict(cfg.matrices)

    def matrix(self, key: str, rows: int, cols: int, norm: float = 1.0) -> np.ndarray:
        if key in self.matrices:
            a = np.asarray(self.matrices[key], dtype=complex)
            if a.shape != (rows, cols):
                raise ConfigError(f"matrix {key} must be {rows}x{cols}, got {a.shape}")
        else:
            a = preset_matrix(f"{self.result.name}:{key}", rows, cols, norm)
        self.matrices[key] = a
        return a

    def mc(self, label: str, integrand, sampler, n_samples: int | None = None) -> Estimate:
        n = n_samples or self.cfg.n_samples
        return estimate_mean(integrand, sampler, n, derive_seed(self.cfg.seed, label),
                             shards=self.cfg.shards)

    def mc_many(self, label: str, integrand, sampler) -> list[Estimate]:
        return estimate_means(integrand, sampler, self.cfg.n_samples,
                              derive_seed(self.cfg.seed, label), shards=self.cfg.shards)

    def stochastic(self, label: str, est: Estimate, ref) -> Part:
        c = compare(est, ref, self.cfg.z_threshold)
        part = Part(label, est, ref, "stochastic", z=c.z, threshold=c.threshold)
        self.result.parts.append(part)
        return part

    def exact(self, label: str, a, b) -> Part:
        part = Part(label, a, b, "exact")
        self.result.parts.append(part)
        return part

    def close(self, label: str, a, b, tol: float) -> Part:
        part = Part(label, a, b, "tolerance", residual=float(abs(complex(a) - complex(b))), tol=tol)
        self.result.parts.append(part)
        return part

    def note(self, text: str):
        self.result.notes.append(text)

    def finish(self) -> CheckResult:
        d = replace(self.cfg, matrices=self.matrices).to_dict()
        d.update(self.echo)
        self.result.config = d
        return self.result


def _pick(value, default):
    return default if value is None else value


def _need(cond: bool, message: str):
    if not cond:
        raise ConfigError(message)


# ---------------------------------------------------------------------------
# bosonic CFT
# ---------------------------------------------------------------------------

def bcft_regime(N: int, m: int) -> str:
    """m = N is tested first since it also satisfies 2m > N."""
    if not 1 <= m <= N:
        raise ConfigError(f"need 1 <= m <= N, got N={N}, m={m}")
    if m == N:
        return "m=N"
    if N >= 2 * m:
        return "N>=2m"
    return "N<2m<2N"


def _ball_sampler(N: int, m: int):
    regime = bcft_regime(N, m)
    if regime == "m=N":
        return lambda g, s: sample_haar_unitary(N, g, s)
    if regime == "N>=2m":
        return lambda g, s: truncate_block(sample_haar_unitary(N, g, s), m, m)
    return lambda g, s: sample_boundary_truncation(N, m, g, s)


def bcft_quadrature_m1(N: int, d: float, abs_tol: float = 1e-12) -> float:
    """(N-1) int_0^1 I0(2 p d) 2p (1-p^2)^{N-2} dp: both sides of the m = 1 bCFT."""
    if N == 1:
        return float(i0(2.0 * d))
    val = quad(lambda p: i0(2.0 * p * d) * 2.0 * p * (1.0 - p * p) ** (N - 2), 0.0, 1.0,
               abs_tol=abs_tol)[0]
    return (N - 1) * val


def check_bcft(cfg: CheckConfig) -> CheckResult:
    """Haar average of exp Tr(XY*U + U*YX*) versus the truncated-ball average."""
    N, m = _pick(cfg.N, 4), _pick(cfg.m, 2)
    regime = bcft_regime(N, m)
    run = _Run("check_bcft", regime, cfg)
    run.echo.update(N=N, m=m, regime_branch=regime)
    X = run.matrix("X", N, m)
    Y = run.matrix("Y", N, m)
    XY = X @ _dag(Y)
    A, B = _dag(X) @ X, _dag(Y) @ Y

    def lhs_f(U):
        return np.exp(2.0 * np.real(_tr(XY @ U)))

    def rhs_f(Q, C=A, D=B):
        return np.exp(_tr(C @ Q) + _tr(_dag(Q) @ D))

    ball = _ball_sampler(N, m)
    lhs = run.mc("lhs", lhs_f, lambda g, s: sample_haar_unitary(N, g, s))
    rhs = run.mc("rhs", rhs_f, ball)
    run.stochastic("haar ~ ball", lhs, rhs)

    # spectrum-preserving replacement (C, D) = (A S, S^-1 B)
    S = np.eye(m) + preset_matrix("check_bcft:S", m, m, 0.5)
    C, D = A @ S, np.linalg.solve(S, B)
    rhs2 = run.mc("rhs-cd", lambda Q: rhs_f(Q, C, D), ball)
    run.stochastic("haar ~ ball with (C, D)", lhs, rhs2)

    if m == 1:
        d = float(np.linalg.norm(X) * np.linalg.norm(Y))
        ref = bcft_quadrature_m1(N, d)
        run.stochastic("haar ~ quadrature", lhs, ref)
        run.stochastic("ball ~ quadrature", rhs, ref)

    zero = np.zeros((N, m))
    z_l = run.mc("zero-lhs", lambda U: np.exp(2.0 * np.real(_tr(zero @ zero.T @ U))),
                 lambda g, s: sample_haar_unitary(N, g, s), 1000)
    z_r = run.mc("zero-rhs", lambda Q: np.exp(_tr(np.zeros((m, m)) @ Q)), ball, 1000)
    run.exact("zero input", Fraction(z_l.mean.real) if z_l.stderr == 0 else z_l.mean,
              Fraction(z_r.mean.real) if z_r.stderr == 0 else z_r.mean)
    return run.finish()


# ---------------------------------------------------------------------------
# the U(m) alternative with a determinant weight
# ---------------------------------------------------------------------------

def ww_normalization(N: int, m: int) -> Fraction:
    """prod_{j=1}^m (m-j)!/(N-j)!: the U(m) integral equals this times the Haar side."""
    val = Fraction(1)
    for j in range(1, m + 1):
        val *= Fraction(math.factorial(m - j), math.factorial(N - j))
    return val


def check_ww_alternative(cfg: CheckConfig) -> CheckResult:
    """Haar U(N) side versus U(m) integral with det(V Y*X)^{m-N}, and SU(N) versus U(N)."""
    N, m = _pick(cfg.N, 3), _pick(cfg.m, 1)
    _need(1 <= m <= N, f"need 1 <= m <= N, got N={N}, m={m}")
    run = _Run("check_ww_alternative", "m<=N; SU(N) part m<N", cfg)
    run.echo.update(N=N, m=m)
    X = run.matrix("X", N, m)
    Y = run.matrix("Y", N, m)
    YX = _dag(Y) @ X
    YY = _dag(Y) @ Y
    if abs(np.linalg.det(YX)) < 1e-12 * max(1.0, np.linalg.norm(YX)) ** m:
        raise ConfigError("Y*X is rank deficient; det(V Y*X)^(m-N) is undefined")
    A = _dag(X) @ X
    k = N - m
    # the printed weight integrates to kappa times the Haar side
    kappa = complex(float(ww_normalization(N, m)) * (np.linalg.det(YX) / np.linalg.det(YY)) ** (-k))
    run.echo.update(kappa_re=kappa.real, kappa_im=kappa.imag)

    def lhs_f(U):
        return np.exp(2.0 * np.real(_tr(_dag(Y) @ U @ X)))

    def weighted(V):
        w = np.linalg.det(V @ YX) ** (-k)
        return w * np.exp(_tr(A @ _dag(V)) + _tr(V @ YY))

    haar = run.mc("haar", lhs_f, lambda g, s: sample_haar_unitary(N, g, s))
    raw = run.mc("u(m)", weighted, lambda g, s: sample_haar_unitary(m, g, s))
    corrected = run.mc("u(m)-normalized", lambda V: weighted(V) / kappa,
                       lambda g, s: sample_haar_unitary(m, g, s))
    run.stochastic("U(N) ~ U(m) determinant form / kappa", haar, corrected)
    run.note(f"raw U(m) integral {raw.mean:.6g} = kappa * Haar side with kappa = {kappa:.6g}")
    if m < N:
        su = run.mc("su", lhs_f, lambda g, s: sample_special_unitary(N, g, s))
        run.stochastic("U(N) ~ SU(N)", haar, su)
        run.stochastic("SU(N) ~ U(m) determinant form / kappa", su, corrected)
    if m == 1:
        d = float(np.linalg.norm(X) * np.linalg.norm(Y))
        run.stochastic("U(N) ~ quadrature", haar, bcft_quadrature_m1(N, d))
    return run.finish()


# ---------------------------------------------------------------------------
# Schur moments
# ---------------------------------------------------------------------------

def _moment_lams(cfg: CheckConfig, max_len: int) -> list[Partition]:
    if cfg.lam is not None:
        return [cfg.lam]
    return [lam for lam in enumerate_partitions(3, max_len) if lam]


def check_schur_moments(cfg: CheckConfig) -> CheckResult:
    """E s_lambda(Q*Q) for truncations (variant 'bosonic'), the fermionic measure
    ('fermionic'), and E s_lambda(X Q Y Q*) with fixed diagonal X, Y ('matrix')."""
    variant = cfg.variant or "bosonic"
    N, n, m = _pick(cfg.N, 4), _pick(cfg.n, 2), _pick(cfg.m, 1)
    run = _Run("check_schur_moments", "m<=n<=N (bosonic) | m<=n, any N (fermionic)", cfg)
    run.echo.update(N=N, n=n, m=m, variant=variant)
    _need(1 <= m <= n, f"need 1 <= m <= n, got n={n}, m={m}")
    if variant == "bosonic":
        _need(n <= N, f"need n <= N, got N={N}, n={n}")
        lams = [lam for lam in _moment_lams(cfg, m)]
        ests = run.mc_many("radial", lambda x: np.stack([schur_batch(l, x) for l in lams], 1),
                           lambda g, s: sample_truncation_radial(N, n, m, g, s))
        for lam, est in zip(lams, ests):
            run.stochastic(f"lambda={lam.text()}", est, cf.rhs_schur_moment_bosonic(lam, N, n, m))
        if n + m > N:
            run.note(f"{n + m - N} eigenvalue(s) pinned at 1")
    elif variant == "fermionic":
        if cfg.lam is not None:
            _need(cfg.lam[0] <= N, f"lambda_1 = {cfg.lam[0]} > N = {N}")
            lams = [cfg.lam]
        else:
            # default set keeps |lambda| + m + 1 <= N, where the moments are comfortably integrable
            lams = [lam for lam in _moment_lams(cfg, m) if lam.weight + m + 1 <= N]
            _need(bool(lams), f"no partition with 1 <= |lambda| <= 3 and |lambda| + m + 1 <= N = {N}")
        ests = run.mc_many("radial", lambda x: np.stack([schur_batch(l, x) for l in lams], 1),
                           lambda g, s: sample_fermionic_radial(N, n, m, g, s))
        for lam, est in zip(lams, ests):
            run.stochastic(f"lambda={lam.text()}", est, cf.rhs_schur_moment_fermionic(lam, N, n, m))
            if 2 * lam[0] > N:
                run.note(f"lambda={lam.text()}: integrand variance is infinite (2*lambda_1 > N)")
    elif variant == "matrix":
        _need(n <= N, f"need n <= N, got N={N}, n={n}")
        defaults = {"X": np.diag(np.linspace(1.0, 0.4, n)), "Y": np.diag(np.linspace(0.9, 0.5, m))}
        for key, size in (("X", n), ("Y", m)):
            if key not in cfg.matrices:
                run.matrices[key] = defaults[key].astype(complex)
        Xd, Yd = run.matrix("X", n, n), run.matrix("Y", m, m)
        lams = _moment_lams(cfg, min(n, m))

        def f(U):
            Q = U[:, :n, :m]
            M = Xd @ Q @ Yd @ _dag(Q)
            return np.stack([schur_of_matrix_batch(l, M) for l in lams], 1)

        ests = run.mc_many("matrix", f, lambda g, s: sample_haar_unitary(N, g, s))
        for lam, est in zip(lams, ests):
            ref = schur_of_matrix(lam, Xd) * schur_of_matrix(lam, Yd) / float(weyl_dimension(lam, N))
            run.stochastic(f"lambda={lam.text()}", est, ref)
    else:
        raise ConfigError(f"unknown variant {variant!r}")
    return run.finish()


def schur_moment_grid(variant: str, max_N: int = 6) -> list[tuple[int, int, int]]:
    """(N, n, m) configurations of the moment grid: m <= n <= N <= max_N for
    truncations, m <= n <= max_N with N >= m + 2 for the fermionic measure."""
    if variant == "bosonic":
        return [(N, n, m) for N in range(1, max_N + 1) for n in range(1, N + 1) for m in range(1, n + 1)]
    if variant == "fermionic":
        return [(N, n, m) for N in range(1, max_N + 1) for n in range(1, max_N + 1)
                for m in range(1, n + 1) if N >= m + 2]
    raise ConfigError(f"unknown variant {variant!r}")


# ---------------------------------------------------------------------------
# orthogonality relations
# ---------------------------------------------------------------------------

def _other_partition(lam: Partition) -> Partition:
    same = [p for p in partitions_of_weight(lam.weight) if p != lam]
    return same[0] if same else Partition((lam.weight + 1,))


def check_orthogonality(cfg: CheckConfig) -> CheckResult:
    """Schur orthogonality on U(m) and on truncations, diagonal and off-diagonal."""
    lam = cfg.lam or Partition((2,))
    mu = cfg.mu or _other_partition(lam)
    _need(lam.weight <= 4 and mu.weight <= 4, "|lambda|, |mu| must be <= 4")
    N, n, m = _pick(cfg.N, 4), _pick(cfg.n, 2), _pick(cfg.m, 2)
    _need(1 <= m <= N and 1 <= n <= N, f"need m, n <= N, got N={N}, n={n}, m={m}")
    run = _Run("check_orthogonality", "m,n<=N", cfg)
    run.echo.update(N=N, n=n, m=m, lam=lam.text(), mu=mu.text())
    A = run.matrix("A", m, m)
    B = run.matrix("B", m, m)
    haar_m = lambda g, s: sample_haar_unitary(m, g, s)  # noqa: E731

    e = run.mc("conj-invariant", lambda U: schur_of_matrix_batch(lam, A @ U @ B @ _dag(U)), haar_m)
    ref = schur_of_matrix(lam, A) * schur_of_matrix(lam, B) / float(weyl_dimension(lam, m))
    run.stochastic(f"s_{lam.text()}(AUBU*)", e, ref)

    pairs = [(lam, lam), (mu, mu), (lam, mu)]
    for a, b in pairs:
        if max(a.length, b.length) > m:
            continue
        est = run.mc(f"pair-{a.text()}-{b.text()}",
                     lambda U, a=a, b=b: schur_of_matrix_batch(a, A @ U)
                     * np.conj(schur_of_matrix_batch(b, B @ U)), haar_m)
        ref = schur_of_matrix(a, A @ _dag(B)) / float(weyl_dimension(a, m)) if a == b else 0.0
        run.stochastic(f"s_{a.text()}(AU) conj s_{b.text()}(BU)", est, ref)

    L = run.matrix("L", m, n)
    M = run.matrix("M", m, n)
    trunc = lambda g, s: truncate_block(sample_haar_unitary(N, g, s), n, m)  # noqa: E731
    for a, b in pairs:
        if max(a.length, b.length) > min(m, n):
            continue
        est = run.mc(f"trunc-{a.text()}-{b.text()}",
                     lambda Q, a=a, b=b: schur_of_matrix_batch(a, L @ Q)
                     * np.conj(schur_of_matrix_batch(b, M @ Q)), trunc)
        ref = schur_of_matrix(a, _dag(M) @ L) / float(weyl_dimension(a, N)) if a == b else 0.0
        run.stochastic(f"s_{a.text()}(LQ) conj s_{b.text()}(MQ)", est, ref)
    return run.finish()


# ---------------------------------------------------------------------------
# inverse-determinant and characteristic-polynomial expansions
# ---------------------------------------------------------------------------

def _product_matrices(run: _Run, N: int, norm_a: float, norm_b: float):
    A = run.matrix("A", N, N, norm_a)
    B = run.matrix("B", N, N, norm_b)
    return A, B


def check_resolvent_expansion(cfg: CheckConfig) -> CheckResult:
    """E_U 1/(det(I-AU)^m det(I-U*B*)^n) = E_x prod_{i,j} 1/(1 - x_i beta_j)."""
    N, n, m = _pick(cfg.N, 4), _pick(cfg.n, 1), _pick(cfg.m, 2)
    _need(1 <= m <= N and 1 <= n <= N, f"need m, n <= N, got N={N}, n={n}, m={m}")
    run = _Run("check_resolvent_expansion", "m,n<=N; spectral radius of A, B < 1", cfg)
    run.echo.update(N=N, n=n, m=m)
    A, B = _product_matrices(run, N, 0.5, 0.5)
    for key, mat in (("A", A), ("B", B)):
        if np.linalg.norm(mat, 2) >= 1.0:
            raise ConfigError(f"||{key}|| >= 1: the integrand is unbounded")
    beta = np.linalg.eigvals(_dag(B) @ A)
    hi, lo = max(m, n), min(m, n)
    eye = np.eye(N)

    def lhs_f(U):
        return 1.0 / (np.linalg.det(eye - A @ U) ** m * np.linalg.det(eye - _dag(U) @ _dag(B)) ** n)

    def rhs_f(x):
        return np.prod(1.0 / (1.0 - x[:, :, None] * beta[None, None, :]), axis=(1, 2))

    lhs = run.mc("haar", lhs_f, lambda g, s: sample_haar_unitary(N, g, s))
    rhs = run.mc("radial", rhs_f, lambda g, s: sample_truncation_radial(N, hi, lo, g, s))
    run.stochastic("haar ~ truncation radial", lhs, rhs)
    if m == n == N:
        closed = 1.0 / np.linalg.det(eye - _dag(B) @ A) ** N
        run.stochastic("haar ~ closed form", lhs, closed)
        run.stochastic("radial ~ closed form", rhs, closed)
    zero = run.mc("zero", lambda U: 1.0 / np.linalg.det(eye - 0.0 * U) ** m,
                  lambda g, s: sample_haar_unitary(N, g, s), 1000)
    run.exact("A = 0", Fraction(zero.mean.real), Fraction(1))
    return run.finish()


def charpoly_schur_sum(A, B, N: int, n: int, m: int):
    """sum_mu s_mu(1_m) s_mu(1_n) / s_mu'(1_N) s_mu'(B*A); exact for real matrices."""
    A = np.asarray(A)
    B = np.asarray(B)
    if np.all(np.imag(A) == 0) and np.all(np.imag(B) == 0):
        BA = [[Fraction(float(v)) for v in row] for row in (B.real.T @ A.real)]
    else:
        BA = _dag(B) @ A
    k = min(m, n)
    total = Fraction(0)
    for w in range(k * N + 1):
        for mu in partitions_of_weight(w, k):
            if mu and mu[0] > N:
                continue
            coeff = weyl_dimension(mu, m) * weyl_dimension(mu, n) / weyl_dimension(conjugate(mu), N)
            total = total + coeff * schur_of_matrix(conjugate(mu), BA)
    return total


def check_charpoly_expansion(cfg: CheckConfig) -> CheckResult:
    """E_U det(I+AU)^m det(I+U*B*)^n versus the fermionic radial average and the finite Schur sum."""
    N, n, m = _pick(cfg.N, 2), _pick(cfg.n, 1), _pick(cfg.m, 1)
    _need(N >= 1 and m >= 1 and n >= 1, "N, n, m must be positive")
    run = _Run("check_charpoly_expansion", "any N, n, m", cfg)
    run.echo.update(N=N, n=n, m=m)
    if "A" in cfg.matrices or "B" in cfg.matrices:
        A, B = run.matrix("A", N, N), run.matrix("B", N, N)
    else:
        A = B = 0.5 * np.eye(N)
        run.matrices.update(A=A, B=B)
    beta = np.linalg.eigvals(_dag(B) @ A)
    hi, lo = max(m, n), min(m, n)
    eye = np.eye(N)

    def lhs_f(U):
        return np.linalg.det(eye + A @ U) ** m * np.linalg.det(eye + _dag(U) @ _dag(B)) ** n

    def rhs_f(x):
        return np.prod(1.0 + x[:, :, None] * beta[None, None, :], axis=(1, 2))

    exact = charpoly_schur_sum(A, B, N, n, m)
    lhs = run.mc("haar", lhs_f, lambda g, s: sample_haar_unitary(N, g, s))
    rhs = run.mc("fermionic", rhs_f, lambda g, s: sample_fermionic_radial(N, hi, lo, g, s))
    run.stochastic("haar ~ Schur sum", lhs, complex(exact))
    run.stochastic("fermionic ~ Schur sum", rhs, complex(exact))
    run.stochastic("haar ~ fermionic", lhs, rhs)
    rank = int(np.sum(np.abs(beta) > 1e-12))
    if 2 * rank > N:
        run.note(f"fermionic integrand has infinite variance (degree {rank} per eigenvalue, N={N})")
    zero = run.mc("zero", lambda U: np.linalg.det(eye + 0.0 * U) ** m,
                  lambda g, s: sample_haar_unitary(N, g, s), 1000)
    run.exact("A = 0", Fraction(zero.mean.real), Fraction(1))
    return run.finish()


# ---------------------------------------------------------------------------
# Berezin reproducing kernels
# ---------------------------------------------------------------------------

def check_berezin(cfg: CheckConfig) -> CheckResult:
    """Reproducing property of det(I - Q*Z)^{-N} (bosonic) and det(I + Q*Z)^N (fermionic)."""
    variant = cfg.variant or "both"
    run = _Run("check_berezin", "bosonic N>=n+m | fermionic integer N", cfg)
    run.echo.update(variant=variant)
    if variant in ("bosonic", "both"):
        N, n, m = _pick(cfg.N, 4), _pick(cfg.n, 1), _pick(cfg.m, 1)
        _need(N >= n + m, f"bosonic kernel needs N >= n+m, got N={N}, n={n}, m={m}")
        if (n, m) == (1, 1) and "Z1b" not in cfg.matrices:
            Z1 = Z2 = np.array([[0.5 + 0j]])
            run.matrices.update(Z1b=Z1, Z2b=Z2)
        else:
            Z1, Z2 = run.matrix("Z1b", n, m, 0.6), run.matrix("Z2b", n, m, 0.6)
        for key, Z in (("Z1", Z1), ("Z2", Z2)):
            if np.linalg.norm(Z, 2) >= 1:
                raise ConfigError(f"{key}*{key} < I is violated")
        Im = np.eye(m)

        def fb(Q):
            return 1.0 / (np.linalg.det(Im - _dag(Q) @ Z1) ** N * np.linalg.det(Im - _dag(Z2) @ Q) ** N)

        est = run.mc("bosonic", fb, lambda g, s: truncate_block(sample_haar_unitary(N, g, s), n, m))
        ref = complex(1.0 / np.linalg.det(Im - _dag(Z2) @ Z1) ** N)
        run.stochastic(f"bosonic N={N} n={n} m={m}", est, ref)
        run.echo.update(bosonic={"N": N, "n": n, "m": m})
        zero = np.zeros((n, m))
        z_est = run.mc("bosonic-zero", lambda Q: 1.0 / np.linalg.det(Im - _dag(Q) @ zero) ** N,
                       lambda g, s: truncate_block(sample_haar_unitary(N, g, s), n, m), 1000)
        run.exact("bosonic Z1 = Z2 = 0", Fraction(z_est.mean.real), Fraction(1))
    if variant in ("fermionic", "both"):
        N = cfg.N if variant == "fermionic" and cfg.N is not None else 2
        n = cfg.n if variant == "fermionic" and cfg.n is not None else 1
        m = cfg.m if variant == "fermionic" and cfg.m is not None else 1
        _need(m <= n, "fermionic sampler needs m <= n")
        if (n, m) == (1, 1) and "Z1f" not in cfg.matrices:
            Z1, Z2 = np.array([[0.3 + 0j]]), np.array([[0.7 + 0j]])
            run.matrices.update(Z1f=Z1, Z2f=Z2)
        else:
            Z1, Z2 = run.matrix("Z1f", n, m, 0.6), run.matrix("Z2f", n, m, 0.6)
        Im = np.eye(m)

        def ff(Q):
            return np.linalg.det(Im + _dag(Q) @ Z1) ** N * np.linalg.det(Im + _dag(Z2) @ Q) ** N

        est = run.mc("fermionic", ff, lambda g, s: sample_fermionic_matrix(N, n, m, g, s))
        ref = complex(np.linalg.det(Im + _dag(Z2) @ Z1) ** N)
        run.stochastic(f"fermionic N={N} n={n} m={m}", est, ref)
        run.echo.update(fermionic={"N": N, "n": n, "m": m})
        zero = np.zeros((n, m))
        z_est = run.mc("fermionic-zero", lambda Q: np.linalg.det(Im + _dag(Q) @ zero) ** N,
                       lambda g, s: sample_fermionic_matrix(N, n, m, g, s), 1000)
        run.exact("fermionic Z1 = Z2 = 0", Fraction(z_est.mean.real), Fraction(1))
        run.note("fermionic kernel product has infinite variance; stderr is indicative only")
    if variant not in ("bosonic", "fermionic", "both"):
        raise ConfigError(f"unknown variant {variant!r}")
    return run.finish()


# ---------------------------------------------------------------------------
# Selberg-type integrals
# ---------------------------------------------------------------------------

def check_selberg(cfg: CheckConfig) -> CheckResult:
    """Product form = Gram determinant = binomial determinant, and radial averages
    of s_lambda against the normalized closed forms."""
    run = _Run("check_selberg", "integer parameters; bosonic N>=n+m", cfg)
    lam = cfg.lam or Partition((1,))
    m_exact = _pick(cfg.m, 2)
    for kind, fn in (("S^B", cf.schur_selberg_bosonic), ("S^F", cf.schur_selberg_fermionic)):
        p, q = 1, 1 if kind == "S^B" else 5
        try:
            vals = [fn(lam, p, q, m_exact, route).value for route in ("product", "gram", "binomial")]
        except ValueError as exc:
            run.note(f"{kind} skipped: {exc}")
            continue
        run.exact(f"{kind}({lam.text()}; p={p}, q={q}, m={m_exact}) product = gram", vals[0], vals[1])
        run.exact(f"{kind}({lam.text()}; p={p}, q={q}, m={m_exact}) product = binomial", vals[0], vals[2])

    # bosonic radial average
    N, n, m = _pick(cfg.N, 6), _pick(cfg.n, 2), _pick(cfg.m, 2)
    lam_b = cfg.lam or Partition((2,))
    _need(1 <= m <= n and N >= n + m, f"need m <= n and N >= n+m, got N={N}, n={n}, m={m}")
    norm_b = cf.normalized_selberg_average_bosonic(lam_b, N, n, m)
    run.exact("S^B / c = Weyl ratio", norm_b, cf.rhs_schur_moment_bosonic(lam_b, N, n, m))
    run.exact("S^B / c = dim / Hua coefficient",
              norm_b, weyl_dimension(lam_b, n) / hua_coeff_bosonic(lam_b, N, m))
    est = run.mc("jacobi", lambda x: schur_batch(lam_b, x),
                 lambda g, s: sample_jacobi_radial(n - m, N - n - m, m, g, s))
    run.stochastic(f"E s_{lam_b.text()} over Jacobi({n - m}, {N - n - m}; {m})", est, norm_b)

    # fermionic radial average
    Nf, nf, mf = 3, 1, 1
    lam_f = Partition((1,))
    norm_f = cf.normalized_selberg_average_fermionic(lam_f, Nf, nf, mf)
    run.exact("S^F / k = Weyl ratio", norm_f, cf.rhs_schur_moment_fermionic(lam_f, Nf, nf, mf))
    est = run.mc("fermionic", lambda x: schur_batch(lam_f, x),
                 lambda g, s: sample_fermionic_radial(Nf, nf, mf, g, s))
    run.stochastic(f"E s_{lam_f.text()} fermionic N={Nf}", est, norm_f)
    run.echo.update(N=N, n=n, m=m, lam=lam.text(), lam_radial=lam_b.text())
    return run.finish()


# ---------------------------------------------------------------------------
# Schur series
# ---------------------------------------------------------------------------

def _rational_spectrum(values) -> list[Fraction]:
    return [Fraction(v) for v in values]


def hua_partial_sum(a, z, K: int, fermionic: bool = False):
    m = len(z)
    coeff = hua_coeff_fermionic if fermionic else hua_coeff_bosonic
    return schur_series(lambda lam: coeff(lam, a, m) * weyl_dimension(lam, m), z, K, m)


def _first_omitted_block(coeff, z, K: int) -> float:
    """Size of the weight K+1 block: the reported tail indicator."""
    block = 0.0
    for lam in partitions_of_weight(K + 1, len(z)):
        block += abs(complex(coeff(lam) * schur_eval(lam, z)))
    return block


def check_series_expansions(cfg: CheckConfig) -> CheckResult:
    """Cauchy, dual Cauchy, Hua and exponential expansions, the determinant formula
    for multiplicative coefficients, and the generalized bCFT at N=3, m=1."""
    K = cfg.K
    run = _Run("check_series_expansions", "spectra of modulus <= 0.5", cfg)
    run.echo.update(K=K)
    tol = 1e-8

    # exponential
    x = [0.3, 0.2]
    s = schur_series(lambda lam: exp_coeff(lam), x, 12)
    run.close("exp: e^(0.5) vs |lambda|<=12", s, math.exp(sum(x)), 1e-9)

    # Cauchy
    for t, xs in (([0.5, 0.3], [0.6, -0.4]), ([0.5, 0.2, -0.3], [0.7, 0.1, 0.4]), ([0.4], [0.9, 0.5, 0.2])):
        prod = 1.0
        for ti in t:
            for xj in xs:
                prod /= 1.0 - ti * xj
        radius = max(abs(ti * xj) for ti in t for xj in xs)
        if radius > 0.5:
            raise ConfigError("Cauchy spectra exceed radius 0.5")
        s = cauchy_partial_sum(t, xs, K)
        run.close(f"Cauchy t={t} x={xs}", s, prod, tol)

    # dual Cauchy: finite, exact
    for t, xs in (([1, 2], [3, -1]), ([Fraction(1, 2), 3], [2, Fraction(-2, 3)])):
        t, xs = _rational_spectrum(t), _rational_spectrum(xs)
        prod = Fraction(1)
        for ti in t:
            for xj in xs:
                prod *= 1 + ti * xj
        run.exact(f"dual Cauchy t={[str(v) for v in t]} x={[str(v) for v in xs]}",
                  cauchy_partial_sum(t, xs, len(t) * len(xs), dual=True), prod)

    # Hua expansions
    spectra = {1: [0.3], 2: [0.3, 0.1], 3: [0.3, 0.1, -0.2]}
    for a in (0.5, 1, 2.5, 4):
        for m, z in spectra.items():
            target = math.prod((1.0 - zj) ** (-a) for zj in z)
            s = hua_partial_sum(a, z, K)
            run.close(f"Hua bosonic a={a} z={z}", s, target, tol)
            target = math.prod((1.0 + zj) ** a for zj in z)
            s = hua_partial_sum(a, z, K, fermionic=True)
            run.close(f"Hua fermionic a={a} z={z}", s, target, tol)
    for a in (1, 2, 4):
        for z in ([Fraction(1, 3), Fraction(-1, 5)], [Fraction(1, 2), Fraction(1, 7), Fraction(2, 9)]):
            target = math.prod((1 + zj) ** a for zj in z)
            s = hua_partial_sum(a, z, a * len(z), fermionic=True)
            run.exact(f"Hua fermionic a={a} exact z={[str(v) for v in z]}", s, target)
    worst = max(
        _first_omitted_block(lambda lam: hua_coeff_bosonic(lam, 4, 3) * weyl_dimension(lam, 3),
                             spectra[3], K),
        _first_omitted_block(lambda lam: hua_coeff_bosonic(lam, 4, 2) * weyl_dimension(lam, 2),
                             spectra[2], K),
    )
    run.note(f"largest weight-{K + 1} block in the Hua series: {worst:.2e}")

    # determinant formula for multiplicative coefficients
    t = _rational_spectrum([Fraction(1, 2), Fraction(-1, 3), 2])
    p = spectrum_power_sums(t, 12)
    h = symmetric_bases_from_power_sums(p, 12, "complete")
    e = symmetric_bases_from_power_sums(p, 12, "elementary")
    a_frac = Fraction(5, 2)

    def gamma_b(r):
        out = Fraction(1)
        for i in range(r):
            out = out * (a_frac + i) / (i + 1)
        return out

    def gamma_f(r):
        out = Fraction(1)
        for i in range(r):
            out = out * (a_frac - i) / (i + 1)
        return out

    mismatches = {k: 0 for k in ("exp", "cauchy", "dual", "hua-b", "hua-f", "padding")}
    for m in (1, 2, 3):
        for lam in enumerate_partitions(6, m):
            if multiplicative_expansion_coeff(lambda r: Fraction(1, math.factorial(r)), lam, m) != exp_coeff(lam):
                mismatches["exp"] += 1
            if multiplicative_expansion_coeff(h, lam, m) != schur_eval(lam, t):
                mismatches["cauchy"] += 1
            if multiplicative_expansion_coeff(lambda r: e[r] if r < len(e) else 0, lam, m) \
                    != schur_eval(conjugate(lam), t):
                mismatches["dual"] += 1
            if multiplicative_expansion_coeff(gamma_b, lam, m) \
                    != hua_coeff_bosonic(lam, a_frac, m) * weyl_dimension(lam, m):
                mismatches["hua-b"] += 1
            if multiplicative_expansion_coeff(gamma_f, lam, m) \
                    != hua_coeff_fermionic(lam, a_frac, m) * weyl_dimension(lam, m):
                mismatches["hua-f"] += 1
            if multiplicative_expansion_coeff(gamma_b, lam, m) != multiplicative_expansion_coeff(gamma_b, lam, m + 1):
                mismatches["padding"] += 1
    for key, count in mismatches.items():
        run.exact(f"multiplicative coefficients: {key} mismatches", count, 0)

    # generalized bCFT with g generated by h(z) = (1 - t z)^(-a)
    N, m = 3, 1
    tt, aa = 0.4, 1.5
    X = run.matrix("X", N, m)
    Y = run.matrix("Y", N, m)

    def g_det(M):
        ev = np.linalg.eigvals(M)
        return np.exp(-aa * np.sum(np.log(1.0 - tt * ev), axis=-1))

    lhs = run.mc("bcftgen-haar", lambda U: np.abs(g_det(X @ _dag(Y) @ U)) ** 2,
                 lambda g, s: sample_haar_unitary(N, g, s))
    A, B = _dag(X) @ X, _dag(Y) @ Y
    rhs = run.mc("bcftgen-ball", lambda Q: g_det(A @ Q) * np.conj(g_det(B @ Q)),
                 lambda g, s: truncate_block(sample_haar_unitary(N, g, s), m, m))
    run.stochastic("generalized bCFT, h(z) = (1 - 0.4 z)^-1.5, N=3, m=1", lhs, rhs)
    return run.finish()


# ---------------------------------------------------------------------------
# deformed CFT at m = 1
# ---------------------------------------------------------------------------

def resolvent_lhs_integrand(eps: float, B: np.ndarray):
    N = B.shape[0]
    eye = np.eye(N)

    def f(U):
        M = eye - B @ U
        return 1.0 / np.real(np.linalg.det(eps**2 * eye + M @ _dag(M)))

    return f


def resolvent_rhs_quadrature(N: int, eps: float, b: np.ndarray, abs_tol: float = 1e-11) -> float:
    """int_0^1 p (1-p^2)^{N-2} Im F(p) dp, F(p) = int_0^inf du prod_j 1/(eps^2 - p^2 + b_j^2 + 2 i eps p cosh u).

    Proportional to the m = 1 resolvent average; the p -> -p half of
    [-1, 1] contributes the complex conjugate, so only Im F survives.
    """
    b2 = np.asarray(b, dtype=float) ** 2

    def inner(p):
        def f(u):
            c = np.cosh(np.minimum(u, 300.0))[:, None]
            den = eps**2 - p * p + b2[None, :] + 2j * eps * p * c
            return np.prod(1.0 / den, axis=1)

        return quad(f, 0.0, math.inf, abs_tol=abs_tol)[0]

    def outer(ps):
        return np.array([p * (1.0 - p * p) ** (N - 2) * np.imag(inner(p)) for p in ps])

    return quad(outer, 0.0, 1.0, abs_tol=abs_tol)[0]


def toeplitz_resolvent(N: int, eps: float, b: float) -> float:
    """E_U prod_k w(theta_k) for B = b I via the Heine identity, w = 1/(eps^2 + |1 - b e^{i theta}|^2)."""
    def coeff(k):
        return quad(lambda th: np.cos(k * th) / (eps**2 + 1.0 + b * b - 2.0 * b * np.cos(th)),
                    0.0, math.pi, abs_tol=1e-13)[0] / math.pi

    c = [coeff(k) for k in range(N)]
    T = np.array([[c[abs(i - j)] for j in range(N)] for i in range(N)])
    return float(np.linalg.det(T))


DEFAULT_SWEEP = (
    (0.5, (0.4, 0.2, 0.1)),
    (0.7, (0.6, 0.3, 0.15)),
    (1.0, (0.8, 0.5, 0.3)),
)


def check_deformed(cfg: CheckConfig) -> CheckResult:
    """m = 1 only: K0/J0/Y0 parity identities and ratio constancy of the resolvent."""
    m = _pick(cfg.m, 1)
    _need(m == 1, "deformed CFT checks are implemented for m = 1 only")
    N = _pick(cfg.N, 3)
    _need(N >= 2, "need N >= 2")
    run = _Run("check_deformed", "m=1, N>=2, eps>0", cfg)
    run.echo.update(N=N, m=m)

    # parity of the Y0 and J0 pieces of K0(2ipd)
    d = 1.3
    w = lambda p: p * (1.0 - p * p) ** (N - 2)  # noqa: E731
    y_neg = quad(lambda p: y0(2.0 * np.abs(p) * d) * w(p), -1.0, 0.0, abs_tol=1e-12)[0]
    y_pos = quad(lambda p: y0(2.0 * p * d) * w(p), 0.0, 1.0, abs_tol=1e-12)[0]
    run.close("int_{-1}^{1} Y0(2|p|d) p (1-p^2)^{N-2} dp = 0", y_neg + y_pos, 0.0, 1e-8)
    j_half = quad(lambda p: j0(2.0 * p * d) * w(p), 0.0, 1.0, abs_tol=1e-12)[0]
    j_full = quad(lambda p: np.sign(p) * j0(2.0 * np.abs(p) * d) * w(p), -1.0, 1.0, abs_tol=1e-12)[0]
    run.close("sgn-weighted J0 integral over [-1,1] = twice the [0,1] integral", j_full, 2 * j_half, 1e-8)
    k_full = (quad(lambda p: k0_imag(2.0 * p * d) * w(p), -1.0, 0.0, abs_tol=1e-12)[0]
              + quad(lambda p: k0_imag(2.0 * p * d) * w(p), 0.0, 1.0, abs_tol=1e-12)[0])
    run.close("int_{-1}^{1} K0(2ipd) p (1-p^2)^{N-2} dp = -i pi int_0^1 J0(2pd) ...",
              k_full, -1j * math.pi * j_half, 1e-8)

    # Fourier transform of Haar measure: E exp(-2i Re Tr(U_{m x m} D)) in Bessel-determinant form
    for Nb, mb, d in ((N, 1, (1.0,)), (4, 2, (0.5, 1.0))):
        D = np.diag(d).astype(complex)
        est = run.mc(f"bessel-{Nb}-{mb}",
                     lambda U, D=D, mb=mb: np.exp(-2j * np.real(_tr(U[:, :mb, :mb] @ D))),
                     lambda g, s, Nb=Nb: sample_haar_unitary(Nb, g, s))
        run.stochastic(f"Bessel determinant N={Nb}, m={mb}, d={list(d)}", est,
                       cf.bessel_determinant_formula(Nb, mb, d))

    # calibration at B = 0, where the average is (1 + eps^2)^-N exactly
    eps0 = 0.5
    exact0 = (1.0 + eps0**2) ** (-N)
    constant = exact0 / resolvent_rhs_quadrature(N, eps0, np.zeros(N))
    run.echo.update(calibration={"eps": eps0, "B": "0", "constant": constant})
    sweep = DEFAULT_SWEEP if N == 3 else tuple(
        (eps, tuple(np.linspace(bs[0], bs[-1], N))) for eps, bs in DEFAULT_SWEEP)
    haar = lambda g, s: sample_haar_unitary(N, g, s)  # noqa: E731
    for i, (eps, bs) in enumerate(sweep):
        B = np.diag(bs).astype(complex)
        ref = constant * resolvent_rhs_quadrature(N, eps, np.asarray(bs))
        n_samples = cfg.n_samples
        while True:
            est = run.mc(f"resolvent-{i}-{n_samples}", resolvent_lhs_integrand(eps, B), haar, n_samples)
            if est.stderr <= 0.25 * abs(ref) or n_samples >= 16 * cfg.n_samples:
                break
            n_samples *= 2
            run.note(f"sweep point {i}: variance guard doubled samples to {n_samples}")
        run.stochastic(f"ratio at eps={eps}, b={list(bs)}", est, ref)
    run.echo.update(sweep=[{"eps": e, "b": list(bs)} for e, bs in sweep])

    # angle-density oracle for B = b I
    eps_t, b_t = 2.0, 0.3
    est = run.mc("toeplitz", resolvent_lhs_integrand(eps_t, b_t * np.eye(N, dtype=complex)), haar)
    run.stochastic(f"B={b_t} I, eps={eps_t} vs Toeplitz determinant", est,
                   toeplitz_resolvent(N, eps_t, b_t))
    return run.finish()


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckInfo:
    name: str
    func: Callable[[CheckConfig], CheckResult]
    topic: str
    regime: str


REGISTRY: dict[str, CheckInfo] = {
    info.name: info for info in (
        CheckInfo("check_bcft", check_bcft, "bosonic CFT over truncations", "N>=2m | N<2m<2N | m=N"),
        CheckInfo("check_ww_alternative", check_ww_alternative,
                  "U(m) determinant-weight form and SU(N) invariance", "m<=N | SU(N): m<N"),
        CheckInfo("check_schur_moments", check_schur_moments,
                  "Schur moments of truncations and the fermionic measure", "m<=n<=N | fermionic: any N"),
        CheckInfo("check_orthogonality", check_orthogonality,
                  "Schur orthogonality on U(m) and truncations", "m,n<=N"),
        CheckInfo("check_resolvent_expansion", check_resolvent_expansion,
                  "inverse-determinant average vs Jacobi average", "m,n<=N, ||A||,||B||<1"),
        CheckInfo("check_charpoly_expansion", check_charpoly_expansion,
                  "characteristic-polynomial average vs fermionic average", "any N, n, m"),
        CheckInfo("check_berezin", check_berezin, "Berezin reproducing kernels",
                  "bosonic N>=n+m | fermionic integer N"),
        CheckInfo("check_selberg", check_selberg, "Schur-weighted Selberg integrals", "N>=n+m (bosonic)"),
        CheckInfo("check_series_expansions", check_series_expansions,
                  "Cauchy, Hua and exponential Schur series", "modulus <= 0.5"),
        CheckInfo("check_deformed", check_deformed, "deformed CFT and regularized resolvent", "m=1, N>=2"),
    )
}


def run_check(name: str, cfg: CheckConfig) -> CheckResult:
    if name not in REGISTRY:
        return CheckResult(name, "", cfg.to_dict(), error=f"unknown check {name!r}")
    return REGISTRY[name].func(cfg)


def _combine(results: list[CheckResult]) -> CheckResult:
    """Fold per-seed runs of one check into a single result."""
    first = results[0]
    seeds = [r.config.get("seed") for r in results]
    config = dict(first.config)
    config["seeds"] = seeds
    out = CheckResult(first.name, first.regime, config)
    for seed, r in zip(seeds, results):
        for p in r.parts:
            out.parts.append(replace(p, label=f"[seed {seed}] {p.label}"))
        out.notes.extend(f"[seed {seed}] {n}" for n in r.notes)
        if r.error and out.error is None:
            out.error = r.error
    return out


def run_suite(names: list[str], overrides: dict | None = None,
              seeds: tuple[int, ...] | None = None) -> list[CheckResult]:
    """Run each named check at ``seed`` and ``seed + 1``, one combined result per name.

    A check passes only if every part passes at both seeds.  ``overrides``
    holds CheckConfig field values.  Unknown names yield a failing result
    carrying an error message.  Results follow registry order.
    """
    base = CheckConfig(**dict(overrides or {}))
    if seeds is None:
        seeds = (base.seed, base.seed + 1)
    order = {name: i for i, name in enumerate(REGISTRY)}
    results = []
    for name in sorted(dict.fromkeys(names), key=lambda n: order.get(n, len(order))):
        results.append(_combine([run_check(name, replace(base, seed=seed)) for seed in seeds]))
    return results


__all__ = [
    "CheckConfig",
    "CheckResult",
    "ConfigError",
    "Part",
    "REGISTRY",
    "DEFAULT_SEED",
    "bcft_regime",
    "bcft_quadrature_m1",
    "charpoly_schur_sum",
    "derive_seed",
    "preset_matrix",
    "resolvent_rhs_quadrature",
    "run_check",
    "run_suite",
    "schur_moment_grid",
    "toeplitz_resolvent",
    "ww_normalization",
] + [name for name in REGISTRY]
