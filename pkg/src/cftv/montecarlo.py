"""Seeded, sharded Monte Carlo means and z-score comparisons.

Samples are drawn in fixed-size blocks; block ``b`` always uses rng stream
``b``.  Shards only decide which worker computes which block, and block
statistics are merged in block order, so the result does not depend on the
shard count.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .ensembles import SeededRng
from .quadrature import QuadratureError, quad, quad2, quadrature  # noqa: F401  (re-export)
from .special import special  # noqa: F401  (re-export)

BLOCK_SIZE = 10_000
MIN_SAMPLES = 100
DEFAULT_Z = 4.0
DEFAULT_FLOOR = 1e-12


class NonFiniteSample(ArithmeticError):
    def __init__(self, index: int, value):
        super().__init__(f"integrand returned {value!r} at sample index {index}")
        self.index = index


@dataclass(frozen=True)
class Estimate:
    mean: complex
    stderr_re: float
    stderr_im: float
    n_samples: int
    seed: int

    @property
    def stderr(self) -> float:
        return math.hypot(self.stderr_re, self.stderr_im)

    @classmethod
    def exact(cls, value, seed: int = 0) -> "Estimate":
        """A zero-variance 'estimate' wrapping a known value."""
        return cls(complex(value), 0.0, 0.0, 1, seed)

    def to_dict(self) -> dict:
        return {
            "mean_re": self.mean.real,
            "mean_im": self.mean.imag,
            "stderr": self.stderr,
            "stderr_re": self.stderr_re,
            "stderr_im": self.stderr_im,
            "n": self.n_samples,
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Estimate":
        return cls(complex(d["mean_re"], d["mean_im"]), d["stderr_re"], d["stderr_im"],
                   d["n"], d["seed"])


@dataclass(frozen=True)
class Comparison:
    estimate: Estimate
    reference: complex
    reference_stderr_re: float
    reference_stderr_im: float
    z: float
    threshold: float

    @property
    def passed(self) -> bool:
        return self.z <= self.threshold


@dataclass
class _Block:
    count: int
    mean_re: np.ndarray
    mean_im: np.ndarray
    m2_re: np.ndarray
    m2_im: np.ndarray


def _block_stats(values: np.ndarray) -> _Block:
    # shift by the first sample so constant integrands give exact means
    values = np.asarray(values)
    re = values.real.astype(float)
    im = values.imag.astype(float) if np.iscomplexobj(values) else np.zeros_like(re)
    out = []
    for part in (re, im):
        shift = part[0]
        centered = part - shift
        mu = centered.mean(axis=0)
        dev = centered - mu
        out.append((shift + mu, np.sum(dev * dev, axis=0)))
    (mre, m2re), (mim, m2im) = out
    return _Block(len(values), mre, mim, m2re, m2im)


def _merge(a: _Block, b: _Block) -> _Block:
    n = a.count + b.count
    out = [n]
    for ma, mb, sa, sb in ((a.mean_re, b.mean_re, a.m2_re, b.m2_re),
                           (a.mean_im, b.mean_im, a.m2_im, b.m2_im)):
        delta = mb - ma
        out.append(ma + delta * (b.count / n))
        out.append(sa + sb + delta * delta * (a.count * b.count / n))
    n, mre, m2re, mim, m2im = out
    return _Block(n, mre, mim, m2re, m2im)


def _run_block(integrand, sampler, seed: int, index: int, size: int, offset: int):
    batch = sampler(SeededRng(seed, index), size)
    values = np.asarray(integrand(batch))
    if values.shape[0] != size:
        raise ValueError(f"integrand returned {values.shape[0]} values for {size} samples")
    finite = np.isfinite(values)
    if not finite.all():
        bad = np.argwhere(~finite)[0]
        raise NonFiniteSample(offset + int(bad[0]), values[tuple(bad)])
    return _block_stats(values)


def estimate_means(integrand: Callable[[np.ndarray], np.ndarray],
                   sampler: Callable[[SeededRng, int], np.ndarray],
                   n_samples: int, seed: int, shards: int = 1,
                   block_size: int = BLOCK_SIZE) -> list[Estimate]:
    """Means of a vector-valued integrand.

    ``sampler(rng, size)`` returns a batch; ``integrand(batch)`` returns an
    array of shape (size,) or (size, k).  One Estimate per column.
    """
    if n_samples < MIN_SAMPLES:
        raise ValueError(f"n_samples must be >= {MIN_SAMPLES}")
    if shards < 1:
        raise ValueError("shards must be positive")
    sizes = [block_size] * (n_samples // block_size)
    if n_samples % block_size:
        sizes.append(n_samples % block_size)
    offsets = np.concatenate([[0], np.cumsum(sizes)[:-1]]).astype(int)
    jobs = [(seed, i, s, int(o)) for i, (s, o) in enumerate(zip(sizes, offsets))]
    if shards == 1:
        blocks = [_run_block(integrand, sampler, *job) for job in jobs]
    else:
        with ThreadPoolExecutor(max_workers=shards) as pool:
            blocks = list(pool.map(lambda job: _run_block(integrand, sampler, *job), jobs))
    acc = blocks[0]
    for blk in blocks[1:]:
        acc = _merge(acc, blk)
    n = acc.count
    mre = np.atleast_1d(acc.mean_re)
    mim = np.atleast_1d(acc.mean_im)
    sre = np.sqrt(np.atleast_1d(acc.m2_re) / (n - 1) / n)
    sim = np.sqrt(np.atleast_1d(acc.m2_im) / (n - 1) / n)
    return [Estimate(complex(a, b), float(c), float(d), n, seed)
            for a, b, c, d in zip(mre, mim, sre, sim)]


def estimate_mean(integrand, sampler, n_samples: int, seed: int, shards: int = 1,
                  block_size: int = BLOCK_SIZE) -> Estimate:
    ests = estimate_means(integrand, sampler, n_samples, seed, shards, block_size)
    if len(ests) != 1:
        raise ValueError("integrand is vector-valued; use estimate_means")
    return ests[0]


def compare(est: Estimate, reference, z_threshold: float = DEFAULT_Z,
            stderr_floor: float = DEFAULT_FLOOR) -> Comparison:
    """z = max over real/imag parts of |mean - reference| / max(stderr, floor).

    ``reference`` may itself be an Estimate, in which case the two standard
    errors are combined in quadrature.
    """
    if isinstance(reference, Estimate):
        ref = reference.mean
        rre, rim = reference.stderr_re, reference.stderr_im
    else:
        ref = complex(reference)
        rre = rim = 0.0
    se_re = max(math.hypot(est.stderr_re, rre), stderr_floor)
    se_im = max(math.hypot(est.stderr_im, rim), stderr_floor)
    diff = est.mean - ref
    z = max(abs(diff.real) / se_re, abs(diff.imag) / se_im)
    return Comparison(est, ref, rre, rim, float(z), float(z_threshold))


def default_samples(fallback: int = 200_000) -> int:
    """Default sample count; CFTV_DEFAULT_SAMPLES overrides it."""
    raw = os.environ.get("CFTV_DEFAULT_SAMPLES")
    if raw is None:
        return fallback
    value = int(raw)
    if value < MIN_SAMPLES:
        raise ValueError(f"CFTV_DEFAULT_SAMPLES must be >= {MIN_SAMPLES}")
    return value
