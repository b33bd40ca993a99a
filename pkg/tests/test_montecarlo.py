import numpy as np
import pytest

from cftv.ensembles import sample_haar_unitary
from cftv.montecarlo import (
    Estimate,
    NonFiniteSample,
    compare,
    default_samples,
    estimate_mean,
    estimate_means,
)

haar4 = lambda g, s: sample_haar_unitary(4, g, s)  # noqa: E731
entry = lambda u: np.abs(u[:, 0, 0]) ** 2  # noqa: E731


def test_constant_integrand():
    est = estimate_mean(lambda u: np.full(len(u), 2.5 - 1j), haar4, 1000, 1)
    assert est.mean == 2.5 - 1j and est.stderr == 0


def test_haar_entry_and_shards():
    a = estimate_mean(entry, haar4, 100_000, 3, shards=1)
    b = estimate_mean(entry, haar4, 100_000, 3, shards=4)
    assert a == b
    assert compare(a, 0.25).passed


def test_seed_reproducible_and_distinct():
    a = estimate_mean(entry, haar4, 5000, 3)
    assert a == estimate_mean(entry, haar4, 5000, 3)
    assert a != estimate_mean(entry, haar4, 5000, 4)


def test_vector_means_match_scalar():
    both = estimate_means(lambda u: np.stack([entry(u), entry(u) ** 2], 1), haar4, 20_000, 9)
    one = estimate_mean(entry, haar4, 20_000, 9)
    assert both[0].mean == pytest.approx(one.mean, rel=1e-14)
    assert both[0].stderr == pytest.approx(one.stderr, rel=1e-12)
    with pytest.raises(ValueError):
        estimate_mean(lambda u: np.stack([entry(u), entry(u)], 1), haar4, 1000, 1)


def test_stderr_scaling():
    ses = [estimate_mean(entry, haar4, n, 21).stderr for n in (1000, 10_000, 100_000)]
    for a, b in zip(ses, ses[1:]):
        assert b / a == pytest.approx(10 ** -0.5, rel=0.2)


def test_compare_examples():
    c = compare(Estimate(1.0, 0.1, 0.0, 100, 0), 1.2)
    assert c.z == pytest.approx(2) and c.passed
    c = compare(Estimate(1.0, 0.01, 0.0, 100, 0), 1.2)
    assert c.z == pytest.approx(20) and not c.passed
    c = compare(Estimate(1.0, 0.0, 0.0, 100, 0), 1.0)
    assert c.z == 0 and c.passed


def test_compare_two_estimates_in_quadrature():
    c = compare(Estimate(1.0, 0.3, 0.0, 10, 0), Estimate(2.0, 0.4, 0.0, 10, 0))
    assert c.z == pytest.approx(2.0)


def test_complex_uses_max_component():
    c = compare(Estimate(1 + 1j, 0.1, 0.5, 10, 0), 1.2 + 0.5j)
    assert c.z == pytest.approx(2.0)


def test_non_finite_reported():
    def bad(u):
        v = entry(u)
        v[7] = np.nan
        return v

    with pytest.raises(NonFiniteSample) as exc:
        estimate_mean(bad, haar4, 20_000, 1)
    assert exc.value.index == 7


def test_estimate_roundtrip():
    e = Estimate(0.1 - 2j, 0.01, 0.02, 500, 42)
    assert Estimate.from_dict(e.to_dict()) == e
    assert set(e.to_dict()) >= {"mean_re", "mean_im", "stderr", "n", "seed"}


def test_default_samples_env(monkeypatch):
    monkeypatch.delenv("CFTV_DEFAULT_SAMPLES", raising=False)
    assert default_samples() == 200_000
    monkeypatch.setenv("CFTV_DEFAULT_SAMPLES", "5000")
    assert default_samples() == 5000


def test_rejects_tiny_sample_counts():
    with pytest.raises(ValueError):
        estimate_mean(entry, haar4, 10, 1)
