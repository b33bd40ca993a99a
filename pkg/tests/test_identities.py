from fractions import Fraction

import numpy as np
import pytest

from cftv.identities import (
    REGISTRY,
    CheckConfig,
    CheckResult,
    ConfigError,
    bcft_quadrature_m1,
    bcft_regime,
    charpoly_schur_sum,
    derive_seed,
    preset_matrix,
    run_check,
    run_suite,
    toeplitz_resolvent,
    ww_normalization,
)
from cftv.partitions import Partition

FAST = 50_000


def cfg(**kw):
    kw.setdefault("n_samples", FAST)
    return CheckConfig(**kw)


def assert_pass(result: CheckResult):
    failing = [(p.label, p.z, p.residual) for p in result.parts if not p.passed]
    assert result.passed, (failing, result.error)


def part(result, text):
    return next(p for p in result.parts if text in p.label)


def test_regime_dispatch_total():
    for N in range(1, 8):
        for m in range(1, N + 1):
            r = bcft_regime(N, m)
            fired = [m == N, N >= 2 * m and m != N, N < 2 * m < 2 * N]
            assert sum(fired) == 1
            assert r == ("m=N" if fired[0] else "N>=2m" if fired[1] else "N<2m<2N")
    with pytest.raises(ConfigError):
        bcft_regime(2, 3)


@pytest.mark.parametrize("N,m", [(4, 1), (4, 2), (3, 2), (3, 3)])
def test_bcft_regimes(N, m):
    r = run_check("check_bcft", cfg(N=N, m=m))
    assert_pass(r)
    assert r.config["regime_branch"] == bcft_regime(N, m)
    assert part(r, "zero input").lhs == part(r, "zero input").rhs == 1
    if m == 1:
        assert part(r, "haar ~ quadrature").passed


def test_bcft_quadrature_small_d():
    assert bcft_quadrature_m1(4, 0.0) == pytest.approx(1.0, abs=1e-12)
    assert bcft_quadrature_m1(1, 0.5) == pytest.approx(np.i0(1.0))


def test_ww_alternative():
    assert_pass(run_check("check_ww_alternative", cfg(N=3, m=1)))
    r = run_check("check_ww_alternative", cfg(N=2, m=2))
    assert_pass(r)
    assert not any("SU" in p.label for p in r.parts)
    assert ww_normalization(3, 3) == 1
    assert ww_normalization(3, 1) == Fraction(1, 2)


def test_ww_orthonormal_columns():
    e = np.zeros((3, 1), dtype=complex)
    e[0, 0] = 1
    assert_pass(run_check("check_ww_alternative", cfg(N=3, m=1, matrices={"X": e, "Y": e})))


def test_ww_rejects_rank_deficient():
    x = np.zeros((3, 1), dtype=complex)
    x[0, 0] = 1
    y = np.zeros((3, 1), dtype=complex)
    y[1, 0] = 1
    with pytest.raises(ConfigError):
        run_check("check_ww_alternative", cfg(N=3, m=1, matrices={"X": x, "Y": y}))


def test_schur_moment_examples():
    r = run_check("check_schur_moments", cfg(N=4, n=2, m=1, lam=Partition((1,))))
    assert_pass(r)
    assert r.parts[0].rhs == Fraction(1, 2)
    r = run_check("check_schur_moments", cfg(N=5, n=3, m=2, lam=Partition((2, 1))))
    assert_pass(r)
    assert r.parts[0].rhs == Fraction(2, 5)
    r = run_check("check_schur_moments", cfg(N=3, n=1, m=1, lam=Partition((1,)), variant="fermionic"))
    assert_pass(r)
    assert r.parts[0].rhs == Fraction(1, 3)
    assert_pass(run_check("check_schur_moments", cfg(N=4, n=2, m=2, variant="matrix")))
    with pytest.raises(ConfigError):
        run_check("check_schur_moments", cfg(N=2, n=3, m=1))


def test_orthogonality():
    r = run_check("check_orthogonality", cfg(N=4, n=2, m=2))
    assert_pass(r)
    assert any(p.rhs == 0.0 for p in r.parts)
    eye = np.eye(2, dtype=complex)
    r = run_check("check_orthogonality", cfg(N=4, n=2, m=2, lam=Partition((1,)), mu=Partition((1,)),
                                             matrices={"A": eye, "B": eye}))
    assert_pass(r)
    assert part(r, "AUBU*").rhs == pytest.approx(2)
    L = preset_matrix("L", 2, 2)
    r = run_check("check_orthogonality", cfg(N=4, n=2, m=2, lam=Partition((1,)), mu=Partition((1,)),
                                             matrices={"L": L, "M": L}))
    assert part(r, "LQ").rhs == pytest.approx(np.trace(L.conj().T @ L) / 4)


@pytest.mark.parametrize("N,m,n", [(4, 2, 1), (3, 3, 3), (2, 2, 2)])
def test_resolvent(N, m, n):
    r = run_check("check_resolvent_expansion", cfg(N=N, m=m, n=n))
    assert_pass(r)
    if m == n == N:
        assert part(r, "closed form")


def test_resolvent_rejects_large_norm():
    big = 1.5 * np.eye(3, dtype=complex)
    with pytest.raises(ConfigError):
        run_check("check_resolvent_expansion", cfg(N=3, m=1, n=1, matrices={"A": big}))


def test_charpoly():
    half = 0.5 * np.eye(2)
    assert charpoly_schur_sum(half, half, 2, 1, 1) == Fraction(21, 16)
    r = run_check("check_charpoly_expansion", cfg(N=2, n=1, m=1))
    assert_pass(r)
    assert_pass(run_check("check_charpoly_expansion", cfg(N=2, n=2, m=1)))
    zero = np.zeros((2, 2), dtype=complex)
    r = run_check("check_charpoly_expansion", cfg(N=2, n=1, m=1, matrices={"A": zero, "B": zero}))
    assert_pass(r)
    assert part(r, "haar ~ Schur").lhs.mean == 1 and part(r, "haar ~ Schur").rhs == 1


def test_berezin():
    r = run_check("check_berezin", cfg(N=4, n=1, m=1))
    assert_pass(r)
    assert part(r, "bosonic N=4").rhs == pytest.approx(0.75 ** -4)
    assert part(r, "fermionic N=2").rhs == pytest.approx(1.21 ** 2)
    with pytest.raises(ConfigError):
        run_check("check_berezin", cfg(N=4, n=1, m=1, variant="bosonic",
                                       matrices={"Z1b": np.array([[1.2 + 0j]]), "Z2b": np.array([[0.1 + 0j]])}))
    with pytest.raises(ConfigError):
        run_check("check_berezin", cfg(N=1, n=1, m=1, variant="bosonic"))


def test_selberg():
    r = run_check("check_selberg", cfg(m=2))
    assert_pass(r)
    assert any(p.kind == "exact" and p.lhs == Fraction(1, 6) for p in r.parts)


def test_series():
    r = run_check("check_series_expansions", cfg())
    assert_pass(r)
    assert r.notes


def test_deformed():
    r = run_check("check_deformed", cfg(N=3))
    assert_pass(r)
    assert part(r, "Y0(2|p|d)").residual <= 1e-8
    with pytest.raises(ConfigError):
        run_check("check_deformed", cfg(N=3, m=2))


def test_toeplitz_trivial():
    # B = 0: every eigenvalue contributes 1/(1 + eps^2)
    assert toeplitz_resolvent(3, 2.0, 0.0) == pytest.approx(5.0 ** -3, rel=1e-12)


def test_determinism_bit_identical():
    a = run_check("check_bcft", cfg(N=3, m=2, n_samples=20_000, seed=5)).to_dict()
    b = run_check("check_bcft", cfg(N=3, m=2, n_samples=20_000, seed=5)).to_dict()
    assert a == b
    c = run_check("check_bcft", cfg(N=3, m=2, n_samples=20_000, seed=6)).to_dict()
    assert a != c


def test_derived_seeds_distinct():
    assert derive_seed(1, "lhs") != derive_seed(1, "rhs")
    assert derive_seed(1, "lhs") == derive_seed(1, "lhs")


def test_result_roundtrip():
    r = run_check("check_selberg", cfg(n_samples=5_000))
    back = CheckResult.from_dict(r.to_dict())
    assert back.to_dict() == r.to_dict()


def test_config_roundtrip():
    c = cfg(N=3, lam=Partition((2, 1)), matrices={"X": preset_matrix("x", 3, 1)})
    back = CheckConfig.from_dict(c.to_dict())
    assert back.to_dict() == c.to_dict()


def test_run_suite():
    assert run_suite([]) == []
    res = run_suite(["check_berezin"], {"n_samples": FAST})
    assert len(res) == 1 and res[0].passed
    assert len(res[0].config["seeds"]) == 2
    res = run_suite(["nope"], {"n_samples": FAST})
    assert not res[0].passed and "nope" in res[0].error


def test_registry_names_stable():
    assert list(REGISTRY) == [
        "check_bcft", "check_ww_alternative", "check_schur_moments", "check_orthogonality",
        "check_resolvent_expansion", "check_charpoly_expansion", "check_berezin", "check_selberg",
        "check_series_expansions", "check_deformed",
    ]
