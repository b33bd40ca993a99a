import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cftv import closed_forms as cf
from cftv.ensembles import sample_haar_unitary
from cftv.montecarlo import compare, estimate_mean
from cftv.partitions import enumerate_partitions
from cftv.quadrature import quad, quad2
from cftv.symfuncs import hua_coeff_bosonic, weyl_dimension

F = Fraction


def test_selberg_constants():
    assert cf.selberg_constant_bosonic(3, 1, 1) == F(1, 2)
    assert cf.selberg_constant_bosonic(3, 2, 1) == F(1, 2)
    assert cf.selberg_constant_bosonic(4, 2, 2) == cf.schur_selberg_bosonic((), 1, 1, 2).value
    for N in range(1, 6):
        assert cf.selberg_constant_fermionic(N, 1, 1) == F(1, N + 1)
        assert quad(lambda x: (1 + x) ** (-N - 2), 0, math.inf)[0] == pytest.approx(1 / (N + 1))
    assert cf.selberg_constant_fermionic(1, 2, 1) == F(1, 6)
    assert quad(lambda x: x * (1 + x) ** -4, 0, math.inf)[0] == pytest.approx(1 / 6)
    with pytest.raises(ValueError):
        cf.selberg_constant_bosonic(3, 2, 2)


def test_constants_are_empty_partition_integrals():
    for N, n, m in [(4, 2, 2), (6, 3, 2), (7, 3, 3)]:
        assert cf.selberg_constant_bosonic(N, n, m) == cf.schur_selberg_bosonic((), n - m + 1, N - n - m + 1, m).value
    for N, n, m in [(1, 1, 1), (3, 2, 2), (2, 3, 2)]:
        assert cf.selberg_constant_fermionic(N, n, m) == cf.schur_selberg_fermionic((), n - m + 1, N + 1, m).value


def test_schur_selberg_examples():
    for k in range(5):
        lam = (k,) if k else ()
        assert cf.schur_selberg_bosonic(lam, 2, 3, 1).value == cf.beta(2 + k, 3)
        assert cf.schur_selberg_fermionic(lam, 2, 7, 1).value == cf.beta(2 + k, 7 - k)
    v = cf.schur_selberg_bosonic((1,), 1, 1, 2)
    assert v.value == F(1, 6) and v.exact and v.derivation == "product-form"
    # direct polynomial integration of (x+y)(x-y)^2 over the unit square
    assert quad2(lambda x, y: (x + y) * (x - y) ** 2, (0, 1), (0, 1))[0] == pytest.approx(1 / 6)


def test_fermionic_against_quadrature():
    val = cf.schur_selberg_fermionic((1,), 1, 5, 2).value
    weight = lambda x, y: (x + y) * (x - y) ** 2 * ((1 + x) * (1 + y)) ** -8  # noqa: E731
    num = quad2(weight, (0, math.inf), (0, math.inf), abs_tol=1e-9)[0]
    assert float(val) == pytest.approx(num, abs=1e-6)


def test_fermionic_divergence_named():
    with pytest.raises(ValueError, match="f_1"):
        cf.schur_selberg_fermionic((5,), 1, 2, 1)


def test_routes_agree_exhaustively():
    for m in range(1, 4):
        for lam in enumerate_partitions(4, m):
            for p in range(1, 7):
                for q in range(1, 7):
                    vals = {cf.schur_selberg_bosonic(lam, p, q, m, r).value for r in ("product", "gram", "binomial")}
                    assert len(vals) == 1
                    try:
                        vals = {cf.schur_selberg_fermionic(lam, p, q, m, r).value
                                for r in ("product", "gram", "binomial")}
                    except ValueError:
                        continue
                    assert len(vals) == 1


def test_non_integer_parameters_float():
    a = cf.schur_selberg_bosonic((2, 1), 1.5, 2.25, 2)
    b = cf.schur_selberg_bosonic((2, 1), 1.5, 2.25, 2, "gram")
    assert not a.exact
    assert float(a) == pytest.approx(float(b), rel=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(4, 12), min_size=1, max_size=3, unique=True),
       st.lists(st.integers(1, 8), min_size=3, max_size=3))
def test_determinant_identities(p, q):
    lhs, rhs = cf.binomial_determinant_identity(p, q[:len(p)])
    assert lhs == rhs
    lhs, rhs = cf.gamma_determinant_identity(p)
    assert lhs == rhs


def test_rhs_moments():
    for N, n, m in [(4, 2, 1), (5, 3, 2), (6, 6, 3)]:
        assert cf.rhs_schur_moment_bosonic((1,), N, n, m) == F(m * n, N)
        assert cf.rhs_schur_moment_fermionic((1,), N, n, m) == F(m * n, N)
    assert cf.rhs_schur_moment_bosonic((2, 1), 5, 3, 2) == F(2, 5)
    assert cf.rhs_schur_moment_bosonic((1, 1, 1), 5, 3, 2) == 0
    assert cf.rhs_schur_moment_fermionic((2,), 2, 1, 1) == 1
    assert cf.rhs_schur_moment_fermionic((1, 1), 1, 2, 2) == 1
    with pytest.raises(ValueError):
        cf.rhs_schur_moment_fermionic((3,), 2, 1, 1)


def test_normalized_averages_exact():
    for N, n, m in [(6, 2, 2), (7, 3, 2), (8, 3, 3)]:
        for lam in enumerate_partitions(3, m):
            avg = cf.normalized_selberg_average_bosonic(lam, N, n, m)
            assert avg == cf.rhs_schur_moment_bosonic(lam, N, n, m)
            assert avg == weyl_dimension(lam, n) / hua_coeff_bosonic(lam, N, m)
    for N, n, m in [(3, 1, 1), (4, 2, 2), (5, 3, 2)]:
        for lam in enumerate_partitions(2, m):
            assert cf.normalized_selberg_average_fermionic(lam, N, n, m) == cf.rhs_schur_moment_fermionic(lam, N, n, m)


def test_bessel_formula_basics():
    assert cf.bessel_determinant_formula(4, 2, [0, 0]) == 1.0
    a = cf.bessel_determinant_formula(5, 2, [0.4, 1.1])
    b = cf.bessel_determinant_formula(5, 2, [1.1, 0.4])
    assert a == pytest.approx(b, abs=1e-12)
    with pytest.raises(ValueError):
        cf.bessel_determinant_formula(3, 2, [0.1, 0.2])
    with pytest.raises(ValueError):
        cf.bessel_determinant_formula(4, 2, [0.5, 0.5])


def test_bessel_formula_m1_quadrature():
    # m = 1 reduces to (N-1) int_0^1 J0(2pd) 2p (1-p^2)^{N-2} dp
    from cftv.special import j0

    N, d = 3, 1.0
    ref = (N - 1) * quad(lambda p: j0(2 * p * d) * 2 * p * (1 - p * p) ** (N - 2), 0, 1, abs_tol=1e-13)[0]
    assert cf.bessel_determinant_formula(N, 1, [d]) == pytest.approx(ref, abs=1e-10)


def test_bessel_formula_monte_carlo():
    d = np.diag([0.5, 1.0])
    est = estimate_mean(lambda u: np.exp(-2j * np.real(np.trace(u[:, :2, :2] @ d, axis1=1, axis2=2))),
                        lambda g, s: sample_haar_unitary(4, g, s), 100_000, 5)
    assert compare(est, cf.bessel_determinant_formula(4, 2, [0.5, 1.0])).passed
