import numpy as np
import pytest

from lowschur.algebra import ComplexPoly, LowerToeplitz, RationalFn
from lowschur.errors import DimensionError, RejectedParameterError
from lowschur.params import (
    K_ABOVE_N_CONSTRAINED,
    K_ABOVE_N_FREE,
    K_BELOW_N,
    K_EQUAL_N,
    alpha0_sufficient,
    beta_from_alpha,
    constraint_residuals,
    hankel_constraint,
    make_param_k_above_n,
    make_param_k_below_n,
    make_param_k_equal_n,
    schur_membership,
)
from lowschur.sampling import random_data
from lowschur.schur import schur_parameters
from lowschur.transfer import build_AB, build_R, toeplitz_factors

R1 = LowerToeplitz([0.4])


def _R(c):
    A, B = build_AB(schur_parameters(c))
    return build_R(A, B), A, B


def test_beta_from_alpha_examples():
    R, _, _ = _R([0.3, 0.2, -0.1])
    assert np.allclose(beta_from_alpha(R, np.zeros(2)), 0)
    assert np.allclose(beta_from_alpha(R1, [1]), [-0.4])
    assert np.allclose(beta_from_alpha(LowerToeplitz(np.zeros(3)), [1, 2j, 3]), 0)
    with pytest.raises(DimensionError):
        beta_from_alpha(R1, [1, 2])


def test_alpha0_sufficient_examples():
    assert alpha0_sufficient(np.zeros(3), np.zeros(3)) == 0
    assert alpha0_sufficient([1], [-0.4]) == pytest.approx(1.4)


def test_membership_examples():
    assert schur_membership(RationalFn.constant(0.0))
    rep = schur_membership(RationalFn(ComplexPoly([0, 1]), ComplexPoly([1])))
    assert rep and rep.circle_max == pytest.approx(1.0)
    edge = schur_membership(RationalFn(ComplexPoly([-0.4]), ComplexPoly([1.4, 1])))
    assert edge and edge.circle_max == pytest.approx(1.0) and edge.nearest_pole == pytest.approx(1.4)


def test_membership_rejections():
    assert not schur_membership(RationalFn.constant(1.2))
    inside = schur_membership(RationalFn(ComplexPoly([0.01]), ComplexPoly([0.5, 1])))
    assert not inside and inside.nearest_pole == pytest.approx(0.5)


def test_k_equal_n_zero_tail():
    spec = make_param_k_equal_n(R1, [0])
    assert spec.regime == K_EQUAL_N
    assert spec.realized.num.is_zero()


def test_k_equal_n_worked_example():
    spec = make_param_k_equal_n(R1, [1], 1.5)
    E = spec.realized
    for z in (0.0, 0.5, -0.9j):
        assert abs(E(z) - (-0.4 / (1.5 + z))) < 1e-15
    assert spec.membership


def test_k_equal_n_rejects_small_alpha0():
    with pytest.raises(RejectedParameterError):
        make_param_k_equal_n(R1, [1], 0.1)


def test_k_equal_n_strategies():
    rng = np.random.default_rng(5)
    c, _ = random_data(rng, 4)
    R, _, _ = _R(c)
    tail = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    bound = make_param_k_equal_n(R, tail, "bound")
    bis = make_param_k_equal_n(R, tail, "bisect")
    S = alpha0_sufficient(tail, bound.beta)
    assert abs(bound.alpha[0]) == pytest.approx(S * 1.01)
    assert abs(bis.alpha[0]) <= S
    assert bound.membership and bis.membership
    assert np.allclose(bound.beta, bis.beta)


def test_k_equal_n_complex_phase():
    spec = make_param_k_equal_n(R1, [1], "bound", phase=1j)
    assert spec.alpha[0].real == pytest.approx(0) and spec.alpha[0].imag > 0
    assert spec.membership


def test_constraint_vectors_satisfy_constraints():
    rng = np.random.default_rng(9)
    c, _ = random_data(rng, 5)
    R, A, B = _R(c)
    F = toeplitz_factors(A, B)
    spec = make_param_k_equal_n(R, rng.standard_normal(5))
    a, b = spec.constraint_vectors(5)
    r1, r2 = constraint_residuals(F, a, b)
    assert r1 < 1e-12 and r2 < 1e-10


def test_k_above_n_free_regime():
    spec = make_param_k_above_n(R1, 2, RationalFn.constant(0.7j))
    assert spec.regime == K_ABOVE_N_FREE
    spec = make_param_k_above_n(R1, 3, RationalFn(ComplexPoly([0, 0.5]), ComplexPoly([1])))
    assert spec.membership
    with pytest.raises(ValueError):
        spec.constraint_vectors(1)


def test_k_above_n_free_regime_rejections():
    with pytest.raises(RejectedParameterError):
        make_param_k_above_n(R1, 2, RationalFn(ComplexPoly([0, 0.5]), ComplexPoly([1])))  # degree 1 > 0
    with pytest.raises(RejectedParameterError):
        make_param_k_above_n(R1, 3, RationalFn.constant(1.5))


def test_k_above_n_constrained_zero_extension():
    # zero free coefficients reduce to a k = n parameter
    spec = make_param_k_above_n(R1, 2)
    assert spec.regime == K_ABOVE_N_CONSTRAINED
    assert spec.realized.num.is_zero()


def test_k_above_n_constrained_top_betas():
    rng = np.random.default_rng(2)
    c, _ = random_data(rng, 3)
    R, A, B = _R(c)
    af = rng.standard_normal(5) + 1j * rng.standard_normal(5)
    be = rng.standard_normal(2)
    spec = make_param_k_above_n(R, 5, alpha_free=af, beta_ext=be)
    assert np.allclose(spec.beta[:2], be)
    assert np.allclose(spec.alpha[1:], af)
    a, b = spec.constraint_vectors(3)
    assert np.allclose(b, -R.matvec(a))
    assert spec.membership


def test_k_above_n_requires_larger_budget():
    with pytest.raises(ValueError):
        make_param_k_above_n(R1, 1)


def test_hankel_constraint_shape():
    R, _, _ = _R([0.2, 0.1, 0.05, -0.02])
    assert hankel_constraint(R, 1).shape == (2, 2)
    assert hankel_constraint(R, 0).shape == (3, 1)


def test_k_below_n_zero_R():
    out = make_param_k_below_n(LowerToeplitz(np.zeros(3)), 1)
    assert out.status == "found"
    assert out.spec.regime == K_BELOW_N
    assert out.spec.realized.num.is_zero()


def test_k_below_n_infeasible_certificate():
    out = make_param_k_below_n(R1, 0)
    assert out.status == "infeasible" and out.nullity == 0 and not out.specs


def test_k_below_n_search_success():
    R, A, B = _R([0.5, 0.3, 0.1])
    out = make_param_k_below_n(R, 1, 32, seed=0)
    assert out.status == "found"
    H = hankel_constraint(R, 1)
    alpha_desc = out.spec.alpha[::-1]
    assert np.abs(H @ alpha_desc).max() <= 1e-10 * max(1, np.abs(alpha_desc).max())


def test_k_below_n_rejects_bad_budget():
    with pytest.raises(ValueError):
        make_param_k_below_n(R1, 1)
