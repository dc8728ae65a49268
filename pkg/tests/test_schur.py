import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lowschur.algebra import ComplexPoly, RationalFn
from lowschur.errors import InadmissibleDataError, StripError
from lowschur.sampling import random_data, random_schur_rational
from lowschur.schur import (
    ProblemInstance,
    SchurParams,
    backward_schur_step,
    check_admissible,
    forward_schur_step,
    inverse_schur_data,
    pick_matrix,
    schur_parameters,
)

radius = st.floats(0, 0.9)
angle = st.floats(0, 2 * np.pi)
disk_point = st.builds(lambda r, t: r * np.exp(1j * t), radius, angle)


def test_schur_parameter_examples():
    assert np.allclose(schur_parameters([0.5]).gammas, [0.5])
    assert np.allclose(schur_parameters([0, 0.7]).gammas, [0, 0.7])
    assert np.allclose(schur_parameters([0.5, 0.3]).gammas, [0.5, 0.4])


def test_schur_parameters_inadmissible_reports_stage():
    with pytest.raises(InadmissibleDataError) as info:
        schur_parameters([0.5, 0.9])  # gamma_1 = 0.9 / 0.75 > 1
    assert info.value.stage == 1
    assert np.allclose(info.value.partial, [0.5, 1.2])  # offending value last


def test_inverse_examples():
    assert np.allclose(inverse_schur_data([0.3, 0, 0]), [0.3, 0, 0])
    assert np.allclose(inverse_schur_data([0.5, 0.4]), [0.5, 0.3])


def test_roundtrip_100_draws():
    rng = np.random.default_rng(0)
    worst = 0.0
    for _ in range(100):
        c, g = random_data(rng, int(rng.integers(0, 9)))
        worst = max(worst, np.abs(schur_parameters(c).gammas - g).max())
    assert worst < 1e-10


@given(st.lists(disk_point, min_size=1, max_size=8))
def test_roundtrip_property(gs):
    c = inverse_schur_data(gs)
    assert np.abs(schur_parameters(c).gammas - np.array(gs)).max() < 1e-10


def test_schur_params_rejects_boundary():
    with pytest.raises(InadmissibleDataError):
        SchurParams([0.2, 1.0]).check()
    assert SchurParams([0.2, 0.3]).n == 1


def test_pick_matrix_examples():
    assert np.allclose(pick_matrix([0]), [[1]])
    assert np.allclose(pick_matrix([0.5]), [[0.75]])
    assert np.allclose(pick_matrix([0.5, 0.3]), [[0.75, -0.15], [-0.15, 0.66]])


def test_check_admissible_examples():
    rep = check_admissible([0.5, 0.3])
    assert rep.admissible and rep.status == "admissible"
    assert rep.min_eig == pytest.approx(np.linalg.eigvalsh([[0.75, -0.15], [-0.15, 0.66]]).min())
    assert rep.max_gamma == pytest.approx(0.5)
    one = check_admissible([1.0])
    assert not one.admissible and one.status == "singular"
    two = check_admissible([2.0])
    assert not two.admissible and two.status == "infeasible"


@given(st.lists(disk_point, min_size=1, max_size=6))
def test_pick_and_recursion_agree(gs):
    rep = check_admissible(inverse_schur_data(gs))
    assert rep.admissible
    assert rep.min_eig > 0


def test_problem_instance_validation():
    with pytest.raises(ValueError):
        ProblemInstance([], 1)
    with pytest.raises(ValueError):
        ProblemInstance([0.1], -1)
    assert ProblemInstance([0.1, 0.2], 3).n == 1


def test_forward_step_examples():
    f = forward_schur_step(RationalFn.constant(0.0), 0.3 + 0.1j)
    assert abs(f(0.4) - (0.3 + 0.1j)) < 1e-15
    g = forward_schur_step(RationalFn.constant(0.6), 0.0)
    assert abs(g(0.5) - 0.3) < 1e-15
    h = forward_schur_step(RationalFn.constant(0.5), 0.5)
    for z in (0.2, -0.7j):
        assert abs(h(z) - (0.5 * z + 0.5) / (0.25 * z + 1)) < 1e-15


def test_backward_step_examples():
    zero = backward_schur_step(RationalFn.constant(0.3), 0.3)
    assert abs(zero(0.5)) < 1e-15
    w = backward_schur_step(RationalFn(ComplexPoly([0, 0.7j]), ComplexPoly([1])), 0.0)
    assert abs(w(0.1) - 0.7j) < 1e-15


def test_backward_step_rejects_wrong_gamma():
    with pytest.raises(StripError):
        backward_schur_step(RationalFn.constant(0.3), 0.31)


def test_backward_inverts_forward_50_points():
    rng = np.random.default_rng(7)
    z = 0.9 * np.sqrt(rng.uniform(size=50)) * np.exp(2j * np.pi * rng.uniform(size=50))
    for _ in range(30):
        g = random_schur_rational(rng, int(rng.integers(0, 4)))
        gamma = 0.9 * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
        back = backward_schur_step(forward_schur_step(g, gamma), gamma)
        assert np.abs(back(z) - g(z)).max() < 1e-10
