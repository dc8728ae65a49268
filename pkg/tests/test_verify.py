import numpy as np
import pytest

from lowschur.algebra import ComplexPoly, RationalFn
from lowschur.errors import ExtractionError
from lowschur.interpolant import apply_lft
from lowschur.schur import ProblemInstance, forward_schur_step
from lowschur.transfer import build_theta
from lowschur.verify import (
    DegreeLawViolation,
    check_chain,
    check_single_step,
    classify_case,
    degree_law_probe,
    degree_of,
    equals_reciprocal_conj_at_infinity,
    roundtrip_extract,
    vanishes_at_infinity,
    verify_solution,
)

CENTRAL = RationalFn(ComplexPoly([0.5, 0.4]), ComplexPoly([1, 0.2]))


def test_verify_examples():
    assert verify_solution(RationalFn.constant(0.3), ProblemInstance([0.3, 0, 0], 2)).passed
    rep = verify_solution(CENTRAL, ProblemInstance([0.5, 0.3], 1))
    assert rep.passed and rep.degree == 1 and rep.taylor_residual < 1e-15
    bad = verify_solution(CENTRAL, ProblemInstance([0.5, 0.31], 1))
    assert not bad.passed and bad.taylor_residual == pytest.approx(0.01)


def test_verify_degree_budget():
    rep = verify_solution(CENTRAL, ProblemInstance([0.5, 0.3], 0))
    assert not rep.passed and not rep.degree_budget_ok


def test_verify_reduce_option():
    f = RationalFn(ComplexPoly([-0.5, 1]), ComplexPoly([-1, 2]))
    inst = ProblemInstance([0.5, 0, 0], 0)
    assert not verify_solution(f, inst).passed
    rep = verify_solution(f, inst, reduce=True)
    assert rep.passed and rep.degree == 0


def test_verify_pole_at_origin():
    f = RationalFn(ComplexPoly([1]), ComplexPoly([0, 1]))
    rep = verify_solution(f, ProblemInstance([0.5], 1))
    assert not rep.passed and rep.taylor_residual == float("inf")


def test_verify_not_schur():
    f = RationalFn(ComplexPoly([0.5, 0.9]), ComplexPoly([1]))  # |f(1)| = 1.4
    rep = verify_solution(f, ProblemInstance([0.5, 0.9], 1))
    assert not rep.passed and rep.circle_max > 1


def test_roundtrip_examples():
    E = roundtrip_extract(CENTRAL, [0.5, 0.4])
    assert np.abs(E(np.array([0.1, 0.5j]))).max() < 1e-12
    f = apply_lft(build_theta([0.5, 0.4]), RationalFn(ComplexPoly([-0.4]), ComplexPoly([1.5, 1])))
    E = roundtrip_extract(f, [0.5, 0.4])
    for z in (0.0, 0.3, -0.6j):
        assert abs(E(z) + 0.4 / (1.5 + z)) < 1e-12


def test_roundtrip_fails_at_stage_zero():
    with pytest.raises(ExtractionError) as info:
        roundtrip_extract(RationalFn.constant(0.2), [0.5, 0.4])
    assert info.value.stage == 0


def test_degree_helpers():
    f = RationalFn(ComplexPoly([0, 1]), ComplexPoly([1]))
    assert degree_of(f) == 1 and not vanishes_at_infinity(f)
    assert vanishes_at_infinity(RationalFn(ComplexPoly([1]), ComplexPoly([2, 1])))
    assert equals_reciprocal_conj_at_infinity(RationalFn(ComplexPoly([0, 2]), ComplexPoly([1, 1])), 0.5)


def test_single_step_zero_function():
    # f1 = 0 gives f = gamma, same degree; zero numerator counts as degree -1
    f1 = RationalFn.constant(0.0)
    assert classify_case(f1) == 3
    case, problems = check_single_step(f1, 0.5)
    assert not problems
    f = forward_schur_step(f1, 0.5)
    assert degree_of(f) == 0


def test_single_step_identity_function():
    f1 = RationalFn(ComplexPoly([0, 1]), ComplexPoly([1]))
    case, problems = check_single_step(f1, 0.5)
    assert case == 2 and not problems
    f = forward_schur_step(f1, 0.5)
    assert degree_of(f) == 2
    assert equals_reciprocal_conj_at_infinity(f, 0.5)


def test_chain_propagation():
    assert not check_chain(RationalFn.constant(0.4), [0.3, -0.2j, 0.5])
    assert not check_chain(RationalFn(ComplexPoly([0.3]), ComplexPoly([1, 0.5])), [0.3, 0.0, 0.7])


def test_probe_small():
    rep = degree_law_probe(200, seed=3)
    assert rep.ok and sum(rep.case_counts.values()) == 200


def test_probe_rejects_zero_samples():
    with pytest.raises(ValueError):
        degree_law_probe(0)


def test_probe_violation_is_serialized(monkeypatch):
    import lowschur.verify as v

    monkeypatch.setattr(v, "check_single_step", lambda f1, g: (1, ["forced"]))
    with pytest.raises(DegreeLawViolation) as info:
        v.degree_law_probe(3, seed=0)
    assert '"problems": ["forced"]' in str(info.value)
    assert len(v.degree_law_probe(3, seed=0, strict=False).violations) == 3
