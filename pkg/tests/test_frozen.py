"""Regression against values from the exact-arithmetic oracle (scripts/derive_oracle_values.py)."""

import numpy as np

from frozen_values import A1, A3, ALPHA3, B1, B3, BETA3, C1, C3, F3_DEGREE, F3_TAYLOR, GAMMAS3, R1, R3
from lowschur.algebra import rational_taylor
from lowschur.interpolant import apply_lft, mcmillan_degree
from lowschur.params import make_param_k_equal_n
from lowschur.schur import inverse_schur_data, schur_parameters
from lowschur.transfer import build_R, build_theta
from lowschur.verify import roundtrip_extract

TOL = 1e-13


def test_worked_instance():
    g = schur_parameters(C1)
    th = build_theta(g)
    assert np.abs(th.A.coeffs - A1).max() < TOL
    assert np.abs(th.B.coeffs - B1).max() < TOL
    assert np.abs(build_R(th.A, th.B).column - R1).max() < TOL


def test_complex_instance_pipeline():
    assert np.abs(inverse_schur_data(GAMMAS3) - C3).max() < TOL
    g = schur_parameters(C3)
    assert np.abs(g.gammas - GAMMAS3).max() < TOL
    th = build_theta(g)
    assert np.abs(th.A.coeffs - A3).max() < TOL
    assert np.abs(th.B.coeffs - B3).max() < TOL
    R = build_R(th.A, th.B)
    assert np.abs(R.column - R3).max() < TOL
    spec = make_param_k_equal_n(R, ALPHA3[1:], ALPHA3[0])
    assert np.abs(spec.beta - BETA3).max() < TOL
    f = apply_lft(th, spec.realized)
    assert np.abs(rational_taylor(f, len(F3_TAYLOR) - 1) - F3_TAYLOR).max() < 1e-12
    assert mcmillan_degree(f) == F3_DEGREE
    E = roundtrip_extract(f, g)
    pts = np.array([0.1, -0.5j, 0.3 + 0.6j])
    assert np.abs(E(pts) - spec.realized(pts)).max() < 1e-10
