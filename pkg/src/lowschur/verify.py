"""Independent checks of solutions and of the degree laws of the Schur step.

Nothing here calls the construction path (Theta, R, parameter generation);
a solution is judged only through algebra primitives and Schur membership.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .algebra import ComplexPoly, RationalFn, rational_reduce, rational_taylor
from .config import DEFAULT, Tolerances
from .errors import ExtractionError, LowSchurError, StripError
from .params import schur_membership
from .sampling import random_disk, random_schur_rational
from .schur import ProblemInstance, SchurParams, backward_schur_step, forward_schur_step


@dataclass
class VerificationReport:
    taylor_residual: float
    circle_max: float
    nearest_pole: float
    degree: int
    degree_budget_ok: bool
    roundtrip_residual: float | None = None
    verdict: str = "fail"
    reasons: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def verify_solution(f: RationalFn, instance: ProblemInstance, reduce: bool = False) -> VerificationReport:
    """Check f against the data, the Schur class and the degree budget.

    The degree is that of the given representation after dropping negligible
    leading coefficients, which is the McMillan degree when num and den are
    coprime (always the case for LFT outputs).  Root-based cancellation is
    opt-in via ``reduce``, and every check then runs on the reduced f.  It is
    off by default because a pole/zero pair separated by 1e-10 is a genuine
    degree that matching roots at a tolerance would hide.
    """
    tol = instance.tol
    f = rational_reduce(f, tol) if reduce else f.trim(tol.zero_tol)
    reasons = []
    c = instance.c
    scale = max(1.0, float(np.abs(c).max()))
    if abs(f.den.coeffs[0]) <= tol.zero_tol * np.abs(f.den.coeffs).max():
        reasons.append("pole at the origin: Taylor expansion undefined")
        taylor_res = float("inf")
    else:
        t = rational_taylor(f, instance.n, tol.zero_tol)
        taylor_res = float(np.abs(t - c).max() / scale)
        if taylor_res > tol.taylor_tol:
            reasons.append(f"Taylor residual {taylor_res:.3g} exceeds {tol.taylor_tol:g}")

    mem = schur_membership(f, tol)
    if mem.indeterminate:
        reasons.append(mem.reason)
    if mem.circle_max > 1 + tol.schur_tol:
        reasons.append(f"circle maximum {mem.circle_max:.12g} exceeds 1")
    if mem.nearest_pole < 1 + tol.pole_margin:
        reasons.append(f"pole of modulus {mem.nearest_pole:.6g} in the closed disk")

    degree = f.mcmillan_degree(tol.zero_tol)
    budget_ok = degree <= instance.k
    if not budget_ok:
        reasons.append(f"degree {degree} exceeds budget {instance.k}")
    return VerificationReport(
        taylor_residual=taylor_res,
        circle_max=mem.circle_max,
        nearest_pole=mem.nearest_pole,
        degree=degree,
        degree_budget_ok=budget_ok,
        verdict="fail" if reasons else "pass",
        reasons=reasons,
    )


def roundtrip_extract(f: RationalFn, gammas, tol: Tolerances = DEFAULT) -> RationalFn:
    """Strip gamma_0, ..., gamma_n off f with backward Schur steps; returns the parameter E'."""
    g = gammas.gammas if isinstance(gammas, SchurParams) else np.asarray(gammas, dtype=complex)
    cur = f.trim(tol.zero_tol)
    for j, gam in enumerate(g):
        try:
            cur = backward_schur_step(cur, gam, tol.backward_tol)
        except StripError as exc:
            raise ExtractionError(f"extraction failed at stage {j}: {exc}", stage=j) from exc
    return cur


def pointwise_distance(f: RationalFn, g: RationalFn, points) -> float:
    return float(np.abs(f(points) - g(points)).max())


def disk_points(rng: np.random.Generator, count: int = 50, radius: float = 0.9) -> np.ndarray:
    return random_disk(rng, count, radius)


# -- degree laws of a single Schur step ----------------------------------------------

PROBE_TOL = 1e-9


def _degrees(f: RationalFn, rel: float = PROBE_TOL) -> tuple[int, int]:
    scale = max(np.abs(f.num.coeffs).max(), np.abs(f.den.coeffs).max())
    return f.num.effective_degree(rel * scale), f.den.effective_degree(rel * scale)


def degree_of(f: RationalFn) -> int:
    dn, dd = _degrees(f)
    return max(dn, dd, 0)


def vanishes_at_infinity(f: RationalFn) -> bool:
    dn, dd = _degrees(f)
    return dn < dd


def equals_reciprocal_conj_at_infinity(f: RationalFn, gamma: complex) -> bool:
    """f(oo) == 1/conj(gamma), decided from leading coefficients."""
    dn, dd = _degrees(f)
    if dn > dd:
        return gamma == 0
    if dn < dd:
        return False
    ln, ld = f.num.coeffs[dn], f.den.coeffs[dd]
    return abs(np.conj(gamma) * ln - ld) <= PROBE_TOL * max(abs(ln), abs(ld))


def classify_case(f1: RationalFn) -> int:
    """1: deg D1 > deg N1 + 1, 2: deg D1 < deg N1 + 1, 3: equality (zero N1 has degree -1)."""
    dn, dd = _degrees(f1)
    if dd > dn + 1:
        return 1
    if dd < dn + 1:
        return 2
    return 3


class DegreeLawViolation(LowSchurError, AssertionError):
    pass


@dataclass
class ProbeReport:
    samples: int
    chains: int
    case_counts: dict
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def _serialize(f: RationalFn) -> dict:
    return {
        "num": [[float(z.real), float(z.imag)] for z in f.num.coeffs],
        "den": [[float(z.real), float(z.imag)] for z in f.den.coeffs],
    }


def _annulus(rng, lo=0.05, hi=0.9) -> complex:
    # magnitudes bounded away from 0 keep leading-coefficient decisions unambiguous
    return rng.uniform(lo, hi) * np.exp(2j * np.pi * rng.uniform())


def _random_f1(rng: np.random.Generator) -> RationalFn:
    kind = rng.integers(0, 5)
    w = 0.0 if rng.uniform() < 0.1 else _annulus(rng)
    if kind == 0:
        base = RationalFn.constant(w)
    elif kind == 1:
        base = RationalFn(ComplexPoly([0, w]), ComplexPoly([1]))  # w z
    elif kind == 2:
        # vanishes at infinity: w (1 - |a|) / (1 - a z)
        a = _annulus(rng, 0.05, 0.8)
        base = RationalFn(ComplexPoly([w * (1 - abs(a))]), ComplexPoly([1, -a]))
    elif kind == 3:
        base = RationalFn(ComplexPoly([0, 0, w]), ComplexPoly([1]))  # w z^2
    else:
        base = RationalFn(ComplexPoly([0.5 * w]), ComplexPoly([1, 0, 0.5]))  # 0.5 w / (1 + 0.5 z^2)
    return random_schur_rational(rng, int(rng.integers(0, 4)), 0.9, base=base)


def _random_gamma(rng) -> complex:
    return 0j if rng.uniform() < 0.1 else complex(_annulus(rng))


def check_single_step(f1: RationalFn, gamma: complex) -> tuple[int, list]:
    """Return (case, problems) for f = forward_schur_step(f1, gamma)."""
    f = forward_schur_step(f1, gamma)
    d1, d = degree_of(f1), degree_of(f)
    up = d == d1 + 1
    problems = []
    if d - d1 not in (0, 1):
        problems.append(f"degree jump {d1} -> {d}")
    inf0 = vanishes_at_infinity(f1)
    recip = equals_reciprocal_conj_at_infinity(f, gamma)
    # deg f = deg f1  <=>  f1(oo) = 0  <=>  f(oo) != 1/conj(gamma)
    if up == inf0:
        problems.append(f"degree step {d1}->{d} but f1(oo)=0 is {inf0}")
    if up != recip:
        problems.append(f"degree step {d1}->{d} but f(oo)=1/conj(gamma) is {recip}")
    return classify_case(f1), problems


def check_chain(E: RationalFn, gammas) -> list:
    """Monotone propagation along f_m = E, f_j = forward(f_{j+1}, gamma_j)."""
    chain = [E]
    for gam in reversed(list(gammas)):
        chain.append(forward_schur_step(chain[-1], gam))
    chain.reverse()  # chain[j] = f_j, chain[-1] = E
    degs = [degree_of(f) for f in chain]
    zero_inf = [vanishes_at_infinity(f) for f in chain]
    problems = []
    m = len(chain) - 1
    for i in range(m):
        if degs[i] == degs[i + 1] + 1:
            for j in range(i):
                if degs[j] != degs[j + 1] + 1:
                    problems.append(f"increment at step {i} but not at outer step {j}")
    for i in range(m + 1):
        if zero_inf[i]:
            for j in range(i + 1, m + 1):
                if not zero_inf[j] or degs[j] != degs[i]:
                    problems.append(f"f_{i}(oo)=0 but f_{j} breaks it")
    return problems


def degree_law_probe(samples: int, seed: int = 0, chain_length: int = 4,
                     strict: bool = True) -> ProbeReport:
    """Check the single-step degree dichotomy and its propagation along chains.

    Every sample draws a Schur-class f1 and a gamma, checks the step
    f = forward(f1, gamma), and also checks a chain of ``chain_length`` steps
    on top of f1.  Counts are kept per case of the leading-degree comparison.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    cases = Counter()
    violations = []
    for s in range(samples):
        f1 = _random_f1(rng)
        gamma = _random_gamma(rng)
        case, problems = check_single_step(f1, gamma)
        cases[case] += 1
        chain_g = [_random_gamma(rng) for _ in range(chain_length)]
        problems += check_chain(f1, chain_g)
        if problems:
            violations.append({
                "sample": s,
                "f1": _serialize(f1),
                "gamma": [gamma.real, gamma.imag],
                "chain_gammas": [[g.real, g.imag] for g in chain_g],
                "problems": problems,
            })
    report = ProbeReport(samples, samples, {f"case_{k}": cases[k] for k in (1, 2, 3)}, violations)
    if strict and violations:
        raise DegreeLawViolation(json.dumps(violations[0]))
    return report
