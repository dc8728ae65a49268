"""Assemble interpolants f = T_Theta[E] and run the end-to-end solver."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import LowerToeplitz, RationalFn, hankel_rank
from .config import DEFAULT, Tolerances
from .errors import InadmissibleDataError, RejectedParameterError
from .params import (
    K_EQUAL_N,
    ParameterSpec,
    make_param_k_above_n,
    make_param_k_below_n,
    make_param_k_equal_n,
    schur_membership,
)
from .sampling import random_disk, random_schur_rational
from .schur import ProblemInstance, SchurParams, check_admissible, schur_parameters
from .transfer import ThetaMatrix, build_R, build_theta
from .verify import VerificationReport, verify_solution


def apply_lft(theta: ThetaMatrix, E: RationalFn, tol: Tolerances = DEFAULT, check: bool = True) -> RationalFn:
    """f = (z B# N_E + A D_E) / (z A# N_E + B D_E).

    The pair is coprime whenever E is, so no root cancellation is attempted;
    only the trailing coefficients that cancel in exact arithmetic are
    trimmed (relative to each polynomial's largest coefficient).
    """
    if check:
        rep = schur_membership(E, tol)
        if not rep:
            raise RejectedParameterError(f"parameter is not Schur class: {rep.reason}")
    elif abs(E.den.coeffs[0]) <= tol.zero_tol:
        raise RejectedParameterError("parameter has a pole at the origin")
    N, D = E.num, E.den
    num = theta.B_sharp.shift(1) * N + theta.A * D
    den = theta.A_sharp.shift(1) * N + theta.B * D
    return RationalFn(num.trim(tol.zero_tol), den.trim(tol.zero_tol))


def mcmillan_degree(f: RationalFn, tol: float = DEFAULT.zero_tol) -> int:
    """max(deg num, deg den) on effective degrees; assumes f is coprime."""
    return f.mcmillan_degree(tol)


def central_solution(theta: ThetaMatrix) -> RationalFn:
    return RationalFn(theta.A, theta.B).trim()


@dataclass
class Solution:
    f: RationalFn
    parameter: ParameterSpec
    degree: int
    report: VerificationReport


@dataclass
class SolveResult:
    instance: ProblemInstance
    status: str  # ok | infeasible | exhausted
    gammas: SchurParams
    theta: ThetaMatrix
    R: LowerToeplitz
    q: int
    q_full: int = 0
    solutions: list = field(default_factory=list)
    reports: list = field(default_factory=list)

    def __iter__(self):
        return iter(self.solutions)

    def __len__(self):
        return len(self.solutions)

    def __getitem__(self, i):
        return self.solutions[i]


_PROBE_POINTS = np.array([0.3, 0.5j, -0.7, 0.2 + 0.6j, -0.4 - 0.4j])


def _is_duplicate(f: RationalFn, kept: list) -> bool:
    vals = f(_PROBE_POINTS)
    return any(np.abs(vals - s.f(_PROBE_POINTS)).max() < 1e-9 for s in kept)


def _central_spec(n: int) -> ParameterSpec:
    alpha = np.zeros(n + 1, complex)
    alpha[0] = 1.0
    E = RationalFn.constant(0.0)
    return ParameterSpec(K_EQUAL_N, alpha, np.zeros(n, complex), E, schur_membership(E))


def _candidates_at_least_n(R, n, k, rng, alpha0, tol):
    """Endless stream of parameter candidates for k >= n (after the central one)."""
    i = 0
    while True:
        i += 1
        if k == n:
            tail = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            yield lambda tail=tail: make_param_k_equal_n(R, tail, alpha0, tol)
        elif i % 2:
            d = int(rng.integers(0, k - n))  # free degree in [0, k-n-1]
            E = random_schur_rational(rng, d, 0.9) if d else RationalFn.constant(random_disk(rng, None, 0.9))
            yield lambda E=E: make_param_k_above_n(R, k, E, tol=tol)
        else:
            af = rng.standard_normal(k) + 1j * rng.standard_normal(k)
            be = rng.standard_normal(k - n) + 1j * rng.standard_normal(k - n)
            yield lambda af=af, be=be: make_param_k_above_n(R, k, alpha_free=af, beta_ext=be, alpha0=alpha0, tol=tol)


def solve_rsp(instance: ProblemInstance, count: int = 5, seed: int = 0, alpha0="bound",
              search_budget: int | None = None) -> SolveResult:
    """Up to ``count`` verified Schur-class interpolants of degree <= k.

    For k >= n the central solution T_Theta[0] comes first.  For k < n the
    parameter search is best-effort; an empty result carries a report.
    """
    tol = instance.tol
    adm = check_admissible(instance.c, tol)
    if not adm.admissible:
        raise InadmissibleDataError(adm.message, stage=adm.failed_stage)
    gammas = schur_parameters(instance.c, tol.strict_tol)
    theta = build_theta(gammas, tol)
    R = build_R(theta.A, theta.B, tol)
    n, k = instance.n, instance.k
    q = hankel_rank(instance.c, tol.rank_tol)
    q_full = hankel_rank(instance.c, tol.rank_tol, full=True)
    result = SolveResult(instance, "ok", gammas, theta, R, q, q_full)
    if k < q_full:
        # rank of any Hankel section of the data bounds deg f from below
        result.reports.append(
            f"no solutions of complexity k < q: Hankel rank {q_full} (q = {q} on the reduced section) "
            f"exceeds budget k = {k}"
        )
        result.status = "infeasible"
        return result

    def accept(spec: ParameterSpec) -> bool:
        f = apply_lft(theta, spec.realized, tol, check=False)
        if _is_duplicate(f, result.solutions):
            return False
        rep = verify_solution(f, instance)
        if not rep.passed:
            result.reports.append(f"candidate ({spec.regime}) rejected: {'; '.join(rep.reasons)}")
            return False
        result.solutions.append(Solution(f, spec, rep.degree, rep))
        return True

    rng = np.random.default_rng(seed)
    if k >= n:
        accept(_central_spec(n))
        if n == 0 and k == 0:
            return result
        attempts = 0
        stream = _candidates_at_least_n(R, n, k, rng, alpha0, tol)
        while len(result.solutions) < count and attempts < 4 * count + 8:
            attempts += 1
            try:
                spec = next(stream)()
            except RejectedParameterError as exc:
                result.reports.append(f"parameter rejected: {exc}")
                continue
            accept(spec)
        del result.solutions[count:]
        return result

    budget = search_budget if search_budget is not None else 64 * count
    outcome = make_param_k_below_n(R, k, budget, seed, tol, max_found=count)
    result.reports.append(outcome.message)
    for spec in outcome.specs:
        accept(spec)
    if not result.solutions:
        result.status = "infeasible" if outcome.status == "infeasible" else "exhausted"
    return result


def smallest_successful_budget(c, seed: int = 0, tol: Tolerances = DEFAULT, search_budget: int = 64) -> int:
    """Smallest k at which the solver finds a solution.

    Only an upper bound on the minimal degree: below n the search is
    best-effort.  The central solution guarantees a result at k = n.
    """
    c = np.asarray(c, dtype=complex)
    n = c.size - 1
    for k in range(n + 1):
        res = solve_rsp(ProblemInstance(c, k, tol), count=1, seed=seed, search_budget=search_budget)
        if res.solutions:
            return k
    return n  # pragma: no cover - the central solution always verifies
