"""Admissible parameters E for the linear fractional parametrization.

Coefficient vectors cross module boundaries in ascending powers of z:
``alpha`` is the denominator of E and ``beta`` its numerator.  The reversed
orderings (alpha_n, ..., alpha_1) and (beta_{n-1}, ..., beta_0) used by the
Toeplitz relations live only inside this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import ComplexPoly, LowerToeplitz, RationalFn, rational_reduce
from .config import DEFAULT, Tolerances
from .errors import DimensionError, RejectedParameterError
from .transfer import ToeplitzFactors, r_values

K_EQUAL_N = "k_equal_n"
K_ABOVE_N_FREE = "k_above_n_free"
K_ABOVE_N_CONSTRAINED = "k_above_n_constrained"
K_BELOW_N = "k_below_n"
REGIMES = (K_EQUAL_N, K_ABOVE_N_FREE, K_ABOVE_N_CONSTRAINED, K_BELOW_N)


@dataclass
class MembershipReport:
    member: bool
    circle_max: float
    nearest_pole: float
    indeterminate: bool = False
    reason: str = ""

    def __bool__(self):
        return self.member


@dataclass(frozen=True, eq=False)
class ParameterSpec:
    regime: str
    alpha: np.ndarray
    beta: np.ndarray
    realized: RationalFn
    membership: MembershipReport | None = field(default=None, compare=False)

    def constraint_vectors(self, n: int) -> tuple[np.ndarray, np.ndarray]:
        """(alpha_n..alpha_1, beta_{n-1}..beta_0), zero-padded for k < n."""
        a = np.asarray(self.alpha, dtype=complex)
        b = np.asarray(self.beta, dtype=complex)
        if self.regime == K_BELOW_N:
            av = np.zeros(n, dtype=complex)
            bv = np.zeros(n, dtype=complex)
            av[: a.size] = a[::-1]
            bv[: b.size] = b[::-1]
            return av, bv
        if self.regime in (K_EQUAL_N, K_ABOVE_N_CONSTRAINED):
            if n == 0:
                return np.zeros(0, complex), np.zeros(0, complex)
            return a[-n:][::-1].copy(), b[-n:][::-1].copy()
        raise ValueError(f"regime {self.regime} carries no linear constraint")


def unit_circle(grid: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(grid) / grid)


def circle_max(f: RationalFn, grid: int = DEFAULT.grid) -> float:
    z = unit_circle(grid)
    with np.errstate(divide="ignore", invalid="ignore"):
        vals = np.abs(f(z))
    vals[~np.isfinite(vals)] = np.inf
    return float(vals.max())


def nearest_pole(f: RationalFn, tol: float = DEFAULT.zero_tol) -> float:
    r = f.den.roots(tol)
    return float(np.abs(r).min()) if r.size else float("inf")


def beta_from_alpha(R: LowerToeplitz, alpha_tail) -> np.ndarray:
    """(beta_{n-1}, ..., beta_0) = -R (alpha_n, ..., alpha_1)."""
    alpha_tail = np.asarray(alpha_tail, dtype=complex)
    if alpha_tail.size != R.dim:
        raise DimensionError(f"alpha tail of length {alpha_tail.size} against R of dimension {R.dim}")
    return -R.matvec(alpha_tail)


def alpha0_sufficient(alpha_tail, beta) -> float:
    """sum(|alpha_i|) + sum(|beta_i|); any |alpha_0| at or above this makes E Schur class."""
    return float(np.abs(np.asarray(alpha_tail)).sum() + np.abs(np.asarray(beta)).sum())


def schur_membership(E: RationalFn, tol: Tolerances = DEFAULT) -> MembershipReport:
    """Certify E in the Schur class by pole exclusion plus a boundary maximum.

    E is accepted when every denominator root has modulus >= 1 + pole_margin
    and max |E| over ``tol.grid`` equispaced points of the unit circle is at
    most 1 + schur_tol.  A zero numerator is the function E = 0.
    """
    scale = max(np.abs(E.num.coeffs).max(), np.abs(E.den.coeffs).max())
    if E.num.is_zero(tol.zero_tol * scale):
        return MembershipReport(True, 0.0, float("inf"), reason="E is identically zero")
    try:
        pole = nearest_pole(E, tol.zero_tol)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK non-convergence
        return MembershipReport(False, float("nan"), float("nan"), True, f"root finding failed: {exc}")
    cmax = circle_max(E, tol.grid)
    reasons = []
    if pole < 1 + tol.pole_margin:
        reasons.append(f"pole of modulus {pole:.6g} inside the closed disk")
    if cmax > 1 + tol.schur_tol:
        reasons.append(f"max modulus {cmax:.6g} on the unit circle exceeds 1")
    return MembershipReport(not reasons, cmax, pole, reason="; ".join(reasons))


def _realize(beta_asc, alpha_asc, tol: Tolerances) -> RationalFn:
    num = ComplexPoly(beta_asc) if len(beta_asc) else ComplexPoly([0.0])
    den = ComplexPoly(alpha_asc)
    if not np.any(den.coeffs != 0):
        raise RejectedParameterError("zero denominator")
    scale = np.abs(den.coeffs).max()
    if num.is_zero(tol.zero_tol * max(scale, np.abs(num.coeffs).max())):
        return RationalFn.constant(0.0)
    return RationalFn(num, den)


def _parse_strategy(strategy):
    if isinstance(strategy, str):
        s = strategy.strip().lower()
        if s in ("bound", "sufficient_bound"):
            return "bound", None
        if s in ("bisect", "minimize_bisect"):
            return "bisect", None
        return "explicit", complex(s.replace("i", "j"))
    return "explicit", complex(strategy)


def choose_free_coefficient(build, others, strategy, tol: Tolerances = DEFAULT, phase: complex = 1.0):
    """Pick the constant denominator coefficient of E and return (value, E, report).

    ``build(a0)`` realizes E for a trial coefficient; ``others`` are all the
    remaining coefficients, whose absolute sum bounds the admissible set.
    """
    kind, value = _parse_strategy(strategy)
    S = float(np.abs(np.asarray(others)).sum())
    if kind == "explicit":
        E = build(value)
        rep = schur_membership(E, tol)
        if not rep:
            raise RejectedParameterError(f"alpha value {value} rejected: {rep.reason}")
        return value, E, rep
    phase = complex(phase) / abs(phase)
    if S == 0.0:
        a0 = phase
        E = build(a0)
        return a0, E, schur_membership(E, tol)
    if kind == "bound":
        a0 = S * tol.safety_factor * phase
        E = build(a0)
        rep = schur_membership(E, tol)
        if not rep:  # pragma: no cover - the bound is sufficient up to round-off
            raise RejectedParameterError(f"sufficient bound rejected: {rep.reason}")
        return a0, E, rep
    return _bisect(build, S, tol, phase)


def _bisect(build, S, tol: Tolerances, phase):
    # stricter circle test so that |E| <= 1 holds pointwise on the grid
    strict = tol.replace(schur_tol=1e-12)

    def ok(mag):
        return bool(schur_membership(build(mag * phase), strict))

    hi = S
    grow = 0
    while not ok(hi):
        hi *= tol.safety_factor if grow == 0 else 2.0
        grow += 1
        if grow > 60:  # pragma: no cover
            raise RejectedParameterError("could not bracket an admissible alpha value")
    lo = 0.0
    while hi - lo > tol.bisect_tol * hi:
        mid = 0.5 * (lo + hi)
        if ok(mid):
            hi = mid
        else:
            lo = mid
    a0 = hi * phase
    E = build(a0)
    return a0, E, schur_membership(E, tol)


def make_param_k_equal_n(R: LowerToeplitz, alpha_tail, alpha0="bound", tol: Tolerances = DEFAULT,
                         phase: complex = 1.0) -> ParameterSpec:
    """Degree-n parameter E = (beta_0 + ... + beta_{n-1} z^{n-1}) / (alpha_0 + ... + alpha_n z^n).

    ``alpha_tail`` is (alpha_1, ..., alpha_n) in ascending order; the betas
    follow from -R and alpha_0 is chosen by ``alpha0``: "bound", "bisect" or
    an explicit number.
    """
    n = R.dim
    tail = np.asarray(alpha_tail, dtype=complex).ravel()
    if tail.size != n:
        raise DimensionError(f"alpha tail of length {tail.size}, expected {n}")
    beta = beta_from_alpha(R, tail[::-1])[::-1] if n else np.zeros(0, complex)

    def build(a0):
        return _realize(beta, np.concatenate([[a0], tail]), tol)

    a0, E, rep = choose_free_coefficient(build, np.concatenate([tail, beta]), alpha0, tol, phase)
    alpha = np.concatenate([[a0], tail])
    # E(infinity) = 0 by construction: numerator one coefficient shorter
    assert beta.size == alpha.size - 1
    return ParameterSpec(K_EQUAL_N, alpha, beta, E, rep)


def make_param_k_above_n(R: LowerToeplitz, k: int, free_part: RationalFn | None = None, *,
                         alpha_free=None, beta_ext=None, alpha0="bound", tol: Tolerances = DEFAULT,
                         phase: complex = 1.0) -> ParameterSpec:
    """Parameters for a degree budget k > n.

    Free regime: pass ``free_part``, any Schur function of degree <= k-n-1.
    Constrained regime: pass ``alpha_free`` = (alpha_{n-k+1}, ..., alpha_n)
    (k values) and ``beta_ext`` = (beta_{n-k}, ..., beta_{-1}) (k-n values),
    ascending.  beta_0..beta_{n-1} come from -R and the constant coefficient
    alpha_{n-k} is chosen by ``alpha0``.
    """
    n = R.dim
    if k <= n:
        raise ValueError(f"budget k={k} is not above n={n}")
    if free_part is not None:
        deg = rational_reduce(free_part, tol).mcmillan_degree(tol.zero_tol)
        if deg > k - n - 1:
            raise RejectedParameterError(f"free parameter of degree {deg} exceeds k-n-1 = {k - n - 1}")
        rep = schur_membership(free_part, tol)
        if not rep:
            raise RejectedParameterError(f"free parameter is not Schur class: {rep.reason}")
        return ParameterSpec(K_ABOVE_N_FREE, free_part.den.coeffs.copy(), free_part.num.coeffs.copy(),
                             free_part, rep)

    alpha_free = np.zeros(k, complex) if alpha_free is None else np.asarray(alpha_free, complex).ravel()
    beta_ext = np.zeros(k - n, complex) if beta_ext is None else np.asarray(beta_ext, complex).ravel()
    if alpha_free.size != k or beta_ext.size != k - n:
        raise DimensionError(f"expected {k} free alphas and {k - n} extension betas")
    tail = alpha_free[k - n:]  # alpha_1..alpha_n
    beta_top = beta_from_alpha(R, tail[::-1])[::-1] if n else np.zeros(0, complex)
    beta = np.concatenate([beta_ext, beta_top])

    def build(a0):
        return _realize(beta, np.concatenate([[a0], alpha_free]), tol)

    a0, E, rep = choose_free_coefficient(build, np.concatenate([alpha_free, beta]), alpha0, tol, phase)
    return ParameterSpec(K_ABOVE_N_CONSTRAINED, np.concatenate([[a0], alpha_free]), beta, E, rep)


def hankel_constraint(R: LowerToeplitz, k: int) -> np.ndarray:
    """(n-k) x (k+1) Hankel matrix [r_{p+q+1}] acting on (alpha_k, ..., alpha_0)."""
    r = r_values(R)
    n = r.size
    H = np.zeros((n - k, k + 1), dtype=complex)
    for p in range(n - k):
        H[p] = r[p : p + k + 1]
    return H


@dataclass
class SearchOutcome:
    status: str  # found | infeasible | exhausted
    specs: list
    nullity: int
    tried: int
    message: str = ""

    @property
    def spec(self) -> ParameterSpec | None:
        return self.specs[0] if self.specs else None


def make_param_k_below_n(R: LowerToeplitz, k: int, search_budget: int = 64, seed: int = 0,
                         tol: Tolerances = DEFAULT, max_found: int = 1) -> SearchOutcome:
    """Best-effort search for a Schur parameter of degree <= k < n.

    A trivial nullspace of the Hankel constraint proves that no solution of
    degree <= k exists.  Otherwise random nullspace vectors are tried; an
    exhausted search says nothing about existence.
    """
    n = R.dim
    if not 0 <= k < n:
        raise ValueError(f"budget k={k} must satisfy 0 <= k < n={n}")
    H = hankel_constraint(R, k)
    s_full = np.linalg.svd(H, compute_uv=False)
    cutoff = max(tol.rank_tol * (s_full[0] if s_full.size else 0.0), tol.zero_tol)
    rank = int(np.sum(s_full > cutoff))
    _, _, Vh = np.linalg.svd(H)
    null = Vh[rank:].conj()  # rows span the nullspace, columns indexed alpha_k..alpha_0
    nullity = null.shape[0]
    if nullity == 0:
        return SearchOutcome(
            "infeasible", [], 0, 0,
            f"Hankel constraint has full column rank {rank}: no solution of degree <= {k} exists",
        )
    rng = np.random.default_rng(seed)
    found = []
    tried = 0
    budget = search_budget if nullity > 1 else 1
    for _ in range(budget):
        w = rng.standard_normal(nullity) + 1j * rng.standard_normal(nullity)
        vec = w @ null
        vec = vec / np.abs(vec).max()
        tried += 1
        a_pad = np.zeros(n, dtype=complex)
        a_pad[: k + 1] = vec
        b_full = -R.matvec(a_pad)
        alpha = vec[::-1]  # ascending alpha_0..alpha_k
        beta = b_full[:k][::-1]  # ascending beta_0..beta_{k-1}
        if abs(alpha[0]) <= tol.zero_tol:
            continue  # pole at the origin
        E = rational_reduce(_realize(beta, alpha, tol), tol)
        rep = schur_membership(E, tol)
        if rep:
            found.append(ParameterSpec(K_BELOW_N, alpha, beta, E, rep))
            if len(found) >= max_found:
                break
    if found:
        return SearchOutcome("found", found, nullity, tried, f"found {len(found)} parameter(s)")
    return SearchOutcome(
        "exhausted", [], nullity, tried,
        f"no Schur-class parameter among {tried} nullspace samples (nullity {nullity}); "
        "this does not prove that none exists",
    )


def constraint_residuals(F: ToeplitzFactors, alpha_vec, beta_vec) -> tuple[float, float]:
    """Max-norm residuals of  Bt beta + A alpha = 0  and  At beta + B alpha = 0."""
    if F.A.dim == 0:
        return 0.0, 0.0
    r1 = F.Bt.matvec(beta_vec) + F.A.matvec(alpha_vec)
    r2 = F.At.matvec(beta_vec) + F.B.matvec(alpha_vec)
    return float(np.abs(r1).max()), float(np.abs(r2).max())
