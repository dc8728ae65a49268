"""Schur parameters of coefficient data and single Schur steps on rational functions."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import ComplexPoly, LowerToeplitz, RationalFn, toeplitz_solve_lower
from .config import DEFAULT, Tolerances
from .errors import InadmissibleDataError, NumericalInstabilityError, StripError


@dataclass(frozen=True, eq=False)
class SchurParams:
    gammas: np.ndarray

    def __post_init__(self):
        g = np.array(self.gammas, dtype=complex).ravel()
        if g.size == 0:
            raise ValueError("at least one Schur parameter is required")
        g.setflags(write=False)
        object.__setattr__(self, "gammas", g)

    @property
    def n(self) -> int:
        return self.gammas.size - 1

    def check(self, strict_tol: float = DEFAULT.strict_tol) -> "SchurParams":
        bad = np.nonzero(np.abs(self.gammas) >= 1 - strict_tol)[0]
        if bad.size:
            j = int(bad[0])
            raise InadmissibleDataError(
                f"|gamma_{j}| = {abs(self.gammas[j]):.12g} is not below 1", stage=j, value=self.gammas[j]
            )
        return self

    def __len__(self):
        return self.gammas.size

    def __getitem__(self, i):
        return self.gammas[i]

    def __iter__(self):
        return iter(self.gammas)


@dataclass(frozen=True, eq=False)
class ProblemInstance:
    """Data c_0..c_n plus the degree budget k."""

    c: np.ndarray
    k: int
    tol: Tolerances = field(default=DEFAULT)

    def __post_init__(self):
        c = np.array(self.c, dtype=complex).ravel()
        if c.size == 0:
            raise ValueError("coefficient list is empty")
        if int(self.k) < 0:
            raise ValueError("degree budget must be non-negative")
        c.setflags(write=False)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "k", int(self.k))

    @property
    def n(self) -> int:
        return self.c.size - 1


def schur_parameters(c, strict_tol: float = DEFAULT.strict_tol) -> SchurParams:
    """Run the coefficient recursion and return gamma_0..gamma_n.

    Stage j solves M_j x = (c_1, ..., c_{n-j}) where M_j is lower Toeplitz with
    column (1 - |c_0|^2, -conj(c_0) c_1, ..., -conj(c_0) c_{n-j-1}); the
    solution is the stage j+1 array.
    """
    cur = np.array(c, dtype=complex).ravel()
    gammas = []
    for j in range(cur.size):
        c0 = cur[0]
        if abs(c0) >= 1 - strict_tol:
            raise InadmissibleDataError(
                f"data not admissible: |c_0^({j})| = {abs(c0):.12g} at stage {j}",
                stage=j,
                value=c0,
                partial=gammas + [c0],
            )
        gammas.append(c0)
        if cur.size == 1:
            break
        col = np.empty(cur.size - 1, dtype=complex)
        col[0] = 1 - abs(c0) ** 2
        col[1:] = -np.conj(c0) * cur[1:-1]
        cur = toeplitz_solve_lower(LowerToeplitz(col), cur[1:])
    return SchurParams(gammas)


def inverse_schur_data(gammas) -> np.ndarray:
    """Coefficients c_0..c_n whose Schur parameters are ``gammas``.

    Runs each stage backwards: with g = gamma_j and x the stage j+1 array,
    c_{i+1} = (1 - |g|^2) x_i - conj(g) * sum_{l=1..i} c_l x_{i-l}.
    """
    g = np.array(gammas, dtype=complex).ravel()
    cur = g[-1:].copy()
    for j in range(g.size - 2, -1, -1):
        gj = g[j]
        x = cur
        nxt = np.empty(x.size + 1, dtype=complex)
        nxt[0] = gj
        for i in range(x.size):
            acc = (1 - abs(gj) ** 2) * x[i]
            for l in range(1, i + 1):
                acc -= np.conj(gj) * nxt[l] * x[i - l]
            nxt[i + 1] = acc
        cur = nxt
    return cur


def pick_matrix(c) -> np.ndarray:
    """I - T T^* with T the lower-triangular Toeplitz matrix of the data."""
    T = LowerToeplitz(c).to_dense()
    return np.eye(T.shape[0]) - T @ T.conj().T


@dataclass
class AdmissibilityReport:
    status: str  # admissible | singular | infeasible
    min_eig: float
    max_gamma: float
    gammas: np.ndarray
    failed_stage: int | None = None
    consistent: bool = True
    message: str = ""

    @property
    def admissible(self) -> bool:
        return self.status == "admissible"


def check_admissible(c, tol: Tolerances = DEFAULT) -> AdmissibilityReport:
    """Decide P_n > 0 from the Pick matrix and cross-check against max |gamma_j| < 1.

    A disagreement is only treated as instability when both criteria sit more
    than 10x their tolerance away from the boundary; raises
    NumericalInstabilityError in that case.
    """
    c = np.array(c, dtype=complex).ravel()
    min_eig = float(np.linalg.eigvalsh(pick_matrix(c)).min())
    failed = None
    try:
        gam = schur_parameters(c, strict_tol=tol.strict_tol).gammas
    except InadmissibleDataError as exc:
        failed = exc.stage
        gam = np.array(exc.partial, dtype=complex)
    max_g = float(np.abs(gam).max()) if gam.size else 0.0

    pick_ok = min_eig > tol.psd_tol
    gamma_ok = failed is None
    consistent = pick_ok == gamma_ok
    if not consistent:
        pick_far = abs(min_eig - tol.psd_tol) > 10 * tol.psd_tol
        gamma_far = abs((1 - tol.strict_tol) - max_g) > 10 * tol.strict_tol
        if pick_far and gamma_far:
            raise NumericalInstabilityError(
                f"Pick matrix min eigenvalue {min_eig:.3g} disagrees with max|gamma| {max_g:.12g}"
            )

    if pick_ok:
        status, msg = "admissible", "Pick matrix is positive definite"
    elif abs(min_eig) <= max(tol.psd_tol, 1e-12 * c.size):
        status = "singular"
        msg = (
            "Pick matrix is singular: a unique Blaschke-product solution exists; "
            "this solver requires strict admissibility"
        )
    else:
        status, msg = "infeasible", "Pick matrix is indefinite: no Schur-class function matches the data"
    if failed is not None:
        msg += f" (Schur recursion stopped at stage {failed})"
    return AdmissibilityReport(status, min_eig, max_g, gam, failed, consistent, msg)


def forward_schur_step(f_next: RationalFn, gamma: complex) -> RationalFn:
    """(z f_next + gamma) / (z conj(gamma) f_next + 1), written on num/den without reduction."""
    gamma = complex(gamma)
    N, D = f_next.num, f_next.den
    num = N.shift(1) + gamma * D
    den = (np.conj(gamma) * N).shift(1) + D
    return RationalFn(num, den)


def backward_schur_step(f: RationalFn, gamma: complex, tol: float = DEFAULT.backward_tol) -> RationalFn:
    """Strip gamma = f(0): returns ((N - gamma D)/z) / (D - conj(gamma) N).

    The constant term of N - gamma D must vanish up to ``tol`` relative to the
    coefficient scale; it is then dropped, which is the division by z.
    """
    gamma = complex(gamma)
    N, D = f.num, f.den
    if D.coeffs[0] == 0:
        raise StripError("f has a pole at the origin")
    f0 = N.coeffs[0] / D.coeffs[0]
    if abs(f0 - gamma) > tol:
        raise StripError(f"f(0) = {f0:.12g} does not match gamma = {gamma:.12g}")
    top = N - gamma * D
    scale = max(np.abs(N.coeffs).max(), np.abs(D.coeffs).max())
    if abs(top.coeffs[0]) > tol * scale:
        raise StripError("numerator does not vanish at the origin")
    num = ComplexPoly(top.coeffs[1:]) if top.coeffs.size > 1 else ComplexPoly([0.0])
    den = D - np.conj(gamma) * N
    return RationalFn(num, den)
