"""Coefficient matrix Theta = W_0 W_1 ... W_n of the Schur parametrization.

Theta is carried as the pair (A_n, B_n) of degree-index-n polynomials; the
other two entries z B_n# and z A_n# are derived on demand, so the block
structure [[z B#, A], [z A#, B]] cannot be violated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import ComplexPoly, LowerToeplitz, poly_reflect, toeplitz_mul, toeplitz_solve_lower
from .config import DEFAULT, Tolerances
from .errors import DimensionError, InconsistentThetaError
from .schur import SchurParams


def _as_params(gammas) -> SchurParams:
    return gammas if isinstance(gammas, SchurParams) else SchurParams(gammas)


def build_AB(gammas) -> tuple[ComplexPoly, ComplexPoly]:
    """A_n, B_n from A_0 = gamma_n, B_0 = 1 and

        A_{j+1} = z A_j + gamma_{n-j-1} B_j
        B_{j+1} = z conj(gamma_{n-j-1}) A_j + B_j
    """
    g = _as_params(gammas).gammas
    n = g.size - 1
    A = np.zeros(n + 1, dtype=complex)
    B = np.zeros(n + 1, dtype=complex)
    A[0], B[0] = g[n], 1.0
    for j in range(n):
        gam = g[n - j - 1]
        zA = np.concatenate([[0], A[:-1]])  # A_j has degree <= j < n, shift stays in range
        A, B = zA + gam * B, np.conj(gam) * zA + B
    return ComplexPoly(A), ComplexPoly(B)


def w_factor(gamma: complex, z) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    return np.array([[z, gamma * np.ones_like(z)], [z * np.conj(gamma), np.ones_like(z)]])


@dataclass(frozen=True, eq=False)
class ThetaMatrix:
    A: ComplexPoly
    B: ComplexPoly
    n: int

    @property
    def A_sharp(self) -> ComplexPoly:
        return poly_reflect(self.A, self.n)

    @property
    def B_sharp(self) -> ComplexPoly:
        return poly_reflect(self.B, self.n)

    @property
    def entries(self):
        """((z B#, A), (z A#, B)) as polynomials."""
        return (self.B_sharp.shift(1), self.A), (self.A_sharp.shift(1), self.B)

    def __call__(self, z) -> np.ndarray:
        (a, b), (c, d) = self.entries
        return np.array([[a(z), b(z)], [c(z), d(z)]])

    def det_poly(self) -> ComplexPoly:
        """det Theta = z (B B# - A A#), which should equal z^(n+1) prod(1 - |gamma_j|^2)."""
        d = _det_coeffs(self.A.coeffs, self.B.coeffs).astype(complex)
        return ComplexPoly(np.concatenate([[0], d]))


def _det_coeffs(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # extended precision so that the check measures construction error only
    a = a.astype(np.clongdouble)
    b = b.astype(np.clongdouble)
    d = np.convolve(b, np.conj(b[::-1])) - np.convolve(a, np.conj(a[::-1]))
    return d


def det_residual(theta: ThetaMatrix, gammas) -> float:
    """Max coefficient error of B B# - A A# against z^n prod(1-|gamma|^2), relative to the product."""
    g = _as_params(gammas).gammas
    prod = np.prod(1 - np.abs(g.astype(np.clongdouble)) ** 2)
    d = _det_coeffs(theta.A.coeffs, theta.B.coeffs)
    d[theta.n] -= prod
    return float(np.abs(d).max() / prod)


def build_theta(gammas, tol: Tolerances = DEFAULT, check: bool = True, seed: int = 0) -> ThetaMatrix:
    """Assemble Theta from the A/B recursion, with self-checks.

    Checks the determinant identity coefficientwise and compares against the
    literal product of W factors at five random points.
    """
    params = _as_params(gammas)
    A, B = build_AB(params)
    theta = ThetaMatrix(A, B, params.n)
    if check:
        res = det_residual(theta, params)
        if res > tol.det_tol:
            raise InconsistentThetaError(f"determinant identity residual {res:.3g} exceeds det_tol")
        rng = np.random.default_rng(seed)
        pts = rng.uniform(-1, 1, 5) + 1j * rng.uniform(-1, 1, 5)
        for z in pts:
            prod = np.eye(2, dtype=complex)
            for gam in params.gammas:
                prod = prod @ w_factor(gam, z)
            direct = theta(z)
            scale = max(1.0, np.abs(prod).max())
            if np.abs(direct - prod).max() > 1e-10 * scale:
                raise InconsistentThetaError(f"Theta disagrees with the W-product at z={z}")
    return theta


@dataclass(frozen=True, eq=False)
class ToeplitzFactors:
    """The four n x n lower Toeplitz matrices built from A_n and B_n.

    Columns (diagonal first):
        A  : a_n, a_{n-1}, ..., a_1
        B  : b_n, b_{n-1}, ..., b_1
        At : conj(a_0), conj(a_1), ..., conj(a_{n-1})
        Bt : conj(b_0), conj(b_1), ..., conj(b_{n-1})
    """

    A: LowerToeplitz
    B: LowerToeplitz
    At: LowerToeplitz
    Bt: LowerToeplitz


def toeplitz_factors(A: ComplexPoly, B: ComplexPoly, n: int | None = None) -> ToeplitzFactors:
    if n is None:
        n = A.degree
    a = A.padded(n + 1).coeffs
    b = B.padded(n + 1).coeffs
    return ToeplitzFactors(
        LowerToeplitz(a[n:0:-1]),
        LowerToeplitz(b[n:0:-1]),
        LowerToeplitz(np.conj(a[:n])),
        LowerToeplitz(np.conj(b[:n])),
    )


def build_R(A: ComplexPoly, B: ComplexPoly, tol: Tolerances = DEFAULT) -> LowerToeplitz:
    """R = Bt^{-1} A as a lower Toeplitz matrix of dimension n.

    The product of lower Toeplitz matrices is lower Toeplitz, so the column of
    R is the solution of Bt x = (first column of A).  Column entries are
    (r_n, r_{n-1}, ..., r_1).
    """
    if A.degree != B.degree:
        raise DimensionError("A and B must share the nominal degree n")
    if abs(B.coeffs[0] - 1) > tol.zero_tol:
        raise ValueError(f"B(0) must equal 1, got {B.coeffs[0]}")
    n = A.degree
    if n == 0:
        return LowerToeplitz(np.zeros(0))
    F = toeplitz_factors(A, B, n)
    return LowerToeplitz(toeplitz_solve_lower(F.Bt, F.A.column, tol.zero_tol))


def r_values(R: LowerToeplitz) -> np.ndarray:
    """(r_1, ..., r_n) from the column (r_n, ..., r_1)."""
    return R.column[::-1].copy()


def identity_residual(A: ComplexPoly, B: ComplexPoly, n: int | None = None) -> float:
    """Max entry of B Bt - A At (zero for genuine Theta entries)."""
    F = toeplitz_factors(A, B, n)
    if F.A.dim == 0:
        return 0.0
    lhs = toeplitz_mul(F.B, F.Bt).column
    rhs = toeplitz_mul(F.A, F.At).column
    return float(np.abs(lhs - rhs).max())
