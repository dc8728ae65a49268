"""Complex polynomials, rational functions and lower-triangular Toeplitz algebra.

Polynomials are dense coefficient arrays, lowest power first.  Trailing zeros
are kept on purpose: the reflection ``p -> z^k conj(p(1/conj z))`` depends on
the index ``k`` and not on the effective degree, so the nominal length is
part of the value.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT
from .errors import (
    DimensionError,
    PoleAtOriginError,
    ReflectionIndexError,
    SingularToeplitzError,
)


def _as_coeffs(values) -> np.ndarray:
    arr = np.array(values, dtype=complex).ravel()
    if arr.size == 0:
        arr = np.zeros(1, dtype=complex)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class ComplexPoly:
    """Polynomial sum(coeffs[j] * z**j) with complex coefficients."""

    coeffs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _as_coeffs(self.coeffs))

    @classmethod
    def zero(cls, degree: int = 0) -> "ComplexPoly":
        return cls(np.zeros(degree + 1))

    @classmethod
    def constant(cls, value) -> "ComplexPoly":
        return cls([value])

    @classmethod
    def monomial(cls, power: int, value=1.0) -> "ComplexPoly":
        c = np.zeros(power + 1, dtype=complex)
        c[power] = value
        return cls(c)

    @property
    def degree(self) -> int:
        """Nominal degree, ``len(coeffs) - 1``."""
        return self.coeffs.size - 1

    def effective_degree(self, tol: float = DEFAULT.zero_tol, relative: bool = False) -> int:
        """Largest j with |coeffs[j]| > tol, or -1 for the zero polynomial.

        With ``relative=True`` the threshold is ``tol * max|coeffs|``.
        """
        mags = np.abs(self.coeffs)
        thresh = tol * mags.max() if relative else tol
        idx = np.nonzero(mags > thresh)[0]
        return int(idx[-1]) if idx.size else -1

    def is_zero(self, tol: float = DEFAULT.zero_tol) -> bool:
        return self.effective_degree(tol) < 0

    def leading(self, tol: float = DEFAULT.zero_tol, relative: bool = False) -> complex:
        d = self.effective_degree(tol, relative)
        return complex(self.coeffs[d]) if d >= 0 else 0j

    def trim(self, tol: float = DEFAULT.zero_tol, relative: bool = True) -> "ComplexPoly":
        """Drop trailing coefficients at or below the threshold (keeps one coefficient)."""
        d = max(self.effective_degree(tol, relative), 0)
        return ComplexPoly(self.coeffs[: d + 1])

    def padded(self, length: int) -> "ComplexPoly":
        if length < self.coeffs.size:
            if np.any(self.coeffs[length:] != 0):
                raise DimensionError("cannot pad to a shorter length with nonzero tail")
            return ComplexPoly(self.coeffs[:length])
        out = np.zeros(length, dtype=complex)
        out[: self.coeffs.size] = self.coeffs
        return ComplexPoly(out)

    def shift(self, k: int = 1) -> "ComplexPoly":
        """Multiply by z**k."""
        return ComplexPoly(np.concatenate([np.zeros(k, dtype=complex), self.coeffs]))

    def conj(self) -> "ComplexPoly":
        return ComplexPoly(np.conj(self.coeffs))

    def roots(self, tol: float = DEFAULT.zero_tol) -> np.ndarray:
        """Roots via companion-matrix eigenvalues, after relative trailing trim."""
        p = self.trim(tol, relative=True)
        if p.degree < 1:
            return np.zeros(0, dtype=complex)
        return np.roots(p.coeffs[::-1])

    def __call__(self, z):
        return poly_eval(self, z)

    def _binary(self, other, op):
        if not isinstance(other, ComplexPoly):
            other = ComplexPoly([other])
        n = max(self.coeffs.size, other.coeffs.size)
        a = np.zeros(n, dtype=complex)
        b = np.zeros(n, dtype=complex)
        a[: self.coeffs.size] = self.coeffs
        b[: other.coeffs.size] = other.coeffs
        return ComplexPoly(op(a, b))

    def __add__(self, other):
        return self._binary(other, np.add)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, np.subtract)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return ComplexPoly(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, ComplexPoly):
            return ComplexPoly(np.convolve(self.coeffs, other.coeffs))
        return ComplexPoly(self.coeffs * complex(other))

    __rmul__ = __mul__

    def allclose(self, other: "ComplexPoly", atol: float = 1e-12) -> bool:
        n = max(self.coeffs.size, other.coeffs.size)
        return bool(np.allclose(self.padded(n).coeffs, other.padded(n).coeffs, rtol=0, atol=atol))

    def __repr__(self):
        return f"ComplexPoly({np.array2string(self.coeffs, precision=6)})"


def poly_eval(p: ComplexPoly, z):
    """Horner evaluation; ``z`` may be a scalar or an array."""
    z = np.asarray(z, dtype=complex)
    acc = np.zeros_like(z)
    for c in p.coeffs[::-1]:
        acc = acc * z + c
    return complex(acc) if acc.ndim == 0 else acc


def poly_reflect(p: ComplexPoly, k: int, tol: float = DEFAULT.zero_tol) -> ComplexPoly:
    """Return p# with coefficient j equal to conj(p[k - j]), of nominal degree k."""
    if k < p.effective_degree(tol):
        raise ReflectionIndexError(
            f"reflection index {k} below effective degree {p.effective_degree(tol)}"
        )
    c = np.zeros(k + 1, dtype=complex)
    m = min(p.coeffs.size, k + 1)
    c[:m] = p.coeffs[:m]
    return ComplexPoly(np.conj(c[::-1]))


@dataclass(frozen=True, eq=False)
class LowerToeplitz:
    """Lower-triangular Toeplitz matrix stored by its first column.

    Entry (i, j) is ``column[i - j]`` for i >= j and zero above the diagonal.
    """

    column: np.ndarray

    def __post_init__(self):
        col = np.array(self.column, dtype=complex).ravel()
        col.setflags(write=False)
        object.__setattr__(self, "column", col)

    @classmethod
    def identity(cls, m: int) -> "LowerToeplitz":
        col = np.zeros(m, dtype=complex)
        if m:
            col[0] = 1.0
        return cls(col)

    @property
    def dim(self) -> int:
        return self.column.size

    def matvec(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=complex)
        if v.size != self.dim:
            raise DimensionError(f"vector of length {v.size} against dimension {self.dim}")
        return np.convolve(self.column, v)[: self.dim]

    def to_dense(self) -> np.ndarray:
        m = self.dim
        out = np.zeros((m, m), dtype=complex)
        for d in range(m):
            out[np.arange(d, m), np.arange(0, m - d)] = self.column[d]
        return out

    def __matmul__(self, other):
        if isinstance(other, LowerToeplitz):
            return toeplitz_mul(self, other)
        return self.matvec(other)


def toeplitz_solve_lower(T: LowerToeplitz, v, tol: float = DEFAULT.zero_tol) -> np.ndarray:
    """Solve T x = v by forward substitution in O(m^2) on the defining column."""
    v = np.asarray(v, dtype=complex).ravel()
    if v.size != T.dim:
        raise DimensionError(f"vector of length {v.size} against dimension {T.dim}")
    if T.dim == 0:
        return np.zeros(0, dtype=complex)
    t0 = T.column[0]
    if abs(t0) <= tol:
        raise SingularToeplitzError(f"singular Toeplitz system, |t0| = {abs(t0):.3g}")
    x = np.zeros_like(v)
    col = T.column
    for i in range(v.size):
        # col[1:i+1] against x[i-1], ..., x[0]
        x[i] = (v[i] - np.dot(col[1 : i + 1], x[i - 1 :: -1][:i])) / t0
    return x


def toeplitz_mul(S: LowerToeplitz, T: LowerToeplitz) -> LowerToeplitz:
    if S.dim != T.dim:
        raise DimensionError(f"dimension mismatch {S.dim} vs {T.dim}")
    return LowerToeplitz(np.convolve(S.column, T.column)[: S.dim])


@dataclass(frozen=True, eq=False)
class RationalFn:
    """Quotient num/den of two complex polynomials."""

    num: ComplexPoly
    den: ComplexPoly

    def __post_init__(self):
        if not isinstance(self.num, ComplexPoly):
            object.__setattr__(self, "num", ComplexPoly(self.num))
        if not isinstance(self.den, ComplexPoly):
            object.__setattr__(self, "den", ComplexPoly(self.den))
        if not np.any(self.den.coeffs != 0):
            raise ZeroDivisionError("denominator is the zero polynomial")

    @classmethod
    def constant(cls, value) -> "RationalFn":
        return cls(ComplexPoly([value]), ComplexPoly([1.0]))

    @classmethod
    def from_coeffs(cls, num, den) -> "RationalFn":
        return cls(ComplexPoly(num), ComplexPoly(den))

    def __call__(self, z):
        return poly_eval(self.num, z) / poly_eval(self.den, z)

    def trim(self, tol: float = DEFAULT.zero_tol) -> "RationalFn":
        """Relative trailing trim of both polynomials (no root cancellation)."""
        return RationalFn(self.num.trim(tol), self.den.trim(tol))

    def mcmillan_degree(self, tol: float = DEFAULT.zero_tol, relative: bool = True) -> int:
        return max(self.num.effective_degree(tol, relative), self.den.effective_degree(tol, relative), 0)

    def normalized(self, tol: float = DEFAULT.zero_tol) -> "RationalFn":
        """Scale so that den(0) = 1 when den(0) is nonzero."""
        d0 = self.den.coeffs[0]
        if abs(d0) <= tol:
            return self
        return RationalFn(self.num * (1 / d0), self.den * (1 / d0))

    def __repr__(self):
        return f"RationalFn(num={self.num!r}, den={self.den!r})"


def rational_taylor(f: RationalFn, m: int, tol: float = DEFAULT.zero_tol) -> np.ndarray:
    """First m+1 Taylor coefficients of num/den at the origin by long division."""
    d = f.den.coeffs
    if abs(d[0]) <= tol:
        raise PoleAtOriginError("denominator vanishes at the origin")
    num = np.zeros(m + 1, dtype=complex)
    k = min(m + 1, f.num.coeffs.size)
    num[:k] = f.num.coeffs[:k]
    t = np.zeros(m + 1, dtype=complex)
    for j in range(m + 1):
        s = num[j]
        upper = min(j, d.size - 1)
        for i in range(1, upper + 1):
            s -= d[i] * t[j - i]
        t[j] = s / d[0]
    return t


def _match_roots(a: np.ndarray, b: np.ndarray, tol: float):
    """Greedy nearest-neighbour pairing of roots closer than tol (relative for |r| > 1)."""
    unused = list(range(b.size))
    pairs = []
    for r in a:
        if not unused:
            break
        dists = np.abs(b[unused] - r)
        i = int(np.argmin(dists))
        if dists[i] <= tol * max(1.0, abs(r)):
            pairs.append(0.5 * (r + b[unused[i]]))
            unused.pop(i)
    return pairs


def rational_reduce(f: RationalFn, tol=DEFAULT) -> RationalFn:
    """Cancel numerator/denominator roots that coincide within ``root_match_tol``.

    Common factors are divided out (rather than rebuilding from roots) so the
    surviving coefficients keep their accuracy.  On a root-finder failure the
    input is returned unchanged and a RuntimeWarning is issued.
    """
    num = f.num.trim(tol.zero_tol)
    den = f.den.trim(tol.zero_tol)
    if num.is_zero(tol.zero_tol * max(1.0, np.abs(den.coeffs).max())):
        return RationalFn.constant(0.0)
    try:
        common = _match_roots(num.roots(tol.zero_tol), den.roots(tol.zero_tol), tol.root_match_tol)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK non-convergence
        warnings.warn(f"root finding failed, reduction unavailable: {exc}", RuntimeWarning)
        return f
    if common:
        g = np.poly(common)  # descending, monic
        qn, _ = np.polydiv(num.coeffs[::-1], g)
        qd, _ = np.polydiv(den.coeffs[::-1], g)
        num, den = ComplexPoly(qn[::-1]), ComplexPoly(qd[::-1])
    return RationalFn(num, den).normalized(tol.zero_tol)


def hankel_matrix(c, full: bool = False) -> np.ndarray:
    """Hankel matrix [c_{i+j-1}] sized (n-1)/2 x (n-1)/2 for odd n, (n-2)/2 x n/2 for even n.

    With ``full=True`` the matrix uses every entry c_1..c_n instead
    (ceil(n/2) x (n+1-ceil(n/2))).  Its rank is still a lower bound on the
    degree of any rational interpolant.
    """
    c = np.asarray(c, dtype=complex).ravel()
    n = c.size - 1
    if full:
        rows = (n + 1) // 2
        cols = n + 1 - rows
    elif n % 2:
        rows = cols = (n - 1) // 2
    else:
        rows, cols = max((n - 2) // 2, 0), n // 2
    H = np.zeros((rows, cols), dtype=complex)
    for i in range(rows):
        for j in range(cols):
            H[i, j] = c[i + j + 1]
    return H


def numerical_rank(M: np.ndarray, rank_tol: float = DEFAULT.rank_tol) -> int:
    if M.size == 0:
        return 0
    s = np.linalg.svd(M, compute_uv=False)
    if s[0] == 0:
        return 0
    return int(np.sum(s > rank_tol * s[0]))


def hankel_rank(c, rank_tol: float = DEFAULT.rank_tol, full: bool = False) -> int:
    """Numerical rank q of the data Hankel matrix (0 when the matrix is empty)."""
    return numerical_rank(hankel_matrix(c, full), rank_tol)
