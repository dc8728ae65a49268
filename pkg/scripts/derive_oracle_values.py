"""Exact-arithmetic oracle for the frozen regression values in tests/frozen_values.py.

Uses sympy and formulas that the package does not use:
  * Schur parameters from the function-level recursion on truncated power series,
  * Theta as the explicit product W_0 ... W_n of 2x2 polynomial matrices,
  * R from an exact inverse of the lower-triangular Toeplitz factor,
  * interpolant Taylor coefficients from a sympy series expansion.

Run:  python3 scripts/derive_oracle_values.py > tests/frozen_values.py
"""

from __future__ import annotations

import sympy as sp

z = sp.symbols("z")


def series_coeffs(expr, m):
    s = sp.series(expr, z, 0, m + 1).removeO()
    return [sp.nsimplify(sp.expand(s).coeff(z, i)) for i in range(m + 1)]


def schur_from_series(c):
    """gamma_j via f_{j+1} = (f_j - gamma_j) / (z (1 - conj(gamma_j) f_j)) on truncated series."""
    f = sp.Add(*[ci * z**i for i, ci in enumerate(c)])
    out = []
    m = len(c) - 1
    for j in range(m + 1):
        g = sp.expand(f).coeff(z, 0)
        out.append(sp.simplify(g))
        if j == m:
            break
        nxt = sp.cancel((f - g) / (z * (1 - sp.conjugate(g) * f)))
        coeffs = series_coeffs(nxt, m - j - 1)
        f = sp.Add(*[ci * z**i for i, ci in enumerate(coeffs)])
    return out


def inverse_from_gammas(gs):
    """c_0..c_n as Taylor coefficients of the central interpolant built from W products."""
    A, B = theta_AB(gs)
    return series_coeffs(A / B, len(gs) - 1)


def theta_AB(gs):
    M = sp.eye(2)
    for g in gs:
        M = M * sp.Matrix([[z, g], [sp.conjugate(g) * z, 1]])
    M = M.applyfunc(sp.expand)
    return M[0, 1], M[1, 1]


def coeff_list(p, deg):
    p = sp.Poly(sp.expand(p), z)
    return [sp.nsimplify(p.coeff_monomial(z**i)) for i in range(deg + 1)]


def R_exact(a, b, n):
    Amat = sp.zeros(n, n)
    Bt = sp.zeros(n, n)
    col_A = [a[n - i] for i in range(n)]  # a_n .. a_1
    col_Bt = [1] + [sp.conjugate(b[i]) for i in range(1, n)]
    for i in range(n):
        for j in range(i + 1):
            Amat[i, j] = col_A[i - j]
            Bt[i, j] = col_Bt[i - j]
    R = (Bt.inv() * Amat).applyfunc(sp.simplify)
    return [R[i, 0] for i in range(n)]


def cnum(v):
    v = complex(sp.N(v, 30))
    return repr(v)


def emit(name, values):
    print(f"{name} = [{', '.join(cnum(v) for v in values)}]")


def main():
    I = sp.I
    print('"""Regression values produced by scripts/derive_oracle_values.py (exact sympy oracle)."""')
    print()
    # instance 1: the worked n = 1 chain
    print("# n = 1, gammas [1/2, 2/5]")
    gs1 = [sp.Rational(1, 2), sp.Rational(2, 5)]
    emit("C1", inverse_from_gammas(gs1))
    A1, B1 = theta_AB(gs1)
    emit("A1", coeff_list(A1, 1))
    emit("B1", coeff_list(B1, 1))
    emit("R1", R_exact(coeff_list(A1, 1), coeff_list(B1, 1), 1))
    print()

    # instance 2: a complex n = 3 chain
    gs = [sp.Rational(1, 2), sp.Rational(-1, 3) + I / 4, sp.Rational(1, 5) * I, sp.Rational(2, 7) - I / 7]
    n = len(gs) - 1
    c = inverse_from_gammas(gs)
    back = schur_from_series(c)
    assert all(sp.simplify(x - y) == 0 for x, y in zip(back, gs)), "series Schur recursion disagrees"
    A, B = theta_AB(gs)
    a, b = coeff_list(A, n), coeff_list(B, n)
    R = R_exact(a, b, n)
    print("# n = 3, gammas [1/2, -1/3 + i/4, i/5, 2/7 - i/7]")
    emit("GAMMAS3", gs)
    emit("C3", c)
    emit("A3", a)
    emit("B3", b)
    emit("R3", R)  # first column of R: r_n .. r_1

    # k = n parameter with tail alpha_1..alpha_n = (1, -1/2, i/3) and alpha_0 = 4
    tail = [sp.Integer(1), sp.Rational(-1, 2), I / 3]  # alpha_1, alpha_2, alpha_3
    tail_desc = list(reversed(tail))  # alpha_n .. alpha_1
    Rm = sp.zeros(n, n)
    for i in range(n):
        for j in range(i + 1):
            Rm[i, j] = R[i - j]
    beta_desc = [sp.simplify(-x) for x in (Rm * sp.Matrix(tail_desc))]  # beta_{n-1} .. beta_0
    beta_asc = list(reversed(beta_desc))
    alpha_asc = [sp.Integer(4)] + tail
    NE = sum(bi * z**i for i, bi in enumerate(beta_asc))
    DE = sum(ai * z**i for i, ai in enumerate(alpha_asc))
    Bs = sp.expand(z**n * sp.conjugate(B.subs(z, 1 / sp.conjugate(z))))
    As = sp.expand(z**n * sp.conjugate(A.subs(z, 1 / sp.conjugate(z))))
    num = sp.expand(z * Bs * NE + A * DE)
    den = sp.expand(z * As * NE + B * DE)
    f = sp.cancel(num / den)
    fn, fd = sp.fraction(f)
    print("# k = n parameter: alpha ascending, beta ascending")
    emit("ALPHA3", alpha_asc)
    emit("BETA3", beta_asc)
    emit("F3_TAYLOR", series_coeffs(f, n + 2))
    print(f"F3_DEGREE = {max(sp.degree(fn, z), sp.degree(fd, z))}")


if __name__ == "__main__":
    main()
