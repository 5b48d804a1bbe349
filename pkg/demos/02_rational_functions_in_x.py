"""
Writing ladder terms as polynomials in x over powers of 1 + 5x
==============================================================

"""

from qcong.ladder import build_L
from qcong.localize.xpoly import from_xpoly, reference_series, to_xpoly

# x and z are eta quotients of level 10 with z = 1 + 5x
x, z = reference_series(100)
print("x =", x.truncate(6))
print("z - 1 - 5x is zero:", (z - 1 - 5 * x).is_zero())

# L_1 has a degree 9 numerator over (1 + 5x)^5
L1 = to_xpoly(build_L(1, 60).series, 5, 9, margin=25)
print("numerator:", {m: int(c) for m, c in sorted(L1.num.items())})

# expanding it back agrees with the ladder far past the fitting window
print("agrees to q^150:", from_xpoly(L1, 150) == build_L(1, 150).series.truncate(150))

# the same representation for U applied to x^m / z^n
from qcong.localize import harrays as H
p = H.u_monomial_recur(0, 3, 2)
print("U0(x^3 / z^2): denominator exponent", p.denom_exp, "degree", p.degree())
