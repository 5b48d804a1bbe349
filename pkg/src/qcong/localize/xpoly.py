"""Rational polynomials in ``x`` with denominators ``(1+5x)^n``.

The reference functions are

    x = q f_2 f_10^3 / (f_1^3 f_5),    z = f_2^5 f_5 / (f_1^5 f_10) = 1 + 5x.

Since ``x = q + O(q^2)``, a series that equals a polynomial in ``x`` can be
read off greedily: the lowest surviving q-coefficient is the next x-coefficient.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping

from qcong.errors import PrecisionError, RepresentationError, VerificationError
from qcong.etaq import EtaQuotient, expand
from qcong.qseries import QSeries, _as_fraction, power

__all__ = [
    "X_ETA",
    "Z_ETA",
    "XPoly",
    "reference_series",
    "x_powers",
    "to_xpoly",
    "from_xpoly",
    "z_poly",
]

X_ETA = EtaQuotient(10, {1: -3, 2: 1, 5: -1, 10: 3})
Z_ETA = EtaQuotient(10, {1: -5, 2: 5, 5: 1, 10: -1})

Poly = dict[int, Fraction]


def _clean(p: Mapping[int, object]) -> Poly:
    out = {}
    for k, c in p.items():
        c = _as_fraction(c)
        if c:
            if k < 0:
                raise ValueError(f"negative x-exponent {k}")
            out[int(k)] = c
    return out


def padd(a: Poly, b: Poly, sign: int = 1) -> Poly:
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + sign * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def pmul(a: Poly, b: Poly) -> Poly:
    out: dict[int, Fraction] = {}
    for i, c in a.items():
        for j, d in b.items():
            out[i + j] = out.get(i + j, 0) + c * d
    return {k: v for k, v in out.items() if v}


def pscale(a: Poly, c) -> Poly:
    c = _as_fraction(c)
    return {k: v * c for k, v in a.items()} if c else {}


def z_poly(n: int) -> Poly:
    """``(1+5x)^n`` for ``n >= 0``."""
    return {k: Fraction(math.comb(n, k) * 5**k) for k in range(n + 1)}


def _divide_by_z(p: Poly, times: int) -> Poly | None:
    """``p / (1+5x)^times`` if exact, else ``None``."""
    if not p:
        return {}
    for _ in range(times):
        top = max(p)
        if top == 0:
            return None
        q = [Fraction(0)] * top
        prev = Fraction(0)
        for i in range(top):
            prev = p.get(i, 0) - 5 * prev
            q[i] = prev
        if p.get(top, 0) != 5 * q[top - 1]:
            return None
        p = {i: c for i, c in enumerate(q) if c}
    return p


class XPoly:
    """``(sum_m p_m x^m) / (1+5x)^denom_exp`` with exact rational ``p_m``."""

    __slots__ = ("denom_exp", "num")

    def __init__(self, denom_exp: int, num: Mapping[int, object] | None = None):
        if denom_exp < 0:
            raise ValueError("denom_exp must be nonnegative")
        self.denom_exp = int(denom_exp)
        self.num: Poly = _clean(num or {})

    @classmethod
    def poly(cls, num: Mapping[int, object]) -> "XPoly":
        return cls(0, num)

    @classmethod
    def from_coeffs(cls, denom_exp: int, coeffs: Iterable, start: int = 0) -> "XPoly":
        return cls(denom_exp, {start + i: c for i, c in enumerate(coeffs)})

    def degree(self) -> int | None:
        return max(self.num) if self.num else None

    def low(self) -> int | None:
        return min(self.num) if self.num else None

    def is_zero(self) -> bool:
        return not self.num

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.num.values())

    def coeff(self, m: int) -> Fraction:
        return self.num.get(m, Fraction(0))

    def coeff_list(self, start: int = 0, stop: int | None = None) -> list[Fraction]:
        stop = (self.degree() or 0) + 1 if stop is None else stop
        return [self.coeff(m) for m in range(start, stop)]

    def with_denom(self, n: int) -> "XPoly":
        """The same function over ``(1+5x)^n``; lowering ``n`` must divide exactly."""
        if n == self.denom_exp:
            return self
        if n > self.denom_exp:
            return XPoly(n, pmul(self.num, z_poly(n - self.denom_exp)))
        q = _divide_by_z(self.num, self.denom_exp - n)
        if q is None:
            raise RepresentationError(f"numerator is not divisible by (1+5x)^{self.denom_exp - n}")
        return XPoly(n, q)

    def reduced(self) -> "XPoly":
        """Cancel every common factor ``1+5x``."""
        cur = self
        while cur.denom_exp and cur.num:
            q = _divide_by_z(cur.num, 1)
            if q is None:
                break
            cur = XPoly(cur.denom_exp - 1, q)
        if not cur.num:
            return XPoly(0)
        return cur

    def _common(self, other: "XPoly"):
        n = max(self.denom_exp, other.denom_exp)
        return n, self.with_denom(n).num, other.with_denom(n).num

    def __add__(self, other: "XPoly") -> "XPoly":
        n, a, b = self._common(other)
        return XPoly(n, padd(a, b))

    def __sub__(self, other: "XPoly") -> "XPoly":
        n, a, b = self._common(other)
        return XPoly(n, padd(a, b, -1))

    def __neg__(self) -> "XPoly":
        return XPoly(self.denom_exp, pscale(self.num, -1))

    def __mul__(self, other) -> "XPoly":
        if isinstance(other, XPoly):
            return XPoly(self.denom_exp + other.denom_exp, pmul(self.num, other.num))
        return XPoly(self.denom_exp, pscale(self.num, other))

    __rmul__ = __mul__

    def times_poly(self, p: Mapping[int, object]) -> "XPoly":
        return XPoly(self.denom_exp, pmul(self.num, _clean(p)))

    def over_z(self, k: int) -> "XPoly":
        """Divide by ``(1+5x)^k`` (``k`` may be negative)."""
        if k >= 0:
            return XPoly(self.denom_exp + k, self.num)
        if self.denom_exp >= -k:
            return XPoly(self.denom_exp + k, self.num)
        return XPoly(0, pmul(self.num, z_poly(-k - self.denom_exp)))

    def same_function(self, other: "XPoly") -> bool:
        n, a, b = self._common(other)
        return a == b

    def __eq__(self, other) -> bool:
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.denom_exp == other.denom_exp and self.num == other.num

    __hash__ = None

    def to_json(self) -> dict:
        return {
            "denom_exp": self.denom_exp,
            "coeffs": [[m, f"{c.numerator}/{c.denominator}"] for m, c in sorted(self.num.items())],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "XPoly":
        return cls(int(obj["denom_exp"]), {int(m): Fraction(c) for m, c in obj["coeffs"]})

    def __repr__(self) -> str:
        terms = sorted(self.num.items())
        shown = " + ".join(f"{c}*x^{m}" for m, c in terms[:6])
        if len(terms) > 6:
            shown += " + ..."
        return f"XPoly(({shown or '0'}) / (1+5x)^{self.denom_exp})"


# -- reference series -------------------------------------------------------

_ref: dict[str, QSeries] = {}


def reference_series(T: int) -> tuple[QSeries, QSeries]:
    """``(x, z)`` to ``O(q^T)``; checks ``z = 1 + 5x`` on the way."""
    if T < 2:
        raise ValueError("need T >= 2")
    if "x" not in _ref or _ref["x"].trunc < T:
        x = expand(X_ETA, T)
        z = expand(Z_ETA, T)
        if not (z - 1 - 5 * x).is_zero():
            bad = (z - 1 - 5 * x).valuation()
            raise VerificationError(f"z - 1 - 5x has a nonzero coefficient at q^{bad}")
        _ref["x"], _ref["z"] = x, z
    return _ref["x"].truncate(T), _ref["z"].truncate(T)


_pow_cache: dict[str, object] = {"T": 0, "pows": []}


def x_powers(k_max: int, T: int) -> list[list[int]]:
    """Integer coefficient lists of ``x^0 .. x^k_max`` on ``[0, T)``."""
    if _pow_cache["T"] < T:
        _pow_cache["T"] = T
        _pow_cache["pows"] = []
    pows: list = _pow_cache["pows"]
    Tc = _pow_cache["T"]
    if len(pows) <= k_max:
        x, _ = reference_series(Tc)
        cur = QSeries.one(Tc) if not pows else None
        if pows:
            cur = QSeries(0, Tc, pows[-1])
        else:
            pows.append(cur.int_coeffs(0, Tc))
        while len(pows) <= k_max:
            cur = (cur * x).truncate(Tc)
            pows.append(cur.int_coeffs(0, Tc))
    return [p[:T] for p in pows[: k_max + 1]]


def _z_series(n: int, T: int) -> QSeries:
    _, z = reference_series(T)
    return power(z, n)


def to_xpoly(G: QSeries, denom_exp: int, deg_bound: int, margin: int = 25) -> XPoly:
    """Write ``G`` as ``P(x)/(1+5x)^denom_exp`` with ``deg P <= deg_bound``.

    The coefficients of ``q^(deg_bound+1) .. q^(deg_bound+margin)`` left after
    peeling must all vanish.
    """
    if margin < 1:
        raise ValueError("margin must be at least 1")
    W = deg_bound + margin + 1
    if G.trunc < W:
        raise PrecisionError(
            f"extraction to degree {deg_bound} with margin {margin} needs O(q^{W}), got O(q^{G.trunc})"
        )
    v = G.valuation()
    if v is not None and v < 0:
        raise RepresentationError(f"series has a pole q^{v} at infinity; not a polynomial in x")
    H = (G.truncate(W) * _z_series(denom_exp, W)).truncate(W)
    R = list(H.with_min_exp(0).numerators)
    den = H.den
    pows = x_powers(deg_bound, W)
    out: dict[int, Fraction] = {}
    for m in range(deg_bound + 1):
        c = R[m]
        if not c:
            continue
        out[m] = Fraction(c, den)
        xm = pows[m]
        for j in range(m, W):
            if xm[j]:
                R[j] -= c * xm[j]
    for j in range(deg_bound + 1, W):
        if R[j]:
            raise RepresentationError(
                f"not representable at degree bound {deg_bound} over (1+5x)^{denom_exp}: "
                f"residual {Fraction(R[j], den)}*q^{j}"
            )
    return XPoly(denom_exp, out)


def from_xpoly(p: XPoly, T: int) -> QSeries:
    """Expand ``p`` as a q-series to ``O(q^T)``."""
    if p.is_zero():
        return QSeries.zero(T)
    deg = p.degree()
    pows = x_powers(min(deg, T - 1), T)
    den = 1
    for c in p.num.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    acc = [0] * T
    for m, c in p.num.items():
        if m >= T:
            continue
        k = c.numerator * (den // c.denominator)
        for j, v in enumerate(pows[m]):
            if v:
                acc[j] += k * v
    num = QSeries(0, T, acc, den)
    return (num * _z_series(-p.denom_exp, T)).truncate(T) if p.denom_exp else num
