"""``U^(i)(x^m / (1+5x)^n)`` as rational polynomials in ``x``, and the h-arrays.

Two independent routes:

* :func:`u_monomial_direct` expands the q-series, applies the operator and
  reads the answer back with :func:`to_xpoly`;
* :func:`u_monomial_recur` starts from the five direct values
  ``U^(i)(x^k)``, ``0 <= k <= 4``, and reaches every other ``(m, n)``
  through the modular equations.

The normalized form has denominator ``(1+5x)^(5n+5)`` for ``i = 0`` and
``(1+5x)^(5n)`` for ``i = 1``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from qcong.errors import NonIntegralError, VerificationError
from qcong.ladder import apply_u
from qcong.localize.modeq import MODEQ
from qcong.localize.xpoly import XPoly, padd, pmul, pscale, reference_series, to_xpoly, z_poly
from qcong.qseries import QSeries, power

__all__ = [
    "denom_exp",
    "degree_bound",
    "support_floor",
    "pi",
    "u_monomial_direct",
    "u_monomial_recur",
    "u_z_power",
    "HTable",
    "h_table",
    "h_value",
]


def denom_exp(i: int, n: int) -> int:
    return 5 * n + 5 if i == 0 else 5 * n


def degree_bound(i: int, m: int, n: int) -> int:
    """Numerator degree of ``U^(i)(x^m/(1+5x)^n)`` in normalized form.

    ``max(5m + 9, 5n + 5)`` for ``i = 0`` and ``max(5m, 5n)`` for ``i = 1``;
    extraction re-checks it through the residual margin.
    """
    if i == 0:
        return max(5 * m + 9, 5 * n + 5)
    return max(5 * m, 5 * n)


def support_floor(i: int, m: int) -> int:
    """Least ``r`` that may carry a nonzero numerator coefficient."""
    return -(-(m + 4) // 5) if i == 0 else -(-m // 5)


def pi(i: int, m: int, r: int) -> int:
    if i == 0:
        return max(0, (5 * r - m + 2) // 7 - 5)
    if i == 1:
        return (5 * r - m) // 7
    raise ValueError("i must be 0 or 1")


def _check_i(i: int) -> None:
    if i not in (0, 1):
        raise ValueError("i must be 0 or 1")


def u_monomial_direct(i: int, m: int, n: int, margin: int = 25, denom: int | None = None) -> XPoly:
    """``U^(i)(x^m/(1+5x)^n)`` from q-expansions.

    ``denom`` overrides the denominator exponent used for extraction.
    """
    _check_i(i)
    if m < 0 or n < 0:
        raise ValueError("need m, n >= 0")
    D = degree_bound(i, m, n)
    if denom is not None:
        D += max(0, denom - denom_exp(i, n))
    W = 5 * (D + margin + 1)
    x, z = reference_series(W)
    f = power(x, m).truncate(W) if m else QSeries.one(W)
    if n:
        f = (f * power(z, -n)).truncate(W)
    g = apply_u(i, f)
    return to_xpoly(g, denom_exp(i, n) if denom is None else denom, D, margin)


# -- recurrence route -------------------------------------------------------

_A_POLYS = tuple(MODEQ.a_poly(j) for j in range(5))


def _in_x(bpoly: dict[int, Fraction]) -> dict[int, Fraction]:
    """A polynomial in ``z`` rewritten in ``x`` through ``z = 1 + 5x``."""
    out: dict[int, Fraction] = {}
    for e, c in bpoly.items():
        out = padd(out, pscale(z_poly(e), c))
    return out


_B_POLYS = tuple(_in_x(MODEQ.b_poly(k)) for k in range(6))


@lru_cache(maxsize=None)
def _base_x(i: int, k: int) -> XPoly:
    return u_monomial_direct(i, k, 0)


@lru_cache(maxsize=None)
def u_z_power(i: int, p: int) -> XPoly:
    """``U^(i)(z^p)``: binomial expansion for ``p >= 0``, the z-equation below."""
    _check_i(i)
    if p >= 0:
        acc = XPoly(denom_exp(i, 0))
        for r in range(p + 1):
            acc = acc + _u_x_only(i, r) * (math.comb(p, r) * 5**r)
        return acc
    acc = XPoly(0)
    for k in range(1, 6):
        acc = acc + u_z_power(i, p + k).times_poly(_B_POLYS[k])
    return acc.over_z(5)


@lru_cache(maxsize=None)
def _u_x_only(i: int, m: int) -> XPoly:
    """``U^(i)(x^m)`` from the five base values and the x-equation."""
    if m < 5:
        return _base_x(i, m)
    acc = XPoly(0)
    for j in range(5):
        acc = acc - _u_x_only(i, m - 5 + j).times_poly(_A_POLYS[j])
    return acc


@lru_cache(maxsize=None)
def _recur(i: int, m: int, n: int) -> XPoly:
    if m >= 5 and n >= 5:
        # both indices high: the combined two-equation step
        acc = XPoly(0)
        for j in range(5):
            for k in range(1, 6):
                term = _recur(i, m - 5 + j, n - k).times_poly(pmul(_A_POLYS[j], _B_POLYS[k]))
                acc = acc - term
        return acc.over_z(5)
    if m >= 5:
        acc = XPoly(0)
        for j in range(5):
            acc = acc - _recur(i, m - 5 + j, n).times_poly(_A_POLYS[j])
        return acc
    if n >= 5:
        acc = XPoly(0)
        for k in range(1, 6):
            acc = acc + _recur(i, m, n - k).times_poly(_B_POLYS[k])
        return acc.over_z(5)
    # 0 <= m, n <= 4: x^m / z^n = 5^-m (z - 1)^m z^-n
    acc = XPoly(0)
    for r in range(m + 1):
        acc = acc + u_z_power(i, r - n) * ((-1) ** (m - r) * math.comb(m, r))
    return (acc * Fraction(1, 5**m)).with_denom(denom_exp(i, n))


def u_monomial_recur(i: int, m: int, n: int) -> XPoly:
    _check_i(i)
    if m < 0 or n < 0:
        raise ValueError("need m, n >= 0")
    return _recur(i, m, n).with_denom(denom_exp(i, n))


# -- h arrays ---------------------------------------------------------------


def h_value(i: int, m: int, r: int, p: XPoly) -> int:
    c = p.coeff(r) / Fraction(5) ** pi(i, m, r)
    if c.denominator != 1:
        raise NonIntegralError(f"h_{i}(m={m}, r={r}) = {c} is not an integer")
    return c.numerator


@dataclass(frozen=True)
class HTable:
    i: int
    entries: dict

    def __getitem__(self, key: tuple[int, int, int]) -> int:
        return self.entries.get(key, 0)

    def support(self, m: int, n: int) -> list[int]:
        return sorted(r for (mm, nn, r) in self.entries if mm == m and nn == n)

    def cells(self) -> Iterator[tuple[int, int]]:
        return iter(sorted({(m, n) for (m, n, _) in self.entries}))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "m", "n", "r", "h"])
        for (m, n, r), h in sorted(self.entries.items()):
            w.writerow([self.i, m, n, r, h])
        return buf.getvalue()


def h_table(i: int, m_max: int, n_max: int, m_min: int = 0, n_min: int = 0) -> HTable:
    """All ``h_i(m, n, r)`` for ``m_min <= m <= m_max``, ``n_min <= n <= n_max``.

    Raises if an entry is not an integer or sits below the support floor.
    """
    _check_i(i)
    entries = {}
    for m in range(m_min, m_max + 1):
        lo = support_floor(i, m)
        for n in range(n_min, n_max + 1):
            p = u_monomial_recur(i, m, n)
            for r in p.num:
                if r < lo:
                    raise VerificationError(f"U^({i})(x^{m}/z^{n}) has an x^{r} term below r = {lo}")
                entries[(m, n, r)] = h_value(i, m, r, p)
    return HTable(i, entries)
