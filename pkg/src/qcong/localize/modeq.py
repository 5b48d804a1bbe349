"""Degree-5 modular equations for ``x`` and ``z`` over ``x(5 tau)``, ``z(5 tau)``.

    x^5 + sum_{j<5} a_j(x(5 tau)) x^j = 0,    z^5 + sum_{k<5} b_k(z(5 tau)) z^k = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from qcong.localize.xpoly import reference_series
from qcong.qseries import QSeries, substitute_power

__all__ = ["ModEqTables", "MODEQ", "modeq_residual", "fit_b3_z2", "ModEqReport", "check_modeqs"]

# coefficient lists, lowest degree first
_A = (
    (0, -1, -20, -150, -500, -625),
    (0, -15, -305, -2325, -7875, -10000),
    (0, -85, -1750, -13525, -46500, -60000),
    (0, -215, -4475, -35000, -122000, -160000),
    (0, -205, -4300, -34000, -120000, -160000),
)
_B = (
    (0, 0, 0, 0, 0, -1),
    (1, 5, 5, 5, 5, -16),
    (-4, -15, 10, 35, 60, -96),
    (6, 15, -35, 40, 240, -256),
    (-4, -5, 20, -80, 320, -256),
    (1,),
)
# b_3 with the printed "-35^2" taken as a constant -1225 and no z^2 term
_B3_LITERAL = (6 - 1225, 15, 0, 40, 240, -256)


@dataclass(frozen=True)
class ModEqTables:
    """``a_j`` as polynomials in ``x`` (j = 0..4) and ``b_k`` in ``z`` (k = 0..5)."""

    a: tuple[tuple[int, ...], ...] = _A
    b: tuple[tuple[int, ...], ...] = _B

    def __post_init__(self):
        if len(self.a) != 5 or len(self.b) != 6:
            raise ValueError("need five a_j and six b_k")
        if tuple(self.b[5]) != (1,):
            raise ValueError("b_5 must be 1")
        if tuple(self.b[0]) != (0, 0, 0, 0, 0, -1):
            raise ValueError("b_0 must be -z^5")

    def a_poly(self, j: int) -> dict[int, Fraction]:
        return {e: Fraction(c) for e, c in enumerate(self.a[j]) if c}

    def b_poly(self, k: int) -> dict[int, Fraction]:
        return {e: Fraction(c) for e, c in enumerate(self.b[k]) if c}

    def with_b3(self, coeffs: tuple[int, ...]) -> "ModEqTables":
        b = list(self.b)
        b[3] = tuple(coeffs)
        return replace(self, b=tuple(b))


MODEQ = ModEqTables()


def _eval(poly: tuple[int, ...], s: QSeries, T: int) -> QSeries:
    acc = QSeries.zero(T)
    pw = QSeries.one(T)
    for c in poly:
        if c:
            acc = acc + pw * c
        pw = (pw * s).truncate(T)
    return acc


def modeq_residual(which: str, T: int, tables: ModEqTables = MODEQ) -> QSeries:
    """Left side of the ``x`` or ``z`` modular equation to ``O(q^T)``."""
    if which not in ("x", "z"):
        raise ValueError("which must be 'x' or 'z'")
    if T < 1:
        raise ValueError("T must be positive")
    x, z = reference_series(T)
    base = x if which == "x" else z
    polys = tables.a if which == "x" else tables.b[:5]
    inner = substitute_power(base.truncate(-(-T // 5)), 5).truncate(T)
    acc = QSeries.zero(T)
    pw = QSeries.one(T)
    for poly in polys:
        acc = acc + (_eval(poly, inner, T) * pw).truncate(T)
        pw = (pw * base).truncate(T)
    return acc + pw


def fit_b3_z2(T: int, tables: ModEqTables = MODEQ) -> tuple[Fraction, QSeries]:
    """Solve for the ``z^2`` coefficient of ``b_3``; return it and the fitted residual.

    The residual is affine in that coefficient ``c``: ``R0 + c * z(5 tau)^2 z^3``.
    """
    b3 = list(tables.b[3])
    b3[2] = 0
    R0 = modeq_residual("z", T, tables.with_b3(tuple(b3)))
    x, z = reference_series(T)
    z5 = substitute_power(z.truncate(-(-T // 5)), 5).truncate(T)
    S = (z5 * z5 * z * z * z).truncate(T)
    v = S.valuation()
    c = -R0[v] / S[v]
    return c, R0 + S * c


@dataclass(frozen=True)
class ModEqReport:
    T: int
    x_residual_zero: bool
    z_residual_zero: bool
    fitted_b3_z2: Fraction
    literal_b3_residual_zero: bool
    literal_first_nonzero: int | None = field(default=None)

    @property
    def ok(self) -> bool:
        return self.x_residual_zero and self.z_residual_zero and self.fitted_b3_z2 == -35

    def to_json(self) -> dict:
        return {
            "T": self.T,
            "x_equation_zero": self.x_residual_zero,
            "z_equation_zero": self.z_residual_zero,
            "b3_z2_fitted": str(self.fitted_b3_z2),
            "b3_literal_constant_-1225_zero": self.literal_b3_residual_zero,
            "b3_literal_first_nonzero_q": self.literal_first_nonzero,
            "pass": self.ok,
        }


def check_modeqs(T: int = 1000) -> ModEqReport:
    xr = modeq_residual("x", T)
    zr = modeq_residual("z", T)
    c, fitted = fit_b3_z2(T)
    lit = modeq_residual("z", T, MODEQ.with_b3(_B3_LITERAL))
    return ModEqReport(T, xr.is_zero(), zr.is_zero() and fitted.is_zero(), c, lit.is_zero(), lit.valuation())
