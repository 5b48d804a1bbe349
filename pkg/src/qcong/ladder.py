"""The U-operator ladder ``L_alpha`` and the a_3 congruence family.

``L_0 = 1`` and ``L_{alpha+1}`` is ``U_5(Phi * L_alpha)`` for even alpha,
``U_5(L_alpha)`` for odd alpha, where
``Phi = q^5 f_25 f_50^2 / (f_1 f_2^2)``.  The even rungs carry the
progressions ``a_3(25^alpha n + gamma_alpha)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from qcong.errors import NonIntegralError, PrecisionError, VerificationError
from qcong.etaq import EtaQuotient
from qcong.partitions import PartitionTable, generating_series, progression_values
from qcong.qseries import EtaProductSpec, QSeries, atkin_u, congruent_zero, eta_product, f_series

__all__ = [
    "PHI",
    "LadderState",
    "FamilyReport",
    "phi_series",
    "apply_u",
    "build_L",
    "ladder",
    "gamma",
    "psi",
    "required_precision",
    "extract_progression",
    "odd_rung_form",
    "check_family",
]

PHI = EtaQuotient(50, {1: -1, 2: -2, 25: 1, 50: 2})


def gamma(alpha: int) -> int:
    """Offset of the alpha-th progression: ``20 + 19*25*(25^(alpha-1) - 1)/24``."""
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    num = 19 * 25 * (25 ** (alpha - 1) - 1)
    assert num % 24 == 0
    return 20 + num // 24


def psi(alpha: int) -> int:
    """Denominator exponent ``floor(5^(alpha+2)/24) + 1 - gcd(alpha, 2)``."""
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    return 5 ** (alpha + 2) // 24 + 1 - math.gcd(alpha, 2)


def phi_series(T: int) -> QSeries:
    """``Phi`` to ``O(q^T)``, built from the cached a_3 series."""
    if T < 6:
        raise ValueError("Phi needs T >= 6")
    body = generating_series(3, T - 5) * eta_product(EtaProductSpec.of({25: 1, 50: 2}), T - 5)
    return body.shift(5)


def apply_u(i: int, f: QSeries) -> QSeries:
    """``U^(0)(f) = U_5(Phi f)``, ``U^(1)(f) = U_5(f)``.

    ``Phi = q^5 H(q^25) A(q)`` with ``H = f_1 f_2^2`` and ``A = 1/H``, so
    ``U^(0)(f) = q H(q^5) U_5(A f)``; this never forms ``Phi`` at full length.
    """
    if i not in (0, 1):
        raise ValueError("i must be 0 or 1")
    if len(f) < 5:
        raise PrecisionError(
            f"U^({i}) needs at least 5 known terms of its input; got {len(f)} "
            f"(O(q^{f.trunc}) from q^{f.min_exp})"
        )
    if i == 1:
        return atkin_u(f, 5)
    if f.min_exp < 0:
        f = f.with_min_exp(min(0, f.valuation() or 0))
    n = f.trunc - min(f.min_exp, 0)
    inner = atkin_u((generating_series(3, n) * f).shift(5), 5)
    T = inner.trunc
    h5 = eta_product(EtaProductSpec.of({5: 1, 10: 2}), max(T - inner.min_exp, 1))
    return h5 * inner


@dataclass(frozen=True)
class LadderState:
    alpha: int
    series: QSeries
    precision: int

    def __post_init__(self):
        if self.alpha >= 1:
            v = self.series.valuation()
            if v is not None and v < 1:
                raise VerificationError(f"L_{self.alpha} has valuation {v} < 1")


def required_precision(alpha: int, T: int) -> int:
    """Input precision on ``L_0`` so that ``L_alpha`` is known to ``O(q^T)``."""
    return 5 ** alpha * T


def ladder(alpha: int, T: int) -> list[LadderState]:
    """``[L_0, ..., L_alpha]`` with ``L_alpha`` known at least to ``O(q^T)``."""
    if alpha < 0 or T < 1:
        raise ValueError("need alpha >= 0 and T >= 1")
    cur = QSeries.one(required_precision(alpha, T))
    out = [LadderState(0, cur, cur.trunc)]
    for a in range(alpha):
        cur = apply_u(0 if a % 2 == 0 else 1, cur)
        out.append(LadderState(a + 1, cur, cur.trunc))
    return out


def build_L(alpha: int, T: int) -> LadderState:
    return ladder(alpha, T)[-1]


def _progression_table(hi: int) -> PartitionTable:
    return PartitionTable.from_series(3, generating_series(3, hi + 1))


def extract_progression(state: LadderState, table: PartitionTable | None = None) -> QSeries:
    """``L_{2k} / (q f_1 f_2^2)``, checked against ``a_3(25^k n + gamma_k)``.

    Checks every coefficient the table covers; without a table the a_3
    values come from the generating series.
    """
    if state.alpha < 2 or state.alpha % 2:
        raise ValueError("extract_progression needs an even rung alpha >= 2")
    k = state.alpha // 2
    L = state.series
    n = L.trunc - 1
    a3 = generating_series(3, n)
    quotient = (L * a3).shift(-1).truncate(n)
    if not quotient.is_integral():
        raise NonIntegralError(f"L_{state.alpha}/(q f_1 f_2^2) has non-integral coefficients")
    m, t = 25 ** k, gamma(k)
    count = n if table is None else min(n, (len(table) - 1 - t) // m + 1)
    if table is None:
        table = _progression_table(m * (count - 1) + t)
    expected = progression_values(table, m, t, count)
    got = quotient.int_coeffs(0, count)
    if got != expected:
        bad = next(j for j in range(count) if got[j] != expected[j])
        raise VerificationError(
            f"L_{state.alpha}: coefficient of q^{bad} is {got[bad]}, expected a_3({m * bad + t}) = {expected[bad]}"
        )
    return quotient


def odd_rung_form(k: int, T: int) -> QSeries:
    """``q f_5 f_10^2 sum_{n>=1} a_3(5^(2k+1) n - 5^(2k) + gamma_k) q^n`` to ``O(q^T)``."""
    step, off = 5 ** (2 * k + 1), gamma(k) - 5 ** (2 * k)
    top = step * (T - 1) + off
    a3 = generating_series(3, top + 1).int_coeffs(0, top + 1)
    inner = QSeries(0, T, [0] + [a3[step * n + off] for n in range(1, T)])
    pref = (f_series(5, T) * f_series(10, T) ** 2).shift(1)
    return (pref * inner).truncate(T)


@dataclass(frozen=True)
class FamilyReport:
    alpha: int
    modulus: int
    n_max: int
    ok: bool
    first_failure: int | None

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha,
            "modulus": self.modulus,
            "n_max": self.n_max,
            "pass": self.ok,
            "first_failure": self.first_failure,
        }


def check_family(alpha: int, n_max: int, modulus: int | None = None) -> FamilyReport:
    """``a_3(25^alpha n + gamma_alpha) = 0 (mod 5^alpha)`` for ``0 <= n <= n_max``.

    ``modulus`` replaces ``5^alpha``, e.g. to probe that ``5^(alpha+1)`` fails.
    """
    modulus = 5 ** alpha if modulus is None else modulus
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    m, t = 25 ** alpha, gamma(alpha)
    top = m * n_max + t
    a3 = generating_series(3, top + 1).int_coeffs(0, top + 1)
    prog = QSeries(0, n_max + 1, a3[t::m])
    res = congruent_zero(prog, modulus, n_max)
    return FamilyReport(alpha, modulus, n_max, res.ok, res.first_failure)
