"""Valuation spaces for numerators over ``(1+5x)^n`` and the induction checks.

A numerator ``sum_{m>=1} p_m x^m`` lies in

* ``V0``  when ``5^theta_0(m) | p_m`` for all m,
* ``Vhat`` when ``5^theta_1(m) | p_m``,
* ``V1``  when it lies in ``Vhat`` and, with ``s(m) = p_m / 5^theta_1(m)``,
  ``s(1)+s(2)+s(3)+2s(4)+s(5)`` and ``4s(4)+s(6)+s(7)+s(8)`` vanish mod 5.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from qcong.errors import NonIntegralError, VerificationError
from qcong.etaq import Cusp, radu_lower_bound
from qcong.ladder import ladder, psi
from qcong.localize.harrays import degree_bound, pi, u_monomial_recur
from qcong.localize.xpoly import XPoly, to_xpoly

__all__ = [
    "theta",
    "v5",
    "MembershipReport",
    "v_membership",
    "v1_congruences",
    "LinearForm",
    "t_hat",
    "t_hat_all",
    "IdealReport",
    "ideal_membership",
    "in_five_times_ideal",
    "deficiency",
    "Main2Row",
    "ladder_degree_bound",
    "verify_main2",
]


def theta(i: int, m: int) -> int:
    if i == 0:
        return 0 if m <= 4 else (5 * m - 1) // 7 - 2
    if i == 1:
        return 0 if m <= 7 else (5 * m - 2) // 7 - 5
    raise ValueError("i must be 0 or 1")


def v5(c: Fraction) -> int | None:
    """5-adic valuation of a nonzero rational; ``None`` for zero."""
    if not c:
        return None
    c = Fraction(c)
    v = 0
    n, d = c.numerator, c.denominator
    while n % 5 == 0:
        n //= 5
        v += 1
    while d % 5 == 0:
        d //= 5
        v -= 1
    return v


def v1_congruences(s: Mapping[int, int]) -> tuple[int, int]:
    """The two linear forms defining ``V1``, reduced mod 5."""
    g = lambda k: s.get(k, 0)
    first = g(1) + g(2) + g(3) + 2 * g(4) + g(5)
    second = 4 * g(4) + g(6) + g(7) + g(8)
    return first % 5, second % 5


@dataclass
class MembershipReport:
    space: str
    n: int
    member: bool
    reason: str = ""
    rows: list = field(default_factory=list)
    congruences: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.member

    def s_values(self) -> dict[int, int]:
        return {row["m"]: row["s"] for row in self.rows if row["s"] is not None}

    def to_json(self) -> dict:
        return {
            "space": self.space,
            "n": self.n,
            "member": self.member,
            "reason": self.reason,
            "congruences_mod5": list(self.congruences) if self.congruences is not None else None,
            "rows": [
                {k: (str(v) if isinstance(v, Fraction) or (isinstance(v, int) and abs(v) > 2**53) else v)
                 for k, v in row.items()}
                for row in self.rows
            ],
        }


def v_membership(p: XPoly, space: int | str, n: int) -> MembershipReport:
    """Check ``p`` against ``V0`` (space 0), ``V1`` (space 1) or ``Vhat`` ("hat") at index ``n``."""
    if space not in (0, 1, "hat"):
        raise ValueError("space must be 0, 1 or 'hat'")
    name = {0: "V0", 1: "V1", "hat": "Vhat"}[space]
    i = 0 if space == 0 else 1
    rep = MembershipReport(name, n, True)
    try:
        p = p.with_denom(n)
    except Exception:
        rep.member = False
        rep.reason = f"denominator (1+5x)^{p.denom_exp} does not reduce to (1+5x)^{n}"
        return rep
    if p.coeff(0):
        rep.member = False
        rep.reason = "nonzero constant term"
    s: dict[int, int] = {}
    for m in sorted(k for k in p.num if k >= 1):
        c = p.num[m]
        th = theta(i, m)
        q = c / Fraction(5) ** th
        ok = q.denominator == 1
        rep.rows.append({"m": m, "coeff": c, "v5": v5(c), "theta": th, "s": q.numerator if ok else None})
        if ok:
            s[m] = q.numerator
        elif rep.member:
            rep.member = False
            rep.reason = f"5^{th} does not divide the x^{m} coefficient (valuation {v5(c)})"
    if space == 1:
        rep.congruences = v1_congruences(s)
        if rep.member and any(rep.congruences):
            rep.member = False
            rep.reason = f"linear congruences give {rep.congruences} mod 5"
    return rep


# -- t-hat forms and the ideal ---------------------------------------------


@dataclass(frozen=True)
class LinearForm:
    """``sum_k c_k s(k)`` over ``s(1)..s(8)`` with exact rational ``c_k``."""

    coeffs: tuple[Fraction, ...] = (Fraction(0),) * 8

    def __post_init__(self):
        if len(self.coeffs) != 8:
            raise ValueError("a linear form has exactly eight coefficients s(1)..s(8)")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def of(cls, mapping: Mapping[int, object]) -> "LinearForm":
        c = [Fraction(0)] * 8
        for k, v in mapping.items():
            if not 1 <= k <= 8:
                raise ValueError(f"s({k}) is outside s(1)..s(8)")
            c[k - 1] = Fraction(v)
        return cls(tuple(c))

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k - 1]

    def __add__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, k) -> "LinearForm":
        return LinearForm(tuple(a * k for a in self.coeffs))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_json(self) -> dict:
        return {f"s({k + 1})": str(c) for k, c in enumerate(self.coeffs)}


def deficiency(m: int, r: int, w: int) -> int:
    """Exponent of 5 carried by ``s(m) h_1(m,.,r) h_0(r,.,w)`` inside ``t(w)``."""
    return theta(1, m) + pi(1, m, r) + pi(0, r, w) - theta(1, w) - 1


def _h_from(i: int, m: int, r: int) -> int:
    p = u_monomial_recur(i, m, 0)
    c = p.coeff(r) / Fraction(5) ** pi(i, m, r)
    if c.denominator != 1:
        raise NonIntegralError(f"h_{i}({m}, 0, {r}) = {c}")
    return c.numerator


def t_hat(w: int, h1: Callable[[int, int], int] | None = None, h0: Callable[[int, int], int] | None = None) -> LinearForm:
    """The part of ``t(w)`` that can fail to be divisible by 5.

    ``h1(m, r)`` and ``h0(r, w)`` default to ``h_1(m, 0, r)`` and
    ``h_0(r, 0, w)`` from the recurrence.
    """
    if not 1 <= w <= 8:
        raise ValueError("w must be in 1..8")
    h1 = h1 or (lambda m, r: _h_from(1, m, r))
    h0 = h0 or (lambda r, ww: _h_from(0, r, ww))
    acc: dict[int, Fraction] = {}
    for r in range(1, 5 * w - 3):
        for m in range(1, 5 * r + 1):
            e = deficiency(m, r, w)
            if e >= 0:
                continue
            term = Fraction(h1(m, r) * h0(r, w)) * Fraction(5) ** e
            if term:
                if m > 8:
                    raise VerificationError(f"t_hat({w}) picks up s({m}) outside s(1)..s(8)")
                acc[m] = acc.get(m, 0) + term
    return LinearForm.of(acc)


def t_hat_all() -> dict[int, LinearForm]:
    return {w: t_hat(w) for w in range(1, 9)}


@dataclass(frozen=True)
class IdealReport:
    member: bool
    reduced: tuple[int, ...]
    in_five_times_ideal: bool

    def __bool__(self) -> bool:
        return self.member

    def to_json(self) -> dict:
        return {
            "member": self.member,
            "reduced_coeffs_s1_s2_s3_s4_s6_s7": [str(c) for c in self.reduced],
            "reduced_mod5": [c % 5 for c in self.reduced],
            "in_5_times_I_literal": self.in_five_times_ideal,
        }


def _int_coeffs(form: LinearForm) -> list[int]:
    out = []
    for k, c in enumerate(form.coeffs, 1):
        if c.denominator != 1:
            raise NonIntegralError(f"coefficient of s({k}) is {c}, not an integer")
        out.append(c.numerator)
    return out


def in_five_times_ideal(form: LinearForm) -> bool:
    """Whether the form equals ``5 (lam g1 + mu g2)`` for integers ``lam``, ``mu``."""
    c = _int_coeffs(form)
    if c[4] % 5 or c[7] % 5:
        return False
    lam, mu = c[4] // 5, c[7] // 5
    target = [5 * lam, 5 * lam, 5 * lam, 10 * lam + 20 * mu, 5 * lam, 5 * mu, 5 * mu, 5 * mu]
    return c == target


def ideal_membership(form: LinearForm) -> IdealReport:
    """Membership in ``<5, g1, g2>`` with ``g1 = s1+s2+s3+2s4+s5``, ``g2 = 4s4+s6+s7+s8``.

    ``s5`` and ``s8`` are eliminated through the generators; the form is a
    member exactly when what remains vanishes mod 5.
    """
    c1, c2, c3, c4, c5, c6, c7, c8 = _int_coeffs(form)
    reduced = (c1 - c5, c2 - c5, c3 - c5, c4 - 2 * c5 - 4 * c8, c6 - c8, c7 - c8)
    return IdealReport(all(r % 5 == 0 for r in reduced), reduced, in_five_times_ideal(form))


# -- the induction at desk scale ---------------------------------------------


def ladder_degree_bound(alpha: int) -> int:
    """Numerator degree bound for ``L_alpha`` over ``(1+5x)^psi(alpha)``.

    ``L_1`` has degree ``psi(1) + P`` where ``P`` is its pole order at the
    cusp 0 of level 10 (from the Radu bound).  After that each step maps
    ``x^m/(1+5x)^psi`` to numerators of degree :func:`degree_bound`.
    """
    from qcong.etaq import RaduInstance

    inst = RaduInstance(50, {1: -1, 2: -2, 25: 1, 50: 2}, 5, 0, 10)
    low = radu_lower_bound(inst, Cusp(0, 1, 10))
    pole = -(low.numerator // low.denominator)
    d = psi(1) + pole
    for a in range(1, alpha):
        d = degree_bound(0 if a % 2 == 0 else 1, d, psi(a))
    return d


@dataclass
class Main2Row:
    alpha: int
    psi: int
    divisor_exp: int
    degree: int | None
    integral: bool
    space: str
    membership: MembershipReport

    @property
    def ok(self) -> bool:
        return self.integral and self.membership.member

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha,
            "psi": self.psi,
            "divided_by": f"5^{self.divisor_exp}",
            "numerator_degree": self.degree,
            "integer_numerator": self.integral,
            "space": f"{self.space}_{self.psi}",
            "member": self.membership.member,
            "reason": self.membership.reason,
            "pass": self.ok,
        }


def verify_main2(alpha_max: int, margin: int = 25) -> list[Main2Row]:
    """For each ``alpha <= alpha_max``: ``(1+5x)^psi L_alpha / 5^floor(alpha/2)``
    has an integer numerator lying in ``V1`` (odd alpha) or ``V0`` (even alpha)."""
    if alpha_max < 1:
        raise ValueError("alpha_max must be >= 1")
    T = ladder_degree_bound(alpha_max) + margin + 1
    states = ladder(alpha_max, T)
    rows = []
    for a in range(1, alpha_max + 1):
        L = states[a].series
        k = a // 2
        p = to_xpoly(L, psi(a), ladder_degree_bound(a), margin) * Fraction(1, 5**k)
        space = 1 if a % 2 else 0
        mem = v_membership(p, space, psi(a))
        rows.append(Main2Row(a, psi(a), k, p.degree(), p.is_integral(), "V1" if space else "V0", mem))
    return rows
