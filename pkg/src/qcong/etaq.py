"""Eta-quotients on Gamma_0(N): cusps, modularity, orders, expansions.

An eta-quotient ``prod_{delta | N} eta(delta tau)^{r_delta}`` is stored as
its level and the exponent map.  Orders at cusps use Ligozat's formula;
:func:`radu_lower_bound` bounds the order of a U-operator image whose
expansion is only known implicitly.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from qcong.errors import NonIntegralError
from qcong.qseries import EtaProductSpec, QSeries, eta_product

__all__ = [
    "EtaQuotient",
    "Cusp",
    "RaduInstance",
    "NewmanReport",
    "divisors",
    "cusps_of",
    "cusps_equivalent",
    "cusp_width",
    "newman_check",
    "ligozat_order",
    "radu_lower_bound",
    "expand",
]


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


@dataclass(frozen=True)
class EtaQuotient:
    level: int
    exps: tuple[tuple[int, int], ...]

    def __init__(self, level: int, exps: Mapping[int, int]):
        clean = tuple(sorted((int(d), int(r)) for d, r in exps.items() if r))
        for d, _ in clean:
            if level % d:
                raise ValueError(f"{d} does not divide the level {level}")
        if not clean:
            raise ValueError("an eta-quotient needs at least one nonzero exponent")
        object.__setattr__(self, "level", int(level))
        object.__setattr__(self, "exps", clean)

    @property
    def r(self) -> dict[int, int]:
        return dict(self.exps)

    @classmethod
    def parse(cls, text: str) -> "EtaQuotient":
        """Parse ``"N: d1^r1 d2^r2 ..."``, e.g. ``"50: 1^-1 2^-2 25^1 50^2"``."""
        m = re.fullmatch(r"\s*(\d+)\s*:\s*(.*?)\s*", text)
        if not m:
            raise ValueError(f"cannot parse eta-quotient {text!r}")
        exps: dict[int, int] = {}
        for tok in m.group(2).split():
            dm = re.fullmatch(r"(\d+)\^(-?\d+)", tok)
            if not dm:
                raise ValueError(f"bad factor {tok!r} in {text!r}")
            d, r = int(dm.group(1)), int(dm.group(2))
            exps[d] = exps.get(d, 0) + r
        return cls(int(m.group(1)), exps)

    def __str__(self) -> str:
        return f"{self.level}: " + " ".join(f"{d}^{r}" for d, r in self.exps)

    def at_level(self, N: int) -> "EtaQuotient":
        if N % self.level:
            raise ValueError(f"{N} is not a multiple of {self.level}")
        return EtaQuotient(N, self.r)

    def rescale(self, k: int, N: int | None = None) -> "EtaQuotient":
        """The quotient evaluated at ``k tau`` (exponents move to ``k * delta``)."""
        N = self.level * k if N is None else N
        return EtaQuotient(N, {k * d: r for d, r in self.exps})

    def __mul__(self, other: "EtaQuotient") -> "EtaQuotient":
        N = math.lcm(self.level, other.level)
        r = self.r
        for d, e in other.exps:
            r[d] = r.get(d, 0) + e
        return EtaQuotient(N, r)

    def __pow__(self, k: int) -> "EtaQuotient":
        return EtaQuotient(self.level, {d: k * r for d, r in self.exps})

    def weight(self) -> Fraction:
        return Fraction(sum(r for _, r in self.exps), 2)

    def q_power(self) -> Fraction:
        """Exponent of the leading ``q`` factor, ``sum delta r_delta / 24``."""
        return Fraction(sum(d * r for d, r in self.exps), 24)


@dataclass(frozen=True, order=True)
class Cusp:
    """The Gamma_0(N)-class of ``a/c`` with ``c | N``; infinity is ``(1, N)``."""

    a: int
    c: int
    level: int = field(compare=False)

    def __post_init__(self):
        if self.c < 1 or self.level % self.c:
            raise ValueError(f"cusp denominator {self.c} must divide {self.level}")
        if math.gcd(self.a, self.c) != 1:
            raise ValueError(f"{self.a}/{self.c} is not in lowest terms")

    @property
    def is_infinity(self) -> bool:
        return self.c == self.level

    def label(self) -> str:
        if self.is_infinity:
            return "Infinity"
        if self.c == 1:
            return "0"
        return f"{self.a}/{self.c}"

    __str__ = label

    @classmethod
    def infinity(cls, N: int) -> "Cusp":
        return cls(1, N, N)

    @classmethod
    def parse(cls, text: str, N: int) -> "Cusp":
        """Accept ``"Infinity"``, ``"0"`` or ``"a/c"`` and return the canonical representative."""
        text = text.strip()
        if text.lower() in ("infinity", "inf", "oo", "∞"):
            return cls.infinity(N)
        if "/" in text:
            a, c = (int(t) for t in text.split("/"))
        else:
            a, c = int(text), 1
        for cusp in cusps_of(N):
            if cusps_equivalent((a, c), (cusp.a, cusp.c), N):
                return cusp
        raise ValueError(f"{text} is not a cusp of Gamma_0({N})")


def cusps_of(N: int) -> list[Cusp]:
    """One representative per cusp of Gamma_0(N).

    For each ``c | N`` the classes are units ``a mod gcd(c, N/c)``; each
    class is represented by its least positive member coprime to ``c``
    (``0/1`` for the cusp 0, ``1/N`` for infinity).
    """
    if N < 1:
        raise ValueError("level must be positive")
    out = []
    for c in divisors(N):
        if c == 1:
            out.append(Cusp(0, 1, N))
            continue
        if c == N:
            out.append(Cusp.infinity(N))
            continue
        g = math.gcd(c, N // c)
        for cls in range(g):
            if math.gcd(cls, g) != 1:
                continue
            a = cls if cls else g
            while math.gcd(a, c) != 1:
                a += g
            out.append(Cusp(a, c, N))
    if N == 1:
        out = [Cusp.infinity(1)]
    return out


def cusp_count(N: int) -> int:
    return sum(_totient(math.gcd(c, N // c)) for c in divisors(N))


def cusps_equivalent(p: tuple[int, int], q: tuple[int, int], N: int) -> bool:
    """Whether ``a/c`` and ``a'/c'`` (lowest terms) are Gamma_0(N)-equivalent.

    Standard criterion: there is ``y`` coprime to ``N`` with
    ``c' = y c (mod N)`` and ``y a' = a (mod gcd(c, N))``.
    """
    (a1, c1), (a2, c2) = p, q
    g = math.gcd(c1, N)
    if g != math.gcd(c2, N):
        return False
    for y in range(1, N + 1):
        if math.gcd(y, N) != 1:
            continue
        if (c2 - y * c1) % N == 0 and (y * a2 - a1) % g == 0:
            return True
    return N == 1


def cusp_width(cusp: Cusp) -> int:
    return cusp.level // math.gcd(cusp.c * cusp.c, cusp.level)


@dataclass(frozen=True)
class NewmanReport:
    exponent_sum_zero: bool
    weighted_sum_mod24: bool
    coweighted_sum_mod24: bool
    product_is_square: bool

    @property
    def ok(self) -> bool:
        return all(
            (self.exponent_sum_zero, self.weighted_sum_mod24, self.coweighted_sum_mod24, self.product_is_square)
        )

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {
            "sum_r": self.exponent_sum_zero,
            "sum_delta_r_mod24": self.weighted_sum_mod24,
            "sum_N_over_delta_r_mod24": self.coweighted_sum_mod24,
            "product_square": self.product_is_square,
            "pass": self.ok,
        }


def _is_rational_square(x: Fraction) -> bool:
    if x < 0:
        return False
    n, d = x.numerator, x.denominator
    return math.isqrt(n) ** 2 == n and math.isqrt(d) ** 2 == d


def newman_check(eq: EtaQuotient) -> NewmanReport:
    """Newman's sufficient conditions for a modular function on Gamma_0(N)."""
    N = eq.level
    prod = Fraction(1)
    for d, r in eq.exps:
        prod *= Fraction(d) ** r
    return NewmanReport(
        exponent_sum_zero=sum(r for _, r in eq.exps) == 0,
        weighted_sum_mod24=sum(d * r for d, r in eq.exps) % 24 == 0,
        coweighted_sum_mod24=sum((N // d) * r for d, r in eq.exps) % 24 == 0,
        product_is_square=_is_rational_square(prod),
    )


def ligozat_order(eq: EtaQuotient, cusp: Cusp) -> Fraction:
    """Order of vanishing at ``cusp`` in the local uniformizer (Ligozat)."""
    if cusp.level != eq.level:
        raise ValueError(f"cusp of level {cusp.level} used with an eta-quotient of level {eq.level}")
    N, c = eq.level, cusp.c
    g = math.gcd(c, N // c)
    total = sum(Fraction(math.gcd(c, d) ** 2 * r, g * c * d) for d, r in eq.exps)
    return Fraction(N, 24) * total


@dataclass(frozen=True)
class RaduInstance:
    """``g = prod eta(lambda tau)^s_lambda * sum b(mn + t) q^n`` with
    ``sum b(n) q^n = prod_{delta | M} f_delta^r_delta``."""

    M: int
    r: tuple[tuple[int, int], ...]
    m: int
    t: int
    N: int
    s: tuple[tuple[int, int], ...] = ()

    def __init__(self, M: int, r: Mapping[int, int], m: int, t: int, N: int, s: Mapping[int, int] | None = None):
        s = s or {}
        for d in r:
            if M % d:
                raise ValueError(f"{d} does not divide M = {M}")
        for lam in s:
            if N % lam:
                raise ValueError(f"{lam} does not divide N = {N}")
        if not 0 <= t < m:
            raise ValueError("need 0 <= t < m")
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "r", tuple(sorted(r.items())))
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "s", tuple(sorted(s.items())))


def radu_lower_bound(inst: RaduInstance, cusp: Cusp) -> Fraction:
    """Radu's lower bound for ``ord_{a/c}^N(g)``, as an exact rational.

    Orders are integers, so ``ceil`` of the result is the usable bound.
    """
    if cusp.level != inst.N:
        raise ValueError(f"cusp of level {cusp.level} used with N = {inst.N}")
    a, c, N, m = cusp.a, cusp.c, inst.N, inst.m
    kappa = math.gcd(m * m - 1, 24)
    best = None
    for ell in range(m):
        u = a + ell * c * kappa
        val = sum(Fraction(r * math.gcd(d * u, m * c) ** 2, d * m) for d, r in inst.r)
        if best is None or val < best:
            best = val
    eta_part = sum(Fraction(sv * math.gcd(lam, c) ** 2, lam) for lam, sv in inst.s)
    return Fraction(N, 24 * math.gcd(c * c, N)) * (best + eta_part)


def expand(eq: EtaQuotient, T: int) -> QSeries:
    """``q^(sum delta r / 24) prod f_delta^r_delta`` to ``O(q^T)``."""
    lead = eq.q_power()
    if lead.denominator != 1:
        raise NonIntegralError(f"non-integral q-power: leading exponent {lead} for {eq}")
    v = int(lead)
    body = eta_product(EtaProductSpec.of(eq.r), max(T - v, 1))
    return body.shift(v).truncate(T) if T > v else body.shift(v)
