"""Truncated Laurent series in q with exact rational coefficients.

A :class:`QSeries` knows its coefficients exactly on the window
``[min_exp, trunc)`` and nothing at or beyond ``trunc``.  Internally the
coefficients are integer numerators over one shared positive
denominator, which keeps the common all-integer case fast.

Precision propagates conservatively:

* ``a + b`` is known on ``[min(a.min_exp, b.min_exp), min(a.trunc, b.trunc))``
* ``a * b`` is known up to ``min(a.trunc + b.min_exp, b.trunc + a.min_exp)``
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from qcong._convolve import mul_trunc
from qcong.errors import NonIntegralError, NotInvertibleError, PrecisionError

__all__ = [
    "QSeries",
    "EtaProductSpec",
    "CongruenceResult",
    "arith",
    "invert",
    "power",
    "substitute_power",
    "atkin_u",
    "f_series",
    "eta_product",
    "congruent_zero",
]


def _normalize(nums: list[int], den: int) -> tuple[list[int], int]:
    if den < 0:
        nums = [-c for c in nums]
        den = -den
    if den != 1:
        g = math.gcd(den, *nums) if nums else den
        if g > 1:
            nums = [c // g for c in nums]
            den //= g
    return nums, den


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, Rational):
        return Fraction(c.numerator, c.denominator)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"exact rational coefficient required, got {type(c).__name__}")


class QSeries:
    """Exact truncated Laurent series ``sum c_n q^n + O(q^trunc)``."""

    __slots__ = ("min_exp", "trunc", "_num", "_den")

    def __init__(self, min_exp: int, trunc: int, nums: Sequence[int] = (), den: int = 1):
        if trunc <= min_exp:
            raise PrecisionError(
                f"zero-length series: trunc {trunc} must exceed min_exp {min_exp}"
            )
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        length = trunc - min_exp
        nums = list(nums[:length])
        if len(nums) < length:
            nums.extend([0] * (length - len(nums)))
        nums, den = _normalize(nums, den)
        self.min_exp = min_exp
        self.trunc = trunc
        self._num = tuple(nums)
        self._den = den

    @classmethod
    def _raw(cls, min_exp: int, trunc: int, nums: tuple[int, ...], den: int) -> "QSeries":
        # trusted fast path: nums already has the right length and is reduced
        obj = object.__new__(cls)
        obj.min_exp = min_exp
        obj.trunc = trunc
        obj._num = nums
        obj._den = den
        return obj

    # -- construction -----------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, min_exp: int = 0, trunc: int | None = None) -> "QSeries":
        """Build from consecutive coefficients starting at ``q^min_exp``."""
        fr = [_as_fraction(c) for c in coeffs]
        if trunc is None:
            trunc = min_exp + len(fr)
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [c.numerator * (den // c.denominator) for c in fr]
        return cls(min_exp, trunc, nums, den)

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, object], trunc: int, min_exp: int | None = None) -> "QSeries":
        if min_exp is None:
            min_exp = min(coeffs, default=0)
            min_exp = min(min_exp, trunc - 1)
        dense = [0] * (trunc - min_exp)
        for e, c in coeffs.items():
            if not min_exp <= e < trunc:
                raise PrecisionError(f"exponent {e} outside window [{min_exp}, {trunc})")
            dense[e - min_exp] = c
        return cls.from_coeffs(dense, min_exp, trunc)

    @classmethod
    def one(cls, trunc: int) -> "QSeries":
        return cls.monomial(0, trunc)

    @classmethod
    def zero(cls, trunc: int, min_exp: int = 0) -> "QSeries":
        return cls(min_exp, trunc)

    @classmethod
    def monomial(cls, k: int, trunc: int, c=1) -> "QSeries":
        """``c * q^k + O(q^trunc)``."""
        c = _as_fraction(c)
        nums = [0] * (trunc - k)
        nums[0] = c.numerator
        return cls(k, trunc, nums, c.denominator)

    @classmethod
    def polynomial(cls, coeffs: Sequence, trunc: int) -> "QSeries":
        """A polynomial ``sum coeffs[i] q^i`` viewed as a series to ``O(q^trunc)``."""
        fr = list(coeffs[:trunc]) + [0] * max(0, trunc - len(coeffs))
        return cls.from_coeffs(fr, 0, trunc)

    # -- accessors ----------------------------------------------------------

    @property
    def den(self) -> int:
        return self._den

    @property
    def numerators(self) -> tuple[int, ...]:
        """Integer numerators on ``[min_exp, trunc)``, over :attr:`den`."""
        return self._num

    def __len__(self) -> int:
        return self.trunc - self.min_exp

    def __getitem__(self, n: int) -> Fraction:
        if n >= self.trunc:
            raise PrecisionError(f"coefficient of q^{n} unknown (series is O(q^{self.trunc}))")
        if n < self.min_exp:
            return Fraction(0)
        return Fraction(self._num[n - self.min_exp], self._den)

    def coeffs(self) -> dict[int, Fraction]:
        """Nonzero coefficients as ``{exponent: Fraction}``."""
        d = self._den
        return {
            self.min_exp + i: Fraction(c, d) for i, c in enumerate(self._num) if c
        }

    def valuation(self) -> int | None:
        """Least exponent with a nonzero coefficient; ``None`` for the zero series."""
        for i, c in enumerate(self._num):
            if c:
                return self.min_exp + i
        return None

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_integral(self) -> bool:
        return self._den == 1

    def int_coeffs(self, start: int | None = None, stop: int | None = None) -> list[int]:
        """Integer coefficients on ``[start, stop)``; raises if any is fractional."""
        start = self.min_exp if start is None else start
        stop = self.trunc if stop is None else stop
        if stop > self.trunc:
            raise PrecisionError(f"need q^{stop - 1}, series is O(q^{self.trunc})")
        pad = max(0, self.min_exp - start)
        lo = max(start, self.min_exp) - self.min_exp
        vals = [0] * pad + list(self._num[lo:stop - self.min_exp])
        if self._den != 1:
            if any(c % self._den for c in vals):
                raise NonIntegralError("non-integral series on requested window")
            vals = [c // self._den for c in vals]
        return vals

    # -- reshaping --------------------------------------------------------

    def truncate(self, trunc: int) -> "QSeries":
        if trunc > self.trunc:
            raise PrecisionError(f"cannot extend O(q^{self.trunc}) to O(q^{trunc})")
        if trunc == self.trunc:
            return self
        return QSeries(self.min_exp, trunc, self._num[: trunc - self.min_exp], self._den)

    def shift(self, k: int) -> "QSeries":
        """Multiply by ``q^k`` (exact, precision moves with the series)."""
        return QSeries._raw(self.min_exp + k, self.trunc + k, self._num, self._den)

    def with_min_exp(self, min_exp: int) -> "QSeries":
        """Same series, stored from ``min_exp`` (which may only drop known zeros)."""
        if min_exp <= self.min_exp:
            pad = (0,) * (self.min_exp - min_exp)
            return QSeries._raw(min_exp, self.trunc, pad + self._num, self._den)
        v = self.valuation()
        if v is not None and v < min_exp:
            raise ValueError(f"nonzero coefficient at q^{v} below requested min_exp {min_exp}")
        if min_exp >= self.trunc:
            raise PrecisionError("zero-length series")
        return QSeries._raw(min_exp, self.trunc, self._num[min_exp - self.min_exp:], self._den)

    # -- arithmetic -------------------------------------------------------

    def _aligned(self, other: "QSeries"):
        lo = min(self.min_exp, other.min_exp)
        hi = min(self.trunc, other.trunc)
        if hi <= lo:
            raise PrecisionError("zero-length series: windows do not overlap")
        den = self._den * other._den // math.gcd(self._den, other._den)

        def spread(s: "QSeries") -> list[int]:
            k = den // s._den
            body = s._num[: max(0, hi - s.min_exp)]
            if k != 1:
                body = [c * k for c in body]
            out = [0] * (s.min_exp - lo) + list(body)
            return out + [0] * (hi - lo - len(out))

        return lo, hi, spread(self), spread(other), den

    def __add__(self, other):
        if not isinstance(other, QSeries):
            try:
                c = _as_fraction(other)
            except TypeError:
                return NotImplemented
            if self.trunc <= 0:
                return self
            other = QSeries.monomial(0, self.trunc, c)
        lo, hi, a, b, den = self._aligned(other)
        return QSeries(lo, hi, [x + y for x, y in zip(a, b)], den)

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries._raw(self.min_exp, self.trunc, tuple(-c for c in self._num), self._den)

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            return self + (-_as_fraction(other))
        lo, hi, a, b, den = self._aligned(other)
        return QSeries(lo, hi, [x - y for x, y in zip(a, b)], den)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "QSeries":
        c = _as_fraction(c)
        if c == 1:
            return self
        return QSeries(self.min_exp, self.trunc, [x * c.numerator for x in self._num], self._den * c.denominator)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return _mul(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return _mul(self, invert(other))
        c = _as_fraction(other)
        if c == 0:
            raise ZeroDivisionError("division of a series by zero")
        return self.scale(1 / c)

    def __pow__(self, k: int) -> "QSeries":
        return power(self, k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        if self.trunc != other.trunc or self._den != other._den:
            return False
        lo = min(self.min_exp, other.min_exp)
        a = self.with_min_exp(lo)._num
        b = other.with_min_exp(lo)._num
        return a == b

    __hash__ = None

    def agrees_with(self, other: "QSeries") -> bool:
        """Equality on the common window of known coefficients."""
        return (self - other).is_zero()

    # -- q-operators ------------------------------------------------------

    def substitute_power(self, d: int) -> "QSeries":
        return substitute_power(self, d)

    def atkin_u(self, d: int) -> "QSeries":
        return atkin_u(self, d)

    def invert(self) -> "QSeries":
        return invert(self)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        d = self._den
        return {
            "min_exp": self.min_exp,
            "trunc": self.trunc,
            "coeffs": [
                [self.min_exp + i, f"{c // math.gcd(c, d)}/{d // math.gcd(c, d)}"]
                for i, c in enumerate(self._num)
                if c
            ],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "QSeries":
        coeffs = {int(e): Fraction(c) for e, c in obj["coeffs"]}
        return cls.from_dict(coeffs, int(obj["trunc"]), int(obj["min_exp"]))

    def __repr__(self) -> str:
        parts = []
        for i, c in enumerate(self._num):
            if not c:
                continue
            if len(parts) == 8:
                parts.append(" + ...")
                break
            e = self.min_exp + i
            coef = Fraction(c, self._den)
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            mag = abs(coef)
            body = mono if (mono and mag == 1) else (f"{mag}*{mono}" if mono else f"{mag}")
            if parts:
                parts.append((" - " if coef < 0 else " + ") + body)
            else:
                parts.append(("-" if coef < 0 else "") + body)
        body = "".join(parts) if parts else "0"
        return f"QSeries({body} + O(q^{self.trunc}))"


def _mul(a: QSeries, b: QSeries) -> QSeries:
    lo = a.min_exp + b.min_exp
    hi = min(a.trunc + b.min_exp, b.trunc + a.min_exp)
    n = hi - lo
    if a is b:
        nums = mul_trunc(a._num, a._num, n)
    else:
        nums = mul_trunc(a._num, b._num, n)
    return QSeries(lo, hi, nums, a._den * b._den)


def arith(a: QSeries, b, kind: str) -> QSeries:
    """Dispatch ``add | sub | mul | scale``; ``scale`` takes a constant ``b``."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return _mul(a, b)
    if kind == "scale":
        if isinstance(b, QSeries):
            v = b.valuation()
            if v not in (0, None) or any(b._num[i] for i in range(len(b._num)) if b.min_exp + i != 0):
                raise ValueError("scale needs a constant series")
            b = b[0]
        return a.scale(b)
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def _inverse_unit(u: Sequence[int], n: int) -> list[int]:
    """First ``n`` coefficients of ``1/u`` for an integer series with ``u[0] == 1``."""
    u = list(u[:n])
    nz = [(k, c) for k, c in enumerate(u) if c and k]
    if len(nz) * n <= 2_000_000 or n <= 256:
        g = [0] * n
        g[0] = 1
        for m in range(1, n):
            acc = 0
            for k, c in nz:
                if k > m:
                    break
                acc -= c * g[m - k]
            g[m] = acc
        return g
    # Newton: g <- g - g*(u*g - 1), doubling the known length each round
    g = _inverse_unit(u, 256)
    k = 256
    while k < n:
        m = min(2 * k, n)
        t = mul_trunc(u[:m], g, m)
        corr = mul_trunc(g, t[k:], m - k)
        g.extend(-c for c in corr)
        k = m
    return g


def invert(a: QSeries) -> QSeries:
    """Multiplicative inverse; ``min_exp`` of the result is ``-valuation(a)``."""
    v = a.valuation()
    if v is None:
        raise NotInvertibleError("non-invertible series: all known coefficients vanish")
    u = list(a._num[v - a.min_exp:])
    n = len(u)
    lead = u[0]
    sign = 1
    if lead < 0:
        u = [-c for c in u]
        lead = -lead
        sign = -1
    if lead == 1:
        nums = _inverse_unit(u, n)
        den = 1
    else:
        # u(lead*q)/lead has unit constant term and integer coefficients
        w = [1] + [c * lead ** (k - 1) for k, c in enumerate(u) if k][: n - 1]
        g = _inverse_unit(w, n)
        nums = [g[k] * lead ** (n - 1 - k) for k in range(n)]
        den = lead ** n
    nums = [sign * c * a._den for c in nums]
    return QSeries(-v, n - v, nums, den)


def power(a: QSeries, k: int) -> QSeries:
    """``a**k`` by binary powering (negative ``k`` inverts first)."""
    if k < 0:
        return power(invert(a), -k)
    m0 = a.min_exp
    base = a.shift(-m0)
    if k == 0:
        return QSeries.one(base.trunc)
    result = None
    e = k
    while e:
        if e & 1:
            result = base if result is None else _mul(result, base)
        e >>= 1
        if e:
            base = _mul(base, base)
    return result.shift(k * m0)


def substitute_power(a: QSeries, d: int) -> QSeries:
    """``a(q) -> a(q^d)``; the window scales to ``[d*min_exp, d*trunc)``."""
    if d < 1:
        raise ValueError("substitution power must be positive")
    if d == 1:
        return a
    nums = [0] * (d * len(a))
    nums[::d] = a._num
    return QSeries._raw(d * a.min_exp, d * a.trunc, tuple(nums), a._den)


def atkin_u(a: QSeries, d: int) -> QSeries:
    """``sum c(n) q^n -> sum c(dn) q^n`` over the known window."""
    if d < 1:
        raise ValueError("U_d needs a positive d")
    lo = -((-a.min_exp) // d)
    hi = -((-a.trunc) // d)
    if hi <= lo:
        # every multiple of d below trunc sits under min_exp: known zeros
        return QSeries(hi - 1, hi)
    start = d * lo - a.min_exp
    return QSeries(lo, hi, a._num[start::d], a._den)


@lru_cache(maxsize=64)
def f_series(r: int, T: int) -> QSeries:
    """``f_r = prod_{n>=1} (1 - q^{rn})`` to ``O(q^T)`` via pentagonal numbers."""
    if r < 1:
        raise ValueError("f_r needs r >= 1")
    nums = [0] * T
    nums[0] = 1
    k = 1
    while True:
        e1 = r * k * (3 * k - 1) // 2
        if e1 >= T:
            break
        s = -1 if k % 2 else 1
        nums[e1] += s
        e2 = r * k * (3 * k + 1) // 2
        if e2 < T:
            nums[e2] += s
        k += 1
    return QSeries._raw(0, T, tuple(nums), 1)


@dataclass(frozen=True)
class EtaProductSpec:
    """``prod f_r^e`` over ``factors = ((r, e), ...)``."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for r, _ in self.factors:
            if r < 1:
                raise ValueError(f"f_r needs r >= 1, got {r}")

    @classmethod
    def of(cls, mapping: Mapping[int, int]) -> "EtaProductSpec":
        return cls(tuple(sorted((int(r), int(e)) for r, e in mapping.items() if e)))


@lru_cache(maxsize=32)
def eta_product(spec: EtaProductSpec, T: int) -> QSeries:
    """Expand ``prod f_r^e`` to ``O(q^T)``; negative exponents go through one inversion."""
    if T < 1:
        raise ValueError("T must be positive")
    num = QSeries.one(T)
    den = QSeries.one(T)
    for r, e in spec.factors:
        if e > 0:
            num = _mul(num, power(f_series(r, T), e))
        elif e < 0:
            den = _mul(den, power(f_series(r, T), -e))
    if any(den._num[1:]):
        return _mul(num, invert(den))
    return num


@dataclass(frozen=True)
class CongruenceResult:
    ok: bool
    modulus: int
    n_max: int
    first_failure: int | None = None
    residue: int | None = None

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {
            "pass": self.ok,
            "modulus": self.modulus,
            "n_max": self.n_max,
            "first_failure": self.first_failure,
            "residue": self.residue,
        }


def congruent_zero(a: QSeries, M: int, n_max: int) -> CongruenceResult:
    """Check every coefficient on ``[min_exp, n_max]`` is an integer divisible by ``M``."""
    if M < 1:
        raise ValueError("modulus must be positive")
    vals = a.int_coeffs(a.min_exp, n_max + 1)
    for i, c in enumerate(vals):
        if c % M:
            return CongruenceResult(False, M, n_max, a.min_exp + i, c % M)
    return CongruenceResult(True, M, n_max)
