"""Finite checks of two isolated congruences up to fixed Sturm bounds.

``a_5(49n + 31) = 0 (mod 7)`` and ``a_9(121n + 36) = 0 (mod 11)``.  That
checking coefficients up to the bound suffices rests on a modular-form
membership argument which is taken as given here; the code only verifies
the finite coefficient conditions.
"""

from __future__ import annotations

from dataclasses import dataclass

from qcong.errors import VerificationError
from qcong.etaq import EtaQuotient, expand
from qcong.partitions import generating_series
from qcong.qseries import QSeries, atkin_u, congruent_zero, f_series, power, substitute_power

__all__ = ["SturmJob", "JOBS", "SturmReport", "verify_isolated", "FCheck", "build_F_check", "TRUST_NOTE"]

TRUST_NOTE = (
    "finite check only: sufficiency of the bound relies on the modular-form "
    "membership of U_p^2(F) and on Sturm's theorem, both taken as given"
)


@dataclass(frozen=True)
class SturmJob:
    d: int
    m: int
    t: int
    prime: int
    bound: int

    def __post_init__(self):
        if not 0 <= self.t < self.m:
            raise ValueError("need 0 <= t < m")
        if self.bound < 1:
            raise ValueError("bound must be >= 1")

    def label(self) -> str:
        return f"a_{self.d}({self.m}n+{self.t}) = 0 mod {self.prime}"


JOBS = {
    1: SturmJob(5, 49, 31, 7, 109),
    2: SturmJob(9, 121, 36, 11, 256),
}


@dataclass(frozen=True)
class SturmReport:
    job: SturmJob
    ok: bool
    checked: int
    first_failure: int | None
    residue: int | None

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {
            "job": self.job.label(),
            "bound": self.job.bound,
            "pass": self.ok,
            "checked": self.checked,
            "first_failure": self.first_failure,
            "residue": self.residue,
            "trust_note": TRUST_NOTE,
        }


def verify_isolated(job: SturmJob) -> SturmReport:
    """``a_d(m n + t) = 0 (mod prime)`` for ``0 <= n <= bound``."""
    top = job.m * job.bound + job.t
    a = generating_series(job.d, top + 1).int_coeffs(0, top + 1)
    prog = QSeries(0, job.bound + 1, a[job.t::job.m])
    res = congruent_zero(prog, job.prime, job.bound)
    return SturmReport(job, res.ok, job.bound + 1, res.first_failure, res.residue)


# F_1 = eta(tau)^440 / eta(2 tau)^4,  F_2 = eta(tau)^2056 / eta(2 tau)^8
_F = {
    1: (EtaQuotient(2, {1: 440, 2: -4}), 9),
    2: (EtaQuotient(2, {1: 2056, 2: -8}), 17),
}


@dataclass(frozen=True)
class FCheck:
    which: int
    T: int
    leading_exponent: int
    exact_equal: bool
    first_exact_mismatch: int | None
    congruent_mod_p: bool
    fp2_form_exact: bool

    @property
    def ok(self) -> bool:
        return self.exact_equal

    def to_json(self) -> dict:
        return {
            "which": self.which,
            "T": self.T,
            "leading_exponent": self.leading_exponent,
            "exact_equal": self.exact_equal,
            "first_exact_mismatch": self.first_exact_mismatch,
            "congruent_mod_p": self.congruent_mod_p,
            "f_p2_form_exact": self.fp2_form_exact,
            "pass": self.ok,
        }


def _target(job: SturmJob, k: int, T: int) -> QSeries:
    """``f_1^k sum_{n>=0} a_d(m n + t) q^(n+1)`` to ``O(q^T)``."""
    top = job.m * (T - 1) + job.t
    a = generating_series(job.d, top + 1).int_coeffs(0, top + 1)
    inner = QSeries(1, T, a[job.t::job.m][: T - 1])
    return (power(f_series(1, T), k) * inner).truncate(T)


def build_F_check(which: int, T: int | None = None, prefactor_power: int | None = None, strict: bool = False) -> FCheck:
    """Compare ``U_{p^2}(F)`` with ``f_1^k sum a_d(p^2 n + t) q^(n+1)`` to ``O(q^T)``.

    Also reports the comparison mod ``p`` and the exact identity obtained by
    replacing ``f_1^(k p^2)`` with ``f_{p^2}^k`` inside ``F``.
    """
    if which not in _F:
        raise ValueError("which must be 1 or 2")
    job = JOBS[which]
    eq, k = _F[which]
    k_used = k if prefactor_power is None else prefactor_power
    T = job.bound + 1 if T is None else T
    m = job.m
    F = expand(eq, m * T)
    lead = int(eq.q_power())
    left = atkin_u(F, m).truncate(T)
    right = _target(job, k_used, T)
    diff = left - right
    exact = diff.is_zero()
    modp = all(c % job.prime == 0 for c in diff.int_coeffs(diff.min_exp, T))
    # q^lead f_{m}^k * 1/(f_1 f_2^(d-1)): here U_m acts on the a_d series alone
    a = generating_series(job.d, m * T - lead).shift(lead)
    alt = atkin_u(substitute_power(power(f_series(1, T), k), m) * a, m).truncate(T)
    fp2_exact = (alt - _target(job, k_used, T)).is_zero()
    rep = FCheck(which, T, lead, exact, diff.valuation(), modp, fp2_exact)
    if strict and not exact:
        raise VerificationError(
            f"U_{m}(F_{which}) differs from f_1^{k_used} sum a_{job.d}({m}n+{job.t}) q^(n+1) at q^{diff.valuation()}"
        )
    return rep
