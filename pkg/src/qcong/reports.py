"""Verification jobs packaged as named pass/fail checks with JSON details.

Each ``job_*`` function returns a list of :class:`Check`.  Details hold
only deterministic data (no timings), so a report is reproducible byte
for byte.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from qcong import reference_values as ref
from qcong.errors import QcongError
from qcong.etaq import (
    Cusp,
    EtaQuotient,
    RaduInstance,
    cusps_of,
    expand,
    ligozat_order,
    newman_check,
    radu_lower_bound,
)
from qcong.ladder import PHI, build_L, check_family, extract_progression, gamma, psi
from qcong.localize.harrays import (
    degree_bound,
    denom_exp,
    h_table,
    pi,
    support_floor,
    u_monomial_direct,
    u_monomial_recur,
)
from qcong.localize.modeq import check_modeqs
from qcong.localize.vspaces import (
    deficiency,
    ideal_membership,
    ladder_degree_bound,
    t_hat_all,
    theta,
    v_membership,
    verify_main2,
)
from qcong.localize.xpoly import X_ETA, Z_ETA, reference_series, to_xpoly
from qcong.partitions import dp_oracle
from qcong.sturm import JOBS, build_F_check, verify_isolated

SCHEMA = "qcong-report/1"


@dataclass
class Check:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "status": "pass" if self.ok else "fail", "detail": self.detail}


def _s(v) -> str:
    return str(v)


def _guard(name: str, fn) -> list[Check]:
    """Run ``fn``; a library error becomes a failed check instead of a crash."""
    try:
        return fn()
    except QcongError as exc:
        return [Check(name, False, {"error": type(exc).__name__, "message": str(exc)})]


# -- eta-quotients and cusps --------------------------------------------------

NAMED = {"Phi": PHI, "x": X_ETA, "z": Z_ETA}


def parse_eta(text: str) -> EtaQuotient:
    return NAMED[text] if text in NAMED else EtaQuotient.parse(text)


def job_expand(text: str, T: int) -> list[Check]:
    def run():
        eq = parse_eta(text)
        s = expand(eq, T)
        return [Check("expand", True, {
            "eta_quotient": str(eq),
            "leading_exponent": _s(eq.q_power()),
            "series": s.to_json(),
        })]
    return _guard("expand", run)


def job_eta_check(texts: list[str]) -> list[Check]:
    out = []
    for t in texts:
        eq = parse_eta(t)
        rep = newman_check(eq)
        out.append(Check(f"newman {t}", rep.ok, {"eta_quotient": str(eq), **rep.to_json()}))
    return out


def job_cusp_orders(text: str) -> list[Check]:
    eq = parse_eta(text)
    rows = {c.label(): _s(ligozat_order(eq, c)) for c in cusps_of(eq.level)}
    return [Check(f"cusp orders {text}", True, {"eta_quotient": str(eq), "orders": rows})]


def table1_rows() -> dict[str, tuple[Fraction, ...]]:
    fns = (PHI, X_ETA.at_level(50), X_ETA.rescale(5, 50), Z_ETA.rescale(5, 50))
    return {c.label(): tuple(ligozat_order(f, c) for f in fns) for c in cusps_of(50)}


def job_table1() -> list[Check]:
    rows = table1_rows()
    mism = []
    for label, printed in ref.CUSP_TABLE.items():
        got = rows.get(label)
        if got is None or tuple(got) != printed:
            mism.append({"cusp": label, "printed": list(printed), "recomputed": [str(v) for v in got or ()]})
    combo_bad = []
    for label, (a, b) in ref.CUSP_COMBINATION.items():
        ph, x, x5, z5 = rows[label]
        for k in range(5):
            val = ph + k * x - 29 * x5 + 5 * z5
            if val != a * k + b:
                combo_bad.append({"cusp": label, "k": k, "printed": a * k + b, "recomputed": str(val)})
    detail = {
        "rows": {lab: [str(v) for v in vals] for lab, vals in rows.items()},
        "order_mismatches": mism,
        "combination_mismatches": combo_bad,
        "nonnegative_away_from_infinity": all(
            ph + k * x - 29 * x5 + 5 * z5 >= 0
            for lab, (ph, x, x5, z5) in rows.items() if lab != "Infinity" for k in range(5)
        ),
        "label_note": "source labels carry subscript 10 for cusps of Gamma_0(50); matched by cusp class",
        "cusp_count": len(rows),
    }
    return [Check("table1", not mism and not combo_bad and len(rows) == 12, detail)]


def l1_radu_instances() -> dict[str, RaduInstance]:
    return {
        "M=50, r=Phi, s=()": RaduInstance(50, dict(PHI.exps), 5, 0, 10),
        "M=2, r=1/(f1 f2^2), s=eta(5t)eta(10t)^2": RaduInstance(2, {1: -1, 2: -2}, 5, 0, 10, {5: 1, 10: 2}),
    }


def job_radu() -> list[Check]:
    out = []
    for name, inst in l1_radu_instances().items():
        got = {}
        bad = []
        for label, printed in ref.L1_ORDER_BOUNDS.items():
            b = radu_lower_bound(inst, Cusp.parse(label, 10))
            got[label] = {"exact": _s(b), "ceil": math.ceil(b)}
            if math.ceil(b) != printed:
                bad.append(label)
        out.append(Check(f"radu {name}", not bad, {"bounds": got, "printed": ref.L1_ORDER_BOUNDS, "mismatches": bad}))
    return out


# -- ladder --------------------------------------------------------------------


def job_ladder(alpha: int, n_max: int, modulus: int | None = None) -> list[Check]:
    out = []
    rep = check_family(alpha, n_max, modulus)
    out.append(Check(f"family alpha={alpha}", rep.ok, rep.to_json()))
    if alpha == 1:
        count = 50
        st = build_L(2, count + 1)
        table = dp_oracle(3, 25 * (count - 1) + 20)

        def run():
            q = extract_progression(st, table)
            return [Check("L_2 progression vs DP oracle", True, {
                "coefficients_checked": count,
                "first": [str(v) for v in q.int_coeffs(0, 3)],
            })]
        out += _guard("L_2 progression vs DP oracle", run)
    return out


# -- localization --------------------------------------------------------------


def job_xpoly(alpha: int, margin: int = 25) -> list[Check]:
    def run():
        D = ladder_degree_bound(alpha)
        L = build_L(alpha, D + margin + 1).series
        p = to_xpoly(L, psi(alpha), D, margin)
        detail = {"alpha": alpha, "denom_exp": psi(alpha), "degree": p.degree(), "margin": margin}
        if alpha == 1:
            rec = {m: int(c) for m, c in p.num.items()}
            detail["printed_value_discrepancies"] = ref.compare(ref.L1_NUMERATOR, rec)
            detail["numerator"] = [str(p.coeff(m)) for m in range(1, 10)]
            return [Check("L_1 as rational polynomial in x", p.degree() == 9, detail)]
        detail["xpoly"] = p.to_json()
        return [Check(f"L_{alpha} as rational polynomial in x", True, detail)]
    return _guard("xpoly", run)


def job_z_relation(T: int) -> list[Check]:
    def run():
        x, z = reference_series(T)
        return [Check("z = 1 + 5x", True, {"precision": T})]
    return _guard("z = 1 + 5x", run)


def job_appendix_a(margin: int = 25) -> list[Check]:
    out = []
    for k in range(5):
        def run(k=k):
            p = u_monomial_direct(0, k, 0, margin=margin)
            rec = {m: int(c) for m, c in p.num.items()} if p.is_integral() else {}
            disc = ref.compare(ref.U0_BASE[k], rec)
            return [Check(f"U0(x^{k})", p.is_integral() and p.denom_exp == 5, {
                "degree": p.degree(),
                "margin": margin,
                "printed_value_discrepancies": disc,
            })]
        out += _guard(f"U0(x^{k})", run)
    return out


def job_modeq(T: int) -> list[Check]:
    rep = check_modeqs(T)
    return [Check("modular equations", rep.ok, rep.to_json())]


def job_h_table(m_max: int, n_max: int) -> tuple[list[Check], dict]:
    checks = []
    tables = {}
    for i in (0, 1):
        def run(i=i):
            t = h_table(i, m_max, n_max)
            tables[i] = t
            return [Check(f"h_{i} integral with support floor", True, {
                "m_max": m_max, "n_max": n_max, "entries": len(t.entries),
            })]
        checks += _guard(f"h_{i}", run)
    return checks, tables


def job_h_table_checks(m_max: int, n_max: int) -> list[Check]:
    return job_h_table(m_max, n_max)[0]


def job_routes(samples: int = 50, m_max: int = 25, n_max: int = 15, seed: int = 20240) -> list[Check]:
    rng = random.Random(seed)
    triples = [(rng.randint(0, 1), rng.randint(0, m_max), rng.randint(0, n_max)) for _ in range(samples)]
    bad = [t for t in triples if u_monomial_direct(*t) != u_monomial_recur(*t)]
    return [Check("recurrence route equals direct route", not bad, {
        "seed": seed, "samples": samples, "mismatches": [list(t) for t in bad],
    })]


def prop55_failures(m_max: int = 25, n_lo: int = 5, n_hi: int = 15, m_lo: int = 1) -> list[list[int]]:
    bad = []
    for i in (0, 1):
        for m in range(m_lo, m_max + 1):
            for n in range(n_lo, n_hi + 1):
                a, b = u_monomial_recur(i, m, n), u_monomial_recur(i, m, n - 5)
                for r in sorted(set(a.num) | set(b.num)):
                    ha = a.coeff(r) / Fraction(5) ** pi(i, m, r)
                    hb = b.coeff(r) / Fraction(5) ** pi(i, m, r)
                    if (ha - hb) % 5:
                        bad.append([i, m, n, r])
    return bad


def h1_residue_matrix(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    def h(m, r):
        p = u_monomial_recur(1, m, n)
        return int(p.coeff(r) / Fraction(5) ** pi(1, m, r)) % 5
    return tuple(h(m, 1) for m in range(1, 6)), tuple(h(m, 2) for m in range(4, 9))


def job_h_congruences(m_max: int = 25) -> list[Check]:
    bad = prop55_failures(m_max)
    out = [Check("h_i(m,n,r) = h_i(m,n-5,r) mod 5", not bad, {
        "m_range": [1, m_max], "n_range": [5, 15], "failures": bad[:50], "failure_count": len(bad),
    })]
    mats = {n: h1_residue_matrix(n) for n in range(5)}
    ok = all(mats[n] == ref.H1_RESIDUES for n in mats)
    out.append(Check("h_1 residue matrix", ok, {
        "printed": [list(r) for r in ref.H1_RESIDUES],
        "recomputed": {str(n): [list(r) for r in mats[n]] for n in mats},
    }))
    return out


def inequality_report(r_max: int = 500) -> dict:
    """Both valuation inequalities over ``1 <= r <= r_max``."""
    first_bad = []
    for r in range(1, r_max + 1):
        for m in range(1, 5 * r - 3):
            if theta(0, m) + pi(0, m, r) < theta(1, r):
                first_bad.append([m, r])
    exceptions = []
    later_bad = []
    for r in range(1, r_max + 1):
        for m in range(1, 5 * r + 1):
            d = theta(1, m) + pi(1, m, r) - theta(0, r) - 1
            if d < 0:
                (exceptions if r < 3 else later_bad).append([m, r, d])
    return {"first_failures": first_bad, "exceptions": exceptions, "r>=3_failures": later_bad}


def job_that(r_max: int = 500) -> list[Check]:
    out = []
    forms = t_hat_all()
    line_disc = {}
    for w, f in forms.items():
        d = [{"s": k + 1, "printed": str(ref.T_HAT[w][k]), "recomputed": str(f.coeffs[k])}
             for k in range(8) if f.coeffs[k] != ref.T_HAT[w][k]]
        if d:
            line_disc[str(w)] = d
    out.append(Check("t_hat(1) = 0", forms[1].is_zero(), {}))
    out.append(Check("t_hat lines match", not line_disc, {"discrepancies": line_disc}))
    agg1 = forms[1] + forms[2] + forms[3] + 2 * forms[4] + forms[5]
    agg2 = 4 * forms[4] + forms[6] + forms[7] + forms[8]
    for name, agg, printed in (("aggregate 1", agg1, ref.AGGREGATE_1), ("aggregate 2", agg2, ref.AGGREGATE_2)):
        disc = [{"s": k + 1, "printed": str(printed[k]), "recomputed": str(agg.coeffs[k])}
                for k in range(8) if agg.coeffs[k] != printed[k]]
        mem = ideal_membership(agg)
        out.append(Check(f"{name} in <5, I>", mem.member, {
            "recomputed": [str(c) for c in agg.coeffs],
            "printed_value_discrepancies": disc,
            **mem.to_json(),
        }))
    ineq = inequality_report(r_max)
    printed = sorted([[m, 1, -1] for m in range(1, 5)] + [[m, 2, -1] for m in range(4, 9)])
    got = sorted(ineq["exceptions"])
    ok = not ineq["first_failures"] and not ineq["r>=3_failures"] and got == printed
    out.append(Check("theta/pi inequalities", ok, {
        "r_max": r_max,
        **ineq,
        "outside_printed_windows": [e for e in got if e not in printed],
        "printed_windows_not_deficient": [e for e in printed if e not in got],
    }))
    return out


def job_main2(alpha_max: int) -> list[Check]:
    def run():
        rows = verify_main2(alpha_max)
        return [Check(f"L_{r.alpha} / 5^{r.divisor_exp} in {r.space}_{r.psi}", r.ok, r.to_json()) for r in rows]
    out = _guard("main2", run)
    odd = range(1, 50, 2)
    rec = all(psi(a + 1) == 5 * psi(a) and psi(a + 2) == 25 * psi(a) + 5 for a in odd)
    out.append(Check("psi recursions for odd alpha <= 49", rec, {}))
    return out


def job_sturm() -> list[Check]:
    out = []
    for which, job in JOBS.items():
        rep = verify_isolated(job)
        out.append(Check(f"sturm {job.label()}", rep.ok, rep.to_json()))
    for which in JOBS:
        rep = build_F_check(which)
        out.append(Check(f"U_p^2(F_{which}) exact identity", rep.exact_equal, rep.to_json()))
    return out


def report(command: str, config: dict, checks: list[Check]) -> dict:
    return {
        "schema": SCHEMA,
        "command": command,
        "config": config,
        "status": "pass" if all(c.ok for c in checks) else "fail",
        "checks": [c.to_json() for c in checks],
    }
