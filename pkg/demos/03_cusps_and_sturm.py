"""
Orders at cusps and finite checks of congruences
================================================

"""

from qcong.etaq import EtaQuotient, cusps_of, ligozat_order, newman_check

# an eta quotient given by its exponents r_delta on Gamma_0(10)
x = EtaQuotient(10, {1: -3, 2: 1, 5: -1, 10: 3})
print("modular on Gamma_0(10):", newman_check(x).ok)
for c in cusps_of(10):
    print(" order at", c.label(), "=", ligozat_order(x, c))

# a congruence for a modular form is settled by its first few coefficients
from qcong.sturm import JOBS, build_F_check, verify_isolated
for which, job in JOBS.items():
    rep = verify_isolated(job)
    print(f"job {which}: checked {rep.checked} coefficients, pass = {rep.ok}")

# the identity behind it holds modulo p, not over the integers
rep = build_F_check(1)
print("exact:", rep.exact_equal, " mod p:", rep.congruent_mod_p, " with f_{p^2}:", rep.fp2_form_exact)
