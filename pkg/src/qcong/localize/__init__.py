"""Rational-function representation in the Hauptmodul ``x`` and the 5-adic induction."""

from qcong.localize.harrays import (
    HTable,
    degree_bound,
    denom_exp,
    h_table,
    pi,
    support_floor,
    u_monomial_direct,
    u_monomial_recur,
    u_z_power,
)
from qcong.localize.modeq import MODEQ, ModEqTables, check_modeqs, fit_b3_z2, modeq_residual
from qcong.localize.vspaces import (
    LinearForm,
    deficiency,
    ideal_membership,
    in_five_times_ideal,
    ladder_degree_bound,
    t_hat,
    t_hat_all,
    theta,
    v_membership,
    verify_main2,
)
from qcong.localize.xpoly import X_ETA, Z_ETA, XPoly, from_xpoly, reference_series, to_xpoly

__all__ = [
    "HTable",
    "LinearForm",
    "MODEQ",
    "ModEqTables",
    "XPoly",
    "X_ETA",
    "Z_ETA",
    "check_modeqs",
    "deficiency",
    "degree_bound",
    "denom_exp",
    "fit_b3_z2",
    "from_xpoly",
    "h_table",
    "ideal_membership",
    "in_five_times_ideal",
    "ladder_degree_bound",
    "modeq_residual",
    "pi",
    "reference_series",
    "support_floor",
    "t_hat",
    "t_hat_all",
    "theta",
    "to_xpoly",
    "u_monomial_direct",
    "u_monomial_recur",
    "u_z_power",
    "v_membership",
    "verify_main2",
]
