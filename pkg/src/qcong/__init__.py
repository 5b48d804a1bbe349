"""Exact q-series and modular-function tools for partition congruences.

The core is :class:`~qcong.qseries.QSeries`, a truncated Laurent series
with exact rational coefficients.  On top of it sit eta-quotient
utilities (:mod:`qcong.etaq`), generalized cubic partition counts
(:mod:`qcong.partitions`), the U-operator ladder (:mod:`qcong.ladder`),
the rational-function representation in ``x`` (:mod:`qcong.localize`)
and finite Sturm-bound checks (:mod:`qcong.sturm`).
"""

from qcong.errors import (
    NonIntegralError,
    NotInvertibleError,
    PrecisionError,
    QcongError,
    RepresentationError,
    VerificationError,
)
from qcong.etaq import Cusp, EtaQuotient, cusps_of, expand, ligozat_order, newman_check, radu_lower_bound
from qcong.ladder import build_L, check_family, extract_progression, gamma, psi
from qcong.partitions import dp_oracle, generating_series
from qcong.qseries import QSeries, atkin_u, congruent_zero, eta_product, f_series

__version__ = "0.1.0"

__all__ = [
    "QSeries",
    "EtaQuotient",
    "Cusp",
    "atkin_u",
    "build_L",
    "check_family",
    "congruent_zero",
    "cusps_of",
    "dp_oracle",
    "eta_product",
    "expand",
    "extract_progression",
    "f_series",
    "gamma",
    "generating_series",
    "ligozat_order",
    "newman_check",
    "psi",
    "radu_lower_bound",
    "QcongError",
    "PrecisionError",
    "NonIntegralError",
    "NotInvertibleError",
    "RepresentationError",
    "VerificationError",
]
