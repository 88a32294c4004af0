"""Exact computation of quantum SO(3)/SU(2) WRT invariants from surgery
presentations, cyclotomic expansions of the colored Jones polynomial, the
discrete Laplace transform, and unified (Habiro-ring) invariants.

All arithmetic is exact: Laurent polynomials over the rationals in
``v = q^(1/4)`` and elements of cyclotomic fields in reduced power bases.
"""

from ._kernel import BACKEND as KERNEL_BACKEND
from .qcalc import (
    BivariatePoly,
    LaurentPoly,
    PowerSeries,
    a_poly,
    a_value,
    cyclotomic_poly,
    cyclotomic_resultant,
    exact_div,
    pochhammer,
    q_pochhammer,
    qint,
)

__all__ = [
    "KERNEL_BACKEND",
    "BivariatePoly",
    "LaurentPoly",
    "PowerSeries",
    "a_poly",
    "a_value",
    "cyclotomic_poly",
    "cyclotomic_resultant",
    "exact_div",
    "pochhammer",
    "q_pochhammer",
    "qint",
]

__version__ = "0.1.0"
