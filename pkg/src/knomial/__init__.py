"""Exact k-nomial coefficients and order-k Pascal triangles.

C(k, n, h) is the coefficient of x**h in (1 + x + x**2 + ... + x**(k-1))**n.
The package generates triangle lines with a running-window recurrence,
answers single-coefficient queries, and machine-verifies the classical
identities these numbers satisfy against independent computations.
"""

from .identities import (
    PROPERTY_IDS,
    CheckResult,
    DensePolynomial,
    VerificationReport,
    check_alternating_sum,
    check_closed_form,
    check_first_elements,
    check_oracle_equivalence,
    check_oracle_sanity,
    check_recurrence,
    check_row_sum,
    check_sum_of_squares,
    check_symmetry,
    check_vandermonde,
    check_width,
    closed_form_coefficient,
    expand_power_oracle,
    verify_all,
)
from .triangle import (
    CoefficientQuery,
    KNomialParams,
    Row,
    coefficient,
    make_params,
    next_row,
    row,
    row_width,
    triangle,
)

__version__ = "0.1.0"

__all__ = [
    "PROPERTY_IDS",
    "CheckResult",
    "CoefficientQuery",
    "DensePolynomial",
    "KNomialParams",
    "Row",
    "VerificationReport",
    "check_alternating_sum",
    "check_closed_form",
    "check_first_elements",
    "check_oracle_equivalence",
    "check_oracle_sanity",
    "check_recurrence",
    "check_row_sum",
    "check_sum_of_squares",
    "check_symmetry",
    "check_vandermonde",
    "check_width",
    "closed_form_coefficient",
    "coefficient",
    "expand_power_oracle",
    "make_params",
    "next_row",
    "row",
    "row_width",
    "triangle",
    "verify_all",
]
