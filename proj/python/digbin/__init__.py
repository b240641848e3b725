"""Exact generalized Sierpinski matrices and digital binomial identities.

Rationals are exchanged as ``fractions.Fraction`` values on the Python side
and as ``"p/q"`` strings inside the extension.
"""

import json
from fractions import Fraction

from . import _digbin
from ._digbin import (
    CapExceeded,
    base3_corollary_check,
    binom_rising,
    braid_check,
    carry_free,
    digit_sum,
    digital_binomial_sides,
    dominated_set,
    dominates,
    eigen_poly_annihilation_check,
    exp_generator_matches,
    gould_check,
    multiplicity,
    multiplicity_identity_sides,
    parity_w,
    power_relation_check,
    prouhet_partition,
    ptm,
    s_entry,
    shifted_gould_check,
    stirling_first,
    stirling_identity_check,
    to_digits,
    verify_closed_form,
    verify_one_parameter,
    x_power_entry_check,
)

__all__ = [
    "CapExceeded",
    "base3_corollary_check",
    "binom_rising",
    "braid_check",
    "carry_free",
    "coefficients_by_formula",
    "digit_sum",
    "digital_binomial_sides",
    "dominated_set",
    "dominates",
    "eigen_poly_annihilation_check",
    "exp_generator_matches",
    "gould_check",
    "matrix",
    "multiplicity",
    "multiplicity_identity_sides",
    "parity_w",
    "power_relation_check",
    "prouhet_partition",
    "ptm",
    "ptm_report",
    "run_suite",
    "s_entry",
    "shifted_gould_check",
    "stirling_first",
    "stirling_identity_check",
    "structured_apply",
    "to_digits",
    "verify_closed_form",
    "verify_one_parameter",
    "x_power_entry_check",
]


def matrix(kind, base, depth, eval=None, cap=4096):
    """Matrix S, X, M, T, U or V as nested lists.

    Symbolic entries are polynomial strings; numeric ones are Fractions.
    """
    x0 = None if eval is None else str(Fraction(eval))
    rows = json.loads(_digbin.matrix_json(kind, base, depth, x0, cap))
    if kind in ("S", "X") and eval is None:
        return rows
    return [[Fraction(v) for v in row] for row in rows]


def structured_apply(base, depth, x0, vector):
    """S_{b,N}(x0) @ vector without forming the dense matrix."""
    out = _digbin.structured_apply(base, depth, str(Fraction(x0)), [str(Fraction(v)) for v in vector])
    return [Fraction(v) for v in out]


def coefficients_by_formula(depth, zero_sum):
    return [Fraction(v) for v in _digbin.coefficients_by_formula(depth, [str(Fraction(v)) for v in zero_sum])]


def ptm_report(depth, zero_sum):
    return json.loads(_digbin.ptm_report_json(depth, [str(Fraction(v)) for v in zero_sum]))


def run_suite(suite, base, depth, seed=1, cap=4096):
    return json.loads(_digbin.run_suite_json(suite, base, depth, seed, cap))
