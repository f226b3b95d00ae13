"""Garside normal forms of braids and the reduced Burau representation.

Classical (``Delta``) and dual (``delta``) left normal forms, exact Burau
matrices over ``Z[q, q^-1]``, non-vanishing checks built on them, and the
recovery of a simply-nested braid from its Burau matrix.
"""

from .burau import rho, rho_sigma, rho_sigma_inv
from .criteria import (
    Verdict,
    classical_criterion_b4,
    degree_bound_report,
    dual_criterion_b4,
    forbidden_pairs_b4,
    kernel_exclusion,
    lemma31_profile,
    row_degree_profile,
)
from .garside_classical import ClassicalNF, PermSimple, normal_form_c
from .garside_dual import DualNF, DualSimple, is_simply_nested, normal_form_d, random_simply_nested
from .laurent import BurauMatrix, LaurentPoly, mat_det, mat_stats
from .recovery import NotSimplyNestedEvidence, dual_nf_from_matrix, find_prefix_letter
from .words import BraidWord, Token, parse

__all__ = [
    "BraidWord", "BurauMatrix", "ClassicalNF", "DualNF", "DualSimple", "LaurentPoly",
    "NotSimplyNestedEvidence", "PermSimple", "Token", "Verdict",
    "classical_criterion_b4", "degree_bound_report", "dual_criterion_b4", "dual_nf_from_matrix",
    "find_prefix_letter", "forbidden_pairs_b4", "is_simply_nested", "kernel_exclusion",
    "lemma31_profile", "row_degree_profile", "mat_det", "mat_stats", "normal_form_c", "normal_form_d", "parse",
    "random_simply_nested", "rho", "rho_sigma", "rho_sigma_inv",
]
