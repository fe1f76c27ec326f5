"""SL3 web invariants: growth, minimal colorings, leading terms and web-basis expansion."""

from .coloring import coloring_from_kk, compare_colorings, enumerate_colorings, minimal_coloring
from .growth import applicable_rules, grow, kk_labeling
from .invariant import evaluate, expand, leading_term_via_kk, web_from_monomial
from .polyring import Polynomial, VariableOrder, grevlex_compare, leading_term
from .weightpath import Sign, dominant_strings, is_dominant, path_of, weight_of
from .webgraph import Web, canonical_form, clasp, trim, unclasp, validate

__version__ = "0.1.0"

__all__ = [
    "Sign",
    "Web",
    "Polynomial",
    "VariableOrder",
    "weight_of",
    "path_of",
    "is_dominant",
    "dominant_strings",
    "validate",
    "canonical_form",
    "unclasp",
    "clasp",
    "trim",
    "applicable_rules",
    "grow",
    "kk_labeling",
    "enumerate_colorings",
    "coloring_from_kk",
    "compare_colorings",
    "minimal_coloring",
    "grevlex_compare",
    "leading_term",
    "evaluate",
    "leading_term_via_kk",
    "web_from_monomial",
    "expand",
]
