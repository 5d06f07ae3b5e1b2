"""Exact enumeration of deepest nodes in marked ordered trees."""

from .asymptotics import LIMIT, eval_sum_F, limit_gap_check, ratio_table, singular_coefficient_fit
from .genfun import gf_A, gf_A_h, gf_dG, gf_G, gf_p_h, identity_suite, kernel, series_R
from .paths import (
    DecoratedPath,
    SkewPath,
    decorated_to_skew,
    decorated_to_tree,
    skew_to_decorated,
    tree_to_decorated,
    validate_skew,
)
from .series import BiSeries, Series, coeff, d_dt, eval_t, solve_v, sqrt
from .trees import MarkedTree, decode, deepest_polynomial, encode, generate, stats

__version__ = "0.1.0"

__all__ = [
    "LIMIT",
    "BiSeries",
    "DecoratedPath",
    "MarkedTree",
    "Series",
    "SkewPath",
    "coeff",
    "d_dt",
    "decode",
    "decorated_to_skew",
    "decorated_to_tree",
    "deepest_polynomial",
    "encode",
    "eval_sum_F",
    "eval_t",
    "generate",
    "gf_A",
    "gf_A_h",
    "gf_G",
    "gf_dG",
    "gf_p_h",
    "identity_suite",
    "kernel",
    "limit_gap_check",
    "ratio_table",
    "series_R",
    "singular_coefficient_fit",
    "skew_to_decorated",
    "solve_v",
    "sqrt",
    "stats",
    "tree_to_decorated",
    "validate_skew",
]
