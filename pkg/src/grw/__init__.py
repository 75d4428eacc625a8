"""Generalized rank weights of linear codes over F_{q^m}/F_q."""

__version__ = "0.1.0"

from .gf_arith import FieldTower, make_field, tower_for
from .linalg import BudgetExceeded, Subspace
from .rank_code import LinearCode, dual_code, make_code, min_rank_distance, rank_weight
from .weights import WeightHierarchy, ghw, grw_d, grw_M, weight_hierarchy

__all__ = [
    "FieldTower",
    "make_field",
    "tower_for",
    "BudgetExceeded",
    "Subspace",
    "LinearCode",
    "dual_code",
    "make_code",
    "min_rank_distance",
    "rank_weight",
    "WeightHierarchy",
    "ghw",
    "grw_d",
    "grw_M",
    "weight_hierarchy",
]
