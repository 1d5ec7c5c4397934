"""Divergence of Coxeter groups: graph criteria and Cayley-graph experiments."""
from .cayley import (
    BudgetExceeded,
    NormalWord,
    RightAngledCoxeterGroup,
    avoidant_path_length,
    ball,
    common_crossers,
    divergence_samples,
    fit_power_law,
    hdiv_estimate,
    normal_form,
    wall_of,
    walls_in_ball,
)
from .coxeter import coxeter_lower_bounds, hat_diameter, hat_graph
from .graph import CoxeterGraph, GraphParseError, load_graph, parse_graph
from .racg import (
    ClassificationReport,
    classify_racg,
    gamma_complete_word,
    is_cfs,
    rank_table,
    validate_gamma_complete_word,
)
from .randomgraphs import cfs_rate, sample_gnp, threshold_sweep

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "NormalWord", "RightAngledCoxeterGroup", "avoidant_path_length", "ball",
    "common_crossers", "divergence_samples", "fit_power_law", "hdiv_estimate", "normal_form",
    "wall_of", "walls_in_ball", "coxeter_lower_bounds", "hat_diameter", "hat_graph",
    "CoxeterGraph", "GraphParseError", "load_graph", "parse_graph", "ClassificationReport",
    "classify_racg", "gamma_complete_word", "is_cfs", "rank_table",
    "validate_gamma_complete_word", "cfs_rate", "sample_gnp", "threshold_sweep",
]
