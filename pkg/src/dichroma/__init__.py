"""Exact solvers for the dichromatic number (minimum acyclic vertex coloring) of digraphs."""
from .cwdp import decide_dcn_r, run_dp, solve_dcn
from .digraph import (
    Coloring,
    Digraph,
    LabeledDigraph,
    build_digraph,
    is_acyclic,
    is_valid_acyclic_coloring,
    reach_pairs,
    scc_decompose,
    symmetric_part,
    underlying_undirected,
)
from .estimator import DichromaticColoring
from .expr import eval_cw, eval_dico, parse_cw, parse_dico
from .families import cactus_color, cactus_decompose, classify, cograph_clique_number, cograph_dcn
from .oracle import brute_force_dcn

__version__ = "0.1.0"

__all__ = [
    "Coloring", "Digraph", "LabeledDigraph", "build_digraph", "is_acyclic",
    "is_valid_acyclic_coloring", "reach_pairs", "scc_decompose", "symmetric_part",
    "underlying_undirected", "decide_dcn_r", "run_dp", "solve_dcn", "DichromaticColoring",
    "cactus_color", "cactus_decompose", "classify", "cograph_clique_number", "cograph_dcn",
    "brute_force_dcn", "eval_cw", "eval_dico", "parse_cw", "parse_dico",
]
