"""scikit-learn style front end: acyclic coloring as a clustering of vertices."""
from __future__ import annotations

import warnings

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin

from .cwdp import solve_dcn
from .digraph import Coloring, is_acyclic
from .expr.cw import eval_cw
from .expr.dico import eval_dico
from .families import NotACactus, cactus_color, cactus_decompose, cograph_dcn
from .oracle import brute_force_dcn
from .validation import check_digraph, is_cw, is_dico

STRATEGIES = ("auto", "cw", "cograph", "cactus", "brute")
BRUTE_WARN_N = 12


def solve_digraph(g, strategy="auto", max_r=None):
    """Returns ``(chi, coloring, strategy_used)`` for a plain digraph."""
    if strategy == "brute":
        chi, col = brute_force_dcn(g, max_r)
        return chi, col, "brute"
    if strategy == "cactus":
        chi, col = cactus_color(g)
        return chi, col, "cactus"
    if strategy != "auto":
        raise ValueError(f"strategy {strategy!r} needs an expression input, not a digraph")
    if is_acyclic(g):
        return min(1, g.n), _mono(g.n), "dag"
    if not isinstance(cactus_decompose(g), NotACactus):
        chi, col = cactus_color(g)
        return chi, col, "cactus"
    if g.n > BRUTE_WARN_N:
        warnings.warn(f"brute force on {g.n} vertices may take very long", RuntimeWarning, stacklevel=2)
    chi, col = brute_force_dcn(g, max_r)
    return chi, col, "brute"


def _mono(n):
    return Coloring((1,) * n)


class DichromaticColoring(ClusterMixin, BaseEstimator):
    """Minimum acyclic vertex coloring.

    ``fit`` accepts a :class:`~dichroma.digraph.Digraph`, an adjacency matrix,
    an ``(n, arcs)`` pair, a clique-width expression or a di-co-expression.

    Parameters
    ----------
    strategy : {"auto", "cw", "cograph", "cactus", "brute"}
        ``auto`` picks the expression solver for expressions and tries
        DAG, cactus forest, then brute force for plain digraphs.
    sig_cap : int or None
        Signature-set size limit for the clique-width solver.
    max_r : int or None
        Largest number of colors the brute-force search tries.

    Attributes
    ----------
    n_colors_ : int
    coloring_ : Coloring
    labels_ : ndarray of shape (n_vertices,)
        Color of vertex ``i + 1`` at position ``i``, colors start at 1.
    graph_ : Digraph
    strategy_ : str
        The solver that produced the result.
    """

    def __init__(self, strategy="auto", sig_cap=None, max_r=None):
        self.strategy = strategy
        self.sig_cap = sig_cap
        self.max_r = max_r

    def fit(self, X, y=None):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}; choose from {STRATEGIES}")
        if is_cw(X):
            if self.strategy not in ("auto", "cw"):
                raise ValueError(f"strategy {self.strategy!r} does not apply to a clique-width expression")
            self.graph_ = eval_cw(X).graph
            self.n_colors_, self.coloring_ = solve_dcn(X, self.sig_cap)
            self.strategy_ = "cw"
        elif is_dico(X):
            if self.strategy not in ("auto", "cograph"):
                raise ValueError(f"strategy {self.strategy!r} does not apply to a di-co-expression")
            self.graph_ = eval_dico(X)
            self.n_colors_, self.coloring_ = cograph_dcn(X)
            self.strategy_ = "cograph"
        else:
            self.graph_ = check_digraph(X)
            self.n_colors_, self.coloring_, self.strategy_ = solve_digraph(
                self.graph_, self.strategy, self.max_r
            )
        self.labels_ = np.asarray(self.coloring_.colors, dtype=int)
        return self
