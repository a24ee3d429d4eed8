"""Input checking helpers that turn loosely typed inputs into package types."""
from __future__ import annotations

import numpy as np

from .digraph import Coloring, Digraph, build_digraph
from .expr.cw import CwExpr
from .expr.dico import DUnion, Order, Series, Union, Vertex

_DICO_TYPES = (Vertex, Union, Series, Order, DUnion)


def check_digraph(X) -> Digraph:
    """Accept a Digraph, a square 0/1 adjacency matrix, or an ``(n, arcs)`` pair.

    Matrix entry ``[i, j]`` nonzero means an arc from ``i + 1`` to ``j + 1``.
    """
    if isinstance(X, Digraph):
        return X
    if isinstance(X, tuple) and len(X) == 2 and np.isscalar(X[0]):
        return build_digraph(int(X[0]), X[1])
    A = np.asarray(X)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square adjacency matrix, got shape {A.shape}")
    if np.any(np.diag(A)):
        raise ValueError("adjacency matrix has self-loops on the diagonal")
    rows, cols = np.nonzero(A)
    return build_digraph(A.shape[0], zip((rows + 1).tolist(), (cols + 1).tolist()))


def is_dico(X) -> bool:
    return isinstance(X, _DICO_TYPES)


def is_cw(X) -> bool:
    return isinstance(X, CwExpr)


def check_coloring(g: Digraph, colors) -> Coloring:
    if isinstance(colors, Coloring):
        c = colors
    else:
        c = Coloring(tuple(int(x) for x in np.asarray(colors).ravel()))
    if len(c.colors) != g.n:
        raise ValueError(f"coloring has {len(c.colors)} entries for {g.n} vertices")
    return c
