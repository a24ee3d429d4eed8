"""Brute-force reference solvers. Exponential; meant for small instances and tests."""
from __future__ import annotations

from itertools import islice
from typing import Iterator, Optional

import networkx as nx

from .digraph import Coloring, Digraph, LabeledDigraph, reach_pairs
from .exceptions import CycleCountCapExceeded, ExceededError


def _closes_cycle(g: Digraph, v: int, members: set[int]) -> bool:
    """Would adding ``v`` to the acyclic set ``members`` create a cycle through ``v``?"""
    seen = set()
    todo = [w for w in g.out[v] if w in members]
    while todo:
        x = todo.pop()
        if x in seen:
            continue
        seen.add(x)
        for y in g.out[x]:
            if y == v:
                return True
            if y in members and y not in seen:
                todo.append(y)
    return False


def _color_search(n: int, r: int, fits) -> Optional[list[int]]:
    """Backtracking over colors ``1..r``; vertex 1 gets color 1, new colors appear in order."""
    colors = [0] * (n + 1)
    classes: list[set[int]] = [set() for _ in range(r + 1)]

    def rec(v: int, used: int) -> bool:
        if v > n:
            return True
        for c in range(1, min(used + 1, r) + 1):
            if fits(v, classes[c]):
                colors[v] = c
                classes[c].add(v)
                if rec(v + 1, max(used, c)):
                    return True
                classes[c].discard(v)
        colors[v] = 0
        return False

    return colors[1:] if rec(1, 0) else None


def brute_force_dcn(g: Digraph, max_r: Optional[int] = None) -> tuple[int, Coloring]:
    """Smallest ``r`` admitting an acyclic r-coloring, with a witness."""
    if g.n == 0:
        return 0, Coloring(())
    max_r = g.n if max_r is None else max_r
    for r in range(1, max_r + 1):
        found = _color_search(g.n, r, lambda v, cls: not _closes_cycle(g, v, cls))
        if found is not None:
            return r, Coloring(tuple(found))
    raise ExceededError(f"no acyclic coloring with at most {max_r} colors")


def brute_force_chromatic(n: int, edges) -> int:
    """Chromatic number of an undirected graph on ``1..n`` with unordered-pair ``edges``."""
    if n == 0:
        return 0
    adj = [set() for _ in range(n + 1)]
    for e in edges:
        u, v = tuple(e)
        adj[u].add(v)
        adj[v].add(u)
    for r in range(1, n + 1):
        if _color_search(n, r, lambda v, cls: not (adj[v] & cls)) is not None:
            return r
    return n


def brute_force_clique_number_d(g: Digraph) -> int:
    """Largest vertex set with arcs in both directions between every two members."""
    if g.n == 0:
        return 0
    nbr = [0] * (g.n + 1)
    for u, v in g.arcs:
        if (v, u) in g.arcs:
            nbr[u] |= 1 << v
    best = 1
    for mask in range(1, 1 << g.n):
        size = bin(mask).count("1")
        if size <= best:
            continue
        members = [v for v in g.vertices if mask >> (v - 1) & 1]
        bits = mask << 1
        if all((nbr[v] | 1 << v) & bits == bits for v in members):
            best = size
    return best


def _rotate(cycle: list[int]) -> tuple[int, ...]:
    i = cycle.index(min(cycle))
    return tuple(cycle[i:] + cycle[:i])


def enumerate_simple_cycles(g: Digraph, cap: Optional[int] = 100_000) -> list[tuple[int, ...]]:
    """All simple directed cycles, each rotated to start at its smallest vertex."""
    nxg = nx.DiGraph()
    nxg.add_nodes_from(g.vertices)
    nxg.add_edges_from(g.arcs)
    it = nx.simple_cycles(nxg)
    found = list(islice(it, cap + 1)) if cap is not None else list(it)
    if cap is not None and len(found) > cap:
        raise CycleCountCapExceeded(f"more than {cap} simple cycles")
    return sorted(_rotate(c) for c in found)


def _acyclic_partitions(g: Digraph) -> Iterator[list[list[int]]]:
    """Set partitions of ``1..n`` whose classes are acyclic, pruned as they grow."""
    blocks: list[set[int]] = []

    def rec(v: int):
        if v > g.n:
            yield [sorted(b) for b in blocks]
            return
        for block in blocks:
            if not _closes_cycle(g, v, block):
                block.add(v)
                yield from rec(v + 1)
                block.discard(v)
        blocks.append({v})
        yield from rec(v + 1)
        blocks.pop()

    yield from rec(1)


def enumerate_acyclic_partitions(lg: LabeledDigraph):
    """Every partition of the vertices into acyclic classes, with its signature.

    Signatures use the same canonical form as the DP: reach sets as sorted
    pair tuples, classes ordered by ``(size, pairs)``.
    """
    out = []
    for part in _acyclic_partitions(lg.graph):
        reach = [tuple(sorted(reach_pairs(lg, cls))) for cls in part]
        out.append((part, tuple(sorted(reach, key=lambda c: (len(c), c)))))
    return out


def oracle_sigset(lg: LabeledDigraph) -> frozenset:
    return frozenset(sig for _, sig in enumerate_acyclic_partitions(lg))
