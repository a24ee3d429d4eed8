"""Seeded random instance generators. Same arguments, same output."""
from __future__ import annotations

import random

from .digraph import Digraph
from .expr import cw, dico


def _rng(seed: int) -> random.Random:
    return random.Random(seed)


def gen_random_digraph(n: int, p: float, seed: int) -> Digraph:
    """Each ordered pair of distinct vertices becomes an arc with probability ``p``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    rng = _rng(seed)
    arcs = frozenset(
        (u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v and rng.random() < p
    )
    return Digraph(n, arcs)


def gen_random_undirected(n: int, p: float, seed: int) -> frozenset[frozenset[int]]:
    rng = _rng(seed)
    return frozenset(
        frozenset((u, v)) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p
    )


def biorientation(n: int, edges) -> Digraph:
    arcs = set()
    for e in edges:
        u, v = tuple(e)
        arcs.add((u, v))
        arcs.add((v, u))
    return Digraph(n, frozenset(arcs))


def gen_random_cw_expr(k: int, n: int, seed: int, max_ops: int = 3) -> cw.CwExpr:
    """Random k-expression over ``n`` leaves named ``v1..vn``.

    Subtrees are merged pairwise at random; after every union a random run of
    up to ``max_ops`` edge insertions and relabelings is applied.
    """
    if k < 1 or n < 1:
        raise ValueError("k and n must be at least 1")
    rng = _rng(seed)

    def decorate(node):
        if k < 2:
            return node
        for _ in range(rng.randint(0, max_ops)):
            a, b = rng.sample(range(1, k + 1), 2)
            # insertions are the interesting case; keep relabelings rarer
            node = cw.EdgeInsert(a, b, node) if rng.random() < 0.7 else cw.Relabel(a, b, node)
        return node

    forest = [cw.Create(f"v{i}", rng.randint(1, k)) for i in range(1, n + 1)]
    while len(forest) > 1:
        i, j = sorted(rng.sample(range(len(forest)), 2))
        right = forest.pop(j)
        left = forest.pop(i)
        forest.insert(i, decorate(cw.Union(left, right)))
    return cw.CwExpr(forest[0], k)


def gen_random_dico_expr(n: int, seed: int, ops=("union", "series", "order", "dunion"), p_arc: float = 0.5):
    """Random (extended) di-co-expression over leaves ``v1..vn``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = _rng(seed)
    classes = {"union": dico.Union, "series": dico.Series, "order": dico.Order}
    forest = [(dico.Vertex(f"v{i}"), [f"v{i}"]) for i in range(1, n + 1)]
    while len(forest) > 1:
        i, j = sorted(rng.sample(range(len(forest)), 2))
        right, rnames = forest.pop(j)
        left, lnames = forest.pop(i)
        op = rng.choice(ops)
        if op == "dunion":
            arcs = tuple((u, v) for u in lnames for v in rnames if rng.random() < p_arc)
            node = dico.DUnion(left, right, arcs)
        else:
            node = classes[op](left, right)
        forest.insert(i, (node, lnames + rnames))
    return forest[0][0]


def gen_random_cactus(n: int, seed: int, p_cycle: float = 0.5, max_cycle: int = 5) -> Digraph:
    """Random directed cactus forest on exactly ``n`` vertices.

    Vertices join by hanging a new directed cycle on an existing vertex, by a
    pendant arc in a random direction, or by starting a new component. A few
    extra arcs run from lower-numbered components to higher-numbered ones,
    which cannot close a cycle. Vertex ids are shuffled at the end.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = _rng(seed)
    comp = [0, 0]  # comp[v] for v >= 1; index 0 unused
    arcs: set[tuple[int, int]] = set()
    size = 1
    while size < n:
        roll = rng.random()
        if roll < 0.08:
            comp.append(max(comp) + 1)
            size += 1
            continue
        anchor = rng.randint(1, size)
        room = n - size
        if roll < 0.08 + p_cycle and room >= 1:
            length = rng.randint(2, min(max_cycle, room + 1))
            cycle = [anchor] + list(range(size + 1, size + length))
            for v in cycle[1:]:
                comp.append(comp[anchor])
            size += length - 1
            for u, v in zip(cycle, cycle[1:] + cycle[:1]):
                arcs.add((u, v))
        else:
            size += 1
            comp.append(comp[anchor])
            arcs.add((anchor, size) if rng.random() < 0.5 else (size, anchor))
    for _ in range(rng.randint(0, max(0, n // 5))):
        u, v = rng.randint(1, n), rng.randint(1, n)
        if comp[u] < comp[v] and (v, u) not in arcs:
            arcs.add((u, v))
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    relabel = dict(zip(range(1, n + 1), perm))
    return Digraph(n, frozenset((relabel[u], relabel[v]) for u, v in arcs))
