"""Linear-time acyclic coloring for directed co-graphs and directed cactus forests."""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Optional, Union as TUnion

from .digraph import Coloring, Digraph, is_acyclic, is_symmetric, is_valid_acyclic_coloring, scc_decompose
from .exceptions import NotACactusError
from .expr._calls import postorder
from .expr.dico import DiCoNode, Series, Vertex, leaf_names, validate_dico


# -- directed co-graphs -------------------------------------------------------

def _cograph_values(root: DiCoNode) -> dict[int, int]:
    """Bottom-up: 1 per vertex, sum over series, max over every other operation."""
    value: dict[int, int] = {}
    for x in postorder(root):
        if isinstance(x, Vertex):
            value[id(x)] = 1
        elif isinstance(x, Series):
            value[id(x)] = value[id(x.left)] + value[id(x.right)]
        else:
            value[id(x)] = max(value[id(x.left)], value[id(x.right)])
    return value


def cograph_dcn(root: DiCoNode) -> tuple[int, Coloring]:
    """Dichromatic number and an optimal coloring of an (extended) di-co-expression.

    Colors of the right operand of a series node are shifted past the colors
    of the left operand; every other node reuses its children's colors.
    """
    validate_dico(root)
    value = _cograph_values(root)
    ids = {name: i for i, name in enumerate(leaf_names(root), 1)}
    colors = [0] * len(ids)
    todo = [(root, 0)]
    while todo:
        x, offset = todo.pop()
        if isinstance(x, Vertex):
            colors[ids[x.name] - 1] = offset + 1
            continue
        shift = value[id(x.left)] if isinstance(x, Series) else 0
        todo.append((x.right, offset + shift))
        todo.append((x.left, offset))
    return value[id(root)], Coloring(tuple(colors))


def cograph_clique_number(root: DiCoNode) -> int:
    """Largest bidirectionally complete subdigraph, by the same recursion."""
    validate_dico(root)
    return _cograph_values(root)[id(root)]


# -- directed cactus forests --------------------------------------------------

@dataclass
class CycleDecomposition:
    """Arc-disjoint simple cycles plus the auxiliary DAG used for coloring.

    ``dag_nodes`` holds ``("cycle", i)`` for ``cycles[i]`` and ``("vertex", v)``
    for every vertex on no cycle.
    """

    cycles: list[tuple[int, ...]]
    dag_nodes: list[tuple[str, int]]
    dag_arcs: list[tuple[tuple[str, int], tuple[str, int]]]
    topo_order: list[tuple[str, int]]
    scc_of_cycle: list[int] = field(default_factory=list)


@dataclass
class NotACactus:
    reason: str
    witness: Optional[tuple] = None

    def __bool__(self):
        return False


def _extract_cycles(g: Digraph, comp: list[int], comp_id: list[int]):
    """Peel simple cycles off one SCC by DFS; returns (cycles, arcs left on no cycle)."""
    cid = comp_id[comp[0]]
    out = {v: [w for w in g.out[v] if comp_id[w] == cid] for v in comp}
    ptr = {v: 0 for v in comp}
    used: set[tuple[int, int]] = set()
    dead: set[int] = set()
    cycles: list[tuple[int, ...]] = []
    leftover: list[tuple[int, int]] = []

    def next_arc(v):
        lst = out[v]
        while ptr[v] < len(lst) and (v, lst[ptr[v]]) in used:
            ptr[v] += 1
        return lst[ptr[v]] if ptr[v] < len(lst) else None

    for start in comp:
        while next_arc(start) is not None:
            path = [start]
            pos = {start: 0}
            while path:
                v = path[-1]
                w = next_arc(v)
                if w is None:
                    dead.add(v)
                    del pos[v]
                    path.pop()
                elif w in pos:
                    cut = pos[w]
                    cyc = path[cut:]
                    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                        used.add((a, b))
                    cycles.append(tuple(cyc))
                    for x in path[cut + 1:]:
                        del pos[x]
                    del path[cut + 1:]
                elif w in dead:
                    used.add((v, w))
                    leftover.append((v, w))
                else:
                    pos[w] = len(path)
                    path.append(w)
    return cycles, leftover


def _bfs_cycle_order(cycles: list[tuple[int, ...]]) -> list[int]:
    """Order cycles of one SCC breadth-first over the vertex/cycle incidence tree."""
    at: dict[int, list[int]] = {}
    for i, cyc in enumerate(cycles):
        for v in cyc:
            at.setdefault(v, []).append(i)
    first = min(range(len(cycles)), key=lambda i: min(cycles[i]))
    order = [first]
    seen = {first}
    head = 0
    while head < len(order):
        i = order[head]
        head += 1
        for v in sorted(cycles[i]):
            for j in at[v]:
                if j not in seen:
                    seen.add(j)
                    order.append(j)
    return order


def cactus_decompose(g: Digraph) -> TUnion[CycleDecomposition, NotACactus]:
    """Split ``g`` into arc-disjoint simple cycles, or report why it is no cactus forest."""
    sccs = list(reversed(scc_decompose(g)))  # topological order
    comp_id = [0] * (g.n + 1)
    for i, comp in enumerate(sccs):
        for v in comp:
            comp_id[v] = i
    cycles: list[tuple[int, ...]] = []
    scc_of_cycle: list[int] = []
    for ci, comp in enumerate(sccs):
        if len(comp) < 2:
            continue
        found, leftover = _extract_cycles(g, comp, comp_id)
        if leftover:
            return NotACactus("arc inside a strong component lies on more than one cycle", leftover[0])
        shared: dict[tuple[int, int], list[int]] = {}
        at: dict[int, list[int]] = {}
        for i, cyc in enumerate(found):
            for v in cyc:
                for j in at.get(v, ()):
                    shared.setdefault((j, i), []).append(v)
                at.setdefault(v, []).append(i)
        for (i, j), common in shared.items():
            if len(common) > 1:
                return NotACactus("two cycles share more than one vertex", (found[i], found[j]))
        # the vertex/cycle incidence graph of a cactus component is a tree
        if sum(map(len, found)) != len(comp) + len(found) - 1:
            return NotACactus("cycles of a strong component do not form a tree", tuple(comp))
        for i in _bfs_cycle_order(found):
            cycles.append(found[i])
            scc_of_cycle.append(ci)
    cycle_arcs = {(a, b) for cyc in cycles for a, b in zip(cyc, cyc[1:] + cyc[:1])}
    rest = Digraph(g.n, g.arcs - cycle_arcs)
    check = is_acyclic(rest)
    if not check:
        return NotACactus("arcs outside the extracted cycles form a cycle", tuple(check.witness))

    on_cycle: dict[int, list[int]] = {}
    for i, cyc in enumerate(cycles):
        for v in cyc:
            on_cycle.setdefault(v, []).append(i)
    nodes = [("cycle", i) for i in range(len(cycles))]
    nodes += [("vertex", v) for v in g.vertices if v not in on_cycle]

    def node_of(v):
        return ("vertex", v) if v not in on_cycle else None

    arcs = set()
    for v, idx in on_cycle.items():
        for a in idx:
            for b in idx:
                if a < b:
                    arcs.add((("cycle", a), ("cycle", b)))
    for u, v in g.arcs:
        nu, nv = node_of(u), node_of(v)
        if nu is None and nv is None:
            continue
        for a in [nu] if nu else [("cycle", i) for i in on_cycle[u]]:
            for b in [nv] if nv else [("cycle", i) for i in on_cycle[v]]:
                arcs.add((a, b))
    topo = _topo_nodes(nodes, arcs, g, comp_id, cycles)
    if topo is None:
        return NotACactus("auxiliary cycle DAG is not acyclic")
    return CycleDecomposition(cycles, nodes, sorted(arcs), topo, scc_of_cycle)


def _topo_nodes(nodes, arcs, g, comp_id, cycles):
    def rank(node):
        kind, x = node
        scc = comp_id[cycles[x][0]] if kind == "cycle" else comp_id[x]
        return (scc, 0 if kind == "cycle" else 1, x)

    succ: dict = {nd: [] for nd in nodes}
    indeg = {nd: 0 for nd in nodes}
    for a, b in arcs:
        succ[a].append(b)
        indeg[b] += 1
    heap = [(rank(nd), nd) for nd in nodes if indeg[nd] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, nd = heapq.heappop(heap)
        order.append(nd)
        for nxt in succ[nd]:
            indeg[nxt] -= 1
            if indeg[nxt] == 0:
                heapq.heappush(heap, (rank(nxt), nxt))
    return order if len(order) == len(nodes) else None


def _recolor_scc_brute(g: Digraph, comp: list[int], colors: list[int]) -> None:
    from .oracle import brute_force_dcn

    sub, back = g.induced(comp)
    _, witness = brute_force_dcn(sub, max_r=2)
    for new_v, c in enumerate(witness.colors, 1):
        colors[back[new_v]] = c


def cactus_color(g: Digraph) -> tuple[int, Coloring]:
    """Optimal acyclic coloring of a directed cactus forest (one or two colors)."""
    if is_acyclic(g):
        return 1, Coloring((1,) * g.n)
    dec = cactus_decompose(g)
    if isinstance(dec, NotACactus):
        raise NotACactusError(dec.reason)
    colors = [0] * (g.n + 1)
    processed: list[int] = []
    on_cycle: dict[int, list[int]] = {}
    for i, cyc in enumerate(dec.cycles):
        for v in cyc:
            on_cycle.setdefault(v, []).append(i)
    fallback: set[int] = set()
    for kind, x in dec.topo_order:
        if kind == "vertex":
            colors[x] = 2
            continue
        cyc = dec.cycles[x]
        if any(colors[v] == 1 for v in cyc):
            pass
        elif any(colors[v] == 0 for v in cyc):
            colors[min(v for v in cyc if colors[v] == 0)] = 1
        else:
            # every vertex already carries color 2: flip one whose other cycles keep a 2
            done = set(processed)
            for v in sorted(cyc):
                others = [j for j in on_cycle[v] if j != x and j in done]
                if all(any(colors[w] == 2 for w in dec.cycles[j] if w != v) for j in others):
                    colors[v] = 1
                    break
            else:
                fallback.add(dec.scc_of_cycle[x])
        for v in cyc:
            if colors[v] == 0:
                colors[v] = 2
        processed.append(x)

    result = Coloring(tuple(colors[1:]))
    if fallback or not is_valid_acyclic_coloring(g, result):
        sccs = list(reversed(scc_decompose(g)))
        bad = set(fallback)
        for ci, comp in enumerate(sccs):
            if len(comp) > 1 and any(
                not is_acyclic(g, [v for v in comp if colors[v] == c]) for c in (1, 2)
            ):
                bad.add(ci)
        for ci in sorted(bad):
            _recolor_scc_brute(g, sccs[ci], colors)
        result = Coloring(tuple(colors[1:]))
    return 2, result


# -- classification ------------------------------------------------------------

def classify(g: Digraph) -> dict[str, object]:
    """Cheap structural facts and the bounds on the dichromatic number they imply."""
    dag = bool(is_acyclic(g))
    dec = cactus_decompose(g)
    cactus = not isinstance(dec, NotACactus)
    largest_scc = max((len(c) for c in scc_decompose(g)), default=0)
    if dag:
        lower = upper = min(1, g.n)
    else:
        lower = 2
        upper = 2 if cactus else largest_scc
    return {
        "n": g.n,
        "m": g.m,
        "dag": dag,
        "symmetric": is_symmetric(g),
        "cactus_forest": cactus,
        "largest_scc": largest_scc,
        "chi_lower": lower,
        "chi_upper": upper,
    }
