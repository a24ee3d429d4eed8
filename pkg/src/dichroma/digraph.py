"""Finite simple digraphs on vertices ``1..n`` and the predicates the solvers share."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

from .exceptions import (
    DuplicateArcError,
    PartialColoringError,
    SelfLoopError,
    VertexOutOfRangeError,
)

Arc = tuple[int, int]


@dataclass(frozen=True)
class Digraph:
    """Immutable simple digraph. Vertices are the integers ``1..n``."""

    n: int
    arcs: frozenset[Arc]
    out: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    inc: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        out = [[] for _ in range(self.n + 1)]
        inc = [[] for _ in range(self.n + 1)]
        for u, v in sorted(self.arcs):
            if u == v:
                raise SelfLoopError(u)
            for w in (u, v):
                if not 1 <= w <= self.n:
                    raise VertexOutOfRangeError(w, self.n)
            out[u].append(v)
            inc[v].append(u)
        object.__setattr__(self, "out", tuple(map(tuple, out)))
        object.__setattr__(self, "inc", tuple(map(tuple, inc)))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def induced(self, vertices: Iterable[int]) -> tuple["Digraph", list[int]]:
        """Induced subdigraph, renumbered; also returns new-id -> old-id (index 0 unused)."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep, 1)}
        arcs = frozenset((index[u], index[v]) for u, v in self.arcs if u in index and v in index)
        return Digraph(len(keep), arcs), [0] + keep


@dataclass(frozen=True)
class LabeledDigraph:
    """A digraph plus a total label map ``vertex -> 1..k``.

    ``labels[v - 1]`` is the label of vertex ``v``; ``names`` optionally keeps
    the expression-level vertex names in the same order.
    """

    graph: Digraph
    k: int
    labels: tuple[int, ...]
    names: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("label alphabet size must be at least 1")
        if len(self.labels) != self.graph.n:
            raise ValueError("every vertex needs exactly one label")
        for lab in self.labels:
            if not 1 <= lab <= self.k:
                raise ValueError(f"label {lab} outside 1..{self.k}")

    def label(self, v: int) -> int:
        return self.labels[v - 1]


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> color; ``colors[v - 1]`` is the color of ``v``."""

    colors: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(set(self.colors))

    def __getitem__(self, v: int) -> int:
        return self.colors[v - 1]

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors, 1):
            out.setdefault(c, []).append(v)
        return dict(sorted(out.items()))

    def is_compact(self) -> bool:
        """True iff exactly the colors ``1..r`` are used."""
        return set(self.colors) == set(range(1, self.r + 1))


def build_digraph(n: int, arc_list: Iterable[Sequence[int]]) -> Digraph:
    """Build a digraph, rejecting self-loops, repeated arcs and bad endpoints."""
    seen: set[Arc] = set()
    for u, v in arc_list:
        u, v = int(u), int(v)
        if u == v:
            raise SelfLoopError(u)
        for w in (u, v):
            if not 1 <= w <= n:
                raise VertexOutOfRangeError(w, n)
        if (u, v) in seen:
            raise DuplicateArcError(u, v)
        seen.add((u, v))
    return Digraph(n, frozenset(seen))


def _find_cycle(g: Digraph, allowed: Optional[set[int]] = None) -> Optional[list[int]]:
    """Iterative DFS; returns a simple cycle inside ``allowed`` or None."""
    verts = sorted(allowed) if allowed is not None else list(g.vertices)
    inside = set(verts)
    state = {v: 0 for v in verts}  # 0 new, 1 on stack, 2 done
    for root in verts:
        if state[root]:
            continue
        stack = [(root, iter(g.out[root]))]
        path = [root]
        state[root] = 1
        while stack:
            v, it = stack[-1]
            for w in it:
                if w not in inside:
                    continue
                if state[w] == 1:
                    return path[path.index(w):]
                if state[w] == 0:
                    state[w] = 1
                    stack.append((w, iter(g.out[w])))
                    path.append(w)
                    break
            else:
                state[v] = 2
                stack.pop()
                path.pop()
    return None


def topological_order(g: Digraph, allowed: Optional[Iterable[int]] = None) -> Optional[list[int]]:
    """Kahn's algorithm; None when the (sub)digraph has a cycle."""
    verts = sorted(allowed) if allowed is not None else list(g.vertices)
    inside = set(verts)
    indeg = {v: 0 for v in verts}
    for v in verts:
        for w in g.out[v]:
            if w in inside:
                indeg[w] += 1
    ready = [v for v in verts if indeg[v] == 0]
    order = []
    while ready:
        v = ready.pop()
        order.append(v)
        for w in g.out[v]:
            if w in inside:
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
    return order if len(order) == len(verts) else None


class Acyclicity(NamedTuple):
    acyclic: bool
    witness: list[int]  # topological order when acyclic, simple cycle otherwise

    def __bool__(self):
        return self.acyclic


def is_acyclic(g: Digraph, allowed: Optional[Iterable[int]] = None) -> Acyclicity:
    """Test ``g`` (or ``g[allowed]``) for directed cycles, with a checkable witness."""
    allowed_set = set(allowed) if allowed is not None else None
    order = topological_order(g, allowed_set)
    if order is not None:
        return Acyclicity(True, order)
    return Acyclicity(False, _find_cycle(g, allowed_set))


def scc_decompose(g: Digraph) -> list[list[int]]:
    """Tarjan's algorithm, iterative. Components come out in reverse topological order."""
    index = [0] * (g.n + 1)
    low = [0] * (g.n + 1)
    on_stack = [False] * (g.n + 1)
    counter = 1
    stack: list[int] = []
    comps: list[list[int]] = []
    for root in g.vertices:
        if index[root]:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            succ = g.out[v]
            while i < len(succ):
                w = succ[i]
                i += 1
                if not index[w]:
                    work.append((v, i))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comps


def symmetric_part(g: Digraph) -> Digraph:
    return Digraph(g.n, frozenset((u, v) for u, v in g.arcs if (v, u) in g.arcs))


def underlying_undirected(g: Digraph) -> tuple[int, frozenset[frozenset[int]]]:
    """Vertex count and edge set (unordered pairs) after dropping orientations."""
    return g.n, frozenset(frozenset(a) for a in g.arcs)


def is_symmetric(g: Digraph) -> bool:
    return all((v, u) in g.arcs for u, v in g.arcs)


def reach_pairs(lg: LabeledDigraph, cls: Iterable[int]) -> frozenset[tuple[int, int]]:
    """Label pairs ``(a, b)`` such that a b-vertex is reachable from an a-vertex in ``g[cls]``.

    The trivial path counts, so ``(label(u), label(u))`` is present for every ``u``.
    """
    members = set(cls)
    g = lg.graph
    pairs = set()
    for u in members:
        seen = {u}
        todo = [u]
        while todo:
            x = todo.pop()
            for y in g.out[x]:
                if y in members and y not in seen:
                    seen.add(y)
                    todo.append(y)
        a = lg.label(u)
        pairs.update((a, lg.label(v)) for v in seen)
    return frozenset(pairs)


class ColoringCheck(NamedTuple):
    valid: bool
    color: Optional[int] = None
    cycle: Optional[list[int]] = None

    def __bool__(self):
        return self.valid


def is_valid_acyclic_coloring(g: Digraph, c: Coloring) -> ColoringCheck:
    """Every color class must induce an acyclic subdigraph."""
    if len(c.colors) != g.n:
        raise PartialColoringError(f"coloring covers {len(c.colors)} of {g.n} vertices")
    for color, members in c.classes().items():
        res = is_acyclic(g, members)
        if not res:
            return ColoringCheck(False, color, res.witness)
    return ColoringCheck(True)
