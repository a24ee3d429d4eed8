"""Dichromatic number by dynamic programming over a directed clique-width expression.

For every node of the expression tree we keep the set of *signatures* of all
partitions of the current vertex set into acyclic classes. A signature is the
multiset of per-class reach sets, where the reach set of a class holds every
label pair ``(a, b)`` such that some b-vertex is reachable from some a-vertex
inside the class. The minimum number of classes at the root is the answer.

Representation
--------------
* a reach set is a tuple of ``(a, b)`` pairs in lexicographic order;
* a signature is a tuple of reach sets ordered by ``(len, pairs)``;
* a :class:`SigSet` maps each signature to one provenance record, enough to
  rebuild one witness partition top-down.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Optional, Union as TUnion

from .digraph import Coloring
from .exceptions import EqualLabelsError, LabelOutOfRangeError, SignatureCapExceeded
from .expr.cw import Create, CwExpr, CwNode, EdgeInsert, Relabel, Union, format_cw_node
from .expr._calls import postorder

ReachSet = tuple[tuple[int, int], ...]
Signature = tuple[ReachSet, ...]

DEFAULT_SIG_CAP = 10**6
SIG_CAP_ENV = "DICHROMA_SIG_CAP"


def default_sig_cap() -> int:
    raw = os.environ.get(SIG_CAP_ENV)
    return int(raw) if raw else DEFAULT_SIG_CAP


def _class_key(cls: ReachSet):
    return (len(cls), cls)


def canonical(classes) -> tuple[Signature, tuple[int, ...]]:
    """Sort classes into canonical order; also return, per output slot, the input index."""
    normalized = [tuple(sorted(set(c))) for c in classes]
    order = sorted(range(len(normalized)), key=lambda i: _class_key(normalized[i]))
    return tuple(normalized[i] for i in order), tuple(order)


def signature_bound(n: int, k: int) -> int:
    """Upper bound on the number of distinct signatures for ``n`` vertices and ``k`` labels."""
    return (n + 1) ** (2 ** (k * k) - 1)


# Provenance records. ``origin[i]`` describes the i-th class of the signature.
@dataclass(frozen=True)
class Leaf:
    pass


@dataclass(frozen=True)
class Merge:
    left: Signature
    right: Signature
    origin: tuple[tuple[int, int], ...]  # (left class index | -1, right class index | -1)


@dataclass(frozen=True)
class Derived:
    parent: Signature
    origin: tuple[int, ...]  # parent class index


Provenance = TUnion[Leaf, Merge, Derived]


@dataclass
class SigSet:
    """Distinct signatures with one provenance record each, in insertion order."""

    sigs: dict[Signature, Provenance] = field(default_factory=dict)

    def __len__(self):
        return len(self.sigs)

    def __iter__(self):
        return iter(self.sigs)

    def __contains__(self, sig):
        return sig in self.sigs

    def add(self, sig: Signature, prov: Provenance) -> None:
        self.sigs.setdefault(sig, prov)

    def as_set(self) -> frozenset[Signature]:
        return frozenset(self.sigs)

    def sorted(self) -> list[Signature]:
        return sorted(self.sigs, key=lambda s: (len(s), s))

    def min_classes(self) -> int:
        return min(len(s) for s in self.sigs)


def _check_cap(sigset: SigSet, cap: Optional[int]) -> SigSet:
    cap = default_sig_cap() if cap is None else cap
    if len(sigset) > cap:
        raise SignatureCapExceeded(len(sigset), cap)
    return sigset


def sig_leaf(a: int, k: Optional[int] = None) -> SigSet:
    if a < 1 or (k is not None and a > k):
        raise LabelOutOfRangeError(a, k if k is not None else "k")
    out = SigSet()
    out.add((((a, a),),), Leaf())
    return out


def _matchings(left: Signature, right: Signature):
    """Yield every partial matching between the classes of two signatures.

    Each item is a list of ``(li, ri)`` with -1 marking an unmatched side.
    Matchings that only permute equal classes are generated once.
    """
    slots: dict[ReachSet, list[int]] = {}
    for j, cls in enumerate(right):
        slots.setdefault(cls, []).append(j)
    values = list(slots)
    used = {v: 0 for v in values}
    choice: list[int] = [-1] * len(left)  # index into ``values`` or -1
    pairs: list[tuple[int, int]] = []

    def rec(i: int):
        if i == len(left):
            matched = {ri for _, ri in pairs if ri >= 0}
            yield pairs + [(-1, j) for j in range(len(right)) if j not in matched]
            return
        same_as_prev = i > 0 and left[i] == left[i - 1]
        prev = choice[i - 1] if same_as_prev else -1
        # equal left classes: unmatched ones first, then non-decreasing partner values
        if not (same_as_prev and prev >= 0):
            choice[i] = -1
            pairs.append((i, -1))
            yield from rec(i + 1)
            pairs.pop()
        start = prev if (same_as_prev and prev >= 0) else 0
        for vi in range(start, len(values)):
            v = values[vi]
            if used[v] == len(slots[v]):
                continue
            j = slots[v][used[v]]
            used[v] += 1
            choice[i] = vi
            pairs.append((i, j))
            yield from rec(i + 1)
            pairs.pop()
            used[v] -= 1
        choice[i] = -1

    yield from rec(0)


def sig_union(fx: SigSet, fy: SigSet, cap: Optional[int] = None) -> SigSet:
    """Signatures of the disjoint union: merge any partial matching of classes."""
    out = SigSet()
    for mx in fx:
        for my in fy:
            for pairs in _matchings(mx, my):
                classes = []
                for li, ri in pairs:
                    if li >= 0 and ri >= 0:
                        classes.append(mx[li] + my[ri])
                    elif li >= 0:
                        classes.append(mx[li])
                    else:
                        classes.append(my[ri])
                sig, order = canonical(classes)
                if sig not in out:
                    out.add(sig, Merge(mx, my, tuple(pairs[i] for i in order)))
        _check_cap(out, cap)
    return out


def _close(cls: ReachSet, a: int, b: int) -> ReachSet:
    sources = [x for x, y in cls if y == a]
    targets = [y for x, y in cls if x == b]
    if not sources or not targets:
        return cls
    return tuple(sorted(set(cls).union((x, y) for x in sources for y in targets)))


def sig_edge_insert(f: SigSet, a: int, b: int, cap: Optional[int] = None, debug: bool = False) -> SigSet:
    """Drop signatures with a class containing ``(b, a)``; close the rest under the new arcs."""
    if a == b:
        raise EqualLabelsError("add", a)
    out = SigSet()
    for sig in f:
        if any((b, a) in cls for cls in sig):
            continue
        closed = [_close(cls, a, b) for cls in sig]
        if debug:
            assert all(_close(c, a, b) == c for c in closed), "closure was not a fixed point"
        new, order = canonical(closed)
        out.add(new, Derived(sig, order))
    return _check_cap(out, cap)


def sig_relabel(f: SigSet, a: int, b: int, cap: Optional[int] = None) -> SigSet:
    if a == b:
        raise EqualLabelsError("rel", a)

    def rho(c):
        return b if c == a else c

    out = SigSet()
    for sig in f:
        new, order = canonical([[(rho(x), rho(y)) for x, y in cls] for cls in sig])
        out.add(new, Derived(sig, order))
    return _check_cap(out, cap)


@dataclass
class DPNode:
    """One expression node with its signature set and subtree size."""

    node: CwNode
    sigset: SigSet
    n: int
    children: tuple[int, ...] = ()


@dataclass
class DPTrace:
    """Per-node results of one bottom-up run, in post-order (root last)."""

    expr: CwExpr
    nodes: list[DPNode]

    @property
    def root(self) -> DPNode:
        return self.nodes[-1]


def run_dp(e: CwExpr, cap: Optional[int] = None, debug: bool = False) -> DPTrace:
    """Compute the signature set of every node bottom-up."""
    cap = default_sig_cap() if cap is None else cap
    nodes: list[DPNode] = []
    stack: list[int] = []
    for x in postorder(e.root):
        if isinstance(x, Create):
            rec = DPNode(x, sig_leaf(x.label, e.k), 1)
        elif isinstance(x, Union):
            r = stack.pop()
            l = stack.pop()
            rec = DPNode(x, sig_union(nodes[l].sigset, nodes[r].sigset, cap), nodes[l].n + nodes[r].n, (l, r))
        else:
            c = stack.pop()
            if isinstance(x, EdgeInsert):
                s = sig_edge_insert(nodes[c].sigset, x.a, x.b, cap, debug)
            else:
                s = sig_relabel(nodes[c].sigset, x.a, x.b, cap)
            rec = DPNode(x, s, nodes[c].n, (c,))
        nodes.append(rec)
        stack.append(len(nodes) - 1)
    return DPTrace(e, nodes)


def extract_coloring(trace: DPTrace, sig: Signature) -> Coloring:
    """Follow provenance from ``sig`` at the root down to the leaves.

    Class ``i`` of the root signature becomes color ``i + 1``.
    """
    colors: list[int] = []
    leaf_color: dict[int, int] = {}
    # (node index, signature at that node, color of each class)
    todo = [(len(trace.nodes) - 1, sig, tuple(range(1, len(sig) + 1)))]
    while todo:
        idx, s, cols = todo.pop()
        rec = trace.nodes[idx]
        prov = rec.sigset.sigs[s]
        if isinstance(prov, Leaf):
            leaf_color[idx] = cols[0]
        elif isinstance(prov, Merge):
            lcols = [0] * len(prov.left)
            rcols = [0] * len(prov.right)
            for slot, (li, ri) in enumerate(prov.origin):
                if li >= 0:
                    lcols[li] = cols[slot]
                if ri >= 0:
                    rcols[ri] = cols[slot]
            l, r = rec.children
            todo.append((l, prov.left, tuple(lcols)))
            todo.append((r, prov.right, tuple(rcols)))
        else:
            pcols = [0] * len(prov.parent)
            for slot, pi in enumerate(prov.origin):
                pcols[pi] = cols[slot]
            todo.append((rec.children[0], prov.parent, tuple(pcols)))
    # post-order leaf indices increase left to right, matching eval_cw's vertex ids
    for idx in sorted(leaf_color):
        colors.append(leaf_color[idx])
    return Coloring(tuple(colors))


def solve_dcn(e: CwExpr, cap: Optional[int] = None) -> tuple[int, Coloring]:
    """Dichromatic number of ``eval_cw(e)`` and an optimal acyclic coloring."""
    trace = run_dp(e, cap)
    best = min(trace.root.sigset.sorted(), key=len)
    return len(best), extract_coloring(trace, best)


def decide_dcn_r(e: CwExpr, r: int, cap: Optional[int] = None) -> bool:
    """Whether an acyclic coloring with at most ``r`` colors exists."""
    if r < 1:
        raise ValueError("r must be at least 1")
    return run_dp(e, cap).root.sigset.min_classes() <= r


def format_signature(sig: Signature) -> str:
    classes = ",".join("{" + ",".join(f"({a},{b})" for a, b in cls) + "}" for cls in sig)
    return f"<{classes}>"


def _describe(node: CwNode) -> str:
    if isinstance(node, Create):
        return f"v({node.name},{node.label})"
    if isinstance(node, Union):
        return "union"
    if isinstance(node, EdgeInsert):
        return f"add({node.a},{node.b})"
    return f"rel({node.a},{node.b})"


def dump_sigsets(trace: DPTrace) -> str:
    """Stable text form: a header per node (post-order), then one signature per line."""
    lines = []
    for i, rec in enumerate(trace.nodes):
        lines.append(f"node {i} {_describe(rec.node)} n={rec.n} size={len(rec.sigset)}")
        lines.append(f"  expr {format_cw_node(rec.node)}")
        lines.extend("  " + format_signature(s) for s in rec.sigset.sorted())
    return "\n".join(lines) + "\n"
