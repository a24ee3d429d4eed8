"""Directed clique-width k-expressions: AST, parser, printer and evaluator.

Grammar (whitespace-insensitive, ``#`` comments allowed)::

    FILE := ["k=" INT] EXPR
    EXPR := "v(" NAME "," INT ")" | "union(" EXPR "," EXPR ")"
          | "add(" INT "," INT "," EXPR ")" | "rel(" INT "," INT "," EXPR ")"
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union as TUnion

from ..digraph import Digraph, LabeledDigraph
from ..exceptions import (
    DuplicateVertexNameError,
    EqualLabelsError,
    ExprSyntaxError,
    LabelOutOfRangeError,
)
from ._calls import expect_args, parse_calls, postorder, strip_comments, tokenize


@dataclass(frozen=True)
class Create:
    """``a(v)``: a new vertex ``name`` carrying label ``label``."""

    name: str
    label: int

    def __post_init__(self):
        if self.label < 1:
            raise LabelOutOfRangeError(self.label, "k")

    @property
    def children(self) -> tuple:
        return ()


@dataclass(frozen=True)
class Union:
    left: "CwNode"
    right: "CwNode"

    @property
    def children(self) -> tuple:
        return (self.left, self.right)


@dataclass(frozen=True)
class EdgeInsert:
    """Arcs from every label-``a`` vertex to every label-``b`` vertex."""

    a: int
    b: int
    child: "CwNode"

    def __post_init__(self):
        if self.a == self.b:
            raise EqualLabelsError("add", self.a)

    @property
    def children(self) -> tuple:
        return (self.child,)


@dataclass(frozen=True)
class Relabel:
    """Label ``a`` becomes label ``b``."""

    a: int
    b: int
    child: "CwNode"

    def __post_init__(self):
        if self.a == self.b:
            raise EqualLabelsError("rel", self.a)

    @property
    def children(self) -> tuple:
        return (self.child,)


CwNode = TUnion[Create, Union, EdgeInsert, Relabel]


def node_labels(node: CwNode) -> tuple[int, ...]:
    if isinstance(node, Create):
        return (node.label,)
    if isinstance(node, (EdgeInsert, Relabel)):
        return (node.a, node.b)
    return ()


def max_label(root: CwNode) -> int:
    return max(max(node_labels(x), default=1) for x in postorder(root))


def leaf_names(root) -> list[str]:
    return [x.name for x in postorder(root) if not x.children]


@dataclass(frozen=True)
class CwExpr:
    """A well-formed k-expression: the tree plus its declared label count."""

    root: CwNode
    k: int

    def __post_init__(self):
        seen = set()
        for x in postorder(self.root):
            for lab in node_labels(x):
                if not 1 <= lab <= self.k:
                    raise LabelOutOfRangeError(lab, self.k)
            if isinstance(x, Create):
                if x.name in seen:
                    raise DuplicateVertexNameError(x.name)
                seen.add(x.name)

    @classmethod
    def of(cls, root: CwNode, k: Optional[int] = None) -> "CwExpr":
        return cls(root, max_label(root) if k is None else k)

    @property
    def n(self) -> int:
        return sum(1 for x in postorder(self.root) if isinstance(x, Create))


def _build_v(args, pos):
    expect_args(args, ["atom", "atom"], "v", pos)
    return Create(args[0].as_name(), args[1].as_int())


def _build_union(args, pos):
    expect_args(args, ["expr", "expr"], "union", pos)
    return Union(args[0], args[1])


def _build_labeled(cls, op):
    def build(args, pos):
        expect_args(args, ["atom", "atom", "expr"], op, pos)
        a, b = args[0].as_int(), args[1].as_int()
        if a == b:
            raise EqualLabelsError(op, a)
        return cls(a, b, args[2])

    return build


_BUILDERS = {
    "v": _build_v,
    "union": _build_union,
    "add": _build_labeled(EdgeInsert, "add"),
    "rel": _build_labeled(Relabel, "rel"),
}


def parse_cw(text: str) -> CwExpr:
    """Parse a ``.cwx`` expression; ``k`` defaults to the largest label mentioned."""
    clean = strip_comments(text)
    tokens = tokenize(clean)
    k = None
    if len(tokens) >= 3 and tokens[0][0] == "k" and tokens[1][0] == "=":
        if not tokens[2][0].isdigit():
            raise ExprSyntaxError("k= needs an integer", tokens[2][1])
        k = int(tokens[2][0])
        if k < 1:
            raise ExprSyntaxError("k must be at least 1", tokens[2][1])
        tokens = tokens[3:]
    if not tokens:
        raise ExprSyntaxError("empty expression", len(clean))
    root = parse_calls(tokens, _BUILDERS, len(clean))
    return CwExpr.of(root, k)


def format_cw_node(root: CwNode) -> str:
    out: list[str] = []
    for x in postorder(root):
        if isinstance(x, Create):
            out.append(f"v({x.name},{x.label})")
        elif isinstance(x, Union):
            right = out.pop()
            out.append(f"union({out.pop()},{right})")
        elif isinstance(x, EdgeInsert):
            out.append(f"add({x.a},{x.b},{out.pop()})")
        else:
            out.append(f"rel({x.a},{x.b},{out.pop()})")
    return out[0]


def format_cw(e: CwExpr) -> str:
    """Canonical text; the ``k=`` header only appears when it differs from the inferred value."""
    body = format_cw_node(e.root)
    return body if e.k == max_label(e.root) else f"k={e.k}\n{body}"


def eval_cw(e: TUnion[CwExpr, CwNode]) -> LabeledDigraph:
    """Build the labeled digraph; vertex ids follow left-to-right leaf order."""
    if not isinstance(e, CwExpr):
        e = CwExpr.of(e)
    arcs: set[tuple[int, int]] = set()
    names: list[str] = []
    stack: list[dict[int, list[int]]] = []
    for x in postorder(e.root):
        if isinstance(x, Create):
            names.append(x.name)
            stack.append({x.label: [len(names)]})
        elif isinstance(x, Union):
            right = stack.pop()
            left = stack[-1]
            for lab, vs in right.items():
                left.setdefault(lab, []).extend(vs)
        elif isinstance(x, EdgeInsert):
            groups = stack[-1]
            for u in groups.get(x.a, ()):
                for v in groups.get(x.b, ()):
                    arcs.add((u, v))
        else:
            groups = stack[-1]
            moved = groups.pop(x.a, [])
            if moved:
                groups.setdefault(x.b, []).extend(moved)
    labels = [0] * len(names)
    for lab, vs in stack[0].items():
        for v in vs:
            labels[v - 1] = lab
    return LabeledDigraph(Digraph(len(names), frozenset(arcs)), e.k, tuple(labels), tuple(names))
