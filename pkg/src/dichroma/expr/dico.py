"""(Extended) di-co-expressions.

Grammar::

    EXPR := "v(" NAME ")" | "union(" EXPR "," EXPR ")" | "series(" EXPR "," EXPR ")"
          | "order(" EXPR "," EXPR ")" | "dunion(" EXPR "," EXPR ",[" ARCS "])"
    ARCS := empty | NAME ">" NAME ("," NAME ">" NAME)*

``dunion`` carries its cross arcs explicitly; every listed arc must run from a
vertex of the left operand to a vertex of the right operand.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union as TUnion

from ..digraph import Digraph
from ..exceptions import DUnionArcDirectionError, DuplicateVertexNameError, ExprSyntaxError
from . import cw
from ._calls import expect_args, parse_calls, postorder, strip_comments, tokenize


@dataclass(frozen=True)
class Vertex:
    name: str

    @property
    def children(self) -> tuple:
        return ()


@dataclass(frozen=True)
class _Binary:
    left: "DiCoNode"
    right: "DiCoNode"

    @property
    def children(self) -> tuple:
        return (self.left, self.right)


class Union(_Binary):
    """Disjoint union: no arcs between the sides."""


class Series(_Binary):
    """All arcs in both directions between the sides."""


class Order(_Binary):
    """All arcs from the left side to the right side."""


@dataclass(frozen=True)
class DUnion(_Binary):
    """Directed union: the listed left-to-right arcs only."""

    arcs: tuple[tuple[str, str], ...] = ()


DiCoNode = TUnion[Vertex, Union, Series, Order, DUnion]

_OPS = {Union: "union", Series: "series", Order: "order", DUnion: "dunion"}


def leaf_names(root: DiCoNode) -> list[str]:
    return [x.name for x in postorder(root) if isinstance(x, Vertex)]


def validate_dico(root: DiCoNode) -> None:
    """Check unique names and that dunion arcs point left to right."""
    stack: list[set[str]] = []
    for x in postorder(root):
        if isinstance(x, Vertex):
            stack.append({x.name})
            continue
        right = stack.pop()
        left = stack.pop()
        dup = left & right
        if dup:
            raise DuplicateVertexNameError(min(dup))
        if isinstance(x, DUnion):
            for u, v in x.arcs:
                if u not in left or v not in right:
                    raise DUnionArcDirectionError(u, v)
        left |= right
        stack.append(left)


def _build_v(args, pos):
    expect_args(args, ["atom"], "v", pos)
    return Vertex(args[0].as_name())


def _build_binary(cls, op):
    def build(args, pos):
        expect_args(args, ["expr", "expr"], op, pos)
        return cls(args[0], args[1])

    return build


def _build_dunion(args, pos):
    expect_args(args, ["expr", "expr", "arcs"], "dunion", pos)
    return DUnion(args[0], args[1], tuple((u.text, v.text) for u, v in args[2]))


_BUILDERS = {
    "v": _build_v,
    "union": _build_binary(Union, "union"),
    "series": _build_binary(Series, "series"),
    "order": _build_binary(Order, "order"),
    "dunion": _build_dunion,
}


def parse_dico(text: str) -> DiCoNode:
    clean = strip_comments(text)
    tokens = tokenize(clean)
    if not tokens:
        raise ExprSyntaxError("empty expression", len(clean))
    root = parse_calls(tokens, _BUILDERS, len(clean))
    validate_dico(root)
    return root


def format_dico(root: DiCoNode) -> str:
    out: list[str] = []
    for x in postorder(root):
        if isinstance(x, Vertex):
            out.append(f"v({x.name})")
            continue
        right = out.pop()
        left = out.pop()
        if isinstance(x, DUnion):
            arcs = ",".join(f"{u}>{v}" for u, v in x.arcs)
            out.append(f"dunion({left},{right},[{arcs}])")
        else:
            out.append(f"{_OPS[type(x)]}({left},{right})")
    return out[0]


def eval_dico(root: DiCoNode) -> Digraph:
    """Materialize the digraph; vertex ids follow left-to-right leaf order."""
    validate_dico(root)
    ids = {name: i for i, name in enumerate(leaf_names(root), 1)}
    arcs: set[tuple[int, int]] = set()
    stack: list[list[int]] = []
    for x in postorder(root):
        if isinstance(x, Vertex):
            stack.append([ids[x.name]])
            continue
        right = stack.pop()
        left = stack[-1]
        if isinstance(x, Series):
            for u in left:
                for v in right:
                    arcs.add((u, v))
                    arcs.add((v, u))
        elif isinstance(x, Order):
            arcs.update((u, v) for u in left for v in right)
        elif isinstance(x, DUnion):
            arcs.update((ids[u], ids[v]) for u, v in x.arcs)
        left.extend(right)
    return Digraph(len(ids), frozenset(arcs))


def dico_to_cw(root: DiCoNode) -> "cw.CwExpr":
    """Translate a union/series/order expression into an equivalent 2-expression.

    Every translated subexpression leaves all its vertices on label 1.
    """
    out: list = []
    for x in postorder(root):
        if isinstance(x, Vertex):
            out.append(cw.Create(x.name, 1))
            continue
        if isinstance(x, DUnion):
            raise ValueError("dunion has no fixed 2-expression translation")
        right = out.pop()
        left = out.pop()
        if isinstance(x, Union):
            out.append(cw.Union(left, right))
            continue
        node = cw.EdgeInsert(1, 2, cw.Union(left, cw.Relabel(1, 2, right)))
        if isinstance(x, Series):
            node = cw.EdgeInsert(2, 1, node)
        out.append(cw.Relabel(2, 1, node))
    return cw.CwExpr(out[0], 2)
