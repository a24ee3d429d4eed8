"""Graphviz DOT output with vertices filled by color class."""
from __future__ import annotations

from typing import Optional, Sequence

from .digraph import Coloring, Digraph

PALETTE = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
    "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f",
]


def to_dot(g: Digraph, coloring: Optional[Coloring] = None,
           names: Optional[Sequence[str]] = None, title: str = "G") -> str:
    lines = [f'digraph "{title}" {{', "  node [shape=circle, style=filled];"]
    for v in g.vertices:
        label = names[v - 1] if names else str(v)
        if coloring is not None:
            c = coloring[v]
            fill = PALETTE[(c - 1) % len(PALETTE)]
            lines.append(f'  {v} [label="{label}\\n{c}", fillcolor="{fill}"];')
        else:
            lines.append(f'  {v} [label="{label}", fillcolor="white"];')
    for u, v in g.sorted_arcs():
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
