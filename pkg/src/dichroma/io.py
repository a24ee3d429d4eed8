"""Readers and writers for the ``.dg`` digraph and ``.col`` coloring text formats.

``.dg``: optional ``#`` comment lines, then ``n m``, then ``m`` lines ``u v``.
``.col``: one ``v c`` line per vertex.
"""
from __future__ import annotations

from pathlib import Path
from typing import Mapping, Union

from .digraph import Coloring, Digraph, build_digraph
from .exceptions import FormatError, PartialColoringError

PathLike = Union[str, Path]


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, stripped.split()))
    return rows


def _ints(tokens: list[str], count: int, lineno: int) -> list[int]:
    if len(tokens) != count:
        raise FormatError(f"line {lineno}: expected {count} integers, got {len(tokens)} tokens")
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"line {lineno}: non-integer token in {' '.join(tokens)!r}") from None


def parse_dg(text: str) -> Digraph:
    rows = _content_lines(text)
    if not rows:
        raise FormatError("missing 'n m' header line")
    lineno, header = rows[0]
    n, m = _ints(header, 2, lineno)
    if len(rows) - 1 != m:
        raise FormatError(f"header announces {m} arcs, found {len(rows) - 1}")
    return build_digraph(n, [_ints(tok, 2, ln) for ln, tok in rows[1:]])


def format_dg(g: Digraph, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.sorted_arcs())
    return "\n".join(lines) + "\n"


def coloring_from_mapping(n: int, mapping: Mapping[int, int]) -> Coloring:
    missing = [v for v in range(1, n + 1) if v not in mapping]
    if missing:
        raise PartialColoringError(f"vertices without a color: {missing}")
    extra = sorted(set(mapping) - set(range(1, n + 1)))
    if extra:
        raise PartialColoringError(f"colors given for unknown vertices: {extra}")
    colors = tuple(int(mapping[v]) for v in range(1, n + 1))
    if any(c < 1 for c in colors):
        raise FormatError("colors must be positive integers")
    return Coloring(colors)


def parse_col(text: str, n: int) -> Coloring:
    mapping: dict[int, int] = {}
    for lineno, tokens in _content_lines(text):
        v, c = _ints(tokens, 2, lineno)
        if v in mapping:
            raise FormatError(f"line {lineno}: vertex {v} colored twice")
        mapping[v] = c
    return coloring_from_mapping(n, mapping)


def format_col(c: Coloring) -> str:
    return "".join(f"{v} {col}\n" for v, col in enumerate(c.colors, 1))


def read_dg(path: PathLike) -> Digraph:
    return parse_dg(Path(path).read_text())


def write_dg(g: Digraph, path: PathLike, comment: str | None = None) -> None:
    Path(path).write_text(format_dg(g, comment))


def read_col(path: PathLike, n: int) -> Coloring:
    return parse_col(Path(path).read_text(), n)


def write_col(c: Coloring, path: PathLike) -> None:
    Path(path).write_text(format_col(c))
