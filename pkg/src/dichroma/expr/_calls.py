"""Tokenizer and iterative call-syntax parser shared by the expression DSLs.

Both grammars are nested calls ``op(arg, arg, ...)`` whose arguments are
atoms, nested calls, or (for ``dunion``) a bracketed ``[x>y, ...]`` arc list.
Parsing uses an explicit stack so deep expressions do not hit the recursion limit.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Iterator

from ..exceptions import ExprSyntaxError

_TOKEN = re.compile(r"\s*(?:([A-Za-z0-9_.]+)|([(),\[\]>=]))")


@dataclass(frozen=True)
class Atom:
    text: str
    pos: int

    def as_int(self) -> int:
        if not self.text.isdigit():
            raise ExprSyntaxError(f"expected an integer, found {self.text!r}", self.pos)
        return int(self.text)

    def as_name(self) -> str:
        return self.text


def strip_comments(text: str) -> str:
    """Blank out ``#`` comments, keeping character offsets intact."""
    return re.sub(r"#[^\n]*", lambda m: " " * len(m.group(0)), text)


def tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = len(text[pos:]) - len(text[pos:].lstrip())
            raise ExprSyntaxError(f"unexpected character {text[pos + stripped]!r}", pos + stripped)
        tok = m.group(1) or m.group(2)
        tokens.append((tok, m.start(m.lastindex)))
        pos = m.end()
    return tokens


Builder = Callable[[list[Any], int], Any]


def parse_calls(tokens: list[tuple[str, int]], builders: dict[str, Builder], text_len: int) -> Any:
    """Parse one call expression; ``builders[op](args, pos)`` constructs each node."""
    toks = tokens
    i = 0

    def peek(j: int) -> tuple[str, int]:
        return toks[j] if j < len(toks) else ("<end>", text_len)

    # frame: [op, pos, args, expecting] where expecting is "arg" or "sep"
    frames: list[list[Any]] = []
    result = None
    while True:
        tok, pos = peek(i)
        if frames and frames[-1][3] == "sep":
            if tok == ",":
                frames[-1][3] = "arg"
                i += 1
                continue
            if tok == ")":
                op, opos, args, _ = frames.pop()
                node = builders[op](args, opos)
                i += 1
                if frames:
                    frames[-1][2].append(node)
                    frames[-1][3] = "sep"
                    continue
                result = node
                break
            raise ExprSyntaxError(f"expected ',' or ')', found {tok!r}", pos)
        # an argument (or the top-level expression) is expected here
        if tok == "[":
            if not frames:
                raise ExprSyntaxError("arc list outside of a call", pos)
            arcs, i = _parse_arc_list(toks, i + 1, text_len)
            frames[-1][2].append(arcs)
            frames[-1][3] = "sep"
            continue
        if tok in ("(", ")", ",", "]", ">", "=", "<end>"):
            raise ExprSyntaxError(f"unexpected {tok!r}", pos)
        nxt, _ = peek(i + 1)
        if nxt == "(":
            if tok not in builders:
                raise ExprSyntaxError(f"unknown operation {tok!r}", pos)
            frames.append([tok, pos, [], "arg"])
            i += 2
            continue
        if not frames:
            raise ExprSyntaxError(f"expected an operation, found {tok!r}", pos)
        frames[-1][2].append(Atom(tok, pos))
        frames[-1][3] = "sep"
        i += 1
    if i < len(toks):
        raise ExprSyntaxError(f"trailing input {toks[i][0]!r}", toks[i][1])
    return result


def _parse_arc_list(toks, i, text_len):
    def peek(j):
        return toks[j] if j < len(toks) else ("<end>", text_len)

    arcs = []
    tok, pos = peek(i)
    if tok == "]":
        return arcs, i + 1
    while True:
        (u, upos), (gt, gpos), (v, vpos) = peek(i), peek(i + 1), peek(i + 2)
        if gt != ">" or not _is_word(u) or not _is_word(v):
            raise ExprSyntaxError("expected an arc 'name>name'", upos)
        arcs.append((Atom(u, upos), Atom(v, vpos)))
        i += 3
        tok, pos = peek(i)
        if tok == "]":
            return arcs, i + 1
        if tok != ",":
            raise ExprSyntaxError(f"expected ',' or ']', found {tok!r}", pos)
        i += 1


def _is_word(tok: str) -> bool:
    return bool(re.fullmatch(r"[A-Za-z0-9_.]+", tok))


def expect_args(args: list[Any], kinds: Iterable[str], op: str, pos: int) -> None:
    kinds = list(kinds)
    if len(args) != len(kinds):
        raise ExprSyntaxError(f"{op} takes {len(kinds)} arguments, got {len(args)}", pos)
    for arg, kind in zip(args, kinds):
        ok = {
            "atom": isinstance(arg, Atom),
            "expr": not isinstance(arg, (Atom, list)),
            "arcs": isinstance(arg, list),
        }[kind]
        if not ok:
            where = arg.pos if isinstance(arg, Atom) else pos
            raise ExprSyntaxError(f"{op}: expected {kind} argument", where)


def postorder(root) -> Iterator:
    """Yield nodes children-first, left to right. Nodes expose ``children``."""
    stack = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded or not node.children:
            yield node
            continue
        stack.append((node, True))
        for child in reversed(node.children):
            stack.append((child, False))
