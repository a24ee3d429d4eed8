"""Integer program for the dichromatic number, written in CPLEX LP text format.

Variables: ``y_j`` (color j used), ``x_i_j`` (vertex i gets color j), and the
integer rank ``t_i`` in ``0..n-1``. Each color class must admit a topological
order: for every arc ``(i, i')`` and color ``j``::

    t_i' >= t_i + 1 - n * (2 - x_i_j - x_i'_j)

which is inactive unless both endpoints take color ``j``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .digraph import Coloring, Digraph, is_valid_acyclic_coloring
from .exceptions import FormatError, InfeasibleOrPartialSolution, InvalidColoringError

TOKENS_PER_LINE = 10


@dataclass(frozen=True)
class Row:
    name: str
    terms: tuple[tuple[int, str], ...]
    sense: str
    rhs: int


@dataclass(frozen=True)
class IlpModel:
    n: int
    objective: tuple[str, ...]
    rows: tuple[Row, ...]
    binaries: tuple[str, ...]
    integers: tuple[str, ...]
    bounds: tuple[tuple[int, str, int], ...]

    def rows_with_prefix(self, prefix: str) -> list[Row]:
        return [r for r in self.rows if r.name.startswith(prefix)]


def build_model(g: Digraph) -> IlpModel:
    n = g.n
    if n < 1:
        raise ValueError("the model needs at least one vertex")
    colors = range(1, n + 1)
    rows = []
    for i in g.vertices:
        rows.append(Row(f"assign_{i}", tuple((1, f"x_{i}_{j}") for j in colors), "=", 1))
    for i in g.vertices:
        for j in colors:
            rows.append(Row(f"link_{i}_{j}", ((1, f"x_{i}_{j}"), (-1, f"y_{j}")), "<=", 0))
    for u, v in g.sorted_arcs():
        for j in colors:
            terms = ((1, f"t_{v}"), (-1, f"t_{u}"), (-n, f"x_{u}_{j}"), (-n, f"x_{v}_{j}"))
            rows.append(Row(f"order_{u}_{v}_{j}", terms, ">=", 1 - 2 * n))
    binaries = tuple(f"y_{j}" for j in colors) + tuple(f"x_{i}_{j}" for i in g.vertices for j in colors)
    integers = tuple(f"t_{i}" for i in g.vertices)
    return IlpModel(
        n=n,
        objective=tuple(f"y_{j}" for j in colors),
        rows=tuple(rows),
        binaries=binaries,
        integers=integers,
        bounds=tuple((0, t, n - 1) for t in integers),
    )


def _expr(terms) -> str:
    parts = []
    for coef, var in terms:
        sign = "-" if coef < 0 else "+"
        mag = abs(coef)
        parts.append(f"{sign} {var}" if mag == 1 else f"{sign} {mag} {var}")
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else text


def _wrapped(names, indent="  ") -> list[str]:
    return [indent + " ".join(names[i:i + TOKENS_PER_LINE]) for i in range(0, len(names), TOKENS_PER_LINE)]


def model_to_lp(model: IlpModel) -> str:
    lines = [f"\\ dichromatic number model, n={model.n}", "Minimize"]
    lines.append(" obj: " + _expr((1, y) for y in model.objective))
    lines.append("Subject To")
    for row in model.rows:
        lines.append(f" {row.name}: {_expr(row.terms)} {row.sense} {row.rhs}")
    lines.append("Bounds")
    lines.extend(f" {lo} <= {var} <= {hi}" for lo, var, hi in model.bounds)
    lines.append("General")
    lines.extend(_wrapped(model.integers))
    lines.append("Binary")
    lines.extend(_wrapped(model.binaries))
    lines.append("End")
    return "\n".join(lines) + "\n"


def export_lp(g: Digraph) -> str:
    return model_to_lp(build_model(g))


def parse_solution(text: str) -> dict[str, float]:
    """Read ``name value`` lines; lines that do not fit that shape are skipped."""
    values = {}
    for line in text.splitlines():
        tokens = line.split()
        if len(tokens) < 2 or line.lstrip().startswith("#"):
            continue
        try:
            values[tokens[0]] = float(tokens[1])
        except ValueError:
            continue
    return values


def import_solution(sol_text: str, g: Digraph) -> Coloring:
    """Turn ``x_i_j = 1`` entries into a coloring with colors compacted to ``1..r``."""
    values = parse_solution(sol_text)
    chosen: dict[int, list[int]] = {i: [] for i in g.vertices}
    for name, val in values.items():
        if not name.startswith("x_") or val < 0.5:
            continue
        try:
            _, i, j = name.split("_")
            i, j = int(i), int(j)
        except ValueError:
            raise FormatError(f"malformed variable name {name!r}") from None
        if i not in chosen or not 1 <= j <= g.n:
            raise FormatError(f"variable {name!r} does not belong to this graph")
        chosen[i].append(j)
    for i, js in chosen.items():
        if len(js) != 1:
            raise InfeasibleOrPartialSolution(f"vertex {i} has {len(js)} colors set in the solution")
    used = sorted({js[0] for js in chosen.values()})
    compact = {j: c for c, j in enumerate(used, 1)}
    coloring = Coloring(tuple(compact[chosen[i][0]] for i in g.vertices))
    check = is_valid_acyclic_coloring(g, coloring)
    if not check:
        raise InvalidColoringError(f"color class {check.color} contains the cycle {check.cycle}")
    return coloring
