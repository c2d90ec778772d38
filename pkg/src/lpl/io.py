"""Edge-list text format and DOT export.

Edge-list format: first line ``n m``, then ``m`` lines ``u v``. When a
rotation map is attached every edge line carries two more integers
``p q``: the port of the edge at ``u`` and at ``v``.
"""

from __future__ import annotations

from pathlib import Path
from typing import TextIO

from .graph import Graph, GraphError, RotationMap, make_graph


def dumps_edge_list(g: Graph, *, ports: bool = True) -> str:
    rot = g.rotation if ports else None
    lines = [f"{g.n} {g.m}"]
    for u, v in g.edges():
        if rot is not None:
            lines.append(f"{u} {v} {rot.port_of(u, v)} {rot.port_of(v, u)}")
        else:
            lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def loads_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise GraphError("empty edge list")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        body = [[int(tok) for tok in r] for r in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise GraphError(f"malformed edge list header or row: {exc}") from None
    if len(body) != m:
        raise GraphError(f"header promises {m} edges, found {len(body)}")
    widths = {len(r) for r in body}
    if widths - {2, 4}:
        raise GraphError("edge rows must have 2 or 4 integers")
    if len(widths) > 1:
        raise GraphError("either every edge row carries ports or none does")
    g = make_graph(n, [(r[0], r[1]) for r in body], strict=True)
    if widths == {4}:
        table: list[list] = [[None] * g.degree(x) for x in range(n)]
        for u, v, p, q in body:
            for x, i, y, j in ((u, p, v, q), (v, q, u, p)):
                if not 0 <= i < len(table[x]) or table[x][i] is not None:
                    raise GraphError(f"port {i} at vertex {x} is out of range or reused")
                table[x][i] = (y, j)
        g = g.with_rotation(RotationMap(tuple(tuple(r) for r in table)))
    return g


def read_edge_list(path: str | Path) -> Graph:
    return loads_edge_list(Path(path).read_text())


def write_edge_list(g: Graph, out: str | Path | TextIO) -> None:
    text = dumps_edge_list(g)
    if isinstance(out, (str, Path)):
        Path(out).write_text(text)
    else:
        out.write(text)


def to_dot(g: Graph, *, labels: list[str] | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if labels is not None:
            lines.append(f'  {v} [label="{labels[v]}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
