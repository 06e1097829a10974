"""Graph file formats.

DIMACS ``.col``: ``c`` comment lines, one ``p edge N M`` header, then
``e U V`` lines with 1-indexed endpoints. Plain edge lists: one ``u v`` pair
per line, 0-indexed, ``#`` starts a comment. An edge list may declare its
vertex count with a ``# n=N`` line so isolated vertices survive a round trip.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .graph import Graph, GraphError

_N_DECL = re.compile(r"#\s*n\s*=\s*(\d+)")


def parse_dimacs(text: str) -> Graph:
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) < 4 or parts[1] not in ("edge", "col"):
                raise GraphError(f"line {lineno}: malformed header {line!r}")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise GraphError(f"line {lineno}: edge before 'p edge' header")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            if u == v:
                raise GraphError(f"line {lineno}: self-loop at {u + 1}")
            edges.add((min(u, v), max(u, v)))
        else:
            raise GraphError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise GraphError("missing 'p edge' header")
    return Graph.from_edges(n, edges)


def parse_edgelist(text: str, n: int | None = None) -> Graph:
    edges = set()
    declared = None
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        m = _N_DECL.match(raw.strip())
        if m:
            declared = int(m.group(1))
            continue
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at {u}")
        edges.add((min(u, v), max(u, v)))
        top = max(top, u, v)
    if n is None:
        n = declared if declared is not None else top + 1
    return Graph.from_edges(n, edges)


def format_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def format_edgelist(g: Graph) -> str:
    lines = [f"# n={g.n}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def load_graph(path) -> Graph:
    path = Path(path)
    text = path.read_text()
    if path.suffix in (".col", ".dimacs"):
        return parse_dimacs(text)
    return parse_edgelist(text)


def save_graph(g: Graph, path) -> None:
    path = Path(path)
    if path.suffix in (".col", ".dimacs"):
        path.write_text(format_dimacs(g))
    else:
        path.write_text(format_edgelist(g))


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def chi_certificate(chi: int, coloring: dict[int, int], connectivity: int) -> dict:
    return {
        "chi": chi,
        "coloring": [coloring[v] for v in sorted(coloring)],
        "connectivity": connectivity,
    }
