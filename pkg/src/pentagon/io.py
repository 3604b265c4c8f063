"""DIMACS-style and JSON graph files.

DIMACS files are 1-indexed (``p edge <n> <m>``, ``e <u> <v>``, ``c`` comments);
JSON files are ``{"n": <int>, "edges": [[u, v], ...]}`` and 0-indexed.  Writers
emit edges sorted with ``u < v`` so that write(read(write(G))) is byte-stable.
"""

from __future__ import annotations

import json
from pathlib import Path

from .graph import Graph, from_edge_list


class GraphFormatError(ValueError):
    pass


def parse_dimacs(text: str) -> Graph:
    try:
        return _parse_dimacs(text)
    except GraphFormatError:
        raise
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def _parse_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphFormatError(f"line {lineno}: malformed problem line")
            n = int(parts[2])
        elif tag == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: malformed edge line")
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
        else:
            raise GraphFormatError(f"line {lineno}: unknown line type {tag!r}")
    if n is None:
        raise GraphFormatError("missing 'p edge' line")
    return from_edge_list(n, edges)


def format_dimacs(G: Graph) -> str:
    edges = G.edges()
    lines = [f"p edge {G.n} {len(edges)}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_json(text: str) -> Graph:
    try:
        data = json.loads(text)
        return from_edge_list(int(data["n"]), data["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"bad JSON graph: {exc}") from exc


def format_json(G: Graph) -> str:
    return json.dumps({"n": G.n, "edges": [list(e) for e in G.edges()]}) + "\n"


def read_graph(path, fmt: str | None = None) -> Graph:
    path = Path(path)
    fmt = fmt or ("json" if path.suffix == ".json" else "dimacs")
    text = path.read_text()
    return parse_json(text) if fmt == "json" else parse_dimacs(text)


def write_graph(G: Graph, path, fmt: str | None = None) -> None:
    path = Path(path)
    fmt = fmt or ("json" if path.suffix == ".json" else "dimacs")
    path.write_text(format_json(G) if fmt == "json" else format_dimacs(G))
