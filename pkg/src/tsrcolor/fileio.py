"""Text file formats: graphs, colourings, run reports.

Graph file        lines "n m" then m lines "u v"
Colouring file    line "n m r K k", then n lines "v c", then m lines "u v c"
Run report        "key=value" lines

'#' starts a comment anywhere in a line; blank lines are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .coloring import TotalColoring
from .errors import ParseError
from .graphs import Graph, build_graph


@dataclass(frozen=True)
class ColoringData:
    """Contents of a colouring file, aligned to a known graph."""

    n: int
    m: int
    r: int
    K: int
    k: int
    vertex_colors: np.ndarray
    edge_colors: np.ndarray


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _ints(line: str, count: int, lineno: int, what: str) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(
            f"line {lineno}: expected {count} fields for {what}, "
            f"got {len(parts)}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer field in {what!r} line")


def write_graph(g: Graph, path) -> None:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_graph(path) -> Graph:
    rows = list(_data_lines(Path(path).read_text(encoding="utf-8")))
    if not rows:
        raise ParseError("empty graph file")
    lineno, header = rows[0]
    n, m = _ints(header, 2, lineno, "graph header")
    if len(rows) - 1 != m:
        raise ParseError(
            f"header says {m} edges but file has {len(rows) - 1} edge lines")
    edges = [_ints(line, 2, ln, "edge") for ln, line in rows[1:]]
    return build_graph(n, np.array(edges, dtype=np.int64).reshape(-1, 2))


def write_coloring(g: Graph, coloring: TotalColoring, path) -> None:
    lines = [f"{g.n} {g.m} {coloring.r} {coloring.params.K} {coloring.params.k}"]
    lines.extend(f"{v} {c}" for v, c in enumerate(coloring.vertex_colors))
    lines.extend(f"{u} {v} {c}"
                 for (u, v), c in zip(g.edges, coloring.edge_colors))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_coloring(path, g: Graph) -> ColoringData:
    rows = list(_data_lines(Path(path).read_text(encoding="utf-8")))
    if not rows:
        raise ParseError("empty colouring file")
    lineno, header = rows[0]
    n, m, r, K, k = _ints(header, 5, lineno, "colouring header")
    if n != g.n or m != g.m:
        raise ParseError(
            f"colouring is for n={n}, m={m} but the graph has "
            f"n={g.n}, m={g.m}")
    if len(rows) - 1 != n + m:
        raise ParseError(
            f"expected {n} vertex and {m} edge lines, got {len(rows) - 1}")
    vc = np.full(n, -1, dtype=np.int64)
    for ln, line in rows[1:1 + n]:
        v, c = _ints(line, 2, ln, "vertex colour")
        if not 0 <= v < n:
            raise ParseError(f"line {ln}: vertex {v} outside [0, {n})")
        if vc[v] != -1:
            raise ParseError(f"line {ln}: vertex {v} coloured twice")
        vc[v] = c
    ec = np.full(m, -1, dtype=np.int64)
    for ln, line in rows[1 + n:]:
        u, v, c = _ints(line, 3, ln, "edge colour")
        try:
            eid = g.edge_index(u, v)
        except KeyError:
            raise ParseError(f"line {ln}: graph has no edge ({u}, {v})")
        if ec[eid] != -1:
            raise ParseError(f"line {ln}: edge ({u}, {v}) coloured twice")
        ec[eid] = c
    return ColoringData(n=n, m=m, r=r, K=K, k=k,
                        vertex_colors=vc, edge_colors=ec)


def format_run_report(report: dict) -> str:
    return "\n".join(f"{key}={value}" for key, value in report.items()) + "\n"


def write_run_report(report: dict, path) -> None:
    Path(path).write_text(format_run_report(report), encoding="utf-8")


def read_run_report(path) -> dict[str, str]:
    out: dict[str, str] = {}
    for lineno, line in _data_lines(Path(path).read_text(encoding="utf-8")):
        if "=" not in line:
            raise ParseError(f"line {lineno}: expected key=value, got {line!r}")
        key, value = line.split("=", 1)
        out[key.strip()] = value.strip()
    return out
