"""Graph file parsing/emission and result-document serialization.

Two input formats:

  * DIMACS edge format: a "p edge <n> <m>" header, "c" comment lines, and
    1-based "e <u> <v>" lines.
  * bare edge list: one "u v" pair per line, 0-based, with the vertex count
    inferred as max id + 1.

Result and certificate documents are JSON with deterministic key order.
"""

from __future__ import annotations

import json
from typing import Optional

from .checker import Verdict
from .errors import InputError
from .graph import Graph


def parse_dimacs(text: str) -> Graph:
    n: Optional[int] = None
    declared_m: Optional[int] = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise InputError(f"line {lineno}: duplicate problem line")
            if len(fields) != 4 or fields[1] != "edge":
                raise InputError(f"line {lineno}: malformed problem line {line!r}")
            try:
                n, declared_m = int(fields[2]), int(fields[3])
            except ValueError:
                raise InputError(f"line {lineno}: malformed problem line {line!r}")
        elif fields[0] == "e":
            if n is None:
                raise InputError(f"line {lineno}: edge before problem line")
            if len(fields) != 3:
                raise InputError(f"line {lineno}: malformed edge line {line!r}")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise InputError(f"line {lineno}: malformed edge line {line!r}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputError(f"line {lineno}: vertex out of range 1..{n}")
            edges.append((u - 1, v - 1))
        else:
            raise InputError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise InputError("missing problem line")
    if declared_m is not None and declared_m != len(edges):
        raise InputError(f"header declares {declared_m} edges, found {len(edges)}")
    try:
        return Graph(n, edges)
    except InputError as exc:
        raise InputError(str(exc)) from exc


def parse_edge_list(text: str) -> Graph:
    edges: list[tuple[int, int]] = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise InputError(f"line {lineno}: expected two vertex ids, got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise InputError(f"line {lineno}: expected two vertex ids, got {line!r}")
        if u < 0 or v < 0:
            raise InputError(f"line {lineno}: negative vertex id")
        edges.append((u, v))
        top = max(top, u, v)
    return Graph(top + 1, edges)


def parse_graph(text: str) -> Graph:
    """Auto-detect the format: DIMACS when the first meaningful line starts
    with a "p" or "c" tag, else a bare edge list."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        tag = line.split()[0]
        if tag in ("p", "c", "e"):
            return parse_dimacs(text)
        return parse_edge_list(text)
    return parse_edge_list(text)


def emit_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {len(g.edges)}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.sorted_edges)
    return "\n".join(lines) + "\n"


def emit_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.sorted_edges)


def result_document(
    g: Graph,
    matching: list[tuple[int, int]],
    osc: list[int],
    verdict: Optional[Verdict] = None,
) -> str:
    doc = {
        "n": g.n,
        "m": len(g.edges),
        "matching": [[u, v] for u, v in sorted(matching)],
        "osc": list(osc),
        "size": len(matching),
    }
    if verdict is not None:
        doc["verdict"] = verdict.to_dict()
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def parse_certificate(text: str) -> tuple[list[tuple[int, int]], list[int]]:
    """Matching edge list and cover labels from a certificate document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid certificate JSON: {exc}") from exc
    if not isinstance(doc, dict) or "matching" not in doc or "osc" not in doc:
        raise InputError("certificate must be an object with matching and osc")
    matching = []
    for e in doc["matching"]:
        if not isinstance(e, list) or len(e) != 2:
            raise InputError(f"malformed matching edge {e!r}")
        matching.append((int(e[0]), int(e[1])))
    osc = doc["osc"]
    if not isinstance(osc, list) or not all(isinstance(x, int) for x in osc):
        raise InputError("osc must be a list of integers")
    return matching, list(osc)
