"""Alternating-tree search for two joinable tree-ascent paths.

Grows alternating trees from every free vertex.  Each iteration examines one
unexamined edge whose first endpoint is even-labeled; the tree either grows
by two vertices, or an even-even encounter yields two ascent paths whose
tips are joined by the examined edge, or an odd encounter is skipped.  If the
candidate pool empties, no such pair of paths exists.

Nondeterministic choices are resolved by always taking the ascending-least
candidate pair (even endpoint first), so runs are reproducible.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import debug
from .errors import ContractError
from .graph import Edge, Graph, Matching, VertexPath, edge

EVEN = "even"
ODD = "odd"

TraceHook = Callable[[Edge, str], None]


@dataclass
class SearchState:
    """State of one alternating-tree search.

    examined: edges already considered; parent: tree-ascent pointers;
    label: vertex -> (root, parity) for vertices in the forest.
    """

    examined: set[Edge] = field(default_factory=set)
    parent: dict[int, int] = field(default_factory=dict)
    label: dict[int, tuple[int, str]] = field(default_factory=dict)

    def parity(self, v: int) -> Optional[str]:
        lab = self.label.get(v)
        return lab[1] if lab else None

    def even_vertices(self) -> set[int]:
        return {v for v, (_, p) in self.label.items() if p == EVEN}

    def odd_vertices(self) -> set[int]:
        return {v for v, (_, p) in self.label.items() if p == ODD}


def follow(parent: dict[int, int], v: int, bound: Optional[int] = None) -> VertexPath:
    """Tree-ascent path from v: v, parent(v), parent(parent(v)), ...

    The parent relation must be well-founded.  Iteration is bounded and a
    cycle raises ContractError rather than looping forever.
    """
    limit = bound if bound is not None else len(parent) + 1
    path = [v]
    while path[-1] in parent:
        if len(path) > limit:
            raise ContractError("parent relation is not well-founded")
        path.append(parent[path[-1]])
    return path


def _search(
    g: Graph,
    m: Matching,
    on_event: Optional[TraceHook] = None,
    monitor=None,
) -> tuple[Optional[tuple[VertexPath, VertexPath]], SearchState]:
    """Run the tree search; return (pair-or-None, terminal state)."""
    state = SearchState()
    heap: list[tuple[int, int]] = []

    def make_even(v: int) -> None:
        for w in g.neighbors(v):
            heapq.heappush(heap, (v, w))

    for v in range(g.n):
        if not m.is_matched(v):
            state.label[v] = (v, EVEN)
            make_even(v)

    while heap:
        if monitor is not None:
            monitor.check(state)
        v1, v2 = heapq.heappop(heap)
        e = edge(v1, v2)
        if e in state.examined:
            continue
        state.examined.add(e)
        lab2 = state.label.get(v2)
        if lab2 is None:
            # Grow the tree through v2 and its mate by two vertices.
            v3 = m.mate(v2)
            assert v3 is not None  # unlabeled implies matched: free vertices are roots
            root = state.label[v1][0]
            state.examined.add(edge(v2, v3))
            state.label[v2] = (root, ODD)
            state.label[v3] = (root, EVEN)
            state.parent[v2] = v1
            state.parent[v3] = v2
            make_even(v3)
            if on_event:
                on_event(e, "grow")
        elif lab2[1] == EVEN:
            # Not a loop head: the joining edge was just examined, so the
            # completeness invariant is intentionally not re-checked here.
            if on_event:
                on_event(e, "pair")
            return (follow(state.parent, v1), follow(state.parent, v2)), state
        else:
            # Another odd-length route to an odd vertex: nothing to do.
            if on_event:
                on_event(e, "skip")
    if monitor is not None:
        monitor.check(state)
    return None, state


def _make_monitor(g: Graph, m: Matching):
    if not debug.enabled():
        return None
    from .invariants import InvariantMonitor

    return InvariantMonitor(g, m)


def compute_alt_path(
    g: Graph, m: Matching, on_event: Optional[TraceHook] = None
) -> Optional[tuple[VertexPath, VertexPath]]:
    """Two tree-ascent paths whose tips are joined by an unmatched edge of g,
    or None when no such pair exists.

    When present, both paths are simple and alternating w.r.t. m, have an odd
    number of vertices, end at free vertices, and their first vertices are
    joined by an edge of g that is not in m.
    """
    pair, _ = _search(g, m, on_event, _make_monitor(g, m))
    return pair


def final_state(g: Graph, m: Matching) -> SearchState:
    """Terminal state of a failed search.

    Only meaningful when compute_alt_path(g, m) is None; a found pair raises
    ContractError.
    """
    pair, state = _search(g, m, None, _make_monitor(g, m))
    if pair is not None:
        raise ContractError("final_state called on a search that found a pair")
    return state
