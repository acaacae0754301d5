"""Loop invariants of the alternating-tree search.

Ten predicates over (graph, matching, search state), checkable standalone,
plus an incremental monitor the search installs in debug mode.  The monitor
exploits that labels, parents, and the examined set only ever grow: a
tree-ascent path is final the moment its vertex is labeled, so each path is
validated once and cached.

The completeness invariant (number 10) quantifies over all qualifying path
pairs of the instance; it is checked by exhaustive enumeration and therefore
only within the small-instance guard used by the oracle.
"""

from __future__ import annotations

from typing import Optional

from .alt_search import EVEN, ODD, SearchState, follow
from .errors import ContractError
from .graph import Graph, Matching, VertexPath, edge, edges_of_path, is_simple
from .oracle import MAX_ORACLE_EDGES

INV10_MAX_VERTICES = 8


def _ascent_paths(state: SearchState) -> dict[int, VertexPath]:
    return {v: follow(state.parent, v) for v in state.label}


def _path_ok_1(state: SearchState, path: VertexPath) -> bool:
    """Labels along an even vertex's ascent alternate (r,even),(r,odd),..."""
    root = state.label[path[0]][0]
    want = EVEN
    for v in path:
        if state.label.get(v) != (root, want):
            return False
        want = ODD if want == EVEN else EVEN
    return True


def invariant_1(g: Graph, m: Matching, state: SearchState) -> bool:
    return all(
        _path_ok_1(state, follow(state.parent, v))
        for v, (_, par) in state.label.items()
        if par == EVEN
    )


def _path_ok_2(m: Matching, state: SearchState, path: VertexPath) -> bool:
    """Ascent edges are matched exactly on even->odd label steps."""
    for a, b in zip(path, path[1:]):
        la, lb = state.label.get(a), state.label.get(b)
        matched = la is not None and lb is not None and la[0] == lb[0] and (
            la[1] == EVEN and lb[1] == ODD
        )
        if (edge(a, b) in m.edges) != matched:
            return False
    return True


def invariant_2(g: Graph, m: Matching, state: SearchState) -> bool:
    return all(
        _path_ok_2(m, state, follow(state.parent, v)) for v in state.label
    )


def invariant_3(g: Graph, m: Matching, state: SearchState) -> bool:
    """The parent relation is well-founded."""
    try:
        for v in state.label:
            follow(state.parent, v)
    except ContractError:
        return False
    return True


def invariant_4(g: Graph, m: Matching, state: SearchState) -> bool:
    """Matched pairs are labeled or unlabeled together."""
    return all(
        (u in state.label) == (v in state.label) for u, v in m.edges
    )


def invariant_5(g: Graph, m: Matching, state: SearchState) -> bool:
    """Unlabeled vertices are never parents."""
    return all(p in state.label for p in state.parent.values())


def invariant_6(g: Graph, m: Matching, state: SearchState) -> bool:
    """Every ascent terminates at an unmatched vertex."""
    return all(
        not m.is_matched(follow(state.parent, v)[-1]) for v in state.label
    )


def invariant_7(g: Graph, m: Matching, state: SearchState) -> bool:
    """Every ascent terminates at an even-labeled vertex."""
    return all(
        state.parity(follow(state.parent, v)[-1]) == EVEN for v in state.label
    )


def invariant_8(g: Graph, m: Matching, state: SearchState) -> bool:
    """Matched edges with a labeled endpoint are examined."""
    return all(
        edge(u, v) in state.examined
        for u, v in m.edges
        if u in state.label or v in state.label
    )


def _path_ok_9(g: Graph, path: VertexPath) -> bool:
    return is_simple(path) and all(
        g.has_edge(a, b) for a, b in zip(path, path[1:])
    )


def invariant_9(g: Graph, m: Matching, state: SearchState) -> bool:
    """Every ascent path is a simple path w.r.t. the graph."""
    return all(_path_ok_9(g, follow(state.parent, v)) for v in state.label)


def witness_pairs(g: Graph, m: Matching) -> list[tuple[VertexPath, VertexPath]]:
    """All path pairs satisfying the seven-tuple contract, by enumeration.

    Both paths simple and alternating w.r.t. m, odd vertex count, free last
    vertices, first vertices joined by an edge of g outside m.
    """
    from .graph import is_alternating

    by_first: dict[int, list[VertexPath]] = {}
    for start in range(g.n):
        stack: list[VertexPath] = [[start]]
        while stack:
            path = stack.pop()
            if len(path) % 2 == 1 and not m.is_matched(path[-1]):
                by_first.setdefault(start, []).append(path)
            tip = path[-1]
            for w in g.neighbors(tip):
                if w not in path:
                    cand = path + [w]
                    if is_alternating(m, cand):
                        stack.append(cand)
    pairs = []
    for u, v in g.sorted_edges:
        if edge(u, v) in m.edges:
            continue
        for p1 in by_first.get(u, ()):
            for p2 in by_first.get(v, ()):
                pairs.append((p1, p2))
    return pairs


def invariant_10(
    g: Graph,
    m: Matching,
    state: SearchState,
    pairs: Optional[list[tuple[VertexPath, VertexPath]]] = None,
) -> bool:
    """If a qualifying path pair exists, some edge of its joined path is
    neither matched nor examined; checked for every qualifying pair."""
    if pairs is None:
        pairs = witness_pairs(g, m)
    for p1, p2 in pairs:
        joined = list(reversed(p1)) + p2
        if not any(
            e not in m.edges and e not in state.examined
            for e in edges_of_path(joined)
        ):
            return False
    return True


ALL_INVARIANTS = (
    invariant_1,
    invariant_2,
    invariant_3,
    invariant_4,
    invariant_5,
    invariant_6,
    invariant_7,
    invariant_8,
    invariant_9,
)


def failed_invariants(g: Graph, m: Matching, state: SearchState) -> list[int]:
    """Indices (1-based) of invariants 1-9 that do not hold, plus 10 when the
    instance is small enough to enumerate."""
    bad = [i for i, inv in enumerate(ALL_INVARIANTS, 1) if not inv(g, m, state)]
    if g.n <= INV10_MAX_VERTICES and len(g.edges) <= MAX_ORACLE_EDGES:
        if not invariant_10(g, m, state):
            bad.append(10)
    return bad


class InvariantMonitor:
    """Asserts invariants 1-9 (and 10 under the guard) at every loop head.

    Ascent paths are immutable once their vertex is labeled, so per-path
    checks run once per vertex; set-level checks (4, 5, 8) rescan, which is
    cheap.  Raises ContractError naming the first violated invariant.
    """

    def __init__(self, g: Graph, m: Matching):
        self.g = g
        self.m = m
        self._checked: set[int] = set()
        self._pairs: Optional[list[tuple[VertexPath, VertexPath]]] = None
        if g.n <= INV10_MAX_VERTICES and len(g.edges) <= MAX_ORACLE_EDGES:
            self._pairs = witness_pairs(g, m)

    def check(self, state: SearchState) -> None:
        for v in state.label.keys() - self._checked:
            path = follow(state.parent, v, bound=self.g.n + 1)  # invariant 3
            if state.parity(v) == EVEN and not _path_ok_1(state, path):
                raise ContractError(f"invariant 1 violated at vertex {v}")
            if not _path_ok_2(self.m, state, path):
                raise ContractError(f"invariant 2 violated at vertex {v}")
            if self.m.is_matched(path[-1]):
                raise ContractError(f"invariant 6 violated at vertex {v}")
            if state.parity(path[-1]) != EVEN:
                raise ContractError(f"invariant 7 violated at vertex {v}")
            if not _path_ok_9(self.g, path):
                raise ContractError(f"invariant 9 violated at vertex {v}")
            self._checked.add(v)
        if not invariant_4(self.g, self.m, state):
            raise ContractError("invariant 4 violated")
        if not invariant_5(self.g, self.m, state):
            raise ContractError("invariant 5 violated")
        if not invariant_8(self.g, self.m, state):
            raise ContractError("invariant 8 violated")
        if self._pairs is not None and not invariant_10(
            self.g, self.m, state, self._pairs
        ):
            raise ContractError("invariant 10 violated")
