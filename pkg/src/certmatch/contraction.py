"""Quotient graphs, recursive augmenting-path search, and path lifting.

A found blossom's odd cycle is collapsed onto a fresh pseudo-vertex; the
search recurses on the quotient and any augmenting path found there is
routed back through the cycle in the alternation-preserving direction.
Quotients are materialized as explicit new Graph values per level.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from . import debug
from .alt_search import SearchState, TraceHook
from .blossom import (
    AugmentingPath,
    BlossomFound,
    NothingFound,
    _compute_blossom_state,
)
from .errors import ContractError, InputError
from .graph import (
    Graph,
    Matching,
    VertexPath,
    edge,
    edges_of_path,
    is_augmenting_path,
    is_path,
    is_simple,
)


@dataclass(frozen=True)
class ContractionMap:
    """One level of cycle contraction.

    kept vertices project to themselves, everything else to the fresh
    pseudo-vertex.  The preimage records which vertices of the pre-quotient
    graph the pseudo-vertex stands for.
    """

    kept: frozenset[int]
    pseudo: int
    cycle: tuple[int, ...]

    @property
    def preimage(self) -> frozenset[int]:
        return frozenset(self.cycle)

    def project(self, v: int) -> int:
        return v if v in self.kept else self.pseudo


def contraction_for_cycle(g: Graph, cycle: VertexPath) -> ContractionMap:
    """Contract the given odd cycle of g onto a fresh vertex (= g.n)."""
    touched = g.touched_vertices()
    return ContractionMap(
        kept=frozenset(touched - set(cycle)),
        pseudo=g.n,
        cycle=tuple(cycle),
    )


def quotient_graph(g: Graph, cm: ContractionMap) -> Graph:
    """Project every edge; drop the degenerate collapsed self-loop."""
    edges = set()
    for u, v in g.edges:
        pu, pv = cm.project(u), cm.project(v)
        if pu != pv:
            edges.add(edge(pu, pv))
    return Graph(max(g.n, cm.pseudo + 1), edges)


def quotient_matching(m: Matching, cm: ContractionMap) -> Matching:
    """Project the matching; cycle-internal edges vanish.

    At most the base's external matched edge survives incident to the
    pseudo-vertex; anything else means the cycle was not a blossom cycle and
    raises ContractError.
    """
    edges = set()
    for u, v in m.edges:
        pu, pv = cm.project(u), cm.project(v)
        if pu != pv:
            edges.add(edge(pu, pv))
    try:
        return Matching(edges)
    except InputError as exc:
        raise ContractError(f"cycle is not a blossom cycle: {exc}") from exc


def choose_con_vert(vs: set[int], g: Graph, v: int) -> int:
    """Least vertex of vs adjacent to v in g."""
    for w in g.neighbors(v):
        if w in vs:
            return w
    raise ContractError(f"vertex {v} has no neighbor in {sorted(vs)}")


def stem2vert_path(
    cycle: VertexPath, g: Graph, m: Matching, v: int
) -> VertexPath:
    """Cycle traversal from the base to v's cycle neighbor arriving on a
    matched edge.

    Tries the prefix of the cycle up to the first occurrence of the chosen
    neighbor; if its last edge is unmatched, uses the reversed cycle instead.
    A base-adjacent v yields the single-vertex path [base].
    """
    target = choose_con_vert(set(cycle), g, v)

    def prefix(c: VertexPath) -> VertexPath:
        return c[: c.index(target) + 1]

    fwd = prefix(list(cycle))
    fwd_edges = edges_of_path(fwd)
    if fwd_edges and fwd_edges[-1] in m.edges:
        return fwd
    return prefix(list(reversed(cycle)))


def refine(
    cm: ContractionMap, g: Graph, m: Matching, p: VertexPath
) -> VertexPath:
    """Lift an augmenting path of the quotient back to g.

    Paths avoiding the pseudo-vertex pass through unchanged; otherwise the
    path is split around it and glued to the cycle traversal that keeps the
    alternation, choosing the orientation from whether the quotient edge
    into the pseudo-vertex is matched.
    """
    if cm.pseudo not in p:
        return p
    i = p.index(cm.pseudo)
    p1, p2 = p[:i], p[i + 1:]
    cycle = list(cm.cycle)
    if not p1 and not p2:
        raise ContractError("quotient path is the bare pseudo-vertex")
    if not p1:
        lifted = stem2vert_path(cycle, g, m, p2[0]) + p2
    elif not p2:
        lifted = stem2vert_path(cycle, g, m, p1[-1]) + list(reversed(p1))
    else:
        qm = quotient_matching(m, cm)
        if edge(cm.pseudo, p2[0]) not in qm.edges:
            lifted = p1 + stem2vert_path(cycle, g, m, p2[0]) + p2
        else:
            lifted = (
                list(reversed(p2))
                + stem2vert_path(cycle, g, m, p1[-1])
                + list(reversed(p1))
            )
    if debug.enabled():
        if not (is_augmenting_path(m, lifted) and is_path(g, lifted) and is_simple(lifted)):
            raise ContractError(f"refine produced an invalid path: {lifted}")
    return lifted


OnContract = Callable[[Graph, Matching, ContractionMap, Graph, Matching], None]


@dataclass
class FailTrace:
    """What a failed search leaves behind for certificate construction."""

    levels: list[ContractionMap] = field(default_factory=list)
    graph: Optional[Graph] = None
    matching: Optional[Matching] = None
    state: Optional[SearchState] = None


def _find_aug_path_trace(
    g: Graph,
    m: Matching,
    on_contract: Optional[OnContract] = None,
    on_event: Optional[TraceHook] = None,
) -> tuple[Optional[VertexPath], Optional[FailTrace]]:
    """find_aug_path, additionally returning the failure trace when no
    augmenting path exists."""
    stack: list[tuple[ContractionMap, Graph, Matching]] = []
    cur_g, cur_m = g, m
    path: Optional[VertexPath] = None
    trace: Optional[FailTrace] = None
    while True:
        outcome, state = _compute_blossom_state(cur_g, cur_m, on_event)
        if isinstance(outcome, AugmentingPath):
            path = list(outcome.path)
            break
        if isinstance(outcome, NothingFound):
            trace = FailTrace(
                levels=[cm for cm, _, _ in stack],
                graph=cur_g,
                matching=cur_m,
                state=state,
            )
            break
        cm = contraction_for_cycle(cur_g, list(outcome.blossom.cycle))
        qg = quotient_graph(cur_g, cm)
        qm = quotient_matching(cur_m, cm)
        if on_contract:
            on_contract(cur_g, cur_m, cm, qg, qm)
        stack.append((cm, cur_g, cur_m))
        cur_g, cur_m = qg, qm
    if path is not None:
        for cm, og, om in reversed(stack):
            path = refine(cm, og, om, path)
    return path, trace


def find_aug_path(
    g: Graph,
    m: Matching,
    on_contract: Optional[OnContract] = None,
    on_event: Optional[TraceHook] = None,
) -> Optional[VertexPath]:
    """An augmenting path w.r.t. (g, m) iff one exists, else None.

    Blossoms found along the way are contracted onto fresh pseudo-vertices
    (ids g.n, g.n+1, ... per level) and any quotient path is lifted back.
    """
    path, _ = _find_aug_path_trace(g, m, on_contract, on_event)
    return path
