"""Assembly of augmenting paths and blossoms from two tree-ascent paths.

The two ascent paths either end at distinct free vertices (reverse one and
concatenate: an augmenting path) or share a suffix down to a common root
(split off the longest disjoint prefixes: an odd cycle plus a stem).
A pre-pass shortcut handles edges with both endpoints unmatched directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from . import debug
from .alt_search import TraceHook, SearchState, _make_monitor, _search
from .errors import ContractError
from .graph import (
    Graph,
    Matching,
    VertexPath,
    edge,
    edges_of_path,
    is_alternating,
    is_augmenting_path,
    is_path,
    is_simple,
)


@dataclass(frozen=True)
class Blossom:
    """An odd alternating cycle with an even-length alternating stem.

    The stem may be empty; the cycle is a vertex list whose first and last
    entries are the base.
    """

    stem: tuple[int, ...]
    cycle: tuple[int, ...]

    def vertices(self) -> list[int]:
        return list(self.stem) + list(self.cycle)


@dataclass(frozen=True)
class AugmentingPath:
    path: tuple[int, ...]


@dataclass(frozen=True)
class BlossomFound:
    blossom: Blossom


@dataclass(frozen=True)
class NothingFound:
    pass


SearchOutcome = Union[AugmentingPath, BlossomFound, NothingFound]


def is_odd_cycle(p: VertexPath) -> bool:
    return len(p) >= 3 and len(p) % 2 == 0 and p[0] == p[-1]


def is_blossom(g: Graph, m: Matching, b: Blossom) -> bool:
    """All structural blossom properties w.r.t. (g, m), checked separately."""
    stem, cycle = list(b.stem), list(b.cycle)
    full = stem + cycle
    return (
        is_odd_cycle(cycle)
        and is_alternating(m, full)
        and is_simple(stem + cycle[:-1])
        and not m.is_matched(full[0])
        and len(stem) % 2 == 0
        and is_path(g, full)
    )


def longest_disj_pfx(
    p1: VertexPath, p2: VertexPath
) -> Optional[tuple[VertexPath, VertexPath]]:
    """Longest prefixes of p1 and p2 that share only their last vertex.

    Defined when p1 = p1' ++ tail and p2 = p2' ++ tail for a common tail,
    with last(p1') = last(p2') and the prefixes otherwise disjoint; None
    when no such decomposition exists.  Straightforward quadratic scan.
    """
    for drop in range(min(len(p1), len(p2))):
        if p1[len(p1) - drop:] != p2[len(p2) - drop:]:
            break
        q1, q2 = p1[: len(p1) - drop], p2[: len(p2) - drop]
        if not q1 or not q2 or q1[-1] != q2[-1]:
            continue
        if set(q1[:-1]).isdisjoint(q2[:-1]) and q1[-1] not in q1[:-1] and q1[-1] not in q2[:-1]:
            return q1, q2
    return None


def assemble_augmenting(
    p1: VertexPath,
    p2: VertexPath,
    m: Optional[Matching] = None,
    g: Optional[Graph] = None,
) -> VertexPath:
    """reverse(p1) ++ p2: an augmenting path when the two ascents are disjoint
    with distinct free last vertices and a joining unmatched edge.

    The hypotheses are verified in debug mode when m (and g) are supplied.
    """
    if debug.enabled():
        if len(p1) % 2 == 0 or len(p2) % 2 == 0:
            raise ContractError("ascent paths must have odd vertex count")
        if not set(p1).isdisjoint(p2):
            raise ContractError("ascent paths must be disjoint")
        if m is not None:
            if not (is_alternating(m, p1) and is_alternating(m, p2)):
                raise ContractError("ascent paths must alternate")
            if m.is_matched(p1[-1]) or m.is_matched(p2[-1]):
                raise ContractError("ascent paths must end at free vertices")
            if edge(p1[0], p2[0]) in m.edges:
                raise ContractError("joining edge must be unmatched")
        if g is not None and not g.has_edge(p1[0], p2[0]):
            raise ContractError("tips must be joined by a graph edge")
    return list(reversed(p1)) + list(p2)


def assemble_blossom(
    p1: VertexPath,
    p2: VertexPath,
    m: Optional[Matching] = None,
    g: Optional[Graph] = None,
) -> Blossom:
    """Stem and odd cycle from two ascents meeting below a shared suffix.

    stem = reverse of what p1 keeps beyond its disjoint prefix;
    cycle = reverse(prefix1) ++ prefix2.
    """
    pfx = longest_disj_pfx(p1, p2)
    if pfx is None:
        raise ContractError("ascent paths admit no disjoint-prefix split")
    pfx1, pfx2 = pfx
    stem = list(reversed(p1[len(pfx1):]))
    cycle = list(reversed(pfx1)) + list(pfx2)
    b = Blossom(tuple(stem), tuple(cycle))
    if debug.enabled() and m is not None and g is not None:
        if not is_blossom(g, m, b):
            raise ContractError(f"assembled structure is not a blossom: {b}")
    return b


def _least_unmatched_edge(g: Graph, m: Matching) -> Optional[tuple[int, int]]:
    for u, v in g.sorted_edges:
        if not m.is_matched(u) and not m.is_matched(v):
            return u, v
    return None


def _compute_blossom_state(
    g: Graph, m: Matching, on_event: Optional[TraceHook] = None
) -> tuple[SearchOutcome, Optional[SearchState]]:
    """compute_blossom, additionally exposing the terminal search state of a
    failed search (None otherwise)."""
    shortcut = _least_unmatched_edge(g, m)
    if shortcut is not None:
        return AugmentingPath(shortcut), None
    pair, state = _search(g, m, on_event, _make_monitor(g, m))
    if pair is None:
        return NothingFound(), state
    p1, p2 = pair
    if p1[-1] != p2[-1]:
        path = assemble_augmenting(p1, p2, m, g)
        if debug.enabled():
            if not (is_augmenting_path(m, path) and is_path(g, path) and is_simple(path)):
                raise ContractError(f"invalid augmenting path assembled: {path}")
        return AugmentingPath(tuple(path)), None
    return BlossomFound(assemble_blossom(p1, p2, m, g)), None


def compute_blossom(
    g: Graph, m: Matching, on_event: Optional[TraceHook] = None
) -> SearchOutcome:
    """An augmenting path or a blossom w.r.t. (g, m) iff one exists.

    An edge with both endpoints unmatched short-circuits to a two-vertex
    augmenting path (the lexicographically least such edge).
    """
    outcome, _ = _compute_blossom_state(g, m, on_event)
    return outcome
