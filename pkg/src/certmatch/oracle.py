"""Brute-force ground truth for small instances.

Everything in this module is written against the predicates in
certmatch.graph only and shares no code with the blossom engine, so
agreement between the two is meaningful evidence.  All searches iterate in a
fixed deterministic order.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Optional

from .errors import CapacityError
from .graph import (
    Graph,
    Matching,
    VertexPath,
    edge,
    edges_of_path,
    is_alternating,
    is_augmenting_path,
)

MAX_ORACLE_EDGES = 25
MAX_ENUM_VERTICES = 7


def _guard(g: Graph) -> None:
    if len(g.edges) > MAX_ORACLE_EDGES:
        raise CapacityError(
            f"oracle guard: {len(g.edges)} edges exceeds {MAX_ORACLE_EDGES}"
        )


def brute_max_matching(g: Graph) -> Matching:
    """A maximum-cardinality matching by exhaustive branch-and-bound.

    Any maximum matching is acceptable; only the size is contractual.
    """
    _guard(g)
    edges = g.sorted_edges
    best: list[int] = []

    def extend(i: int, used: set[int], chosen: list[int]) -> None:
        nonlocal best
        remaining = len(edges) - i
        if len(chosen) + remaining <= len(best):
            return
        if i == len(edges):
            if len(chosen) > len(best):
                best = list(chosen)
            return
        u, v = edges[i]
        if u not in used and v not in used:
            used.add(u)
            used.add(v)
            chosen.append(i)
            extend(i + 1, used, chosen)
            chosen.pop()
            used.discard(u)
            used.discard(v)
        extend(i + 1, used, chosen)

    extend(0, set(), [])
    return Matching(edges[i] for i in best)


def brute_augmenting_path(g: Graph, m: Matching) -> Optional[VertexPath]:
    """Some simple augmenting path w.r.t. (g, m), or None if none exists.

    Depth-first enumeration of simple alternating paths starting at
    unmatched vertices, in ascending vertex order.
    """
    _guard(g)
    for start in range(g.n):
        if m.is_matched(start):
            continue
        path = [start]
        found = _dfs_augmenting(g, m, path, {start}, want_matched=False)
        if found is not None:
            return found
    return None


def _dfs_augmenting(
    g: Graph, m: Matching, path: VertexPath, seen: set[int], want_matched: bool
) -> Optional[VertexPath]:
    tip = path[-1]
    for w in g.neighbors(tip):
        if w in seen:
            continue
        if (edge(tip, w) in m.edges) != want_matched:
            continue
        path.append(w)
        seen.add(w)
        if not want_matched and not m.is_matched(w):
            return list(path)
        found = _dfs_augmenting(g, m, path, seen, not want_matched)
        if found is not None:
            return found
        path.pop()
        seen.remove(w)
    return None


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices, once each, in a fixed order."""
    if n > MAX_ENUM_VERTICES:
        raise CapacityError(f"enumerate_graphs guard: n={n} exceeds {MAX_ENUM_VERTICES}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def enumerate_matchings(g: Graph) -> Iterator[Matching]:
    """Every matching contained in g, including the empty one."""
    _guard(g)
    edges = g.sorted_edges

    def extend(i: int, used: set[int], chosen: list[int]) -> Iterator[list[int]]:
        if i == len(edges):
            yield list(chosen)
            return
        yield from extend(i + 1, used, chosen)
        u, v = edges[i]
        if u not in used and v not in used:
            used.add(u)
            used.add(v)
            chosen.append(i)
            yield from extend(i + 1, used, chosen)
            chosen.pop()
            used.discard(u)
            used.discard(v)

    for chosen in extend(0, set(), []):
        yield Matching(edges[i] for i in chosen)


def has_blossom(g: Graph, m: Matching) -> bool:
    """Whether some blossom exists w.r.t. (g, m), by exhaustive enumeration.

    A blossom is an odd alternating cycle plus an even-length alternating
    stem from a free vertex, per the structural definition; enumeration runs
    over all (stem, cycle) decompositions rooted at each candidate base.
    """
    _guard(g)
    for base in range(g.n):
        for cycle in _odd_alt_cycles(g, m, base):
            if _has_stem(g, m, cycle):
                return True
    return False


def _odd_alt_cycles(g: Graph, m: Matching, base: int) -> Iterator[VertexPath]:
    """Odd cycles [base, ..., base] that alternate w.r.t. m, simple internally."""

    def extend(path: VertexPath) -> Iterator[VertexPath]:
        tip = path[-1]
        for w in g.neighbors(tip):
            if w == base and len(path) >= 3 and len(path) % 2 == 1:
                cand = path + [w]
                if is_alternating(m, cand):
                    yield cand
            if w != base and w not in path:
                yield from extend(path + [w])

    yield from extend([base])


def _has_stem(g: Graph, m: Matching, cycle: VertexPath) -> bool:
    """Whether some even-length alternating stem reaches the cycle head."""
    base = cycle[0]
    body = set(cycle[:-1]) - {base}
    if not m.is_matched(base):
        return is_alternating(m, cycle)

    def extend(path: VertexPath) -> bool:
        # path runs from a candidate free vertex down towards the base
        tip = path[-1]
        for w in g.neighbors(tip):
            if w in path or w in body:
                continue
            step = path + [w]
            if w == base:
                full = step + cycle[1:]
                if len(path) % 2 == 0 and is_alternating(m, full):
                    return True
                continue
            if extend(step):
                return True
        return False

    return any(
        not m.is_matched(root) and root not in body and extend([root])
        for root in range(g.n)
    )
