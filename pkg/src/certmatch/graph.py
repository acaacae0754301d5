"""Core graph, matching, and path vocabulary.

Vertices are dense 0-based integers.  An edge is an unordered pair of
distinct vertices, stored canonically as (min, max).  A path is a plain
non-empty list of vertices; being a walk, simple, alternating, or augmenting
are predicates over such lists, not separate types.

All values are immutable after construction and safe to share.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from . import debug
from .errors import ContractError, InputError

Edge = tuple[int, int]
VertexPath = list[int]


def edge(u: int, v: int) -> Edge:
    """Canonical edge between two distinct vertices: Edge(a,b) == Edge(b,a)."""
    if u == v:
        raise InputError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """A finite simple undirected graph on vertices 0..n-1.

    Isolated vertices are representable: n may exceed the number of vertices
    that appear in edges.  Self-loops and duplicate edges are rejected.
    """

    __slots__ = ("n", "edges", "sorted_edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise InputError("vertex count must be non-negative")
        canon = []
        for u, v in edges:
            e = edge(u, v)
            if e[0] < 0 or e[1] >= n:
                raise InputError(f"edge {e} out of range for n={n}")
            canon.append(e)
        es = frozenset(canon)
        if len(es) != len(canon):
            raise InputError("duplicate edge")
        self.n = n
        self.edges = es
        self.sorted_edges: tuple[Edge, ...] = tuple(sorted(es))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.sorted_edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(ns)) for ns in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and edge(u, v) in self.edges

    def touched_vertices(self) -> set[int]:
        """Vertices incident to at least one edge."""
        return {v for e in self.edges for v in e}

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


class Matching:
    """An edge set in which no two edges share an endpoint.

    Carries a derived mate index: mate(v) = w iff {v,w} is in the matching.
    """

    __slots__ = ("edges", "_mate")

    def __init__(self, edges: Iterable[tuple[int, int]] = ()):
        es = frozenset(edge(u, v) for u, v in edges)
        mate: dict[int, int] = {}
        for u, v in es:
            if u in mate or v in mate:
                raise InputError("matching edges are not pairwise disjoint")
            mate[u] = v
            mate[v] = u
        self.edges = es
        self._mate = mate

    def mate(self, v: int) -> Optional[int]:
        return self._mate.get(v)

    def is_matched(self, v: int) -> bool:
        return v in self._mate

    def covered(self) -> set[int]:
        return set(self._mate)

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, e: object) -> bool:
        return e in self.edges

    def __iter__(self) -> Iterator[Edge]:
        return iter(sorted(self.edges))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Matching) and self.edges == other.edges

    def __hash__(self) -> int:
        return hash(self.edges)

    def __repr__(self) -> str:
        return f"Matching({sorted(self.edges)})"


def edges_of_path(p: VertexPath) -> list[Edge]:
    """Consecutive-pair edges of a vertex list, in order; empty for a singleton."""
    return [edge(p[i], p[i + 1]) for i in range(len(p) - 1)]


def is_path(g: Graph, p: VertexPath) -> bool:
    """True iff every consecutive pair of p is an edge of g.

    A single vertex is vacuously a path.  Raises InputError for out-of-range
    vertex ids.
    """
    if not p:
        raise InputError("empty vertex list")
    for v in p:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range for n={g.n}")
    return all(g.has_edge(p[i], p[i + 1]) for i in range(len(p) - 1))


def is_simple(p: VertexPath) -> bool:
    return len(set(p)) == len(p)


def is_alternating(m: Matching, p: VertexPath) -> bool:
    """True iff consecutive edges of p strictly alternate membership in m.

    Either phase may come first (the path may start with a matched or an
    unmatched edge).  Paths with fewer than two edges are alternating.
    """
    if not p:
        raise InputError("empty vertex list")
    member = [edge(p[i], p[i + 1]) in m.edges for i in range(len(p) - 1)]
    return all(member[i] != member[i + 1] for i in range(len(member) - 1))


def is_augmenting_path(m: Matching, p: VertexPath) -> bool:
    """True iff p has length >= 2, alternates w.r.t. m, and both ends are free."""
    if not p:
        raise InputError("empty vertex list")
    return (
        len(p) >= 2
        and is_alternating(m, p)
        and not m.is_matched(p[0])
        and not m.is_matched(p[-1])
    )


def augment(m: Matching, p: VertexPath) -> Matching:
    """Symmetric difference of m with the edges of p; grows |m| by one.

    Precondition (checked in debug mode): p is an augmenting path w.r.t. m
    with pairwise-distinct vertices.
    """
    if debug.enabled():
        if not (is_augmenting_path(m, p) and is_simple(p)):
            raise ContractError(f"not an augmenting path w.r.t. the matching: {p}")
    return Matching(m.edges.symmetric_difference(edges_of_path(p)))
