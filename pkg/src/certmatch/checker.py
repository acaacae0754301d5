"""Independent checker for a matching plus odd-set cover certificate.

The checker consults nothing but the triple (graph, matching, labels).  In
addition to the classic clauses (label range, tight count, cover condition)
it verifies that the claimed matching consists of graph edges and is
actually a matching; omitting either check would let invalid witnesses
through.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graph import Graph


@dataclass(frozen=True)
class Verdict:
    status: str  # "accept" | "reject"
    reason: Optional[str] = None

    @property
    def accepted(self) -> bool:
        return self.status == "accept"

    def to_dict(self) -> dict:
        return {"status": self.status, "reason": self.reason}


def _reject(reason: str) -> Verdict:
    return Verdict("reject", reason)


def check_max_card_matching(
    g: Graph, m: Iterable[tuple[int, int]], osc: Sequence[int]
) -> Verdict:
    """Accept iff m is a matching of g and osc proves its maximality.

    Clauses, in order: matching edges belong to g; matching edges are
    pairwise disjoint; labels within [0, max(2, n)); the label counts sum to
    exactly |m|; every edge touches a label-1 vertex or joins two equal
    labels >= 2.  The first failing clause's reason is reported.
    """
    edges = set()
    for e in m:
        try:
            u, v = e
        except (TypeError, ValueError):
            return _reject("matching edge not in graph")
        if u == v or not (0 <= u < g.n and 0 <= v < g.n):
            return _reject("matching edge not in graph")
        ce = (u, v) if u < v else (v, u)
        if ce not in g.edges:
            return _reject("matching edge not in graph")
        edges.add(ce)

    covered: set[int] = set()
    for u, v in edges:
        if u in covered or v in covered:
            return _reject("edges of M are not disjoint")
        covered.add(u)
        covered.add(v)

    if len(osc) != g.n:
        return _reject("wrong number of labels")
    bound = max(2, g.n)
    count = [0] * bound
    top = 1
    for label in osc:
        if not isinstance(label, int) or label < 0 or label >= bound:
            return _reject("negative label or label larger than n - 1")
        count[label] += 1
        top = max(top, label)

    total = count[1] + sum(count[i] // 2 for i in range(2, top + 1))
    if total != len(edges):
        return _reject("OSC does not prove optimality")

    for u, v in g.edges:
        if osc[u] == 1 or osc[v] == 1 or (osc[u] == osc[v] and osc[u] >= 2):
            continue
        return _reject("OSC is not a cover")
    return Verdict("accept")
