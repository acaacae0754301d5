import json

import pytest
from hypothesis import given, strategies as st

from certmatch import Graph, InputError
from certmatch.checker import Verdict
from certmatch.formats import (
    emit_dimacs,
    emit_edge_list,
    parse_certificate,
    parse_dimacs,
    parse_edge_list,
    parse_graph,
    result_document,
)


def test_parse_dimacs_basic():
    g = parse_dimacs("c a comment\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n")
    assert g == Graph(4, [(0, 1), (1, 2), (2, 3)])


def test_parse_dimacs_errors_name_lines():
    with pytest.raises(InputError, match="line 1"):
        parse_dimacs("e 1 2\n")
    with pytest.raises(InputError, match="line 2"):
        parse_dimacs("p edge 2 1\ne 1\n")
    with pytest.raises(InputError, match="line 2"):
        parse_dimacs("p edge 2 1\ne 1 5\n")
    with pytest.raises(InputError, match="missing problem line"):
        parse_dimacs("c nothing here\n")
    with pytest.raises(InputError, match="declares"):
        parse_dimacs("p edge 3 2\ne 1 2\n")


def test_parse_edge_list_basic():
    g = parse_edge_list("0 1\n1 2\n")
    assert g == Graph(3, [(0, 1), (1, 2)])


def test_parse_edge_list_errors():
    with pytest.raises(InputError, match="line 1"):
        parse_edge_list("0\n")
    with pytest.raises(InputError, match="negative"):
        parse_edge_list("-1 2\n")


def test_autodetect():
    assert parse_graph("p edge 2 1\ne 1 2\n") == Graph(2, [(0, 1)])
    assert parse_graph("c x\np edge 2 0\n") == Graph(2, [])
    assert parse_graph("0 1\n") == Graph(2, [(0, 1)])
    assert parse_graph("") == Graph(0, [])


@st.composite
def graphs(draw):
    n = draw(st.integers(min_value=0, max_value=8))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@given(graphs())
def test_dimacs_round_trip(g):
    assert parse_dimacs(emit_dimacs(g)) == g


@given(graphs())
def test_edge_list_round_trip(g):
    g2 = parse_edge_list(emit_edge_list(g))
    # n is inferred from ids, so trailing isolated vertices are not preserved
    assert g2.edges == g.edges
    assert g2.n == (max((v for e in g.edges for v in e), default=-1) + 1)


def test_result_document_shape():
    g = Graph(3, [(0, 1)])
    doc = json.loads(
        result_document(g, [(0, 1)], [1, 0, 0], Verdict("accept", None))
    )
    assert doc == {
        "n": 3,
        "m": 1,
        "matching": [[0, 1]],
        "osc": [1, 0, 0],
        "size": 1,
        "verdict": {"status": "accept", "reason": None},
    }


def test_certificate_round_trip():
    g = Graph(3, [(0, 1)])
    text = result_document(g, [(0, 1)], [1, 0, 0])
    matching, osc = parse_certificate(text)
    assert matching == [(0, 1)] and osc == [1, 0, 0]


def test_certificate_errors():
    with pytest.raises(InputError):
        parse_certificate("not json")
    with pytest.raises(InputError):
        parse_certificate("[]")
    with pytest.raises(InputError):
        parse_certificate('{"matching": [[0]], "osc": []}')
    with pytest.raises(InputError):
        parse_certificate('{"matching": [], "osc": "nope"}')
