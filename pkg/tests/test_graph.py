import pytest
from hypothesis import given, strategies as st

from certmatch import (
    Graph,
    InputError,
    Matching,
    augment,
    edge,
    is_alternating,
    is_augmenting_path,
    is_path,
    is_simple,
)
from certmatch.errors import ContractError
from certmatch.graph import edges_of_path

from conftest import path_graph


def test_edge_canonical():
    assert edge(3, 1) == (1, 3)
    assert edge(1, 3) == edge(3, 1)
    with pytest.raises(InputError):
        edge(2, 2)


def test_graph_rejects_bad_edges():
    with pytest.raises(InputError):
        Graph(3, [(0, 3)])
    with pytest.raises(InputError):
        Graph(3, [(1, 1)])
    with pytest.raises(InputError):
        Graph(3, [(0, 1), (1, 0)])


def test_graph_adjacency_matches_edges():
    g = Graph(5, [(0, 1), (1, 2), (0, 4)])
    assert g.neighbors(0) == (1, 4)
    assert g.neighbors(1) == (0, 2)
    assert g.neighbors(3) == ()
    for u in range(g.n):
        for v in g.neighbors(u):
            assert g.has_edge(u, v)


def test_isolated_vertices_representable():
    g = Graph(6, [(0, 1)])
    assert g.n == 6
    assert g.touched_vertices() == {0, 1}


def test_matching_disjointness_enforced():
    with pytest.raises(InputError):
        Matching([(0, 1), (1, 2)])
    m = Matching([(0, 1), (2, 3)])
    assert m.mate(0) == 1 and m.mate(1) == 0
    assert m.mate(4) is None
    assert m.covered() == {0, 1, 2, 3}


def test_is_path_examples():
    p4 = path_graph(4)
    assert is_path(p4, [0, 1, 2]) is True
    assert is_path(p4, [0, 2]) is False
    assert is_path(Graph(6, []), [5]) is True
    with pytest.raises(InputError):
        is_path(p4, [0, 7])


def test_is_alternating_examples():
    m = Matching([(1, 2)])
    assert is_alternating(m, [0, 1, 2, 3]) is True
    assert is_alternating(m, [0, 1, 3]) is False
    assert is_alternating(m, [7]) is True


def test_is_augmenting_path_examples():
    assert is_augmenting_path(Matching([(1, 2)]), [0, 1, 2, 3]) is True
    assert is_augmenting_path(Matching(), [0]) is False
    assert is_augmenting_path(Matching([(0, 1)]), [0, 1]) is False


def test_augment_examples():
    assert augment(Matching([(1, 2)]), [0, 1, 2, 3]).edges == {(0, 1), (2, 3)}
    assert augment(Matching(), [0, 1]).edges == {(0, 1)}
    assert augment(Matching([(2, 3)]), [1, 2, 3, 4]).edges == {(1, 2), (3, 4)}


def test_augment_precondition_checked_in_debug(debug_mode):
    with pytest.raises(ContractError):
        augment(Matching([(0, 1)]), [0, 1])


def test_edges_of_path_examples():
    assert edges_of_path([0, 1, 2]) == [(0, 1), (1, 2)]
    assert edges_of_path([5]) == []
    assert edges_of_path([0, 1, 0]) == [(0, 1), (0, 1)]


def test_is_simple():
    assert is_simple([0, 1, 2])
    assert not is_simple([0, 1, 0])


@given(st.integers(min_value=0, max_value=20), st.integers(min_value=0, max_value=20))
def test_edge_symmetry(a, b):
    if a == b:
        with pytest.raises(InputError):
            edge(a, b)
    else:
        assert edge(a, b) == edge(b, a) == (min(a, b), max(a, b))


@st.composite
def matching_and_augmenting_path(draw):
    """A matching plus a simple augmenting path w.r.t. it, built directly."""
    k = draw(st.integers(min_value=1, max_value=4))
    length = 2 * k  # vertices on the path
    extra = draw(st.integers(min_value=0, max_value=3))
    path = list(range(length))
    m_edges = [(path[i], path[i + 1]) for i in range(1, length - 1, 2)]
    # extra matched edges disjoint from the path
    for j in range(extra):
        m_edges.append((length + 2 * j, length + 2 * j + 1))
    return Matching(m_edges), path


@given(matching_and_augmenting_path())
def test_augment_grows_by_one(mp):
    m, p = mp
    assert is_augmenting_path(m, p)
    m2 = augment(m, p)
    assert len(m2) == len(m) + 1  # also re-validates disjointness via ctor
