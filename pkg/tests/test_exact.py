import pytest
from hypothesis import given, strategies as st

from oracles import cycle, maximal_by_extension, maximal_by_subsets, path, perfect_count_nx
from mmchains.chains import build_named
from mmchains.exact import (
    BudgetExceeded,
    MatchPoly,
    count_maximal,
    count_nice_independent_sets,
    count_perfect,
    has_perfect_matching,
    is_maximal_matching,
    iter_maximal_matchings,
    maximal_matching_polynomial,
    saturation_number,
    weighted_nice_count,
)
from mmchains.graph import Graph, relabel

C6 = Graph(*cycle(6))
K2 = Graph(2, ((0, 1),))


@st.composite
def small_graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=14)) if pairs else []
    return Graph(n, tuple(chosen))


def test_c6_polynomial_from_subset_oracle():
    assert maximal_by_subsets(*cycle(6)) == {2: 3, 3: 2}
    assert maximal_matching_polynomial(C6).as_dict() == {2: 3, 3: 2}
    assert count_maximal(C6) == 5


def test_trivial_graphs():
    assert count_maximal(Graph(0)) == 1
    assert count_maximal(K2) == 1
    assert maximal_matching_polynomial(K2).as_dict() == {1: 1}
    assert saturation_number(Graph(0)) == 0
    assert saturation_number(K2) == 1
    assert saturation_number(C6) == 2


def test_path_on_four_vertices():
    # {middle edge} and {both end edges}
    assert maximal_by_subsets(*path(4)) == {1: 1, 2: 1}
    assert maximal_matching_polynomial(Graph(*path(4))).as_dict() == {1: 1, 2: 1}


def test_two_hexagons_sharing_a_vertex():
    assert count_maximal(build_named("P", 2)) == 25


@given(small_graphs())
def test_oracle_matches_subset_enumeration(g):
    hist = maximal_by_subsets(g.num_vertices, list(g.edges))
    assert maximal_matching_polynomial(g).as_dict() == hist
    assert count_maximal(g) == maximal_by_extension(g.num_vertices, list(g.edges))


@given(small_graphs(), st.randoms(use_true_random=False))
def test_isomorphism_invariance(g, rnd):
    perm = list(range(g.num_vertices))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    assert maximal_matching_polynomial(h) == maximal_matching_polynomial(g)
    assert count_perfect(h) == count_perfect(g)


@given(small_graphs())
def test_polynomial_invariants(g):
    p = maximal_matching_polynomial(g)
    assert p(1) == p.total == count_maximal(g)
    ms = list(iter_maximal_matchings(g))
    assert len(ms) == p.total
    assert all(is_maximal_matching(g, m) for m in ms)
    if ms:
        assert min(len(m) for m in ms) == p.saturation_number
        assert max(len(m) for m in ms) == p.max_size


@given(small_graphs(8))
def test_weighted_nice_identity(g):
    assert weighted_nice_count(g) == count_maximal(g)
    assert count_nice_independent_sets(g) <= count_maximal(g)


def test_nice_sets_are_not_in_bijection_on_c6():
    # {0,3} and {1,4} and {2,5} leave two disjoint edges: one perfect matching each;
    # the empty set leaves C6 with two perfect matchings
    assert count_nice_independent_sets(C6) == 4
    assert weighted_nice_count(C6) == 5


def test_nice_sets_trivial():
    assert count_nice_independent_sets(K2) == 1
    assert count_nice_independent_sets(Graph(1)) == 1


@given(small_graphs())
def test_perfect_matchings_against_networkx_recursion(g):
    assert count_perfect(g) == perfect_count_nx(g.num_vertices, list(g.edges))
    assert has_perfect_matching(g) == (count_perfect(g) > 0)


def test_perfect_small():
    assert count_perfect(C6) == 2
    assert count_perfect(Graph(0)) == 1
    assert has_perfect_matching(C6, removed=[0, 3])
    assert not has_perfect_matching(C6, removed=[0])


def test_isolated_vertices_are_harmless():
    g = Graph(4, ((0, 1),))
    assert count_maximal(g) == 1
    assert maximal_matching_polynomial(g).as_dict() == {1: 1}


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded):
        count_maximal(build_named("M", 4), budget=10)
    with pytest.raises(BudgetExceeded):
        count_perfect(build_named("L", 5), budget=3)


def test_is_maximal_matching_rejects():
    assert not is_maximal_matching(C6, [(0, 1)])
    assert not is_maximal_matching(C6, [(0, 1), (1, 2)])
    assert not is_maximal_matching(C6, [(0, 2)])
    assert is_maximal_matching(C6, [(0, 1), (3, 4)])


def test_matchpoly_json_roundtrip():
    p = MatchPoly((0, 0, 3, 2, 0))
    assert p.coeffs == (0, 0, 3, 2)
    assert p.to_json() == '{"coeffs": {"2": "3", "3": "2"}}'
    assert MatchPoly.from_json(p.to_json()) == p
    assert MatchPoly.from_dict({2: 3, 3: 2}) == p
    assert p(2) == 3 * 4 + 2 * 8
    assert p.support == [2, 3]


@given(small_graphs(8), st.data())
def test_psi_is_monotone_under_edge_and_vertex_deletion(g, data):
    # a maximal matching M of G - e maps to M or M + e; one of G - v maps to M
    # or M + (v, u) for an unmatched neighbour u; both maps are injective
    psi = count_maximal(g)
    if g.edges:
        e = data.draw(st.sampled_from(g.edges))
        assert count_maximal(Graph(g.num_vertices, tuple(x for x in g.edges if x != e))) <= psi
    if g.num_vertices:
        from mmchains.graph import delete_vertices

        v = data.draw(st.integers(0, g.num_vertices - 1))
        assert count_maximal(delete_vertices(g, [v])) <= psi
