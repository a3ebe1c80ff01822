import networkx as nx
import pytest
from hypothesis import given, strategies as st

from mmchains.chains import (
    AUX_RANGE,
    AuxGraphId,
    ChainSpec,
    Family,
    SpecError,
    build_auxiliary,
    build_chain,
    build_named,
    canonicalize,
    is_canonical,
    iter_canonical_specs,
    iter_specs,
    layout_chain,
    named_spec,
    parse_spec,
)
from mmchains.exact import count_maximal
from mmchains.recurrences import evaluate_aux_system, paper_system


def iso(g, h):
    return nx.is_isomorphic(g.to_networkx(), h.to_networkx())


def specs(family, max_len=9):
    fam = Family(family)
    return st.integers(1, max_len).flatmap(
        lambda n: st.text(alphabet=fam.alphabet, min_size=max(n - 2, 0), max_size=max(n - 2, 0)).map(
            lambda s: ChainSpec(fam, s, n)
        )
    )


any_spec = st.one_of(specs("cactus"), specs("benzenoid"))


def test_single_hexagon():
    g = build_chain(ChainSpec.of("cactus", "", 1))
    assert (g.num_vertices, len(g.edges)) == (6, 6)


def test_sizes_from_examples():
    g = build_chain(ChainSpec.of("cactus", "PPP"))
    assert (g.num_vertices, len(g.edges)) == (26, 30)
    g = build_chain(ChainSpec.of("benzenoid", "SS"))
    assert (g.num_vertices, len(g.edges)) == (18, 21)


@given(any_spec)
def test_vertex_and_edge_counts(spec):
    g = build_chain(spec)
    n = spec.length
    if spec.family is Family.CACTUS:
        assert (g.num_vertices, len(g.edges)) == (5 * n + 1, 6 * n)
    else:
        assert (g.num_vertices, len(g.edges)) == (4 * n + 2, 5 * n + 1)


@given(specs("cactus"))
def test_cactus_degrees_and_cut_vertices(spec):
    g = build_chain(spec)
    degs = [g.degree(v) for v in range(g.num_vertices)]
    n = spec.length
    assert degs.count(4) == n - 1 and degs.count(2) == g.num_vertices - (n - 1)
    nxg = g.to_networkx()
    assert len(list(nx.articulation_points(nxg))) == n - 1
    assert all(len(c) == 6 for c in nx.cycle_basis(nxg))


@given(specs("benzenoid"))
def test_benzenoid_structure(spec):
    g = build_chain(spec)
    nxg = g.to_networkx()
    n = spec.length
    degs = [g.degree(v) for v in range(g.num_vertices)]
    assert degs.count(3) == 2 * n - 2 and degs.count(2) == 2 * n + 4
    assert nx.is_biconnected(nxg) and nx.is_bipartite(nxg)


def test_benzenoid_interior_types_by_degree_two_vertices():
    # straight: the two degree-2 vertices of the middle hexagon are not adjacent;
    # kinky: they are adjacent
    for t, adjacent in (("S", False), ("L", True), ("R", True)):
        lay = layout_chain(ChainSpec.of("benzenoid", t))
        g = lay.graph
        mid = [v for v in lay.rings[1] if g.degree(v) == 2]
        assert len(mid) == 2
        assert g.has_edge(*mid) == adjacent


def test_cactus_interior_types_by_distance():
    for t, dist in (("O", 1), ("M", 2), ("P", 3)):
        lay = layout_chain(ChainSpec.of("cactus", t))
        g = lay.graph.to_networkx()
        cuts = [v for v in lay.rings[1] if lay.graph.degree(v) == 4]
        ring = g.subgraph(lay.rings[1])
        assert nx.shortest_path_length(ring, *cuts) == dist


def test_spec_validation():
    with pytest.raises(SpecError):
        ChainSpec(Family.CACTUS, "", 0)
    with pytest.raises(SpecError):
        ChainSpec(Family.CACTUS, "PP", 3)
    with pytest.raises(SpecError):
        ChainSpec.of("cactus", "S")
    with pytest.raises(SpecError):
        ChainSpec.of("benzenoid", "P")
    with pytest.raises(ValueError):
        ChainSpec.of("polymer", "")


def test_named_families():
    assert build_named("Z", 3) == build_chain(ChainSpec.of("benzenoid", "L"))
    assert iso(build_named("Z", 3), build_chain(ChainSpec.of("benzenoid", "R")))
    assert build_named("M", 2) == build_named("P", 2) == build_named("O", 2)
    assert build_named("L", 0) .num_vertices == 0
    assert named_spec("Z", 6).internal == "LRLR"
    assert named_spec("H", 6).internal == "LLLL"
    assert named_spec("L", 4).internal == "SS"
    with pytest.raises(SpecError):
        named_spec("Q", 3)


def test_zigzag_and_helicene_isomorphism_pattern():
    for n in (1, 2, 3):
        assert iso(build_named("Z", n), build_named("H", n))
    # at n = 4 chrysene and benzo[c]phenanthrene differ, though both have 288
    assert not iso(build_named("Z", 4), build_named("H", 4))
    assert count_maximal(build_named("Z", 4)) == count_maximal(build_named("H", 4)) == 288
    assert not iso(build_named("Z", 5), build_named("H", 5))
    assert count_maximal(build_named("Z", 5)) == 1105
    assert count_maximal(build_named("H", 5)) == 1094


def test_degenerate_lengths_coincide():
    for n in (1, 2):
        graphs = [build_named(s, n) for s in "PMO"]
        assert all(iso(graphs[0], h) for h in graphs)
        graphs = [build_named(s, n) for s in "LZH"]
        assert all(iso(graphs[0], h) for h in graphs)


def test_canonicalize_examples():
    assert canonicalize(ChainSpec.of("benzenoid", "RRS")).internal == "LLS"
    assert canonicalize(ChainSpec.of("cactus", "PMO")).internal == "OMP"
    assert canonicalize(ChainSpec.of("cactus", "MMM")).internal == "MMM"


@given(any_spec)
def test_canonicalize_idempotent_and_isomorphic(spec):
    c = canonicalize(spec)
    assert canonicalize(c) == c and is_canonical(c)
    if spec.length <= 6:
        assert iso(build_chain(c), build_chain(spec))


def test_canonical_counts():
    assert len(list(iter_canonical_specs("cactus", 2))) == 1
    assert len(list(iter_specs("benzenoid", 5))) == 27
    # reversal only for cacti: (3^k + 3^ceil(k/2)) / 2
    assert len(list(iter_canonical_specs("cactus", 6))) == (81 + 9) // 2


def test_parse_spec():
    assert parse_spec("cactus:MMPO") == ChainSpec.of("cactus", "MMPO")
    assert parse_spec("benzenoid:slr") == ChainSpec.of("benzenoid", "SLR")
    assert parse_spec("cactus:", length=1) == ChainSpec(Family.CACTUS, "", 1)
    assert parse_spec("Z5") == named_spec("Z", 5)
    assert str(parse_spec("cactus:MMPO")) == "cactus:MMPO"
    for bad in ("Q5", "cactus", "plant:MM", "cactus:XY"):
        with pytest.raises(SpecError):
            parse_spec(bad)
    with pytest.raises(SpecError):
        parse_spec("Z5", length=4)


def test_aux_examples():
    g = build_auxiliary(AuxGraphId("P", 2, 1))
    assert (g.num_vertices, len(g.edges)) == (7, 7)
    # the pendant vertex sits at the para position of the hexagon
    nxg = g.to_networkx()
    leaf = next(v for v in nxg if nxg.degree(v) == 1)
    anchor = next(iter(nxg[leaf]))
    ring = [v for v in nxg if v != leaf]
    dists = nx.single_source_shortest_path_length(nxg.subgraph(ring), anchor)
    assert max(dists.values()) == 3
    assert count_maximal(build_auxiliary(AuxGraphId("P", 1, 0))) == 2
    assert count_maximal(build_auxiliary(AuxGraphId("L", 3, 1))) == 7


def test_aux_id_validation():
    with pytest.raises(SpecError):
        AuxGraphId("P", 4, 1)
    with pytest.raises(SpecError):
        AuxGraphId("Q", 1, 1)
    with pytest.raises(SpecError):
        AuxGraphId("Z", 5, -1)
    assert str(AuxGraphId("Z", 5, 2)) == "Z^5_2"


@pytest.mark.parametrize("seq", "PMOLZH")
def test_every_auxiliary_graph_matches_its_system(seq):
    sy = paper_system(seq)
    rows = evaluate_aux_system(sy, 3)
    for i in range(1, AUX_RANGE[seq] + 1):
        got = [count_maximal(build_auxiliary(AuxGraphId(seq, i, n))) for n in range(4)]
        assert got == rows[f"{sy.main}^{i}"][:4], (seq, i)
