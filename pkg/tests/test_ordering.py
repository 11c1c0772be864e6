import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strongedge import (
    EdgeOrdering,
    EdgeSubset,
    GenSpec,
    GraphError,
    MultiGraph,
    NotKDegenerateError,
    build_ordering,
    degeneracy,
    find_special_edge,
    generate,
    is_special_vertex,
    verify_ordering,
)
from strongedge.ordering import ordering_from_json, ordering_to_json

from .oracles import brute_degeneracy
from .strategies import multigraphs


def reference_ordering(g, k, prefer_high=True):
    """Repeat the slow special-edge search on an explicit live set."""
    live = EdgeSubset.full(g)
    picked = []
    while len(live):
        found = find_special_edge(g, live, k, prefer_high=prefer_high)
        if found is None:
            raise NotKDegenerateError
        picked.append(found)
        live = live.without(found[0])
    return tuple(reversed(picked))


# ---------------------------------------------------------------- degeneracy


@pytest.mark.parametrize("seed", range(5))
def test_degeneracy_tree(seed):
    assert degeneracy(generate(GenSpec("random-tree", 12, seed=seed))).k == 1


def test_degeneracy_examples(named):
    assert degeneracy(named["C5"]).k == 2
    assert degeneracy(named["K5"]).k == 4
    assert degeneracy(named["double"]).k == 2
    assert degeneracy(MultiGraph(3)).k == 0
    assert degeneracy(MultiGraph(0)).k == 0


@settings(max_examples=150)
@given(multigraphs(max_n=7, max_m=14))
def test_degeneracy_matches_subset_enumeration(g):
    cert = degeneracy(g)
    assert cert.k == brute_degeneracy(g.n, g.edges)
    assert sorted(cert.peel_order) == list(range(g.n))
    assert max(cert.back_degrees, default=0) == cert.k


# ------------------------------------------------------------ special tests


def test_is_special_vertex_examples(named):
    star = named["star3"]
    assert is_special_vertex(star, EdgeSubset.full(star), 0, 1)
    k5 = named["K5"]
    assert not any(is_special_vertex(k5, EdgeSubset.full(k5), v, 2) for v in range(5))
    c5 = named["C5"]
    assert all(is_special_vertex(c5, EdgeSubset.full(c5), v, 2) for v in range(5))


def test_special_counts_distinct_neighbors():
    # vertex 0 has three parallel edges to 1 (degree 3 > 1) and one edge to 2
    g = MultiGraph(3, [(0, 1), (0, 1), (0, 1), (0, 2), (1, 2)])
    assert is_special_vertex(g, EdgeSubset.full(g), 0, 1) is False  # 1 and 2 both exceed k
    assert is_special_vertex(g, EdgeSubset.full(g), 0, 2)  # only 1 exceeds 2


def test_find_special_edge_examples(named):
    p2 = named["P2"]
    assert find_special_edge(p2, EdgeSubset.full(p2), 1) == (0, 0)
    k5 = named["K5"]
    assert find_special_edge(k5, EdgeSubset.full(k5), 2) is None
    c5 = named["C5"]
    assert find_special_edge(c5, EdgeSubset.full(c5), 2) == (0, 0)


def test_find_special_edge_prefers_high_degree_endpoint(named):
    star = named["star5"]
    # the center has degree 5 > k and every neighbor is a leaf
    assert find_special_edge(star, EdgeSubset.full(star), 1) == (0, 0)
    # an isolated edge 0-1 beside a cherry centered at 2 (degree 2 > k)
    g = MultiGraph(5, [(0, 1), (2, 3), (2, 4)])
    assert find_special_edge(g, EdgeSubset.full(g), 1) == (1, 2)
    assert find_special_edge(g, EdgeSubset.full(g), 1, prefer_high=False) == (0, 0)


def test_find_special_edge_empty_live(named):
    with pytest.raises(ValueError):
        find_special_edge(named["C5"], EdgeSubset(named["C5"]), 2)


# --------------------------------------------------------------- building


def test_build_ordering_single_edge(named):
    ordering = build_ordering(named["P2"], 1)
    assert ordering.sequence == ((0, 0),)


def test_build_ordering_first_found_goes_last(named):
    ordering = build_ordering(named["C5"], 2)
    assert ordering.sequence[-1] == (0, 0)


def test_build_ordering_k5_too_small_k(named):
    with pytest.raises(NotKDegenerateError):
        build_ordering(named["K5"], 2)
    assert verify_ordering(named["K5"], 4, build_ordering(named["K5"]))


def test_build_ordering_edgeless():
    g = MultiGraph(4)
    ordering = build_ordering(g)
    assert ordering.sequence == ()
    assert verify_ordering(g, 0, ordering)


def test_build_ordering_negative_k(named):
    with pytest.raises(ValueError):
        build_ordering(named["P2"], -1)


@pytest.mark.parametrize("seed", range(10))
def test_tree_orderings(seed):
    g = generate(GenSpec("random-tree", 30, seed=seed))
    ordering = build_ordering(g, 1)
    assert len(ordering) == g.m == 29
    assert verify_ordering(g, 1, ordering)


@settings(max_examples=150)
@given(multigraphs(max_n=8, max_m=14), st.booleans())
def test_incremental_builder_matches_reference_search(g, prefer_high):
    k = degeneracy(g).k
    assert build_ordering(g, k, prefer_high=prefer_high).sequence == reference_ordering(
        g, k, prefer_high
    )


@settings(max_examples=150)
@given(multigraphs(max_n=8, max_m=14), st.integers(0, 3))
def test_existence_for_every_k_at_least_degeneracy(g, extra):
    k = degeneracy(g).k + extra
    ordering = build_ordering(g, k)
    assert verify_ordering(g, k, ordering)
    assert ordering.moreover_held
    assert build_ordering(g, k) == ordering


@settings(max_examples=100)
@given(multigraphs(max_n=8, max_m=14))
def test_below_degeneracy_fails(g):
    k = degeneracy(g).k
    if k == 0:
        return
    with pytest.raises(NotKDegenerateError):
        build_ordering(g, k - 1)


def test_moreover_clause_tracked_without_preference():
    for seed in range(40):
        g = generate(GenSpec("random-k-degenerate", 30, 3, seed))
        k = degeneracy(g).k
        assert build_ordering(g, k, prefer_high=False).moreover_held


def test_corpus_orderings_verify():
    for seed in range(200):
        k = 1 + seed % 4
        g = generate(GenSpec("random-k-degenerate", 10 + seed % 40, k, seed))
        ordering = build_ordering(g, degeneracy(g).k)
        assert verify_ordering(g, ordering.k, ordering), seed


# ------------------------------------------------------------ verification


def test_verify_rejects_swapped_diamond(named):
    g = named["diamond"]
    ordering = build_ordering(g, 2)
    assert verify_ordering(g, 2, ordering)
    seq = list(ordering.sequence)
    seq[0], seq[-1] = seq[-1], seq[0]
    verdict = verify_ordering(g, 2, EdgeOrdering(tuple(seq), 2))
    assert not verdict
    assert verdict.position == 4


def test_every_c5_ordering_is_valid(named):
    # max degree equals k, so every edge is special in every prefix
    g = named["C5"]
    for perm in itertools.permutations(range(5)):
        for ends in itertools.product((0, 1), repeat=5):
            seq = tuple((e, g.edges[e][s]) for e, s in zip(perm, ends))
            assert verify_ordering(g, 2, EdgeOrdering(seq, 2))


def test_verify_reports_non_special_vertex():
    # star K1,3 with k=1 ordered so the leaf 1 is claimed special while 0 is high
    g = generate(GenSpec("star", 4))
    bad = EdgeOrdering(((0, 0), (1, 0), (2, 3)), 1)
    verdict = verify_ordering(g, 1, bad)
    assert not verdict and verdict.position == 3
    assert "degree" in verdict.reason


def test_verify_reports_wrong_endpoint(named):
    verdict = verify_ordering(named["P3"], 1, EdgeOrdering(((0, 2), (1, 1)), 1))
    assert verdict.position == 1 and "not an endpoint" in verdict.reason


def test_verify_malformed(named):
    with pytest.raises(GraphError):
        verify_ordering(named["P3"], 1, EdgeOrdering(((0, 0), (0, 1)), 1))


def test_empty_ordering_passes():
    assert verify_ordering(MultiGraph(0), 0, EdgeOrdering((), 0))


def test_ordering_json_round_trip(named):
    g = named["petersen"]
    ordering = build_ordering(g)
    records = ordering_to_json(g, ordering)
    assert records[0]["pos"] == 1 and set(records[0]) == {"pos", "edge", "id", "special"}
    assert ordering_from_json(g, records, ordering.k).sequence == ordering.sequence
