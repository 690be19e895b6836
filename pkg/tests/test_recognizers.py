"""Class recognizers, hole finding, bipartiteness, twin quotients."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from fivering.graph import (add_vertex, blow_up, complement, complete_graph,
                            cycle_graph, disjoint_union, empty_graph,
                            from_edges, induced_subgraph, is_isomorphic,
                            join, mask_of, path_graph)
from fivering.oracles import contains_induced_bruteforce
from fivering.recognizers import (C5, CLASS_PATTERNS, K1_JOIN_K1_UNION_K3,
                                  K1_UNION_K3, K3, P5, contains_induced,
                                  find_five_hole, find_hole,
                                  find_non_dominating_five_hole,
                                  is_bipartite, is_blow_up_of, is_five_ring,
                                  is_k1_join_k1uk3_free, is_k1uk3_free,
                                  is_k3_free, is_p5_free, recognize,
                                  twin_quotient)

from conftest import graphs, random_graph


def test_pattern_constants():
    assert P5.n == 5 and P5.num_edges == 4
    assert C5.n == 5 and C5.num_edges == 5
    assert K1_UNION_K3.n == 4 and K1_UNION_K3.num_edges == 3
    assert K1_JOIN_K1_UNION_K3.n == 5 and K1_JOIN_K1_UNION_K3.num_edges == 7
    assert set(CLASS_PATTERNS) == {"p5_free", "k1uk3_free",
                                   "k1_join_k1uk3_free", "k3_free"}


def test_flags_on_knowns():
    c5 = cycle_graph(5)
    assert is_p5_free(c5) and is_k3_free(c5) and is_k1uk3_free(c5)
    assert is_k1_join_k1uk3_free(c5)

    c6 = cycle_graph(6)
    assert not is_p5_free(c6)

    # triangle plus a far apart vertex
    g = disjoint_union(complete_graph(3), empty_graph(1))
    assert not is_k1uk3_free(g)
    assert is_k1_join_k1uk3_free(g)

    # wheel-like: apex over triangle+point
    w = join(empty_graph(1), g)
    assert not is_k1_join_k1uk3_free(w)

    assert is_k3_free(path_graph(4))
    assert not is_k3_free(complete_graph(3))


def test_witness_is_an_induced_copy():
    g = cycle_graph(6)
    hit = contains_induced(g, P5)
    assert hit is not None
    sub, _ = induced_subgraph(g, hit)
    assert is_isomorphic(sub, P5)


def test_must_include_restriction():
    # P4 plus an isolated vertex: any P4 copy misses vertex 4
    g = from_edges(5, [(0, 1), (1, 2), (2, 3)])
    p4 = path_graph(4)
    assert contains_induced(g, p4) is not None
    assert contains_induced(g, p4, must_include=(4,)) is None
    assert contains_induced(g, p4, must_include=(0, 3)) is not None


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=8))
def test_fast_search_agrees_with_bruteforce(g):
    for pattern in (P5, C5, K3, K1_UNION_K3, K1_JOIN_K1_UNION_K3):
        fast = contains_induced(g, pattern)
        slow = contains_induced_bruteforce(g, pattern)
        assert (fast is None) == (slow is None)
        if fast is not None:
            sub, _ = induced_subgraph(g, fast)
            assert is_isomorphic(sub, pattern)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_hereditary_closure(g):
    rng = random.Random(g.n * 131 + g.num_edges)
    keep = [v for v in range(g.n) if rng.random() < 0.6]
    sub, _ = induced_subgraph(g, keep)
    for name, pattern in CLASS_PATTERNS.items():
        if contains_induced(g, pattern) is None:
            assert contains_induced(sub, pattern) is None


def test_recognize_report():
    rep = recognize(cycle_graph(5))
    assert rep.all_free
    assert rep.witnesses == {}

    rep = recognize(cycle_graph(6), classes=["p5_free"], with_numbers=True)
    assert rep.flags == {"p5_free": False}
    assert len(rep.witnesses["p5_free"]) == 5
    assert rep.omega == 2 and rep.alpha == 3
    obj = rep.to_json_obj()
    assert obj["flags"] == {"p5_free": False}
    assert obj["omega"] == 2

    with pytest.raises(ValueError):
        recognize(cycle_graph(5), classes=["p6_free"])


def test_find_hole():
    assert find_hole(complete_graph(5), 4) is None
    assert find_hole(cycle_graph(5), 4) is None
    order = find_hole(cycle_graph(6), 6)
    assert order is not None and len(order) == 6
    assert find_five_hole(cycle_graph(5)) == (0, 1, 2, 3, 4)
    # hole order is cyclic: consecutive entries adjacent, others not
    g = blow_up(cycle_graph(5), [2, 1, 1, 1, 1])[0]
    order = find_five_hole(g)
    for i in range(5):
        for j in range(i + 1, 5):
            want = (j - i) in (1, 4)
            assert g.has_edge(order[i], order[j]) == want
    with pytest.raises(ValueError):
        find_hole(cycle_graph(5), 3)


def test_non_dominating_hole():
    assert find_non_dominating_five_hole(cycle_graph(5)) is None
    g = disjoint_union(cycle_graph(5), empty_graph(1))
    hit = find_non_dominating_five_hole(g)
    assert hit is not None
    hole, far = hit
    assert far == frozenset({5})
    # attaching the far vertex to the hole makes it dominating again
    h = add_vertex(cycle_graph(5), mask_of([0]))
    assert find_non_dominating_five_hole(h) is None


def test_bipartite():
    res = is_bipartite(cycle_graph(6))
    assert res.bipartite
    assert set(res.colors.values()) == {0, 1}
    for u, v in cycle_graph(6).edges():
        assert res.colors[u] != res.colors[v]

    res = is_bipartite(cycle_graph(5))
    assert not res.bipartite
    cyc = res.odd_cycle
    assert len(cyc) % 2 == 1
    for i, u in enumerate(cyc):
        assert cycle_graph(5).has_edge(u, cyc[(i + 1) % len(cyc)])

    assert is_bipartite(empty_graph(0)).bipartite


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8))
def test_bipartite_odd_cycle_witness(g):
    res = is_bipartite(g)
    if res.bipartite:
        for u, v in g.edges():
            assert res.colors[u] != res.colors[v]
    else:
        cyc = res.odd_cycle
        assert len(cyc) % 2 == 1 and len(cyc) >= 3
        assert len(set(cyc)) == len(cyc)
        for i, u in enumerate(cyc):
            assert g.has_edge(u, cyc[(i + 1) % len(cyc)])


def test_twin_quotient():
    g, bags = blow_up(cycle_graph(5), [2, 1, 3, 1, 1])
    q, qbags = twin_quotient(g)
    assert q.n == 5
    assert is_isomorphic(q, cycle_graph(5))
    assert sorted(len(b) for b in qbags) == [1, 1, 1, 2, 3]
    # quotient of a twin-free graph is itself
    q2, bags2 = twin_quotient(path_graph(4))
    assert q2 == path_graph(4)
    assert all(len(b) == 1 for b in bags2)


def test_five_ring_detection():
    g, _ = blow_up(cycle_graph(5), [2, 1, 3, 1, 2])
    bags = is_five_ring(g)
    assert bags is not None
    assert sorted(len(b) for b in bags) == [1, 1, 2, 2, 3]
    # bags come back in cyclic order
    for i in range(5):
        u = bags[i][0]
        v = bags[(i + 1) % 5][0]
        assert g.has_edge(u, v)

    assert is_five_ring(cycle_graph(5)) is not None
    assert is_five_ring(cycle_graph(6)) is None
    assert is_five_ring(complete_graph(5)) is None
    assert is_five_ring(empty_graph(5)) is None


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=5, max_n=8))
def test_five_ring_implies_triangle_free(g):
    if is_five_ring(g) is not None:
        assert is_k3_free(g)


def test_is_blow_up_of():
    c5 = cycle_graph(5)
    g, _ = blow_up(c5, [2, 2, 1, 1, 1])
    assert is_blow_up_of(g, c5)
    assert not is_blow_up_of(cycle_graph(6), c5)
    # empty bags: a P3 is a blow-up of C5 with two bags empty
    assert is_blow_up_of(path_graph(3), c5, allow_empty_bags=True)
    assert not is_blow_up_of(path_graph(3), c5)


def test_blow_up_round_trip_through_quotient(rng):
    # patterns without false twins come back exactly
    for _ in range(40):
        pattern = random_graph(rng, rng.randrange(1, 6), 0.5)
        q, _ = twin_quotient(pattern)
        if q.n != pattern.n:
            continue  # pattern itself has twins; skip
        sizes = [rng.randrange(1, 4) for _ in range(pattern.n)]
        g, _ = blow_up(pattern, sizes)
        back, _ = twin_quotient(g)
        assert is_isomorphic(back, pattern)
