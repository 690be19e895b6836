"""Coloring templates, the main constructive algorithm, certificates."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from fivering.coloring import (ColoringCertificate, color_p5_k1uk3,
                               color_sumner, coloring_phi, coloring_phi3,
                               coloring_psi, coloring_rotated_traces,
                               validate_coloring)
from fivering.errors import (ClassViolationError, FiveringError,
                             HypothesisNotApplicableError,
                             PartialColoringError,
                             StructuralAssumptionError)
from fivering.generators import enumerate_class, gen_random_in_class, in_class
from fivering.graph import (add_vertex, blow_up, complete_graph, cycle_graph,
                            disjoint_union, empty_graph, from_edges,
                            induced_subgraph, is_isomorphic, mask_of,
                            path_graph)
from fivering.holes import partition_by_hole
from fivering.oracles import chromatic_exact, omega_exact
from fivering.recognizers import find_five_hole

from conftest import graphs, random_graph

C5 = cycle_graph(5)
HOLE = (0, 1, 2, 3, 4)


# ----------------------------------------------------------------------
# certificate mechanics


def test_certificate_normalization():
    cert = ColoringCertificate(colors={0: 7, 1: 3, 2: 7}, num_colors=2,
                               algorithm="exact", valid=True)
    norm = cert.normalized()
    assert norm.colors == {0: 0, 1: 1, 2: 0}
    assert norm.num_colors == 2
    assert norm.algorithm == "exact" and norm.valid


def test_certificate_json_shape():
    cert = ColoringCertificate(colors={0: 1, 2: 0}, num_colors=2,
                               algorithm="exact", valid=True)
    obj = cert.to_json_obj(n=4)
    assert obj == {"colors": [1, None, 0, None], "num_colors": 2,
                   "algorithm": "exact", "valid": True}


def test_validate_coloring():
    good = ColoringCertificate(colors={0: 0, 1: 1, 2: 0, 3: 1, 4: 2},
                               num_colors=3, algorithm="exact", valid=True)
    ok, clash = validate_coloring(C5, good)
    assert ok and clash is None

    bad = ColoringCertificate(colors={0: 0, 1: 0, 2: 1, 3: 0, 4: 1},
                              num_colors=2, algorithm="exact", valid=True)
    ok, clash = validate_coloring(C5, bad)
    assert not ok and clash == (0, 1)

    partial = ColoringCertificate(colors={0: 0}, num_colors=1,
                                  algorithm="exact", valid=True)
    with pytest.raises(PartialColoringError) as err:
        validate_coloring(C5, partial)
    assert err.value.uncolored == (1, 2, 3, 4)


# ----------------------------------------------------------------------
# template builders


def test_psi_on_bare_hole():
    hp = partition_by_hole(C5, HOLE)
    cert = coloring_psi(C5, hp)
    assert tuple(cert.colors[v] for v in range(5)) == (3, 2, 0, 1, 2)
    assert cert.num_colors == 4  # class of spread {1,3} stays empty here
    assert cert.algorithm == "psi"
    ok, _ = validate_coloring(C5, cert)
    assert ok


def _psi_expected_classes(hp):
    v = hp.hole_vertex
    return [
        hp.bucket(2, 4) | hp.bucket(1, 2, 4) | {v(3)},
        hp.bucket(3, 5) | hp.bucket(2, 3, 5) | {v(4)},
        hp.bucket(1, 4) | hp.bucket(1, 3, 4) | {v(2), v(5)},
        hp.bucket(2, 5) | hp.bucket(2, 4, 5) | {v(1)},
        hp.bucket(1, 3) | hp.bucket(1, 3, 5),
    ]


def test_psi_is_set_exact_on_ring():
    g, _ = blow_up(C5, [2, 1, 2, 1, 1])
    hp = partition_by_hole(g, find_five_hole(g))
    cert = coloring_psi(g, hp)
    for idx, want in enumerate(_psi_expected_classes(hp)):
        got = {x for x, c in cert.colors.items() if c == idx}
        assert got == set(want)
    ok, _ = validate_coloring(g, cert)
    assert ok


def test_psi_coverage_failure():
    # consecutive-pair trace falls through every psi class
    g = add_vertex(C5, mask_of([0, 1]))
    hp = partition_by_hole(g, HOLE)
    with pytest.raises(StructuralAssumptionError) as err:
        coloring_psi(g, hp)
    assert err.value.claim_id == "psi.coverage"
    assert err.value.witness == (5,)


def test_psi_properness_failure():
    # two adjacent vertices forced into the same spread class
    g = add_vertex(C5, mask_of([0, 2]))
    g = add_vertex(g, mask_of([0, 2, 5]))
    hp = partition_by_hole(g, HOLE)
    with pytest.raises(StructuralAssumptionError) as err:
        coloring_psi(g, hp)
    assert err.value.claim_id == "psi.proper"
    assert err.value.witness == (5, 6)


def test_phi_on_far_side_instance():
    g = add_vertex(C5, mask_of([0, 1, 3]))   # split triple
    g = add_vertex(g, mask_of([5]))          # far vertex
    hp = partition_by_hole(g, HOLE)
    cert = coloring_phi(g, hp)
    assert set(cert.colors) == set(range(6))  # hole + neighborhood only
    # properness on the colored part
    for u, v in g.edges():
        if u in cert.colors and v in cert.colors:
            assert cert.colors[u] != cert.colors[v]
    assert cert.num_colors <= 4


def test_phi3_on_join_member():
    for seed in range(3):
        for g in gen_random_in_class("p5_k1joink1uk3_free", 8, seed, 30,
                                     stride=10):
            hole = find_five_hole(g)
            if hole is None:
                continue
            hp = partition_by_hole(g, hole)
            if hp.consec_triple_union or hp.full_trace or hp.m_set:
                continue
            cert = coloring_phi3(g, hp)
            for u, v in g.edges():
                if u in cert.colors and v in cert.colors:
                    assert cert.colors[u] != cert.colors[v]
            assert cert.num_colors <= 5


def test_rotated_traces_default_and_strict():
    hp = partition_by_hole(C5, HOLE)
    cert = coloring_rotated_traces(C5, hp)
    ok, _ = validate_coloring(C5, cert)
    assert ok
    with pytest.raises(HypothesisNotApplicableError):
        coloring_rotated_traces(C5, hp, require_hypothesis=True)


def test_rotated_traces_strict_passes_with_full_trace_edge():
    g = add_vertex(C5, mask_of([0, 1, 2, 3, 4]))
    g = add_vertex(g, mask_of([0, 1, 2, 3, 4, 5]))
    hp = partition_by_hole(g, HOLE)
    cert = coloring_rotated_traces(g, hp, require_hypothesis=True)
    # the two full-trace vertices stay uncolored by this template
    assert 5 not in cert.colors and 6 not in cert.colors
    for u, v in g.edges():
        if u in cert.colors and v in cert.colors:
            assert cert.colors[u] != cert.colors[v]


# ----------------------------------------------------------------------
# three-color decomposition


def test_sumner_knowns():
    assert color_sumner(cycle_graph(6)).num_colors == 2
    assert color_sumner(C5).num_colors == 3
    assert color_sumner(path_graph(1)).num_colors == 1
    assert color_sumner(empty_graph(0)).num_colors == 0

    ring, _ = blow_up(C5, [2, 3, 1, 2, 1])
    cert = color_sumner(ring)
    assert cert.num_colors == 3
    ok, _ = validate_coloring(ring, cert)
    assert ok


def test_sumner_shares_palette_across_components():
    g = disjoint_union(cycle_graph(6), C5)
    cert = color_sumner(g)
    assert cert.num_colors == 3
    ok, _ = validate_coloring(g, cert)
    assert ok


def test_sumner_rejects_with_witness():
    with pytest.raises(ClassViolationError) as err:
        color_sumner(complete_graph(3))
    assert err.value.class_name == "p5_k3_free"
    assert len(err.value.witness) == 3

    # odd hole longer than 5: neither bipartite nor a ring; the witness
    # is the induced P5 inside it
    with pytest.raises(ClassViolationError) as err:
        color_sumner(cycle_graph(7))
    sub, _ = induced_subgraph(cycle_graph(7), err.value.witness)
    assert is_isomorphic(sub, path_graph(5))


def test_sumner_exhaustive_small():
    # every triangle-free P5-free graph on <= 5 vertices colors with <= 3
    for g in enumerate_class("p5_k3_free", 5):
        cert = color_sumner(g)
        assert cert.num_colors <= 3
        ok, _ = validate_coloring(g, cert)
        assert ok


# ----------------------------------------------------------------------
# constructive coloring, union class


@pytest.mark.parametrize("g, colors", [
    (empty_graph(0), 0),
    (empty_graph(3), 1),
    (complete_graph(1), 1),
    (C5, 3),
    (complete_graph(5), 5),
    (blow_up(C5, [3, 2, 1, 1, 2])[0], 3),
    (blow_up(C5, [2, 2, 2, 2, 2])[0], 3),
])
def test_main_coloring_knowns(g, colors):
    cert = color_p5_k1uk3(g)
    assert cert.num_colors == colors
    ok, _ = validate_coloring(g, cert)
    assert ok
    assert cert.algorithm == "main0"
    assert cert.valid


def test_main_coloring_rejects_non_members():
    with pytest.raises(ClassViolationError) as err:
        color_p5_k1uk3(cycle_graph(6))
    assert err.value.class_name == "p5_k1uk3_free"
    sub, _ = induced_subgraph(cycle_graph(6), err.value.witness)
    assert is_isomorphic(sub, path_graph(5))

    pattern = disjoint_union(complete_graph(1), complete_graph(3))
    with pytest.raises(ClassViolationError) as err:
        color_p5_k1uk3(pattern)
    assert len(err.value.witness) == 4


def test_main_coloring_palette_is_contiguous():
    # any member with a triangle is connected (a far vertex would form
    # the forbidden pattern), so multi-component members are sparse
    g = disjoint_union(C5, disjoint_union(C5, path_graph(3)))
    cert = color_p5_k1uk3(g)
    assert cert.num_colors == 3
    assert set(cert.colors.values()) == set(range(3))


def test_main_coloring_budget_and_sandwich_small():
    for g in enumerate_class("p5_k1uk3_free", 5):
        cert = color_p5_k1uk3(g)
        ok, _ = validate_coloring(g, cert)
        assert ok
        if g.n == 0:
            continue
        omega = omega_exact(g).value
        chi = chromatic_exact(g).value
        assert chi <= cert.num_colors <= 2 * omega - 1


def test_main_coloring_deterministic():
    g, _ = blow_up(C5, [2, 1, 3, 1, 2])
    a = color_p5_k1uk3(g)
    b = color_p5_k1uk3(g)
    assert a.colors == b.colors and a.num_colors == b.num_colors


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=8))
def test_main_coloring_never_lies(g):
    # without the class gate the engine may reject with a structured
    # error, but a certificate it does return must be proper
    try:
        cert = color_p5_k1uk3(g, verify=False)
    except FiveringError:
        return
    ok, clash = validate_coloring(g, cert)
    assert ok, clash
    assert cert.valid


def test_walk_members_color_within_budget():
    for seed in range(3):
        for g in gen_random_in_class("p5_k1uk3_free", 11, seed, 60,
                                     stride=20):
            cert = color_p5_k1uk3(g)
            ok, _ = validate_coloring(g, cert)
            assert ok
            assert cert.num_colors <= 2 * omega_exact(g).value - 1
