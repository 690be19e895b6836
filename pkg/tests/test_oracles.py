"""Exact oracles: clique, independence, chromatic number, pattern search.

Derived values in other test modules lean on these, so the oracles get
their own independent checks against hand-countable graphs and against
each other.
"""

from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings

from fivering.errors import SizeBoundError, PatternSizeError
from fivering.graph import (blow_up, complement, complete_graph,
                            cycle_graph, disjoint_union, empty_graph,
                            from_edges, join, path_graph)
from fivering.oracles import (alpha_exact, chromatic_exact,
                              contains_induced_bruteforce,
                              find_odd_hole_or_antihole, omega_exact)
from fivering.coloring import ColoringCertificate, validate_coloring

from conftest import graphs, random_graph

PROPERTY = settings(max_examples=300, deadline=None)


@pytest.mark.parametrize("g, omega, alpha, chi", [
    (empty_graph(0), 0, 0, 0),
    (empty_graph(4), 1, 4, 1),
    (complete_graph(6), 6, 1, 6),
    (cycle_graph(5), 2, 2, 3),
    (cycle_graph(6), 2, 3, 2),
    (cycle_graph(7), 2, 3, 3),
    (path_graph(5), 2, 3, 2),
    (join(cycle_graph(5), cycle_graph(5)), 4, 2, 6),
])
def test_known_values(g, omega, alpha, chi):
    assert omega_exact(g).value == omega
    assert alpha_exact(g).value == alpha
    assert chromatic_exact(g).value == chi


def test_certificates():
    g = cycle_graph(5)
    om = omega_exact(g)
    assert len(om.certificate) == 2
    u, v = om.certificate
    assert g.has_edge(u, v)

    al = alpha_exact(g)
    assert len(al.certificate) == 2
    u, v = al.certificate
    assert not g.has_edge(u, v)

    ch = chromatic_exact(g)
    cert = ColoringCertificate(colors=dict(ch.certificate), num_colors=ch.value,
                               algorithm="exact", valid=True)
    ok, clash = validate_coloring(g, cert)
    assert ok and clash is None


@PROPERTY
@given(graphs(max_n=8))
def test_alpha_is_omega_of_complement(g):
    assert alpha_exact(g).value == omega_exact(complement(g)).value


@PROPERTY
@given(graphs(max_n=7))
def test_omega_at_most_chi(g):
    assert omega_exact(g).value <= chromatic_exact(g).value


def _brute_omega(g) -> int:
    best = 0
    for k in range(g.n, 0, -1):
        for sub in itertools.combinations(range(g.n), k):
            if all(g.has_edge(u, v)
                   for u, v in itertools.combinations(sub, 2)):
                return k
    return best


def test_omega_against_subset_enumeration(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randrange(1, 8), rng.choice([0.3, 0.5, 0.8]))
        assert omega_exact(g).value == _brute_omega(g)


def test_chromatic_blow_up_inherits_pattern(rng):
    # bags can reuse the pattern colors, and the pattern embeds back
    for _ in range(25):
        n = rng.randrange(1, 6)
        pattern = random_graph(rng, n, 0.5)
        sizes = [rng.randrange(1, 4) for _ in range(n)]
        g, _bags = blow_up(pattern, sizes)
        assert chromatic_exact(g).value == chromatic_exact(pattern).value


def test_ring_blow_up_oracle_values(rng):
    # bags are independent, so a clique takes at most one vertex per bag
    # and any two clique vertices sit in adjacent bags: omega is 2.  An
    # independent set packs two bags at ring distance 2.
    c5 = cycle_graph(5)
    for _ in range(40):
        sizes = [rng.randrange(1, 5) for _ in range(5)]
        g, _bags = blow_up(c5, sizes)
        assert omega_exact(g).value == 2
        want_alpha = max(sizes[i] + sizes[(i + 2) % 5] for i in range(5))
        assert alpha_exact(g).value == want_alpha


def test_size_caps():
    with pytest.raises(SizeBoundError):
        omega_exact(empty_graph(65))
    with pytest.raises(SizeBoundError):
        chromatic_exact(empty_graph(33))
    with pytest.raises(SizeBoundError):
        find_odd_hole_or_antihole(empty_graph(17))
    with pytest.raises(PatternSizeError):
        contains_induced_bruteforce(empty_graph(8), cycle_graph(7))


def test_bruteforce_pattern_search():
    g = cycle_graph(6)
    hit = contains_induced_bruteforce(g, path_graph(4))
    assert hit is not None
    sub = sorted(hit)
    assert len(sub) == 4
    assert contains_induced_bruteforce(g, cycle_graph(3)) is None
    assert contains_induced_bruteforce(g, cycle_graph(6)) is not None


def test_odd_hole_antihole_probe():
    assert find_odd_hole_or_antihole(cycle_graph(4)) is None
    assert find_odd_hole_or_antihole(complete_graph(5)) is None

    kind, cyc = find_odd_hole_or_antihole(cycle_graph(5))
    assert kind == "odd_hole" and len(cyc) == 5

    kind, cyc = find_odd_hole_or_antihole(cycle_graph(7))
    assert kind == "odd_hole" and len(cyc) == 7

    kind, cyc = find_odd_hole_or_antihole(complement(cycle_graph(7)))
    assert kind == "odd_antihole" and len(cyc) == 7


def test_perfect_graph_spot_check(rng):
    # (odd hole, odd antihole)-free implies chi == omega; checked on
    # random graphs small enough for the probe
    seen = 0
    for _ in range(300):
        g = random_graph(rng, rng.randrange(1, 9), 0.5)
        if find_odd_hole_or_antihole(g) is None:
            seen += 1
            assert chromatic_exact(g).value == omega_exact(g).value
    assert seen > 50


def test_nodes_explored_reported():
    res = omega_exact(complete_graph(8))
    assert res.nodes_explored > 0
