from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from ramsey_forge import generators as gen
from ramsey_forge.bandwidth import heuristic_labeling
from ramsey_forge.drc import (
    DegenerateBudget,
    bad_supports,
    bad_tuple_count,
    bipartition_of,
    default_bandwidth_beta,
    drc_bandwidth_embed,
    drc_properties,
    drc_select,
    surjection_count,
)
from ramsey_forge.graphs import Graph, mask_of
from ramsey_forge.morphisms import verify_homomorphism


def test_surjection_count():
    assert surjection_count(3, 1) == 1
    assert surjection_count(3, 2) == 6
    assert surjection_count(3, 3) == 6
    assert surjection_count(2, 1) == 1
    assert surjection_count(2, 2) == 2


def brute_bad_tuples(g, members, d, threshold):
    bad = 0
    full = (1 << g.n) - 1
    for tup in itertools.product(members, repeat=d):
        common = full
        for v in tup:
            common &= g.adj[v]
        if common.bit_count() < threshold:
            bad += 1
    return bad


def test_bad_tuple_count_matches_brute_force():
    g = gen.random_bounded_degree_graph(10, 5, seed=4)
    members = list(range(g.n))
    x_mask = mask_of(members)
    for d in (1, 2, 3):
        for threshold in (Fraction(2), Fraction(4), Fraction(7)):
            assert bad_tuple_count(g, x_mask, d, threshold) == brute_bad_tuples(
                g, members, d, threshold
            )


def test_bad_supports_min_degree_shortcut():
    g = gen.complete(12)
    # codegree of any pair is 10 >= 5, shortcut applies
    assert bad_supports(g, (1 << 12) - 1, 2, Fraction(5)) == []


def test_drc_select_on_complete_graph():
    g = gen.complete(16)
    sel = drc_select(g, range(16), 2, Fraction(1, 8), seed=0, alpha=Fraction(1, 2))
    # best tuple is the repeated vertex: X = N(v), size n-1
    assert sel.size == 15
    assert sel.mode == "exhaustive"
    assert sel.bad_tuples == 0
    # returned set equals the exact common neighborhood of the chosen tuple
    common = (1 << 16) - 1
    for v in sel.chosen_tuple:
        common &= g.adj[v]
    assert mask_of(sel.x) == common


def test_drc_select_edgeless():
    g = Graph(6)
    sel = drc_select(g, range(6), 2, Fraction(1, 8), seed=0, alpha=Fraction(1, 2))
    assert sel.size == 0


def test_drc_select_validation():
    with pytest.raises(ValueError):
        drc_select(gen.complete(4), range(4), 0, Fraction(1, 8))
    with pytest.raises(ValueError):
        drc_select(gen.complete(4), range(4), 2, Fraction(1, 8), trials=0)
    with pytest.raises(ValueError):
        drc_select(Graph(0), [], 1, Fraction(1, 8))


def test_drc_properties_on_min_degree_hosts():
    ok = 0
    for seed in range(20):
        host = gen.random_min_degree_host(48, Fraction(1, 4), seed)
        sel = drc_select(host, range(48), 2, Fraction(1, 48), seed=seed, alpha=Fraction(3, 4))
        props = drc_properties(
            host, (1 << 48) - 1, mask_of(sel.x), 2, Fraction(3, 4), Fraction(1, 48)
        )
        ok += all(props)
    assert ok >= 19


def test_bipartition():
    a, b = bipartition_of(gen.cycle(6))
    assert a | b == (1 << 6) - 1 and a & b == 0
    with pytest.raises(ValueError):
        bipartition_of(gen.cycle(5))


def ladder(rungs: int) -> Graph:
    edges = []
    for i in range(rungs - 1):
        edges.append((2 * i, 2 * i + 2))
        edges.append((2 * i + 1, 2 * i + 3))
    for i in range(rungs):
        edges.append((2 * i, 2 * i + 1))
    return Graph(2 * rungs, edges)


def test_default_beta_constant():
    assert default_bandwidth_beta(Fraction(1, 2), 3) == Fraction(1, 2) ** 19 / 768
    assert default_bandwidth_beta(Fraction(1, 2), 3) == Fraction(1, 402653184)


def test_degenerate_budget_detected():
    host = gen.complete(128)
    h = ladder(8)
    labels, _ = heuristic_labeling(h)
    with pytest.raises(DegenerateBudget):
        drc_bandwidth_embed(host, h, labels, Fraction(1, 2), max_deg=3)


def test_matching_into_complete_host():
    # perfect matching with pairwise-adjacent labels: bandwidth 1
    q = 6
    h = Graph(2 * q, [(2 * i, 2 * i + 1) for i in range(q)])
    labels = list(range(2 * q))
    host = gen.complete(40)
    vmap = drc_bandwidth_embed(
        host, h, labels, Fraction(1, 2), seed=0, max_deg=1, beta=Fraction(1, 8)
    )
    assert vmap is not None
    assert vmap.is_injective()
    assert verify_homomorphism(h, host, vmap).valid


def test_odd_cycle_rejected():
    host = gen.complete(40)
    h = gen.cycle(5)
    labels = list(range(5))
    with pytest.raises(ValueError):
        drc_bandwidth_embed(host, h, labels, Fraction(1, 2), beta=Fraction(1, 8))


def test_width_over_budget_rejected():
    host = gen.complete(32)
    h = Graph(8, [(0, 7)])
    labels = list(range(8))
    with pytest.raises(ValueError):
        drc_bandwidth_embed(host, h, labels, Fraction(1, 2), beta=Fraction(1, 16))


def test_ladder_into_complete_host_verified():
    host = gen.complete(128)
    h = ladder(16)
    labels, width = heuristic_labeling(h)
    assert width <= 8
    succ = 0
    for seed in range(10):
        vmap = drc_bandwidth_embed(
            host, h, labels, Fraction(1, 2), seed=seed, max_deg=3, beta=Fraction(1, 16)
        )
        if vmap is not None:
            succ += 1
            assert vmap.is_injective()
            assert verify_homomorphism(h, host, vmap).valid
    assert succ >= 9
