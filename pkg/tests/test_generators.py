from __future__ import annotations

import math
from fractions import Fraction

import pytest

from ramsey_forge import generators as gen
from ramsey_forge.morphisms import verify_homomorphism


def test_path_cycle_complete():
    assert gen.path(1).edge_count() == 0
    assert gen.path(5).edge_count() == 4
    assert gen.cycle(5).edge_count() == 5
    assert all(gen.cycle(5).degree(v) == 2 for v in range(5))
    assert gen.complete(6).edge_count() == 15
    with pytest.raises(ValueError):
        gen.cycle(2)


def test_complete_multipartite():
    g = gen.complete_multipartite([2, 2, 2])
    assert g.n == 6
    assert g.edge_count() == 12
    assert all(g.degree(v) == 4 for v in range(6))
    with pytest.raises(ValueError):
        gen.complete_multipartite([2, 0])


def test_wheel():
    g = gen.wheel(6)
    hub = 5
    assert g.degree(hub) == 5
    assert all(g.degree(v) == 3 for v in range(5))
    with pytest.raises(ValueError):
        gen.wheel(3)


def test_path_power():
    g = gen.path_power(6, 2)
    assert g.has_edge(0, 2) and not g.has_edge(0, 3)
    assert gen.path_power(6, 1) == gen.path(6)


def test_hypercube():
    g = gen.hypercube(3)
    assert g.n == 8
    assert all(g.degree(v) == 3 for v in range(8))
    assert g.edge_count() == 12


def test_make_named():
    assert gen.make_named("cycle", [4]) == gen.cycle(4)
    with pytest.raises(ValueError):
        gen.make_named("moebius", [5])


def test_blowup_projection_is_homomorphism():
    spec = gen.BlowupSpec(gen.cycle(3), (2, 3, 1))
    g, proj = gen.blowup(spec)
    assert g.n == 6
    assert verify_homomorphism(g, spec.base, proj).valid
    parts = gen.blowup_parts(spec)
    assert [len(p) for p in parts] == [2, 3, 1]
    # parts are independent sets
    for p in parts:
        for u in p:
            for v in p:
                assert u == v or not g.has_edge(u, v)


def test_blowup_spec_validation():
    with pytest.raises(ValueError):
        gen.BlowupSpec(gen.cycle(3), (2, 2))
    with pytest.raises(ValueError):
        gen.BlowupSpec(gen.cycle(3), (2, 0, 1))


def test_random_bipartite_degree_bound():
    g = gen.random_bounded_degree_bipartite(8, 3, seed=5)
    assert g.n == 16
    assert g.max_degree() <= 3
    # bipartite: no edges within a side
    for u in range(8):
        for v in range(u + 1, 8):
            assert not g.has_edge(u, v)
    assert g == gen.random_bounded_degree_bipartite(8, 3, seed=5)
    assert g != gen.random_bounded_degree_bipartite(8, 3, seed=6)
    with pytest.raises(ValueError):
        gen.random_bounded_degree_bipartite(3, 4, seed=0)


def test_random_coloring_extremes_and_determinism():
    host = gen.complete(6)
    all_red = gen.random_coloring(host, Fraction(1), seed=0)
    assert all_red.red_graph.edge_count() == 15
    all_blue = gen.random_coloring(host, Fraction(0), seed=0)
    assert all_blue.red_graph.edge_count() == 0
    a = gen.random_coloring(host, Fraction(1, 2), seed=3)
    b = gen.random_coloring(host, Fraction(1, 2), seed=3)
    assert a == b


def test_random_min_degree_host_certificate():
    for seed in range(5):
        g = gen.random_min_degree_host(16, Fraction(1, 4), seed)
        assert g.min_degree() >= math.ceil((1 - Fraction(1, 4)) * 16)
    assert gen.random_min_degree_host(16, Fraction(1, 4), 1) == gen.random_min_degree_host(
        16, Fraction(1, 4), 1
    )


def test_random_bounded_degree_graph():
    g = gen.random_bounded_degree_graph(20, 4, seed=2)
    assert g.max_degree() <= 4
    assert g == gen.random_bounded_degree_graph(20, 4, seed=2)
