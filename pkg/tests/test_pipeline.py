from __future__ import annotations

from fractions import Fraction

import pytest

from ramsey_forge import generators as gen
from ramsey_forge.graphs import EdgeColoring, Graph
from ramsey_forge.morphisms import VertexMap, verify_homomorphism
from ramsey_forge.pipeline import (
    STAGE_EMBED,
    STAGE_LIFT,
    STAGE_REDUCED,
    PipelineParams,
    PipelineResult,
    transference_pipeline,
)


def even_cycles(count: int) -> Graph:
    edges = []
    for c in range(count):
        b = 4 * c
        edges += [(b, b + 1), (b + 1, b + 2), (b + 2, b + 3), (b + 3, b)]
    return Graph(4 * count, edges)


def test_all_red_trivial():
    host = gen.complete(24)
    coloring = EdgeColoring(host, host.edges())
    g = gen.cycle(4)
    h = gen.complete(2)
    f = VertexMap(4, 2, (0, 1, 0, 1))
    params = PipelineParams(eps=Fraction(1, 4), xi=Fraction(1, 4), k=4)
    res = transference_pipeline(g, h, f, coloring, params, seed=0)
    assert res.ok
    assert res.color == "red"
    assert res.vmap.is_injective()
    assert verify_homomorphism(g, coloring.red_graph, res.vmap).valid


def test_invalid_hom_rejected():
    host = gen.complete(12)
    coloring = EdgeColoring(host, host.edges())
    g = gen.cycle(4)
    h = gen.complete(2)
    f = VertexMap(4, 2, (0, 0, 1, 1))  # maps an edge to a non-edge
    with pytest.raises(ValueError):
        transference_pipeline(
            g, h, f, coloring, PipelineParams(Fraction(1, 4), Fraction(1, 4), 4)
        )


def test_host_too_small():
    host = gen.complete(3)
    coloring = EdgeColoring(host, host.edges())
    with pytest.raises(ValueError):
        transference_pipeline(
            gen.complete(2),
            gen.complete(2),
            VertexMap(2, 2, (0, 1)),
            coloring,
            PipelineParams(Fraction(1, 4), Fraction(1, 4), 4),
        )


def test_random_colorings_stage_histogram():
    g = even_cycles(2)
    h = gen.complete(2)
    f = VertexMap(8, 2, (0, 1, 0, 1, 0, 1, 0, 1))
    params = PipelineParams(eps=Fraction(1, 4), xi=Fraction(1, 4), k=6)
    histogram: dict[str, int] = {}
    for seed in range(12):
        coloring = gen.random_coloring(gen.complete(60), Fraction(1, 2), seed)
        res = transference_pipeline(g, h, f, coloring, params, seed=seed)
        key = res.color if res.ok else res.failed_stage
        histogram[key] = histogram.get(key, 0) + 1
        if res.ok:
            mono = coloring.subgraph(res.color)
            assert res.vmap.is_injective()
            assert verify_homomorphism(g, mono, res.vmap).valid
    # every outcome is a named stage or a color
    allowed = {"red", "blue", STAGE_REDUCED, STAGE_LIFT, STAGE_EMBED, "partition"}
    assert set(histogram) <= allowed
    assert sum(histogram.values()) == 12
