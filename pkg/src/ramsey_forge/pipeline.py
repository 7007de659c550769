"""Transference pipeline: regularity partition, majority-color reduced
graph, capacity-1 homomorphism lift, then the randomized blow-up embedder.

Each stage either produces data for the next or names itself as the point
of failure; a Some result is always an independently verified
monochromatic embedding.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .graphs import BLUE, RED, EdgeColoring, Graph, pair_density
from .morphisms import (
    FOUND,
    CapacityProfile,
    VertexMap,
    compose,
    find_capacity_homomorphism,
    verify_homomorphism,
)
from .regularity import (
    MODE_EXHAUSTIVE,
    MODE_SAMPLED,
    Partition,
    RegularityParams,
    fixed_k_partition,
    regularity_check,
)
from .rga import RgaParams, rga_blowup_embed

STAGE_PARTITION = "partition"
STAGE_REDUCED = "reduced_graph"
STAGE_LIFT = "capacity_homomorphism"
STAGE_EMBED = "blowup_embedding"


@dataclass(frozen=True)
class PipelineParams:
    eps: Fraction
    xi: Fraction
    k: int
    delta: Fraction = Fraction(1, 2)  # majority threshold for reduced colors
    mode: str = MODE_SAMPLED
    sample_budget: int = 50
    retries: int = 10


@dataclass
class PipelineResult:
    color: str | None
    vmap: VertexMap | None
    failed_stage: str | None

    @property
    def ok(self) -> bool:
        return self.vmap is not None


def transference_pipeline(
    g: Graph,
    h: Graph,
    f: VertexMap,
    coloring: EdgeColoring,
    params: PipelineParams,
    seed: int = 0,
) -> PipelineResult:
    """Find a monochromatic embedding of g in a 2-colored host, guided by a
    homomorphism f from g to the small template h."""
    if not verify_homomorphism(g, h, f).valid:
        raise ValueError("f is not a homomorphism from g to h")
    host = coloring.host
    if host.n < params.k:
        raise ValueError("host smaller than the requested class count")

    reg = RegularityParams(params.eps)
    red = coloring.red_graph
    partition, report = fixed_k_partition(
        red, params.k, reg, seed=seed, retries=2,
        mode=params.mode, budget=params.sample_budget,
    )
    k = partition.k
    if k == 0:
        return PipelineResult(None, None, STAGE_PARTITION)

    # reduced coloring: pair (i, j) joins the red reduced graph when its red
    # density is at least delta, else the blue one; irregular pairs join
    # neither
    red_edges = []
    blue_edges = []
    for i, j in itertools.combinations(range(k), 2):
        ci = sorted(partition.classes[i])
        cj = sorted(partition.classes[j])
        verdict = regularity_check(
            red, ci, cj, reg, params.mode, params.sample_budget, seed
        )
        if not verdict.treated_regular:
            continue
        if pair_density(red, ci, cj) >= params.delta:
            red_edges.append((i, j))
        else:
            blue_edges.append((i, j))
    reduced_by_color = {RED: Graph(k, red_edges), BLUE: Graph(k, blue_edges)}
    if not red_edges and not blue_edges:
        return PipelineResult(None, None, STAGE_REDUCED)

    lift_failed = True
    for color in (RED, BLUE):
        reduced = reduced_by_color[color]
        outcome = find_capacity_homomorphism(
            h, reduced, CapacityProfile.uniform_count_cap(reduced.n, 1)
        )
        if outcome.status != FOUND:
            continue
        lift_failed = False
        assert outcome.vmap is not None
        composed = compose(f, outcome.vmap)
        mono = coloring.subgraph(color)
        rga = RgaParams(delta=params.delta, xi=params.xi)
        try:
            vmap = rga_blowup_embed(
                mono,
                partition,
                reduced,
                g,
                composed,
                rga,
                seed=seed,
                retries=params.retries,
            )
        except ValueError:
            # slack or homomorphism precondition failed for this color
            continue
        if vmap is not None:
            assert verify_homomorphism(g, mono, vmap).valid
            assert vmap.is_injective()
            return PipelineResult(color, vmap, None)
    return PipelineResult(None, None, STAGE_LIFT if lift_failed else STAGE_EMBED)
