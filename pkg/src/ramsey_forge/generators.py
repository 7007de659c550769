"""Deterministic graph families and seeded random instance generators.

Every random generator is a pure function of (params, seed).
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graphs import EdgeColoring, Graph
from .morphisms import VertexMap


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, list(itertools.combinations(range(n), 2)))


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    bounds = list(itertools.accumulate(sizes, initial=0))
    part = []
    for i, s in enumerate(sizes):
        part += [i] * s
    n = bounds[-1]
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if part[u] != part[v]]
    return Graph(n, edges)


def wheel(k: int) -> Graph:
    """W_k: a (k-1)-cycle plus a dominating hub, the hub being vertex k-1."""
    if k < 4:
        raise ValueError("wheel needs at least 4 vertices")
    edges = [(i, (i + 1) % (k - 1)) for i in range(k - 1)]
    edges += [(i, k - 1) for i in range(k - 1)]
    return Graph(k, edges)


def path_power(n: int, r: int) -> Graph:
    """Vertices i, j adjacent iff 0 < |i - j| <= r."""
    if r < 0:
        raise ValueError("power must be nonnegative")
    edges = [(i, j) for i in range(n) for j in range(i + 1, min(n, i + r + 1))]
    return Graph(n, edges)


def hypercube(d: int) -> Graph:
    if d < 0:
        raise ValueError("dimension must be nonnegative")
    n = 1 << d
    edges = [(u, u ^ (1 << b)) for u in range(n) for b in range(d) if u < u ^ (1 << b)]
    return Graph(n, edges)


_NAMED = {
    "path": lambda params: path(int(params[0])),
    "cycle": lambda params: cycle(int(params[0])),
    "complete": lambda params: complete(int(params[0])),
    "complete_multipartite": lambda params: complete_multipartite([int(p) for p in params]),
    "wheel": lambda params: wheel(int(params[0])),
    "path_power": lambda params: path_power(int(params[0]), int(params[1])),
    "hypercube": lambda params: hypercube(int(params[0])),
}


def make_named(kind: str, params: Sequence[int]) -> Graph:
    if kind not in _NAMED:
        raise ValueError(f"unknown graph kind {kind!r} (known: {sorted(_NAMED)})")
    return _NAMED[kind](params)


@dataclass(frozen=True)
class BlowupSpec:
    base: Graph
    part_sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.part_sizes) != self.base.n:
            raise ValueError("one part size per base vertex required")
        if any(s < 1 for s in self.part_sizes):
            raise ValueError("part sizes must be positive")


def blowup(spec: BlowupSpec) -> tuple[Graph, VertexMap]:
    """Blow-up of the base graph plus the canonical projection back onto it."""
    bounds = list(itertools.accumulate(spec.part_sizes, initial=0))
    n = bounds[-1]
    base_of = []
    for i, s in enumerate(spec.part_sizes):
        base_of += [i] * s
    edges = []
    for u, v in spec.base.edges():
        for up in range(bounds[u], bounds[u + 1]):
            for vp in range(bounds[v], bounds[v + 1]):
                edges.append((up, vp))
    g = Graph(n, edges)
    return g, VertexMap(n, spec.base.n, tuple(base_of))


def blowup_parts(spec: BlowupSpec) -> list[frozenset[int]]:
    bounds = list(itertools.accumulate(spec.part_sizes, initial=0))
    return [frozenset(range(bounds[i], bounds[i + 1])) for i in range(spec.base.n)]


def random_bounded_degree_bipartite(n_per_side: int, max_degree: int, seed: int) -> Graph:
    """Union of max_degree seeded random perfect matchings between the sides.

    Sides are 0..n-1 and n..2n-1; duplicate edges across rounds are dropped,
    so the degree bound holds by construction.
    """
    if max_degree > n_per_side:
        raise ValueError("degree bound cannot exceed the side size")
    rng = random.Random(seed)
    n = n_per_side
    edges: set[tuple[int, int]] = set()
    for _ in range(max_degree):
        right = list(range(n, 2 * n))
        rng.shuffle(right)
        for u, v in zip(range(n), right):
            edges.add((u, v))
    return Graph(2 * n, sorted(edges))


def random_coloring(host: Graph, red_prob: Fraction, seed: int) -> EdgeColoring:
    """Each host edge independently red with the given probability."""
    red_prob = Fraction(red_prob)
    if not 0 <= red_prob <= 1:
        raise ValueError("red_prob must lie in [0, 1]")
    rng = random.Random(seed)
    red = [e for e in host.edges() if Fraction(rng.random()) < red_prob]
    return EdgeColoring(host, red)


def random_min_degree_host(n: int, eps: Fraction, seed: int) -> Graph:
    """Delete random edges from K_n while min degree stays >= ceil((1-eps)n).

    Stops at a seeded target deletion count or when no edge is deletable; the
    min-degree certificate is exact by construction.
    """
    eps = Fraction(eps)
    if not 0 <= eps < 1:
        raise ValueError("eps must lie in [0, 1)")
    rng = random.Random(seed)
    floor_deg = math.ceil((1 - eps) * n)
    slack_per_vertex = max(0, n - 1 - floor_deg)
    max_deletions = n * slack_per_vertex // 2
    target = rng.randint(0, max_deletions) if max_deletions > 0 else 0

    adj = [((1 << n) - 1) & ~(1 << v) for v in range(n)]
    deg = [n - 1] * n
    deleted = 0
    edges = list(itertools.combinations(range(n), 2))
    while deleted < target:
        deletable = [
            (u, v)
            for u, v in edges
            if adj[u] >> v & 1 and deg[u] > floor_deg and deg[v] > floor_deg
        ]
        if not deletable:
            break
        u, v = rng.choice(deletable)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        deg[u] -= 1
        deg[v] -= 1
        deleted += 1
    g = Graph.from_adj(adj)
    assert g.min_degree() >= floor_deg
    return g


def random_bounded_degree_graph(n: int, max_degree: int, seed: int) -> Graph:
    """Random graph with max degree <= max_degree (shuffled greedy edges)."""
    rng = random.Random(seed)
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    deg = [0] * n
    edges = []
    for u, v in pairs:
        if deg[u] < max_degree and deg[v] < max_degree and rng.random() < 0.5:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph(n, edges)
