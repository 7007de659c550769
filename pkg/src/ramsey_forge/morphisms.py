"""Homomorphism verification and backtracking search.

Searches are deterministic: source vertices by decreasing degree (ties by
lowest id), candidate targets by lowest id.  Every search result is plain
data that the verifiers re-check independently of the search bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .graphs import Graph, WeightedGraph, iter_bits

DEFAULT_BUDGET = 10_000_000

FOUND = "found"
NONE = "none"
BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class VertexMap:
    """Total map from [source_n] to [target_n]."""

    source_n: int
    target_n: int
    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.image) != self.source_n:
            raise ValueError("image must be total on the source")
        for v in self.image:
            if not 0 <= v < self.target_n:
                raise ValueError(f"image vertex {v} out of range")

    @classmethod
    def identity(cls, n: int) -> "VertexMap":
        return cls(n, n, tuple(range(n)))

    def __call__(self, v: int) -> int:
        return self.image[v]

    def preimage(self, v: int) -> tuple[int, ...]:
        return tuple(u for u, t in enumerate(self.image) if t == v)

    def is_injective(self) -> bool:
        return len(set(self.image)) == self.source_n


def compose(f: VertexMap, g: VertexMap) -> VertexMap:
    """g after f: the map x -> g(f(x))."""
    if f.target_n != g.source_n:
        raise ValueError("composition dimension mismatch")
    return VertexMap(f.source_n, g.target_n, tuple(g.image[v] for v in f.image))


@dataclass(frozen=True)
class HomVerdict:
    valid: bool
    violations: tuple[tuple[int, int], ...] = ()


def verify_homomorphism(g: Graph, h: Graph, f: VertexMap) -> HomVerdict:
    """Valid iff every edge of g maps to an edge of h."""
    if f.source_n != g.n or f.target_n != h.n:
        raise ValueError("map dimensions do not match the graphs")
    bad = tuple(
        (u, v) for u, v in g.edges() if not (h.adj[f.image[u]] >> f.image[v] & 1)
    )
    return HomVerdict(valid=not bad, violations=bad)


@dataclass(frozen=True)
class CapacityProfile:
    """Per-target count caps, or per-source weights with preimage limit 1."""

    count_caps: tuple[int, ...] | None = None
    weights: tuple[Fraction, ...] | None = None

    def __post_init__(self) -> None:
        if (self.count_caps is None) == (self.weights is None):
            raise ValueError("exactly one of count_caps / weights must be given")
        if self.count_caps is not None and any(c < 0 for c in self.count_caps):
            raise ValueError("count caps must be nonnegative")
        if self.weights is not None and any(not 0 <= w <= 1 for w in self.weights):
            raise ValueError("weights must lie in [0, 1]")

    @classmethod
    def count_cap(cls, caps: Sequence[int]) -> "CapacityProfile":
        return cls(count_caps=tuple(caps))

    @classmethod
    def uniform_count_cap(cls, target_n: int, cap: int) -> "CapacityProfile":
        return cls(count_caps=(cap,) * target_n)

    @classmethod
    def weight_cap(cls, weights: Sequence[Fraction]) -> "CapacityProfile":
        return cls(weights=tuple(Fraction(w) for w in weights))


@dataclass(frozen=True)
class CapVerdict:
    valid: bool
    violations: tuple[int, ...] = ()  # offending target vertices


def verify_capacity(f: VertexMap, profile: CapacityProfile) -> CapVerdict:
    if profile.count_caps is not None:
        if len(profile.count_caps) != f.target_n:
            raise ValueError("one count cap per target vertex required")
        loads = [0] * f.target_n
        for t in f.image:
            loads[t] += 1
        bad = tuple(v for v in range(f.target_n) if loads[v] > profile.count_caps[v])
        return CapVerdict(valid=not bad, violations=bad)
    weights = profile.weights
    assert weights is not None
    if len(weights) != f.source_n:
        raise ValueError("one weight per source vertex required")
    loads_w = [Fraction(0)] * f.target_n
    for u, t in enumerate(f.image):
        loads_w[t] += weights[u]
    bad = tuple(v for v in range(f.target_n) if loads_w[v] > 1)
    return CapVerdict(valid=not bad, violations=bad)


@dataclass
class SearchOutcome:
    status: str  # FOUND | NONE | BUDGET_EXHAUSTED
    vmap: VertexMap | None = None
    nodes: int = 0


def _search_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def find_capacity_homomorphism(
    g: Graph,
    h: Graph,
    profile: CapacityProfile,
    budget: int = DEFAULT_BUDGET,
) -> SearchOutcome:
    """Exhaustive backtracking for a homomorphism g -> h obeying the profile.

    NONE is a nonexistence certificate; BUDGET_EXHAUSTED is inconclusive.
    """
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    order = _search_order(g)
    pos_of = {v: i for i, v in enumerate(order)}
    # neighbors of order[i] that appear earlier in the order
    back = [
        [u for u in iter_bits(g.adj[v]) if pos_of[u] < i] for i, v in enumerate(order)
    ]
    image = [0] * g.n
    full = (1 << h.n) - 1

    count_caps = profile.count_caps
    weights = profile.weights
    if count_caps is not None and len(count_caps) != h.n:
        raise ValueError("one count cap per target vertex required")
    if weights is not None and len(weights) != g.n:
        raise ValueError("one weight per source vertex required")
    count_load = [0] * h.n
    weight_load = [Fraction(0)] * h.n

    nodes = 0

    def extend(i: int) -> str:
        nonlocal nodes
        if i == g.n:
            return FOUND
        nodes += 1
        if nodes > budget:
            return BUDGET_EXHAUSTED
        v = order[i]
        cand = full
        for u in back[i]:
            cand &= h.adj[image[u]]
        for t in iter_bits(cand):
            if count_caps is not None and count_load[t] + 1 > count_caps[t]:
                continue
            if weights is not None and weight_load[t] + weights[v] > 1:
                continue
            image[v] = t
            count_load[t] += 1
            if weights is not None:
                weight_load[t] += weights[v]
            res = extend(i + 1)
            count_load[t] -= 1
            if weights is not None:
                weight_load[t] -= weights[v]
            if res != NONE:
                return res
        return NONE

    if h.n == 0 and g.n > 0:
        return SearchOutcome(NONE, nodes=0)
    status = extend(0)
    vmap = VertexMap(g.n, h.n, tuple(image)) if status == FOUND else None
    return SearchOutcome(status, vmap, nodes)


def find_weighted_embedding(gw: WeightedGraph, host: Graph) -> VertexMap | None:
    """Exhaustive search for an embedding of the weighted graph into host.

    A weighted embedding is a homomorphism with total preimage weight at most
    1 at every host vertex.  Source vertices are tried in non-increasing
    weight order (ties by lowest id), targets by lowest id.
    """
    g = gw.graph
    if host.n == 0:
        return None if g.n > 0 else VertexMap(0, 0, ())
    order = sorted(range(g.n), key=lambda v: (-gw.weights[v], v))
    pos_of = {v: i for i, v in enumerate(order)}
    back = [
        [u for u in iter_bits(g.adj[v]) if pos_of[u] < i] for i, v in enumerate(order)
    ]
    image = [0] * g.n
    load = [Fraction(0)] * host.n
    full = (1 << host.n) - 1

    def extend(i: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        w = gw.weights[v]
        cand = full
        for u in back[i]:
            cand &= host.adj[image[u]]
        for t in iter_bits(cand):
            if load[t] + w > 1:
                continue
            image[v] = t
            load[t] += w
            if extend(i + 1):
                return True
            load[t] -= w
        return False

    if extend(0):
        return VertexMap(g.n, host.n, tuple(image))
    return None


def enumerate_all_maps_has_capacity_hom(
    g: Graph, h: Graph, profile: CapacityProfile
) -> bool:
    """Naive |V(h)|^|V(g)| enumeration; independent oracle for small cases."""
    import itertools

    for image in itertools.product(range(h.n), repeat=g.n):
        f = VertexMap(g.n, h.n, image)
        if verify_homomorphism(g, h, f).valid and verify_capacity(f, profile).valid:
            return True
    return False
