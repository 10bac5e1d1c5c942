"""Sufficient conditions for colored spanning forests, and their extremal companions.

Thresholds of the form ``|E_R| > X**2 / 4`` are evaluated as ``4*|E_R| > X**2``
so every comparison is exact integer arithmetic.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from ._backend import kernels
from .certify import MAX_EXHAUSTIVE_COLORS
from .errors import CapacityError, PreconditionError
from .graph import (
    ColorBudget,
    ColorId,
    EdgeColoredGraph,
    build_graph,
    multiplicities,
)


@dataclass(frozen=True)
class BipartiteSpec:
    """Part A is vertices ``[0, n)``, part B is ``[n, n + m)``."""

    n: int
    m: int

    def cross_pairs(self) -> list[tuple[int, int]]:
        return [(a, self.n + b) for a in range(self.n) for b in range(self.m)]


def bipartite_spec(G: EdgeColoredGraph, n: int | None = None) -> BipartiteSpec:
    """Check that ``G`` is the complete bipartite graph in canonical layout.

    When ``n`` is omitted it is inferred from the degree of vertex 0.
    """
    N = G.vertex_count
    if n is None:
        if N < 2:
            raise PreconditionError("not complete bipartite: fewer than two vertices")
        n = N - sum(1 for e in G.edges if 0 in (e.u, e.v))
    m = N - n
    if n < 1 or m < 1:
        raise PreconditionError("not complete bipartite: both parts must be nonempty")
    spec = BipartiteSpec(n, m)
    pairs = {(min(e.u, e.v), max(e.u, e.v)) for e in G.edges}
    if len(G.edges) != n * m or pairs != set(spec.cross_pairs()):
        raise PreconditionError(f"not complete bipartite K_{{{n},{m}}} in canonical layout")
    return spec


@dataclass(frozen=True)
class LemmaBound:
    N: int
    s: int
    bound: Fraction
    exact_max: int


def lemma_bound(N: int, s: int) -> LemmaBound:
    """Edge bound for a bipartite graph on N vertices with s components.

    The extremum is one balanced complete bipartite component on
    ``N - s + 1`` vertices plus ``s - 1`` isolated vertices.
    """
    if not 1 <= s <= N:
        raise PreconditionError(f"need 1 <= s <= N, got N={N}, s={s}")
    k = N - s + 1
    return LemmaBound(N, s, Fraction(k * k, 4), (k // 2) * ((k + 1) // 2))


@dataclass(frozen=True)
class PremiseReport:
    holds: bool
    witness_colors: frozenset[ColorId] | None = None
    prefix_length: int | None = None
    clause: str | None = None
    detail: str = ""

    def describe(self, G: EdgeColoredGraph | None = None) -> str:
        if self.holds:
            return "holds"
        parts = ["fails"]
        if self.witness_colors is not None:
            names = sorted(self.witness_colors)
            if G is not None:
                names = [G.color_name(c) for c in names]
            parts.append("R={" + ",".join(map(str, names)) + "}")
        if self.prefix_length is not None:
            parts.append(f"r={self.prefix_length}")
        if self.detail:
            parts.append(self.detail)
        return " ".join(parts)


def _budget(f: Mapping[ColorId, int], G: EdgeColoredGraph) -> ColorBudget:
    budget = f if isinstance(f, ColorBudget) else ColorBudget(f)
    budget.require_covers(G)
    return budget


def _mask_to_colors(G: EdgeColoredGraph, mask: int) -> frozenset[ColorId]:
    return frozenset(c for i, c in enumerate(G.colors) if (mask >> i) & 1)


def main_premise_at(G: EdgeColoredGraph, f: Mapping[ColorId, int], w: int,
                    R: Iterable[ColorId]) -> bool:
    """``4|E_R| > (|V| - w - f(C \\ R))**2`` for one subset R."""
    R = frozenset(R)
    mult = multiplicities(G)
    x = G.vertex_count - w - sum(f[c] for c in G.colors if c not in R)
    return 4 * sum(mult[c] for c in R) > x * x


def check_main_premise(G: EdgeColoredGraph, f: Mapping[ColorId, int], w: int,
                       n: int | None = None) -> PremiseReport:
    """Premise of the sharp edge-count condition on a colored complete bipartite graph."""
    spec = bipartite_spec(G, n)
    budget = _budget(f, G)
    N = spec.n + spec.m
    if not 1 <= w <= N:
        raise PreconditionError(f"w={w} must lie in [1, {N}]")
    if budget.total(G.colors) < N - w:
        raise PreconditionError(
            f"total budget {budget.total(G.colors)} is below n+m-w={N - w}, "
            "which is necessary for any such forest")
    if len(G.colors) > MAX_EXHAUSTIVE_COLORS:
        raise CapacityError(f"{len(G.colors)} colors exceed the exhaustive cap of {MAX_EXHAUSTIVE_COLORS}")
    mult = multiplicities(G)
    mask = kernels.first_premise_failure([mult[c] for c in G.colors], budget.dense_caps(G), N - w)
    if mask is None:
        return PremiseReport(True)
    R = _mask_to_colors(G, mask)
    x = N - w - sum(budget[c] for c in G.colors if c not in R)
    edges = sum(mult[c] for c in R)
    return PremiseReport(False, witness_colors=R,
                         detail=f"|E_R|={edges} <= {Fraction(x * x, 4)}")


def _rainbow_multiplicities(G: EdgeColoredGraph) -> dict[ColorId, int]:
    spec = bipartite_spec(G)
    if spec.n != spec.m:
        raise PreconditionError(f"not balanced: parts of size {spec.n} and {spec.m}")
    if len(G.colors) != 2 * spec.n - 1:
        raise PreconditionError(f"need exactly {2 * spec.n - 1} colors, got {len(G.colors)}")
    mult = multiplicities(G)
    unused = [G.color_name(c) for c, k in mult.items() if k == 0]
    if unused:
        raise PreconditionError(f"every color must be used; zero multiplicity: {', '.join(unused)}")
    return mult


def check_rainbow_prefix(G: EdgeColoredGraph) -> PremiseReport:
    """Sorted color multiplicities: every prefix of length r must sum to more than r**2/4."""
    counts = sorted(_rainbow_multiplicities(G).values())
    total = 0
    for r, count in enumerate(counts, start=1):
        total += count
        if 4 * total <= r * r:
            return PremiseReport(False, prefix_length=r,
                                 detail=f"prefix sum {total} <= {Fraction(r * r, 4)}")
    return PremiseReport(True)


def check_rainbow_subset(G: EdgeColoredGraph) -> PremiseReport:
    """Every nonempty color subset R must cover more than |R|**2/4 edges."""
    mult = _rainbow_multiplicities(G)
    if len(G.colors) > MAX_EXHAUSTIVE_COLORS:
        raise CapacityError(f"{len(G.colors)} colors exceed the exhaustive cap of {MAX_EXHAUSTIVE_COLORS}")
    for size in range(1, len(G.colors) + 1):
        for R in combinations(G.colors, size):
            edges = sum(mult[c] for c in R)
            if 4 * edges <= size * size:
                return PremiseReport(False, witness_colors=frozenset(R),
                                     detail=f"|E_R|={edges} <= {Fraction(size * size, 4)}")
    return PremiseReport(True)


def check_multiplicity_premise(G: EdgeColoredGraph, f: Mapping[ColorId, int], w: int) -> PremiseReport:
    """Premise for general graphs in terms of the color multiplicity profile g:

    ``|E| > C(n-w, 2)`` and ``g(c) * (n-w) <= |E| * f(c)`` for every color.
    """
    n = G.vertex_count
    if not 1 <= w <= n - 1:
        raise PreconditionError(f"w={w} must lie in [1, {n - 1}]")
    budget = _budget(f, G)
    E = len(G.edges)
    d = n - w
    if E <= d * (d - 1) // 2:
        return PremiseReport(False, clause="edge-count",
                             detail=f"|E|={E} <= C({d},2)={d * (d - 1) // 2}")
    for c, g in multiplicities(G).items():
        if g * d > E * budget[c]:
            return PremiseReport(False, witness_colors=frozenset({c}), clause="multiplicity",
                                 detail=f"g={g}, f={budget[c]}: {g}*{d} > {E}*{budget[c]}")
    return PremiseReport(True)


@dataclass(frozen=True)
class SharpnessInstance:
    graph: EdgeColoredGraph = field(repr=False)
    subset: frozenset[ColorId]
    p: int
    spec: BipartiteSpec

    @property
    def half(self) -> int:
        return self.p // 2

    def embedded_vertices(self) -> tuple[list[int], list[int]]:
        return list(range(self.half)), [self.spec.n + j for j in range(self.half)]


def make_sharpness_instance(n: int, m: int, w: int, f: Mapping[ColorId, int],
                            R: Iterable[ColorId],
                            names: Mapping[ColorId, str] | None = None) -> SharpnessInstance:
    """K_{n,m} whose R-colored edges are exactly a K_{p/2,p/2}, with
    ``p = n + m - w - f(C \\ R)``: it has ``p**2/4`` R-edges yet no valid forest.

    The color set is the key set of ``f``.  Colors are assigned round-robin
    within each zone.
    """
    colors = sorted(f)
    R = frozenset(R)
    rest = [c for c in colors if c not in R]
    if not R:
        raise PreconditionError("R must be nonempty")
    if not R <= set(colors):
        raise PreconditionError("R must be a subset of the budget's colors")
    if not rest:
        raise PreconditionError("R must be a proper subset of the colors")
    if n < 1 or m < 1:
        raise PreconditionError("part sizes must be positive")
    if not 1 <= w <= n + m:
        raise PreconditionError(f"w={w} must lie in [1, {n + m}]")
    p = n + m - w - sum(f[c] for c in rest)
    if p <= 0:
        raise PreconditionError(f"p={p} must be positive")
    if p % 2:
        raise PreconditionError(f"p={p} is odd; the construction needs K_(p/2,p/2)")
    half = p // 2
    if half > n or half > m:
        raise PreconditionError(f"p/2={half} exceeds a part size ({n}, {m})")
    spec = BipartiteSpec(n, m)
    inner = sorted(R)
    edges = []
    i_in = i_out = 0
    for a, b in spec.cross_pairs():
        if a < half and b - n < half:
            edges.append((a, b, inner[i_in % len(inner)]))
            i_in += 1
        else:
            edges.append((a, b, rest[i_out % len(rest)]))
            i_out += 1
    G = build_graph(n + m, edges, colors, names)
    return SharpnessInstance(G, R, p, spec)


def random_bipartite_coloring(n: int, m: int, colors: Sequence[ColorId], seed: int,
                              distribution: str = "uniform",
                              weights: Sequence[float] | None = None,
                              names: Mapping[ColorId, str] | None = None) -> EdgeColoredGraph:
    """K_{n,m} with independently drawn edge colors; deterministic in ``seed``."""
    colors = list(colors)
    if not colors:
        raise PreconditionError("the color set is empty")
    if n < 1 or m < 1:
        raise PreconditionError("part sizes must be positive")
    rng = random.Random(seed)
    spec = BipartiteSpec(n, m)
    if distribution == "uniform":
        drawn = [rng.choice(colors) for _ in range(n * m)]
    elif distribution == "weighted":
        if weights is None or len(weights) != len(colors) or any(x < 0 for x in weights) or sum(weights) <= 0:
            raise PreconditionError("weights must be non-negative, one per color, with positive sum")
        drawn = rng.choices(colors, weights=weights, k=n * m)
    else:
        raise PreconditionError(f"unknown distribution {distribution!r}")
    return build_graph(n + m, [(a, b, c) for (a, b), c in zip(spec.cross_pairs(), drawn)], colors, names)
