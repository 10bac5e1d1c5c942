"""Exhaustive ground truth for tests and verification campaigns.

Nothing here calls the kernels, the certifier or the matroid builder: the
answers come from plain enumeration.
"""

from __future__ import annotations

import random
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from itertools import product

from .errors import CapacityError, PreconditionError
from .graph import ColorBudget, ColorId, EdgeColoredGraph, SpanningForest, build_graph

MAX_VERTICES = 10
MAX_EDGES = 20
MAX_PARTITION_N = 30


def _check_caps(G: EdgeColoredGraph) -> None:
    if G.vertex_count > MAX_VERTICES or len(G.edges) > MAX_EDGES:
        raise CapacityError(
            f"brute force is capped at {MAX_VERTICES} vertices and {MAX_EDGES} edges, "
            f"got {G.vertex_count} and {len(G.edges)}")


def brute_force_forest(G: EdgeColoredGraph, f: Mapping[ColorId, int], w: int) -> SpanningForest | None:
    """Lexicographically first (by edge ordinals) valid forest, or None.

    Walks ``(|V| - w)``-combinations of edges in lexicographic order and
    abandons a prefix as soon as it closes a cycle or overflows a color cap;
    every extension of such a prefix is invalid too.
    """
    _check_caps(G)
    if not 1 <= w <= G.vertex_count:
        raise PreconditionError(f"w={w} must lie in [1, {G.vertex_count}]")
    missing = [c for c in G.colors if c not in f]
    if missing:
        raise PreconditionError(f"budget has no cap for colors {missing!r}")
    need = G.vertex_count - w
    edges = G.edges
    total = len(edges)
    left = {c: f[c] for c in G.colors}
    chosen: list[int] = []

    def search(start: int, labels: list[int]) -> bool:
        if len(chosen) == need:
            return True
        for i in range(start, total - (need - len(chosen)) + 1):
            u, v, c = edges[i]
            a, b = labels[u], labels[v]
            if a == b or left[c] == 0:
                continue
            merged = [a if x == b else x for x in labels]
            left[c] -= 1
            chosen.append(i)
            if search(i + 1, merged):
                return True
            chosen.pop()
            left[c] += 1
        return False

    if search(0, list(range(G.vertex_count))):
        return SpanningForest(G, tuple(chosen))
    return None


def forest_profiles(G: EdgeColoredGraph) -> set[tuple[int, tuple[int, ...]]]:
    """Every ``(edge count, per-color usage)`` pair realized by some acyclic edge set.

    Color usage is indexed by the position in ``G.colors``.  One enumeration
    answers the existence question for every budget and every ``w``.
    """
    _check_caps(G)
    pos = {c: i for i, c in enumerate(G.colors)}
    edges = [(e.u, e.v, pos[e.color]) for e in G.edges]
    seen: set[tuple[int, tuple[int, ...]]] = set()
    usage = [0] * len(G.colors)

    def walk(start: int, labels: list[int], size: int) -> None:
        seen.add((size, tuple(usage)))
        for i in range(start, len(edges)):
            u, v, c = edges[i]
            a, b = labels[u], labels[v]
            if a == b:
                continue
            usage[c] += 1
            walk(i + 1, [a if x == b else x for x in labels], size + 1)
            usage[c] -= 1

    walk(0, list(range(G.vertex_count)), 0)
    return seen


def profile_admits(profiles, G: EdgeColoredGraph, f: Mapping[ColorId, int], w: int) -> bool:
    need = G.vertex_count - w
    caps = [f[c] for c in G.colors]
    return any(size == need and all(u <= cap for u, cap in zip(usage, caps))
               for size, usage in profiles)


def _partitions(N: int, s: int, largest: int) -> Iterator[tuple[int, ...]]:
    """Partitions of N into exactly s positive parts, non-increasing, parts <= largest."""
    if s == 0:
        if N == 0:
            yield ()
        return
    for first in range(min(largest, N - (s - 1)), 0, -1):
        if first * s < N:
            break
        for rest in _partitions(N - first, s - 1, first):
            yield (first,) + rest


def extremal_bipartite_max_edges(N: int, s: int) -> int:
    """Maximum edge count of a bipartite graph on N vertices with exactly s components."""
    if not 1 <= s <= N <= MAX_PARTITION_N:
        raise PreconditionError(f"need 1 <= s <= N <= {MAX_PARTITION_N}, got N={N}, s={s}")
    return max(sum((k // 2) * (k - k // 2) for k in parts) for parts in _partitions(N, s, N))


@dataclass(frozen=True)
class InstanceFamily:
    max_vertices: int
    max_colors: int
    max_cap: int
    max_w: int
    mode: str = "enumerate"
    seed: int = 0
    trials: int = 0
    min_vertices: int = 1
    min_cap: int = 0
    max_edges: int = MAX_EDGES


def _graphs_on(n: int) -> Iterator[list[tuple[int, int]]]:
    if n <= 7:
        import networkx as nx

        for H in nx.graph_atlas_g():
            if H.number_of_nodes() == n:
                yield sorted((min(a, b), max(a, b)) for a, b in H.edges())
        return
    # beyond the atlas: labeled graphs, no isomorphism reduction
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for bits in range(1 << len(pairs)):
        yield [p for k, p in enumerate(pairs) if (bits >> k) & 1]


def _colorings(m: int, k: int) -> Iterator[list[int]]:
    """Edge colorings with at most k colors up to relabeling (restricted growth strings)."""
    if m == 0:
        yield []
        return
    out = [0] * m

    def rec(i: int, used: int):
        if i == m:
            yield list(out)
            return
        for c in range(min(used + 1, k)):
            out[i] = c
            yield from rec(i + 1, max(used, c + 1))

    yield from rec(0, 0)


def _validate(family: InstanceFamily) -> None:
    if family.mode not in ("enumerate", "sample"):
        raise PreconditionError(f"unknown mode {family.mode!r}")
    if family.max_vertices > MAX_VERTICES or family.max_edges > MAX_EDGES:
        raise CapacityError(f"bounds exceed the oracle caps ({MAX_VERTICES} vertices, {MAX_EDGES} edges)")
    if not 1 <= family.min_vertices <= family.max_vertices:
        raise PreconditionError("need 1 <= min_vertices <= max_vertices")
    if family.max_colors < 1 or family.max_w < 1 or not 0 <= family.min_cap <= family.max_cap:
        raise PreconditionError("need max_colors >= 1, max_w >= 1 and 0 <= min_cap <= max_cap")


def enumerate_instances(family: InstanceFamily) -> Iterator[tuple[EdgeColoredGraph, ColorBudget, int]]:
    """Stream ``(G, f, w)`` triples.  Consecutive triples share the same graph object.

    ``enumerate`` mode covers every graph up to isomorphism (labeled graphs
    above 7 vertices), every coloring up to color relabeling, every cap vector
    and every admissible w.  ``sample`` mode draws ``trials`` seeded instances.
    """
    _validate(family)
    if family.mode == "sample":
        yield from _sample(family)
        return
    for n in range(family.min_vertices, family.max_vertices + 1):
        for pairs in _graphs_on(n):
            if len(pairs) > family.max_edges:
                continue
            for coloring in _colorings(len(pairs), family.max_colors):
                k = len(set(coloring))
                G = build_graph(n, [(a, b, c) for (a, b), c in zip(pairs, coloring)], range(k))
                for caps in product(range(family.min_cap, family.max_cap + 1), repeat=k):
                    f = ColorBudget(dict(enumerate(caps)))
                    for w in range(1, min(family.max_w, n) + 1):
                        yield G, f, w


def random_instance(rng: random.Random, family: InstanceFamily) -> tuple[EdgeColoredGraph, ColorBudget, int]:
    n = rng.randint(family.min_vertices, family.max_vertices)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    density = rng.random()
    chosen = [p for p in pairs if rng.random() < density]
    if len(chosen) > family.max_edges:
        chosen = sorted(rng.sample(chosen, family.max_edges))
    k = rng.randint(1, family.max_colors)
    G = build_graph(n, [(a, b, rng.randrange(k)) for a, b in chosen], range(k))
    f = ColorBudget({c: rng.randint(family.min_cap, family.max_cap) for c in range(k)})
    w = rng.randint(1, min(family.max_w, n))
    return G, f, w


def _sample(family: InstanceFamily):
    rng = random.Random(family.seed)
    for _ in range(family.trials):
        yield random_instance(rng, family)
