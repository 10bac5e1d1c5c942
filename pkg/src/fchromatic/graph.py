"""Edge-colored graphs: construction, color-class access, components and forests.

Vertices are dense integers ``0 .. vertex_count-1`` and colors are integer
ordinals.  A graph may carry human-readable color names (from a graph file);
they are only used for output.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import (
    BudgetError,
    DuplicateEdgeError,
    EdgeNotInGraphError,
    LoopEdgeError,
    UnknownColorError,
    VertexRangeError,
)

ColorId = int


class Edge(NamedTuple):
    u: int
    v: int
    color: ColorId


class DisjointSet:
    """Union-find with path halving and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size
        self.count = size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of ``a`` and ``b``; return False if already merged."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        return True


class EdgeColoredGraph:
    """Immutable simple graph with one color per edge and an explicit color set.

    The color set may contain colors that no edge uses.
    Use :func:`build_graph` to construct validated instances.
    """

    __slots__ = ("vertex_count", "edges", "colors", "_names", "_pair_index", "_dense", "_arrays")

    def __init__(self, vertex_count: int, edges: tuple[Edge, ...], colors: tuple[ColorId, ...],
                 names: Mapping[ColorId, str] | None = None):
        self.vertex_count = vertex_count
        self.edges = edges
        self.colors = colors
        self._names = dict(names) if names else {}
        self._pair_index = {(min(e.u, e.v), max(e.u, e.v)): i for i, e in enumerate(edges)}
        self._dense = {c: i for i, c in enumerate(colors)}
        self._arrays = None

    def __repr__(self) -> str:
        return f"EdgeColoredGraph(vertex_count={self.vertex_count}, edges={len(self.edges)}, colors={len(self.colors)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoredGraph):
            return NotImplemented
        return (self.vertex_count == other.vertex_count and self.edges == other.edges
                and self.colors == other.colors
                and [self.color_name(c) for c in self.colors] == [other.color_name(c) for c in other.colors])

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges, self.colors))

    def color_name(self, c: ColorId) -> str:
        return self._names.get(c, str(c))

    def color_by_name(self, name: str) -> ColorId:
        for c in self.colors:
            if self.color_name(c) == name:
                return c
        raise UnknownColorError(f"unknown color {name!r}")

    def edge_index(self, u: int, v: int) -> int | None:
        return self._pair_index.get((min(u, v), max(u, v)))

    def dense_color(self, c: ColorId) -> int:
        """Position of ``c`` in the sorted color tuple."""
        return self._dense[c]

    def kernel_arrays(self) -> tuple[int, list[int], list[int], list[int]]:
        """``(n, eu, ev, ecol)`` with dense color indices, as the kernels expect them."""
        if self._arrays is None:
            dense = self._dense
            self._arrays = (
                self.vertex_count,
                [e.u for e in self.edges],
                [e.v for e in self.edges],
                [dense[e.color] for e in self.edges],
            )
        return self._arrays

    def with_edges(self, edges: Iterable[Edge]) -> EdgeColoredGraph:
        """Same vertices, colors and names; a different (already valid) edge list."""
        return EdgeColoredGraph(self.vertex_count, tuple(edges), self.colors, self._names)


def build_graph(vertex_count: int, edges: Iterable[tuple[int, int, ColorId]],
                colors: Iterable[ColorId] | None = None,
                names: Mapping[ColorId, str] | None = None) -> EdgeColoredGraph:
    """Validate and build an edge-colored graph.

    If ``colors`` is None the color set is exactly the set of used colors.
    """
    if vertex_count < 0:
        raise VertexRangeError(f"negative vertex count {vertex_count}")
    edge_list = [Edge(int(u), int(v), c) for u, v, c in edges]
    color_set = set(colors) if colors is not None else {e.color for e in edge_list}
    seen: set[tuple[int, int]] = set()
    for e in edge_list:
        if not (0 <= e.u < vertex_count and 0 <= e.v < vertex_count):
            raise VertexRangeError(f"edge {tuple(e)} has a vertex outside [0, {vertex_count})")
        if e.u == e.v:
            raise LoopEdgeError(f"loop at vertex {e.u}")
        key = (min(e.u, e.v), max(e.u, e.v))
        if key in seen:
            raise DuplicateEdgeError(f"multiple edges between {key[0]} and {key[1]}")
        seen.add(key)
        if e.color not in color_set:
            raise UnknownColorError(f"edge {tuple(e)} uses color {e.color!r} outside the color set")
    return EdgeColoredGraph(vertex_count, tuple(edge_list), tuple(sorted(color_set)), names)


class ColorBudget(Mapping):
    """Non-negative cap per color (the function bounding color multiplicities)."""

    __slots__ = ("_caps",)

    def __init__(self, caps: Mapping[ColorId, int]):
        for c, cap in caps.items():
            if not isinstance(cap, int) or cap < 0:
                raise BudgetError(f"cap for color {c!r} must be a non-negative integer, got {cap!r}")
        self._caps = dict(caps)

    @classmethod
    def uniform(cls, colors: Iterable[ColorId], cap: int = 1) -> ColorBudget:
        return cls({c: cap for c in colors})

    def __getitem__(self, c: ColorId) -> int:
        return self._caps[c]

    def __iter__(self):
        return iter(self._caps)

    def __len__(self) -> int:
        return len(self._caps)

    def __repr__(self) -> str:
        return f"ColorBudget({self._caps!r})"

    def require_covers(self, G: EdgeColoredGraph) -> None:
        missing = [c for c in G.colors if c not in self._caps]
        if missing:
            names = ", ".join(G.color_name(c) for c in missing)
            raise BudgetError(f"budget has no cap for color(s): {names}")

    def dense_caps(self, G: EdgeColoredGraph) -> list[int]:
        self.require_covers(G)
        return [self._caps[c] for c in G.colors]

    def total(self, colors: Iterable[ColorId]) -> int:
        return sum(self._caps[c] for c in colors)


@dataclass(frozen=True)
class ComponentDecomposition:
    labels: tuple[int, ...]
    count: int

    def groups(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for v, lab in enumerate(self.labels):
            out.setdefault(lab, []).append(v)
        return list(out.values())


@dataclass(frozen=True)
class SpanningForest:
    graph: EdgeColoredGraph = field(repr=False)
    edge_ids: tuple[int, ...]

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(self.graph.edges[i] for i in self.edge_ids)

    @property
    def component_count(self) -> int:
        return self.graph.vertex_count - len(self.edge_ids)


def _require_colors(G: EdgeColoredGraph, R: Iterable[ColorId]) -> frozenset[ColorId]:
    R = frozenset(R)
    unknown = [c for c in R if c not in G._dense]
    if unknown:
        raise UnknownColorError(f"colors {sorted(unknown)!r} are not in the graph's color set")
    return R


def edges_with_colors(G: EdgeColoredGraph, R: Iterable[ColorId]) -> list[Edge]:
    """All edges whose color lies in ``R``."""
    R = _require_colors(G, R)
    return [e for e in G.edges if e.color in R]


def remove_colors(G: EdgeColoredGraph, R: Iterable[ColorId]) -> EdgeColoredGraph:
    """The graph on the same vertices without the edges colored in ``R``."""
    R = _require_colors(G, R)
    return G.with_edges(e for e in G.edges if e.color not in R)


def components(G: EdgeColoredGraph) -> ComponentDecomposition:
    ds = DisjointSet(G.vertex_count)
    for e in G.edges:
        ds.union(e.u, e.v)
    roots: dict[int, int] = {}
    labels = tuple(roots.setdefault(ds.find(v), len(roots)) for v in range(G.vertex_count))
    return ComponentDecomposition(labels, ds.count)


def omega(G: EdgeColoredGraph) -> int:
    """Number of connected components."""
    return components(G).count


def color_multiplicity(G: EdgeColoredGraph, c: ColorId) -> int:
    _require_colors(G, (c,))
    return sum(1 for e in G.edges if e.color == c)


def multiplicities(G: EdgeColoredGraph) -> dict[ColorId, int]:
    """Edge count of every color in the color set (zero for unused colors)."""
    counts = Counter(e.color for e in G.edges)
    return {c: counts.get(c, 0) for c in G.colors}


def is_f_chromatic(G: EdgeColoredGraph, f: Mapping[ColorId, int]) -> bool:
    """True iff every color appears on at most ``f[color]`` edges of ``G``."""
    if isinstance(f, ColorBudget):
        f.require_covers(G)
    else:
        missing = [c for c in G.colors if c not in f]
        if missing:
            raise BudgetError(f"budget has no cap for color(s): {missing!r}")
    return all(count <= f[c] for c, count in multiplicities(G).items())


def resolve_edges(G: EdgeColoredGraph, F: Iterable) -> list[int]:
    """Map an iterable of edges (``Edge``/triples or edge ordinals) to ordinals of ``G``."""
    ids = []
    for item in F:
        if isinstance(item, int):
            if not 0 <= item < len(G.edges):
                raise EdgeNotInGraphError(f"edge ordinal {item} out of range")
            ids.append(item)
            continue
        u, v, c = item
        i = G.edge_index(u, v)
        if i is None or G.edges[i].color != c:
            raise EdgeNotInGraphError(f"edge {(u, v, c)!r} is not in the graph")
        ids.append(i)
    return ids


def validate_spanning_forest(G: EdgeColoredGraph, F: Iterable, f: Mapping[ColorId, int], w: int) -> bool:
    """True iff ``F`` is an acyclic, ``f``-chromatic edge set with exactly ``w`` components."""
    ids = resolve_edges(G, F)
    if len(set(ids)) != len(ids):
        return False
    if len(ids) != G.vertex_count - w:
        return False
    ds = DisjointSet(G.vertex_count)
    for i in ids:
        e = G.edges[i]
        if not ds.union(e.u, e.v):
            return False
    return is_f_chromatic(G.with_edges(G.edges[i] for i in ids), f)
