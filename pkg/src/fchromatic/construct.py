"""Witness construction by matroid intersection.

A spanning forest with exactly ``w`` components that uses each color ``c`` at
most ``f[c]`` times is a common independent set of size ``n - w`` of the
graphic matroid and the partition matroid with capacities ``f``.  We grow one
by shortest augmenting paths and stop as soon as the target size is reached.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from ._backend import kernels
from .errors import PreconditionError
from .graph import ColorBudget, ColorId, EdgeColoredGraph, SpanningForest


def _caps(G: EdgeColoredGraph, f: Mapping[ColorId, int]) -> list[int]:
    if not isinstance(f, ColorBudget):
        f = ColorBudget(f)
    return f.dense_caps(G)


@dataclass(frozen=True)
class IntersectionState:
    graph: EdgeColoredGraph = field(repr=False)
    budget: ColorBudget = field(repr=False)
    members: frozenset[int] = frozenset()

    @property
    def usage(self) -> Counter:
        return Counter(self.graph.edges[e].color for e in self.members)

    def __len__(self) -> int:
        return len(self.members)


def initial_state(G: EdgeColoredGraph, f: Mapping[ColorId, int]) -> IntersectionState:
    budget = f if isinstance(f, ColorBudget) else ColorBudget(f)
    budget.require_covers(G)
    return IntersectionState(G, budget)


def augment(state: IntersectionState) -> IntersectionState | None:
    """One augmentation step; None when the current set is already maximum."""
    G = state.graph
    n, eu, ev, ecol = G.kernel_arrays()
    in_set = [e in state.members for e in range(len(G.edges))]
    path = kernels.augmenting_path(n, eu, ev, ecol, state.budget.dense_caps(G), in_set)
    if path is None:
        return None
    return IntersectionState(G, state.budget, state.members.symmetric_difference(path))


def truncate_to(members: Iterable[int], target_size: int) -> list[int]:
    """The ``target_size`` lowest-ordinal edges of an independent set (still independent)."""
    members = sorted(members)
    if not 0 <= target_size <= len(members):
        raise PreconditionError(f"cannot truncate a set of {len(members)} edges to {target_size}")
    return members[:target_size]


def build_forest(G: EdgeColoredGraph, f: Mapping[ColorId, int], w: int) -> SpanningForest | None:
    """An ``f``-chromatic spanning forest of ``G`` with exactly ``w`` components, or None."""
    if not 1 <= w <= G.vertex_count:
        raise PreconditionError(f"w={w} must lie in [1, {G.vertex_count}]")
    caps = _caps(G, f)
    target = G.vertex_count - w
    if target == 0:
        return SpanningForest(G, ())
    n, eu, ev, ecol = G.kernel_arrays()
    found = kernels.intersect(n, eu, ev, ecol, caps, target)
    if len(found) < target:
        return None
    return SpanningForest(G, tuple(truncate_to(found, target)))
