"""Decision procedure with certificates for f-chromatic spanning forests.

A graph has an ``f``-chromatic spanning forest with exactly ``w`` components
iff every color subset ``R`` satisfies

    components(G - E_R) <= w + sum(f[c] for c in R).

``check_forest_condition`` enumerates the subsets (smallest first, then
lexicographic) and returns the first violating one as a certificate of
non-existence.
"""

from __future__ import annotations

import enum
import json
from collections.abc import Mapping
from dataclasses import dataclass, field

from ._backend import kernels
from .errors import CapacityError, PreconditionError
from .graph import ColorBudget, ColorId, EdgeColoredGraph, SpanningForest, omega, remove_colors

MAX_EXHAUSTIVE_COLORS = 24


class Verdict(enum.Enum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    violating_set: frozenset[ColorId] | None = None
    observed_components: int | None = None
    bound: int | None = None
    witness: SpanningForest | None = field(default=None, compare=False)

    @property
    def satisfied(self) -> bool:
        return self.verdict is Verdict.SATISFIED

    def recheck(self, G: EdgeColoredGraph, f: Mapping[ColorId, int], w: int) -> bool:
        """Recompute both sides of a violation from scratch; True if it still holds."""
        if self.verdict is not Verdict.VIOLATED:
            raise ValueError("only violated certificates can be rechecked")
        observed = omega(remove_colors(G, self.violating_set))
        bound = w + sum(f[c] for c in self.violating_set)
        return observed == self.observed_components and bound == self.bound and observed > bound

    def as_dict(self, G: EdgeColoredGraph) -> dict:
        out: dict = {"verdict": self.verdict.value}
        if self.verdict is Verdict.VIOLATED:
            out["violating_colors"] = [G.color_name(c) for c in sorted(self.violating_set)]
            out["omega"] = self.observed_components
            out["bound"] = self.bound
        if self.witness is not None:
            out["witness_edges"] = [[e.u, e.v, G.color_name(e.color)] for e in self.witness.edges]
        return out

    def to_json(self, G: EdgeColoredGraph) -> str:
        return json.dumps(self.as_dict(G))


def check_forest_condition(G: EdgeColoredGraph, f: Mapping[ColorId, int], w: int,
                           witness: bool = False) -> Certificate:
    if not 1 <= w <= G.vertex_count:
        raise PreconditionError(f"w={w} must lie in [1, {G.vertex_count}]")
    budget = f if isinstance(f, ColorBudget) else ColorBudget(f)
    caps = budget.dense_caps(G)
    if len(G.colors) > MAX_EXHAUSTIVE_COLORS:
        raise CapacityError(
            f"{len(G.colors)} colors exceed the exhaustive cap of {MAX_EXHAUSTIVE_COLORS}")
    n, eu, ev, ecol = G.kernel_arrays()
    hit = kernels.first_violation(n, eu, ev, ecol, caps, w)
    if hit is None:
        forest = None
        if witness:
            from .construct import build_forest
            forest = build_forest(G, budget, w)
        return Certificate(Verdict.SATISFIED, witness=forest)
    mask, observed = hit
    R = frozenset(c for i, c in enumerate(G.colors) if (mask >> i) & 1)
    return Certificate(Verdict.VIOLATED, R, observed, w + budget.total(R))


def check_heterochromatic_tree(G: EdgeColoredGraph, witness: bool = False) -> Certificate:
    """Spanning tree with pairwise distinct colors."""
    if G.vertex_count < 1:
        raise PreconditionError("the graph has no vertices")
    return check_forest_condition(G, ColorBudget.uniform(G.colors, 1), 1, witness)


def check_rainbow_forest(G: EdgeColoredGraph, k: int, witness: bool = False) -> Certificate:
    """Rainbow spanning forest with ``n - k`` components (``k`` distinct-colored edges)
    in a connected graph."""
    n = G.vertex_count
    if not 1 <= k <= n - 1:
        raise PreconditionError(f"k={k} must lie in [1, {n - 1}]")
    if omega(G) != 1:
        raise PreconditionError("the graph must be connected")
    return check_forest_condition(G, ColorBudget.uniform(G.colors, 1), n - k, witness)
