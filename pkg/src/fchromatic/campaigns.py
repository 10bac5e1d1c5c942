"""Randomized and exhaustive verification campaigns.

Each campaign reports one tab-separated line per trial::

    seed  n  m  w  premise_verdict  forest_found  agreement_flag

(for general graphs ``m`` is the edge count) and returns a summary whose
``failures`` count must be zero.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .certify import check_forest_condition, check_heterochromatic_tree
from .construct import build_forest
from .graph import ColorBudget, EdgeColoredGraph, build_graph, validate_spanning_forest
from .oracle import InstanceFamily, brute_force_forest, enumerate_instances, forest_profiles, profile_admits
from .theorems import (
    check_rainbow_prefix,
    check_rainbow_subset,
    check_main_premise,
    check_multiplicity_premise,
    random_bipartite_coloring,
)

MODES = ("iff-agreement", "main-theorem", "bh", "su25")


@dataclass
class TrialResult:
    seed: int
    n: int
    m: int
    w: int
    premise: str
    found: bool
    ok: bool
    notes: tuple[str, ...] = ()

    def line(self) -> str:
        return "\t".join(map(str, (self.seed, self.n, self.m, self.w, self.premise,
                                   int(self.found), int(self.ok))))


@dataclass
class CampaignSummary:
    mode: str
    trials: int = 0
    failures: int = 0
    premise_holds: int = 0
    forests_found: int = 0
    counters: dict[str, int] = field(default_factory=dict)

    def add(self, result: TrialResult) -> None:
        self.trials += 1
        self.failures += not result.ok
        self.premise_holds += result.premise in ("holds", "satisfied")
        self.forests_found += result.found
        for note in result.notes:
            self.counters[note] = self.counters.get(note, 0) + 1

    @property
    def failure_label(self) -> str:
        return "disagreements" if self.mode in ("iff-agreement", "bh") else "counterexamples"

    def report(self) -> str:
        parts = [f"mode: {self.mode}", f"trials: {self.trials}",
                 f"premise holds: {self.premise_holds}", f"forests found: {self.forests_found}"]
        parts += [f"{k}: {v}" for k, v in sorted(self.counters.items())]
        parts.append(f"{self.failure_label}: {self.failures}")
        return "\n".join(parts)


def trial_seed(seed: int, index: int) -> int:
    return seed * 2**32 + index


def iff_trial(G: EdgeColoredGraph, f: ColorBudget, w: int, seed: int, oracle_found: bool | None = None) -> TrialResult:
    """Certifier, builder and brute force must all agree on one instance."""
    if oracle_found is None:
        oracle_found = brute_force_forest(G, f, w) is not None
    cert = check_forest_condition(G, f, w)
    forest = build_forest(G, f, w)
    notes = []
    if cert.satisfied != oracle_found:
        notes.append("certifier-vs-oracle")
    if (forest is not None) != cert.satisfied:
        notes.append("builder-vs-certifier")
    if forest is not None and not validate_spanning_forest(G, forest.edge_ids, f, w):
        notes.append("invalid-forest")
    if not cert.satisfied and not cert.recheck(G, f, w):
        notes.append("bad-certificate")
    return TrialResult(seed, G.vertex_count, len(G.edges), w, cert.verdict.value,
                       forest is not None, not notes, tuple(notes))


def run_iff_agreement(family: InstanceFamily, emit: Callable[[str], None] | None = None) -> CampaignSummary:
    """Exhaustive families use one forest-profile enumeration per graph;
    sampled families call the brute-force search per instance."""
    summary = CampaignSummary("iff-agreement")
    last = None
    profiles = None
    for index, (G, f, w) in enumerate(enumerate_instances(family)):
        if family.mode == "enumerate":
            if G is not last:
                last, profiles = G, forest_profiles(G)
            found = profile_admits(profiles, G, f, w)
        else:
            found = brute_force_forest(G, f, w) is not None
        result = iff_trial(G, f, w, index, found)
        summary.add(result)
        if emit is not None:
            emit(result.line())
    return summary


def _budget_with_total(rng: random.Random, colors: list[int], need: int, hi: int) -> ColorBudget:
    caps = {c: rng.randint(0, hi) for c in colors}
    while sum(caps.values()) < need:
        caps[rng.choice(colors)] += 1
    return ColorBudget(caps)


def main_theorem_trial(seed: int, max_part: int = 6, max_colors: int = 8) -> TrialResult:
    rng = random.Random(seed)
    n, m = rng.randint(1, max_part), rng.randint(1, max_part)
    k = rng.randint(1, max_colors)
    colors = list(range(k))
    w = rng.randint(1, n + m)
    if rng.random() < 0.5:
        G = random_bipartite_coloring(n, m, colors, rng.randrange(2**31))
    else:
        weights = [rng.random() for _ in colors]
        G = random_bipartite_coloring(n, m, colors, rng.randrange(2**31), "weighted", weights)
    f = _budget_with_total(rng, colors, n + m - w, rng.randint(0, 4))
    report = check_main_premise(G, f, w, n)
    forest = build_forest(G, f, w)
    ok = not report.holds or (forest is not None and validate_spanning_forest(G, forest.edge_ids, f, w))
    return TrialResult(seed, n, m, w, "holds" if report.holds else "fails", forest is not None, ok)


def _rainbow_instance(rng: random.Random, n: int) -> EdgeColoredGraph:
    k = 2 * n - 1
    cells = [(a, n + b) for a in range(n) for b in range(n)]
    order = list(range(n * n))
    rng.shuffle(order)
    colors = [0] * (n * n)
    for c in range(k):
        colors[order[c]] = c
    skew = rng.random() * 3
    weights = [(c + 1) ** skew for c in range(k)]
    for pos in order[k:]:
        colors[pos] = rng.choices(range(k), weights=weights)[0]
    return build_graph(2 * n, [(a, b, c) for (a, b), c in zip(cells, colors)], range(k))


def rainbow_trial(seed: int, max_n: int = 5) -> TrialResult:
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    G = _rainbow_instance(rng, n)
    prefix = check_rainbow_prefix(G)
    subset = check_rainbow_subset(G)
    cert = check_heterochromatic_tree(G)
    main = check_main_premise(G, ColorBudget.uniform(G.colors, 1), 1, n)
    notes = []
    if prefix.holds != subset.holds:
        notes.append("prefix-vs-subset")
    if subset.holds and not cert.satisfied:
        notes.append("holds-without-tree")
    if main.holds != subset.holds:
        notes.append("main-vs-subset")
    return TrialResult(seed, n, n, 1, "holds" if subset.holds else "fails", cert.satisfied,
                       not notes, tuple(notes))


def multiplicity_trial(seed: int, max_vertices: int = 8, max_colors: int = 5) -> TrialResult:
    rng = random.Random(seed)
    n = rng.randint(2, max_vertices)
    density = rng.random() ** 0.25
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = [p for p in pairs if rng.random() < density]
    k = rng.randint(1, max_colors)
    G = build_graph(n, [(a, b, rng.randrange(k)) for a, b in chosen], range(k))
    w = rng.randint(1, n - 1)
    f = ColorBudget({c: rng.randint(0, 3) for c in range(k)})
    report = check_multiplicity_premise(G, f, w)
    forest = build_forest(G, f, w)
    ok = not report.holds or (forest is not None and validate_spanning_forest(G, forest.edge_ids, f, w))
    return TrialResult(seed, n, len(G.edges), w, "holds" if report.holds else "fails", forest is not None, ok)


_TRIALS = {"main-theorem": main_theorem_trial, "bh": rainbow_trial, "su25": multiplicity_trial}


def _run_chunk(args):
    mode, seeds = args
    return [_TRIALS[mode](s) for s in seeds]


def run_random(mode: str, trials: int, seed: int, emit: Callable[[str], None] | None = None,
               jobs: int = 1) -> CampaignSummary:
    if mode not in _TRIALS:
        raise ValueError(f"unknown random campaign {mode!r}")
    seeds = [trial_seed(seed, i) for i in range(trials)]
    summary = CampaignSummary(mode)
    if jobs > 1 and trials > 1:
        size = max(1, trials // (jobs * 4))
        chunks = [(mode, seeds[i:i + size]) for i in range(0, trials, size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results: Iterable[TrialResult] = (r for chunk in pool.map(_run_chunk, chunks) for r in chunk)
            for r in results:
                summary.add(r)
                if emit is not None:
                    emit(r.line())
        return summary
    for s in seeds:
        r = _TRIALS[mode](s)
        summary.add(r)
        if emit is not None:
            emit(r.line())
    return summary


def sharpness_grid(max_part: int = 6, color_counts: Iterable[int] = (2, 3, 4), max_cap: int = 3):
    """Every ``(n, m, w, f, R)`` in the grid for which the tightness construction
    applies (positive even p, p/2 within both parts) and the total budget
    reaches n+m-w."""
    from itertools import combinations, product

    for k in color_counts:
        colors = list(range(k))
        subsets = [frozenset(R) for size in range(1, k) for R in combinations(colors, size)]
        for caps in product(range(max_cap + 1), repeat=k):
            f = ColorBudget(dict(zip(colors, caps)))
            for n in range(1, max_part + 1):
                for m in range(1, max_part + 1):
                    for w in range(1, n + m + 1):
                        if sum(caps) < n + m - w:
                            continue
                        for R in subsets:
                            p = n + m - w - sum(caps[c] for c in colors if c not in R)
                            if p > 0 and p % 2 == 0 and p // 2 <= min(n, m):
                                yield n, m, w, f, R


def sharpness_trial(n: int, m: int, w: int, f: ColorBudget, R: frozenset) -> tuple[str, ...]:
    """Problems found with one tightness instance (empty when it behaves)."""
    from .graph import edges_with_colors
    from .theorems import main_premise_at, make_sharpness_instance

    inst = make_sharpness_instance(n, m, w, f, R)
    G = inst.graph
    notes = []
    if 4 * len(edges_with_colors(G, R)) != inst.p ** 2:
        notes.append("edge-count")
    if main_premise_at(G, f, w, R):
        notes.append("premise-holds-at-R")
    if check_main_premise(G, f, w, n).holds:
        notes.append("premise-holds")
    cert = check_forest_condition(G, f, w)
    if cert.satisfied:
        notes.append("forest-exists")
    elif not cert.recheck(G, f, w):
        notes.append("bad-certificate")
    return tuple(notes)
