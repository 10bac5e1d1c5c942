from fchromatic.campaigns import (
    CampaignSummary,
    TrialResult,
    iff_trial,
    run_iff_agreement,
    run_random,
    sharpness_grid,
    sharpness_trial,
)
from fchromatic.graph import ColorBudget
from fchromatic.oracle import InstanceFamily

from .conftest import C1


def test_trial_line():
    r = TrialResult(7, 3, 3, 1, "holds", True, True)
    assert r.line() == "7\t3\t3\t1\tholds\t1\t1"


def test_summary_counts():
    s = CampaignSummary("main-theorem")
    s.add(TrialResult(1, 2, 2, 1, "holds", True, True))
    s.add(TrialResult(2, 2, 2, 1, "fails", False, False, ("x",)))
    assert (s.trials, s.failures, s.premise_holds, s.forests_found) == (2, 1, 1, 1)
    assert s.report().endswith("counterexamples: 1")
    assert "x: 1" in s.report()


def test_iff_trial(het_k22, mono_k22, ones):
    assert iff_trial(het_k22, ones(het_k22), 1, 0).ok
    r = iff_trial(mono_k22, ColorBudget({C1: 1}), 1, 0)
    assert r.ok and not r.found and r.premise == "violated"


def test_exhaustive_small():
    lines = []
    family = InstanceFamily(max_vertices=4, max_colors=2, max_cap=2, max_w=4)
    summary = run_iff_agreement(family, lines.append)
    assert summary.failures == 0 and summary.trials == len(lines) > 0
    assert "disagreements: 0" in summary.report()


def test_zero_trials():
    s = run_random("main-theorem", 0, 1)
    assert (s.trials, s.failures) == (0, 0)


def test_random_reproducible():
    a, b = [], []
    run_random("su25", 30, 4, a.append)
    run_random("su25", 30, 4, b.append)
    assert a == b


def test_parallel_matches_serial():
    a, b = [], []
    run_random("bh", 20, 2, a.append)
    run_random("bh", 20, 2, b.append, jobs=2)
    assert a == b


def test_sharpness_grid_members_are_tight():
    grid = list(sharpness_grid(max_part=3, color_counts=(2, 3), max_cap=2))
    assert grid
    assert all(sharpness_trial(*params) == () for params in grid)
