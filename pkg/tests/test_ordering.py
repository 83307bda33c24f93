import math

import numpy as np
import pytest

from tsrcolor import (
    DegenerateGraph,
    NoTrials,
    ParameterOutOfRange,
    ResampleBudgetExceeded,
    backward_stats,
    build_graph,
    check_lemma_properties,
    chernoff_tail_bound,
    complete,
    degree_partition,
    estimate_binomial_tail,
    estimate_event_frequency,
    f1_limit,
    f2_floor,
    f3_limit,
    gnp,
    i_threshold,
    regular,
    resample_until_good,
    sample_ordering,
    star,
    tracked_vertices,
)
from tsrcolor import ordering as ordering_mod

from conftest import distance_matrix


def test_threshold_values():
    # ln(100)/100^(1/3) just below 1; delta=50 clamps to 1
    assert i_threshold(100) == pytest.approx(0.9921538402193328)
    assert i_threshold(50) == 1.0
    assert i_threshold(64) == 1.0


def test_sample_ordering_shape_and_inverse():
    g = gnp(50, 0.2, seed=0)
    o = sample_ordering(g, seed=7)
    assert np.array_equal(o.perm[o.pos], np.arange(g.n))
    assert np.array_equal(np.sort(o.x[o.perm]), o.x[o.perm])  # ascending
    assert np.array_equal(o.in_i, o.x < o.threshold)
    assert o.seed == 7


def test_sample_ordering_deterministic():
    g = gnp(30, 0.2, seed=1)
    a = sample_ordering(g, seed=5)
    b = sample_ordering(g, seed=5)
    c = sample_ordering(g, seed=6)
    assert np.array_equal(a.x, b.x) and np.array_equal(a.perm, b.perm)
    assert not np.array_equal(a.x, c.x)


def test_sample_ordering_rejects_degenerate():
    with pytest.raises(DegenerateGraph):
        sample_ordering(build_graph(2, [[0, 1]]), seed=0)
    with pytest.raises(ParameterOutOfRange):
        sample_ordering(gnp(10, 0.5, seed=0), seed=-1)


def test_backward_stats_brute_force():
    g = gnp(35, 0.15, seed=2)
    part = degree_partition(g)
    o = sample_ordering(g, seed=3)
    r = 2
    stats = backward_stats(g, o, part, r)
    dist = distance_matrix(g)
    for v in range(g.n):
        reach = [u for u in range(g.n) if u != v and dist[v, u] <= r]
        assert stats.dr_minus[v] == sum(o.pos[u] < o.pos[v] for u in reach)
        assert stats.dr_i[v] == sum(bool(o.in_i[u]) for u in reach)
        assert stats.b_minus[v] == sum(
            bool(part.is_big[u]) and o.pos[u] < o.pos[v]
            for u in g.neighbors(v))


def test_backward_reach_total_is_pair_count():
    # every pair within distance r is backward for exactly one endpoint
    g = gnp(40, 0.12, seed=4)
    part = degree_partition(g)
    o = sample_ordering(g, seed=1)
    for r in (1, 2, 3):
        stats = backward_stats(g, o, part, r)
        dist = distance_matrix(g)
        pairs = sum(dist[u, v] <= r
                    for u in range(g.n) for v in range(u + 1, g.n))
        assert int(stats.dr_minus.sum()) == pairs


def test_bound_helpers_numeric():
    assert f2_floor(0.25, 64, 4.007) == pytest.approx(-0.028)
    assert f1_limit(50, 100, 2) == pytest.approx(9921.538402193331)
    mu = 0.3 * 500
    assert f3_limit(0.3, 500, 2.0) == pytest.approx(mu + math.sqrt(mu) * 2.0)


def test_tracked_vertices():
    # star: hub is Big but nobody has enough Big neighbours
    part = degree_partition(star(6))
    assert tracked_vertices(star(6), part).size == 0
    # complete graph: everyone has n-1 Big neighbours
    g = complete(30)
    assert tracked_vertices(g, degree_partition(g)).size == 30


def test_check_lemma_properties_clean_on_typical_graph():
    g = regular(100, 8, seed=6)
    part = degree_partition(g)
    o = sample_ordering(g, seed=0)
    stats = backward_stats(g, o, part, 2)
    report = check_lemma_properties(g, o, part, stats)
    assert report.ok and report.count("F1") == 0


def test_check_lemma_properties_flags_violations():
    g = complete(251)  # max degree 250 keeps the threshold below 0.88
    part = degree_partition(g)
    base = sample_ordering(g, seed=0)
    assert base.threshold < 0.9
    # draw everyone outside I but force vertex 0 to the front: none of its
    # 250 Big neighbours precede it, far below the F2 floor
    x = np.linspace(0.9, 0.99, g.n)
    perm = np.arange(g.n, dtype=np.int64)
    pos = np.arange(g.n, dtype=np.int64)
    forced = ordering_mod.RandomOrdering(
        x=x, perm=perm, pos=pos, in_i=x < base.threshold,
        threshold=base.threshold, seed=0)
    stats = backward_stats(g, forced, part, 2)
    report = check_lemma_properties(g, forced, part, stats)
    assert (0, "F2") in report.violations
    assert not report.ok
    # extreme fabricated counts must trip the other two families
    huge = np.full(g.n, g.n * 1000, dtype=np.int64)
    fake = ordering_mod.BackwardStats(
        b_minus=stats.b_minus, dr_minus=huge, dr_i=huge, r=2)
    report2 = check_lemma_properties(g, forced, part, fake)
    assert (1, "F1") in report2.violations
    assert (1, "F3") in report2.violations


def test_resample_until_good_first_try():
    g = regular(60, 6, seed=1)
    part = degree_partition(g)
    o, attempts = resample_until_good(g, part, 2, seed=0)
    assert attempts >= 1
    stats = backward_stats(g, o, part, 2)
    assert check_lemma_properties(g, o, part, stats).ok


def test_resample_until_good_validates_budget():
    g = regular(20, 4, seed=0)
    with pytest.raises(ParameterOutOfRange):
        resample_until_good(g, degree_partition(g), 2, seed=0, max_attempts=0)


def test_resample_budget_exceeded_carries_best(monkeypatch):
    g = regular(20, 4, seed=0)
    part = degree_partition(g)
    bad = ordering_mod.LemmaReport(tracked=np.arange(3),
                                   violations=((1, "F2"),))
    monkeypatch.setattr(ordering_mod, "check_lemma_properties",
                        lambda *a, **kw: bad)
    with pytest.raises(ResampleBudgetExceeded) as err:
        resample_until_good(g, part, 2, seed=0, max_attempts=5)
    assert err.value.attempts == 5
    assert err.value.best_report is bad
    assert err.value.best_ordering is not None


def test_chernoff_bound_values_and_domain():
    assert chernoff_tail_bound(100, 0.5, 10) == pytest.approx(math.exp(-2 / 3))
    assert chernoff_tail_bound(100, 0.5, 0) == 1.0
    with pytest.raises(ParameterOutOfRange):
        chernoff_tail_bound(0, 0.5, 0)
    with pytest.raises(ParameterOutOfRange):
        chernoff_tail_bound(100, 0.0, 1)
    with pytest.raises(ParameterOutOfRange):
        chernoff_tail_bound(100, 0.5, 51)  # t > np
    with pytest.raises(ParameterOutOfRange):
        chernoff_tail_bound(100, 0.5, -1)


def test_binomial_tail_estimate_under_bound():
    freq, se = estimate_binomial_tail(200, 0.3, 12.0, samples=20_000, seed=5)
    assert 0 <= freq <= 1
    assert freq <= chernoff_tail_bound(200, 0.3, 12.0) + 3 * se
    with pytest.raises(NoTrials):
        estimate_binomial_tail(10, 0.5, 1, samples=0, seed=0)


def test_estimate_event_frequency():
    g = regular(60, 6, seed=3)
    freq = estimate_event_frequency(g, 2, trials=5, seed=0)
    assert freq.trials == 5
    assert freq.samples == 5 * freq.tracked_count
    assert freq.frequency("F1") == 0.0
    with pytest.raises(NoTrials):
        estimate_event_frequency(g, 2, trials=0, seed=0)


def test_estimate_event_frequency_empty_tracked():
    freq = estimate_event_frequency(star(6), 2, trials=3, seed=0)
    assert freq.empty and freq.frequency("F2") == 0.0
