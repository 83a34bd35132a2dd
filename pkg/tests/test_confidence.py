import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from roai.confidence import (
    UNBOUNDED,
    ArmStatistics,
    Interval,
    arm_interval,
    beta_width,
    build_snapshot,
    find_ad,
    intersect_update,
    median_interval,
    snapshot_from_intervals,
)
from roai.instance import robust_threshold


def test_beta_width_values():
    assert beta_width(1, 10, 0.1) == pytest.approx(math.sqrt(math.log(400) / 2))
    assert beta_width(1, 10, 0.1) == pytest.approx(1.7308, abs=1e-4)
    assert beta_width(100, 17, 0.1) == pytest.approx(0.2805, abs=1e-4)
    assert beta_width(100, 17, 0.1) < beta_width(10, 17, 0.1)
    s = np.arange(2, 500)
    assert np.all(np.diff(beta_width(s, 17, 0.1)) < 0)


def test_beta_width_unpulled():
    with pytest.raises(ValueError, match="unpulled"):
        beta_width(0, 10, 0.1)


def test_arm_interval():
    iv = arm_interval(ArmStatistics(1, 1.0), 10, 0.1)
    assert iv.lo == pytest.approx(-0.7308, abs=1e-4)
    assert iv.hi == pytest.approx(2.7308, abs=1e-4)
    assert arm_interval(ArmStatistics(), 10, 0.1) == UNBOUNDED
    assert math.isinf(UNBOUNDED.lo) and math.isinf(UNBOUNDED.hi)


def test_arm_interval_is_symmetric_about_the_mean():
    stat = ArmStatistics(40, 20.0)
    iv = arm_interval(stat, 17, 0.1)
    assert iv.midpoint == pytest.approx(0.5)
    assert iv.width == pytest.approx(2 * beta_width(40, 17, 0.1))


def test_intersect_update():
    assert intersect_update(Interval(0, 2), Interval(1, 3)) == (Interval(1, 2), False)
    assert intersect_update(Interval(0, 1), Interval(0.2, 0.8)) == (Interval(0.2, 0.8), False)
    assert intersect_update(Interval(0, 1), Interval(2, 3)) == (Interval(1.5, 1.5), True)


def test_median_interval():
    ivs = [Interval(0, 1), Interval(0.5, 2), Interval(1.5, 3)]
    assert median_interval(ivs) == Interval(0.5, 2)
    assert median_interval([Interval(1, 4)] * 5) == Interval(1, 4)
    even = [Interval(0, 1), Interval(2, 3), Interval(4, 5), Interval(6, 7)]
    assert median_interval(even) == Interval(4, 5)
    with pytest.raises(ValueError):
        median_interval([])


@pytest.mark.parametrize(
    "arm, med, clamp, expected",
    [
        (Interval(0, 1), Interval(2, 3), True, Interval(1, 3)),
        (Interval(0, 1), Interval(2, 3), False, Interval(1, 3)),
        (Interval(0, 2), Interval(1, 3), True, Interval(0, 3)),
        (Interval(0, 2), Interval(1, 3), False, Interval(-1, 3)),
        (Interval(5, 6), Interval(1, 2), True, Interval(3, 5)),
    ],
)
def test_find_ad(arm, med, clamp, expected):
    assert find_ad(arm, med, clamp) == expected


def test_snapshot_worked_example():
    ivs = [Interval(4.9, 5.1), Interval(0.9, 1.1), Interval(-0.1, 0.1)]
    snap = snapshot_from_intervals(ivs, 2.0, clamp_at_zero=True)
    assert snap.median_lo == pytest.approx(0.9) and snap.median_hi == pytest.approx(1.1)
    np.testing.assert_allclose(snap.ad_lo, [3.8, 0.0, 0.8])
    np.testing.assert_allclose(snap.ad_hi, [4.2, 0.2, 1.2])
    assert (snap.mad_lo, snap.mad_hi) == pytest.approx((0.8, 1.2))
    assert (snap.theta_lo, snap.theta_hi) == pytest.approx((2.5, 3.5))
    assert snap.theta_midpoint == pytest.approx(3.0)
    np.testing.assert_allclose(snap.ad_midpoints, (snap.ad_lo + snap.ad_hi) / 2)


def test_snapshot_identical_intervals():
    a, b, k = 0.25, 1.0, 3.0
    snap = snapshot_from_intervals([Interval(a, b)] * 5, k, clamp_at_zero=True)
    assert snap.median_interval == Interval(a, b)
    assert all(iv == Interval(0, b - a) for iv in snap.ad_intervals)
    assert snap.mad_interval == Interval(0, b - a)
    assert snap.theta_interval == Interval(a, b + k * (b - a))


def test_snapshot_point_intervals_give_true_threshold():
    means = [0.3, 0.1, 2.2, 0.5, 0.4, 0.35]
    snap = build_snapshot(means, means, 2.5)
    assert snap.theta_lo == snap.theta_hi == robust_threshold(means, 2.5)


def test_snapshot_requires_initialisation():
    with pytest.raises(ValueError, match="initialize by pulling every arm once"):
        build_snapshot([0.0, -np.inf], [1.0, np.inf], 2.0)


def test_snapshot_invariants():
    rng = np.random.default_rng(0)
    for _ in range(200):
        n = int(rng.integers(1, 12))
        c = rng.normal(size=n)
        w = rng.uniform(0, 1, size=n)
        for clamp in (True, False):
            snap = build_snapshot(c - w, c + w, 1.7, clamp)
            assert snap.theta_lo == snap.median_lo + 1.7 * snap.mad_lo
            assert snap.theta_hi == snap.median_hi + 1.7 * snap.mad_hi
            assert snap.theta_midpoint == (snap.theta_lo + snap.theta_hi) / 2


def test_order_statistic_dominance_exhaustive():
    """If a_i >= b_i pointwise then the j-th largest of a dominates that of b."""
    alphabet = [0, 1, 2]
    for n in range(1, 7):
        for b in itertools.product(alphabet, repeat=n):
            for bump in itertools.product([0, 1], repeat=n):
                a = [x + d for x, d in zip(b, bump)]
                sa, sb = sorted(a, reverse=True), sorted(b, reverse=True)
                assert all(x >= y for x, y in zip(sa, sb))
                lo_a = median_interval([Interval(x, x + 5) for x in a]).lo
                lo_b = median_interval([Interval(x, x + 5) for x in b]).lo
                assert lo_a >= lo_b


intervals = st.tuples(st.floats(-10, 10), st.floats(0, 5)).map(lambda t: Interval(t[0], t[0] + t[1]))


@settings(max_examples=500, deadline=None)
@given(intervals, intervals, st.floats(0, 3), st.floats(0, 3), st.booleans())
def test_find_ad_monotone_in_inputs(arm, med, grow_lo, grow_hi, clamp):
    base = find_ad(arm, med, clamp)
    big_arm = Interval(arm.lo - grow_lo, arm.hi + grow_hi)
    big_med = Interval(med.lo - grow_hi, med.hi + grow_lo)
    assert find_ad(big_arm, med, clamp).contains_interval(base)
    assert find_ad(arm, big_med, clamp).contains_interval(base)


@settings(max_examples=300, deadline=None)
@given(intervals, intervals, st.floats(-10, 10), st.floats(-10, 10))
def test_find_ad_contains_true_deviation(arm, med, u, v):
    a = min(max(u, arm.lo), arm.hi)
    b = min(max(v, med.lo), med.hi)
    assert find_ad(arm, med, True).contains(abs(a - b))
    assert find_ad(arm, med, False).contains(abs(a - b))
