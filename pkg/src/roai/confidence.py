"""Confidence intervals for arm means and the derived median, AD, MAD and threshold."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .instance import _kth_largest_index


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        return (self.lo + self.hi) / 2

    def overlaps(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi


UNBOUNDED = Interval(-math.inf, math.inf)


@dataclass(frozen=True)
class ArmStatistics:
    pulls: int = 0
    reward_sum: float = 0.0

    @property
    def empirical_mean(self) -> float:
        if self.pulls == 0:
            raise ValueError("empirical mean undefined before the first pull")
        return self.reward_sum / self.pulls


def beta_width(s, n: int, delta: float):
    """Anytime Hoeffding half-width ``sqrt(ln(4 n s^2 / delta) / (2 s))``.

    ``s`` may be an integer or an array of pull counts.
    """
    s_arr = np.asarray(s, dtype=float)
    if np.any(s_arr < 1):
        raise ValueError("unpulled arm has no finite width")
    out = np.sqrt(np.log(4.0 * n * s_arr**2 / delta) / (2.0 * s_arr))
    return float(out) if out.ndim == 0 else out


def arm_interval(stat: ArmStatistics, n: int, delta: float) -> Interval:
    if stat.pulls == 0:
        return UNBOUNDED
    b = beta_width(stat.pulls, n, delta)
    mean = stat.empirical_mean
    return Interval(mean - b, mean + b)


def intersect_update(previous: Interval, fresh: Interval) -> tuple[Interval, bool]:
    """Running intersection of confidence intervals.

    An empty intersection collapses to the midpoint of the gap and is flagged.
    """
    lo = max(previous.lo, fresh.lo)
    hi = min(previous.hi, fresh.hi)
    if lo > hi:
        mid = (lo + hi) / 2
        return Interval(mid, mid), True
    return Interval(lo, hi), False


def intersect_arrays(prev_lo, prev_hi, lo, hi):
    """Vectorised :func:`intersect_update`; returns ``(lo, hi, violated_mask)``."""
    new_lo = np.maximum(prev_lo, lo)
    new_hi = np.minimum(prev_hi, hi)
    bad = new_lo > new_hi
    if bad.any():
        mid = (new_lo[bad] + new_hi[bad]) / 2
        new_lo[bad] = mid
        new_hi[bad] = mid
    return new_lo, new_hi, bad


def _median_array(x: np.ndarray) -> float:
    j = _kth_largest_index(x.size)
    return float(np.partition(x, j)[j])


def median_interval(intervals: Sequence[Interval]) -> Interval:
    if len(intervals) == 0:
        raise ValueError("empty sequence")
    lo = np.array([iv.lo for iv in intervals], dtype=float)
    hi = np.array([iv.hi for iv in intervals], dtype=float)
    return Interval(_median_array(lo), _median_array(hi))


def find_ad(arm: Interval, median: Interval, clamp_at_zero: bool = True) -> Interval:
    """Interval for ``|a - b|`` given intervals for ``a`` and ``b``."""
    lower = max(arm.lo - median.hi, median.lo - arm.hi)
    if clamp_at_zero:
        lower = max(lower, 0.0)
    upper = max(arm.hi - median.lo, median.hi - arm.lo)
    return Interval(lower, upper)


def _find_ad_arrays(lo, hi, med_lo, med_hi, clamp_at_zero):
    ad_lo = np.maximum(lo - med_hi, med_lo - hi)
    if clamp_at_zero:
        ad_lo = np.maximum(ad_lo, 0.0)
    ad_hi = np.maximum(hi - med_lo, med_hi - lo)
    return ad_lo, ad_hi


@dataclass(frozen=True, eq=False)
class CiSnapshot:
    """All confidence intervals of one round, stored as parallel arrays.

    ``arm_lo``/``arm_hi`` cover every arm. The median, AD, MAD and threshold
    intervals are computed from the arms listed in ``basis`` (all arms unless
    the threshold is built from a subset); AD arrays still cover every arm.
    """

    arm_lo: np.ndarray
    arm_hi: np.ndarray
    median_lo: float
    median_hi: float
    ad_lo: np.ndarray
    ad_hi: np.ndarray
    mad_lo: float
    mad_hi: float
    theta_lo: float
    theta_hi: float
    basis: np.ndarray
    coverage_violation: bool = False

    @property
    def n(self) -> int:
        return self.arm_lo.size

    @property
    def arm_intervals(self) -> list[Interval]:
        return [Interval(a, b) for a, b in zip(self.arm_lo, self.arm_hi)]

    @property
    def ad_intervals(self) -> list[Interval]:
        return [Interval(a, b) for a, b in zip(self.ad_lo, self.ad_hi)]

    @property
    def median_interval(self) -> Interval:
        return Interval(self.median_lo, self.median_hi)

    @property
    def mad_interval(self) -> Interval:
        return Interval(self.mad_lo, self.mad_hi)

    @property
    def theta_interval(self) -> Interval:
        return Interval(self.theta_lo, self.theta_hi)

    @property
    def ad_midpoints(self) -> np.ndarray:
        return (self.ad_lo + self.ad_hi) / 2

    @property
    def theta_midpoint(self) -> float:
        return (self.theta_lo + self.theta_hi) / 2

    def theta_overlap(self) -> np.ndarray:
        """Boolean mask of arms whose interval meets the threshold interval."""
        return (self.arm_lo <= self.theta_hi) & (self.arm_hi >= self.theta_lo)


def build_snapshot(
    arm_lo,
    arm_hi,
    k_eff: float,
    clamp_at_zero: bool = True,
    basis=None,
    coverage_violation: bool = False,
) -> CiSnapshot:
    """Derive median, AD, MAD and threshold intervals from arm intervals.

    Args:
        arm_lo, arm_hi: per-arm interval bounds.
        k_eff: outlier multiplier, already including any MAD scale factor.
        clamp_at_zero: clamp AD lower bounds at zero.
        basis: optional arm indices the median and MAD are computed over.
        coverage_violation: carried through from the interval update.
    """
    lo = np.asarray(arm_lo, dtype=float)
    hi = np.asarray(arm_hi, dtype=float)
    if lo.size == 0:
        raise ValueError("empty sequence")
    if not (np.all(np.isfinite(lo)) and np.all(np.isfinite(hi))):
        raise ValueError("initialize by pulling every arm once")
    basis = np.arange(lo.size) if basis is None else np.asarray(basis, dtype=int)
    med_lo = _median_array(lo[basis])
    med_hi = _median_array(hi[basis])
    ad_lo, ad_hi = _find_ad_arrays(lo, hi, med_lo, med_hi, clamp_at_zero)
    mad_lo = _median_array(ad_lo[basis])
    mad_hi = _median_array(ad_hi[basis])
    return CiSnapshot(
        arm_lo=lo,
        arm_hi=hi,
        median_lo=med_lo,
        median_hi=med_hi,
        ad_lo=ad_lo,
        ad_hi=ad_hi,
        mad_lo=mad_lo,
        mad_hi=mad_hi,
        theta_lo=med_lo + k_eff * mad_lo,
        theta_hi=med_hi + k_eff * mad_hi,
        basis=basis,
        coverage_violation=coverage_violation,
    )


def snapshot_from_intervals(
    intervals: Sequence[Interval], k_eff: float, clamp_at_zero: bool = True
) -> CiSnapshot:
    return build_snapshot(
        [iv.lo for iv in intervals], [iv.hi for iv in intervals], k_eff, clamp_at_zero
    )
