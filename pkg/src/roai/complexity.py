"""Gap profiles, sample-complexity bounds and hard-instance class membership."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .instance import mad_of, median_of


@dataclass(frozen=True, eq=False)
class GapProfile:
    theta_gaps: np.ndarray
    median_gaps: np.ndarray
    mad_gaps: np.ndarray
    star_gaps: np.ndarray
    min_theta_gap: float
    theta: float
    median: float
    mad: float
    degenerate: bool

    @property
    def n(self) -> int:
        return self.star_gaps.size


def _profile(means: np.ndarray, theta: float, med: float, mad: float, min_theta_gap: float):
    theta_gaps = np.abs(theta - means)
    median_gaps = np.abs(med - means)
    mad_gaps = np.abs(mad - np.abs(means - med))
    star = np.maximum(min_theta_gap, np.minimum(np.minimum(theta_gaps, median_gaps), mad_gaps))
    return theta_gaps, median_gaps, mad_gaps, star


def gap_profile(means: Sequence[float], k_eff: float) -> GapProfile:
    """Per-arm distances to the threshold, the median and (in deviation) the MAD.

    ``star_gaps[i] = max(min_theta_gap, min(theta_gap, median_gap, mad_gap))``
    is the per-arm hardness governing both sample-complexity bounds.
    """
    y = np.asarray(means, dtype=float)
    med = median_of(y)
    mad = mad_of(y)
    theta = med + k_eff * mad
    min_theta_gap = float(np.abs(theta - y).min())
    tg, mg, dg, star = _profile(y, theta, med, mad, min_theta_gap)
    return GapProfile(tg, mg, dg, star, min_theta_gap, theta, med, mad, min_theta_gap == 0.0)


def _require_positive(gaps: np.ndarray) -> None:
    if np.any(gaps <= 0):
        raise ValueError("bound undefined on degenerate instance")


def upper_bound(profile: GapProfile, n: int, k: float, delta: float, C: float = 10.0) -> float:
    """``C k^2 sum_i ln(n k / (delta g_i)) / g_i^2`` over the star gaps ``g_i``."""
    if C <= 0:
        raise ValueError("C must be positive")
    g = profile.star_gaps
    _require_positive(g)
    return float(C * k**2 * np.sum(np.log(n * k / (delta * g)) / g**2))


def subsample_upper_bound(
    means: Sequence[float], omega, k: float, delta: float, C: float = 10.0, mad_scale: float = 1.0
) -> float:
    """Bound for LUCB with median, MAD and threshold computed over ``omega``.

    Arms in ``omega`` pay the full star-gap term; arms outside only need to be
    separated from the threshold.
    """
    y = np.asarray(means, dtype=float)
    n = y.size
    omega = np.asarray(sorted(set(int(i) for i in omega)), dtype=int)
    if omega.size == 0 or omega.min() < 0 or omega.max() >= n:
        raise ValueError("omega must be a non-empty subset of the arms")
    med = median_of(y[omega])
    mad = mad_of(y[omega])
    theta = med + k * mad_scale * mad
    theta_gaps = np.abs(theta - y)
    min_theta_gap = float(theta_gaps.min())
    _, _, _, star = _profile(y[omega], theta, med, mad, min_theta_gap)
    _require_positive(star)
    outside = np.setdiff1d(np.arange(n), omega)
    tg = theta_gaps[outside]
    _require_positive(tg)
    inner = C * k**2 * np.sum(np.log(n * k / (delta * star)) / star**2)
    outer = C * np.sum(np.log(n / (delta * tg)) / tg**2)
    return float(inner + outer)


def lower_bound(profile: GapProfile, delta: float) -> float:
    """``sum_i ln(1/(2.4 delta)) / (5 g_i^2)``, valid for ``delta <= 0.15`` on hard instances."""
    if delta > 0.15:
        warnings.warn("lower bound is only guaranteed for delta <= 0.15", stacklevel=2)
    g = profile.star_gaps
    _require_positive(g)
    return float(np.sum(1.0 / (5.0 * g**2)) * math.log(1.0 / (2.4 * delta)))


@dataclass(frozen=True)
class InstanceClassReport:
    is_member: bool
    eta: float
    lower_witnesses: tuple[int, ...] = ()
    upper_witnesses: tuple[int, ...] = ()
    failure_reasons: list[str] = field(default_factory=list)
    theta: float = math.nan

    @property
    def l1(self):
        return self.lower_witnesses[0] if len(self.lower_witnesses) > 0 else None

    @property
    def l2(self):
        return self.lower_witnesses[1] if len(self.lower_witnesses) > 1 else None

    @property
    def u1(self):
        return self.upper_witnesses[0] if len(self.upper_witnesses) > 0 else None

    @property
    def u2(self):
        return self.upper_witnesses[1] if len(self.upper_witnesses) > 1 else None


def check_instance_class(
    means: Sequence[float], k: float, rho: float, mad_scale: float = 1.0
) -> InstanceClassReport:
    """Check membership in the hard-instance family used by the lower bound.

    Failure reasons are reported by identifier: ``"k >= 2"``, ``"unique median"``,
    ``"unique MAD"``, ``"rho < eta"``, ``"two arms below threshold band"``,
    ``"two arms above threshold band"``, ``"empty threshold band"``.
    """
    y = np.asarray(means, dtype=float)
    n = y.size
    m = (n + 1) // 2
    reasons: list[str] = []
    if k < 2:
        reasons.append("k >= 2")

    med = median_of(y)
    ad = np.abs(y - med)
    mad = median_of(ad)
    theta = med + k * mad_scale * mad

    eta = math.nan
    if n < m + 1 or m < 2:
        reasons += ["unique median", "unique MAD"]
    else:
        ys = np.sort(y)[::-1]
        ads = np.sort(ad)[::-1]
        # 1-based ranks m-1, m, m+1
        y_diffs = [ys[i - 1] - ys[i] for i in (m, m - 1)]
        ad_diffs = [ads[i - 1] - ads[i] for i in (m, m - 1)]
        if min(y_diffs) <= 0:
            reasons.append("unique median")
        if min(ad_diffs) <= 0:
            reasons.append("unique MAD")
        eta = 0.5 * min(y_diffs + ad_diffs)
        if not rho < eta:
            reasons.append("rho < eta")

    below = np.flatnonzero((theta - y > rho / 2) & (theta - y < rho))
    above = np.flatnonzero((y - theta > rho / 2) & (y - theta < rho))
    if below.size < 2:
        reasons.append("two arms below threshold band")
    if above.size < 2:
        reasons.append("two arms above threshold band")
    if np.any(np.abs(y - theta) <= rho / 2):
        reasons.append("empty threshold band")

    return InstanceClassReport(
        is_member=not reasons,
        eta=float(eta),
        lower_witnesses=tuple(int(i) for i in below[:2]),
        upper_witnesses=tuple(int(i) for i in above[:2]),
        failure_reasons=reasons,
        theta=float(theta),
    )
