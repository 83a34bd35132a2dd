"""Bandit instances, robust/non-robust outlier thresholds and instance generators."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

# Consistency factor 1/Phi^-1(3/4) making MAD estimate the normal sd.
NORMAL_MAD_SCALE = 1.4826


class RewardModel(enum.Enum):
    GAUSSIAN = "gaussian"
    BERNOULLI = "bernoulli"


@dataclass(frozen=True)
class BanditInstance:
    """Arm means plus everything needed to simulate and score a run.

    ``k`` is the outlier multiplier of the median/MAD rule and ``mad_scale``
    the MAD consistency factor; the two only ever appear as their product
    ``k_eff``. ``contaminated`` optionally records which arms a generator drew
    from the contamination distribution.
    """

    means: tuple[float, ...]
    reward_model: RewardModel = RewardModel.GAUSSIAN
    sigma: float = 1.0
    k: float = 2.0
    mad_scale: float = 1.0
    contaminated: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "means", tuple(float(v) for v in self.means))
        if not self.means:
            raise ValueError("empty sequence")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.mad_scale <= 0:
            raise ValueError(f"mad_scale must be positive, got {self.mad_scale}")
        if self.reward_model is RewardModel.GAUSSIAN and self.sigma <= 0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")
        if self.reward_model is RewardModel.BERNOULLI:
            bad = [v for v in self.means if not 0.0 <= v <= 1.0]
            if bad:
                raise ValueError(f"Bernoulli means must lie in [0, 1], got {bad[0]}")

    @property
    def n(self) -> int:
        return len(self.means)

    @property
    def k_eff(self) -> float:
        return self.k * self.mad_scale

    @property
    def threshold(self) -> float:
        return robust_threshold(self.means, self.k_eff)

    def outliers(self) -> "OutlierSet":
        return true_outlier_set(self.means, self.threshold)


@dataclass(frozen=True)
class GeneratorConfig:
    """Deterministic-fraction Huber contamination of a clipped normal meta distribution."""

    n: int = 105
    contamination_fraction: float = 0.0
    normal_mean: float = 0.3
    normal_sd: float = 0.075
    outlier_low: float = 0.7
    outlier_high: float = 1.0
    clip_to_three_sigma: bool = True
    reward_model: RewardModel = RewardModel.GAUSSIAN
    sigma: float = 1.0
    k: float = 3.0
    mad_scale: float = NORMAL_MAD_SCALE

    @property
    def n_contaminated(self) -> int:
        # tolerance guards products like 100 * 0.29 = 28.999999999999996
        return math.floor(self.n * self.contamination_fraction + 1e-9)


@dataclass(frozen=True)
class OutlierSet:
    indices: frozenset[int]
    degenerate: bool


def _kth_largest_index(n: int) -> int:
    # m-th largest with m = ceil(n/2), as an index into ascending order
    return n - (n + 1) // 2


def median_of(values: Sequence[float]) -> float:
    """Median taken as the m-th largest value, m = ceil(n/2).

    For even n this is the upper of the two middle values.

    >>> median_of([1, 2, 3, 4])
    3.0
    """
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        raise ValueError("empty sequence")
    j = _kth_largest_index(arr.size)
    return float(np.partition(arr, j)[j])


def mad_of(values: Sequence[float]) -> float:
    """Median absolute deviation around :func:`median_of`, same median convention."""
    arr = np.asarray(values, dtype=float)
    return median_of(np.abs(arr - median_of(arr)))


def robust_threshold(means: Sequence[float], k_eff: float) -> float:
    if k_eff <= 0:
        raise ValueError(f"k_eff must be positive, got {k_eff}")
    return median_of(means) + k_eff * mad_of(means)


def nonrobust_threshold(means: Sequence[float], k: float) -> float:
    """Mean plus k population standard deviations (divisor n)."""
    arr = np.asarray(means, dtype=float)
    if arr.size == 0:
        raise ValueError("empty sequence")
    return float(arr.mean() + k * arr.std())


def true_outlier_set(means: Sequence[float], threshold: float) -> OutlierSet:
    arr = np.asarray(means, dtype=float)
    if arr.size == 0:
        raise ValueError("empty sequence")
    idx = frozenset(int(i) for i in np.flatnonzero(arr > threshold))
    return OutlierSet(idx, bool(np.any(arr == threshold)))


def generate_contaminated(config: GeneratorConfig, seed) -> BanditInstance:
    """Draw one instance from the contaminated meta distribution.

    Exactly ``floor(n * eps)`` means come from ``Unif(outlier_low, outlier_high)``
    and the rest from ``N(normal_mean, normal_sd^2)``, optionally clipped to
    three standard deviations. Arm order is shuffled.
    """
    if not 0.0 <= config.contamination_fraction < 0.5:
        raise ValueError("contamination breaks median")
    if config.n < 1:
        raise ValueError("n must be positive")
    if not config.outlier_low < config.outlier_high:
        raise ValueError("outlier_low must be below outlier_high")
    rng = np.random.default_rng(seed)
    n_out = config.n_contaminated
    normal = rng.normal(config.normal_mean, config.normal_sd, size=config.n - n_out)
    if config.clip_to_three_sigma:
        lo = config.normal_mean - 3 * config.normal_sd
        hi = config.normal_mean + 3 * config.normal_sd
        normal = np.clip(normal, lo, hi)
    outlying = rng.uniform(config.outlier_low, config.outlier_high, size=n_out)
    means = np.concatenate([normal, outlying])
    order = rng.permutation(config.n)
    means = means[order]
    contaminated = frozenset(int(i) for i in np.flatnonzero(order >= config.n - n_out))
    return BanditInstance(
        means=tuple(means),
        reward_model=config.reward_model,
        sigma=config.sigma,
        k=config.k,
        mad_scale=config.mad_scale,
        contaminated=contaminated,
    )


def ladder_instance(
    n_normal: int = 15,
    value_range: tuple[float, float] = (0.0, 2.0),
    delta_star: float = 0.2,
    outlier_gap: float = 0.2,
    k: float = 2.0,
    mad_scale: float = NORMAL_MAD_SCALE,
    sigma: float = 0.5,
) -> BanditInstance:
    """Equally spaced normal arms plus two outliers just above the threshold.

    The outliers sit at ``theta + delta_star`` and
    ``theta + delta_star + outlier_gap``. Because they are placed above every
    normal arm, they always occupy the two largest ranks of both the means and
    the absolute deviations, so ``theta`` can be computed by treating them as
    ``+inf``. A ValueError is raised when that assumption fails.
    """
    if n_normal < 3:
        raise ValueError("n_normal must be at least 3")
    if delta_star <= 0 or outlier_gap < 0:
        raise ValueError("delta_star must be positive and outlier_gap non-negative")
    lo, hi = value_range
    normal = np.linspace(lo, hi, n_normal)
    k_eff = k * mad_scale
    theta = robust_threshold(np.concatenate([normal, [np.inf, np.inf]]), k_eff)
    if not np.isfinite(theta):
        raise ValueError("non-invariant ladder")
    outliers = np.array([theta + delta_star, theta + delta_star + outlier_gap])
    means = np.concatenate([normal, outliers])
    med = median_of(means)
    # outliers must outrank every normal arm in mean and in deviation
    if outliers.min() <= normal.max() or (outliers.min() - med) <= np.abs(normal - med).max():
        raise ValueError("non-invariant ladder")
    if not math.isclose(robust_threshold(means, k_eff), theta, rel_tol=0, abs_tol=1e-12):
        raise ValueError("non-invariant ladder")
    return BanditInstance(
        means=tuple(means), sigma=sigma, k=k, mad_scale=mad_scale
    )
