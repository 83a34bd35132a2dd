"""Sampling, stopping and recommendation rules of the outlier-identification samplers.

Every sampler exposes the same small contract used by :func:`roai.simulation.run`:

* ``name``, ``clamp_at_zero`` and ``intersecting`` describe how the runner
  builds confidence intervals for it;
* ``reset(n, seed)`` prepares per-run state and returns the arms used as the
  median/MAD basis (``None`` for all arms);
* ``step(snapshot, empirical_means)`` returns a :class:`SamplerStep`.

Ties in every ranking, argmin and argmax go to the lowest arm index.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .confidence import CiSnapshot

_EMPTY = np.zeros(0, dtype=int)


@dataclass(frozen=True, eq=False)
class SamplerStep:
    arms_to_pull: np.ndarray
    stopped: bool
    recommendation: frozenset[int] | None = None
    active_median: np.ndarray = field(default_factory=lambda: _EMPTY)
    active_mad: np.ndarray = field(default_factory=lambda: _EMPTY)
    active_theta: np.ndarray = field(default_factory=lambda: _EMPTY)

    def __post_init__(self):
        if self.stopped and (self.arms_to_pull.size or self.recommendation is None):
            raise ValueError("a stopped step pulls nothing and carries a recommendation")


def recommend(snapshot: CiSnapshot, empirical_means) -> frozenset[int]:
    """Arms whose empirical mean is strictly above the estimated threshold."""
    return frozenset(int(i) for i in np.flatnonzero(recommend_mask(snapshot, empirical_means)))


def recommend_mask(snapshot: CiSnapshot, empirical_means) -> np.ndarray:
    return np.asarray(empirical_means, dtype=float) > snapshot.theta_midpoint


def _finish(snapshot, empirical_means, med, mad, theta) -> SamplerStep:
    if theta.size == 0:
        return SamplerStep(
            _EMPTY, True, recommend(snapshot, empirical_means), med, mad, theta
        )
    if med.size + mad.size + theta.size <= 32:
        pull = np.array(sorted(set(med.tolist()) | set(mad.tolist()) | set(theta.tolist())), dtype=int)
    else:
        pull = np.union1d(np.union1d(med, mad), theta)
    return SamplerStep(pull, False, None, med, mad, theta)


# -- elimination -----------------------------------------------------------


@dataclass
class ElimState:
    """Boolean masks of the three active sets; they only ever shrink."""

    active_median: np.ndarray
    active_mad: np.ndarray
    active_theta: np.ndarray
    round: int = 0

    @classmethod
    def start(cls, n: int) -> "ElimState":
        full = np.ones(n, dtype=bool)
        return cls(full.copy(), full.copy(), full.copy())


def elim_step(state: ElimState, snapshot: CiSnapshot, empirical_means) -> SamplerStep:
    """Shrink the three active sets and pull their union; stop once no arm meets the threshold."""
    lo, hi = snapshot.arm_lo, snapshot.arm_hi
    state.active_median &= (lo <= snapshot.median_hi) & (hi >= snapshot.median_lo)
    state.active_mad &= (snapshot.ad_lo <= snapshot.mad_hi) & (snapshot.ad_hi >= snapshot.mad_lo)
    state.active_theta &= snapshot.theta_overlap()
    state.round += 1
    return _finish(
        snapshot,
        empirical_means,
        np.flatnonzero(state.active_median),
        np.flatnonzero(state.active_mad),
        np.flatnonzero(state.active_theta),
    )


# -- LUCB ------------------------------------------------------------------


@dataclass
class LucbState:
    round: int = 0
    kappa1: int = 0
    kappa2: int = 0
    top_kappa1: np.ndarray = field(default_factory=lambda: _EMPTY)
    top_kappa2: np.ndarray = field(default_factory=lambda: _EMPTY)
    top_ad_kappa1: np.ndarray = field(default_factory=lambda: _EMPTY)
    top_ad_kappa2: np.ndarray = field(default_factory=lambda: _EMPTY)


def _ranking(score: np.ndarray, candidates: np.ndarray) -> np.ndarray:
    # candidates are ascending, so a stable sort breaks ties by lowest index
    return candidates[np.argsort(-score[candidates], kind="stable")]


def _argmin(values: np.ndarray, among: np.ndarray) -> list[int]:
    if among.size == 0:
        return []
    return [int(among[np.lexsort((among, values[among]))[0]])]


def _argmax(values: np.ndarray, among: np.ndarray) -> list[int]:
    if among.size == 0:
        return []
    return [int(among[np.lexsort((among, -values[among]))[0]])]


def _boundary_arms(score, lo, hi, basis, kappas, tops_out) -> np.ndarray:
    order = _ranking(score, basis)
    chosen: list[int] = []
    for kappa in kappas:
        top, rest = order[:kappa], order[kappa:]
        chosen += _argmin(lo, top) + _argmax(hi, rest)
        tops_out.append(top)
    return np.array(sorted(set(chosen)), dtype=int)


def lucb_step(
    state: LucbState, snapshot: CiSnapshot, empirical_means, ad_midpoints=None
) -> SamplerStep:
    """LUCB-style selection: four median-boundary, four MAD-boundary and two threshold-boundary arms.

    The median and MAD boundaries are searched within ``snapshot.basis``; the
    threshold boundary always spans all arms.
    """
    means = np.asarray(empirical_means, dtype=float)
    ad_mid = snapshot.ad_midpoints if ad_midpoints is None else np.asarray(ad_midpoints)
    basis = snapshot.basis
    m = math.ceil(basis.size / 2)
    state.kappa1, state.kappa2 = m - 1, m
    kappas = (state.kappa1, state.kappa2)

    tops: list[np.ndarray] = []
    med = _boundary_arms(means, snapshot.arm_lo, snapshot.arm_hi, basis, kappas, tops)
    mad = _boundary_arms(ad_mid, snapshot.ad_lo, snapshot.ad_hi, basis, kappas, tops)
    state.top_kappa1, state.top_kappa2, state.top_ad_kappa1, state.top_ad_kappa2 = tops

    outlying = means > snapshot.theta_midpoint
    candidates = _argmin(snapshot.arm_lo, np.flatnonzero(outlying)) + _argmax(
        snapshot.arm_hi, np.flatnonzero(~outlying)
    )
    overlap = snapshot.theta_overlap()
    theta = np.array(sorted({i for i in candidates if overlap[i]}), dtype=int)
    state.round += 1
    return _finish(snapshot, means, med, mad, theta)


def subsampled_lucb_step(
    state: LucbState, snapshot_over_omega: CiSnapshot, omega, empirical_means
) -> SamplerStep:
    """LUCB step whose median/MAD boundaries are restricted to ``omega``."""
    omega = np.asarray(sorted(omega), dtype=int)
    if not np.array_equal(omega, snapshot_over_omega.basis):
        raise ValueError("snapshot was not built over omega")
    return lucb_step(state, snapshot_over_omega, empirical_means)


# -- uniform baseline --------------------------------------------------------


def uniform_step(n: int, snapshot: CiSnapshot, empirical_means) -> SamplerStep:
    """Pull every arm; stop under the same threshold-overlap rule as the adaptive samplers."""
    theta = np.flatnonzero(snapshot.theta_overlap())
    if theta.size == 0:
        return _finish(snapshot, empirical_means, _EMPTY, _EMPTY, theta)
    return SamplerStep(np.arange(n), False, None, active_theta=theta)


# -- subset selection --------------------------------------------------------


def subset_size(n: int, epsilon: float, lam: float, floor_size: int = 15) -> int:
    n_bad = math.floor(n * epsilon + 1e-9)
    return max(math.floor(lam * n_bad) + 1, floor_size)


def select_subset(n: int, epsilon: float, lam: float, floor_size: int = 15, seed=None) -> np.ndarray:
    """Uniform random subset of size ``max(floor(lam * floor(n eps)) + 1, floor_size)``.

    Returned sorted. Warns when ``lam < 2`` with positive contamination, since
    the subset median can then be captured by contaminated arms.
    """
    size = subset_size(n, epsilon, lam, floor_size)
    if size > n:
        raise ValueError(f"subset size {size} exceeds n = {n}")
    if epsilon > 0 and lam < 2:
        warnings.warn("subset median may be broken by contamination", stacklevel=2)
    rng = np.random.default_rng(seed)
    return np.sort(rng.choice(n, size=size, replace=False))


# -- sampler objects ---------------------------------------------------------


class ElimSampler:
    name = "elim"
    intersecting = True

    def __init__(self, clamp_at_zero: bool = True):
        self.clamp_at_zero = clamp_at_zero
        self.state: ElimState | None = None

    def reset(self, n: int, seed=None):
        self.state = ElimState.start(n)
        return None

    def step(self, snapshot: CiSnapshot, empirical_means) -> SamplerStep:
        return elim_step(self.state, snapshot, empirical_means)


class LucbSampler:
    name = "lucb"
    intersecting = False

    def __init__(self, clamp_at_zero: bool = False):
        self.clamp_at_zero = clamp_at_zero
        self.state: LucbState | None = None

    def reset(self, n: int, seed=None):
        self.state = LucbState()
        return None

    def step(self, snapshot: CiSnapshot, empirical_means) -> SamplerStep:
        return lucb_step(self.state, snapshot, empirical_means)


class UniformSampler:
    name = "uniform"
    intersecting = False

    def __init__(self, clamp_at_zero: bool = False):
        self.clamp_at_zero = clamp_at_zero
        self.n = 0

    def reset(self, n: int, seed=None):
        self.n = n
        return None

    def step(self, snapshot: CiSnapshot, empirical_means) -> SamplerStep:
        return uniform_step(self.n, snapshot, empirical_means)


class SubsampledLucbSampler:
    """LUCB with the threshold built from a subset of arms.

    Either pass ``omega`` explicitly or let ``reset`` draw it with
    :func:`select_subset` from ``(epsilon, lam, floor_size)``.
    """

    name = "lucb-subsampled"
    intersecting = False

    def __init__(self, omega=None, epsilon: float = 0.0, lam: float = 2, floor_size: int = 15,
                 clamp_at_zero: bool = False):
        self.fixed_omega = None if omega is None else np.asarray(sorted(omega), dtype=int)
        self.epsilon = epsilon
        self.lam = lam
        self.floor_size = floor_size
        self.clamp_at_zero = clamp_at_zero
        self.omega: np.ndarray | None = None
        self.state: LucbState | None = None

    def reset(self, n: int, seed=None):
        if self.fixed_omega is not None:
            if self.fixed_omega.size == 0 or self.fixed_omega.max() >= n:
                raise ValueError("omega must be a non-empty subset of the arms")
            self.omega = self.fixed_omega
        else:
            if subset_size(n, self.epsilon, self.lam, self.floor_size) >= n:
                self.omega = np.arange(n)
            else:
                self.omega = select_subset(n, self.epsilon, self.lam, self.floor_size, seed)
        self.state = LucbState()
        return self.omega

    def step(self, snapshot: CiSnapshot, empirical_means) -> SamplerStep:
        return subsampled_lucb_step(self.state, snapshot, self.omega, empirical_means)


SAMPLERS = {
    "elim": ElimSampler,
    "lucb": LucbSampler,
    "uniform": UniformSampler,
    "lucb-subsampled": SubsampledLucbSampler,
}


def make_sampler(name: str, **kwargs):
    try:
        cls = SAMPLERS[name]
    except KeyError:
        raise ValueError(f"unknown algorithm {name!r}; choose from {sorted(SAMPLERS)}") from None
    return cls(**kwargs)
