"""Seeded Monte-Carlo runs of any sampler, replication and anytime error curves."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .algorithms import recommend, recommend_mask
from .confidence import beta_width, build_snapshot, intersect_arrays
from .instance import (
    BanditInstance,
    GeneratorConfig,
    RewardModel,
    generate_contaminated,
    mad_of,
    median_of,
)


def pull(instance: BanditInstance, arm: int, rng: np.random.Generator) -> float:
    """One reward from ``arm``."""
    if not 0 <= arm < instance.n:
        raise IndexError(f"arm {arm} out of range for {instance.n} arms")
    return float(pull_many(instance, np.array([arm]), rng)[0])


def pull_many(instance: BanditInstance, arms: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    means = np.asarray(instance.means)[arms]
    if instance.reward_model is RewardModel.BERNOULLI:
        return (rng.random(means.size) < means).astype(float)
    return means + instance.sigma * rng.standard_normal(means.size)


@dataclass(eq=False)
class RunRecord:
    algorithm: str
    seed: object
    total_pulls: int
    total_rounds: int
    returned_set: frozenset[int]
    correct: bool
    coverage_violated: bool
    hit_cap: bool
    degenerate: bool = False
    anytime_trace: list[tuple[int, bool]] | None = None
    arm_failure_rounds: int = 0
    derived_failures_without_arm_failure: int = 0
    snapshots: list | None = field(default=None, repr=False)
    steps: list | None = field(default=None, repr=False)

    def key(self) -> tuple:
        """Everything that determinism guarantees, for equality checks."""
        trace = None if self.anytime_trace is None else tuple(self.anytime_trace)
        return (
            self.algorithm,
            self.total_pulls,
            self.total_rounds,
            self.returned_set,
            self.correct,
            self.coverage_violated,
            self.hit_cap,
            self.degenerate,
            trace,
        )


def _seed_sequence(seed) -> np.random.SeedSequence:
    if isinstance(seed, np.random.SeedSequence):
        return seed
    return np.random.SeedSequence(seed)


def run(
    sampler,
    instance: BanditInstance,
    delta: float,
    round_cap: int,
    trace: bool = False,
    seed=0,
    *,
    pull_cap: int | None = None,
    check_coverage: bool = False,
    record_snapshots: bool = False,
    record_steps: bool = False,
) -> RunRecord:
    """Simulate one run until the sampler stops or a cap is reached.

    Round 1 pulls every arm once; each later round pulls the sampler's
    selection. ``round_cap`` bounds the number of rounds and ``pull_cap``
    (optional) the number of pulls; hitting either sets ``hit_cap`` and the
    final recommendation is scored as usual.

    With ``check_coverage`` the run also counts rounds where some true mean
    escapes its arm interval and rounds where a derived interval (median, AD,
    MAD, threshold) misses its true value although every arm interval covers.
    """
    if round_cap < 1:
        raise ValueError("round_cap must be at least 1")
    n = instance.n
    reward_ss, sampler_ss = _seed_sequence(seed).spawn(2)
    rng = np.random.default_rng(reward_ss)
    basis = sampler.reset(n, sampler_ss)
    basis_idx = np.arange(n) if basis is None else np.asarray(basis)

    y = np.asarray(instance.means, dtype=float)
    k_eff = instance.k_eff
    true_med = median_of(y[basis_idx])
    true_ad = np.abs(y - true_med)
    true_mad = mad_of(y[basis_idx])
    true_theta = true_med + k_eff * true_mad
    truth_mask = y > true_theta
    degenerate = bool(np.any(y == true_theta))

    pulls = np.zeros(n, dtype=np.int64)
    sums = np.zeros(n)
    prev_lo = np.full(n, -np.inf)
    prev_hi = np.full(n, np.inf)
    to_pull = np.arange(n)
    total = 0
    violated = False
    arm_failures = 0
    derived_only = 0
    trace_rows: list[tuple[int, bool]] | None = [] if trace else None
    snapshots = [] if record_snapshots else None
    steps = [] if record_steps else None
    stopped = False
    rounds = 0
    snap = None
    emp = None

    while rounds < round_cap:
        rounds += 1
        sums[to_pull] += pull_many(instance, to_pull, rng)
        pulls[to_pull] += 1
        total += to_pull.size

        emp = sums / pulls
        width = beta_width(pulls, n, delta)
        lo, hi = emp - width, emp + width
        if sampler.intersecting:
            lo, hi, bad = intersect_arrays(prev_lo, prev_hi, lo, hi)
            prev_lo, prev_hi = lo, hi
            violated |= bool(bad.any())
        arm_fail = bool(np.any((y < lo) | (y > hi)))
        violated |= arm_fail

        snap = build_snapshot(lo, hi, k_eff, sampler.clamp_at_zero, basis, violated)
        if check_coverage:
            if arm_fail:
                arm_failures += 1
            elif not (
                snap.median_lo <= true_med <= snap.median_hi
                and snap.mad_lo <= true_mad <= snap.mad_hi
                and snap.theta_lo <= true_theta <= snap.theta_hi
                and np.all((snap.ad_lo <= true_ad) & (true_ad <= snap.ad_hi))
            ):
                derived_only += 1
        if snapshots is not None:
            snapshots.append(snap)

        step = sampler.step(snap, emp)
        if steps is not None:
            steps.append(step)
        if trace_rows is not None:
            trace_rows.append((total, bool(np.array_equal(recommend_mask(snap, emp), truth_mask))))
        if step.stopped:
            stopped = True
            break
        if pull_cap is not None and total >= pull_cap:
            break
        to_pull = step.arms_to_pull

    returned = recommend(snap, emp)
    truth = frozenset(int(i) for i in np.flatnonzero(truth_mask))
    return RunRecord(
        algorithm=sampler.name,
        seed=seed,
        total_pulls=total,
        total_rounds=rounds,
        returned_set=returned,
        correct=returned == truth,
        coverage_violated=violated,
        hit_cap=not stopped,
        degenerate=degenerate,
        anytime_trace=trace_rows,
        arm_failure_rounds=arm_failures,
        derived_failures_without_arm_failure=derived_only,
        snapshots=snapshots,
        steps=steps,
    )


def default_round_cap(instance: BanditInstance, delta: float, C: float = 10.0) -> int:
    """Ten times the sample-complexity bound, expressed in rounds of ``n`` pulls."""
    from .complexity import gap_profile, upper_bound

    profile = gap_profile(instance.means, instance.k_eff)
    if profile.degenerate or np.any(profile.star_gaps <= 0):
        return 10**6
    bound = upper_bound(profile, instance.n, instance.k, delta, C)
    return max(1, int(np.ceil(10 * bound / instance.n)))


@dataclass
class ReplicationPlan:
    """What to replicate.

    ``sampler`` is a zero-argument factory returning a fresh sampler. Exactly
    one of ``instance`` and ``generator`` is set; generator plans draw a fresh
    instance per run, optionally redrawing until ``accept(instance)`` holds.
    """

    sampler: Callable[[], object]
    delta: float
    runs: int
    master_seed: int = 0
    instance: BanditInstance | None = None
    generator: GeneratorConfig | None = None
    round_cap: int | None = None
    pull_cap: int | None = None
    trace: bool = False
    accept: Callable[[BanditInstance], bool] | None = None
    max_redraws: int = 1000


@dataclass(eq=False)
class ReplicationSummary:
    records: list[RunRecord]
    instances: list[BanditInstance]
    error_rate: float
    mean_pulls: float
    median_pulls: float
    n_degenerate: int
    stderr_pulls: float


def run_seeds(master_seed: int, runs: int) -> list[np.random.SeedSequence]:
    """Per-run seed streams; run ``i`` always gets the same stream."""
    return np.random.SeedSequence(master_seed).spawn(runs)


def _draw_instance(plan: ReplicationPlan, ss: np.random.SeedSequence) -> BanditInstance:
    for child in ss.spawn(plan.max_redraws):
        inst = generate_contaminated(plan.generator, child)
        if plan.accept is None or plan.accept(inst):
            return inst
    raise RuntimeError("no generated instance passed the acceptance filter")


def run_one(plan: ReplicationPlan, index: int) -> tuple[BanditInstance, RunRecord]:
    """Run number ``index`` of ``plan`` in isolation (same result as inside :func:`replicate`)."""
    ss = run_seeds(plan.master_seed, index + 1)[index]
    instance_ss, reward_ss = ss.spawn(2)
    if (plan.instance is None) == (plan.generator is None):
        raise ValueError("set exactly one of instance and generator")
    inst = plan.instance if plan.instance is not None else _draw_instance(plan, instance_ss)
    cap = plan.round_cap if plan.round_cap is not None else default_round_cap(inst, plan.delta)
    rec = run(plan.sampler(), inst, plan.delta, cap, plan.trace, reward_ss, pull_cap=plan.pull_cap)
    return inst, rec


def replicate(plan: ReplicationPlan) -> ReplicationSummary:
    if plan.runs < 1:
        raise ValueError("runs must be at least 1")
    instances, records = [], []
    for i in range(plan.runs):
        inst, rec = run_one(plan, i)
        instances.append(inst)
        records.append(rec)
    return summarize(records, instances)


def summarize(records: Sequence[RunRecord], instances: Sequence[BanditInstance]) -> ReplicationSummary:
    scored = [r for r in records if not r.degenerate]
    pulls = np.array([r.total_pulls for r in records], dtype=float)
    error = float(np.mean([not r.correct for r in scored])) if scored else float("nan")
    stderr = float(pulls.std(ddof=1) / np.sqrt(pulls.size)) if pulls.size > 1 else 0.0
    return ReplicationSummary(
        records=list(records),
        instances=list(instances),
        error_rate=error,
        mean_pulls=float(pulls.mean()),
        median_pulls=float(np.median(pulls)),
        n_degenerate=len(records) - len(scored),
        stderr_pulls=stderr,
    )


def anytime_error(records: Sequence[RunRecord], pull_grid: Sequence[int]) -> np.ndarray:
    """Fraction of runs whose latest recommendation at each grid point is wrong.

    A run with no recommendation yet at a grid point counts as wrong; a run
    that has stopped keeps its final recommendation.
    """
    grid = np.asarray(pull_grid, dtype=float)
    if grid.size == 0:
        return np.zeros(0)
    wrong = np.zeros(grid.size)
    for rec in records:
        if rec.anytime_trace is None:
            raise ValueError("record carries no anytime trace")
        at = np.array([p for p, _ in rec.anytime_trace], dtype=float)
        ok = np.array([c for _, c in rec.anytime_trace], dtype=bool)
        pos = np.searchsorted(at, grid, side="right") - 1
        has = pos >= 0
        wrong += np.where(has, ~ok[np.maximum(pos, 0)], True)
    return wrong / len(records)
