"""Command-line harness: thresholds, bounds, single runs and the benchmark experiments.

Every experiment is split into independent *cells* (one per table row group),
each seeded from ``(seed, cell index)`` so that ``--verify`` can recompute any
cell in isolation and compare it with what was written.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import logging
import math
import os
import sys
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

import numpy as np

from .algorithms import SAMPLERS, make_sampler, select_subset
from .complexity import (
    check_instance_class,
    gap_profile,
    lower_bound,
    subsample_upper_bound,
    upper_bound,
)
from .instance import (
    NORMAL_MAD_SCALE,
    BanditInstance,
    GeneratorConfig,
    RewardModel,
    generate_contaminated,
    ladder_instance,
    nonrobust_threshold,
    robust_threshold,
    true_outlier_set,
)
from .simulation import (
    ReplicationPlan,
    anytime_error,
    default_round_cap,
    replicate,
    run,
)

log = logging.getLogger("roai")

KINDS = ("stopping-time", "robustness", "anytime", "bounds", "single-run")
TRUE_THRESHOLD = 0.3 + 3 * 0.075


class ConfigError(ValueError):
    pass


@dataclass
class ExperimentConfig:
    """Experiment manifest. Every field has a default; unknown keys are rejected.

    ``k=None`` resolves per experiment: 2 for ladder instances, 3 for generated
    and file-based ones.
    """

    kind: str = "single-run"
    instance: str = "ladder"  # ladder | generator | file | list
    means: list[float] = field(default_factory=list)
    means_file: str = ""
    algorithms: list[str] = field(default_factory=lambda: ["lucb", "elim", "uniform"])
    delta: float = 0.1
    k: float | None = None
    mad_scale: float = NORMAL_MAD_SCALE
    runs: int = 100
    seed: int = 0
    out: str = "results.csv"
    reward: str = "gaussian"
    sigma: float = 0.5
    # ladder
    n_normal: int = 15
    ladder_lo: float = 0.0
    ladder_hi: float = 2.0
    delta_star: float = 0.2
    outlier_gap: float = 0.2
    delta_stars: list[float] = field(default_factory=lambda: [0.6, 0.5, 0.4, 0.3, 0.2])
    # generator
    n: int = 105
    epsilon: float = 5 / 105
    normal_mean: float = 0.3
    normal_sd: float = 0.075
    outlier_low: float = 0.8
    outlier_high: float = 1.0
    epsilons: list[float] = field(default_factory=lambda: [0.0, 0.05, 0.1, 0.15, 0.2])
    filter_instances: bool = True
    # subsampling
    lambdas: list[float] = field(default_factory=lambda: [2, 3])
    floor_size: int = 15
    omega: list[int] = field(default_factory=list)
    # bounds / run control
    C: float = 10.0
    rho: float = 0.0
    round_cap: int = 0
    pull_budget: int = 50_000
    grid_points: int = 40

    def resolved_k(self) -> float:
        if self.k is not None:
            return float(self.k)
        return 2.0 if self.instance == "ladder" else 3.0

    def validate(self) -> "ExperimentConfig":
        if self.kind not in KINDS:
            raise ConfigError(f"unknown experiment kind {self.kind!r}")
        if self.instance not in ("ladder", "generator", "file", "list"):
            raise ConfigError(f"unknown instance source {self.instance!r}")
        for a in self.algorithms:
            if a not in SAMPLERS:
                raise ConfigError(f"unknown algorithm {a!r}")
        if not 0 < self.delta < 1:
            raise ConfigError("delta must lie in (0, 1)")
        if self.runs < 1:
            raise ConfigError("runs must be at least 1")
        if self.reward not in ("gaussian", "bernoulli"):
            raise ConfigError(f"unknown reward model {self.reward!r}")
        return self

    def to_dict(self) -> dict[str, Any]:
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ExperimentConfig":
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
        return cls(**data).validate()


def parse_config_text(text: str) -> dict[str, Any]:
    """JSON object, or ``key = value`` lines with JSON-style values and ``#`` comments."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return json.loads(stripped)
    data: dict[str, Any] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, value = (p.strip() for p in line.split("=", 1))
        try:
            data[key] = json.loads(value)
        except json.JSONDecodeError:
            data[key] = value
    return data


def dump_config(config: ExperimentConfig) -> str:
    return json.dumps(config.to_dict(), indent=2, sort_keys=True)


# -- I/O ---------------------------------------------------------------------


def ingest_means(path, sigma: float = 0.5, k: float = 3.0, mad_scale: float = NORMAL_MAD_SCALE,
                 reward_model: RewardModel = RewardModel.BERNOULLI) -> BanditInstance:
    """Read one mean per line (``#`` lines ignored) into an instance, Bernoulli by default."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValueError(f"cannot read means file {path}: {exc}") from exc
    values = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            values.append(float(s))
        except ValueError:
            raise ValueError(f"{path}:{lineno}: not a number: {s!r}") from None
    if not values:
        raise ValueError(f"{path}: no means found")
    if reward_model is RewardModel.BERNOULLI:
        for i, v in enumerate(values):
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{path}: mean {v} outside [0, 1] for Bernoulli rewards")
    return BanditInstance(tuple(values), reward_model, sigma, k, mad_scale)


def _format(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    if isinstance(value, (np.integer,)):
        return str(int(value))
    return str(value)


def _atomic_write(path, text: str) -> None:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except OSError as exc:
        raise OSError(f"failed to write {path}: {exc}") from exc


def rows_to_csv(rows: list[dict[str, Any]], columns: list[str] | None = None) -> str:
    if columns is None:
        columns = sorted(rows[0]) if rows else []
    for r in rows:
        if sorted(r) != sorted(columns):
            raise ValueError("rows do not share one column set")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in rows:
        writer.writerow([_format(r[c]) for c in columns])
    return buf.getvalue()


def emit_csv(rows: list[dict[str, Any]], path, columns: list[str] | None = None) -> None:
    """Write rows with alphabetically ordered columns (header only when empty)."""
    _atomic_write(path, rows_to_csv(rows, sorted(columns) if columns else None))


# -- instances ---------------------------------------------------------------


def build_instance(config: ExperimentConfig, delta_star: float | None = None) -> BanditInstance:
    k = config.resolved_k()
    model = RewardModel(config.reward)
    if config.instance == "ladder":
        inst = ladder_instance(
            config.n_normal,
            (config.ladder_lo, config.ladder_hi),
            config.delta_star if delta_star is None else delta_star,
            config.outlier_gap,
            k,
            config.mad_scale,
            config.sigma,
        )
        return dataclasses.replace(inst, reward_model=model) if model is not inst.reward_model else inst
    if config.instance == "file":
        return ingest_means(config.means_file, config.sigma, k, config.mad_scale, model)
    if config.instance == "list":
        return BanditInstance(tuple(config.means), model, config.sigma, k, config.mad_scale)
    raise ConfigError("a concrete instance is required; got a generator source")


def generator_config(config: ExperimentConfig, epsilon: float | None = None) -> GeneratorConfig:
    return GeneratorConfig(
        n=config.n,
        contamination_fraction=config.epsilon if epsilon is None else epsilon,
        normal_mean=config.normal_mean,
        normal_sd=config.normal_sd,
        outlier_low=config.outlier_low,
        outlier_high=config.outlier_high,
        reward_model=RewardModel(config.reward),
        sigma=config.sigma,
        k=config.resolved_k(),
        mad_scale=config.mad_scale,
    )


def matches_ground_truth(inst: BanditInstance) -> bool:
    """Both thresholds flag exactly the contaminated arms."""
    robust = inst.outliers()
    plain = true_outlier_set(inst.means, nonrobust_threshold(inst.means, inst.k))
    return not robust.degenerate and robust.indices == inst.contaminated == plain.indices


def _cell_seed(seed: int, index: int) -> int:
    return int(np.random.SeedSequence([seed, index]).generate_state(1)[0])


# -- experiments -------------------------------------------------------------


@dataclass
class Experiment:
    columns: list[str]
    cells: Callable[[ExperimentConfig], list[Any]]
    compute: Callable[[ExperimentConfig, int, Any], tuple[list[dict], dict]]


def _stopping_cells(config):
    return [(a, d) for d in config.delta_stars for a in config.algorithms]


def _stopping_compute(config, index, cell):
    algorithm, delta_star = cell
    inst = build_instance(config, delta_star)
    profile = gap_profile(inst.means, inst.k_eff)
    ub = upper_bound(profile, inst.n, inst.k, config.delta, config.C)
    cap = config.round_cap or default_round_cap(inst, config.delta, config.C)
    summary = replicate(
        ReplicationPlan(
            lambda: make_sampler(algorithm),
            config.delta,
            config.runs,
            _cell_seed(config.seed, index),
            instance=inst,
            round_cap=cap,
        )
    )
    pulls = [r.total_pulls for r in summary.records]
    row = {
        "algorithm": algorithm,
        "delta_star": delta_star,
        "mean_pulls": summary.mean_pulls,
        "median_pulls": summary.median_pulls,
        "stderr_pulls": summary.stderr_pulls,
        "max_pulls": max(pulls),
        "mean_rounds": float(np.mean([r.total_rounds for r in summary.records])),
        "error_rate": summary.error_rate,
        "hit_cap": sum(r.hit_cap for r in summary.records),
        "upper_bound": ub,
        "lower_bound": lower_bound(profile, config.delta) if config.delta <= 0.15 else math.nan,
        "runs": config.runs,
        "theta": profile.theta,
    }
    return [row], {}


def _robustness_cells(config):
    return list(config.epsilons)


def _subset_threshold(means, epsilon, lam, floor_size, k_eff, seed) -> float:
    n = len(means)
    size = max(math.floor(lam * math.floor(n * epsilon + 1e-9)) + 1, floor_size)
    if size >= n:
        return robust_threshold(means, k_eff)
    omega = select_subset(n, epsilon, lam, floor_size, seed)
    return robust_threshold(np.asarray(means)[omega], k_eff)


def _robustness_compute(config, index, epsilon):
    gen = generator_config(config, epsilon)
    k = config.resolved_k()
    k_eff = k * config.mad_scale
    seeds = np.random.SeedSequence(_cell_seed(config.seed, index)).spawn(config.runs)
    robust, plain = [], []
    subs: dict[float, list[float]] = {lam: [] for lam in config.lambdas}
    for ss in seeds:
        draw_ss, subset_ss = ss.spawn(2)
        means = generate_contaminated(gen, draw_ss).means
        robust.append(abs(robust_threshold(means, k_eff) - TRUE_THRESHOLD))
        plain.append(abs(nonrobust_threshold(means, k) - TRUE_THRESHOLD))
        for lam in config.lambdas:
            t = _subset_threshold(means, epsilon, lam, config.floor_size, k_eff, subset_ss)
            subs[lam].append(abs(t - TRUE_THRESHOLD))

    def se(x):
        return float(np.std(x, ddof=1) / math.sqrt(len(x))) if len(x) > 1 else 0.0

    row = {
        "epsilon": epsilon,
        "robust_deviation": float(np.mean(robust)),
        "robust_deviation_se": se(robust),
        "nonrobust_deviation": float(np.mean(plain)),
        "nonrobust_deviation_se": se(plain),
        "draws": config.runs,
    }
    for lam in config.lambdas:
        row[f"subsample_lambda{lam:g}_deviation"] = float(np.mean(subs[lam]))
    return [row], {}


def _robustness_columns(config):
    base = ["draws", "epsilon", "nonrobust_deviation", "nonrobust_deviation_se",
            "robust_deviation", "robust_deviation_se"]
    return base + [f"subsample_lambda{lam:g}_deviation" for lam in config.lambdas]


def pull_grid(budget: int, n: int, points: int) -> np.ndarray:
    return np.unique(np.geomspace(n, budget, points).astype(int))


def _anytime_plan(config, algorithm, index) -> ReplicationPlan:
    common = dict(
        sampler=lambda: make_sampler(algorithm),
        delta=config.delta,
        runs=config.runs,
        master_seed=_cell_seed(config.seed, 0),
        round_cap=config.round_cap or 10**9,
        pull_cap=config.pull_budget,
        trace=True,
    )
    if config.instance == "generator":
        accept = matches_ground_truth if config.filter_instances else None
        return ReplicationPlan(generator=generator_config(config), accept=accept, **common)
    return ReplicationPlan(instance=build_instance(config), **common)


def _anytime_cells(config):
    return list(config.algorithms)


def _anytime_compute(config, index, algorithm):
    # every algorithm sees the same instance draws and reward seeds
    summary = replicate(_anytime_plan(config, algorithm, index))
    n = summary.instances[0].n
    grid = pull_grid(config.pull_budget, n, config.grid_points)
    curve = anytime_error(summary.records, grid)
    rows = [
        {
            "algorithm": algorithm,
            "pulls": int(g),
            "error": float(e),
            "stderr": float(math.sqrt(e * (1 - e) / len(summary.records))),
        }
        for g, e in zip(grid, curve)
    ]
    gaps = [float(np.min(np.abs(np.asarray(i.means) - i.threshold))) for i in summary.instances]
    extra = {
        f"{algorithm}_mean_min_gap": float(np.mean(gaps)),
        f"{algorithm}_final_error_rate": summary.error_rate,
    }
    return rows, extra


def _bounds_cells(config):
    return [None]


def _bounds_compute(config, index, _cell):
    inst = build_instance(config)
    k = inst.k
    profile = gap_profile(inst.means, inst.k_eff)
    rows = [
        {
            "arm": i,
            "mean": inst.means[i],
            "theta_gap": profile.theta_gaps[i],
            "median_gap": profile.median_gaps[i],
            "mad_gap": profile.mad_gaps[i],
            "star_gap": profile.star_gaps[i],
        }
        for i in range(inst.n)
    ]
    extra: dict[str, Any] = {
        "theta": profile.theta,
        "median": profile.median,
        "mad": profile.mad,
        "min_theta_gap": profile.min_theta_gap,
        "degenerate": profile.degenerate,
        "outliers": sorted(inst.outliers().indices),
    }
    if not profile.degenerate:
        extra["upper_bound"] = upper_bound(profile, inst.n, k, config.delta, config.C)
        extra["lower_bound"] = lower_bound(profile, config.delta)
        omega = config.omega or select_subset(
            inst.n, config.epsilon, max(config.lambdas), min(config.floor_size, inst.n),
            _cell_seed(config.seed, 0)
        ).tolist()
        try:
            extra["subsample_upper_bound"] = subsample_upper_bound(
                inst.means, omega, k, config.delta, config.C, inst.mad_scale
            )
        except ValueError as exc:
            extra["subsample_upper_bound"] = str(exc)
        extra["omega"] = [int(i) for i in omega]
    report = check_instance_class(inst.means, k, config.rho, inst.mad_scale)
    extra["instance_class"] = dataclasses.asdict(report)
    return rows, extra


def _single_cells(config):
    return [config.algorithms[0]]


def _single_compute(config, index, algorithm):
    inst = build_instance(config)
    cap = config.round_cap or default_round_cap(inst, config.delta, config.C)
    rec = run(make_sampler(algorithm), inst, config.delta, cap, trace=True,
              seed=_cell_seed(config.seed, index))
    rows = [
        {"round": t + 1, "pulls": p, "correct": c}
        for t, (p, c) in enumerate(rec.anytime_trace)
    ]
    extra = {
        "algorithm": algorithm,
        "total_pulls": rec.total_pulls,
        "total_rounds": rec.total_rounds,
        "returned_set": sorted(rec.returned_set),
        "true_set": sorted(inst.outliers().indices),
        "correct": rec.correct,
        "hit_cap": rec.hit_cap,
        "coverage_violated": rec.coverage_violated,
    }
    return rows, extra


EXPERIMENTS: dict[str, Experiment] = {
    "stopping-time": Experiment(
        ["algorithm", "delta_star", "error_rate", "hit_cap", "lower_bound", "max_pulls",
         "mean_pulls", "mean_rounds", "median_pulls", "runs", "stderr_pulls", "theta",
         "upper_bound"],
        _stopping_cells,
        _stopping_compute,
    ),
    "robustness": Experiment([], _robustness_cells, _robustness_compute),
    "anytime": Experiment(["algorithm", "error", "pulls", "stderr"], _anytime_cells, _anytime_compute),
    "bounds": Experiment(
        ["arm", "mad_gap", "mean", "median_gap", "star_gap", "theta_gap"],
        _bounds_cells,
        _bounds_compute,
    ),
    "single-run": Experiment(["correct", "pulls", "round"], _single_cells, _single_compute),
}


def compute_cells(config: ExperimentConfig) -> tuple[list[list[dict]], dict]:
    exp = EXPERIMENTS[config.kind]
    per_cell, extra = [], {}
    for i, cell in enumerate(exp.cells(config)):
        log.info("%s: cell %d %s", config.kind, i, cell)
        rows, more = exp.compute(config, i, cell)
        per_cell.append(rows)
        extra.update(more)
    return per_cell, extra


def run_experiment(config: ExperimentConfig, verify: bool = False) -> dict[str, Any]:
    """Run ``config`` and write the CSV plus a JSON sidecar next to it.

    Both files are written atomically after all cells finish, so a failed run
    never clobbers earlier output. With ``verify`` one randomly chosen cell is
    recomputed from its seed and must reproduce its rows exactly.
    """
    config.validate()
    exp = EXPERIMENTS[config.kind]
    per_cell, extra = compute_cells(config)
    rows = [r for cell_rows in per_cell for r in cell_rows]
    columns = exp.columns or _robustness_columns(config)

    verified = None
    if verify and per_cell:
        cells = exp.cells(config)
        pick = int(np.random.default_rng(config.seed).integers(len(cells)))
        again, _ = exp.compute(config, pick, cells[pick])
        if rows_to_csv(again, sorted(columns)) != rows_to_csv(per_cell[pick], sorted(columns)):
            raise RuntimeError(f"verification failed for cell {pick} ({cells[pick]})")
        verified = pick

    summary = {"config": config.to_dict(), "rows": len(rows), "verified_cell": verified, **extra}
    emit_csv(rows, config.out, columns)
    _atomic_write(sidecar_path(config.out), json.dumps(summary, indent=2, sort_keys=True, default=_json_default) + "\n")
    return summary


def sidecar_path(out) -> Path:
    return Path(out).with_suffix(".json")


def _json_default(obj):
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (set, frozenset, tuple)):
        return sorted(obj)
    raise TypeError(f"not JSON serialisable: {type(obj).__name__}")


# -- argument parsing ----------------------------------------------------------


def _float_list(text: str) -> list[float]:
    return [float(x) for x in text.replace(",", " ").split()]


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", type=Path, help="JSON or key=value experiment manifest")
    p.add_argument("--seed", type=int)
    p.add_argument("--delta", type=float)
    p.add_argument("--k", type=float)
    p.add_argument("--mad-scale", type=float, dest="mad_scale")
    p.add_argument("--runs", type=int)
    p.add_argument("--out", type=str)
    p.add_argument("--verify", action="store_true", help="recompute one random cell and compare")
    p.add_argument("--means", type=_float_list, help="comma-separated arm means")
    p.add_argument("--means-file", dest="means_file", type=str)
    p.add_argument("--algorithm", "--algorithms", dest="algorithms", type=lambda s: s.split(","))
    p.add_argument("--delta-star", dest="delta_star", type=float)
    p.add_argument("--reward", choices=["gaussian", "bernoulli"])
    p.add_argument("--sigma", type=float)
    p.add_argument("--rho", type=float)
    p.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                   help="override any config field")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="roai", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("threshold", "robust and mean/std thresholds with outlier sets"),
        ("gaps", "per-arm gap profile"),
        ("bounds", "gap profile, sample-complexity bounds and instance-class check"),
        ("run", "one seeded run with a full trace"),
        ("ingest-check", "validate a means file"),
    ]:
        p = sub.add_parser(name, help=help_)
        _common(p)
        if name == "ingest-check":
            p.add_argument("path", nargs="?")
    exp = sub.add_parser("experiment", help="benchmark experiments")
    exp.add_argument("kind", choices=["stopping-time", "robustness", "anytime"])
    _common(exp)
    return parser


def config_from_args(args, kind: str) -> ExperimentConfig:
    data: dict[str, Any] = {}
    if args.config is not None:
        data.update(parse_config_text(args.config.read_text(encoding="utf-8")))
    data.setdefault("kind", kind)
    if kind != data["kind"]:
        data["kind"] = kind
    for key in ("seed", "delta", "k", "mad_scale", "runs", "out", "algorithms", "delta_star",
                "reward", "sigma", "rho"):
        value = getattr(args, key, None)
        if value is not None:
            data[key] = value
    if args.means is not None:
        data["means"] = args.means
        data.setdefault("instance", "list")
        data["instance"] = "list"
    if args.means_file is not None:
        data["means_file"] = args.means_file
        data["instance"] = "file"
        data.setdefault("reward", "bernoulli")
    for item in args.set:
        key, _, value = item.partition("=")
        data.update(parse_config_text(f"{key}={value}"))
    return ExperimentConfig.from_dict(data)


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True, default=_json_default))


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        if args.command == "ingest-check":
            path = args.path or args.means_file
            if not path:
                raise ConfigError("ingest-check needs a path")
            inst = ingest_means(path)
            out = inst.outliers()
            _print_json({"arms": inst.n, "threshold": inst.threshold,
                         "outliers": sorted(out.indices), "degenerate": out.degenerate})
            return 0
        if args.command == "threshold":
            config = config_from_args(args, "bounds")
            inst = build_instance(config)
            robust = inst.outliers()
            plain_t = nonrobust_threshold(inst.means, inst.k)
            _print_json({
                "robust_threshold": inst.threshold,
                "robust_outliers": sorted(robust.indices),
                "degenerate": robust.degenerate,
                "nonrobust_threshold": plain_t,
                "nonrobust_outliers": sorted(true_outlier_set(inst.means, plain_t).indices),
            })
            return 0
        if args.command == "gaps":
            config = config_from_args(args, "bounds")
            rows, extra = _bounds_compute(config, 0, None)
            sys.stdout.write(rows_to_csv(rows, sorted(EXPERIMENTS["bounds"].columns)))
            return 0
        kind = {"bounds": "bounds", "run": "single-run"}.get(args.command, getattr(args, "kind", None))
        config = config_from_args(args, kind)
        summary = run_experiment(config, verify=args.verify)
        _print_json({k: v for k, v in summary.items() if k != "config"})
        return 0
    except (ConfigError, ValueError, OSError, RuntimeError) as exc:
        print(f"roai: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
