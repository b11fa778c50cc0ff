"""Reproducible command-line front end.

Subcommands::

    swarmlab run     --config FILE [--seed N] [--out PATH] [--parallel]
    swarmlab compare --config FILE --seeds a,b,c [--out PATH]
    swarmlab tune    --config FILE [--out PATH]
    swarmlab analyze --trace FILE --bins N [--out PATH]

Configs are YAML (flat keys plus a nested ``params`` map); command-line
flags override file values. ``SWARMLAB_OUT``, when set, is the default
output directory. Every error exits nonzero with a one-line
``error: <kind>: <message>`` diagnostic on stderr.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np
import yaml

from . import io
from .algorithms import ALGORITHM_NAMES, PARAM_TYPES, default_params
from .benchmarks import BENCHMARK_NAMES, registry_lookup
from .diagnostics import empirical_transition_matrix, discretize_positions, second_eigenvalue
from .errors import ConfigError, SwarmlabError
from .runner import RunConfig, run_optimization
from .tuning import ParamRange, grid_parametric_study
from .io import space_from_meta

__all__ = ["RunSpec", "parse_config", "run_command", "compare_command",
           "tune_command", "analyze_command", "main"]

_RUN_KEYS = {"algorithm", "function", "dim", "population", "iterations",
             "seed", "params", "snapshot_every", "output", "threshold"}
_COMPARE_KEYS = {"runs", "seeds", "threshold"}
_TUNE_KEYS = {"algorithm", "function", "dim", "population", "iterations",
              "seeds", "points_per_range", "ranges"}


@dataclass(frozen=True)
class RunSpec:
    """One fully validated run request."""

    algorithm: str
    function: str
    dim: int
    population: int = 30
    iterations: int = 1000
    seed: int = 0
    params: dict = field(default_factory=dict)
    snapshot_every: int = 0
    output: str | None = None
    threshold: float = 1e-3


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ConfigError(message)


def _check_keys(data: dict, allowed: set, context: str) -> None:
    for key in data:
        _require(key in allowed,
                 f"unknown field {key!r} in {context}; "
                 f"valid fields: {', '.join(sorted(allowed))}")


def _build_spec(data: dict, context: str = "run config") -> RunSpec:
    _require(isinstance(data, dict), f"{context} must be a mapping")
    _check_keys(data, _RUN_KEYS, context)
    for name in ("algorithm", "function", "dim", "seed"):
        _require(name in data, f"missing required field {name!r} in {context}")
    _require(data["algorithm"] in ALGORITHM_NAMES,
             f"unknown algorithm {data['algorithm']!r}; "
             f"valid names: {', '.join(ALGORITHM_NAMES)}")
    _require(data["function"] in BENCHMARK_NAMES,
             f"unknown function {data['function']!r}; "
             f"valid names: {', '.join(BENCHMARK_NAMES)}")
    spec = RunSpec(
        algorithm=data["algorithm"],
        function=data["function"],
        dim=int(data["dim"]),
        population=int(data.get("population", 30)),
        iterations=int(data.get("iterations", 1000)),
        seed=int(data.get("seed", 0)),
        params=dict(data.get("params") or {}),
        snapshot_every=int(data.get("snapshot_every", 0)),
        output=data.get("output"),
        threshold=float(data.get("threshold", 1e-3)),
    )
    # Materializing the run config validates counts and parameter ranges.
    _to_run_config(spec)
    return spec


def parse_config(text: str) -> RunSpec:
    """Parse and validate a YAML run config, filling documented defaults."""
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as err:
        raise ConfigError(f"malformed YAML config: {err}") from err
    return _build_spec(data)


def _resolve_params(spec: RunSpec, space):
    base = default_params(spec.algorithm, space)
    if not spec.params:
        return base
    valid = set(PARAM_TYPES[spec.algorithm].__dataclass_fields__)
    for name in spec.params:
        _require(name in valid,
                 f"{spec.algorithm} has no parameter {name!r}; "
                 f"valid: {', '.join(sorted(valid))}")
    try:
        return replace(base, **{k: float(v) for k, v in spec.params.items()})
    except SwarmlabError as err:
        raise ConfigError(str(err)) from err


def _to_run_config(spec: RunSpec, parallel: bool = False) -> tuple:
    problem = registry_lookup(spec.function, spec.dim)
    params = _resolve_params(spec, problem.bounds)
    try:
        config = RunConfig(algorithm=spec.algorithm, space=problem.bounds,
                           population=spec.population, iterations=spec.iterations,
                           seed=spec.seed, params=params,
                           snapshot_every=spec.snapshot_every,
                           parallel_eval=parallel)
    except SwarmlabError as err:
        raise ConfigError(str(err)) from err
    return config, problem


def _default_out_dir() -> Path:
    return Path(os.environ.get("SWARMLAB_OUT", "."))


def _trace_path(spec: RunSpec, out_flag: str | None) -> Path:
    if out_flag:
        return Path(out_flag)
    if spec.output:
        return Path(spec.output)
    name = f"{spec.algorithm}_{spec.function}_d{spec.dim}_seed{spec.seed}.csv"
    return _default_out_dir() / name


def run_command(spec: RunSpec, out: str | None = None,
                parallel: bool = False) -> Path:
    """Execute one run, write trace + metadata, print a summary line."""
    config, problem = _to_run_config(spec, parallel=parallel)
    path = _trace_path(spec, out)
    if not path.parent.is_dir():
        raise ConfigError(f"output directory {path.parent} does not exist")
    start = time.perf_counter()
    trace = run_optimization(config, problem)
    elapsed = time.perf_counter() - start
    io.write_trace(trace, path)
    io.write_meta(path, {
        "algorithm": spec.algorithm, "function": spec.function,
        "dim": spec.dim, "population": spec.population,
        "iterations": spec.iterations, "seed": spec.seed,
        "snapshot_every": spec.snapshot_every,
        "lower": problem.bounds.lower.tolist(),
        "upper": problem.bounds.upper.tolist(),
    })
    print(f"{spec.algorithm} {spec.function} best={trace.best_fitness[-1]:.6g} "
          f"evaluations={trace.evaluations[-1]} wall={elapsed:.6g}s -> {path}")
    return path


def compare_command(specs: list, seeds: list, out, threshold: float = 1e-3) -> Path:
    """Run every (spec, seed) cell and emit a side-by-side table.

    Rows are sorted by median final best fitness ascending; the
    iterations-to-threshold statistic counts misses as the full budget.
    """
    _require(len(specs) >= 1, "compare needs at least one run spec")
    _require(len(seeds) >= 1, "compare needs at least one seed")
    rows = []
    for spec in specs:
        finals, hits = [], []
        for seed in seeds:
            seeded = replace(spec, seed=int(seed))
            config, problem = _to_run_config(seeded)
            try:
                trace = run_optimization(config, problem)
            except SwarmlabError as err:
                raise type(err)(
                    f"run failed for ({spec.algorithm}/{spec.function}, "
                    f"seed {seed}): {err}") from err
            finals.append(trace.best_fitness[-1])
            below = [t for t, b in zip(trace.iterations, trace.best_fitness)
                     if b <= threshold]
            hits.append(below[0] if below else spec.iterations)
        q75, q25 = np.percentile(finals, [75.0, 25.0])
        rows.append((spec.algorithm, spec.function, float(np.median(finals)),
                     float(q75 - q25), float(np.median(hits))))
    rows.sort(key=lambda r: r[2])
    out = Path(out)
    with open(out, "w") as fh:
        fh.write("algorithm,function,median_best,iqr_best,median_iters_to_threshold\n")
        for alg, fn, med, iqr, it in rows:
            fh.write(f"{alg},{fn},{med:.17g},{iqr:.17g},{it:.17g}\n")
    for alg, fn, med, iqr, it in rows:
        print(f"{alg:8s} {fn:12s} median={med:.6g} iqr={iqr:.6g} iters@thr={it:g}")
    return out


def tune_command(data: dict, out) -> Path:
    """Run a grid parametric study described by a tune config."""
    _check_keys(data, _TUNE_KEYS, "tune config")
    for name in ("algorithm", "function", "dim", "seeds", "ranges"):
        _require(name in data, f"missing required field {name!r} in tune config")
    problem = registry_lookup(data["function"], int(data["dim"]))
    ranges = []
    for entry in data["ranges"]:
        _check_keys(entry, {"name", "lo", "hi"}, "tune range")
        ranges.append(ParamRange(entry["name"], float(entry["lo"]),
                                 float(entry["hi"])))
    try:
        report = grid_parametric_study(
            data["algorithm"], ranges, int(data.get("points_per_range", 5)),
            problem, [int(s) for s in data["seeds"]],
            population=int(data.get("population", 30)),
            iterations=int(data.get("iterations", 100)))
    except SwarmlabError as err:
        raise ConfigError(str(err)) from err
    out = Path(out)
    io.write_tuning_report(report, out)
    values, med, iqr = report.winner
    pairs = ", ".join(f"{n}={v:.6g}" for n, v in zip(report.param_names, values))
    print(f"winner: {pairs} median_best={med:.6g} iqr={iqr:.6g} "
          f"({report.runs_executed} runs) -> {out}")
    return out


def analyze_command(trace_path, bins: int, out=None) -> float:
    """Build the empirical position chain from a trace and print lambda2."""
    trace = io.read_trace(trace_path)
    _require(bool(trace.snapshots),
             f"{trace_path} has no position snapshots; rerun with snapshot_every > 0")
    meta = io.read_meta(trace_path)
    space = space_from_meta(meta)
    snaps = [trace.snapshots[t] for t in sorted(trace.snapshots)]
    sequences = discretize_positions(snaps, space, bins)
    n_states = bins ** space.dim
    chain = empirical_transition_matrix(sequences, n_states)
    lam2 = second_eigenvalue(chain)
    if out is not None:
        io.write_chain_matrix(chain.transition, out)
    print(f"states={n_states} transitions={int(chain.counts.sum())} lambda2={lam2:.9g}")
    return lam2


def _load_yaml(path: str):
    try:
        with open(path) as fh:
            return yaml.safe_load(fh)
    except OSError as err:
        raise ConfigError(f"cannot read config file {path}: {err}") from err
    except yaml.YAMLError as err:
        raise ConfigError(f"malformed YAML in {path}: {err}") from err


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="swarmlab",
                                     description="swarm-intelligence optimization runs")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute one optimization run")
    p_run.add_argument("--config", required=True)
    p_run.add_argument("--seed", type=int, default=None)
    p_run.add_argument("--out", default=None)
    p_run.add_argument("--parallel", action="store_true",
                       help="evaluate agents with a thread pool")

    p_cmp = sub.add_parser("compare", help="side-by-side algorithm comparison")
    p_cmp.add_argument("--config", required=True)
    p_cmp.add_argument("--seeds", required=True,
                       help="comma-separated seed list")
    p_cmp.add_argument("--out", default=None)

    p_tune = sub.add_parser("tune", help="grid parametric study")
    p_tune.add_argument("--config", required=True)
    p_tune.add_argument("--out", default=None)

    p_an = sub.add_parser("analyze", help="Markov-chain analysis of a trace")
    p_an.add_argument("--trace", required=True)
    p_an.add_argument("--bins", type=int, required=True)
    p_an.add_argument("--out", default=None)
    return parser


def _dispatch(args) -> int:
    if args.command == "run":
        data = _load_yaml(args.config)
        spec = _build_spec(data)
        if args.seed is not None:
            spec = replace(spec, seed=args.seed)
        run_command(spec, out=args.out, parallel=args.parallel)
    elif args.command == "compare":
        data = _load_yaml(args.config)
        _require(isinstance(data, dict), "compare config must be a mapping")
        if "runs" in data:
            _check_keys(data, _COMPARE_KEYS, "compare config")
            specs = [_build_spec(entry, "compare run entry")
                     for entry in data["runs"]]
            threshold = float(data.get("threshold", 1e-3))
        else:
            spec = _build_spec(data)
            specs, threshold = [spec], spec.threshold
        seeds = [int(s) for s in args.seeds.split(",") if s]
        out = args.out or (_default_out_dir() / "compare.csv")
        compare_command(specs, seeds, out, threshold=threshold)
    elif args.command == "tune":
        data = _load_yaml(args.config)
        out = args.out or (_default_out_dir() / "tuning.csv")
        tune_command(data, out)
    elif args.command == "analyze":
        analyze_command(args.trace, args.bins, out=args.out)
    return 0


_ERROR_KINDS = {
    "ConfigError": "config-error",
    "InvalidArgumentError": "invalid-argument",
    "InvalidSpaceError": "invalid-space",
    "ContractError": "contract-error",
    "NumericError": "numeric-error",
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except SwarmlabError as err:
        kind = _ERROR_KINDS.get(type(err).__name__, "error")
        print(f"error: {kind}: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"error: io-error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
