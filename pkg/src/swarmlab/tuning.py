"""Parameter tuning (offline grid study) and control (online redraw).

The grid study runs the full Cartesian grid of parameter values against
every seed and aggregates with the median (robust to the heavy-tailed
outcomes of the Levy-driven algorithms); dispersion is the
interquartile range. Parameter control redraws flagged parameters
uniformly within their declared range each iteration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .algorithms import PARAM_TYPES, default_params
from .benchmarks import BenchmarkFunction
from .errors import ContractError, InvalidArgumentError
from .rng import RngStream

__all__ = ["ParamRange", "TuningReport", "grid_parametric_study",
           "stochastic_parameter_control"]


@dataclass(frozen=True)
class ParamRange:
    """One tunable/controllable parameter with its allowed interval."""

    name: str
    lo: float
    hi: float
    mode: str = "fixed-grid"

    def __post_init__(self):
        if self.lo > self.hi:
            raise InvalidArgumentError(
                f"range for {self.name!r} inverted: lo={self.lo} > hi={self.hi}")
        if self.mode not in ("fixed-grid", "stochastic-control"):
            raise InvalidArgumentError(
                f"mode must be 'fixed-grid' or 'stochastic-control', got {self.mode!r}")


@dataclass
class TuningReport:
    """Grid-study outcome: one row per grid point plus the winner."""

    algorithm: str
    param_names: list
    grid_points: list  # (values tuple, median best fitness, IQR)
    winner: tuple
    runs_executed: int


def stochastic_parameter_control(prange: ParamRange, rng: RngStream) -> float:
    """One uniform redraw of a controlled parameter within its range."""
    if prange.mode != "stochastic-control":
        raise ContractError(
            f"parameter {prange.name!r} is not flagged for stochastic control")
    return float(rng.uniform(prange.lo, prange.hi))


def grid_parametric_study(algorithm: str, ranges: Sequence[ParamRange],
                          points_per_range: int, problem: BenchmarkFunction,
                          seeds: Sequence[int], population: int = 30,
                          iterations: int = 100) -> TuningReport:
    """Exhaustive parametric study over the Cartesian parameter grid.

    Every (grid point, seed) cell is one full optimization run; the
    winner is the grid point with the lowest median final best fitness,
    ties broken by lower IQR, then by grid order.
    """
    from .runner import RunConfig, run_optimization

    if not ranges:
        raise InvalidArgumentError("at least one parameter range is required")
    if points_per_range < 1:
        raise InvalidArgumentError(
            f"points_per_range must be >= 1, got {points_per_range}")
    if not seeds:
        raise InvalidArgumentError("at least one seed is required")
    valid_fields = {f for f in PARAM_TYPES[algorithm].__dataclass_fields__}
    for r in ranges:
        if r.name not in valid_fields:
            raise InvalidArgumentError(
                f"{algorithm} has no parameter {r.name!r}; "
                f"valid: {', '.join(sorted(valid_fields))}")

    axes = [np.linspace(r.lo, r.hi, points_per_range) for r in ranges]
    names = [r.name for r in ranges]
    base = default_params(algorithm, problem.bounds)
    rows = []
    runs = 0
    for values in itertools.product(*axes):
        params = replace(base, **dict(zip(names, (float(v) for v in values))))
        finals = []
        for seed in seeds:
            config = RunConfig(algorithm=algorithm, space=problem.bounds,
                               population=population, iterations=iterations,
                               seed=int(seed), params=params)
            trace = run_optimization(config, problem)
            finals.append(trace.best_fitness[-1])
            runs += 1
        med = float(np.median(finals))
        q75, q25 = np.percentile(finals, [75.0, 25.0])
        rows.append((tuple(float(v) for v in values), med, float(q75 - q25)))

    winner = min(rows, key=lambda row: (row[1], row[2]))
    return TuningReport(algorithm, names, rows, winner, runs)
