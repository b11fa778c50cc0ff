"""End-to-end optimization runs: config -> trace.

A trace is a pure function of ``(config, objective)``: the single RNG
stream, the fixed per-algorithm draw order and index-order evaluation
merging make repeated runs bit-identical, with or without parallel
objective evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .algorithms import ALGORITHM_NAMES, default_params, make_stepper
from .core import (SearchSpace, Trace, evaluate_and_update_bests,
                   initialize_population)
from .diagnostics import diversity_variance
from .errors import ConfigError, NumericError
from .rng import RngStream

__all__ = ["RunConfig", "run_optimization"]


@dataclass(frozen=True)
class RunConfig:
    """Everything that determines a run (together with the objective)."""

    algorithm: str
    space: SearchSpace
    population: int
    iterations: int
    seed: int
    params: Optional[object] = None
    snapshot_every: int = 0
    parallel_eval: bool = False
    controlled: Sequence = field(default_factory=tuple)

    def __post_init__(self):
        if self.algorithm not in ALGORITHM_NAMES:
            raise ConfigError(
                f"unknown algorithm {self.algorithm!r}; "
                f"valid names: {', '.join(ALGORITHM_NAMES)}")
        if self.population < 1:
            raise ConfigError(f"population must be >= 1, got {self.population}")
        if self.iterations < 1:
            raise ConfigError(f"iterations must be >= 1, got {self.iterations}")
        if self.snapshot_every < 0:
            raise ConfigError(
                f"snapshot_every must be >= 0, got {self.snapshot_every}")


class _CountingObjective:
    def __init__(self, f):
        self.f = f
        self.calls = 0

    def __call__(self, x):
        self.calls += 1
        return self.f(x)


def run_optimization(config: RunConfig, f) -> Trace:
    """Initialize, iterate the chosen algorithm, and record a trace.

    Each record holds (iteration, best-so-far fitness, population
    diversity, objective evaluations used). Numeric failures are
    re-raised with the iteration index attached.
    """
    from .tuning import stochastic_parameter_control  # cycle: tuning runs grids

    rng = RngStream(config.seed)
    uses_velocity = config.algorithm in ("pso", "bat")
    stepper = make_stepper(config.algorithm, config.params, config.space)
    counted = _CountingObjective(f)

    pop = initialize_population(config.space, config.population, rng,
                                velocities=uses_velocity)
    evaluate_and_update_bests(pop, counted, parallel=config.parallel_eval)

    trace = Trace()
    for t in range(1, config.iterations + 1):
        if config.controlled:
            # Controlled parameters are redrawn first, before any
            # algorithm draws, in the declared order.
            overrides = {r.name: stochastic_parameter_control(r, rng)
                         for r in config.controlled}
            stepper.set_params(**overrides)
        try:
            stepper.step(pop, counted, rng, parallel=config.parallel_eval)
        except NumericError as err:
            err.iteration = t
            raise
        pop.iteration = t
        trace.record(t, pop.best_fitness, diversity_variance(pop), counted.calls)
        if config.snapshot_every and t % config.snapshot_every == 0:
            trace.snapshot(t, pop.positions)
    return trace
