"""Search-space and population primitives shared by all algorithms.

Positions, velocities and fitness values are stored as packed numpy
arrays on :class:`Population` for speed; :meth:`Population.agents`
exposes the conventional per-agent view. Minimization is the canonical
direction throughout.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import InvalidArgumentError, InvalidSpaceError, NumericError
from .rng import RngStream

__all__ = [
    "SearchSpace",
    "Agent",
    "Population",
    "Trace",
    "initialize_population",
    "clamp_to_bounds",
    "evaluate_positions",
    "evaluate_and_update_bests",
]

Objective = Callable[[np.ndarray], float]


@dataclass(frozen=True)
class SearchSpace:
    """Box-bounded continuous domain of dimension ``dim``."""

    dim: int
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        if self.dim < 1:
            raise InvalidSpaceError(f"dim must be >= 1, got {self.dim}")
        lower = np.ascontiguousarray(self.lower, dtype=float)
        upper = np.ascontiguousarray(self.upper, dtype=float)
        if lower.shape != (self.dim,) or upper.shape != (self.dim,):
            raise InvalidSpaceError("bound vectors must have length dim")
        if not np.all(lower < upper):
            raise InvalidSpaceError("every lower bound must be strictly below its upper bound")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def cube(cls, dim: int, lo: float, hi: float) -> "SearchSpace":
        return cls(dim, np.full(dim, float(lo)), np.full(dim, float(hi)))

    @property
    def width(self) -> np.ndarray:
        return self.upper - self.lower

    @property
    def diagonal(self) -> float:
        return float(np.linalg.norm(self.width))

    def contains(self, position: np.ndarray) -> bool:
        return bool(np.all(position >= self.lower) and np.all(position <= self.upper))


@dataclass
class Agent:
    """Read view of one candidate solution."""

    position: np.ndarray
    velocity: Optional[np.ndarray]
    fitness: Optional[float]
    personal_best: Optional[tuple]


class Population:
    """Ordered agent collection plus the tracked global best.

    The global best records the minimum over *all* fitness values ever
    evaluated in the run, including candidate positions that were later
    rejected by an algorithm's acceptance rule.
    """

    def __init__(self, space: SearchSpace, positions: np.ndarray,
                 velocities: Optional[np.ndarray] = None):
        self.space = space
        self.positions = np.ascontiguousarray(positions, dtype=float)
        self.velocities = (
            None if velocities is None else np.ascontiguousarray(velocities, dtype=float)
        )
        n = self.positions.shape[0]
        self.fitness: Optional[np.ndarray] = None
        self.pbest_positions: Optional[np.ndarray] = None
        self.pbest_fitness: Optional[np.ndarray] = None
        self.best_position: Optional[np.ndarray] = None
        self.best_fitness: float = np.inf
        self.iteration = 0
        self._n = n

    @property
    def size(self) -> int:
        return self._n

    @property
    def agents(self) -> list[Agent]:
        out = []
        for i in range(self._n):
            fit = None if self.fitness is None else float(self.fitness[i])
            vel = None if self.velocities is None else self.velocities[i].copy()
            pb = None
            if self.pbest_fitness is not None:
                pb = (self.pbest_positions[i].copy(), float(self.pbest_fitness[i]))
            out.append(Agent(self.positions[i].copy(), vel, fit, pb))
        return out

    @property
    def global_best(self) -> tuple:
        return (None if self.best_position is None else self.best_position.copy(),
                self.best_fitness)

    def observe(self, positions: np.ndarray, fitness: np.ndarray) -> None:
        """Fold a batch of evaluated candidates into the global best."""
        i = int(np.argmin(fitness))
        if fitness[i] < self.best_fitness:
            self.best_fitness = float(fitness[i])
            self.best_position = np.array(positions[i], dtype=float)

    def observe_candidates(self, positions: np.ndarray, fitness: np.ndarray) -> None:
        """Fold per-agent candidate evaluations into the personal bests.

        Candidates are attributed to the agent that proposed them even
        when an acceptance rule later rejects them.
        """
        if self.pbest_fitness is None:
            return
        rows = np.nonzero(fitness < self.pbest_fitness)[0]
        self.pbest_fitness[rows] = fitness[rows]
        self.pbest_positions[rows] = positions[rows]

    def update_personal_bests(self, rows=None) -> None:
        """Refresh personal bests from current fitness (strict improvement)."""
        if self.pbest_fitness is None:
            self.pbest_positions = self.positions.copy()
            self.pbest_fitness = self.fitness.copy()
            return
        idx = range(self._n) if rows is None else rows
        for i in idx:
            if self.fitness[i] < self.pbest_fitness[i]:
                self.pbest_fitness[i] = self.fitness[i]
                self.pbest_positions[i] = self.positions[i]


@dataclass
class Trace:
    """Per-iteration run records plus optional position snapshots."""

    iterations: list = field(default_factory=list)
    best_fitness: list = field(default_factory=list)
    diversity: list = field(default_factory=list)
    evaluations: list = field(default_factory=list)
    snapshots: dict = field(default_factory=dict)

    def record(self, iteration: int, best: float, diversity: float, evals: int) -> None:
        self.iterations.append(int(iteration))
        self.best_fitness.append(float(best))
        self.diversity.append(float(diversity))
        self.evaluations.append(int(evals))

    def snapshot(self, iteration: int, positions: np.ndarray) -> None:
        self.snapshots[int(iteration)] = np.array(positions, dtype=float)

    def __len__(self) -> int:
        return len(self.iterations)


def initialize_population(space: SearchSpace, n: int, rng: RngStream,
                          velocities: bool = False) -> Population:
    """Uniform random population; velocities (when requested) start at zero."""
    if n < 1:
        raise InvalidArgumentError(f"population size must be >= 1, got {n}")
    positions = rng.uniform(0.0, 1.0, size=(n, space.dim))
    positions = space.lower + positions * (space.upper - space.lower)
    vel = np.zeros((n, space.dim)) if velocities else None
    return Population(space, positions, vel)


def clamp_to_bounds(position: np.ndarray, space: SearchSpace) -> np.ndarray:
    """Project a position onto the box; interior coordinates are unchanged."""
    position = np.asarray(position, dtype=float)
    if position.shape != (space.dim,):
        raise InvalidArgumentError(
            f"position has shape {position.shape}, expected ({space.dim},)")
    if not np.all(np.isfinite(position)):
        raise NumericError("position contains non-finite coordinates", position=position)
    return np.clip(position, space.lower, space.upper)


def evaluate_positions(positions: np.ndarray, f: Objective,
                       parallel: bool = False) -> np.ndarray:
    """Evaluate a batch of positions, merging results in index order.

    ``parallel=True`` farms the calls out to a thread pool; the merge
    order (and hence the run trace) is identical either way.
    """
    if parallel:
        with ThreadPoolExecutor() as pool:
            values = list(pool.map(f, positions))
    else:
        values = [f(p) for p in positions]
    fit = np.asarray(values, dtype=float)
    bad = ~np.isfinite(fit)
    if bad.any():
        i = int(np.argmax(bad))
        raise NumericError(
            f"objective returned non-finite value {fit[i]}", position=positions[i])
    return fit


def evaluate_and_update_bests(pop: Population, f: Objective,
                              parallel: bool = False) -> Population:
    """Evaluate every agent, then refresh personal and global bests."""
    pop.fitness = evaluate_positions(pop.positions, f, parallel=parallel)
    pop.update_personal_bests()
    pop.observe(pop.positions, pop.fitness)
    return pop
