"""Shared test helpers."""

import numpy as np
import pytest

from swarmlab import Population, SearchSpace


class FakeRng:
    """Stand-in stream returning scripted constant draws.

    ``uniform`` returns ``lo + u * (hi - lo)`` elementwise, ``normal``
    returns ``mean + sigma * z``, and ``permutation`` returns the
    identity unless one is supplied. Lets tests force specific branches
    of the update equations.
    """

    def __init__(self, u=0.5, z=0.0, perm=None):
        self.u = u
        self.z = z
        self.perm = perm

    def uniform(self, lo, hi, size=None):
        value = lo + self.u * (hi - lo)
        if size is None:
            return value
        return np.full(size, value, dtype=float)

    def normal(self, mean, sigma, size=None):
        value = mean + sigma * self.z
        if size is None:
            return value
        return np.full(size, value, dtype=float)

    def permutation(self, n):
        if self.perm is not None:
            return np.asarray(self.perm, dtype=np.int64)
        return np.arange(n, dtype=np.int64)


def make_population(positions, space=None, velocities=False, fitness=None):
    """Population from explicit positions, optionally pre-evaluated."""
    positions = np.asarray(positions, dtype=float)
    n, d = positions.shape
    if space is None:
        space = SearchSpace.cube(d, -100.0, 100.0)
    vel = np.zeros((n, d)) if velocities else None
    pop = Population(space, positions.copy(), vel)
    if fitness is not None:
        pop.fitness = np.asarray(fitness, dtype=float)
        pop.pbest_positions = pop.positions.copy()
        pop.pbest_fitness = pop.fitness.copy()
        i = int(np.argmin(pop.fitness))
        pop.best_position = pop.positions[i].copy()
        pop.best_fitness = float(pop.fitness[i])
    return pop


@pytest.fixture
def square():
    return SearchSpace.cube(2, -5.0, 5.0)
