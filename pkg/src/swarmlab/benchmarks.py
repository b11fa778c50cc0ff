"""Standard continuous test objectives.

All functions are minimized and finite on their declared boxes:

- sphere:      f(x) = sum x_k^2,                    on [-5.12, 5.12]^d, min 0 at 0
- rosenbrock:  f(x) = sum 100 (x_{k+1} - x_k^2)^2 + (1 - x_k)^2,
                                                    on [-5, 10]^d,      min 0 at 1
- rastrigin:   f(x) = 10 d + sum (x_k^2 - 10 cos 2 pi x_k),
                                                    on [-5.12, 5.12]^d, min 0 at 0
- ackley:      f(x) = -20 exp(-0.2 sqrt(mean x_k^2)) - exp(mean cos 2 pi x_k)
                       + 20 + e,                    on [-32.768, 32.768]^d, min 0 at 0
- four_peaks:  f(x) = -sum_m exp(-|x - c_m|^2 / 0.5), c_m = (+-2, +-2),
                                                    on [-5, 5]^2, four equal basins
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import SearchSpace
from .errors import ConfigError, InvalidArgumentError

__all__ = ["BenchmarkFunction", "registry_lookup", "four_peaks",
           "sphere", "rosenbrock", "rastrigin", "ackley", "BENCHMARK_NAMES"]

_FOUR_PEAKS_CENTERS = np.array([[2.0, 2.0], [2.0, -2.0], [-2.0, 2.0], [-2.0, -2.0]])


def sphere(x: np.ndarray) -> float:
    x = np.asarray(x, dtype=float)
    return float(np.dot(x, x))


def rosenbrock(x: np.ndarray) -> float:
    x = np.asarray(x, dtype=float)
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (1.0 - x[:-1]) ** 2))


def rastrigin(x: np.ndarray) -> float:
    x = np.asarray(x, dtype=float)
    return float(10.0 * x.size + np.sum(x * x - 10.0 * np.cos(2.0 * np.pi * x)))


def ackley(x: np.ndarray) -> float:
    x = np.asarray(x, dtype=float)
    d = x.size
    term1 = -20.0 * math.exp(-0.2 * math.sqrt(np.dot(x, x) / d))
    term2 = -math.exp(np.sum(np.cos(2.0 * np.pi * x)) / d)
    return float(term1 + term2 + 20.0 + math.e)


def four_peaks(x: np.ndarray) -> float:
    """Four equal Gaussian wells centered at (+-2, +-2); 2-D only."""
    x = np.asarray(x, dtype=float)
    if x.shape != (2,):
        raise InvalidArgumentError("four_peaks is defined on 2-vectors only")
    if np.any(x < -5.0) or np.any(x > 5.0):
        raise InvalidArgumentError(f"four_peaks argument {x} outside [-5, 5]^2")
    d2 = np.sum((x - _FOUR_PEAKS_CENTERS) ** 2, axis=1)
    return float(-np.sum(np.exp(-d2 / 0.5)))


@dataclass(frozen=True)
class BenchmarkFunction:
    """A named objective with its standard box and known minimum."""

    name: str
    dim: int
    bounds: SearchSpace
    known_minimum: tuple
    evaluator: Callable[[np.ndarray], float]

    def __post_init__(self):
        pos, val = self.known_minimum
        if abs(self.evaluator(np.asarray(pos, dtype=float)) - val) > 1e-12:
            raise ConfigError(
                f"benchmark {self.name}: evaluator disagrees with known minimum")

    def __call__(self, x: np.ndarray) -> float:
        return self.evaluator(x)


_REGISTRY = {
    "sphere": (sphere, -5.12, 5.12, lambda d: (np.zeros(d), 0.0)),
    "rosenbrock": (rosenbrock, -5.0, 10.0, lambda d: (np.ones(d), 0.0)),
    "rastrigin": (rastrigin, -5.12, 5.12, lambda d: (np.zeros(d), 0.0)),
    "ackley": (ackley, -32.768, 32.768, lambda d: (np.zeros(d), 0.0)),
}

BENCHMARK_NAMES = ("sphere", "rosenbrock", "rastrigin", "ackley", "four_peaks")


def registry_lookup(name: str, dim: int) -> BenchmarkFunction:
    """Resolve a benchmark by name with its standard bounds."""
    if name == "four_peaks":
        if dim != 2:
            raise ConfigError(f"four_peaks requires dim=2, got {dim}")
        pos = np.array([2.0, 2.0])
        return BenchmarkFunction("four_peaks", 2, SearchSpace.cube(2, -5.0, 5.0),
                                 (pos, four_peaks(pos)), four_peaks)
    if name not in _REGISTRY:
        raise ConfigError(
            f"unknown benchmark {name!r}; valid names: {', '.join(BENCHMARK_NAMES)}")
    if dim < 1:
        raise ConfigError(f"dim must be >= 1, got {dim}")
    fn, lo, hi, minimum = _REGISTRY[name]
    pos, val = minimum(dim)
    return BenchmarkFunction(name, dim, SearchSpace.cube(dim, lo, hi), (pos, val), fn)
