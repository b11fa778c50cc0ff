"""Seeded random stream used by every stochastic component.

A run draws all randomness from one :class:`RngStream`; the per-iteration
draw order of each algorithm is documented in :mod:`swarmlab.algorithms`,
which together with the seed makes runs exactly reproducible.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidArgumentError

__all__ = ["RngStream"]


class RngStream:
    """Deterministic random number stream backed by PCG64.

    Parameters
    ----------
    seed : int
        64-bit unsigned seed. The same seed always yields the same
        sample sequence.
    """

    def __init__(self, seed: int):
        seed = int(seed)
        if seed < 0 or seed >= 2**64:
            raise InvalidArgumentError(f"seed must be in [0, 2**64), got {seed}")
        self.seed = seed
        self._gen = np.random.Generator(np.random.PCG64(seed))

    def uniform(self, lo: float, hi: float, size=None) -> np.ndarray:
        """Uniform draws on [lo, hi]; one value consumed per element."""
        if lo > hi:
            raise InvalidArgumentError(f"uniform bounds inverted: lo={lo} > hi={hi}")
        return self._gen.uniform(lo, hi, size=size)

    def normal(self, mean: float, sigma: float, size=None) -> np.ndarray:
        """Gaussian draws N(mean, sigma^2); one value consumed per element."""
        if sigma < 0:
            raise InvalidArgumentError(f"sigma must be >= 0, got {sigma}")
        if sigma == 0:
            return np.full(size, float(mean)) if size is not None else float(mean)
        return self._gen.normal(mean, sigma, size=size)

    def permutation(self, n: int) -> np.ndarray:
        """Random permutation of range(n)."""
        return self._gen.permutation(n)

    def spawn(self, key: int) -> "RngStream":
        """Independent child stream, deterministic in (seed, key)."""
        return RngStream((self.seed * 0x9E3779B97F4A7C15 + key + 1) % 2**64)
