"""Stochastic primitives: uniform/Gaussian vectors, Heaviside gate and
Levy-flight steps.

Levy steps use the Mantegna scheme: ``step = u / |v|**(1/lambda)`` with
``u ~ N(0, sigma_u^2)`` and ``v ~ N(0, 1)``, which produces a power-law
tail with exponent ``1 + lambda``. Each step consumes exactly two
Gaussian draws (u first, then v); vector/block variants draw the whole
u block before the v block.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError, NumericError
from .rng import RngStream

__all__ = [
    "LevyParams",
    "uniform_vector",
    "gaussian_vector",
    "heaviside",
    "mantegna_sigma",
    "levy_step",
    "levy_vector",
]


@dataclass(frozen=True)
class LevyParams:
    """Levy-flight configuration: tail exponent and step-size factor."""

    lam: float
    scale: float = 1.0

    def __post_init__(self):
        if not 0.0 < self.lam < 2.0:
            raise InvalidArgumentError(f"levy exponent must be in (0, 2), got {self.lam}")
        if not self.scale >= 0.0:
            raise InvalidArgumentError(f"levy scale must be >= 0, got {self.scale}")


def uniform_vector(dim: int, lo: float, hi: float, rng: RngStream) -> np.ndarray:
    """i.i.d. uniform coordinates on [lo, hi]."""
    if lo > hi:
        raise InvalidArgumentError(f"uniform bounds inverted: lo={lo} > hi={hi}")
    return np.asarray(rng.uniform(lo, hi, size=dim), dtype=float)


def gaussian_vector(dim: int, mean: float, sigma: float, rng: RngStream) -> np.ndarray:
    """i.i.d. Normal(mean, sigma^2) coordinates."""
    if sigma < 0:
        raise InvalidArgumentError(f"sigma must be >= 0, got {sigma}")
    return np.asarray(rng.normal(mean, sigma, size=dim), dtype=float)


def heaviside(u: float) -> int:
    """Unit step gate: 1 if u >= 0 else 0 (H(0) = 1 by convention)."""
    if not math.isfinite(u):
        raise NumericError(f"heaviside argument must be finite, got {u}")
    return 1 if u >= 0.0 else 0


def mantegna_sigma(lam: float) -> float:
    """Standard deviation of the numerator Gaussian in the Mantegna scheme."""
    if not 0.0 < lam < 2.0:
        raise InvalidArgumentError(f"levy exponent must be in (0, 2), got {lam}")
    num = math.gamma(1.0 + lam) * math.sin(math.pi * lam / 2.0)
    den = math.gamma((1.0 + lam) / 2.0) * lam * 2.0 ** ((lam - 1.0) / 2.0)
    return (num / den) ** (1.0 / lam)


def _levy_block(shape, params: LevyParams, rng: RngStream) -> np.ndarray:
    """Raw (unscaled) Mantegna steps; u block drawn before v block."""
    sigma = mantegna_sigma(params.lam)
    u = rng.normal(0.0, sigma, size=shape)
    v = rng.normal(0.0, 1.0, size=shape)
    return u / np.abs(v) ** (1.0 / params.lam)


def levy_step(params: LevyParams, rng: RngStream) -> float:
    """One raw Levy-flight step (unscaled); consumes two Gaussian draws."""
    return float(_levy_block(1, params, rng)[0])


def levy_vector(dim: int, params: LevyParams, rng: RngStream) -> np.ndarray:
    """`dim` independent Levy steps, each multiplied by ``params.scale``."""
    if params.scale == 0.0:
        # Consume the same number of draws as the non-degenerate path so
        # downstream draw order is independent of the scale value.
        _levy_block(dim, params, rng)
        return np.zeros(dim)
    return params.scale * _levy_block(dim, params, rng)
