"""The five population transition rules behind one shared step contract.

Each stepper advances a :class:`~swarmlab.core.Population` by one
iteration: ``stepper.step(pop, f, rng)``. All randomness comes from the
run's single :class:`~swarmlab.rng.RngStream`; the fixed per-iteration
draw order of each algorithm is listed below (shapes in parentheses),
which makes every run exactly reproducible.

pso      eps1 (n,d) uniform; eps2 (n,d) uniform
bat      freq-mix (n) uniform; rate-test (n) uniform; walk (n,d) gaussian;
         accept (n) uniform
firefly  perturbation (n,n,d) gaussian
cuckoo   levy numerator (n,d) gaussian; levy denominator (n,d) gaussian;
         nest choice (n) uniform; permutation (n); gate (n) uniform;
         step factor (n) uniform
fpa      branch (n) uniform; levy numerator (n,d) gaussian;
         levy denominator (n,d) gaussian; mixing U (n) uniform;
         permutation (n)

Selection contracts: pso, bat and fpa read the tracked best inside
their move arithmetic; firefly and cuckoo never do (firefly compares
relative brightness, cuckoo uses ranking plus elitism over its own
agents), so their proposals are unaffected by the global-best record.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from . import kernels
from .core import Population, SearchSpace, evaluate_and_update_bests, evaluate_positions
from .errors import ContractError, InvalidArgumentError
from .rng import RngStream
from .samplers import LevyParams, _levy_block, mantegna_sigma

__all__ = [
    "PsoParams", "BatParams", "FireflyParams", "CuckooParams", "FpaParams",
    "BatState", "bat_schedules", "default_params", "make_stepper",
    "ALGORITHM_NAMES", "PARAM_TYPES",
]

ALGORITHM_NAMES = ("pso", "bat", "firefly", "cuckoo", "fpa")


@dataclass(frozen=True)
class PsoParams:
    """Learning parameters of the particle swarm update.

    ``inertia`` defaults to 1.0, which is the plain textbook update
    with no inertia weight; values below 1 damp the velocities.
    """

    alpha: float = 2.0
    beta: float = 2.0
    inertia: float = 1.0

    def __post_init__(self):
        if self.alpha < 0:
            raise InvalidArgumentError(f"pso alpha must be >= 0, got {self.alpha}")
        if self.beta < 0:
            raise InvalidArgumentError(f"pso beta must be >= 0, got {self.beta}")
        if not 0.0 <= self.inertia <= 1.0:
            raise InvalidArgumentError(
                f"pso inertia must be in [0, 1], got {self.inertia}")


@dataclass(frozen=True)
class BatParams:
    """Frequency range plus loudness/pulse-rate schedule controls."""

    f_min: float = 0.0
    f_max: float = 2.0
    alpha_loudness: float = 0.9
    gamma_rate: float = 0.9
    A0: float = 1.0
    r0: float = 0.5
    walk_scale: float = 0.01

    def __post_init__(self):
        if self.f_min > self.f_max:
            raise InvalidArgumentError(
                f"bat frequency range inverted: f_min={self.f_min} > f_max={self.f_max}")
        if not 0.0 < self.alpha_loudness < 1.0:
            raise InvalidArgumentError(
                f"bat alpha_loudness must be in (0, 1), got {self.alpha_loudness}")
        if self.gamma_rate <= 0:
            raise InvalidArgumentError(
                f"bat gamma_rate must be > 0, got {self.gamma_rate}")
        if self.A0 <= 0:
            raise InvalidArgumentError(f"bat A0 must be > 0, got {self.A0}")
        if not 0.0 <= self.r0 <= 1.0:
            raise InvalidArgumentError(f"bat r0 must be in [0, 1], got {self.r0}")


@dataclass(frozen=True)
class FireflyParams:
    """Attractiveness constant, absorption and randomization scale.

    ``alpha_decay`` multiplies the randomization scale once per
    iteration (1.0 keeps it constant).
    """

    beta0: float = 1.0
    gamma_abs: float = 1.0
    alpha_step: float = 0.1
    alpha_decay: float = 1.0

    def __post_init__(self):
        if self.beta0 <= 0:
            raise InvalidArgumentError(f"firefly beta0 must be > 0, got {self.beta0}")
        if self.gamma_abs < 0:
            raise InvalidArgumentError(
                f"firefly gamma_abs must be >= 0, got {self.gamma_abs}")
        if self.alpha_step < 0:
            raise InvalidArgumentError(
                f"firefly alpha_step must be >= 0, got {self.alpha_step}")
        if not 0.0 < self.alpha_decay <= 1.0:
            raise InvalidArgumentError(
                f"firefly alpha_decay must be in (0, 1], got {self.alpha_decay}")


@dataclass(frozen=True)
class CuckooParams:
    """Switching probability, step scales and Levy exponent."""

    pa: float = 0.25
    alpha_levy: float = 0.1
    alpha_local: float = 1.0
    lam: float = 1.5

    def __post_init__(self):
        if not 0.0 <= self.pa <= 1.0:
            raise InvalidArgumentError(f"cuckoo pa must be in [0, 1], got {self.pa}")
        if self.alpha_levy < 0:
            raise InvalidArgumentError(
                f"cuckoo alpha_levy must be >= 0, got {self.alpha_levy}")
        if self.alpha_local < 0:
            raise InvalidArgumentError(
                f"cuckoo alpha_local must be >= 0, got {self.alpha_local}")
        if not 0.0 < self.lam < 2.0:
            raise InvalidArgumentError(
                f"cuckoo lam must be in (0, 2), got {self.lam}")


@dataclass(frozen=True)
class FpaParams:
    """Global/local branch probability, pull scale and Levy exponent."""

    p_switch: float = 0.8
    gamma_scale: float = 0.1
    lam: float = 1.5

    def __post_init__(self):
        if not 0.0 <= self.p_switch <= 1.0:
            raise InvalidArgumentError(
                f"fpa p_switch must be in [0, 1], got {self.p_switch}")
        if self.gamma_scale <= 0:
            raise InvalidArgumentError(
                f"fpa gamma_scale must be > 0, got {self.gamma_scale}")
        if not 0.0 < self.lam < 2.0:
            raise InvalidArgumentError(f"fpa lam must be in (0, 2), got {self.lam}")


PARAM_TYPES = {
    "pso": PsoParams,
    "bat": BatParams,
    "firefly": FireflyParams,
    "cuckoo": CuckooParams,
    "fpa": FpaParams,
}


def default_params(algorithm: str, space: SearchSpace):
    """Literature-style defaults; scale-sensitive ones derive from the box."""
    if algorithm not in PARAM_TYPES:
        raise InvalidArgumentError(
            f"unknown algorithm {algorithm!r}; valid names: {', '.join(ALGORITHM_NAMES)}")
    mean_width = float(np.mean(space.width))
    if algorithm == "firefly":
        return FireflyParams(beta0=1.0, gamma_abs=1.0 / mean_width**2,
                             alpha_step=0.1 * mean_width)
    if algorithm == "cuckoo":
        return CuckooParams(alpha_levy=0.01 * mean_width)
    return PARAM_TYPES[algorithm]()


def bat_schedules(r0: float, gamma_rate: float, A_prev: float,
                  alpha_loudness: float, t: int) -> tuple:
    """Closed-form pulse rate and one loudness decay step.

    Returns ``(r0 * (1 - exp(-gamma_rate * t)), alpha_loudness * A_prev)``.
    """
    if t < 0:
        raise InvalidArgumentError(f"t must be >= 0, got {t}")
    return r0 * (1.0 - math.exp(-gamma_rate * t)), alpha_loudness * A_prev


@dataclass
class BatState:
    """Per-bat loudness and pulse-rate schedule state."""

    loudness: np.ndarray
    pulse_rate: np.ndarray
    t: int = 0

    @classmethod
    def initial(cls, n: int, params: BatParams) -> "BatState":
        # t = 0: loudness at A0, pulse rate at r0 * (1 - e^0) = 0.
        return cls(np.full(n, float(params.A0)), np.zeros(n), 0)

    def advance(self, params: BatParams) -> None:
        self.t += 1
        for i in range(len(self.loudness)):
            r, a = bat_schedules(params.r0, params.gamma_rate,
                                 self.loudness[i], params.alpha_loudness, self.t)
            self.pulse_rate[i] = r
            self.loudness[i] = a


class _StepperBase:
    algorithm: str = ""
    uses_velocity = False
    min_population = 1

    def __init__(self, params):
        self.params = params

    def set_params(self, **overrides) -> None:
        """Swap parameter values in place (used by stochastic control)."""
        self.params = replace(self.params, **overrides)

    def prepare(self, pop: Population) -> None:
        if pop.size < self.min_population:
            raise InvalidArgumentError(
                f"{self.algorithm} requires population >= {self.min_population}, "
                f"got {pop.size}")
        if self.uses_velocity and pop.velocities is None:
            raise ContractError(f"{self.algorithm} requires agent velocities")

    def step(self, pop: Population, f, rng: RngStream, parallel: bool = False):
        raise NotImplementedError


class PsoStepper(_StepperBase):
    algorithm = "pso"
    uses_velocity = True

    def step(self, pop, f, rng, parallel=False):
        self.prepare(pop)
        if pop.pbest_positions is None or pop.best_position is None:
            raise ContractError("pso requires an evaluated population with bests")
        n, d = pop.positions.shape
        p = self.params
        eps1 = rng.uniform(0.0, 1.0, size=(n, d))
        eps2 = rng.uniform(0.0, 1.0, size=(n, d))
        kernels.pso_update(pop.positions, pop.velocities, pop.pbest_positions,
                           pop.best_position, eps1, eps2, p.alpha, p.beta,
                           p.inertia, pop.space.lower, pop.space.upper)
        evaluate_and_update_bests(pop, f, parallel=parallel)
        return pop


class BatStepper(_StepperBase):
    algorithm = "bat"
    uses_velocity = True

    def __init__(self, params):
        super().__init__(params)
        self.state: BatState | None = None
        self.last_frequencies: np.ndarray | None = None

    def step(self, pop, f, rng, parallel=False):
        self.prepare(pop)
        if pop.fitness is None or pop.best_position is None:
            raise ContractError("bat requires an evaluated population")
        n, d = pop.positions.shape
        p = self.params
        if self.state is None:
            self.state = BatState.initial(n, p)
        mix = rng.uniform(0.0, 1.0, size=n)
        freq = p.f_min + (p.f_max - p.f_min) * mix
        self.last_frequencies = freq
        u_rate = rng.uniform(0.0, 1.0, size=n)
        gauss = rng.normal(0.0, 1.0, size=(n, d))
        u_accept = rng.uniform(0.0, 1.0, size=n)

        best = pop.best_position.copy()
        walk = (u_rate > self.state.pulse_rate).astype(np.uint8)
        walk_scale = p.walk_scale * float(np.mean(self.state.loudness))
        cand = np.empty_like(pop.positions)
        kernels.bat_candidates(pop.positions, pop.velocities, best, freq, walk,
                               gauss, walk_scale, pop.space.lower,
                               pop.space.upper, cand)
        cand_fit = evaluate_positions(cand, f, parallel=parallel)
        pop.observe(cand, cand_fit)
        pop.observe_candidates(cand, cand_fit)
        accept = (cand_fit < pop.fitness) & (u_accept < self.state.loudness)
        rows = np.nonzero(accept)[0]
        pop.positions[rows] = cand[rows]
        pop.fitness[rows] = cand_fit[rows]
        pop.update_personal_bests(rows)
        self.state.advance(p)
        return pop


class FireflyStepper(_StepperBase):
    algorithm = "firefly"

    def __init__(self, params):
        super().__init__(params)
        self._alpha_factor = 1.0

    def step(self, pop, f, rng, parallel=False):
        self.prepare(pop)
        if pop.fitness is None:
            raise ContractError("firefly requires an evaluated population")
        n, d = pop.positions.shape
        p = self.params
        gauss = rng.normal(0.0, 1.0, size=(n, n, d))
        alpha_t = p.alpha_step * self._alpha_factor
        kernels.firefly_sweep(pop.positions, pop.fitness, gauss, p.beta0,
                              p.gamma_abs, alpha_t, pop.space.lower,
                              pop.space.upper)
        self._alpha_factor *= p.alpha_decay
        evaluate_and_update_bests(pop, f, parallel=parallel)
        return pop


class CuckooStepper(_StepperBase):
    algorithm = "cuckoo"
    min_population = 3

    def step(self, pop, f, rng, parallel=False):
        self.prepare(pop)
        if pop.fitness is None:
            raise ContractError("cuckoo requires an evaluated population")
        n, d = pop.positions.shape
        p = self.params
        elite_i = int(np.argmin(pop.fitness))
        elite_pos = pop.positions[elite_i].copy()
        elite_fit = float(pop.fitness[elite_i])

        # Global phase: Levy proposals, each challenging a random nest.
        levy = _levy_block((n, d), LevyParams(p.lam), rng)
        cand = np.clip(pop.positions + p.alpha_levy * levy,
                       pop.space.lower, pop.space.upper)
        cand_fit = evaluate_positions(cand, f, parallel=parallel)
        pop.observe(cand, cand_fit)
        pop.observe_candidates(cand, cand_fit)
        u_nest = rng.uniform(0.0, 1.0, size=n)
        targets = np.minimum((u_nest * n).astype(np.int64), n - 1)
        for i in range(n):
            j = targets[i]
            if cand_fit[i] < pop.fitness[j]:
                pop.positions[j] = cand[i]
                pop.fitness[j] = cand_fit[i]
        pop.update_personal_bests()

        # Local phase: gated difference walk from one snapshot.
        perm = rng.permutation(n).astype(np.int64)
        jidx = perm
        kidx = np.roll(perm, -1)
        eps = rng.uniform(0.0, 1.0, size=n)
        s = rng.uniform(0.0, 1.0, size=n)
        gate = np.where(p.pa - eps >= 0.0, 1.0, 0.0)
        coef = p.alpha_local * s * gate
        cand2 = np.empty_like(pop.positions)
        kernels.cuckoo_local(pop.positions, jidx, kidx, coef,
                             pop.space.lower, pop.space.upper, cand2)
        cand2_fit = evaluate_positions(cand2, f, parallel=parallel)
        pop.observe(cand2, cand2_fit)
        pop.observe_candidates(cand2, cand2_fit)
        accept = cand2_fit < pop.fitness
        rows = np.nonzero(accept)[0]
        pop.positions[rows] = cand2[rows]
        pop.fitness[rows] = cand2_fit[rows]
        pop.update_personal_bests(rows)

        # Elitism: the best solution always survives to the next iteration.
        if float(np.min(pop.fitness)) > elite_fit:
            worst = int(np.argmax(pop.fitness))
            pop.positions[worst] = elite_pos
            pop.fitness[worst] = elite_fit
        return pop


class FpaStepper(_StepperBase):
    algorithm = "fpa"
    min_population = 3

    def step(self, pop, f, rng, parallel=False):
        self.prepare(pop)
        if pop.fitness is None or pop.best_position is None:
            raise ContractError("fpa requires an evaluated population")
        n, d = pop.positions.shape
        p = self.params
        u_branch = rng.uniform(0.0, 1.0, size=n)
        branch = (u_branch < p.p_switch).astype(np.uint8)
        levy = _levy_block((n, d), LevyParams(p.lam), rng)
        u_local = rng.uniform(0.0, 1.0, size=n)
        perm = rng.permutation(n).astype(np.int64)
        jidx = perm
        kidx = np.roll(perm, -1)
        cand = np.empty_like(pop.positions)
        kernels.fpa_candidates(pop.positions, branch, levy, pop.best_position,
                               p.gamma_scale, u_local, jidx, kidx,
                               pop.space.lower, pop.space.upper, cand)
        cand_fit = evaluate_positions(cand, f, parallel=parallel)
        pop.observe(cand, cand_fit)
        pop.observe_candidates(cand, cand_fit)
        accept = cand_fit < pop.fitness
        rows = np.nonzero(accept)[0]
        pop.positions[rows] = cand[rows]
        pop.fitness[rows] = cand_fit[rows]
        pop.update_personal_bests(rows)
        return pop


_STEPPERS = {
    "pso": PsoStepper,
    "bat": BatStepper,
    "firefly": FireflyStepper,
    "cuckoo": CuckooStepper,
    "fpa": FpaStepper,
}


def make_stepper(algorithm: str, params=None, space: SearchSpace | None = None):
    """Instantiate the stepper for one algorithm.

    ``params=None`` uses :func:`default_params` (requires ``space`` for
    the scale-sensitive algorithms).
    """
    if algorithm not in _STEPPERS:
        raise InvalidArgumentError(
            f"unknown algorithm {algorithm!r}; valid names: {', '.join(ALGORITHM_NAMES)}")
    if params is None:
        if space is None:
            raise InvalidArgumentError("either params or space must be given")
        params = default_params(algorithm, space)
    expected = PARAM_TYPES[algorithm]
    if not isinstance(params, expected):
        raise ContractError(
            f"{algorithm} expects {expected.__name__}, got {type(params).__name__}")
    return _STEPPERS[algorithm](params)


def pso_step(pop, params: PsoParams, f, rng, parallel=False):
    """One particle-swarm iteration (stateless convenience wrapper)."""
    return PsoStepper(params).step(pop, f, rng, parallel=parallel)


def firefly_step(pop, params: FireflyParams, f, rng, parallel=False):
    """One firefly iteration with the constant randomization scale."""
    return FireflyStepper(params).step(pop, f, rng, parallel=parallel)


def cuckoo_step(pop, params: CuckooParams, f, rng, parallel=False):
    """One cuckoo-search iteration (global Levy phase + gated local phase)."""
    return CuckooStepper(params).step(pop, f, rng, parallel=parallel)


def fpa_step(pop, params: FpaParams, f, rng, parallel=False):
    """One flower-pollination iteration."""
    return FpaStepper(params).step(pop, f, rng, parallel=parallel)


def bat_step(pop, params: BatParams, state: BatState, f, rng, parallel=False):
    """One bat iteration advancing the given schedule state in place."""
    stepper = BatStepper(params)
    stepper.state = state
    return stepper.step(pop, f, rng, parallel=parallel)
