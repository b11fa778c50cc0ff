"""Run analysis machinery: particle-swarm eigenvalue bifurcation,
empirical Markov chains and their spectral gap, population diversity,
and sub-swarm detection.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import Population, SearchSpace
from .errors import InvalidArgumentError, NumericError

__all__ = [
    "ChainModel", "SubswarmReport", "pso_eigenvalues", "diversity_variance",
    "count_subswarms", "empirical_transition_matrix", "second_eigenvalue",
    "discretize_positions",
]


def pso_eigenvalues(gamma: float) -> tuple:
    """Both eigenvalues of the particle-swarm system matrix.

    ``lam = 1 - gamma/2 +- sqrt(gamma^2 - 4*gamma)/2``; the roots are
    complex with unit modulus for 0 < gamma < 4, coincide at -1 for
    gamma = 4, and split into distinct reals beyond.
    """
    if not math.isfinite(gamma):
        raise NumericError(f"gamma must be finite, got {gamma}")
    disc = cmath.sqrt(complex(gamma * gamma - 4.0 * gamma, 0.0))
    base = 1.0 - gamma / 2.0
    return (base + disc / 2.0, base - disc / 2.0)


def diversity_variance(pop: Population) -> float:
    """Mean over dimensions of the per-dimension population variance.

    Zero iff all positions coincide; invariant under translating the
    whole population. Uses the divisor-N (population) variance.
    """
    if pop.size < 1:
        raise InvalidArgumentError("population must be non-empty")
    return float(np.mean(np.var(pop.positions, axis=0)))


@dataclass
class SubswarmReport:
    """Single-linkage clustering summary of the population."""

    n_clusters: int
    cluster_centers: list
    cluster_sizes: list
    threshold: float


def count_subswarms(pop: Population, threshold: float) -> SubswarmReport:
    """Chain agents within ``threshold`` (Euclidean) into clusters.

    Single linkage via union-find; two agents share a cluster whenever
    some path of below-threshold hops connects them.
    """
    if pop.size < 1:
        raise InvalidArgumentError("population must be non-empty")
    if not threshold > 0:
        raise InvalidArgumentError(f"threshold must be > 0, got {threshold}")
    x = pop.positions
    n = x.shape[0]
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(n):
        for j in range(i + 1, n):
            if np.linalg.norm(x[i] - x[j]) <= threshold:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri
    roots = {}
    for i in range(n):
        roots.setdefault(find(i), []).append(i)
    members = sorted(roots.values(), key=lambda m: m[0])
    centers = [np.mean(x[m], axis=0) for m in members]
    sizes = [len(m) for m in members]
    return SubswarmReport(len(members), centers, sizes, float(threshold))


@dataclass
class ChainModel:
    """Empirical Markov chain: transition counts and row-stochastic matrix."""

    n_states: int
    transition: np.ndarray
    counts: np.ndarray


def empirical_transition_matrix(trajectories, n_states: int) -> ChainModel:
    """Count observed state transitions and normalize rows.

    Rows with no observed outgoing transition become uniform rows so
    the matrix stays stochastic (this biases unvisited states toward
    uniform mixing; interpret such rows with care).
    """
    if n_states < 1:
        raise InvalidArgumentError(f"n_states must be >= 1, got {n_states}")
    counts = np.zeros((n_states, n_states), dtype=np.int64)
    for traj in trajectories:
        traj = np.asarray(traj, dtype=np.int64)
        if traj.size and (traj.min() < 0 or traj.max() >= n_states):
            raise InvalidArgumentError(
                f"state index outside [0, {n_states}) in trajectory")
        for a, b in zip(traj[:-1], traj[1:]):
            counts[a, b] += 1
    transition = np.empty((n_states, n_states), dtype=float)
    row_sums = counts.sum(axis=1)
    for i in range(n_states):
        if row_sums[i] == 0:
            transition[i] = 1.0 / n_states
        else:
            transition[i] = counts[i] / row_sums[i]
    return ChainModel(n_states, transition, counts)


def _stationary_distribution(P: np.ndarray, cap: int, tol: float) -> np.ndarray:
    """Left eigenvector for eigenvalue 1 via lazy-chain power iteration."""
    n = P.shape[0]
    pi = np.full(n, 1.0 / n)
    for _ in range(cap):
        nxt = 0.5 * pi + 0.5 * (pi @ P)
        nxt /= nxt.sum()
        if np.max(np.abs(nxt - pi)) < tol:
            return nxt
        pi = nxt
    return pi


def second_eigenvalue(chain: ChainModel, cap: int = 100_000,
                      tol: float = 1e-10) -> float:
    """Second-largest eigenvalue modulus of the transition matrix.

    Deflates the known leading eigenpair (eigenvalue 1, right
    eigenvector of ones) using the stationary distribution, then runs a
    block-2 power iteration on the deflated matrix so complex-conjugate
    pairs are handled. Intended for desk-scale chains (n_states up to
    about 1e3).
    """
    P = np.asarray(chain.transition, dtype=float)
    n = P.shape[0]
    if P.shape != (n, n):
        raise InvalidArgumentError("transition matrix must be square")
    if np.any(P < -1e-12) or np.any(P > 1.0 + 1e-12):
        raise InvalidArgumentError("transition entries must lie in [0, 1]")
    row_err = np.max(np.abs(P.sum(axis=1) - 1.0))
    if row_err > 1e-9:
        raise InvalidArgumentError(
            f"matrix is not row-stochastic (max row-sum error {row_err:.3e})")
    # Row sums equal 1, so the leading eigenpair (1, ones) is verified.
    if n == 1:
        return 0.0
    pi = _stationary_distribution(P, cap, tol)
    B = P - np.outer(np.ones(n), pi)

    gen = np.random.Generator(np.random.PCG64(12345))
    q = gen.standard_normal((n, 2))
    q, _ = np.linalg.qr(q)
    prev = None
    for _ in range(cap):
        z = B @ q
        norm = np.linalg.norm(z)
        if norm < 1e-14:
            return 0.0
        q, r = np.linalg.qr(z)
        h = q.T @ B @ q
        est = float(np.max(np.abs(np.linalg.eigvals(h))))
        if prev is not None and abs(est - prev) < tol:
            return est
        prev = est
    raise NumericError(
        f"second-eigenvalue iteration did not converge within {cap} steps")


def discretize_positions(snapshots, space: SearchSpace, bins_per_dim: int):
    """Map position snapshots onto flattened uniform-grid cell indices.

    ``snapshots`` is a sequence of (n_agents, dim) arrays ordered in
    time; the result is one state-index sequence per agent. A
    coordinate exactly at the upper bound maps to the last bin.
    """
    if bins_per_dim < 1:
        raise InvalidArgumentError(f"bins_per_dim must be >= 1, got {bins_per_dim}")
    snaps = [np.asarray(s, dtype=float) for s in snapshots]
    if not snaps:
        return []
    n = snaps[0].shape[0]
    d = space.dim
    width = space.width
    strides = bins_per_dim ** np.arange(d - 1, -1, -1, dtype=np.int64)
    sequences = [[] for _ in range(n)]
    for snap in snaps:
        if snap.shape != (n, d):
            raise InvalidArgumentError("inconsistent snapshot shape")
        if np.any(snap < space.lower) or np.any(snap > space.upper):
            raise InvalidArgumentError("snapshot position outside the search space")
        rel = (snap - space.lower) / width
        idx = np.minimum((rel * bins_per_dim).astype(np.int64), bins_per_dim - 1)
        states = idx @ strides
        for i in range(n):
            sequences[i].append(int(states[i]))
    return sequences
