"""Pure-Python/numpy backend for the per-iteration update kernels.

Every function here mirrors the compiled backend in
``_ckernels.pyx`` operation-for-operation, so the two backends produce
bit-identical results (IEEE-754 doubles, same evaluation order). Keep
the two files in sync when changing either.
"""

from __future__ import annotations

import math

import numpy as np

BACKEND_NAME = "python"


def pso_update(x, v, pbest, gbest, eps1, eps2, alpha, beta, inertia, lower, upper):
    """Velocity/position update for all particles, clamped in place.

    A velocity component is zeroed whenever its position coordinate is
    clamped (absorbing bounds).
    """
    vv = inertia * v + alpha * eps1 * (gbest - x) + beta * eps2 * (pbest - x)
    xx = x + vv
    lo_mask = xx < lower
    hi_mask = xx > upper
    xx = np.where(lo_mask, lower, xx)
    xx = np.where(hi_mask, upper, xx)
    vv[lo_mask | hi_mask] = 0.0
    v[...] = vv
    x[...] = xx


def bat_candidates(x, v, best, freq, walk, gauss, walk_scale, lower, upper, cand):
    """Frequency-tuned flight candidates, with per-bat local-walk override.

    Velocities are updated in place for every bat; rows flagged in
    ``walk`` get their candidate replaced by a Gaussian walk around the
    current best (velocity is kept from the flight update).
    """
    vv = v + (x - best) * freq[:, None]
    cc = x + vv
    lo_mask = cc < lower
    hi_mask = cc > upper
    cc = np.where(lo_mask, lower, cc)
    cc = np.where(hi_mask, upper, cc)
    vv[lo_mask | hi_mask] = 0.0
    v[...] = vv
    walk_rows = walk.astype(bool)
    if walk_rows.any():
        wc = best + walk_scale * gauss[walk_rows]
        cc[walk_rows] = np.clip(wc, lower, upper)
    cand[...] = cc


def firefly_sweep(x, fitness, gauss, beta0, gamma, alpha, lower, upper):
    """In-place index-order sweep: each agent moves toward every brighter one.

    Brightness ranking is frozen at sweep start (``fitness`` is not
    re-evaluated mid-sweep); moves are applied immediately so later
    pairs see updated positions. O(n^2 d) — this is the hot kernel.
    """
    n, d = x.shape
    for i in range(n):
        fi = fitness[i]
        xi = x[i]
        for j in range(n):
            if fitness[j] < fi:
                xj = x[j]
                r2 = 0.0
                for k in range(d):
                    dk = xj[k] - xi[k]
                    r2 += dk * dk
                b = beta0 * math.exp(-gamma * r2)
                xi[...] = np.clip(xi + b * (xj - xi) + alpha * gauss[i, j], lower, upper)


def cuckoo_local(x, jidx, kidx, coef, lower, upper, cand):
    """Gated difference step x_i + coef_i * (x_j - x_k), clamped.

    ``coef`` already folds together step scale, the per-agent uniform
    step factor and the Heaviside gate. All candidates are computed from
    the same position snapshot.
    """
    diff = x[jidx] - x[kidx]
    cand[...] = np.clip(x + coef[:, None] * diff, lower, upper)


def fpa_candidates(x, branch, levy, gbest, gamma_scale, u_local, jidx, kidx, lower, upper, cand):
    """Per-flower candidate: Levy pull toward the best, or local mixing.

    Rows flagged in ``branch`` take the global (biotic) move
    ``x + gamma * L * (g - x)``; the rest take ``x + U * (x_j - x_k)``.
    """
    global_cand = x + gamma_scale * levy * (gbest - x)
    local_cand = x + u_local[:, None] * (x[jidx] - x[kidx])
    cc = np.where(branch.astype(bool)[:, None], global_cand, local_cand)
    cand[...] = np.clip(cc, lower, upper)
