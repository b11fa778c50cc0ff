# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend for the per-iteration update kernels.

Mirrors ``_python.py`` operation-for-operation; both backends must stay
bit-identical. See that module for the kernel contracts.
"""

from libc.math cimport exp

BACKEND_NAME = "compiled"


def pso_update(double[:, ::1] x, double[:, ::1] v,
               double[:, ::1] pbest, double[::1] gbest,
               double[:, ::1] eps1, double[:, ::1] eps2,
               double alpha, double beta, double inertia,
               double[::1] lower, double[::1] upper):
    cdef Py_ssize_t n = x.shape[0], d = x.shape[1], i, k
    cdef double vv, xx
    for i in range(n):
        for k in range(d):
            vv = inertia * v[i, k] + alpha * eps1[i, k] * (gbest[k] - x[i, k]) \
                + beta * eps2[i, k] * (pbest[i, k] - x[i, k])
            xx = x[i, k] + vv
            if xx < lower[k]:
                xx = lower[k]
                vv = 0.0
            elif xx > upper[k]:
                xx = upper[k]
                vv = 0.0
            v[i, k] = vv
            x[i, k] = xx


def bat_candidates(double[:, ::1] x, double[:, ::1] v, double[::1] best,
                   double[::1] freq, unsigned char[::1] walk,
                   double[:, ::1] gauss, double walk_scale,
                   double[::1] lower, double[::1] upper,
                   double[:, ::1] cand):
    cdef Py_ssize_t n = x.shape[0], d = x.shape[1], i, k
    cdef double vv, cc
    for i in range(n):
        for k in range(d):
            vv = v[i, k] + (x[i, k] - best[k]) * freq[i]
            cc = x[i, k] + vv
            if cc < lower[k]:
                cc = lower[k]
                vv = 0.0
            elif cc > upper[k]:
                cc = upper[k]
                vv = 0.0
            v[i, k] = vv
            cand[i, k] = cc
        if walk[i]:
            for k in range(d):
                cc = best[k] + walk_scale * gauss[i, k]
                if cc < lower[k]:
                    cc = lower[k]
                elif cc > upper[k]:
                    cc = upper[k]
                cand[i, k] = cc


def firefly_sweep(double[:, ::1] x, double[::1] fitness,
                  double[:, :, ::1] gauss, double beta0, double gamma,
                  double alpha, double[::1] lower, double[::1] upper):
    cdef Py_ssize_t n = x.shape[0], d = x.shape[1], i, j, k
    cdef double fi, r2, dk, b, val
    for i in range(n):
        fi = fitness[i]
        for j in range(n):
            if fitness[j] < fi:
                r2 = 0.0
                for k in range(d):
                    dk = x[j, k] - x[i, k]
                    r2 += dk * dk
                b = beta0 * exp(-gamma * r2)
                for k in range(d):
                    val = x[i, k] + b * (x[j, k] - x[i, k]) + alpha * gauss[i, j, k]
                    if val < lower[k]:
                        val = lower[k]
                    elif val > upper[k]:
                        val = upper[k]
                    x[i, k] = val


def cuckoo_local(double[:, ::1] x, long long[::1] jidx, long long[::1] kidx,
                 double[::1] coef, double[::1] lower, double[::1] upper,
                 double[:, ::1] cand):
    cdef Py_ssize_t n = x.shape[0], d = x.shape[1], i, k
    cdef double cc
    for i in range(n):
        for k in range(d):
            cc = x[i, k] + coef[i] * (x[jidx[i], k] - x[kidx[i], k])
            if cc < lower[k]:
                cc = lower[k]
            elif cc > upper[k]:
                cc = upper[k]
            cand[i, k] = cc


def fpa_candidates(double[:, ::1] x, unsigned char[::1] branch,
                   double[:, ::1] levy, double[::1] gbest, double gamma_scale,
                   double[::1] u_local, long long[::1] jidx, long long[::1] kidx,
                   double[::1] lower, double[::1] upper, double[:, ::1] cand):
    cdef Py_ssize_t n = x.shape[0], d = x.shape[1], i, k
    cdef double cc
    for i in range(n):
        for k in range(d):
            if branch[i]:
                cc = x[i, k] + gamma_scale * levy[i, k] * (gbest[k] - x[i, k])
            else:
                cc = x[i, k] + u_local[i] * (x[jidx[i], k] - x[kidx[i], k])
            if cc < lower[k]:
                cc = lower[k]
            elif cc > upper[k]:
                cc = upper[k]
            cand[i, k] = cc
