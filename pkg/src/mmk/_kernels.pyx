# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled search kernels, mirrored by the pure-Python _kernels_py module.

Both kernels enumerate integer vectors in lexicographic order, so the two
backends produce identical output row for row.
"""

from libc.stdint cimport int32_t, int64_t

import numpy as np


def enumerate_simplex(double[::1] w, int64_t[::1] bounds, double budget,
                      int64_t max_nodes=1000000000):
    """All integer vectors with 0 <= c[i] <= bounds[i] and sum(w[i]*c[i]) <= budget.

    Weights must be positive; the weight prune is then monotone in each
    coordinate and cuts off a whole value branch at once.  Returns an
    (ncand, ndim) int64 array in lexicographic order.
    """
    cdef Py_ssize_t ndim = w.shape[0]
    if ndim == 0:
        return np.zeros((1, 0), dtype=np.int64)
    z_arr = np.zeros(ndim, dtype=np.int64)
    wsum_arr = np.zeros(ndim + 1, dtype=np.float64)
    cdef int64_t[::1] z = z_arr
    cdef double[::1] wsum = wsum_arr
    cdef int64_t nodes = 0
    cdef Py_ssize_t t = 0
    out = []
    z[0] = -1
    while t >= 0:
        z[t] += 1
        nodes += 1
        if nodes > max_nodes:
            raise RuntimeError(f"simplex enumeration exceeded {max_nodes} nodes")
        if z[t] > bounds[t] or wsum[t] + w[t] * z[t] > budget:
            t -= 1
            continue
        if t == ndim - 1:
            out.append(z_arr.copy())
            continue
        wsum[t + 1] = wsum[t] + w[t] * z[t]
        t += 1
        z[t] = -1
    if not out:
        return np.zeros((0, ndim), dtype=np.int64)
    return np.array(out, dtype=np.int64)


def search_support(double[::1] w, int64_t[::1] bounds, double budget,
                   int32_t[::1] grp_ptr, int32_t[::1] row_ptr,
                   int32_t[::1] ent_cell, double[::1] ent_coef,
                   double row_tol, int64_t max_nodes=1000000000):
    """DFS over all integer cell assignments within bounds and weight budget.

    Constraint rows are grouped by the depth at which their last cell is
    assigned (grp_ptr); a row whose residual exceeds row_tol at that depth
    prunes the branch.  Residuals are linear in the current value, so larger
    values are still tried.  Returns surviving assignments, lexicographic.
    """
    cdef Py_ssize_t ncells = w.shape[0]
    if ncells == 0:
        return np.zeros((1, 0), dtype=np.int64)
    z_arr = np.zeros(ncells, dtype=np.int64)
    wsum_arr = np.zeros(ncells + 1, dtype=np.float64)
    cdef int64_t[::1] z = z_arr
    cdef double[::1] wsum = wsum_arr
    cdef int64_t nodes = 0
    cdef Py_ssize_t t = 0
    cdef Py_ssize_t r, e
    cdef double res
    cdef bint ok
    out = []
    z[0] = -1
    while t >= 0:
        z[t] += 1
        nodes += 1
        if nodes > max_nodes:
            raise RuntimeError(f"support search exceeded {max_nodes} nodes")
        if z[t] > bounds[t] or wsum[t] + w[t] * z[t] > budget:
            t -= 1
            continue
        ok = True
        for r in range(grp_ptr[t], grp_ptr[t + 1]):
            res = 0.0
            for e in range(row_ptr[r], row_ptr[r + 1]):
                res += ent_coef[e] * z[ent_cell[e]]
            if res > row_tol or res < -row_tol:
                ok = False
                break
        if not ok:
            continue
        if t == ncells - 1:
            out.append(z_arr.copy())
            continue
        wsum[t + 1] = wsum[t] + w[t] * z[t]
        t += 1
        z[t] = -1
    if not out:
        return np.zeros((0, ncells), dtype=np.int64)
    return np.array(out, dtype=np.int64)
