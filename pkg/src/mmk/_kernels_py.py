"""Pure-Python search kernels, mirroring the compiled versions in _kernels.pyx.

Both kernels enumerate integer vectors in lexicographic order, so the two
backends produce identical output row for row.
"""

import numpy as np


def enumerate_simplex(w, bounds, budget, max_nodes=10**9):
    """All integer vectors with 0 <= c[i] <= bounds[i] and sum(w[i]*c[i]) <= budget.

    Weights must be positive; the weight prune is then monotone in each
    coordinate and cuts off a whole value branch at once.  Returns an
    (ncand, ndim) int64 array in lexicographic order.
    """
    w = np.asarray(w, dtype=np.float64)
    bounds = np.asarray(bounds, dtype=np.int64)
    ndim = len(w)
    if ndim == 0:
        return np.zeros((1, 0), dtype=np.int64)
    out = []
    z = np.zeros(ndim, dtype=np.int64)
    wsum = np.zeros(ndim + 1)
    nodes = 0
    t = 0
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
            out.append(z.copy())
            continue
        wsum[t + 1] = wsum[t] + w[t] * z[t]
        t += 1
        z[t] = -1
    if not out:
        return np.zeros((0, ndim), dtype=np.int64)
    return np.array(out, dtype=np.int64)


def search_support(w, bounds, budget, grp_ptr, row_ptr, ent_cell, ent_coef,
                   row_tol, max_nodes=10**9):
    """DFS over all integer cell assignments within bounds and weight budget.

    Constraint rows are grouped by the depth at which their last cell is
    assigned (grp_ptr); a row whose residual exceeds row_tol at that depth
    prunes the branch.  Residuals are linear in the current value, so larger
    values are still tried.  Returns surviving assignments, lexicographic.
    """
    w = np.asarray(w, dtype=np.float64)
    bounds = np.asarray(bounds, dtype=np.int64)
    ncells = len(w)
    if ncells == 0:
        return np.zeros((1, 0), dtype=np.int64)
    out = []
    z = np.zeros(ncells, dtype=np.int64)
    wsum = np.zeros(ncells + 1)
    nodes = 0
    t = 0
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
            if abs(res) > row_tol:
                ok = False
                break
        if not ok:
            continue
        if t == ncells - 1:
            out.append(z.copy())
            continue
        wsum[t + 1] = wsum[t] + w[t] * z[t]
        t += 1
        z[t] = -1
    if not out:
        return np.zeros((0, ncells), dtype=np.int64)
    return np.array(out, dtype=np.int64)
