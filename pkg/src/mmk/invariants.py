"""Enumeration of modular invariants: non-negative integer matrices Z with
Z_00 = 1 that commute with S and T.

T-commutation is imposed exactly (equal rational T-phases), which restricts Z
to a support set of label pairs.  On that support the S-commutant is a real
linear space; a reduced basis turns enumeration into bounded integer
backtracking over pivot coordinates.  Entries obey Z_ij <= 1/(S_0i S_0j), and
for any solution sum_ij S_0i S_0j Z_ij = Z_00 = 1, which prunes the search to
a weighted simplex.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import ConditioningError, IntegralityError
from .kernels import enumerate_simplex, search_support
from .modular_data import ModularDatum, minimal_data, su2_data

RANK_TOL = 1e-8        # singular value below this -> null direction
RANK_AMBIG = 1e-10     # singular value in [RANK_AMBIG, RANK_TOL] -> refuse to decide
RESIDUE_TOL = 1e-6     # distance to nearest integer accepted in reconstruction
COMMUTE_TOL = 1e-9
ORACLE_ROW_TOL = 1e-7  # partial-assignment residual prune in the brute-force search


@dataclass(frozen=True)
class CheckResult:
    """Outcome of is_modular_invariant: truthiness plus the first failure."""

    ok: bool
    diagnostic: str | None = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class ModularInvariant:
    """Non-negative integer matrix over canonical labels with Z_00 = 1."""

    algebra: str
    param: int
    labels: tuple
    Z: np.ndarray

    def __post_init__(self):
        Z = np.ascontiguousarray(self.Z, dtype=np.int64)
        Z.setflags(write=False)
        object.__setattr__(self, "Z", Z)

    @property
    def n(self):
        return len(self.labels)

    def __eq__(self, other):
        if not isinstance(other, ModularInvariant):
            return NotImplemented
        return (self.algebra == other.algebra and self.param == other.param
                and np.array_equal(self.Z, other.Z))

    def __hash__(self):
        return hash((self.algebra, self.param, self.Z.tobytes()))


@dataclass(frozen=True)
class CommutantBasis:
    """Reduced real basis of {Z : ZS = SZ, supp(Z) in the equal-T-phase set}.

    basis[i] is an n x n matrix; evaluating basis[i] at pivots[j] gives
    delta_ij (reduced row-echelon property).  cells/pivot_cells carry the same
    information as support/pivots in label-index form, and reduced holds the
    basis restricted to the support cells, one row per element.
    """

    support: tuple
    basis: np.ndarray
    pivots: tuple
    cells: tuple = field(repr=False)
    pivot_cells: tuple = field(repr=False)
    reduced: np.ndarray = field(repr=False)

    @property
    def dim(self):
        return len(self.pivots)


def t_support_cells(d: ModularDatum) -> list[tuple[int, int]]:
    """Index pairs (i, j) with equal T-phase, in lexicographic order."""
    groups = {}
    for i, t in enumerate(d.t):
        groups.setdefault(t, []).append(i)
    cells = []
    for members in groups.values():
        cells.extend((i, j) for i in members for j in members)
    cells.sort()
    return cells


def entry_bounds(d: ModularDatum, cells) -> np.ndarray:
    """Upper bound floor(1/(S_0i S_0j) + 1e-9) for each cell."""
    s0 = d.S[0]
    return np.array([int(1.0 / (s0[i] * s0[j]) + 1e-9) for i, j in cells],
                    dtype=np.int64)


def _null_space_on_cells(d, cells):
    """Orthonormal basis (ncells x dim) of the S-commutant on the support.

    The Gram matrix of the commutator constraints on the support cells is
    2(I - M) with M[(i,j),(i',j')] = S_ii' S_jj', so null directions are
    eigenvectors of M with eigenvalue 1.  Squaring ruins the precision of
    small singular values, so the near-1 eigenblock is refined by a direct
    SVD of its actual commutator residuals.
    """
    S = d.S
    n = d.n
    ci = np.array([c[0] for c in cells])
    cj = np.array([c[1] for c in cells])
    M = S[np.ix_(ci, ci)] * S[np.ix_(cj, cj)]
    lam, vec = np.linalg.eigh(M)
    cand = lam > 1.0 - 1e-6
    V = vec[:, cand]
    if V.shape[1] == 0:
        raise ConditioningError("commutant candidate block is empty")
    R = np.empty((n * n, V.shape[1]))
    for idx in range(V.shape[1]):
        Zv = np.zeros((n, n))
        Zv[ci, cj] = V[:, idx]
        R[:, idx] = (Zv @ S - S @ Zv).ravel()
    sig = np.linalg.svd(R, compute_uv=False)
    if np.any((sig >= RANK_AMBIG) & (sig < RANK_TOL)):
        raise ConditioningError(
            f"singular value in the ambiguous band [{RANK_AMBIG}, {RANK_TOL}]")
    _, _, Wt = np.linalg.svd(R, full_matrices=True)
    null = V @ Wt[sig < RANK_AMBIG].T
    if null.shape[1] == 0:
        raise ConditioningError("commutant is empty; the identity should always be present")
    return null


def commutant_basis(d: ModularDatum) -> CommutantBasis:
    """Reduced basis of the S-commutant restricted to the equal-T-phase support.

    Pivot columns are chosen in order of increasing entry bound, so the
    integer search that follows runs over the smallest boxes available.
    """
    cells = t_support_cells(d)
    bounds = entry_bounds(d, cells)
    null = _null_space_on_cells(d, cells)
    dim = null.shape[1]

    B = np.ascontiguousarray(null.T)
    order = np.argsort(bounds, kind="stable")
    piv_cols = []
    r = 0
    for col in order:
        if r == dim:
            break
        amax = r + int(np.argmax(np.abs(B[r:, col])))
        if abs(B[amax, col]) < 1e-8:
            continue
        B[[r, amax]] = B[[amax, r]]
        B[r] /= B[r, col]
        for rr in range(dim):
            if rr != r and B[rr, col] != 0.0:
                B[rr] -= B[rr, col] * B[r]
        piv_cols.append(int(col))
        r += 1
    if r < dim:
        raise ConditioningError("commutant basis could not be reduced to pivot form")

    n = d.n
    mats = np.zeros((dim, n, n))
    ci = np.array([c[0] for c in cells])
    cj = np.array([c[1] for c in cells])
    for idx in range(dim):
        mats[idx][ci, cj] = B[idx]
        res = np.abs(mats[idx] @ d.S - d.S @ mats[idx]).max()
        if res >= COMMUTE_TOL:
            raise ConditioningError(f"reduced basis element {idx} has commutator residual {res:.3g}")
    mats.setflags(write=False)
    B.setflags(write=False)

    support = tuple((d.labels[i], d.labels[j]) for i, j in cells)
    pivots = tuple((d.labels[cells[c][0]], d.labels[cells[c][1]]) for c in piv_cols)
    return CommutantBasis(support=support, basis=mats, pivots=pivots,
                          cells=tuple(cells), pivot_cells=tuple(piv_cols), reduced=B)


def is_modular_invariant(d: ModularDatum, Z, tol: float = COMMUTE_TOL) -> CheckResult:
    """Check all defining conditions; report the first violated one."""
    Z = np.asarray(Z)
    n = d.n
    if Z.shape != (n, n):
        raise ValueError(f"expected a {n} x {n} matrix, got shape {Z.shape}")
    if not np.issubdtype(Z.dtype, np.integer):
        if np.abs(Z - np.rint(Z)).max() > RESIDUE_TOL:
            return CheckResult(False, "entries are not integers")
        Z = np.rint(Z).astype(np.int64)
    if Z.min() < 0:
        i, j = np.unravel_index(int(np.argmin(Z)), Z.shape)
        return CheckResult(False, f"negative entry at ({d.labels[i]}, {d.labels[j]})")
    if Z[0, 0] != 1:
        return CheckResult(False, f"normalization: Z_00 = {Z[0, 0]}, expected 1")
    for i in range(n):
        for j in range(n):
            if Z[i, j] != 0 and d.t[i] != d.t[j]:
                return CheckResult(False, f"T-support at ({d.labels[i]}, {d.labels[j]})")
    res = np.abs(Z @ d.S - d.S @ Z).max()
    if res >= tol:
        return CheckResult(False, f"S-commutation residual {res:.3g}")
    s0 = d.S[0]
    for i in range(n):
        for j in range(n):
            bound = int(1.0 / (s0[i] * s0[j]) + 1e-9)
            if Z[i, j] > bound:
                return CheckResult(
                    False, f"entry bound at ({d.labels[i]}, {d.labels[j]}): "
                           f"{Z[i, j]} > {bound}")
    return CheckResult(True)


def _enumerate_chunk(args):
    """One first-pivot-value slice of the pivot search (parallel worker)."""
    v0, w, bounds, budget = args
    rest = enumerate_simplex(w[1:], bounds[1:], budget - w[0] * v0)
    full = np.empty((len(rest), len(w)), dtype=np.int64)
    full[:, 0] = v0
    full[:, 1:] = rest
    return full


def _pivot_candidates(w, bounds, budget, workers):
    if workers <= 1 or len(w) <= 1:
        return enumerate_simplex(w, bounds, budget)
    values = [v for v in range(int(bounds[0]) + 1) if w[0] * v <= budget]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_enumerate_chunk,
                              [(v, w, bounds, budget) for v in values]))
    return np.concatenate(parts, axis=0)


def enumerate_invariants(d: ModularDatum, workers: int | None = None) -> list[ModularInvariant]:
    """All modular invariants of d, sorted lexicographically by flattened Z.

    Integer backtracking over the pivot coordinates of the commutant basis,
    bounded per entry and pruned by sum S_0i S_0j Z_ij <= 1; candidates are
    reconstructed from the reduced basis and kept iff every defining
    condition holds.  workers > 1 splits the search over first-pivot values
    (default from MMK_WORKERS; the result is identical for any count).
    """
    if workers is None:
        workers = int(os.environ.get("MMK_WORKERS", "1"))
    cb = commutant_basis(d)
    bounds = entry_bounds(d, cb.cells)
    s0 = d.S[0]
    w = np.array([s0[i] * s0[j] for i, j in cb.cells])
    piv = np.array(cb.pivot_cells, dtype=np.intp)
    budget = 1.0 + 1e-9

    cand = _pivot_candidates(w[piv], bounds[piv], budget, workers)
    flat = cand.astype(np.float64) @ cb.reduced
    residue = np.abs(flat - np.rint(flat)).max(axis=1) if len(flat) else np.empty(0)
    n = d.n
    out = []
    seen = set()
    for row, bad in zip(np.rint(flat).astype(np.int64), residue > RESIDUE_TOL):
        if bad or row.min() < 0:
            continue
        Z = np.zeros((n, n), dtype=np.int64)
        for (i, j), v in zip(cb.cells, row):
            Z[i, j] = v
        if not is_modular_invariant(d, Z):
            continue
        key = Z.tobytes()
        if key not in seen:
            seen.add(key)
            out.append(Z)
    out.sort(key=lambda Z: Z.ravel().tolist())
    return [ModularInvariant(d.algebra, d.param, d.labels, Z) for Z in out]


def oracle_instance(d: ModularDatum):
    """Search arrays for the exhaustive check: per-cell weights and bounds plus
    the commutator constraint rows in CSR form, grouped by last-touched cell."""
    cells = t_support_cells(d)
    ncells = len(cells)
    bounds = entry_bounds(d, cells)
    s0 = d.S[0]
    S = d.S
    n = d.n
    w = np.array([s0[i] * s0[j] for i, j in cells])
    ci = np.array([c[0] for c in cells])
    cj = np.array([c[1] for c in cells])

    rows = []
    for a in range(n):
        for b in range(n):
            coef = np.zeros(ncells)
            coef[ci == a] += S[cj[ci == a], b]
            coef[cj == b] -= S[a, ci[cj == b]]
            nz = np.nonzero(np.abs(coef) > 1e-14)[0]
            if len(nz):
                rows.append((int(nz.max()), nz.astype(np.int32), coef[nz]))
    rows.sort(key=lambda r: r[0])
    depths = np.array([r[0] for r in rows])
    grp_ptr = np.searchsorted(depths, np.arange(ncells + 1), side="left").astype(np.int32)
    row_ptr = np.concatenate([[0], np.cumsum([len(r[1]) for r in rows])]).astype(np.int32)
    ent_cell = (np.concatenate([r[1] for r in rows]) if rows
                else np.empty(0, dtype=np.int32)).astype(np.int32)
    ent_coef = (np.concatenate([r[2] for r in rows]) if rows else np.empty(0))
    return w, bounds, grp_ptr, row_ptr, ent_cell, ent_coef, ci, cj


def brute_force_invariants(d: ModularDatum, max_nodes: int = 10**9) -> list[ModularInvariant]:
    """Independent exhaustive search, for cross-checking enumerate_invariants.

    Runs over every integer assignment on the equal-T-phase support within
    the entry bounds and the simplex budget, pruning with each commutator
    constraint row as soon as the cells it touches are all assigned; every
    survivor is still validated in full.  Shares no linear algebra with the
    basis-driven path.
    """
    w, bounds, grp_ptr, row_ptr, ent_cell, ent_coef, ci, cj = oracle_instance(d)
    n = d.n
    sols = search_support(w, bounds, 1.0 + 1e-9, grp_ptr, row_ptr, ent_cell,
                          ent_coef, ORACLE_ROW_TOL, max_nodes)
    out = []
    for row in sols:
        Z = np.zeros((n, n), dtype=np.int64)
        Z[ci, cj] = row
        if is_modular_invariant(d, Z):
            out.append(Z)
    out.sort(key=lambda Z: Z.ravel().tolist())
    return [ModularInvariant(d.algebra, d.param, d.labels, Z) for Z in out]


def invariant_to_json(inv: ModularInvariant) -> dict:
    """JSON form: {"algebra": {...}, "labels": [...], "Z": [[...]]}."""
    if inv.algebra == "su2":
        algebra = {"type": "su2", "level": inv.param}
        labels = list(inv.labels)
    else:
        algebra = {"type": "minimal", "m": inv.param}
        labels = [list(lab) for lab in inv.labels]
    return {"algebra": algebra, "labels": labels, "Z": inv.Z.tolist()}


def invariant_from_json(obj: dict) -> tuple[ModularDatum, np.ndarray]:
    """Parse the JSON form back into the datum it lives on and the matrix Z."""
    algebra = obj["algebra"]
    if algebra["type"] == "su2":
        d = su2_data(int(algebra["level"]))
    elif algebra["type"] == "minimal":
        d = minimal_data(int(algebra["m"]))
    else:
        raise ValueError(f"unknown algebra type {algebra['type']!r}")
    Z = np.asarray(obj["Z"])
    if Z.shape != (d.n, d.n):
        raise ValueError(f"Z has shape {Z.shape}, expected ({d.n}, {d.n})")
    if np.abs(Z - np.rint(Z)).max() > 0:
        raise IntegralityError("Z entries must be integers")
    return d, np.rint(Z).astype(np.int64)
