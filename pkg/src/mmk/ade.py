"""A-D-E diagram data, the named invariant matrices, diagonal labeling, and
the type I (block-diagonal) test.

Each diagram carries its Coxeter number, exponent multiset, and the four
sector-count constants (ab, full, chiral, ambichiral).  Invariants are
labeled by matching diagonal multiplicities against exponents; whether an
invariant is type I is decided by searching for an exact Gram factorization
Z = sum_i b_i b_i^T into non-negative integer block vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import LabelingError, UndecidedError
from .invariants import ModularInvariant
from .modular_data import minimal_labels

GRAM_BUDGET = 10**6


class SectorCounts(NamedTuple):
    ab: int
    full: int
    chiral: int
    ambichiral: int


@dataclass(frozen=True, order=True)
class DynkinDiagram:
    """One of the simply laced diagrams A_n, D_n (n >= 3), E_6, E_7, E_8."""

    kind: str
    rank: int

    def __post_init__(self):
        if self.kind not in ("A", "D", "E"):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == "A" and self.rank < 1:
            raise ValueError("A_n needs n >= 1")
        if self.kind == "D" and self.rank < 3:
            raise ValueError("D_n needs n >= 3")
        if self.kind == "E" and self.rank not in (6, 7, 8):
            raise ValueError("E_n needs n in {6, 7, 8}")

    @property
    def name(self):
        return f"{self.kind}{self.rank}"

    def __str__(self):
        return self.name

    @property
    def coxeter(self):
        if self.kind == "A":
            return self.rank + 1
        if self.kind == "D":
            return 2 * self.rank - 2
        return {6: 12, 7: 18, 8: 30}[self.rank]

    @property
    def exponents(self):
        """Exponent multiset, sorted; for D_even the middle value appears twice."""
        if self.kind == "A":
            return tuple(range(1, self.rank + 1))
        if self.kind == "D":
            exps = list(range(1, 2 * self.rank - 2, 2)) + [self.rank - 1]
            return tuple(sorted(exps))
        return {6: (1, 4, 5, 7, 8, 11),
                7: (1, 5, 7, 9, 11, 13, 17),
                8: (1, 7, 11, 13, 17, 19, 23, 29)}[self.rank]

    @property
    def counts(self):
        """(ab, full, chiral, ambichiral) sector-count constants."""
        if self.kind == "A":
            n = self.rank
            return SectorCounts(n, n, n, n)
        if self.kind == "D":
            if self.rank % 2 == 0:
                n = (self.rank - 2) // 2          # D_{2n+2}
                return SectorCounts(2 * n + 2, 4 * n + 4, 2 * n + 2, n + 2)
            n = (self.rank - 1) // 2              # D_{2n+1}
            return SectorCounts(2 * n + 1, 4 * n - 1, 4 * n - 1, 4 * n - 1)
        return {6: SectorCounts(6, 12, 6, 3),
                7: SectorCounts(7, 17, 10, 6),
                8: SectorCounts(8, 32, 8, 2)}[self.rank]


def A(n):
    return DynkinDiagram("A", n)


def D(n):
    return DynkinDiagram("D", n)


def E(n):
    return DynkinDiagram("E", n)


def diagrams_with_coxeter(h: int) -> list[DynkinDiagram]:
    """All diagrams with Coxeter number h, in A, D, E order."""
    if h < 2:
        raise ValueError("Coxeter number must be >= 2")
    out = [A(h - 1)]
    if h % 2 == 0 and h >= 6:
        out.append(D(h // 2 + 1))
    if h == 12:
        out.append(E(6))
    elif h == 18:
        out.append(E(7))
    elif h == 30:
        out.append(E(8))
    return out


def _su2_matrix(G: DynkinDiagram, k: int) -> np.ndarray:
    if G.coxeter != k + 2:
        raise ValueError(f"{G} has Coxeter number {G.coxeter}, level {k} needs {k + 2}")
    n = k + 1
    Z = np.zeros((n, n), dtype=np.int64)
    if G.kind == "A":
        np.fill_diagonal(Z, 1)
    elif G.kind == "D":
        if k < 4:
            raise ValueError(f"{G} is not constructible at level {k}")
        if k % 4 == 0:
            for a in range(0, k // 2, 2):
                for x in (a, k - a):
                    for y in (a, k - a):
                        Z[x, y] += 1
            Z[k // 2, k // 2] = 2
        else:
            for a in range(0, n, 2):
                Z[a, a] = 1
            for a in range(1, n, 2):
                Z[a, k - a] = 1
    elif G.rank == 6:
        for block in ((0, 6), (3, 7), (4, 10)):
            for x in block:
                for y in block:
                    Z[x, y] += 1
    elif G.rank == 7:
        for block in ((0, 16), (4, 12), (6, 10), (8,)):
            for x in block:
                for y in block:
                    Z[x, y] += 1
        for a in (2, 14):
            Z[a, 8] += 1
            Z[8, a] += 1
    else:
        for block in ((0, 10, 18, 28), (6, 12, 16, 22)):
            for x in block:
                for y in block:
                    Z[x, y] += 1
    return Z


def su2_invariant(G: DynkinDiagram, k: int) -> ModularInvariant:
    """The named invariant of SU(2)_k: A identity, D block/permutation, E block."""
    Z = _su2_matrix(G, k)
    return ModularInvariant("su2", k, tuple(range(k + 1)), Z)


def minimal_invariant(G: DynkinDiagram, Gp: DynkinDiagram, m: int) -> ModularInvariant:
    """Invariant of the minimal model at m from the pair (G, G').

    Product of the two su2 invariants at levels m-2 and m-1, folded through
    the label identification (p, q) ~ (m-p, m+1-q):
    Z_{(p,q),(p',q')} = X_{p-1,p'-1} Y_{q-1,q'-1} + X_{m-p-1,p'-1} Y_{m-q,q'-1}.
    """
    if G.coxeter != m:
        raise ValueError(f"{G} has Coxeter number {G.coxeter}, expected m = {m}")
    if Gp.coxeter != m + 1:
        raise ValueError(f"{Gp} has Coxeter number {Gp.coxeter}, expected m + 1 = {m + 1}")
    X = _su2_matrix(G, m - 2)
    Y = _su2_matrix(Gp, m - 1)
    labels = minimal_labels(m)
    n = len(labels)
    Z = np.zeros((n, n), dtype=np.int64)
    for i, (p, q) in enumerate(labels):
        for j, (pp, qq) in enumerate(labels):
            Z[i, j] = (X[p - 1, pp - 1] * Y[q - 1, qq - 1]
                       + X[m - p - 1, pp - 1] * Y[m - q, qq - 1])
    return ModularInvariant("minimal", m, labels, Z)


def _match_exact(multiset: dict, G: DynkinDiagram) -> bool:
    exps = {}
    for e in G.exponents:
        exps[e] = exps.get(e, 0) + 1
    return multiset == exps


def _match_proportional(multiset: dict, G: DynkinDiagram) -> bool:
    """multiset == lambda * Exp(G) for a single positive ratio lambda."""
    exps = {}
    for e in G.exponents:
        exps[e] = exps.get(e, 0) + 1
    if set(multiset) != set(exps):
        return False
    lam = None
    for e, mult in exps.items():
        if lam is None:
            lam = (multiset[e], mult)
        elif multiset[e] * lam[1] != lam[0] * mult:
            return False
    return lam is not None and lam[0] > 0


def label_invariant(inv: ModularInvariant):
    """Name an invariant from its diagonal: a diagram (su2) or a pair (minimal).

    su2 at level k: the multiset {a+1 with multiplicity Z_aa} must equal the
    exponents of exactly one diagram with Coxeter number k+2.  Minimal at m:
    the diagonal classes, unfolded to both representatives, project onto p
    and q multisets proportional to the exponents of a unique diagram pair
    with Coxeter numbers m and m+1.
    """
    Z = inv.Z
    if inv.algebra == "su2":
        k = inv.param
        diag = {}
        for a in range(k + 1):
            if Z[a, a]:
                diag[a + 1] = diag.get(a + 1, 0) + int(Z[a, a])
        matches = [G for G in diagrams_with_coxeter(k + 2) if _match_exact(diag, G)]
        if len(matches) != 1:
            raise LabelingError(f"diagonal matches {len(matches)} diagrams at level {k}")
        return matches[0]

    m = inv.param
    pmult, qmult = {}, {}
    for i, (p, q) in enumerate(inv.labels):
        c = int(Z[i, i])
        if c:
            for pp in (p, m - p):
                pmult[pp] = pmult.get(pp, 0) + c
            for qq in (q, m + 1 - q):
                qmult[qq] = qmult.get(qq, 0) + c
    left = [G for G in diagrams_with_coxeter(m) if _match_proportional(pmult, G)]
    right = [G for G in diagrams_with_coxeter(m + 1) if _match_proportional(qmult, G)]
    if len(left) != 1 or len(right) != 1:
        raise LabelingError(
            f"diagonal matches {len(left)} x {len(right)} diagram pairs at m = {m}")
    return left[0], right[0]


def _gram_factor(R: np.ndarray, budget: list) -> list | None:
    """Extract block vectors with R = sum b b^T, b >= 0 integer, or None.

    The first block must cover the first row with a nonzero diagonal; entries
    are capped by sqrt of the diagonal and by divisibility of row i0.  A row
    with zero diagonal but nonzero entries kills the branch outright.
    """
    n = len(R)
    diag = np.diagonal(R)
    zero_diag = diag == 0
    if np.any(R[zero_diag].any(axis=1)):
        return None
    nz = np.nonzero(diag)[0]
    if len(nz) == 0:
        return []
    i0 = int(nz[0])
    support = [int(j) for j in np.nonzero(R[i0])[0]]
    caps = {j: math.isqrt(int(R[j, j])) for j in support}

    def candidates(v0):
        idx = [j for j in support if j != i0]
        b = np.zeros(n, dtype=np.int64)
        b[i0] = v0
        def rec(pos):
            if pos == len(idx):
                yield b.copy()
                return
            j = idx[pos]
            top = min(int(R[i0, j]) // v0, caps[j])
            for v in range(top, -1, -1):
                b[j] = v
                yield from rec(pos + 1)
            b[j] = 0
        yield from rec(0)

    for v0 in range(1, math.isqrt(int(R[i0, i0])) + 1):
        for b in candidates(v0):
            budget[0] -= 1
            if budget[0] < 0:
                raise UndecidedError(f"Gram factorization exceeded {GRAM_BUDGET} nodes")
            Rp = R - np.outer(b, b)
            if Rp.min() < 0:
                continue
            rest = _gram_factor(Rp, budget)
            if rest is not None:
                return [b] + rest
    return None


def is_type_I(inv: ModularInvariant):
    """Decide Z = sum_i b_i b_i^T over non-negative integer block vectors.

    Returns (True, blocks) with each block a tuple of labels repeated by
    coefficient, or (False, None).  The vacuum lands in exactly one block
    with coefficient 1 since Z_00 = 1.
    """
    Z = np.asarray(inv.Z, dtype=np.int64)
    diag = np.diagonal(Z)
    if np.any(Z[diag == 0].any(axis=1)):
        return False, None
    budget = [GRAM_BUDGET]
    factors = _gram_factor(Z, budget)
    if factors is None:
        return False, None
    blocks = []
    for b in factors:
        members = []
        for i in np.nonzero(b)[0]:
            members.extend([inv.labels[int(i)]] * int(b[i]))
        blocks.append(tuple(members))
    return True, tuple(blocks)
