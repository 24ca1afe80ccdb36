"""Local extensions of SU(2)_k and of the c < 1 Virasoro nets.

Each classification entry packages the invariant Z with the data attached to
the corresponding extension: theta (the vacuum row of Z), the extension index
(sum of quantum dimensions over theta), the mu-index of the extended theory,
the four sector counts, the type I flag, and the subnet count.  Sector counts
are computed two ways (from the matrix and from the per-diagram constants)
and must agree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ade import (A, D, E, DynkinDiagram, SectorCounts, diagrams_with_coxeter,
                  is_type_I, minimal_invariant, su2_invariant)
from .errors import ClassificationError
from .fusion import mu_index, qdims
from .invariants import ModularInvariant
from .modular_data import minimal_data, su2_data, weight

INDEX_TOL = 1e-9

E8_INDEX_SYMBOL = "sqrt(30-6*sqrt(5))/(2*sin(pi/30))"


@dataclass(frozen=True)
class ClassificationEntry:
    """One extension: the diagram (pair), its invariant, and derived data."""

    algebra: str
    param: int
    pair: tuple
    invariant: ModularInvariant
    theta: tuple
    index: float
    index_symbolic: str | None
    mu_extension: float
    counts: SectorCounts
    type_I: bool
    subnets: int | None

    @property
    def pair_name(self):
        if len(self.pair) == 1:
            return self.pair[0].name
        return f"({self.pair[0].name},{self.pair[1].name})"


def _index_symbol(pair):
    kinds = {G.kind for G in pair}
    ranks = {G.rank for G in pair if G.kind == "E"}
    if kinds == {"A"}:
        return "1"
    if "D" in kinds:
        return "2"
    if 6 in ranks:
        return "3+sqrt(3)"
    if 8 in ranks:
        return E8_INDEX_SYMBOL
    return None


def _theta(inv: ModularInvariant) -> tuple:
    out = []
    for j, mult in enumerate(inv.Z[0]):
        out.extend([inv.labels[j]] * int(mult))
    return tuple(out)


def _counts_checked(inv, pair, type_i, blocks) -> SectorCounts:
    Z = inv.Z
    ab = int(np.trace(Z))
    full = int(np.trace(Z @ Z.T))
    if len(pair) == 1:
        c = pair[0].counts
        if (ab, full) != (c.ab, c.full):
            raise ClassificationError(
                f"{pair[0]}: matrix gives (ab, full) = {(ab, full)}, "
                f"constants give {(c.ab, c.full)}")
        chiral, ambi = c.chiral, c.ambichiral
    else:
        cg, cgp = pair[0].counts, pair[1].counts
        if (2 * ab, 2 * full) != (cg.ab * cgp.ab, cg.full * cgp.full):
            raise ClassificationError(
                f"({pair[0]},{pair[1]}): matrix gives (ab, full) = {(ab, full)}, "
                f"constants give {(cg.ab * cgp.ab // 2, cg.full * cgp.full // 2)}")
        chiral = cg.chiral * cgp.chiral // 2
        ambi = cg.ambichiral * cgp.ambichiral // 2
    if type_i:
        if chiral != ab:
            raise ClassificationError(f"type I entry with chiral {chiral} != tr Z {ab}")
        if blocks is not None and len(blocks) != ambi:
            raise ClassificationError(
                f"type I entry with {len(blocks)} blocks, ambichiral {ambi}")
    return SectorCounts(ab, full, chiral, ambi)


def _subnets(pair, m):
    kinds = {G.kind for G in pair}
    ranks = {G.rank for G in pair if G.kind == "E"}
    if kinds == {"A"}:
        return 1
    if 8 in ranks:
        s = 3
    else:
        s = 2
    if s == 2 and not (m % 4 in (1, 2) or m in (11, 12)):
        raise ClassificationError(f"s = 2 entry at m = {m} outside its m-conditions")
    if s == 3 and m not in (29, 30):
        raise ClassificationError(f"s = 3 entry at m = {m} outside its m-conditions")
    return s


def _make_entry(d, pair, inv, expect_type_I) -> ClassificationEntry:
    type_i, blocks = is_type_I(inv)
    if type_i != expect_type_I:
        raise ClassificationError(
            f"{'/'.join(G.name for G in pair)} at {d.algebra} {d.param}: "
            f"type I test returned {type_i}")
    counts = _counts_checked(inv, pair, type_i, blocks)
    theta = _theta(inv)
    if theta.count(d.labels[0]) != 1:
        raise ClassificationError("theta must contain the vacuum exactly once")
    dims = qdims(d)
    pos = {lab: i for i, lab in enumerate(d.labels)}
    index = float(sum(dims[pos[lab]] for lab in theta))
    mu = mu_index(d)
    subnets = None
    if d.algebra == "minimal" and type_i:
        subnets = _subnets(pair, d.param)
    return ClassificationEntry(
        algebra=d.algebra, param=d.param, pair=pair, invariant=inv,
        theta=theta, index=index,
        index_symbolic=_index_symbol(pair) if type_i else None,
        mu_extension=mu / index**2, counts=counts, type_I=type_i,
        subnets=subnets)


def classify_su2(k: int) -> list[ClassificationEntry]:
    """Local extensions of SU(2)_k: A always, D at k = 0 mod 4, E6 at 10, E8 at 28."""
    if k < 1:
        raise ValueError("level must be >= 1")
    d = su2_data(k)
    diagrams = [A(k + 1)]
    if k >= 4 and k % 4 == 0:
        diagrams.append(D(k // 2 + 2))
    if k == 10:
        diagrams.append(E(6))
    elif k == 28:
        diagrams.append(E(8))
    return [_make_entry(d, (G,), su2_invariant(G, k), True) for G in diagrams]


def _type_I_pairs(m):
    pairs = [(A(m - 1), A(m))]
    if m % 4 == 1:
        pairs.append((A(m - 1), D((m - 1) // 2 + 2)))
    elif m % 4 == 2:
        pairs.append((D(m // 2 + 1), A(m)))
    if m == 11:
        pairs.append((A(10), E(6)))
    elif m == 12:
        pairs.append((E(6), A(12)))
    elif m == 29:
        pairs.append((A(28), E(8)))
    elif m == 30:
        pairs.append((E(8), A(30)))
    return sorted(pairs)


def _type_II_pairs(m):
    pairs = []
    if m % 4 == 0 and m >= 8:
        pairs.append((D(m // 2 + 1), A(m)))
    elif m % 4 == 3 and m >= 7:
        pairs.append((A(m - 1), D((m + 1) // 2 + 1)))
    if m == 17:
        pairs.append((A(16), E(7)))
    elif m == 18:
        pairs.append((E(7), A(18)))
    return sorted(pairs)


def classify_minimal(m: int) -> list[ClassificationEntry]:
    """Local extensions of the Virasoro net at m: one entry per type I pair."""
    if m < 3:
        raise ValueError("m must be >= 3")
    d = minimal_data(m)
    return [_make_entry(d, pair, minimal_invariant(pair[0], pair[1], m), True)
            for pair in _type_I_pairs(m)]


def classify_minimal_type_II(m: int) -> list[ClassificationEntry]:
    """Non-local (relatively local) extensions at m: D_odd and E7 pairs."""
    if m < 3:
        raise ValueError("m must be >= 3")
    d = minimal_data(m)
    return [_make_entry(d, pair, minimal_invariant(pair[0], pair[1], m), False)
            for pair in _type_II_pairs(m)]


def extension_index(e: ClassificationEntry) -> float:
    """Sum of quantum dimensions over theta, recomputed from the datum."""
    d = su2_data(e.param) if e.algebra == "su2" else minimal_data(e.param)
    dims = qdims(d)
    pos = {lab: i for i, lab in enumerate(d.labels)}
    return float(sum(dims[pos[lab]] for lab in e.theta))


def mu_of_extension(e: ClassificationEntry) -> float:
    """mu-index of the extended net: mu of the base datum divided by index^2."""
    d = su2_data(e.param) if e.algebra == "su2" else minimal_data(e.param)
    return mu_index(d) / e.index**2


def sector_counts(e: ClassificationEntry) -> SectorCounts:
    """(tr Z, tr ZZ^T, chiral, ambichiral), revalidated against the constants."""
    type_i, blocks = is_type_I(e.invariant)
    return _counts_checked(e.invariant, e.pair, type_i, blocks)


def simple_current_locality(m: int) -> tuple[int, bool]:
    """Statistics phase of the order-2 sector (m-1, 1) and whether it is local.

    The phase is exp(pi i (m-1)(m-2)/2) evaluated by exact parity, and must
    agree with exp(2 pi i h) for h = weight(m, m-1, 1); locality means +1,
    equivalent to m = 1, 2 mod 4.
    """
    if m < 3:
        raise ValueError("m must be >= 3")
    phase = -1 if ((m - 1) * (m - 2) // 2) % 2 else 1
    r = weight(m, m - 1, 1) % 1
    if r == 0:
        alt = 1
    elif 2 * r == 1:
        alt = -1
    else:
        raise ClassificationError(f"sector (m-1, 1) at m = {m} has non-real phase")
    if alt != phase:
        raise ClassificationError(f"phase parity mismatch at m = {m}")
    local = phase == 1
    if local != (m % 4 in (1, 2)):
        raise ClassificationError(f"locality parity mismatch at m = {m}")
    return phase, local


def subnet_count(e: ClassificationEntry) -> int:
    """Number of intermediate subnets: 1 for (A,A), 2 for D/E6 pairs, 3 for E8."""
    if e.algebra != "minimal" or not e.type_I:
        raise ValueError("subnet counts apply to local minimal-model extensions only")
    return _subnets(e.pair, e.param)
