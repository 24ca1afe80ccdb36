"""Fusion-ring arithmetic: combinatorial rule, Verlinde coefficients, quantum dimensions."""

from dataclasses import dataclass

import numpy as np

from .errors import IntegralityError
from .modular_data import ModularDatum, canonical_label, minimal_labels

# a Verlinde sum farther than this from an integer means a broken S matrix, not noise
VERLINDE_TOL = 1e-6
# agreement required between the S-ratio and the Perron-Frobenius eigenvalue
PF_TOL = 1e-8


def minimal_fusion(m: int, a, b) -> tuple:
    """Fusion product of two Kac classes, as a sorted tuple of canonical labels.

    r runs over |p-p'|+1 .. min(p+p'-1, 2m-p-p'-1) in steps of 2 and s over
    |q-q'|+1 .. min(q+q'-1, 2(m+1)-q-q'-1); the product is multiplicity free,
    which is asserted rather than assumed.  Inputs may be either representative
    of their class; outputs are canonical.
    """
    p, q = canonical_label(m, *a)
    p2, q2 = canonical_label(m, *b)
    out = []
    for r in range(abs(p - p2) + 1, min(p + p2 - 1, 2 * m - p - p2 - 1) + 1, 2):
        for s in range(abs(q - q2) + 1, min(q + q2 - 1, 2 * (m + 1) - q - q2 - 1) + 1, 2):
            out.append(canonical_label(m, r, s))
    if len(set(out)) != len(out):
        raise IntegralityError(f"fusion of {a} x {b} at m={m} is not multiplicity free")
    return tuple(sorted(out))


@dataclass(frozen=True)
class FusionCoefficients:
    """Non-negative integer tensor N[a, b, c] over label positions."""

    labels: tuple
    N: np.ndarray

    def coefficient(self, a: int, b: int, c: int) -> int:
        return int(self.N[a, b, c])

    def matrix(self, a: int) -> np.ndarray:
        """The fusion matrix N_a with entries (N_a)_{bc}."""
        return self.N[a]


def fusion_from_rule(m: int) -> FusionCoefficients:
    """Full coefficient tensor of model m built from the combinatorial rule."""
    labels = minimal_labels(m)
    pos = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    N = np.zeros((n, n, n), dtype=np.int64)
    for i, a in enumerate(labels):
        for j, b in enumerate(labels[: i + 1]):
            for c in minimal_fusion(m, a, b):
                N[i, j, pos[c]] = 1
                N[j, i, pos[c]] = 1
    return FusionCoefficients(labels, N)


def verlinde(d: ModularDatum) -> FusionCoefficients:
    """N_{ab}^c = sum_s S_as S_bs S_cs / S_0s, rounded, with the residue checked.

    Charge conjugation is trivial here (S^2 = I entrywise), so S enters
    unconjugated; that identity is asserted before use.
    """
    S = d.S
    n = d.n
    if np.abs(S @ S - np.eye(n)).max() > 1e-9:
        raise IntegralityError("S^2 is not the identity; conjugation would be nontrivial")
    N = np.empty((n, n, n))
    for a in range(n):
        N[a] = (S * (S[a] / S[0])) @ S
    Nr = np.rint(N)
    resid = np.abs(N - Nr).max()
    if resid >= VERLINDE_TOL:
        raise IntegralityError(f"Verlinde residue {resid:.3e} >= {VERLINDE_TOL}")
    if Nr.min() < 0:
        bad = np.unravel_index(np.argmin(Nr), Nr.shape)
        raise IntegralityError(f"negative Verlinde coefficient at {bad}")
    return FusionCoefficients(d.labels, Nr.astype(np.int64))


def check_ring_axioms(fc: FusionCoefficients):
    """Raise unless N satisfies unit, commutativity, and associativity exactly.

    Associativity sum_s N_ab^s N_sc^d = sum_s N_bc^s N_as^d is checked one
    a-slice at a time (two n x n^2 matmuls per slice), so memory stays at
    O(n^3); coefficients are small integers, exact in double precision.
    """
    N = fc.N
    n = N.shape[0]
    if not np.array_equal(N[0], np.eye(n, dtype=N.dtype)):
        raise IntegralityError("vacuum is not the unit")
    if not np.array_equal(N, N.transpose(1, 0, 2)):
        raise IntegralityError("fusion is not commutative")
    Nf = N.astype(np.float64)
    flat = Nf.reshape(n, n * n)        # s -> (c, d)
    flat2 = Nf.reshape(n * n, n)       # (b, c) -> s
    for a in range(n):
        left = Nf[a] @ flat            # (b, cd): sum_s N_ab^s N_sc^d
        right = flat2 @ Nf[a]          # (bc, d): sum_s N_bc^s N_as^d
        if not np.array_equal(left.reshape(n, n, n), right.reshape(n, n, n)):
            raise IntegralityError(f"fusion is not associative at a={a}")


def qdims(d: ModularDatum) -> np.ndarray:
    """Quantum dimensions S_0a / S_00 for all labels."""
    return d.S[0] / d.S[0, 0]


def qdim(d: ModularDatum, label) -> float:
    """Quantum dimension of one label (any representative, for minimal data)."""
    return float(d.S[0, d.index_of(label)] / d.S[0, 0])


def perron_frobenius_qdim(d: ModularDatum, label, fc: FusionCoefficients | None = None) -> float:
    """Spectral radius of the fusion matrix N_label; equals qdim within PF_TOL."""
    if fc is None:
        fc = verlinde(d)
    ev = np.linalg.eigvals(fc.matrix(d.index_of(label)))
    return float(np.max(np.abs(ev)))


def mu_index(d: ModularDatum) -> float:
    """Global index sum_a qdim(a)^2 = 1 / S_00^2."""
    return float(1.0 / d.S[0, 0] ** 2)


def mu_minimal_closed_form(m: int) -> float:
    """Closed form m(m+1) / (8 sin^2(pi/m) sin^2(pi/(m+1))) for the model-m global index."""
    return m * (m + 1) / (8.0 * np.sin(np.pi / m) ** 2 * np.sin(np.pi / (m + 1)) ** 2)
