"""Labels, conformal weights, central charge, and S/T modular data.

Two families are supported: the level k theory with labels 0..k ('su2') and
the c < 1 discrete-series model with Kac labels (p, q) ('minimal').  Weights,
central charges, and T-phases are exact rationals; S matrices are real
double-precision arrays checked against the modular relations at build time.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

# matrix-identity tolerance for S-based checks
S_TOL = 1e-9
# agreement required between the closed-form S and the coset construction
COSET_TOL = 1e-10


def central_charge(m: int) -> Fraction:
    """Central charge 1 - 6/(m(m+1)) of model m, as an exact Fraction."""
    if m < 2:
        raise ValueError(f"central charge needs m >= 2, got m={m}")
    return 1 - Fraction(6, m * (m + 1))


def _check_kac(m: int, p: int, q: int):
    if m < 3:
        raise ValueError(f"Kac labels need m >= 3, got m={m}")
    if not (1 <= p <= m - 1 and 1 <= q <= m):
        raise ValueError(f"label ({p},{q}) out of range for m={m}")


def weight(m: int, p: int, q: int) -> Fraction:
    """Conformal weight h_{p,q} = (((m+1)p - mq)^2 - 1) / (4m(m+1)), exact.

    Invariant under (p, q) -> (m-p, m+1-q), so it is a function of the label
    class, not of the representative.
    """
    _check_kac(m, p, q)
    return Fraction(((m + 1) * p - m * q) ** 2 - 1, 4 * m * (m + 1))


def canonical_label(m: int, p: int, q: int) -> tuple[int, int]:
    """Representative of {(p,q), (m-p, m+1-q)} with smaller flat index (p-1)*m + (q-1)."""
    _check_kac(m, p, q)
    p2, q2 = m - p, m + 1 - q
    if (p - 1) * m + (q - 1) <= (p2 - 1) * m + (q2 - 1):
        return (p, q)
    return (p2, q2)


def minimal_labels(m: int) -> tuple[tuple[int, int], ...]:
    """All m(m-1)/2 canonical Kac labels of model m in flat-index order, vacuum (1,1) first."""
    if m < 3:
        raise ValueError(f"need m >= 3, got m={m}")
    out = []
    for p in range(1, m):
        for q in range(1, m + 1):
            if canonical_label(m, p, q) == (p, q):
                out.append((p, q))
    return tuple(out)


def statistical_phase(m: int, p: int, q: int) -> Fraction:
    """Statistics angle ((m+1)p^2 - mq^2 - 1 + m(m+1)(p-q)^2) / (4m(m+1)) mod 1.

    Equals weight(m, p, q) mod 1 exactly: expanding the (p-q)^2 term collapses
    the numerator to ((m+1)p - mq)^2 - 1, the weight numerator.  Both formulas
    are kept in their printed forms and the identity is pinned by tests.
    """
    _check_kac(m, p, q)
    num = (m + 1) * p * p - m * q * q - 1 + m * (m + 1) * (p - q) ** 2
    return Fraction(num, 4 * m * (m + 1)) % 1


@dataclass(frozen=True)
class ModularDatum:
    """Modular data of one chiral algebra instance.

    algebra is 'su2' (param = level k, labels 0..k) or 'minimal' (param = m,
    labels = canonical Kac pairs).  S is real and symmetric with S^2 = I; the
    per-label T-phase t = h - c/24 mod 1 is an exact Fraction.
    """

    algebra: str
    param: int
    labels: tuple
    S: np.ndarray
    h: tuple
    t: tuple
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "_pos", {lab: i for i, lab in enumerate(self.labels)})

    @property
    def n(self) -> int:
        return len(self.labels)

    def index_of(self, label) -> int:
        """Position of a label (any representative, for minimal data) in the ordering."""
        if self.algebra == "minimal" and label not in self._pos:
            label = canonical_label(self.param, *label)
        return self._pos[label]

    def validate(self, tol: float = S_TOL):
        """Check the modular relations; raises RuntimeError on failure."""
        S = self.S
        n = self.n
        eye = np.eye(n)
        checks = [
            ("S symmetric", np.abs(S - S.T).max()),
            ("S orthogonal", np.abs(S @ S.T - eye).max()),
            ("S squares to the identity", np.abs(S @ S - eye).max()),
        ]
        T = np.exp(2j * np.pi * np.array([float(x) for x in self.t]))
        ST = S * T  # S @ diag(T)
        checks.append(("(ST)^3 = S^2", np.abs(ST @ ST @ ST - eye).max()))
        for name, err in checks:
            if not err < tol:
                raise RuntimeError(f"{self.algebra} param={self.param}: {name} fails, err={err:.3e}")
        if S[0].min() <= 0:
            raise RuntimeError(f"{self.algebra} param={self.param}: vacuum row of S not positive")


def _build(algebra, param, labels, S, h, c) -> ModularDatum:
    t = tuple((x - c / 24) % 1 for x in h)
    S = np.ascontiguousarray(S)
    S.setflags(write=False)
    d = ModularDatum(algebra, param, labels, S, tuple(h), t, c)
    d.validate()
    return d


def su2_data(k: int) -> ModularDatum:
    """Modular datum at level k: S_ab = sqrt(2/(k+2)) sin(pi(a+1)(b+1)/(k+2)), h_a = a(a+2)/(4(k+2))."""
    if k < 1:
        raise ValueError(f"need level k >= 1, got k={k}")
    labels = tuple(range(k + 1))
    a = np.arange(1, k + 2)
    S = np.sqrt(2.0 / (k + 2)) * np.sin(np.pi * np.outer(a, a) / (k + 2))
    h = [Fraction(x * (x + 2), 4 * (k + 2)) for x in labels]
    return _build("su2", k, labels, S, h, Fraction(3 * k, k + 2))


def _minimal_S(m, labels):
    # 2 sqrt(2/(m(m+1))) (-1)^(1+pq'+qp') sin(pi(m+1)pp'/m) sin(pi m qq'/(m+1)),
    # evaluated on canonical representatives; the value is class-invariant.
    p = np.array([lab[0] for lab in labels])
    q = np.array([lab[1] for lab in labels])
    sign = np.where((1 + np.outer(p, q) + np.outer(q, p)) % 2 == 0, 1.0, -1.0)
    return (
        2.0 * np.sqrt(2.0 / (m * (m + 1)))
        * sign
        * np.sin(np.pi * (m + 1) * np.outer(p, p) / m)
        * np.sin(np.pi * m * np.outer(q, q) / (m + 1))
    )


def minimal_data(m: int) -> ModularDatum:
    """Modular datum of model m on its canonical labels."""
    if m < 3:
        raise ValueError(f"need m >= 3, got m={m}")
    labels = minimal_labels(m)
    h = [weight(m, p, q) for p, q in labels]
    return _build("minimal", m, labels, _minimal_S(m, labels), h, central_charge(m))


def minimal_S_coset(m: int) -> np.ndarray:
    """The model-m S matrix built independently from the (m-2, 1, m-1) level triple.

    Labels (p, q) are mapped to triples (j, k, l) = (p-1, q-1, (j-k) mod 2) and
    S is the doubled triple product 2 S^(m-2)_jj' S^(1)_ll' S^(m-1)_kk'.  Must
    agree entrywise with minimal_data(m).S; both representatives of a class
    give the same value because flipping (j, k) flips the sign of the first
    two factors in a way the third compensates.
    """
    if m < 3:
        raise ValueError(f"need m >= 3, got m={m}")
    labels = minimal_labels(m)
    j = np.array([lab[0] - 1 for lab in labels])
    k = np.array([lab[1] - 1 for lab in labels])
    l = (j - k) % 2
    S_top = su2_data(m - 2).S
    S_mid = su2_data(1).S
    S_bot = su2_data(m - 1).S
    return 2.0 * S_top[np.ix_(j, j)] * S_mid[np.ix_(l, l)] * S_bot[np.ix_(k, k)]


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def datum_to_json(d: ModularDatum) -> dict:
    """JSON-ready dict of a datum, labels in canonical order, rationals as 'num/den'."""
    if d.algebra == "su2":
        alg = {"type": "su2", "level": d.param}
        labels = list(d.labels)
    else:
        alg = {"type": "minimal", "m": d.param}
        labels = [list(lab) for lab in d.labels]
    return {
        "algebra": alg,
        "labels": labels,
        "c": _frac_str(d.c),
        "h": [_frac_str(x) for x in d.h],
        "S": [[float(x) for x in row] for row in d.S],
        "t": [_frac_str(x) for x in d.t],
    }
