import numpy as np
import pytest

from mmk import (A, D, DynkinDiagram, E, LabelingError, ModularInvariant,
                 UndecidedError, diagrams_with_coxeter, enumerate_invariants,
                 is_modular_invariant, is_type_I, label_invariant,
                 minimal_invariant, su2_invariant)


def test_diagram_names_and_coxeter():
    assert A(5).name == "A5" and A(5).coxeter == 6
    assert D(4).coxeter == 6 and D(7).coxeter == 12
    assert E(6).coxeter == 12 and E(7).coxeter == 18 and E(8).coxeter == 30
    assert str(D(10)) == "D10"


def test_diagram_exponents():
    assert A(4).exponents == (1, 2, 3, 4)
    assert D(4).exponents == (1, 3, 3, 5)
    assert D(5).exponents == (1, 3, 4, 5, 7)
    assert D(6).exponents == (1, 3, 5, 5, 7, 9)
    assert E(6).exponents == (1, 4, 5, 7, 8, 11)
    assert E(7).exponents == (1, 5, 7, 9, 11, 13, 17)
    assert E(8).exponents == (1, 7, 11, 13, 17, 19, 23, 29)
    for G in (A(9), D(8), D(9), E(7)):
        assert len(G.exponents) == G.rank
        assert all(1 <= e < G.coxeter for e in G.exponents)


def test_diagram_counts():
    assert tuple(A(7).counts) == (7, 7, 7, 7)
    assert tuple(D(4).counts) == (4, 8, 4, 3)
    assert tuple(D(6).counts) == (6, 12, 6, 4)
    assert tuple(D(5).counts) == (5, 7, 7, 7)
    assert tuple(D(7).counts) == (7, 11, 11, 11)
    assert tuple(E(6).counts) == (6, 12, 6, 3)
    assert tuple(E(7).counts) == (7, 17, 10, 6)
    assert tuple(E(8).counts) == (8, 32, 8, 2)


def test_diagram_validation():
    for kind, rank in [("A", 0), ("D", 2), ("E", 5), ("E", 9), ("F", 4)]:
        with pytest.raises(ValueError):
            DynkinDiagram(kind, rank)


def test_diagram_ordering():
    assert A(2) < A(3) < D(3) < E(6)
    assert A(2) == DynkinDiagram("A", 2)


def test_diagrams_with_coxeter():
    assert diagrams_with_coxeter(5) == [A(4)]
    assert diagrams_with_coxeter(6) == [A(5), D(4)]
    assert diagrams_with_coxeter(12) == [A(11), D(7), E(6)]
    assert diagrams_with_coxeter(18) == [A(17), D(10), E(7)]
    assert diagrams_with_coxeter(30) == [A(29), D(16), E(8)]
    assert diagrams_with_coxeter(4) == [A(3)]


def test_su2_invariant_matrices(su2):
    assert np.array_equal(su2_invariant(A(5), 4).Z, np.eye(5, dtype=np.int64))
    Zd = su2_invariant(D(4), 4).Z
    assert Zd[0, 4] == Zd[4, 0] == 1 and Zd[2, 2] == 2
    assert int(np.trace(Zd)) == 4
    for G, k in [(D(4), 4), (D(5), 6), (E(6), 10), (E(7), 16), (E(8), 28)]:
        d = su2(k)
        assert is_modular_invariant(d, su2_invariant(G, k).Z)


def test_su2_invariant_coxeter_mismatch():
    with pytest.raises(ValueError):
        su2_invariant(D(5), 4)
    with pytest.raises(ValueError):
        su2_invariant(E(6), 12)


def test_minimal_invariant_is_invariant(minimal):
    for m, G, Gp in [(5, A(4), D(4)), (6, D(4), A(6)), (11, A(10), E(6)),
                     (17, A(16), E(7))]:
        assert is_modular_invariant(minimal(m), minimal_invariant(G, Gp, m).Z)


@pytest.mark.parametrize("G,k", [
    (A(3), 2), (A(11), 10), (D(4), 4), (D(6), 8), (D(7), 10),
    (E(6), 10), (E(7), 16), (E(8), 28),
])
def test_label_round_trip_su2(G, k):
    assert label_invariant(su2_invariant(G, k)) == G


@pytest.mark.parametrize("pair,m", [
    ((A(4), A(5)), 5), ((A(4), D(4)), 5), ((D(4), A(6)), 6),
    ((A(10), E(6)), 11), ((E(6), A(12)), 12), ((A(16), E(7)), 17),
    ((D(5), A(8)), 8),
])
def test_label_round_trip_minimal(pair, m):
    assert label_invariant(minimal_invariant(*pair, m)) == pair


def test_label_enumerated_invariants(su2):
    d = su2(10)
    names = sorted(label_invariant(inv).name for inv in enumerate_invariants(d))
    assert names == ["A11", "D7", "E6"]


def test_label_rejects_unmatchable_diagonal(su2):
    d = su2(4)
    Z = np.diag([1, 0, 1, 0, 2]).astype(np.int64)
    with pytest.raises(LabelingError):
        label_invariant(ModularInvariant("su2", 4, d.labels, Z))


def test_is_type_I_su2():
    assert is_type_I(su2_invariant(A(6), 5)) == (True, ((0,), (1,), (2,), (3,), (4,), (5,)))
    assert is_type_I(su2_invariant(D(4), 4)) == (True, ((0, 4), (2,), (2,)))
    assert is_type_I(su2_invariant(E(6), 10)) == (True, ((0, 6), (3, 7), (4, 10)))
    assert is_type_I(su2_invariant(E(8), 28)) == \
        (True, ((0, 10, 18, 28), (6, 12, 16, 22)))
    assert is_type_I(su2_invariant(D(5), 6)) == (False, None)
    assert is_type_I(su2_invariant(E(7), 16)) == (False, None)


def test_is_type_I_minimal():
    ok, blocks = is_type_I(minimal_invariant(A(10), E(6), 11))
    assert ok and len(blocks) == 15
    ok, blocks = is_type_I(minimal_invariant(A(16), E(7), 17))
    assert not ok and blocks is None


def test_type_I_blocks_reconstruct_Z(minimal):
    m = 12
    inv = minimal_invariant(E(6), A(12), m)
    ok, blocks = is_type_I(inv)
    assert ok
    d = minimal(m)
    Z = np.zeros_like(inv.Z)
    for blk in blocks:
        b = np.zeros(d.n, dtype=np.int64)
        for lab in blk:
            b[d.index_of(lab)] += 1
        Z += np.outer(b, b)
    assert np.array_equal(Z, inv.Z)


def test_gram_budget_raises():
    # a dense all-ones Gram matrix of rank 1 factors instantly, but an
    # adversarial budget of zero nodes must surface as UndecidedError
    from mmk.ade import _gram_factor
    R = np.ones((4, 4), dtype=np.int64)
    assert _gram_factor(R, [10**6]) is not None
    with pytest.raises(UndecidedError):
        _gram_factor(R, [0])
