import numpy as np
import pytest

from mmk import (ModularInvariant, brute_force_invariants, commutant_basis,
                 enumerate_invariants, invariant_from_json, invariant_to_json,
                 is_modular_invariant)
from mmk.invariants import entry_bounds, t_support_cells

EXPECTED_SU2 = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 2, 9: 1,
                10: 3, 11: 1, 12: 2}
EXPECTED_MINIMAL = {3: 1, 4: 1, 5: 2, 6: 2, 7: 2, 8: 2}


def test_t_support_cells_structure(minimal):
    d = minimal(5)
    cells = t_support_cells(d)
    assert cells == sorted(cells)
    assert all(d.t[i] == d.t[j] for i, j in cells)
    assert all((i, i) in cells for i in range(d.n))
    comp = {(i, j) for i in range(d.n) for j in range(d.n)} - set(cells)
    assert all(d.t[i] != d.t[j] for i, j in comp)


def test_entry_bounds_vacuum_cell(su2):
    d = su2(4)
    cells = t_support_cells(d)
    bounds = entry_bounds(d, cells)
    i = cells.index((0, 0))
    assert bounds[i] == int(1.0 / d.S[0, 0] ** 2 + 1e-9)
    assert bounds.min() >= 1


@pytest.mark.parametrize("algebra,param,dim", [
    ("su2", 1, 1),
    ("su2", 4, 2),
    ("minimal", 5, 2),
])
def test_commutant_dimension(algebra, param, dim, su2, minimal):
    d = su2(param) if algebra == "su2" else minimal(param)
    assert commutant_basis(d).dim == dim


def test_commutant_reduced_form(minimal):
    d = minimal(6)
    cb = commutant_basis(d)
    assert cb.basis.shape == (cb.dim, d.n, d.n)
    assert cb.reduced.shape == (cb.dim, len(cb.cells))
    # pivot columns of the reduced matrix form an identity
    for i in range(cb.dim):
        for j, col in enumerate(cb.pivot_cells):
            assert abs(cb.reduced[i, col] - (1.0 if i == j else 0.0)) < 1e-9
    for B in cb.basis:
        assert np.abs(B @ d.S - d.S @ B).max() < 1e-9
    # support/pivots are the label-space view of cells/pivot_cells
    assert cb.support == tuple((d.labels[i], d.labels[j]) for i, j in cb.cells)


def test_identity_always_invariant(su2, minimal):
    for d in (su2(3), su2(8), minimal(4), minimal(7)):
        assert is_modular_invariant(d, np.eye(d.n, dtype=np.int64))


@pytest.mark.parametrize("k", sorted(EXPECTED_SU2))
def test_su2_counts(k, su2):
    invs = enumerate_invariants(su2(k))
    assert len(invs) == EXPECTED_SU2[k]
    for inv in invs:
        assert is_modular_invariant(su2(k), inv.Z)


@pytest.mark.parametrize("m", sorted(EXPECTED_MINIMAL))
def test_minimal_counts(m, minimal):
    invs = enumerate_invariants(minimal(m))
    assert len(invs) == EXPECTED_MINIMAL[m]
    assert invs[0].Z[0, 0] == 1


def test_enumeration_deterministic_and_worker_invariant(minimal):
    d = minimal(8)
    one = enumerate_invariants(d)
    again = enumerate_invariants(d)
    split = enumerate_invariants(d, workers=2)
    assert one == again == split
    flats = [inv.Z.ravel().tolist() for inv in one]
    assert flats == sorted(flats)


@pytest.mark.parametrize("algebra,param", [
    ("su2", 4), ("su2", 6), ("minimal", 4), ("minimal", 5),
])
def test_brute_force_agrees(algebra, param, su2, minimal):
    d = su2(param) if algebra == "su2" else minimal(param)
    assert brute_force_invariants(d) == enumerate_invariants(d)


def test_check_shape_error(su2):
    with pytest.raises(ValueError):
        is_modular_invariant(su2(2), np.eye(5))


def test_check_diagnostics(minimal):
    d = minimal(5)
    n = d.n
    eye = np.eye(n, dtype=np.int64)

    res = is_modular_invariant(d, np.eye(n) + 0.5)
    assert not res and res.diagnostic == "entries are not integers"

    Z = eye.copy()
    Z[1, 1] = -1
    res = is_modular_invariant(d, Z)
    assert res.diagnostic.startswith("negative entry")

    Z = eye.copy()
    Z[0, 0] = 2
    res = is_modular_invariant(d, Z)
    assert res.diagnostic.startswith("normalization")

    # an off-diagonal cell with unequal T-phases
    bad = next((i, j) for i in range(n) for j in range(n) if d.t[i] != d.t[j])
    Z = eye.copy()
    Z[bad] = 1
    res = is_modular_invariant(d, Z)
    assert res.diagnostic.startswith("T-support")

    # equal T-phases but no S-commutation
    i, j = next((i, j) for i, j in t_support_cells(d) if i != j)
    Z = eye.copy()
    Z[i, j] = 1
    res = is_modular_invariant(d, Z)
    assert res.diagnostic.startswith("S-commutation")

    # with the commutation tolerance disabled the entry bound is reached
    Z = eye.copy()
    Z[i, j] = 10**6
    res = is_modular_invariant(d, Z, tol=np.inf)
    assert res.diagnostic.startswith("entry bound")


def test_json_round_trip(su2):
    d = su2(10)
    for inv in enumerate_invariants(d):
        d2, Z = invariant_from_json(invariant_to_json(inv))
        assert d2.labels == d.labels
        assert np.array_equal(Z, inv.Z)
        assert is_modular_invariant(d2, Z)


def test_invariant_equality_and_hash(su2):
    d = su2(4)
    a, b = enumerate_invariants(d)
    again = enumerate_invariants(d)
    assert a == again[0] and hash(a) == hash(again[0])
    assert a != b
    assert len({a, b, again[0]}) == 2


def test_invariant_matrix_is_locked(su2):
    inv = enumerate_invariants(su2(2))[0]
    with pytest.raises(ValueError):
        inv.Z[0, 0] = 5
