import itertools
import subprocess
import sys

import numpy as np
import pytest

from mmk import _kernels_py
from mmk.kernels import HAVE_COMPILED, backend

if HAVE_COMPILED:
    from mmk import _kernels
else:
    _kernels = None

needs_compiled = pytest.mark.skipif(not HAVE_COMPILED,
                                    reason="compiled kernels not built")


def random_simplex_instance(rng, ndim):
    w = rng.uniform(0.05, 0.6, size=ndim)
    bounds = rng.integers(0, 4, size=ndim).astype(np.int64)
    budget = float(rng.uniform(0.5, 1.5))
    return w, bounds, budget


def simplex_by_product(w, bounds, budget):
    rows = [z for z in itertools.product(*(range(b + 1) for b in bounds))
            if np.dot(w, z) <= budget]
    return np.array(rows, dtype=np.int64).reshape(len(rows), len(bounds))


@pytest.mark.parametrize("seed", range(8))
def test_simplex_pure_matches_product_oracle(seed):
    rng = np.random.default_rng(seed)
    w, bounds, budget = random_simplex_instance(rng, rng.integers(1, 6))
    got = _kernels_py.enumerate_simplex(w, bounds, budget)
    assert np.array_equal(got, simplex_by_product(w, bounds, budget))


def test_simplex_output_is_lexicographic():
    rng = np.random.default_rng(3)
    w, bounds, budget = random_simplex_instance(rng, 5)
    got = _kernels_py.enumerate_simplex(w, bounds, budget)
    as_tuples = [tuple(r) for r in got]
    assert as_tuples == sorted(as_tuples)


def test_simplex_empty_dimension():
    out = _kernels_py.enumerate_simplex(np.empty(0), np.empty(0, dtype=np.int64), 1.0)
    assert out.shape == (1, 0)


def test_simplex_node_budget():
    w = np.full(6, 0.01)
    bounds = np.full(6, 5, dtype=np.int64)
    with pytest.raises(RuntimeError):
        _kernels_py.enumerate_simplex(w, bounds, 10.0, max_nodes=50)
    if HAVE_COMPILED:
        with pytest.raises(RuntimeError):
            _kernels.enumerate_simplex(w, bounds, 10.0, max_nodes=50)


@needs_compiled
@pytest.mark.parametrize("seed", range(12))
def test_simplex_backends_agree(seed):
    rng = np.random.default_rng(100 + seed)
    w, bounds, budget = random_simplex_instance(rng, rng.integers(1, 7))
    a = _kernels.enumerate_simplex(w, bounds, budget)
    b = _kernels_py.enumerate_simplex(w, bounds, budget)
    assert np.array_equal(a, b)


def random_support_instance(rng, ncells, nrows):
    """Random weights, bounds, and constraint rows grouped by last cell."""
    w = rng.uniform(0.05, 0.5, size=ncells)
    bounds = rng.integers(1, 4, size=ncells).astype(np.int64)
    budget = float(rng.uniform(0.8, 1.6))
    rows = []
    for _ in range(nrows):
        size = int(rng.integers(1, ncells + 1))
        cells = np.sort(rng.choice(ncells, size=size, replace=False)).astype(np.int32)
        coef = rng.normal(size=size)
        rows.append((int(cells.max()), cells, coef))
    rows.sort(key=lambda r: r[0])
    depths = np.array([r[0] for r in rows])
    grp_ptr = np.searchsorted(depths, np.arange(ncells + 1), side="left").astype(np.int32)
    row_ptr = np.concatenate([[0], np.cumsum([len(r[1]) for r in rows])]).astype(np.int32)
    ent_cell = np.concatenate([r[1] for r in rows]).astype(np.int32)
    ent_coef = np.concatenate([r[2] for r in rows])
    return w, bounds, budget, grp_ptr, row_ptr, ent_cell, ent_coef, rows


def support_by_product(w, bounds, budget, rows, row_tol):
    keep = []
    for z in itertools.product(*(range(b + 1) for b in bounds)):
        if np.dot(w, z) > budget:
            continue
        zv = np.asarray(z)
        if all(abs(np.dot(coef, zv[cells])) <= row_tol for _, cells, coef in rows):
            keep.append(z)
    return np.array(keep, dtype=np.int64).reshape(len(keep), len(bounds))


@pytest.mark.parametrize("seed", range(8))
def test_search_support_matches_product_oracle(seed):
    rng = np.random.default_rng(200 + seed)
    inst = random_support_instance(rng, int(rng.integers(2, 6)), int(rng.integers(1, 5)))
    w, bounds, budget, grp_ptr, row_ptr, ent_cell, ent_coef, rows = inst
    got = _kernels_py.search_support(w, bounds, budget, grp_ptr, row_ptr,
                                     ent_cell, ent_coef, 1e-7)
    assert np.array_equal(got, support_by_product(w, bounds, budget, rows, 1e-7))


@needs_compiled
@pytest.mark.parametrize("seed", range(12))
def test_search_support_backends_agree(seed):
    rng = np.random.default_rng(300 + seed)
    inst = random_support_instance(rng, int(rng.integers(2, 7)), int(rng.integers(1, 6)))
    w, bounds, budget, grp_ptr, row_ptr, ent_cell, ent_coef, _ = inst
    a = _kernels.search_support(w, bounds, budget, grp_ptr, row_ptr,
                                ent_cell, ent_coef, 1e-7)
    b = _kernels_py.search_support(w, bounds, budget, grp_ptr, row_ptr,
                                   ent_cell, ent_coef, 1e-7)
    assert np.array_equal(a, b)


def test_search_support_row_allows_recovery():
    # a row can fail at one value and hold again at a larger one, so the
    # kernel must keep scanning values instead of cutting the whole cell
    w = np.array([0.1, 0.1])
    bounds = np.array([2, 2], dtype=np.int64)
    grp_ptr = np.array([0, 0, 1], dtype=np.int32)   # one row, closed at cell 1
    row_ptr = np.array([0, 2], dtype=np.int32)
    ent_cell = np.array([0, 1], dtype=np.int32)
    ent_coef = np.array([1.0, -2.0])                # z0 = 2 z1
    got = _kernels_py.search_support(w, bounds, 10.0, grp_ptr, row_ptr,
                                     ent_cell, ent_coef, 1e-9)
    assert [tuple(r) for r in got] == [(0, 0), (2, 1)]


def test_dispatcher_reports_backend():
    assert backend in ("compiled", "python")
    if HAVE_COMPILED:
        assert backend == "compiled"


def test_pure_python_env_forces_fallback():
    code = ("import mmk.kernels as K; "
            "print(K.backend, K.HAVE_COMPILED)")
    out = subprocess.run([sys.executable, "-c", code],
                         env={"PATH": "/usr/bin:/bin", "MMK_PURE_PYTHON": "1"},
                         capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "False"]
