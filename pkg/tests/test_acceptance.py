"""Acceptance gate: one test per verification criterion, at full scale.

Each criterion is implemented by the matching check function in mmk.verify
(raising with a specific message on any violation), so `pytest -v` on this
file prints one pass/fail line per criterion.  The criteria with a stated
time budget also assert it here.
"""

import time

import pytest

from mmk.verify import CHECKS

_names = [name for name, _ in CHECKS]
_fns = dict(CHECKS)
_elapsed = {}

# criteria with an explicit runtime bound, in seconds
_BUDGETS = {
    "enumeration-completeness": 60.0,
    "fusion-equivalence": 60.0,
}


@pytest.mark.parametrize("name", _names)
def test_criterion(name):
    t0 = time.time()
    detail = _fns[name](max_m=12)
    _elapsed[name] = time.time() - t0
    assert isinstance(detail, str) and detail
    if name in _BUDGETS:
        assert _elapsed[name] < _BUDGETS[name]


def test_full_suite_under_five_minutes():
    missing = [n for n in _names if n not in _elapsed]
    assert not missing, f"criteria did not run: {missing}"
    assert sum(_elapsed.values()) < 300.0
