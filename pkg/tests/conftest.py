"""Session-wide caches: modular data and classification entries are immutable,
so tests share one instance per parameter instead of rebuilding them."""

from functools import lru_cache

import pytest

from mmk import (classify_minimal, classify_minimal_type_II, classify_su2,
                 minimal_data, su2_data)


@pytest.fixture(scope="session")
def su2():
    return lru_cache(maxsize=None)(su2_data)


@pytest.fixture(scope="session")
def minimal():
    return lru_cache(maxsize=None)(minimal_data)


@pytest.fixture(scope="session")
def minimal_entries():
    return lru_cache(maxsize=None)(classify_minimal)


@pytest.fixture(scope="session")
def minimal_entries_type_II():
    return lru_cache(maxsize=None)(classify_minimal_type_II)


@pytest.fixture(scope="session")
def su2_entries():
    return lru_cache(maxsize=None)(classify_su2)
