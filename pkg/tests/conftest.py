import functools

import numpy as np
import pytest

from liecert import catalog
from liecert.triple import decompose


@functools.lru_cache(maxsize=None)
def cached_triple(entry_id: str, p=None):
    return catalog.build(entry_id, p)


@functools.lru_cache(maxsize=None)
def cached_dec(entry_id: str, p=None):
    return decompose(cached_triple(entry_id, p))


@pytest.fixture
def rng():
    return np.random.default_rng(0)
