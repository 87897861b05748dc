from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from indecomp import Tournament

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def random_tournament(n: int, rng: random.Random) -> Tournament:
    out = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                out[i] |= 1 << j
            else:
                out[j] |= 1 << i
    return Tournament(n, tuple(out))


@st.composite
def tournaments(draw, min_n: int = 1, max_n: int = 8) -> Tournament:
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    out = [0] * n
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if bits >> k & 1:
                out[i] |= 1 << j
            else:
                out[j] |= 1 << i
            k += 1
    return Tournament(n, tuple(out))


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory):
    return tmp_path_factory.mktemp("census")


@pytest.fixture(scope="session")
def census(cache_dir):
    from indecomp.enumeration import enumerate_census

    return {n: enumerate_census(n, cache_dir) for n in range(3, 8)}
