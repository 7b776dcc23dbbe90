from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from deltaring import core


def zmod_tables(m: int):
    add = [[(i + j) % m for j in range(m)] for i in range(m)]
    mul = [[(i * j) % m for j in range(m)] for i in range(m)]
    return add, mul


@pytest.fixture(scope="session")
def zmod():
    cache: dict[int, core.FiniteRing] = {}

    def build(m: int) -> core.FiniteRing:
        if m not in cache:
            add, mul = zmod_tables(m)
            cache[m] = core.validate_ring(add, mul, 0, 1, label=f"Z{m}")
        return cache[m]

    return build
