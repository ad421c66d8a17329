from __future__ import annotations

import pytest
from hypothesis import settings

from arithtutte.abelian import VectorList, build_arithmetic_matroid

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

EXAMPLE_VECTORS = [[2, 0], [-1, 1], [1, 1]]
REMARK_VECTORS = [[1, 0], [0, 1], [1, 1], [1, -1]]


@pytest.fixture
def example_list() -> VectorList:
    return VectorList.integer(EXAMPLE_VECTORS, dim=2)


@pytest.fixture
def example_matroid(example_list):
    return build_arithmetic_matroid(example_list)


@pytest.fixture
def remark_list() -> VectorList:
    return VectorList.integer(REMARK_VECTORS, dim=2)
