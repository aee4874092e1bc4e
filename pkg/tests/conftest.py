"""Pytest configuration."""

from __future__ import annotations

import os
from typing import Generator

import numpy as np
import pytest
from hexcol.config import reset_caps
from hexcol.fields import FieldSpec, field_make
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("ci", max_examples=200, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(autouse=True)
def restore_caps() -> Generator[None, None, None]:
    """Restore default resource caps after each test."""
    yield
    reset_caps()


@pytest.fixture()
def rng() -> np.random.Generator:
    """Seeded random generator."""
    return np.random.default_rng(1234)


@pytest.fixture(scope="session")
def F2() -> FieldSpec:
    return field_make(2)


@pytest.fixture(scope="session")
def F3() -> FieldSpec:
    return field_make(3)


@pytest.fixture(scope="session")
def F4() -> FieldSpec:
    return field_make(2, 2)


@pytest.fixture(scope="session")
def F5() -> FieldSpec:
    return field_make(5)


@pytest.fixture(params=[(2, 1), (3, 1), (2, 2), (5, 1)], ids=str)
def field(request: pytest.FixtureRequest) -> FieldSpec:
    """Each small field in turn."""
    return field_make(*request.param)
