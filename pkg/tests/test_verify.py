"""Tests for the verification suites."""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
import pytest
from hexcol.enums import VerifySuite
from hexcol.fields import field_make
from hexcol.fixtures import fixture
from hexcol.hexagon import builtin_cocycle
from hexcol.invariants import gcol
from hexcol.utils import Check, first_failure
from hexcol.verify import (
    chain_map_suite,
    class_suite,
    cocycle_suite,
    pachner_suite,
    run_suite,
)

if TYPE_CHECKING:
    from hexcol.fields import FieldSpec


def test_pachner_suite(F2: FieldSpec) -> None:
    """It checks all 62 clusters."""
    checks = pachner_suite(F2)
    assert len(checks) == 62
    assert checks[0].name == "1-5[1]"
    assert first_failure(list(checks)) is None


@pytest.mark.parametrize(("p", "names"), [(2, 4), (3, 2)])
def test_cocycle_suite(p: int, names: int, rng: np.random.Generator) -> None:
    """It skips the cubic cocycles outside characteristic 2."""
    checks = cocycle_suite(field_make(p), rng)
    assert len(checks) == names + 1
    assert checks[-1].name == "coboundary_squared"
    assert all(check.passed for check in checks)


def test_chain_map_suite(F3: FieldSpec, rng: np.random.Generator) -> None:
    """It commutes evaluation with the coboundaries on the projective plane."""
    (check,) = chain_map_suite(fixture("CP2"), F3, rng, 3)
    assert check.passed
    assert check.detail == "3/3 trials"


def test_class_suite(F2: FieldSpec, rng: np.random.Generator) -> None:
    """It finds invariants independent of lifts and representatives."""
    checks = class_suite(fixture("CP2"), F2, rng, 2)
    assert [check.name for check in checks] == [
        "lift_independent",
        "representative_independent",
    ]
    assert all(check.passed for check in checks), checks


@pytest.mark.parametrize("suite", [VerifySuite.LIMIT, "cocycles", "chainmap"])
def test_run_suite(
    F5: FieldSpec,
    rng: np.random.Generator,
    suite: VerifySuite | str,
) -> None:
    """It dispatches suites by name."""
    checks = run_suite(suite, F5, rng, K=fixture("S4"), trials=2)
    assert checks
    assert all(isinstance(check, Check) and check.passed for check in checks)


def test_run_suite_errors(F2: FieldSpec, rng: np.random.Generator) -> None:
    """It raises on unknown suites and missing complexes."""
    with pytest.raises(ValueError):
        run_suite("unknown", F2, rng)
    with pytest.raises(ValueError, match="complex"):
        run_suite(VerifySuite.CLASSDEP, F2, rng)


@pytest.mark.slow()
@pytest.mark.parametrize("name", ["S2xT2", "RP2xS2"])
def test_suites_on_products(name: str, F2: FieldSpec) -> None:
    """It passes 200 trials of every well-definedness check on product manifolds."""
    K = fixture(name)
    assert gcol(K, builtin_cocycle("c3_bilinear", F2))
    rng = np.random.default_rng(200)
    checks = (*class_suite(K, F2, rng, 200), *chain_map_suite(K, F2, rng, 200))
    assert [check.name for check in checks] == [
        "lift_independent",
        "representative_independent",
        "chain_map_commutes",
    ]
    assert first_failure(list(checks)) is None, checks
    assert checks[-1].detail == "200/200 trials"
