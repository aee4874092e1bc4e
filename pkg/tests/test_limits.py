"""Tests for the formal limit of nonconstant edge functionals."""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
import pytest
from hexcol.exceptions import CocycleError, DimensionError, FieldError, LimitError
from hexcol.fields import field_make
from hexcol.limits import (
    CocycleData2,
    LaurentMatrix,
    cocycle_data,
    constant_functionals,
    edge_vector_limit_check,
    limit_functionals,
    limit_transform,
    limit_transform_one_shot,
    nonconstant_functionals,
    random_generic_cocycle,
    transform_matrices,
    verify_limits,
)

if TYPE_CHECKING:
    from hexcol.fields import FieldSpec

TRIANGLES = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]


def test_laurent_matrix_arithmetic(F5: FieldSpec) -> None:
    """It multiplies entries as Laurent polynomials."""
    M = LaurentMatrix(F5, [[{0: 1, 1: 2}, {-1: 1}]])
    N = LaurentMatrix(F5, [[{1: 1}], [{1: 3}]])
    product = M @ N
    assert product.shape == (1, 1)
    assert product.entry(0, 0) == {0: 3, 1: 1, 2: 2}
    assert M.leading().to_dense() == [[0, 1]]
    assert LaurentMatrix.identity(F5, 2) @ N == N
    assert M.format() == "1 + 2*o; o^-1"


def test_laurent_matrix_errors(F3: FieldSpec, F5: FieldSpec) -> None:
    """It raises on ragged rows, mismatched products and undefined limits."""
    with pytest.raises(DimensionError):
        LaurentMatrix(F5, [[{0: 1}], [{0: 1}, {}]])
    M = LaurentMatrix(F5, [[{-1: 1}, {}]])
    with pytest.raises(DimensionError):
        M @ M
    with pytest.raises(FieldError):
        M @ LaurentMatrix(F3, [[{0: 1}], [{0: 1}]])
    with pytest.raises(LimitError):
        M.limit()
    with pytest.raises(LimitError):
        LaurentMatrix(F5, [[{}]]).leading()
    assert LaurentMatrix(F5, [[{}]]).valuation is None


def test_cocycle_data_checks(F5: FieldSpec) -> None:
    """It requires a 2-cocycle on the tetrahedron 1234."""
    with pytest.raises(CocycleError):
        cocycle_data(F5, {(1, 2, 3): 0, (1, 2, 4): 0, (1, 3, 4): 0})
    with pytest.raises(CocycleError):
        cocycle_data(F5, {(1, 2, 3): 1, (1, 2, 4): 0, (1, 3, 4): 0, (2, 3, 4): 0})
    data = cocycle_data(F5, {(3, 2, 1): 1, (1, 2, 4): 1, (1, 3, 4): 0, (2, 3, 4): 0})
    assert data.value(1, 2, 3) == 1
    assert not data.is_generic
    with pytest.raises(CocycleError):
        data.value(1, 2, 5)


def test_transform_needs_generic_cocycle(F3: FieldSpec) -> None:
    """It refuses cocycles with equal values on 123 and 124."""
    data = cocycle_data(F3, {t: 0 for t in TRIANGLES})
    with pytest.raises(LimitError):
        transform_matrices(data)
    with pytest.raises(LimitError):
        limit_transform(nonconstant_functionals(data), data)


def test_random_generic_cocycle(field: FieldSpec, rng: np.random.Generator) -> None:
    """It draws generic coboundaries on the pentachoron."""
    data = random_generic_cocycle(field, rng)
    assert data.is_generic
    assert len(data.rho) == 10
    assert cocycle_data(field, data.rho).rho == data.rho
    with pytest.raises(LimitError):
        random_generic_cocycle(field, rng, attempts=0)


def test_nonconstant_functionals_at_zero(
    F5: FieldSpec,
    rng: np.random.Generator,
) -> None:
    """It reduces to the same functionals for every cocycle at o = 0."""
    zero = nonconstant_functionals(CocycleData2(F5, {t: 0 for t in TRIANGLES}))
    for _ in range(5):
        M = nonconstant_functionals(random_generic_cocycle(F5, rng))
        assert M.limit() == zero.limit()
        assert M.valuation == 0


def test_nonconstant_functionals_reject_non_cocycle(F3: FieldSpec) -> None:
    """It checks the cocycle condition before building the table."""
    bad = CocycleData2(F3, {(1, 2, 3): 1, (1, 2, 4): 0, (1, 3, 4): 0, (2, 3, 4): 0})
    with pytest.raises(CocycleError):
        nonconstant_functionals(bad)


def test_limits_reach_constant_table(
    field: FieldSpec,
    rng: np.random.Generator,
) -> None:
    """It recovers the constant functionals step by step and in one shot."""
    expected = constant_functionals(field)
    for _ in range(10):
        data = random_generic_cocycle(field, rng)
        M = nonconstant_functionals(data)
        assert limit_functionals(M).shape == (6, 2)
        assert limit_transform(M, data) == expected
        assert limit_transform_one_shot(M, data) == expected
        assert edge_vector_limit_check(data)


def test_constant_functionals_characteristic_two() -> None:
    """It drops signs in characteristic 2."""
    table = constant_functionals(field_make(2)).to_dense()
    assert table == [[0, 1], [1, 1], [1, 0], [1, 0], [1, 1], [0, 1]]


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_verify_limits(p: int, rng: np.random.Generator) -> None:
    """It passes every limit check."""
    checks = verify_limits(field_make(p), 4, rng)
    assert [check.name for check in checks] == [
        "limit_exact",
        "limit_one_shot",
        "edge_vector_limit",
        "limit_independent_of_rho",
        "constant_duality",
    ]
    assert all(check.passed for check in checks), checks
