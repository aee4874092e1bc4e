"""Tests for simplicial homology and cohomology."""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
import pytest
from hexcol.complex import Triangulation, simplex_boundary
from hexcol.exceptions import (
    CocycleError,
    DimensionError,
    DisconnectedComplexError,
    OrientationError,
    TriangulationError,
)
from hexcol.fields import field_make
from hexcol.fixtures import fixture
from hexcol.homology import (
    betti_numbers,
    boundary_matrix,
    class_coordinates,
    coboundaries,
    coboundary_cochain,
    coboundary_matrix,
    cohomology_basis,
    fundamental_cycle,
    homology_basis,
    pair,
)
from hexcol.linalg import Matrix, mat_rref
from hexcol.polynomials import MPoly

if TYPE_CHECKING:
    from hexcol.fields import FieldSpec

CIRCLE = [(1, 2), (2, 3), (1, 3)]


@pytest.mark.parametrize("name", ["S4", "CP2", "RP2", "T2"])
def test_boundary_squares_to_zero(field: FieldSpec, name: str) -> None:
    """It composes consecutive boundaries to zero."""
    K = fixture(name)
    for n in range(2, K.dimension + 1):
        product = boundary_matrix(K, n - 1, field) @ boundary_matrix(K, n, field)
        assert product == Matrix(field, product.shape)


def test_boundary_degree_range(F2: FieldSpec) -> None:
    """It only builds boundaries of degree 1 to 4."""
    with pytest.raises(DimensionError):
        boundary_matrix(simplex_boundary(2), 0, F2)


def test_rank_of_top_boundary(F2: FieldSpec) -> None:
    """It has one top cycle on the 4-sphere."""
    assert mat_rref(boundary_matrix(simplex_boundary(4), 4, F2)).rank == 5


@pytest.mark.parametrize(
    ("name", "p", "betti"),
    [
        ("S4", 2, (1, 0, 0, 0, 1)),
        ("S4", 3, (1, 0, 0, 0, 1)),
        ("CP2", 2, (1, 0, 1, 0, 1)),
        ("CP2", 3, (1, 0, 1, 0, 1)),
        ("T2", 2, (1, 2, 1)),
        ("RP2", 2, (1, 1, 1)),
        ("S1", 5, (1, 1)),
    ],
)
def test_betti_numbers(name: str, p: int, betti: tuple[int, ...]) -> None:
    """It computes the Betti numbers of the bundled fixtures."""
    assert betti_numbers(fixture(name), field_make(p)) == betti


def test_fundamental_cycle_is_cycle(F3: FieldSpec) -> None:
    """It returns a signed top cycle on orientable complexes."""
    for name in ("S4", "CP2"):
        K = fixture(name)
        cycle = fundamental_cycle(K, F3)
        assert cycle[0] == 1
        assert not any(boundary_matrix(K, 4, F3).apply(cycle))


def test_fundamental_cycle_sphere_signs(F3: FieldSpec) -> None:
    """It alternates signs by the deleted vertex."""
    # facet k of the 5-simplex boundary omits vertex 6 - k
    assert fundamental_cycle(simplex_boundary(4), F3) == [1, 2, 1, 2, 1, 2]


def test_fundamental_cycle_characteristic_two(F2: FieldSpec) -> None:
    """It puts coefficient 1 on every facet in characteristic 2."""
    assert fundamental_cycle(fixture("RP2"), F2) == [1] * 10


def test_fundamental_cycle_errors(F3: FieldSpec) -> None:
    """It raises on boundary, disconnected and non orientable complexes."""
    with pytest.raises(TriangulationError):
        fundamental_cycle(Triangulation(4, [(1, 2, 3, 4)]), F3)
    with pytest.raises(DisconnectedComplexError):
        two_circles = [*CIRCLE, *((u + 3, v + 3) for u, v in CIRCLE)]
        fundamental_cycle(Triangulation(6, two_circles), F3)
    with pytest.raises(OrientationError):
        fundamental_cycle(fixture("RP2"), F3)


def test_cohomology_basis_is_dual(F2: FieldSpec) -> None:
    """It pairs the cocycle basis with the cycle basis to the identity."""
    K = fixture("T2")
    homology = homology_basis(K, 1, F2)
    cohomology = cohomology_basis(K, 1, F2, homology)
    assert homology.dim == cohomology.dim == 2
    for i, cocycle in enumerate(cohomology.representatives):
        values = [pair(cocycle, cycle, F2) for cycle in homology.representatives]
        assert values == [int(i == j) for j in range(2)]
        assert class_coordinates(K, 1, cocycle, F2, homology) == values


def test_class_coordinates_ignore_coboundaries(
    F3: FieldSpec,
    rng: np.random.Generator,
) -> None:
    """It gives the same coordinates to cohomologous cocycles."""
    K = fixture("T2")
    homology = homology_basis(K, 1, F3)
    (first, _) = cohomology_basis(K, 1, F3, homology).representatives
    B = coboundaries(K, 1, F3)
    shift = B.combination([int(v) for v in rng.integers(0, 3, B.dim)])
    shifted = [F3.add(a, b) for a, b in zip(first, shift)]
    assert class_coordinates(K, 1, shifted, F3, homology) == [1, 0]


def test_class_coordinates_reject_non_cocycle(F2: FieldSpec) -> None:
    """It raises on cochains that are not cocycles."""
    K = fixture("T2")
    cochain = [1] + [0] * (K.count(1) - 1)
    with pytest.raises(CocycleError):
        class_coordinates(K, 1, cochain, F2)


def test_coboundary_cochain_matches_matrix(
    F5: FieldSpec,
    rng: np.random.Generator,
) -> None:
    """It agrees with the coboundary matrix on field valued cochains."""
    K = fixture("CP2")
    cochain = [int(v) for v in rng.integers(0, 5, K.count(2))]
    expected = coboundary_matrix(K, 2, F5).apply(cochain)
    assert coboundary_cochain(K, 2, cochain, F5) == expected


def test_coboundary_cochain_polynomial_values(F3: FieldSpec) -> None:
    """It takes coboundaries of polynomial valued cochains."""
    K = simplex_boundary(1)
    x = MPoly.variable(F3, 1, 0)
    zero = MPoly.zero(F3, 1)
    # vertices 1, 2, 3 valued x, 0, 0
    (e12, e13, e23) = coboundary_cochain(K, 0, [x, zero, zero], F3)
    assert e12 == -x
    assert e13 == -x
    assert e23 == zero


def test_pair_length_mismatch(F2: FieldSpec) -> None:
    """It refuses chains and cochains of different lengths."""
    with pytest.raises(DimensionError):
        pair([1, 0], [1], F2)
