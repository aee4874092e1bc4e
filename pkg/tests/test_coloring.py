"""Tests for permitted colorings and coloring homology."""

from __future__ import annotations

import itertools
from typing import TYPE_CHECKING

import pytest
from hexcol.coloring import (
    coloring_columns,
    coloring_homology,
    edge_functional_block,
    edge_functional_matrix,
    edge_generated_space,
    edge_vector,
    edge_vector_matrix,
    permitted_space,
)
from hexcol.complex import Triangulation, simplex_boundary
from hexcol.exceptions import TriangulationError
from hexcol.fixtures import fixture
from hexcol.homology import betti_numbers
from hexcol.linalg import Subspace

if TYPE_CHECKING:
    from hexcol.fields import FieldSpec

PENTACHORON = Triangulation(5, [(1, 2, 3, 4, 5)])


@pytest.mark.parametrize(
    ("ij", "t", "block"),
    [
        ((1, 2), (1, 2, 3, 4), (0, 1)),
        ((1, 2), (1, 2, 3, 5), (0, -1)),
        ((3, 4), (1, 2, 3, 4), (0, -1)),
        ((1, 3), (1, 2, 3, 4), (1, -1)),
        ((2, 4), (1, 2, 3, 4), (1, 1)),
        ((2, 4), (2, 3, 4, 5), (1, -1)),
    ],
)
def test_edge_functional_block(
    ij: tuple[int, int],
    t: tuple[int, ...],
    block: tuple[int, int],
) -> None:
    """It signs the table entry by the position of the omitted vertex."""
    assert edge_functional_block((1, 2, 3, 4, 5), ij, t) == block


def test_edge_functional_block_invalid() -> None:
    """It raises when the edge or tetrahedron does not fit."""
    with pytest.raises(TriangulationError):
        edge_functional_block((1, 2, 3, 4, 5), (1, 5), (1, 2, 3, 4))
    with pytest.raises(TriangulationError):
        edge_functional_block((1, 2, 3, 4, 5), (1, 2), (1, 2, 3, 6))


@pytest.mark.parametrize(
    ("b", "block"),
    [((1, 2), [1, 0]), ((3, 4), [-1, 0]), ((2, 4), [1, 1]), ((1, 3), [-1, 1])],
)
def test_edge_vector_blocks(
    F5: FieldSpec,
    b: tuple[int, int],
    block: list[int],
) -> None:
    """It puts the table column of the edge on tetrahedron 1234."""
    vector = edge_vector(PENTACHORON, b, F5)
    assert [vector.get(0, 0), vector.get(1, 0)] == [v % 5 for v in block]


def test_edge_vector_unknown_edge(F2: FieldSpec) -> None:
    """It raises for non edges."""
    with pytest.raises(TriangulationError):
        edge_vector(PENTACHORON, (1, 6), F2)


def test_pentachoron_kernel_dimension(field: FieldSpec) -> None:
    """It finds five dimensional permitted colorings of one pentachoron."""
    V = permitted_space(PENTACHORON, field)
    assert V.ambient_dim == 10
    assert V.dim == 5


def test_pentachoron_kernel_brute_force(F2: FieldSpec) -> None:
    """It agrees with enumeration of all colorings over F_2."""
    M = edge_functional_matrix(PENTACHORON, F2)
    count = sum(
        not any(M.apply(vector)) for vector in itertools.product((0, 1), repeat=10)
    )
    assert count == 2**5


def test_edge_vectors_span_pentachoron(field: FieldSpec) -> None:
    """It spans the permitted colorings of a pentachoron by its edge vectors."""
    V = permitted_space(PENTACHORON, field)
    V0 = edge_generated_space(PENTACHORON, field)
    assert V0 == V


def test_edge_vectors_are_permitted(field: FieldSpec) -> None:
    """It annihilates every edge vector by every edge functional."""
    K = simplex_boundary(4)
    functionals = edge_functional_matrix(K, field)
    for row in edge_vector_matrix(K, field).rows:
        assert not any(functionals.apply(row))


def test_coloring_columns() -> None:
    """It lists the columns of every tetrahedron of a simplex."""
    K = simplex_boundary(4)
    assert coloring_columns(K, (1, 2, 3, 4)) == [0, 1]
    assert len(coloring_columns(K, (1, 2, 3, 4, 5))) == 10


@pytest.mark.parametrize(("name", "d"), [("S4", 0), ("CP2", 1)])
def test_coloring_homology_dimension(F2: FieldSpec, name: str, d: int) -> None:
    """It matches the sum of the middle Betti numbers."""
    K = fixture(name)
    homology = coloring_homology(K, F2)
    betti = betti_numbers(K, F2)
    assert homology.d == d == betti[2] + betti[3]
    assert homology.edge_generated.is_subspace_of(homology.permitted)


def test_coloring_homology_other_fields(F3: FieldSpec, F4: FieldSpec) -> None:
    """It finds one class on the projective plane in every characteristic."""
    assert coloring_homology(fixture("CP2"), F3).d == 1
    assert coloring_homology(fixture("CP2"), F4).d == 1
    assert coloring_homology(fixture("S4"), F3).d == 0


def test_coloring_homology_coordinates(F2: FieldSpec) -> None:
    """It gives unit coordinates to the representatives."""
    homology = coloring_homology(fixture("CP2"), F2)
    (representative,) = homology.representatives()
    assert homology.coordinates(representative) == [1]
    for row in homology.edge_generated.basis()[:5]:
        assert homology.coordinates(row) == [0]


def test_subspace_over_pentachoron_is_canonical(F3: FieldSpec) -> None:
    """It gives the same permitted space however the functionals are ordered."""
    M = edge_functional_matrix(PENTACHORON, F3)
    V = permitted_space(PENTACHORON, F3)
    reversed_rows = Subspace.span(F3, 10, reversed(M.rows))
    assert reversed_rows == Subspace.span(F3, 10, M.rows)
    assert all(not any(M.apply(v)) for v in V.basis())


@pytest.mark.slow()
@pytest.mark.parametrize(
    ("name", "d"),
    [("S2xS2", 2), ("RP2xS2", 3), ("S2xT2", 4), ("RP2xRP2", 5), ("RP2xT2", 7)],
)
def test_coloring_homology_products(F2: FieldSpec, name: str, d: int) -> None:
    """It reproduces the dimensions of the product fixtures."""
    K = fixture(name)
    betti = betti_numbers(K, F2)
    assert coloring_homology(K, F2).d == d == betti[2] + betti[3]


@pytest.mark.slow()
def test_coloring_homology_rp4(F2: FieldSpec) -> None:
    """It finds two classes on real projective 4-space."""
    K = fixture("RP4")
    assert coloring_homology(K, F2).d == 2
    assert betti_numbers(K, F2) == (1, 1, 1, 1, 1)
