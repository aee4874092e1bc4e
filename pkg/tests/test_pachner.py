"""Tests for Pachner moves and move clusters."""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
import pytest
from hexcol.coloring import coloring_homology
from hexcol.complex import simplex_boundary, validate_closed
from hexcol.enums import MoveKind
from hexcol.exceptions import MoveError
from hexcol.fixtures import fixture
from hexcol.hexagon import BUILTIN_COCYCLES, builtin_cocycle
from hexcol.invariants import (
    GenericColoring,
    equality_report,
    gcol,
    value_distribution,
)
from hexcol.pachner import (
    INNER_DIMENSIONS,
    all_selections,
    apply_move,
    available_moves,
    cluster,
    inverse_move,
    move_application,
    random_moves,
    verify_cluster,
)

if TYPE_CHECKING:
    from hexcol.complex import Triangulation
    from hexcol.fields import FieldSpec


def test_inner_dimensions() -> None:
    """It only leaves inner colorings on four and five pentachora."""
    assert [INNER_DIMENSIONS[k] for k in range(1, 6)] == [0, 0, 0, 1, 4]


@pytest.mark.parametrize(("k", "boundary"), [(1, 5), (2, 8), (3, 9), (4, 8), (5, 5)])
def test_cluster_sides(k: int, boundary: int) -> None:
    """It splits the 5-simplex boundary into two sides with a common boundary."""
    C = cluster(k)
    assert (C.k, len(C.right), len(C.boundary)) == (k, 6 - k, boundary)
    assert C.kind == MoveKind.from_size(k)
    assert not set(C.left) & set(C.right)
    swapped = C.swapped()
    assert (swapped.left, swapped.right) == (C.right, C.left)
    assert swapped.kind.size == 6 - k


@pytest.mark.parametrize(
    ("k", "selection"),
    [(0, None), (6, None), (2, (1,)), (2, (1, 1)), (1, (7,))],
)
def test_cluster_errors(k: int, selection: tuple[int, ...] | None) -> None:
    """It raises on sizes and selections that do not fit the hexagon."""
    with pytest.raises(MoveError):
        cluster(k, selection)


def test_all_selections() -> None:
    """It enumerates every nonempty proper subset of the six vertices."""
    clusters = list(all_selections())
    assert len(clusters) == 62
    assert len({C.selection for C in clusters}) == 62


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_verify_cluster(field: FieldSpec, k: int) -> None:
    """It finds matching boundary colorings generated by edge vectors."""
    report = verify_cluster(k, None, field)
    assert report.passed, [check for check in report.checks if not check.passed]
    assert report.inner_dims == (INNER_DIMENSIONS[k], INNER_DIMENSIONS[6 - k])


def test_verify_every_selection(F3: FieldSpec) -> None:
    """It passes on every selection of facets."""
    for C in all_selections():
        assert verify_cluster(C.k, C.selection, F3).passed


def test_one_five_move_and_inverse() -> None:
    """It subdivides a pentachoron and collapses it back."""
    S4 = simplex_boundary(4)
    app = move_application(S4, (1, 2, 3, 4, 5, 7), (7,))
    assert app.kind == MoveKind.ONE_FIVE
    assert app.fresh == 7
    T = apply_move(app)
    assert (T.num_vertices, T.count(4)) == (7, 10)
    assert T.euler_characteristic == 2
    undo = inverse_move(app, T)
    assert undo.kind == MoveKind.FIVE_ONE
    assert undo.fresh is None
    assert apply_move(undo) == S4


def test_two_four_moves() -> None:
    """It finds 2-4 moves after a subdivision and undoes them."""
    S4 = simplex_boundary(4)
    T = apply_move(move_application(S4, (1, 2, 3, 4, 5, 7), (7,)))
    moves = available_moves(T, 2)
    assert moves
    for app in moves[:3]:
        U = apply_move(app)
        assert U.count(4) == T.count(4) + 2
        assert U.num_vertices == T.num_vertices
        assert apply_move(inverse_move(app, U)) == T


def test_available_moves_on_sphere() -> None:
    """It only subdivides the boundary of the 5-simplex."""
    S4 = simplex_boundary(4)
    assert [len(available_moves(S4, k)) for k in range(1, 6)] == [6, 0, 0, 0, 0]


@pytest.mark.parametrize(
    ("vertices", "dropped"),
    [
        ((1, 2, 3, 4, 5, 7), (8,)),
        ((1, 2, 3, 4, 5, 6), (1, 2)),
        ((1, 2, 3, 4, 5, 5), (5,)),
        ((1, 2, 3, 4, 5, 6), (1, 2, 3, 4, 5, 6)),
    ],
)
def test_move_application_errors(
    vertices: tuple[int, ...],
    dropped: tuple[int, ...],
) -> None:
    """It refuses moves that do not apply to the host."""
    with pytest.raises(MoveError):
        move_application(simplex_boundary(4), vertices, dropped)


def test_random_moves_keep_the_manifold(
    F2: FieldSpec,
    rng: np.random.Generator,
) -> None:
    """It keeps a closed 4-sphere with no coloring homology."""
    kinds = (MoveKind.ONE_FIVE, MoveKind.TWO_FOUR)
    T, applied = random_moves(simplex_boundary(4), rng, 4, kinds)
    assert len(applied) == 4
    assert validate_closed(T).passed
    assert T.euler_characteristic == 2
    assert coloring_homology(T, F2).d == 0


def test_random_moves_without_locations(rng: np.random.Generator) -> None:
    """It raises when no move of the requested kinds applies."""
    with pytest.raises(MoveError):
        random_moves(simplex_boundary(4), rng, 1, (MoveKind.THREE_THREE,))


def test_coloring_homology_survives_moves(F2: FieldSpec) -> None:
    """It keeps the dimension of coloring homology across a subdivision."""
    K = fixture("CP2")
    (app, *_) = available_moves(K, 1)
    assert coloring_homology(apply_move(app), F2).d == 1


@pytest.mark.slow()
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_invariants_survive_random_moves(F2: FieldSpec, seed: int) -> None:
    """It keeps d, the value distributions and the q = r verdict across moves."""
    K = fixture("CP2")
    rng = np.random.default_rng(seed)
    T, applied = random_moves(K, rng, 4, tuple(MoveKind))
    assert len(applied) == 4
    assert validate_closed(T).passed

    def summary(L: Triangulation) -> tuple[int, list[dict[int, int]], bool]:
        coloring = GenericColoring(coloring_homology(L, F2))
        distributions = [
            value_distribution(P, 2).counts
            for name in BUILTIN_COCYCLES
            for P in gcol(L, builtin_cocycle(name, F2), coloring)
        ]
        return coloring.nvars, distributions, equality_report(L, F2, coloring).equal

    assert summary(T) == summary(K)
