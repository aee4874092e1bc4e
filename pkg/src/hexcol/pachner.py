"""Pachner moves and the coloring checks across a move cluster.

A move takes six vertices ``W`` and a nonempty proper subset ``D`` of them.
The left side consists of the pentachora ``W - {d}`` for ``d`` in ``D``; the
right side consists of the other facets of the simplex on ``W``. Both sides
share their boundary.
"""

from __future__ import annotations

import itertools
from typing import TYPE_CHECKING, Iterator, NamedTuple, Sequence

from hexcol.coloring import (
    coloring_columns,
    edge_vector,
    permitted_space,
)
from hexcol.complex import SimplicialComplex, Triangulation, validate_closed
from hexcol.enums import MoveKind
from hexcol.exceptions import MoveError
from hexcol.linalg import Subspace
from hexcol.utils import Check, first_failure, logger

if TYPE_CHECKING:
    import numpy as np

    from hexcol.complex import Simplex
    from hexcol.fields import FieldSpec

__all__ = [
    "INNER_DIMENSIONS",
    "MoveCluster",
    "ClusterReport",
    "MoveApplication",
    "cluster",
    "all_selections",
    "verify_cluster",
    "move_application",
    "apply_move",
    "available_moves",
    "random_moves",
    "inverse_move",
]

HEXAGON = (1, 2, 3, 4, 5, 6)

INNER_DIMENSIONS = {1: 0, 2: 0, 3: 0, 4: 1, 5: 4}
"""Dimension of the permitted colorings of ``k`` pentachora zero on the boundary."""


def _sides(
    vertices: Sequence[int],
    dropped: Sequence[int],
) -> tuple[tuple[Simplex, ...], tuple[Simplex, ...]]:
    left = tuple(sorted(tuple(v for v in vertices if v != d) for d in dropped))
    right = tuple(
        sorted(
            tuple(v for v in vertices if v != w)
            for w in vertices
            if w not in dropped
        )
    )
    return left, right


def _boundary(pentachora: Sequence[Simplex]) -> tuple[Simplex, ...]:
    counts: dict[Simplex, int] = {}
    for u in pentachora:
        for t in itertools.combinations(u, 4):
            counts[t] = counts.get(t, 0) + 1
    return tuple(sorted(t for t, n in counts.items() if n == 1))


class MoveCluster(NamedTuple):
    """``k`` facets of the 5-simplex on ``1 .. 6`` and the remaining ``6 - k``."""

    selection: tuple[int, ...]
    """Vertices whose opposite facets form the left side."""

    left: tuple[Simplex, ...]
    """The ``k`` pentachora removed by the move."""

    right: tuple[Simplex, ...]
    """The ``6 - k`` pentachora added by the move."""

    boundary: tuple[Simplex, ...]
    """Tetrahedra shared by both sides."""

    @property
    def k(self) -> int:
        """Number of pentachora on the left side."""
        return len(self.left)

    @property
    def kind(self) -> MoveKind:
        """Move replacing the left side by the right side."""
        return MoveKind.from_size(self.k)

    def swapped(self) -> MoveCluster:
        """Same cluster read from the right side."""
        selection = tuple(v for v in HEXAGON if v not in self.selection)
        return MoveCluster(selection, self.right, self.left, self.boundary)


def cluster(k: int, selection: Sequence[int] | None = None) -> MoveCluster:
    """Cluster of the facets of ``123456`` opposite the vertices in ``selection``.

    ``selection`` defaults to ``1 .. k``.

    >>> C = cluster(3, (1, 2, 3))
    >>> C.left
    ((1, 2, 4, 5, 6), (1, 3, 4, 5, 6), (2, 3, 4, 5, 6))
    >>> len(C.boundary)
    9

    Raises:
        MoveError: ``k`` outside ``1 .. 5`` or ``selection`` not ``k`` vertices
            of ``1 .. 6``.
    """
    if not 1 <= k <= 5:  # noqa: PLR2004
        msg = f"A move cluster has 1 to 5 pentachora, got {k}"
        raise MoveError(msg)
    chosen = tuple(range(1, k + 1)) if selection is None else tuple(sorted(selection))
    if len(set(chosen)) != k or not set(chosen) <= set(HEXAGON):
        msg = f"Selection {chosen} is not a set of {k} vertices of {HEXAGON}"
        raise MoveError(msg)
    left, right = _sides(HEXAGON, chosen)
    boundary = _boundary(left)
    if boundary != _boundary(right):
        msg = "Both sides of a cluster must share their boundary"
        raise MoveError(msg)
    return MoveCluster(chosen, left, right, boundary)


def all_selections() -> Iterator[MoveCluster]:
    """Every cluster, by size then selection."""
    for k in range(1, 6):
        for selection in itertools.combinations(HEXAGON, k):
            yield cluster(k, selection)


class ClusterReport(NamedTuple):
    """Result of `verify_cluster`."""

    cluster: MoveCluster
    """The verified cluster."""

    field: FieldSpec
    """Coefficient field."""

    inner_dims: tuple[int, int]
    """Dimension of the colorings vanishing on the boundary, left and right."""

    checks: tuple[Check, ...]
    """Individual checks in evaluation order."""

    @property
    def passed(self) -> bool:
        """Whether every check succeeded."""
        return first_failure(list(self.checks)) is None


def _boundary_columns(K: SimplicialComplex, boundary: Sequence[Simplex]) -> list[int]:
    columns = []
    for t in boundary:
        columns += coloring_columns(K, t)
    return columns


class _Side(NamedTuple):
    restricted: Subspace
    boundary_edges: Subspace
    inner: Subspace
    inner_edges: Subspace


def _side(
    pentachora: Sequence[Simplex],
    boundary: Sequence[Simplex],
    field: FieldSpec,
) -> _Side:
    K = SimplicialComplex(pentachora)
    columns = _boundary_columns(K, boundary)
    V = permitted_space(K, field)
    boundary_edges = {e for t in boundary for e in itertools.combinations(t, 2)}
    size = 2 * K.count(3)
    vectors = {b: edge_vector(K, b, field) for b in K.simplices(1)}
    outer = Subspace.span(field, size, (vectors[b] for b in sorted(boundary_edges)))
    inner_edges = Subspace.span(
        field,
        size,
        (v for b, v in vectors.items() if b not in boundary_edges),
    )
    return _Side(
        V.projection(columns),
        outer.projection(columns),
        V.vanishing_on(columns),
        inner_edges,
    )


def verify_cluster(
    k: int,
    selection: Sequence[int] | None,
    field: FieldSpec,
) -> ClusterReport:
    """Compare the permitted colorings of both sides of a cluster.

    Checks that both sides restrict to the same boundary colorings, that these
    are spanned by the edge vectors of boundary edges, and that the colorings
    vanishing on the boundary have the dimension of `INNER_DIMENSIONS` and
    are spanned by the edge vectors of inner edges.

    >>> from hexcol.fields import field_make
    >>> report = verify_cluster(5, None, field_make(2))
    >>> report.passed, report.inner_dims
    (True, (4, 0))
    """
    C = cluster(k, selection)
    left = _side(C.left, C.boundary, field)
    right = _side(C.right, C.boundary, field)
    checks = [
        Check(
            "restriction_match",
            left.restricted == right.restricted,
            f"dims {left.restricted.dim} and {right.restricted.dim}",
        ),
        Check(
            "boundary_generated",
            left.boundary_edges == left.restricted == right.boundary_edges,
        ),
    ]
    for name, side, size in (("left", left, C.k), ("right", right, 6 - C.k)):
        expected = INNER_DIMENSIONS[size]
        checks += [
            Check(
                f"inner_dim_{name}",
                side.inner.dim == expected,
                f"{side.inner.dim} (expected {expected})",
            ),
            Check(f"inner_generated_{name}", side.inner == side.inner_edges),
        ]
    report = ClusterReport(C, field, (left.inner.dim, right.inner.dim), tuple(checks))
    failure = first_failure(checks)
    if failure is not None:
        logger.info("Cluster %s over %s failed %s", C.selection, field, failure.name)
    return report


class MoveApplication(NamedTuple):
    """A Pachner move located in a host triangulation."""

    host: Triangulation
    """Triangulation the move applies to."""

    vertices: tuple[int, ...]
    """The six vertices ``W`` of the move, a fresh one included for 1-5."""

    dropped: tuple[int, ...]
    """Vertices ``D`` whose opposite facets are removed."""

    @property
    def kind(self) -> MoveKind:
        """Which move."""
        return MoveKind.from_size(len(self.dropped))

    @property
    def left(self) -> tuple[Simplex, ...]:
        """Pentachora removed."""
        return _sides(self.vertices, self.dropped)[0]

    @property
    def right(self) -> tuple[Simplex, ...]:
        """Pentachora added."""
        return _sides(self.vertices, self.dropped)[1]

    @property
    def fresh(self) -> int | None:
        """Vertex introduced by a 1-5 move."""
        if self.kind == MoveKind.ONE_FIVE:
            return self.dropped[0]
        return None


def move_application(
    T: Triangulation,
    vertices: Sequence[int],
    dropped: Sequence[int],
) -> MoveApplication:
    """Locate a move and check it applies.

    For a 1-5 move ``dropped`` is the single fresh vertex ``N_0 + 1``.

    Raises:
        MoveError: The left side is not in ``T`` or the right side would
            create a simplex ``T`` already has.
    """
    W = tuple(sorted(vertices))
    D = tuple(sorted(dropped))
    if len(set(W)) != 6 or not 1 <= len(D) <= 5 or not set(D) < set(W):  # noqa: PLR2004
        msg = f"Move needs six vertices and 1 to 5 of them dropped, got {W}, {D}"
        raise MoveError(msg)
    application = MoveApplication(T, W, D)
    if application.kind == MoveKind.ONE_FIVE:
        if D[0] != T.num_vertices + 1:
            msg = f"A 1-5 move introduces vertex {T.num_vertices + 1}, got {D[0]}"
            raise MoveError(msg)
    elif T.contains(D):
        msg = f"Simplex {D} already exists, the move would duplicate it"
        raise MoveError(msg)
    index = T.index(4)
    missing = [u for u in application.left if u not in index]
    if missing:
        msg = f"Pentachora {missing} are not in the triangulation"
        raise MoveError(msg)
    common = tuple(v for v in W if v not in D)
    removes_star = len(T.facets_containing(common)) == len(D)
    if application.kind != MoveKind.ONE_FIVE and not removes_star:
        msg = f"Simplex {common} lies in more pentachora than the move removes"
        raise MoveError(msg)
    return application


def apply_move(app: MoveApplication, *, validate: bool = True) -> Triangulation:
    """Replace the left side of ``app`` by its right side.

    The host is left untouched. A 5-1 move removes a vertex and relabels the
    higher vertices down by one.

    >>> from hexcol.complex import simplex_boundary
    >>> S4 = simplex_boundary(4)
    >>> T = apply_move(move_application(S4, (1, 2, 3, 4, 5, 7), (7,)))
    >>> T.num_vertices, T.count(4)
    (7, 10)

    Raises:
        MoveError: The move does not apply, or the result is not closed.
    """
    T = app.host
    facets = set(T.facets)
    for u in app.left:
        if u not in facets:
            msg = f"Pentachoron {u} is not in the triangulation"
            raise MoveError(msg)
        facets.remove(u)
    for u in app.right:
        if u in facets:
            msg = f"Pentachoron {u} is already in the triangulation"
            raise MoveError(msg)
        facets.add(u)
    result = Triangulation.from_facets(sorted(facets))
    if validate:
        report = validate_closed(result)
        if not report.passed:
            msg = f"{app.kind} move at {app.vertices} leaves a non-closed complex"
            raise MoveError(msg)
    logger.debug(
        "Applied %s move at %s: %d -> %d pentachora",
        app.kind,
        app.vertices,
        T.count(4),
        result.count(4),
    )
    return result


def available_moves(T: Triangulation, k: int) -> list[MoveApplication]:
    """Every place where a move removing ``k`` pentachora applies.

    >>> from hexcol.complex import simplex_boundary
    >>> [len(available_moves(simplex_boundary(4), k)) for k in range(1, 6)]
    [6, 0, 0, 0, 0]
    """
    if k == 1:
        fresh = T.num_vertices + 1
        return [MoveApplication(T, (*u, fresh), (fresh,)) for u in T.simplices(4)]
    moves = []
    for common in T.simplices(5 - k):
        star = T.facets_containing(common)
        if len(star) != k:
            continue
        vertices = tuple(sorted({v for u in star for v in u}))
        if len(vertices) != 6:  # noqa: PLR2004
            continue
        dropped = tuple(v for v in vertices if v not in common)
        if T.contains(dropped):
            continue
        moves.append(MoveApplication(T, vertices, dropped))
    return moves


def random_moves(
    T: Triangulation,
    rng: np.random.Generator,
    length: int,
    kinds: Sequence[MoveKind] = tuple(MoveKind),
) -> tuple[Triangulation, list[MoveApplication]]:
    """Apply ``length`` random moves of the given ``kinds``.

    Each step draws a kind among those with an available location, then a
    location. Returns the final triangulation and the applied moves.

    Raises:
        MoveError: No move of the given kinds applies at some step.
    """
    applied = []
    for _ in range(length):
        options = []
        for kind in rng.permutation(len(kinds)):
            options = available_moves(T, MoveKind(kinds[kind]).size)
            if options:
                break
        if not options:
            msg = f"No {', '.join(map(str, kinds))} move applies"
            raise MoveError(msg)
        app = options[int(rng.integers(len(options)))]
        T = apply_move(app, validate=False)
        applied.append(app)
    return T, applied


def inverse_move(app: MoveApplication, result: Triangulation) -> MoveApplication:
    """Move undoing ``app`` on its ``result``.

    The inverse of a 5-1 move puts the vertex back as the last vertex, so
    applying it gives the host up to relabeling.
    """
    W, D = app.vertices, app.dropped
    if app.kind == MoveKind.FIVE_ONE:
        (removed,) = set(W) - set(D)
        pentachoron = tuple(v if v < removed else v - 1 for v in D)
        fresh = result.num_vertices + 1
        return MoveApplication(result, (*pentachoron, fresh), (fresh,))
    return MoveApplication(result, W, tuple(v for v in W if v not in D))
