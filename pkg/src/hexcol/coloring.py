"""Permitted colorings and coloring homology.

A coloring of a complex puts a pair ``(x_t, y_t)`` on every tetrahedron ``t``.
As a vector it has length ``2 * N_3``: tetrahedron number ``i`` (lexicographic
order) owns column ``2 i`` for ``x_t`` and column ``2 i + 1`` for ``y_t``.
"""

from __future__ import annotations

import itertools
from typing import TYPE_CHECKING, Dict, Sequence, Tuple

from hexcol.exceptions import MembershipError, TriangulationError, VerificationError
from hexcol.linalg import Matrix, QuotientSpace, Subspace, mat_rref
from hexcol.utils import logger

if TYPE_CHECKING:
    from hexcol.complex import SimplicialComplex, Simplex
    from hexcol.fields import FieldSpec
    from hexcol.linalg import Vector

__all__ = [
    "Block",
    "EdgeVector",
    "ColoringHomology",
    "TETRAHEDRON_EDGES",
    "FUNCTIONAL_TABLE",
    "EDGE_VECTOR_TABLE",
    "coloring_columns",
    "edge_functional_block",
    "edge_functional",
    "edge_functional_matrix",
    "edge_vector",
    "edge_vector_matrix",
    "permitted_space",
    "edge_generated_space",
    "coloring_homology",
]

Block = Tuple[int, int]
"""Pair of integer coefficients acting on ``(x_t, y_t)``."""

EdgeVector = Dict[int, int]
"""Sparse coloring vector, ``column -> nonzero field element``."""

TETRAHEDRON_EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
"""Edges ``k1k2, k1k3, k1k4, k2k3, k2k4, k3k4`` of a tetrahedron by vertex position."""

FUNCTIONAL_TABLE: tuple[Block, ...] = (
    (0, 1),
    (1, -1),
    (-1, 0),
    (-1, 0),
    (1, 1),
    (0, -1),
)
"""Component on ``t = k1k2k3k4`` of the edge functional of each edge of ``t``."""

EDGE_VECTOR_TABLE: tuple[Block, ...] = (
    (1, 0),
    (-1, 1),
    (0, -1),
    (0, -1),
    (1, 1),
    (-1, 0),
)
"""Component on ``t = k1k2k3k4`` of the edge vector of each edge of ``t``."""


def coloring_columns(K: SimplicialComplex, simplex: Sequence[int]) -> list[int]:
    """Columns ``x_t, y_t`` of the tetrahedra of ``simplex``, in lexicographic order."""
    index = K.index(3)
    columns = []
    for t in itertools.combinations(sorted(simplex), 4):
        i = index[t]
        columns += [2 * i, 2 * i + 1]
    return columns


def _edge_position(t: Simplex, edge: Sequence[int]) -> int:
    pair = tuple(sorted(edge))
    for position, (a, b) in enumerate(TETRAHEDRON_EDGES):
        if (t[a], t[b]) == pair:
            return position
    msg = f"Edge {pair} is not an edge of {t}"
    raise TriangulationError(msg)


def edge_functional_block(
    u: Sequence[int],
    ij: Sequence[int],
    t: Sequence[int],
) -> Block:
    """Component on ``t`` of the functional of edge ``ij`` in pentachoron ``u``.

    The table entry of ``ij`` in ``t`` carries the sign ``(-1)^(i+1)`` where
    ``t`` lies opposite the ``i``-th vertex of ``u``.

    >>> edge_functional_block((1, 2, 3, 4, 5), (1, 2), (1, 2, 3, 4))
    (0, 1)
    >>> edge_functional_block((1, 2, 3, 4, 5), (1, 2), (1, 2, 3, 5))
    (0, -1)

    Raises:
        TriangulationError: ``ij`` is not in ``t`` or ``t`` is not in ``u``.
    """
    pentachoron = tuple(sorted(u))
    tetrahedron = tuple(sorted(t))
    missing = set(pentachoron) - set(tetrahedron)
    if (len(pentachoron), len(tetrahedron), len(missing)) != (5, 4, 1):
        msg = f"{tetrahedron} is not a tetrahedron of {pentachoron}"
        raise TriangulationError(msg)
    opposite = pentachoron.index(missing.pop()) + 1
    sign = 1 if opposite % 2 else -1
    a, b = FUNCTIONAL_TABLE[_edge_position(tetrahedron, ij)]
    return (sign * a, sign * b)


def edge_functional(
    K: SimplicialComplex,
    u: Simplex,
    ij: Sequence[int],
    field: FieldSpec,
) -> dict[int, int]:
    """Edge functional of ``ij`` in ``u`` as a sparse row on colorings of ``K``."""
    index = K.index(3)
    row: dict[int, int] = {}
    for t in itertools.combinations(u, 4):
        if not set(ij).issubset(t):
            continue
        i = index[t]
        block = edge_functional_block(u, ij, t)
        for column, value in zip((2 * i, 2 * i + 1), block):
            if value:
                row[column] = field.from_int(value)
    return row


def edge_functional_matrix(K: SimplicialComplex, field: FieldSpec) -> Matrix:
    """All ``10 * N_4`` edge functionals, by pentachoron then edge."""
    rows = [
        edge_functional(K, u, ij, field)
        for u in K.simplices(4)
        for ij in itertools.combinations(u, 2)
    ]
    return Matrix(field, (len(rows), 2 * K.count(3)), rows)


def edge_vector(K: SimplicialComplex, b: Sequence[int], field: FieldSpec) -> EdgeVector:
    """Edge vector of ``b``: the table column of ``b`` on every tetrahedron ``t > b``.

    >>> from hexcol.complex import simplex_boundary
    >>> from hexcol.fields import field_make
    >>> v = edge_vector(simplex_boundary(4), (2, 4), field_make(3))
    >>> v[0], v[1]
    (1, 1)

    Raises:
        TriangulationError: ``b`` is not an edge of ``K``.
    """
    edge = tuple(sorted(b))
    if len(edge) != 2 or not K.contains(edge):  # noqa: PLR2004
        msg = f"{edge} is not an edge of the complex"
        raise TriangulationError(msg)
    index = K.index(3)
    vector: EdgeVector = {}
    tetrahedra = {
        t
        for facet in K.facets_containing(edge)
        for t in itertools.combinations(facet, 4)
        if edge[0] in t and edge[1] in t
    }
    for t in sorted(tetrahedra):
        i = index[t]
        a, c = EDGE_VECTOR_TABLE[_edge_position(t, edge)]
        for column, value in ((2 * i, a), (2 * i + 1, c)):
            if value:
                vector[column] = field.from_int(value)
    return vector


def edge_vector_matrix(K: SimplicialComplex, field: FieldSpec) -> Matrix:
    """Edge vectors of all edges, in lexicographic edge order."""
    rows = [edge_vector(K, b, field) for b in K.simplices(1)]
    return Matrix(field, (len(rows), 2 * K.count(3)), rows)


def permitted_space(K: SimplicialComplex, field: FieldSpec) -> Subspace:
    """Colorings annihilated by every edge functional of every pentachoron.

    >>> from hexcol.complex import Triangulation
    >>> from hexcol.fields import field_make
    >>> permitted_space(Triangulation(5, [(1, 2, 3, 4, 5)]), field_make(2)).dim
    5
    """
    matrix = edge_functional_matrix(K, field)
    logger.debug("Permitted colorings: kernel of a %d x %d matrix", *matrix.shape)
    return mat_rref(matrix).kernel


def edge_generated_space(K: SimplicialComplex, field: FieldSpec) -> Subspace:
    """Span of all edge vectors."""
    matrix = edge_vector_matrix(K, field)
    logger.debug("Edge-generated colorings: span of %d x %d matrix", *matrix.shape)
    return Subspace.span(field, matrix.shape[1], matrix.rows)


class ColoringHomology:
    """Quotient of permitted colorings by the edge-generated ones."""

    def __init__(self, K: SimplicialComplex, quotient: QuotientSpace) -> None:
        self._complex = K
        self._quotient = quotient

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(field={self.field!r}, d={self.d})"

    @property
    def complex(self) -> SimplicialComplex:
        """Colored complex."""
        return self._complex

    @property
    def field(self) -> FieldSpec:
        """Coefficient field."""
        return self._quotient.field

    @property
    def quotient(self) -> QuotientSpace:
        """The underlying `QuotientSpace`."""
        return self._quotient

    @property
    def permitted(self) -> Subspace:
        """Permitted colorings ``V``."""
        return self._quotient.W

    @property
    def edge_generated(self) -> Subspace:
        """Edge-generated colorings ``V0``."""
        return self._quotient.W0

    @property
    def d(self) -> int:
        """``dim V - dim V0``."""
        return self._quotient.dim

    def representatives(self) -> list[list[int]]:
        """Permitted colorings lifting the canonical basis of the quotient."""
        return self._quotient.representatives()

    def coordinates(self, coloring: Vector) -> list[int]:
        """Coordinates of the class of a permitted ``coloring``."""
        return self._quotient.coordinates(coloring)


def coloring_homology(K: SimplicialComplex, field: FieldSpec) -> ColoringHomology:
    """Coloring homology of ``K`` over ``field``.

    >>> from hexcol.complex import simplex_boundary
    >>> from hexcol.fields import field_make
    >>> coloring_homology(simplex_boundary(4), field_make(2)).d
    0

    Raises:
        VerificationError: Some edge vector is not a permitted coloring.
    """
    V = permitted_space(K, field)
    V0 = edge_generated_space(K, field)
    try:
        quotient = QuotientSpace(V, V0)
    except MembershipError as exception:
        msg = "Edge-generated colorings are not all permitted"
        raise VerificationError(msg) from exception
    logger.debug("dim V = %d, dim V0 = %d, d = %d", V.dim, V0.dim, quotient.dim)
    return ColoringHomology(K, quotient)
