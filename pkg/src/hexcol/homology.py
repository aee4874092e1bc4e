"""Simplicial homology and cohomology with field coefficients."""

from __future__ import annotations

from collections import deque
from typing import TYPE_CHECKING, List, NamedTuple, Sequence, Union

from hexcol.complex import MAX_DIMENSION
from hexcol.exceptions import (
    CocycleError,
    DimensionError,
    DisconnectedComplexError,
    OrientationError,
    TriangulationError,
    VerificationError,
)
from hexcol.linalg import Matrix, QuotientSpace, Subspace, mat_inverse, mat_rref
from hexcol.polynomials import MPoly
from hexcol.utils import logger

if TYPE_CHECKING:
    from hexcol.complex import SimplicialComplex
    from hexcol.fields import FieldSpec

__all__ = [
    "Chain",
    "Cochain",
    "HomologyBasis",
    "boundary_matrix",
    "coboundary_matrix",
    "cycles",
    "boundaries",
    "cocycles",
    "coboundaries",
    "homology_basis",
    "cohomology_basis",
    "betti_numbers",
    "fundamental_cycle",
    "pair",
    "class_coordinates",
    "coboundary_cochain",
]

Chain = List[int]
"""Coefficients over the lexicographically indexed ``n``-simplices."""

Cochain = Sequence[Union[int, MPoly]]
"""Values on the indexed ``n``-simplices, field elements or polynomials."""


def boundary_matrix(K: SimplicialComplex, n: int, field: FieldSpec) -> Matrix:
    """Boundary ``d_n`` as an ``N_{n-1} x N_n`` matrix.

    The column of an ``n``-simplex has ``(-1)^m`` on the face missing its
    ``m``-th vertex (from 0).

    >>> from hexcol.complex import simplex_boundary
    >>> from hexcol.fields import field_make
    >>> boundary_matrix(simplex_boundary(1), 1, field_make(3)).to_dense()
    [[2, 2, 0], [1, 0, 2], [0, 1, 1]]

    Raises:
        DimensionError: ``n`` outside ``1 .. 4``.
    """
    if not 1 <= n <= MAX_DIMENSION:
        msg = f"Boundary degree {n} outside 1..{MAX_DIMENSION}"
        raise DimensionError(msg)
    faces = K.index(n - 1)
    minus_one = field.neg(1)
    rows: list[dict[int, int]] = [{} for _ in range(len(faces))]
    for j, simplex in enumerate(K.simplices(n)):
        for m in range(n + 1):
            face = simplex[:m] + simplex[m + 1 :]
            rows[faces[face]][j] = minus_one if m % 2 else 1
    return Matrix(field, (len(rows), K.count(n)), rows)


def coboundary_matrix(K: SimplicialComplex, n: int, field: FieldSpec) -> Matrix:
    """Coboundary ``delta_n`` as an ``N_{n+1} x N_n`` matrix."""
    if n + 1 > MAX_DIMENSION:
        return Matrix(field, (0, K.count(n)))
    return boundary_matrix(K, n + 1, field).transpose()


def cycles(K: SimplicialComplex, n: int, field: FieldSpec) -> Subspace:
    """``Z_n = ker d_n``."""
    if n == 0:
        return Subspace.full(field, K.count(0))
    return mat_rref(boundary_matrix(K, n, field)).kernel


def boundaries(K: SimplicialComplex, n: int, field: FieldSpec) -> Subspace:
    """``B_n = im d_{n+1}``."""
    if n + 1 > K.dimension:
        return Subspace.zero(field, K.count(n))
    columns = boundary_matrix(K, n + 1, field).transpose().rows
    return Subspace.span(field, K.count(n), columns)


def cocycles(K: SimplicialComplex, n: int, field: FieldSpec) -> Subspace:
    """``Z^n = ker delta_n``."""
    return mat_rref(coboundary_matrix(K, n, field)).kernel


def coboundaries(K: SimplicialComplex, n: int, field: FieldSpec) -> Subspace:
    """``B^n = im delta_{n-1}``."""
    if n == 0:
        return Subspace.zero(field, K.count(0))
    return Subspace.span(field, K.count(n), boundary_matrix(K, n, field).rows)


class HomologyBasis(NamedTuple):
    """Basis of ``H_n`` or ``H^n`` given by representatives."""

    degree: int
    """Degree ``n``."""

    quotient: QuotientSpace
    """Cycles modulo boundaries (or cocycles modulo coboundaries)."""

    representatives: tuple[tuple[int, ...], ...]
    """One cycle (cocycle) per basis class."""

    @property
    def dim(self) -> int:
        """Number of basis classes."""
        return len(self.representatives)


def homology_basis(K: SimplicialComplex, n: int, field: FieldSpec) -> HomologyBasis:
    """Cycles representing a basis of ``H_n(K, field)``.

    >>> from hexcol.fields import field_make
    >>> from hexcol.fixtures import fixture
    >>> homology_basis(fixture("S1"), 1, field_make(2)).representatives
    ((1, 1, 1),)
    """
    quotient = QuotientSpace(cycles(K, n, field), boundaries(K, n, field))
    representatives = tuple(tuple(r) for r in quotient.representatives())
    return HomologyBasis(n, quotient, representatives)


def pair(cochain: Cochain, chain: Sequence[int], field: FieldSpec) -> int | MPoly:
    """Evaluate a cochain on a chain, ``sum c(s) h(s)``."""
    if len(cochain) != len(chain):
        msg = f"Cochain of length {len(cochain)} paired with chain of {len(chain)}"
        raise DimensionError(msg)
    total: int | MPoly = 0
    for value, coeff in zip(cochain, chain):
        if not coeff:
            continue
        if isinstance(value, MPoly):
            term = value.scale(coeff)
            total = term + total if isinstance(total, MPoly) else term
        else:
            addend = field.mul(value, coeff)
            if isinstance(total, MPoly):
                total = total + MPoly.constant(field, total.nvars, addend)
            else:
                total = field.add(total, addend)
    return total


def cohomology_basis(
    K: SimplicialComplex,
    n: int,
    field: FieldSpec,
    homology: HomologyBasis | None = None,
) -> HomologyBasis:
    """Cocycles dual to the cycles of `homology_basis`.

    The cocycle ``i`` evaluates to ``1`` on cycle ``i`` and to ``0`` on the
    others.

    Raises:
        VerificationError: Homology and cohomology dimensions differ.
    """
    if homology is None:
        homology = homology_basis(K, n, field)
    quotient = QuotientSpace(cocycles(K, n, field), coboundaries(K, n, field))
    if quotient.dim != homology.dim:
        msg = f"dim H^{n} = {quotient.dim} but dim H_{n} = {homology.dim}"
        raise VerificationError(msg)
    generators = quotient.representatives()
    if not generators:
        return HomologyBasis(n, quotient, ())
    evaluation = Matrix(
        field,
        (len(generators), homology.dim),
        [[pair(g, h, field) for h in homology.representatives] for g in generators],
    )
    inverse = mat_inverse(evaluation)
    size = K.count(n)
    representatives = []
    for row in inverse.rows:
        dual = [0] * size
        for k, coeff in row.items():
            for s, value in enumerate(generators[k]):
                if value:
                    dual[s] = field.add(dual[s], field.mul(coeff, value))
        representatives.append(tuple(dual))
    return HomologyBasis(n, quotient, tuple(representatives))


def betti_numbers(K: SimplicialComplex, field: FieldSpec) -> tuple[int, ...]:
    """``dim H^n(K, field)`` for ``n = 0 .. dim K``.

    >>> from hexcol.fields import field_make
    >>> from hexcol.fixtures import fixture
    >>> betti_numbers(fixture("RP2"), field_make(2))
    (1, 1, 1)
    >>> betti_numbers(fixture("RP2"), field_make(3))
    (1, 0, 0)
    """
    ranks = [0] * (K.dimension + 2)
    for n in range(1, K.dimension + 1):
        ranks[n] = mat_rref(boundary_matrix(K, n, field)).rank
    return tuple(
        K.count(n) - ranks[n] - ranks[n + 1] for n in range(K.dimension + 1)
    )


def fundamental_cycle(K: SimplicialComplex, field: FieldSpec) -> Chain:
    """Top dimensional cycle representing the fundamental class.

    In characteristic 2 every facet has coefficient 1; otherwise facets get
    coherent signs, the first facet being positive.

    >>> from hexcol.complex import simplex_boundary
    >>> from hexcol.fields import field_make
    >>> fundamental_cycle(simplex_boundary(2), field_make(3))
    [1, 2, 1, 2]

    Raises:
        TriangulationError: ``K`` has boundary.
        DisconnectedComplexError: ``K`` is not connected.
        OrientationError: ``K`` is not orientable and the characteristic is odd.
    """
    facets = K.facets
    ridges: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    for i, facet in enumerate(facets):
        for m in range(len(facet)):
            ridges.setdefault(facet[:m] + facet[m + 1 :], []).append((i, m))
    if any(len(owners) != 2 for owners in ridges.values()):  # noqa: PLR2004
        msg = "A fundamental cycle needs a complex without boundary"
        raise TriangulationError(msg)
    if not K.is_connected():
        msg = "A fundamental cycle needs a connected complex, split its components"
        raise DisconnectedComplexError(msg)
    if field.characteristic == 2:  # noqa: PLR2004
        return [1] * len(facets)

    signs = [0] * len(facets)
    signs[0] = 1
    queue = deque([0])
    while queue:
        i = queue.popleft()
        facet = facets[i]
        for m in range(len(facet)):
            for j, m_other in ridges[facet[:m] + facet[m + 1 :]]:
                if j == i:
                    continue
                expected = -signs[i] * (-1) ** (m + m_other)
                if not signs[j]:
                    signs[j] = expected
                    queue.append(j)
                elif signs[j] != expected:
                    msg = f"Complex is not orientable over {field.name}"
                    raise OrientationError(msg)
    logger.debug("Oriented %d facets", len(facets))
    return [field.from_int(sign) for sign in signs]


def class_coordinates(
    K: SimplicialComplex,
    n: int,
    cochain: Sequence[int],
    field: FieldSpec,
    homology: HomologyBasis | None = None,
) -> list[int]:
    """Coordinates of the class of a cocycle in the basis of `cohomology_basis`.

    These are the values of ``cochain`` on the cycles of `homology_basis`.

    Raises:
        CocycleError: ``cochain`` is not a cocycle.
    """
    if any(coboundary_matrix(K, n, field).apply(cochain)):
        msg = f"Cochain is not a {n}-cocycle"
        raise CocycleError(msg)
    if homology is None:
        homology = homology_basis(K, n, field)
    return [int(pair(cochain, cycle, field)) for cycle in homology.representatives]


def coboundary_cochain(
    K: SimplicialComplex,
    n: int,
    cochain: Cochain,
    field: FieldSpec,
) -> list[int | MPoly]:
    """Simplicial coboundary of an ``n``-cochain with field or polynomial values."""
    index = K.index(n)
    if len(cochain) != len(index):
        msg = f"Expected {len(index)} values, got {len(cochain)}"
        raise DimensionError(msg)
    result: list[int | MPoly] = []
    for simplex in K.simplices(n + 1):
        total: int | MPoly = 0
        for m in range(n + 2):
            value = cochain[index[simplex[:m] + simplex[m + 1 :]]]
            if isinstance(value, MPoly):
                signed = -value if m % 2 else value
                total = signed + total if isinstance(total, MPoly) else signed
            else:
                signed_value = field.neg(value) if m % 2 else value
                if isinstance(total, MPoly):
                    total = total + MPoly.constant(field, total.nvars, signed_value)
                else:
                    total = field.add(total, signed_value)
        result.append(total)
    return result
