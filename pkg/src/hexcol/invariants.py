"""Invariant polynomials of 4-manifolds from hexagon cocycles.

A cocycle is evaluated on a generic permitted coloring: the lifts ``v_i`` of a
basis of the coloring homology are combined as ``sum X_i v_i`` with
indeterminates ``X_1 .. X_d`` (and ``X'_1 .. X'_d`` for the second slot of a
bilinear cocycle). The resulting simplicial cocycle takes polynomial values;
pairing it with homology classes gives the invariant polynomials.
"""

from __future__ import annotations

import itertools
from typing import TYPE_CHECKING, Iterator, NamedTuple, Sequence, Union

import numpy as np

from hexcol.coloring import coloring_columns, coloring_homology, permitted_space
from hexcol.complex import SimplicialComplex, component_facets
from hexcol.config import check_cap
from hexcol.enums import CochainKind
from hexcol.exceptions import (
    CocycleError,
    DimensionError,
    FieldError,
    MembershipError,
)
from hexcol.fields import field_make
from hexcol.hexagon import builtin_cocycle, is_cocycle
from hexcol.homology import fundamental_cycle, homology_basis, pair
from hexcol.linalg import Matrix, Subspace, mat_rref
from hexcol.polynomials import MPoly, poly_substitute_linear
from hexcol.utils import logger

if TYPE_CHECKING:
    from hexcol.coloring import ColoringHomology
    from hexcol.fields import FieldSpec
    from hexcol.hexagon import HexCochain
    from hexcol.linalg import Vector

__all__ = [
    "GenericColoring",
    "InvariantPolynomial",
    "ValueDistribution",
    "EqualityReport",
    "chain_map",
    "gcol",
    "value_distribution",
    "equality_report",
    "variable_names",
    "bilinear_rank",
    "swap_variables",
    "is_swap_symmetric",
    "linear_substitution",
    "general_linear_group",
    "find_linear_equivalence",
    "frobenius_twist",
]

ChainValue = Union[int, MPoly]


def variable_names(d: int, kind: CochainKind = CochainKind.POLYNOMIAL) -> list[str]:
    """``X1 .. Xd``, followed by ``X1' .. Xd'`` for bilinear polynomials.

    >>> variable_names(2, CochainKind.BILINEAR)
    ['X1', 'X2', "X1'", "X2'"]
    """
    names = [f"X{i + 1}" for i in range(d)]
    if kind == CochainKind.BILINEAR:
        names += [f"{name}'" for name in names]
    return names


class GenericColoring:
    """Coloring ``sum X_i v_i`` with linear polynomial entries.

    Every specialization of the ``X_i`` is a permitted coloring of the complex.
    """

    def __init__(
        self,
        homology: ColoringHomology,
        lifts: Sequence[Vector] | None = None,
    ) -> None:
        if lifts is None:
            lifts = homology.representatives()
        if len(lifts) != homology.d:
            msg = f"Expected {homology.d} lifts, got {len(lifts)}"
            raise DimensionError(msg)
        size = homology.permitted.ambient_dim
        for lift in lifts:
            if not homology.permitted.contains(lift):
                msg = "Lift is not a permitted coloring"
                raise MembershipError(msg)
        self._homology = homology
        self._lifts = Matrix(homology.field, (len(lifts), size), lifts)
        self._forms = self._lifts.transpose()

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(d={self.nvars})"

    @property
    def homology(self) -> ColoringHomology:
        """Coloring homology the lifts represent."""
        return self._homology

    @property
    def field(self) -> FieldSpec:
        """Coefficient field."""
        return self._homology.field

    @property
    def nvars(self) -> int:
        """Number ``d`` of indeterminates."""
        return self._lifts.shape[0]

    @property
    def lifts(self) -> Matrix:
        """Lifted colorings as rows."""
        return self._lifts

    @property
    def forms(self) -> Matrix:
        """Row ``c`` holds the coefficients of ``X`` in coloring column ``c``."""
        return self._forms

    def entry(self, column: int) -> MPoly:
        """Linear polynomial in coloring column ``column``."""
        row = self._forms.rows[column]
        return MPoly.linear(self.field, [row.get(i, 0) for i in range(self.nvars)])

    def specialize(self, point: Sequence[int]) -> list[int]:
        """Permitted coloring obtained by setting ``X = point``."""
        return self._forms.apply(point)


def _check_level(K: SimplicialComplex, c: HexCochain) -> None:
    if c.level > K.dimension:
        msg = f"A {K.dimension}-dimensional complex has no {c.level}-simplices"
        raise DimensionError(msg)


def _generic_chain_map(
    K: SimplicialComplex,
    c: HexCochain,
    coloring: GenericColoring,
) -> list[ChainValue]:
    forms = coloring.forms.rows
    d = coloring.nvars
    bilinear = c.kind == CochainKind.BILINEAR
    nvars = 2 * d if bilinear else d
    free = c.space.free
    values: list[ChainValue] = []
    for simplex in K.simplices(c.level):
        columns = coloring_columns(K, simplex)
        rows = [forms[columns[f]] for f in free]
        if bilinear:
            rows += [{i + d: v for i, v in forms[columns[f]].items()} for f in free]
        substitution = Matrix(c.field, (len(rows), nvars), rows)
        values.append(poly_substitute_linear(c.poly, substitution))
    return values


def chain_map(
    K: SimplicialComplex,
    c: HexCochain,
    coloring: Sequence[int] | GenericColoring,
    second: Sequence[int] | None = None,
    *,
    check: bool = True,
) -> list[ChainValue]:
    """Simplicial cochain ``s -> c(coloring restricted to s)``.

    Each ``n``-simplex ``s`` of ``K`` is identified with the standard simplex by
    the order of its vertices. A bilinear ``c`` takes ``coloring`` in the plain
    slot and ``second`` (``coloring`` when omitted) in the primed one; on a
    `GenericColoring` the primed slot gets the ``X'`` indeterminates.

    >>> from hexcol.complex import simplex_boundary
    >>> from hexcol.fields import field_make
    >>> from hexcol.hexagon import builtin_cocycle
    >>> K = simplex_boundary(4)
    >>> c = builtin_cocycle("c3_bilinear", field_make(3))
    >>> chain_map(K, c, [0] * 30)[:3]
    [0, 0, 0]

    Raises:
        MembershipError: A coloring is not permitted (only when ``check``).
        DimensionError: ``K`` has no simplices of the cochain's level.
    """
    _check_level(K, c)
    if isinstance(coloring, GenericColoring):
        return _generic_chain_map(K, c, coloring)
    first = list(coloring)
    other = first if second is None else list(second)
    if check:
        permitted = permitted_space(K, c.field)
        for vector in (first, other):
            if not permitted.contains(vector):
                msg = "Coloring is not permitted"
                raise MembershipError(msg)
    bilinear = c.kind == CochainKind.BILINEAR
    free = c.space.free
    values: list[ChainValue] = []
    for simplex in K.simplices(c.level):
        columns = coloring_columns(K, simplex)
        point = [first[columns[f]] for f in free]
        if bilinear:
            point += [other[columns[f]] for f in free]
        values.append(c.poly.evaluate(point))
    return values


class InvariantPolynomial(NamedTuple):
    """One polynomial produced by `gcol`."""

    level: int
    """Degree of the source cocycle, 3 or 4."""

    position: int
    """Position in the third cohomology basis (level 3) or component (level 4)."""

    kind: CochainKind
    """Kind of the source cocycle."""

    poly: MPoly
    """Polynomial in ``X`` (and ``X'``)."""

    @property
    def d(self) -> int:
        """Number of unprimed indeterminates."""
        copies = 2 if self.kind == CochainKind.BILINEAR else 1
        return self.poly.nvars // copies

    @property
    def label(self) -> str:
        """Short name such as ``p3[1]`` or ``p4[1]``."""
        return f"p{self.level}[{self.position + 1}]"

    def format(self) -> str:
        """Polynomial written with ``X1 .. Xd`` names."""
        return self.poly.format(variable_names(self.d, self.kind))


def _as_poly(value: ChainValue, field: FieldSpec, nvars: int) -> MPoly:
    if isinstance(value, MPoly):
        return value
    return MPoly.constant(field, nvars, value)


def gcol(
    K: SimplicialComplex,
    c: HexCochain,
    coloring: GenericColoring | None = None,
) -> list[InvariantPolynomial]:
    """Invariant polynomials of the hexagon cocycle ``c`` on ``K``.

    Level 3 gives one polynomial per basis class of the third cohomology (the
    values on the cycles of `homology_basis`); level 4 gives one polynomial per
    connected component, the value on its fundamental cycle.

    >>> from hexcol.fields import field_make
    >>> from hexcol.fixtures import fixture
    >>> from hexcol.hexagon import builtin_cocycle
    >>> c = builtin_cocycle("c4_cubic_1", field_make(2))
    >>> [p.format() for p in gcol(fixture("CP2"), c)]
    ['X1^3']

    Raises:
        CocycleError: ``c`` is not a cocycle.
        OrientationError: Level 4 over odd characteristic on a non-orientable
            component.
    """
    if not is_cocycle(c):
        msg = "Invariant polynomials need a hexagon cocycle"
        raise CocycleError(msg)
    _check_level(K, c)
    field = c.field
    if coloring is None:
        coloring = GenericColoring(coloring_homology(K, field))
    copies = 2 if c.kind == CochainKind.BILINEAR else 1
    nvars = copies * coloring.nvars
    values = _generic_chain_map(K, c, coloring)
    logger.debug("Evaluated a level %d cocycle on %d simplices", c.level, len(values))

    polynomials = []
    if c.level == 3:  # noqa: PLR2004
        basis = homology_basis(K, 3, field)
        for i, cycle in enumerate(basis.representatives):
            value = _as_poly(pair(values, cycle, field), field, nvars)
            polynomials.append(InvariantPolynomial(3, i, c.kind, value))
        return polynomials

    index = K.index(4)
    for i, facets in enumerate(component_facets(K)):
        signs = fundamental_cycle(SimplicialComplex(facets), field)
        component = [values[index[facet]] for facet in facets]
        value = _as_poly(pair(component, signs, field), field, nvars)
        polynomials.append(InvariantPolynomial(4, i, c.kind, value))
    return polynomials


class ValueDistribution(NamedTuple):
    """How often a polynomial takes each value over ``F_{p^k}``."""

    field: FieldSpec
    """Field the arguments range over."""

    counts: dict[int, int]
    """Value code to number of argument tuples, values never taken are omitted."""

    @property
    def total(self) -> int:
        """Number of argument tuples, ``|F| ** nvars``."""
        return sum(self.counts.values())

    def format(self) -> dict[str, int]:
        """Counts keyed by printed field elements."""
        return {self.field.format(v): n for v, n in sorted(self.counts.items())}


def value_distribution(
    P: MPoly | InvariantPolynomial,
    k: int = 1,
) -> ValueDistribution:
    """Evaluate ``P`` at every point of ``F_{p^k}`` and count the values.

    The coefficients of ``P`` must lie in a prime field ``F_p`` when ``k > 1``.

    >>> from hexcol.fields import field_make
    >>> F = field_make(2)
    >>> cube = MPoly.variable(F, 1, 0) ** 3
    >>> value_distribution(cube, 2).counts
    {0: 1, 1: 3}

    Raises:
        FieldError: ``k > 1`` over an extension field.
        ResourceCapError: More points than ``max_enumeration_points``.
    """
    poly = P.poly if isinstance(P, InvariantPolynomial) else P
    base = poly.field
    if k < 1:
        msg = f"Extension degree must be positive, got {k}"
        raise FieldError(msg)
    if k > 1 and not base.is_prime_field:
        msg = f"Extensions are taken of prime fields, got {base.name}"
        raise FieldError(msg)
    field = field_make(base.characteristic, k) if k > 1 else base
    q, nvars = field.order, poly.nvars
    size = q**nvars
    check_cap("max_enumeration_points", size)
    logger.debug("Enumerating %d points of %s", size, field.name)

    add, mul = field.tables()
    points = np.arange(size, dtype=np.int64)
    coordinates = [(points // q**j) % q for j in range(nvars)]
    total = np.zeros(size, dtype=np.int64)
    for exponent, coeff in poly.terms():
        term = np.full(size, coeff, dtype=np.int64)
        for j, e in enumerate(exponent):
            for _ in range(e):
                term = mul[term, coordinates[j]]
        total = add[total, term]
    counts = np.bincount(total, minlength=q)
    return ValueDistribution(
        field,
        {int(v): int(n) for v, n in enumerate(counts) if n},
    )


class EqualityReport(NamedTuple):
    """Comparison of the invariants of the two cubic cocycles."""

    q: tuple[MPoly, ...]
    """Invariant of ``c4_cubic_1``, one per component."""

    r: tuple[MPoly, ...]
    """Invariant of ``c4_cubic_2``, one per component."""

    @property
    def equal(self) -> bool:
        """Whether ``q == r`` on every component."""
        return self.q == self.r

    @property
    def difference(self) -> tuple[MPoly, ...]:
        """``r - q`` per component."""
        return tuple(b - a for a, b in zip(self.q, self.r))


def equality_report(
    K: SimplicialComplex,
    field: FieldSpec,
    coloring: GenericColoring | None = None,
) -> EqualityReport:
    """Compare ``gcol`` of ``c4_cubic_1`` and ``c4_cubic_2`` on one coloring basis.

    Raises:
        FieldError: ``field`` does not have characteristic 2.
    """
    if coloring is None:
        coloring = GenericColoring(coloring_homology(K, field))
    q = gcol(K, builtin_cocycle("c4_cubic_1", field), coloring)
    r = gcol(K, builtin_cocycle("c4_cubic_2", field), coloring)
    report = EqualityReport(tuple(p.poly for p in q), tuple(p.poly for p in r))
    logger.info("q %s r", "=" if report.equal else "!=")
    return report


def _bilinear_matrix(poly: MPoly) -> Matrix:
    if poly.nvars % 2:
        msg = "A bilinear polynomial has an even number of variables"
        raise DimensionError(msg)
    d = poly.nvars // 2
    if poly and poly.partial_degrees([range(d), range(d, 2 * d)]) != {(1, 1)}:
        msg = "Polynomial is not of bidegree (1, 1)"
        raise DimensionError(msg)
    rows: list[dict[int, int]] = [{} for _ in range(d)]
    for exponent, coeff in poly.terms():
        i = exponent.index(1)
        j = exponent.index(1, d) - d
        rows[i][j] = coeff
    return Matrix(poly.field, (d, d), rows)


def bilinear_rank(P: MPoly | InvariantPolynomial) -> int:
    """Rank of the Gram matrix of a bidegree ``(1, 1)`` polynomial.

    >>> from hexcol.fields import field_make
    >>> F = field_make(2)
    >>> X1, X2, Y1, Y2 = (MPoly.variable(F, 4, i) for i in range(4))
    >>> bilinear_rank(X1 * Y2 + X2 * Y1)
    2
    """
    poly = P.poly if isinstance(P, InvariantPolynomial) else P
    return mat_rref(_bilinear_matrix(poly)).rank


def swap_variables(poly: MPoly) -> MPoly:
    """Exchange ``X_i`` and ``X'_i``."""
    if poly.nvars % 2:
        msg = "Swapping needs an even number of variables"
        raise DimensionError(msg)
    d = poly.nvars // 2
    return poly.remap([*range(d, 2 * d), *range(d)], poly.nvars)


def is_swap_symmetric(P: MPoly | InvariantPolynomial) -> bool:
    """Whether exchanging ``X`` and ``X'`` leaves the polynomial unchanged."""
    poly = P.poly if isinstance(P, InvariantPolynomial) else P
    return swap_variables(poly) == poly


def _block_diagonal(A: Matrix, copies: int) -> Matrix:
    d = A.shape[0]
    rows = [
        {j + c * d: value for j, value in row.items()}
        for c in range(copies)
        for row in A.rows
    ]
    return Matrix(A.field, (copies * d, copies * d), rows)


def linear_substitution(poly: MPoly, A: Matrix, *, copies: int = 1) -> MPoly:
    """Substitute ``X <- A X`` (and ``X' <- A X'`` when ``copies == 2``).

    >>> from hexcol.fields import field_make
    >>> F = field_make(2)
    >>> X1 = MPoly.variable(F, 2, 0)
    >>> A = Matrix.from_dense(F, [[1, 1], [0, 1]])
    >>> linear_substitution(X1 ** 2, A).format(["X1", "X2"])
    'X1^2 + X2^2'
    """
    if A.shape[0] != A.shape[1] or copies * A.shape[0] != poly.nvars:
        msg = f"Substitution of shape {A.shape} does not fit {poly.nvars} variables"
        raise DimensionError(msg)
    return poly_substitute_linear(poly, _block_diagonal(A, copies))


def general_linear_group(field: FieldSpec, d: int) -> Iterator[Matrix]:
    """Every invertible ``d x d`` matrix over ``field``.

    >>> from hexcol.fields import field_make
    >>> sum(1 for _ in general_linear_group(field_make(2), 2))
    6
    """
    vectors = list(itertools.product(field.elements(), repeat=d))

    def extend(rows: list[tuple[int, ...]], span: Subspace) -> Iterator[Matrix]:
        if len(rows) == d:
            yield Matrix(field, (d, d), rows)
            return
        for vector in vectors:
            if any(vector) and not span.contains(vector):
                grown = span + Subspace.span(field, d, [vector])
                yield from extend([*rows, vector], grown)

    yield from extend([], Subspace.zero(field, d))


def _group_order(q: int, d: int) -> int:
    order = 1
    for i in range(d):
        order *= q**d - q**i
    return order


def _span_dim(polys: Sequence[MPoly]) -> int:
    exponents = sorted({e for poly in polys for e, _ in poly.terms()})
    columns = {e: i for i, e in enumerate(exponents)}
    rows = [{columns[e]: v for e, v in poly.terms()} for poly in polys]
    return Subspace.span(polys[0].field, len(exponents), rows).dim


def _same_span(first: Sequence[MPoly], second: Sequence[MPoly]) -> bool:
    together = _span_dim([*first, *second])
    return _span_dim(first) == _span_dim(second) == together


def find_linear_equivalence(
    computed: Sequence[MPoly],
    expected: Sequence[MPoly],
    *,
    copies: int = 1,
    recombine: bool = True,
) -> Matrix | None:
    """Search an invertible ``A`` carrying ``computed`` onto ``expected``.

    With ``recombine`` the substituted list only has to span the same space as
    ``expected`` (a change of basis of the target cohomology); otherwise it
    must match term by term. Returns ``None`` when no ``A`` works.

    >>> from hexcol.fields import field_make
    >>> F = field_make(2)
    >>> X1, X2 = MPoly.variable(F, 2, 0), MPoly.variable(F, 2, 1)
    >>> A = find_linear_equivalence([X1 ** 3], [X2 ** 3])
    >>> A.to_dense()
    [[0, 1], [1, 0]]

    Raises:
        ResourceCapError: The group is larger than ``max_gl_search``.
    """
    if len(computed) != len(expected):
        return None
    if not computed:
        msg = "Nothing to compare"
        raise DimensionError(msg)
    field = computed[0].field
    d = computed[0].nvars // copies
    check_cap("max_gl_search", _group_order(field.order, d))
    targets = list(expected)
    for A in general_linear_group(field, d):
        image = [linear_substitution(poly, A, copies=copies) for poly in computed]
        if (recombine and _same_span(image, targets)) or image == targets:
            logger.debug("Linear equivalence found: %s", A.to_dense())
            return A
    return None


def frobenius_twist(P: MPoly | InvariantPolynomial) -> MPoly:
    """Substitute ``X'_i <- X_i^2`` in a polynomial over characteristic 2.

    >>> from hexcol.fields import field_make
    >>> F = field_make(2)
    >>> X1, Y1 = MPoly.variable(F, 2, 0), MPoly.variable(F, 2, 1)
    >>> frobenius_twist(X1 * Y1).format(["X1"])
    'X1^3'

    Raises:
        FieldError: The characteristic is not 2.
    """
    poly = P.poly if isinstance(P, InvariantPolynomial) else P
    field = poly.field
    if field.characteristic != 2:  # noqa: PLR2004
        msg = f"The twist needs characteristic 2, got {field.name}"
        raise FieldError(msg)
    if poly.nvars % 2:
        msg = "Twisting needs an even number of variables"
        raise DimensionError(msg)
    d = poly.nvars // 2
    terms: dict[tuple[int, ...], int] = {}
    for exponent, coeff in poly.terms():
        key = tuple(exponent[i] + 2 * exponent[d + i] for i in range(d))
        terms[key] = field.add(terms.get(key, 0), coeff)
    return MPoly(field, d, terms)
