"""Constant hexagon cochains on the permitted colorings of standard simplices.

A hexagon ``n``-cochain is a formal polynomial on the space of permitted
colorings of ``Delta^n`` (vertices ``1 .. n+1``). It is stored in canonical
coordinates: the ambient variables ``x_t, y_t`` (tetrahedra in lexicographic
order, ``x`` before ``y``) that are not pivots of the reduced constraint system.
Bilinear cochains use two copies of these coordinates, the second one primed.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache
from typing import TYPE_CHECKING, NamedTuple, Sequence

from hexcol.coloring import edge_functional_matrix
from hexcol.complex import Triangulation, simplex_boundary
from hexcol.config import check_cap
from hexcol.enums import CochainKind, QuotientConvention
from hexcol.exceptions import (
    CochainSyntaxError,
    CocycleError,
    DimensionError,
    FieldError,
    MembershipError,
    VerificationError,
)
from hexcol.linalg import Matrix, QuotientSpace, Subspace, mat_rref
from hexcol.polynomials import Exponent, MPoly, monomials, poly_substitute_linear
from hexcol.utils import logger

if TYPE_CHECKING:
    import numpy as np

    from hexcol.fields import FieldSpec

__all__ = [
    "BUILTIN_COCYCLES",
    "StandardSimplexColorings",
    "HexCochain",
    "HexCohomologyReport",
    "standard_colorings",
    "ambient_variable",
    "ambient_to_canonical",
    "coboundary",
    "is_cocycle",
    "hex_cohomology",
    "builtin_cocycle",
    "parse_cochain",
    "random_cochain",
    "tilde_to_ambient",
    "ambient_to_tilde",
]

MIN_LEVEL = 3
MAX_LEVEL = 5

BUILTIN_COCYCLES = ("c3_bilinear", "c4_bilinear", "c4_cubic_1", "c4_cubic_2")
"""Names accepted by `builtin_cocycle`."""


def _copies(kind: CochainKind) -> int:
    return 2 if kind == CochainKind.BILINEAR else 1


def _block_diagonal(matrix: Matrix, copies: int) -> Matrix:
    if copies == 1:
        return matrix
    nrows, ncols = matrix.shape
    rows = [
        {col + c * ncols: value for col, value in row.items()}
        for c in range(copies)
        for row in matrix.rows
    ]
    return Matrix(matrix.field, (copies * nrows, copies * ncols), rows)


class StandardSimplexColorings:
    """Permitted colorings of ``Delta^n`` and their canonical coordinates.

    >>> from hexcol.fields import field_make
    >>> [standard_colorings(n, field_make(2)).dim for n in (3, 4, 5)]
    [2, 5, 9]
    """

    def __init__(self, level: int, field: FieldSpec) -> None:
        if not MIN_LEVEL <= level <= MAX_LEVEL:
            msg = f"Standard simplex level {level} outside {MIN_LEVEL}..{MAX_LEVEL}"
            raise DimensionError(msg)
        self._level = level
        self._field = field
        if level == MAX_LEVEL:
            self._complex = simplex_boundary(4)
        else:
            vertices = tuple(range(1, level + 2))
            self._complex = Triangulation(level + 1, [vertices])
        self._tetrahedra = tuple(itertools.combinations(range(1, level + 2), 4))
        self._names = tuple(
            f"{letter}{''.join(map(str, t))}"
            for t in self._tetrahedra
            for letter in "xy"
        )

        constraints = mat_rref(edge_functional_matrix(self._complex, field))
        pivots = set(constraints.pivots)
        self._free = tuple(c for c in range(self.ambient_dim) if c not in pivots)
        position = {c: i for i, c in enumerate(self._free)}
        rows: list[dict[int, int]] = [{} for _ in range(self.ambient_dim)]
        for col in self._free:
            rows[col] = {position[col]: 1}
        for lead, row in zip(constraints.pivots, constraints.row_space.rows()):
            rows[lead] = {
                position[col]: field.neg(value)
                for col, value in row.items()
                if col != lead
            }
        self._parametrization = Matrix(field, (self.ambient_dim, self.dim), rows)
        logger.debug("V(Delta^%d) over %s has dimension %d", level, field, self.dim)

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}(level={self._level}, "
            f"field={self._field!r}, dim={self.dim})"
        )

    @property
    def level(self) -> int:
        """``n``."""
        return self._level

    @property
    def field(self) -> FieldSpec:
        """Coefficient field."""
        return self._field

    @property
    def complex(self) -> Triangulation:
        """Pentachora carrying the constraints (a lone tetrahedron for ``n = 3``)."""
        return self._complex

    @property
    def tetrahedra(self) -> tuple[tuple[int, ...], ...]:
        """Tetrahedra of ``Delta^n`` in lexicographic order."""
        return self._tetrahedra

    @property
    def ambient_dim(self) -> int:
        """``2 * C(n + 1, 4)``."""
        return 2 * len(self._tetrahedra)

    @property
    def ambient_names(self) -> tuple[str, ...]:
        """Names ``x1234, y1234, ...`` of the ambient variables."""
        return self._names

    @property
    def free(self) -> tuple[int, ...]:
        """Ambient indices of the canonical coordinates."""
        return self._free

    @property
    def dim(self) -> int:
        """Dimension of the permitted colorings."""
        return len(self._free)

    @property
    def parametrization(self) -> Matrix:
        """``ambient_dim x dim`` matrix expressing every ambient variable."""
        return self._parametrization

    def names(self, kind: CochainKind) -> list[str]:
        """Names of the canonical coordinates, primed for the second copy."""
        base = [self._names[c] for c in self._free]
        if kind == CochainKind.BILINEAR:
            return base + [f"{name}'" for name in base]
        return base

    def ambient_index(self, letter: str, tetrahedron: Sequence[int]) -> int:
        """Ambient index of ``x_t`` or ``y_t``.

        Raises:
            CochainSyntaxError: ``t`` is not a tetrahedron of ``Delta^n``.
        """
        t = tuple(tetrahedron)
        try:
            i = self._tetrahedra.index(t)
        except ValueError:
            msg = f"{letter}{t} is not a variable of Delta^{self._level}"
            raise CochainSyntaxError(msg) from None
        return 2 * i + (letter == "y")

    def restrict(self, f: MPoly, kind: CochainKind) -> MPoly:
        """Canonical form of a polynomial in the ambient variables."""
        copies = _copies(kind)
        if f.nvars != copies * self.ambient_dim:
            msg = (
                f"Ambient polynomial has {f.nvars} variables, expected "
                f"{copies * self.ambient_dim}"
            )
            raise DimensionError(msg)
        return poly_substitute_linear(f, _block_diagonal(self._parametrization, copies))

    @lru_cache(maxsize=None)  # noqa: B019
    def face_matrix(self, k: int) -> Matrix:
        """Pull back of canonical coordinates of ``Delta^(n-1)`` along face ``k``.

        Face ``k`` (from 1) of ``Delta^n`` omits vertex ``k``; its vertices keep
        their order.
        """
        lower = standard_colorings(self._level - 1, self._field)
        rows = []
        for col in lower.free:
            t = lower.tetrahedra[col // 2]
            image = tuple(v if v < k else v + 1 for v in t)
            ambient = 2 * self._tetrahedra.index(image) + col % 2
            rows.append(self._parametrization.rows[ambient])
        return Matrix(self._field, (lower.dim, self.dim), rows)


@lru_cache(maxsize=None)
def standard_colorings(level: int, field: FieldSpec) -> StandardSimplexColorings:
    """Cached `StandardSimplexColorings`."""
    return StandardSimplexColorings(level, field)


class HexCochain:
    """Hexagon cochain in canonical coordinates.

    Raises:
        CocycleError: A bilinear cochain is not of bidegree ``(1, 1)``.
    """

    def __init__(self, level: int, kind: CochainKind, poly: MPoly) -> None:
        space = standard_colorings(level, poly.field)
        copies = _copies(kind)
        if poly.nvars != copies * space.dim:
            msg = f"Expected {copies * space.dim} coordinates, got {poly.nvars}"
            raise DimensionError(msg)
        if kind == CochainKind.BILINEAR and poly:
            blocks = [range(space.dim), range(space.dim, 2 * space.dim)]
            if poly.partial_degrees(blocks) != {(1, 1)}:
                msg = "A bilinear cochain must have bidegree (1, 1)"
                raise CocycleError(msg)
        self._level = level
        self._kind = CochainKind(kind)
        self._poly = poly

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}(level={self._level}, "
            f"kind={self._kind.value!r}, {self.format()!r})"
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HexCochain):
            return NotImplemented
        return (self._level, self._kind, self._poly) == (
            other._level,
            other._kind,
            other._poly,
        )

    def __hash__(self) -> int:
        return hash((self._level, self._kind, self._poly))

    @classmethod
    def zero(cls, level: int, field: FieldSpec, kind: CochainKind) -> HexCochain:
        """The zero cochain."""
        nvars = _copies(kind) * standard_colorings(level, field).dim
        return cls(level, kind, MPoly.zero(field, nvars))

    @property
    def level(self) -> int:
        """Degree ``n`` of the cochain."""
        return self._level

    @property
    def kind(self) -> CochainKind:
        """Polynomial or bilinear."""
        return self._kind

    @property
    def poly(self) -> MPoly:
        """Canonical form."""
        return self._poly

    @property
    def field(self) -> FieldSpec:
        """Coefficient field."""
        return self._poly.field

    @property
    def space(self) -> StandardSimplexColorings:
        """Permitted colorings the cochain is defined on."""
        return standard_colorings(self._level, self.field)

    def is_zero(self) -> bool:
        """Whether the canonical form vanishes."""
        return self._poly.is_zero()

    def _check(self, other: HexCochain) -> None:
        if (self._level, self._kind) != (other._level, other._kind):
            msg = "Cochains of different levels or kinds"
            raise DimensionError(msg)

    def __add__(self, other: HexCochain) -> HexCochain:
        self._check(other)
        return HexCochain(self._level, self._kind, self._poly + other._poly)

    def __sub__(self, other: HexCochain) -> HexCochain:
        self._check(other)
        return HexCochain(self._level, self._kind, self._poly - other._poly)

    def __neg__(self) -> HexCochain:
        return HexCochain(self._level, self._kind, -self._poly)

    def scale(self, value: int) -> HexCochain:
        """Multiply by a field element."""
        return HexCochain(self._level, self._kind, self._poly.scale(value))

    def format(self) -> str:
        """Canonical form written with the ambient variable names."""
        return self._poly.format(self.space.names(self._kind))


def ambient_variable(
    level: int,
    field: FieldSpec,
    name: str,
    *,
    kind: CochainKind = CochainKind.POLYNOMIAL,
) -> MPoly:
    """Ambient variable such as ``"y2345"`` or ``"x1234'"`` as a polynomial.

    >>> from hexcol.fields import field_make
    >>> ambient_variable(4, field_make(2), "y1235").nvars
    10
    """
    space = standard_colorings(level, field)
    primed = name.endswith("'")
    if primed and kind != CochainKind.BILINEAR:
        msg = f"Primed variable {name!r} in a polynomial cochain"
        raise CochainSyntaxError(msg)
    letter, digits = name[0], name[1:].rstrip("'")
    if letter not in "xy" or not digits.isdigit():
        msg = f"Unknown variable {name!r}"
        raise CochainSyntaxError(msg)
    index = space.ambient_index(letter, [int(d) for d in digits])
    offset = space.ambient_dim if primed else 0
    return MPoly.variable(field, _copies(kind) * space.ambient_dim, offset + index)


def ambient_to_canonical(
    level: int,
    f: MPoly,
    *,
    kind: CochainKind = CochainKind.POLYNOMIAL,
) -> HexCochain:
    """Cochain given by a polynomial in the ambient variables of ``Delta^level``.

    >>> from hexcol.fields import field_make
    >>> F = field_make(3)
    >>> x, y = (ambient_variable(3, F, v) for v in ("x1234", "y1234"))
    >>> ambient_to_canonical(3, x * y).format()
    'x1234*y1234'
    """
    space = standard_colorings(level, f.field)
    return HexCochain(level, kind, space.restrict(f, kind))


def coboundary(c: HexCochain) -> HexCochain:
    """Alternating sum over the faces of ``Delta^(n+1)`` of the pulled back ``c``.

    Raises:
        DimensionError: No coboundary above level 4.
    """
    level = c.level + 1
    if level > MAX_LEVEL:
        msg = f"Coboundary of a level {c.level} cochain is not available"
        raise DimensionError(msg)
    upper = standard_colorings(level, c.field)
    copies = _copies(c.kind)
    total = MPoly.zero(c.field, copies * upper.dim)
    for k in range(1, level + 2):
        face = poly_substitute_linear(
            c.poly,
            _block_diagonal(upper.face_matrix(k), copies),
        )
        total = total + face if k % 2 else total - face
    return HexCochain(level, c.kind, total)


def is_cocycle(c: HexCochain) -> bool:
    """Whether ``coboundary(c)`` vanishes formally."""
    return coboundary(c).is_zero()


def _exponent_basis(
    dim: int,
    degree: int,
    kind: CochainKind,
    convention: QuotientConvention,
) -> list[Exponent]:
    if kind == CochainKind.BILINEAR:
        basis = []
        for i, j in itertools.product(range(dim), repeat=2):
            exponent = [0] * (2 * dim)
            exponent[i] = exponent[dim + j] = 1
            basis.append(tuple(exponent))
        return basis
    if convention == QuotientConvention.HOMOGENEOUS:
        return monomials(dim, degree)
    return [e for d in range(degree + 1) for e in monomials(dim, d)]


class _Complexes(NamedTuple):
    basis: list[Exponent]
    quotient: QuotientSpace


def _coefficient_row(poly: MPoly, columns: dict[Exponent, int]) -> dict[int, int]:
    return {columns[exponent]: coeff for exponent, coeff in poly.terms()}


def _cohomology_space(
    level: int,
    degree: int,
    field: FieldSpec,
    kind: CochainKind,
    convention: QuotientConvention,
) -> _Complexes:
    copies = _copies(kind)
    space = standard_colorings(level, field)
    basis = _exponent_basis(space.dim, degree, kind, convention)
    columns = {exponent: i for i, exponent in enumerate(basis)}
    upper = standard_colorings(level + 1, field)
    upper_size = len(_exponent_basis(upper.dim, degree, kind, convention))
    check_cap("max_monomial_columns", max(len(basis), upper_size))
    logger.debug(
        "Level %d %s cochains: %d monomials, %d above",
        level,
        kind.value,
        len(basis),
        upper_size,
    )

    images = []
    targets: dict[Exponent, int] = {}
    for exponent in basis:
        monomial = MPoly(field, copies * space.dim, {exponent: 1})
        image = coboundary(HexCochain(level, kind, monomial)).poly
        for target, _ in image.terms():
            targets.setdefault(target, len(targets))
        images.append(image)
    delta = Matrix(
        field,
        (len(basis), len(targets)),
        (_coefficient_row(image, targets) for image in images),
    )
    cocycles = mat_rref(delta.transpose()).kernel

    if level == MIN_LEVEL:
        coboundaries = Subspace.zero(field, len(basis))
    else:
        lower = standard_colorings(level - 1, field)
        rows = []
        for exponent in _exponent_basis(lower.dim, degree, kind, convention):
            poly = MPoly(field, copies * lower.dim, {exponent: 1})
            image = coboundary(HexCochain(level - 1, kind, poly)).poly
            rows.append(_coefficient_row(image, columns))
        coboundaries = Subspace.span(field, len(basis), rows)
    try:
        quotient = QuotientSpace(cocycles, coboundaries)
    except MembershipError as exception:
        msg = "Hexagon coboundaries are not cocycles"
        raise VerificationError(msg) from exception
    return _Complexes(basis, quotient)


class HexCohomologyReport(NamedTuple):
    """Bounded degree cohomology of the hexagon complex at one level."""

    level: int
    """Level ``n``."""

    degree: int
    """Polynomial degree bound ``D``."""

    field: FieldSpec
    """Coefficient field."""

    kind: CochainKind
    """Polynomial or bilinear cochains."""

    convention: QuotientConvention
    """Convention of `cocycle_dim`, `coboundary_dim` and `representatives`."""

    cocycle_dim: int
    """Dimension of the cocycles."""

    coboundary_dim: int
    """Dimension of the coboundaries."""

    cohomology_dim: int
    """``cocycle_dim - coboundary_dim``."""

    representatives: tuple[HexCochain, ...]
    """Cocycles lifting the canonical basis of the cohomology."""

    dims: dict[QuotientConvention, tuple[int, int, int]]
    """``(cocycles, coboundaries, cohomology)`` for both conventions."""

    basis: tuple[Exponent, ...]
    """Monomials indexing the coefficient vectors."""

    quotient: QuotientSpace
    """Cocycles modulo coboundaries as coefficient vectors."""

    def coordinates(self, cochain: HexCochain) -> list[int]:
        """Coordinates of the class of a cocycle.

        Raises:
            CocycleError: ``cochain`` is not in the cocycle space of the report.
        """
        columns = {exponent: i for i, exponent in enumerate(self.basis)}
        vector: dict[int, int] = {}
        for exponent, coeff in cochain.poly.terms():
            if exponent not in columns:
                msg = f"Cochain has a monomial {exponent} outside the report"
                raise CocycleError(msg)
            vector[columns[exponent]] = coeff
        if not self.quotient.W.contains(vector):
            msg = "Cochain is not a cocycle"
            raise CocycleError(msg)
        return self.quotient.coordinates(vector)

    def independent(self, cochains: Sequence[HexCochain]) -> bool:
        """Whether the classes of ``cochains`` are linearly independent."""
        vectors = [self.coordinates(c) for c in cochains]
        span = Subspace.span(self.field, self.cohomology_dim, vectors)
        return span.dim == len(vectors)


def hex_cohomology(
    level: int,
    degree: int,
    field: FieldSpec,
    kind: CochainKind = CochainKind.POLYNOMIAL,
    convention: QuotientConvention = QuotientConvention.BOUNDED,
) -> HexCohomologyReport:
    """Cocycles modulo coboundaries among cochains of degree at most ``degree``.

    ``BOUNDED`` counts every degree up to ``degree``, ``HOMOGENEOUS`` only
    degree ``degree``; bilinear cochains have bidegree ``(1, 1)`` in both.

    Raises:
        DimensionError: ``level`` is not 3 or 4, or ``degree`` is negative.
        ResourceCapError: Too many monomials.
    """
    if not MIN_LEVEL <= level < MAX_LEVEL:
        msg = f"Hexagon cohomology is computed at levels 3 and 4, got {level}"
        raise DimensionError(msg)
    if degree < 0:
        msg = f"Degree bound must be nonnegative, got {degree}"
        raise DimensionError(msg)
    kind = CochainKind(kind)
    convention = QuotientConvention(convention)
    spaces = {
        c: _cohomology_space(level, degree, field, kind, c) for c in QuotientConvention
    }
    dims = {
        c: (s.quotient.W.dim, s.quotient.W0.dim, s.quotient.dim)
        for c, s in spaces.items()
    }
    chosen = spaces[convention]
    copies = _copies(kind)
    nvars = copies * standard_colorings(level, field).dim
    representatives = tuple(
        HexCochain(
            level,
            kind,
            MPoly(field, nvars, {chosen.basis[i]: v for i, v in enumerate(rep) if v}),
        )
        for rep in chosen.quotient.representatives()
    )
    cocycle_dim, coboundary_dim, cohomology_dim = dims[convention]
    return HexCohomologyReport(
        level,
        degree,
        field,
        kind,
        convention,
        cocycle_dim,
        coboundary_dim,
        cohomology_dim,
        representatives,
        dims,
        tuple(chosen.basis),
        chosen.quotient,
    )


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<var>[xy]'?\[\d+\])|(?P<op>[-+*^]))",
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    position = 0
    text = text.rstrip()
    while position < len(text):
        match = _TOKEN_RE.match(text, position)
        if match is None:
            msg = f"Unexpected character {text[position:].strip()[:1]!r} at {position}"
            raise CochainSyntaxError(msg)
        kind = match.lastgroup
        tokens.append((kind, match.group(kind)))  # type: ignore[arg-type]
        position = match.end()
    return tokens


def parse_cochain(text: str, field: FieldSpec, level: int | None = None) -> HexCochain:
    """Parse a cochain literal such as ``"- x[1234]*y'[1235] + y[2345]^2"``.

    Grammar::

        expr   := ['-'] term (('+' | '-') term)*
        term   := factor ('*' factor)*
        factor := INT | var ['^' INT]
        var    := ('x' | 'y') ["'"] '[' DIGITS ']'

    Each digit of a variable index is a vertex. Primed variables make the
    cochain bilinear. The level defaults to the largest vertex minus one.

    >>> from hexcol.fields import field_make
    >>> parse_cochain("y[2345]*y'[1234]", field_make(2)).format()
    "y2345*x1345' + y2345*x2345'"

    Raises:
        CochainSyntaxError: Text does not follow the grammar.
    """
    tokens = _tokenize(text)
    if not tokens:
        msg = "Empty cochain literal"
        raise CochainSyntaxError(msg)
    names = [value for kind, value in tokens if kind == "var"]
    vertices = [int(d) for name in names for d in name[name.index("[") + 1 : -1]]
    if level is None:
        if not vertices:
            msg = "A constant cochain literal needs an explicit level"
            raise CochainSyntaxError(msg)
        level = max(vertices) - 1
    kind = CochainKind.POLYNOMIAL
    if any("'" in name for name in names):
        kind = CochainKind.BILINEAR
    space = standard_colorings(level, field)
    nvars = _copies(kind) * space.ambient_dim

    position = 0

    def peek() -> tuple[str, str] | None:
        return tokens[position] if position < len(tokens) else None

    def take(kind_: str) -> str:
        nonlocal position
        token = peek()
        if token is None or token[0] != kind_:
            found = "end of input" if token is None else repr(token[1])
            msg = f"Expected {kind_} but found {found}"
            raise CochainSyntaxError(msg)
        position += 1
        return token[1]

    def factor() -> MPoly:
        token = peek()
        if token is not None and token[0] == "int":
            return MPoly.constant(field, nvars, field.from_int(int(take("int"))))
        name = take("var")
        digits = name[name.index("[") + 1 : -1]
        prime = "'" if "'" in name else ""
        variable = ambient_variable(
            level, field, f"{name[0]}{digits}{prime}", kind=kind
        )
        if peek() == ("op", "^"):
            take("op")
            return variable ** int(take("int"))
        return variable

    def term() -> MPoly:
        result = factor()
        while peek() == ("op", "*"):
            take("op")
            result = result * factor()
        return result

    negative = peek() == ("op", "-")
    if negative:
        take("op")
    total = -term() if negative else term()
    while peek() in (("op", "+"), ("op", "-")):
        sign = take("op")
        value = term()
        total = total + value if sign == "+" else total - value
    if peek() is not None:
        msg = f"Unexpected token {peek()[1]!r}"  # type: ignore[index]
        raise CochainSyntaxError(msg)
    return ambient_to_canonical(level, total, kind=kind)


def _tilde_matrix(nvars: int, field: FieldSpec, *, inverse: bool) -> Matrix:
    minus_one = field.neg(1)
    rows: list[dict[int, int]] = []
    for x in range(0, nvars, 2):
        y = x + 1
        if inverse:
            # x = y~, y = x~ + y~
            rows += [{y: 1}, {x: 1, y: 1}]
        else:
            # x~ = -x + y, y~ = x
            rows += [{x: minus_one, y: 1}, {x: 1}]
    return Matrix(field, (nvars, nvars), rows)


def tilde_to_ambient(f: MPoly) -> MPoly:
    """Rewrite a polynomial in ``(x~, y~) = (-x + y, x)`` with ``(x, y)``.

    >>> from hexcol.fields import field_make
    >>> F = field_make(3)
    >>> tilde_to_ambient(MPoly.variable(F, 2, 0)).format(["x", "y"])
    '-x + y'
    """
    if f.nvars % 2:
        msg = "Ambient polynomials have an even number of variables"
        raise DimensionError(msg)
    return poly_substitute_linear(f, _tilde_matrix(f.nvars, f.field, inverse=False))


def ambient_to_tilde(f: MPoly) -> MPoly:
    """Inverse of `tilde_to_ambient`."""
    if f.nvars % 2:
        msg = "Ambient polynomials have an even number of variables"
        raise DimensionError(msg)
    return poly_substitute_linear(f, _tilde_matrix(f.nvars, f.field, inverse=True))


def _ambient(
    level: int,
    field: FieldSpec,
    kind: CochainKind,
    *names: str,
) -> list[MPoly]:
    return [ambient_variable(level, field, name, kind=kind) for name in names]


def builtin_cocycle(name: str, field: FieldSpec) -> HexCochain:
    """One of the cocycles listed in `BUILTIN_COCYCLES`.

    ``c3_bilinear`` and ``c4_bilinear`` exist over every field, the cubic
    ``c4_cubic_1`` and ``c4_cubic_2`` only in characteristic 2.

    >>> from hexcol.fields import field_make
    >>> builtin_cocycle("c3_bilinear", field_make(3)).format()
    "-x1234*y1234' - y1234*x1234'"

    Raises:
        CocycleError: Unknown name.
        FieldError: Cubic cocycle requested in odd characteristic.
        VerificationError: The constructed cochain is not a cocycle.
    """
    bilinear = CochainKind.BILINEAR
    polynomial = CochainKind.POLYNOMIAL
    if name == "c3_bilinear":
        names = ("x1234", "y1234", "x1234'", "y1234'")
        x, y, x_, y_ = _ambient(3, field, bilinear, *names)
        cochain = ambient_to_canonical(3, -(x * y_) - y * x_, kind=bilinear)
    elif name == "c4_bilinear":
        y, y_ = _ambient(4, field, bilinear, "y2345", "y1234'")
        cochain = ambient_to_canonical(4, y * y_, kind=bilinear)
    elif name in ("c4_cubic_1", "c4_cubic_2"):
        if field.characteristic != 2:  # noqa: PLR2004
            msg = f"{name} is a characteristic 2 cocycle, got {field.name}"
            raise FieldError(msg)
        if name == "c4_cubic_1":
            y2345, y1234 = _ambient(4, field, polynomial, "y2345", "y1234")
            cochain = ambient_to_canonical(4, y2345 * y1234**2)
        else:
            a, b, c, d, e = (
                x + y
                for x, y in (
                    _ambient(4, field, polynomial, f"x{t}", f"y{t}")
                    for t in ("2345", "1345", "1245", "1235", "1234")
                )
            )
            f = b * d * e + b * c * e + a * c * e + a * c * d + a * b * d
            cochain = ambient_to_canonical(4, f)
    else:
        msg = f"Unknown cocycle {name!r}, expected one of {list(BUILTIN_COCYCLES)}"
        raise CocycleError(msg)
    if not is_cocycle(cochain):
        msg = f"Built-in cochain {name} is not a cocycle over {field.name}"
        raise VerificationError(msg)
    return cochain


def random_cochain(
    level: int,
    degree: int,
    field: FieldSpec,
    rng: np.random.Generator,
    kind: CochainKind = CochainKind.POLYNOMIAL,
) -> HexCochain:
    """Cochain with uniformly random coefficients on every monomial up to ``degree``."""
    space = standard_colorings(level, field)
    basis = _exponent_basis(space.dim, degree, kind, QuotientConvention.BOUNDED)
    terms = {exponent: field.random(rng) for exponent in basis}
    return HexCochain(level, kind, MPoly(field, _copies(kind) * space.dim, terms))
