"""Constant edge functionals as a formal limit of nonconstant ones.

The nonconstant functionals of the tetrahedron ``1234`` are built from a
2-cocycle ``omega = 1 + o * rho``. Right multiplication by ``A_o`` followed by
``o -> 0`` and the constant matrices ``A_1``, ``A_2`` recovers the constant
functional table. Entries are Laurent polynomials in the formal parameter
``o``, stored as ``{power: coefficient}`` without zero coefficients.
"""

from __future__ import annotations

import itertools
from typing import TYPE_CHECKING, Dict, Iterable, Mapping, NamedTuple, Sequence

from hexcol.coloring import (
    EDGE_VECTOR_TABLE,
    TETRAHEDRON_EDGES,
    edge_functional_block,
    edge_functional_matrix,
    edge_vector,
)
from hexcol.complex import Triangulation
from hexcol.exceptions import (
    CocycleError,
    DimensionError,
    FieldError,
    LimitError,
    VerificationError,
)
from hexcol.linalg import Matrix
from hexcol.utils import Check, logger

if TYPE_CHECKING:
    import numpy as np

    from hexcol.fields import FieldSpec

__all__ = [
    "Laurent",
    "LaurentMatrix",
    "CocycleData2",
    "cocycle_data",
    "random_generic_cocycle",
    "nonconstant_functionals",
    "constant_functionals",
    "transform_matrices",
    "limit_functionals",
    "limit_transform",
    "limit_transform_one_shot",
    "edge_vector_limit_check",
    "verify_limits",
]

Laurent = Dict[int, int]
"""Laurent polynomial in ``o``, ``power -> nonzero coefficient``."""

TETRAHEDRON = (1, 2, 3, 4)
PENTACHORON = (1, 2, 3, 4, 5)


def _clean(entry: Mapping[int, int]) -> Laurent:
    return {power: c for power, c in entry.items() if c}


def _add(field: FieldSpec, a: Laurent, b: Laurent) -> Laurent:
    total = dict(a)
    for power, c in b.items():
        total[power] = field.add(total.get(power, 0), c)
    return _clean(total)


def _neg(field: FieldSpec, a: Laurent) -> Laurent:
    return {power: field.neg(c) for power, c in a.items()}


def _mul(field: FieldSpec, a: Laurent, b: Laurent) -> Laurent:
    product: Laurent = {}
    for (p, c), (q, e) in itertools.product(a.items(), b.items()):
        product[p + q] = field.add(product.get(p + q, 0), field.mul(c, e))
    return _clean(product)


def _format_entry(field: FieldSpec, entry: Laurent) -> str:
    if not entry:
        return "0"
    terms = []
    for power in sorted(entry):
        c = field.format(entry[power])
        if power == 0:
            terms.append(c)
            continue
        base = "o" if power == 1 else f"o^{power}"
        terms.append(base if c == "1" else f"{c}*{base}")
    return " + ".join(terms)


class LaurentMatrix:
    """Matrix whose entries are Laurent polynomials in ``o``.

    >>> from hexcol.fields import field_make
    >>> M = LaurentMatrix(field_make(5), [[{0: 1, 1: 2}, {-1: 1}]])
    >>> M.valuation
    -1
    >>> M.shift(1).limit().to_dense()
    [[0, 1]]

    Raises:
        DimensionError: Rows of different lengths.
        FieldError: A coefficient is not a field element.
    """

    def __init__(
        self,
        field: FieldSpec,
        rows: Iterable[Sequence[Mapping[int, int]]],
    ) -> None:
        self._field = field
        self._rows = tuple(
            tuple(
                _clean({power: field.check(c) for power, c in entry.items()})
                for entry in row
            )
            for row in rows
        )
        widths = {len(row) for row in self._rows}
        if len(widths) > 1:
            msg = f"Rows of lengths {sorted(widths)} do not form a matrix"
            raise DimensionError(msg)
        self._ncols = widths.pop() if widths else 0

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(field={self._field!r}, shape={self.shape})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return (self._field, self.shape, self._rows) == (
            other._field,
            other.shape,
            other._rows,
        )

    __hash__ = None

    @classmethod
    def constant(cls, field: FieldSpec, rows: Sequence[Sequence[int]]) -> LaurentMatrix:
        """Matrix with constant entries."""
        return cls(field, ([{0: value} for value in row] for row in rows))

    @classmethod
    def identity(cls, field: FieldSpec, size: int) -> LaurentMatrix:
        """Identity matrix."""
        return cls.constant(
            field,
            [[int(i == j) for j in range(size)] for i in range(size)],
        )

    @property
    def field(self) -> FieldSpec:
        """Coefficient field."""
        return self._field

    @property
    def shape(self) -> tuple[int, int]:
        """``(rows, columns)``."""
        return (len(self._rows), self._ncols)

    def entry(self, i: int, j: int) -> Laurent:
        """Copy of the entry in row ``i`` and column ``j``."""
        return dict(self._rows[i][j])

    def __matmul__(self, other: LaurentMatrix) -> LaurentMatrix:
        if self._field != other._field:
            msg = "Matrices are defined over different fields"
            raise FieldError(msg)
        if self._ncols != len(other._rows):
            msg = f"Cannot multiply shapes {self.shape} and {other.shape}"
            raise DimensionError(msg)
        field = self._field
        rows = []
        for row in self._rows:
            product = []
            for j in range(other._ncols):
                total: Laurent = {}
                for k, entry in enumerate(row):
                    total = _add(field, total, _mul(field, entry, other._rows[k][j]))
                product.append(total)
            rows.append(product)
        return LaurentMatrix(field, rows)

    @property
    def valuation(self) -> int | None:
        """Lowest power of ``o`` among the entries, ``None`` for the zero matrix."""
        powers = [power for row in self._rows for entry in row for power in entry]
        return min(powers) if powers else None

    def shift(self, n: int) -> LaurentMatrix:
        """Multiply every entry by ``o^n``."""
        return LaurentMatrix(
            self._field,
            (
                [{power + n: c for power, c in entry.items()} for entry in row]
                for row in self._rows
            ),
        )

    def limit(self) -> Matrix:
        """Value at ``o = 0``.

        Raises:
            LimitError: Some entry has a negative power of ``o``.
        """
        valuation = self.valuation
        if valuation is not None and valuation < 0:
            msg = f"Entries carry o^{valuation}, the limit o -> 0 is undefined"
            raise LimitError(msg)
        return Matrix(
            self._field,
            self.shape,
            ([entry.get(0, 0) for entry in row] for row in self._rows),
        )

    def leading(self) -> Matrix:
        """Coefficient matrix of the lowest power of ``o``.

        Raises:
            LimitError: The matrix is zero.
        """
        valuation = self.valuation
        if valuation is None:
            msg = "The zero matrix has no leading coefficient"
            raise LimitError(msg)
        return self.shift(-valuation).limit()

    def format(self) -> str:
        """One line per row, entries separated by ``;``."""
        return "\n".join(
            "; ".join(_format_entry(self._field, entry) for entry in row)
            for row in self._rows
        )


class CocycleData2(NamedTuple):
    """Values of a 2-cocycle ``rho`` on the triangles of ``1234`` or ``12345``."""

    field: FieldSpec
    """Coefficient field."""

    rho: Mapping[tuple[int, ...], int]
    """Value on every sorted triangle."""

    def value(self, i: int, j: int, k: int) -> int:
        """``rho_ijk`` for ``i < j < k``.

        Raises:
            CocycleError: The triangle carries no value.
        """
        try:
            return self.rho[(i, j, k)]
        except KeyError as exception:
            msg = f"No value on the triangle {(i, j, k)}"
            raise CocycleError(msg) from exception

    def omega(self, i: int, j: int, k: int) -> Laurent:
        """``omega_ijk = 1 + o * rho_ijk``."""
        return _clean({0: 1, 1: self.value(i, j, k)})

    @property
    def delta(self) -> int:
        """``rho_123 - rho_124``, inverted by ``A_2``."""
        return self.field.sub(self.value(1, 2, 3), self.value(1, 2, 4))

    @property
    def is_generic(self) -> bool:
        """Whether ``A_2`` is defined."""
        return self.delta != 0


def _violations(data: CocycleData2) -> list[tuple[int, ...]]:
    field = data.field
    vertices = sorted({v for triangle in data.rho for v in triangle})
    failed = []
    for tetrahedron in itertools.combinations(vertices, 4):
        faces = [tetrahedron[:m] + tetrahedron[m + 1 :] for m in range(4)]
        if not all(face in data.rho for face in faces):
            continue
        total = 0
        for m, face in enumerate(faces):
            value = data.rho[face]
            total = field.add(total, field.neg(value) if m % 2 else value)
        if total:
            failed.append(tetrahedron)
    return failed


def cocycle_data(
    field: FieldSpec,
    values: Mapping[Sequence[int], int],
) -> CocycleData2:
    """Build and check a `CocycleData2`.

    Values must cover the triangles of ``1234``; the alternating sum over the
    faces of every tetrahedron with all its faces present must vanish.

    >>> from hexcol.fields import field_make
    >>> F = field_make(5)
    >>> values = {(1, 2, 3): 1, (1, 2, 4): 2, (1, 3, 4): 3, (2, 3, 4): 2}
    >>> data = cocycle_data(F, values)
    >>> data.delta, data.is_generic
    (4, True)

    Raises:
        CocycleError: Missing triangle of ``1234`` or cocycle condition violated.
    """
    rho = {tuple(sorted(key)): field.check(value) for key, value in values.items()}
    data = CocycleData2(field, rho)
    missing = [t for t in itertools.combinations(TETRAHEDRON, 3) if t not in rho]
    if missing:
        msg = f"Triangles {missing} of 1234 carry no value"
        raise CocycleError(msg)
    failed = _violations(data)
    if failed:
        msg = f"Not a 2-cocycle on the tetrahedra {failed}"
        raise CocycleError(msg)
    return data


def random_generic_cocycle(
    field: FieldSpec,
    rng: np.random.Generator,
    *,
    vertices: int = 5,
    attempts: int = 64,
) -> CocycleData2:
    """Generic ``rho`` on the simplex ``1 .. vertices``, the coboundary of a 1-cochain.

    Raises:
        LimitError: No generic cocycle was drawn in ``attempts`` tries.
    """
    labels = range(1, vertices + 1)
    for _ in range(attempts):
        eta = {edge: field.random(rng) for edge in itertools.combinations(labels, 2)}
        rho = {
            (i, j, k): field.add(field.sub(eta[(j, k)], eta[(i, k)]), eta[(i, j)])
            for i, j, k in itertools.combinations(labels, 3)
        }
        data = CocycleData2(field, rho)
        if data.is_generic:
            return data
    msg = f"No generic 2-cocycle over {field.name} after {attempts} draws"
    raise LimitError(msg)


def nonconstant_functionals(data: CocycleData2) -> LaurentMatrix:
    """The six ``omega`` functionals of ``1234`` as a ``6 x 2`` matrix.

    Rows follow the edges ``12, 13, 14, 23, 24, 34``.

    >>> from hexcol.fields import field_make
    >>> F = field_make(3)
    >>> triangles = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
    >>> zero = cocycle_data(F, {t: 0 for t in triangles})
    >>> print(nonconstant_functionals(zero).format())
    0; 0
    1; 1
    2; 2
    2; 2
    1; 1
    0; 0

    Raises:
        CocycleError: ``rho`` violates the cocycle condition.
    """
    failed = _violations(data)
    if failed:
        msg = f"Not a 2-cocycle on the tetrahedra {failed}"
        raise CocycleError(msg)
    field = data.field
    w123 = data.omega(1, 2, 3)
    w124 = data.omega(1, 2, 4)
    w134 = data.omega(1, 3, 4)
    w234 = data.omega(2, 3, 4)
    rows = [
        [_add(field, w234, _neg(field, w134)), {}],
        [w124, w234],
        [_neg(field, w123), _neg(field, w234)],
        [_neg(field, w124), _neg(field, w134)],
        [w123, w134],
        [{}, _add(field, w123, _neg(field, w124))],
    ]
    return LaurentMatrix(field, rows)


def constant_functionals(field: FieldSpec) -> Matrix:
    """Constant functionals of ``1234`` inside ``12345``, one row per edge.

    >>> from hexcol.fields import field_make
    >>> constant_functionals(field_make(5)).to_dense()
    [[0, 1], [1, 4], [4, 0], [4, 0], [1, 1], [0, 4]]
    """
    rows = []
    for a, b in TETRAHEDRON_EDGES:
        edge = (TETRAHEDRON[a], TETRAHEDRON[b])
        block = edge_functional_block(PENTACHORON, edge, TETRAHEDRON)
        rows.append([field.from_int(value) for value in block])
    return Matrix(field, (len(rows), 2), rows)


def transform_matrices(
    data: CocycleData2,
) -> tuple[LaurentMatrix, LaurentMatrix, LaurentMatrix]:
    """``A_o``, ``A_1`` and ``A_2`` for ``rho``.

    Raises:
        LimitError: ``rho_123 = rho_124``.
    """
    field = data.field
    if not data.is_generic:
        msg = "rho_123 = rho_124, A_2 is undefined"
        raise LimitError(msg)
    minus_one = field.neg(1)
    A_o = LaurentMatrix(field, [[{0: 1}, {-1: 1}], [{}, {-1: minus_one}]])
    shear = field.sub(data.value(1, 3, 4), data.value(1, 2, 4))
    A_1 = LaurentMatrix.constant(field, [[1, shear], [0, 1]])
    A_2 = LaurentMatrix.constant(field, [[1, 0], [0, field.inv(data.delta)]])
    return A_o, A_1, A_2


def _inverse_transform(data: CocycleData2) -> LaurentMatrix:
    field = data.field
    A_o_inverse = LaurentMatrix(field, [[{0: 1}, {0: 1}], [{}, {1: field.neg(1)}]])
    shear = field.sub(data.value(1, 2, 4), data.value(1, 3, 4))
    A_1_inverse = LaurentMatrix.constant(field, [[1, shear], [0, 1]])
    A_2_inverse = LaurentMatrix.constant(field, [[1, 0], [0, data.delta]])
    return A_2_inverse @ A_1_inverse @ A_o_inverse


def limit_functionals(M: LaurentMatrix) -> Matrix:
    """``lim_{o -> 0} M A_o``, the functionals before ``A_1 A_2``.

    ``A_o`` does not depend on ``rho``.

    Raises:
        LimitError: Negative powers of ``o`` remain.
    """
    field = M.field
    A_o = LaurentMatrix(field, [[{0: 1}, {-1: 1}], [{}, {-1: field.neg(1)}]])
    return (M @ A_o).limit()


def limit_transform(M: LaurentMatrix, data: CocycleData2) -> Matrix:
    """``lim_{o -> 0} (M A_o)`` followed by right multiplication with ``A_1 A_2``.

    >>> from hexcol.fields import field_make
    >>> F = field_make(5)
    >>> values = {(1, 2, 3): 1, (1, 2, 4): 2, (1, 3, 4): 3, (2, 3, 4): 2}
    >>> data = cocycle_data(F, values)
    >>> limit_transform(nonconstant_functionals(data), data) == constant_functionals(F)
    True

    Raises:
        LimitError: Negative powers of ``o`` remain, or ``rho_123 = rho_124``.
    """
    _, A_1, A_2 = transform_matrices(data)
    return limit_functionals(M) @ (A_1 @ A_2).limit()


def limit_transform_one_shot(M: LaurentMatrix, data: CocycleData2) -> Matrix:
    """``lim_{o -> 0} (M A_o A_1 A_2)``.

    Raises:
        LimitError: Negative powers of ``o`` remain, or ``rho_123 = rho_124``.
    """
    A_o, A_1, A_2 = transform_matrices(data)
    return (M @ A_o @ A_1 @ A_2).limit()


def edge_vector_limit_check(data: CocycleData2) -> bool:
    """Check that edge vectors follow the functionals to their constant limit.

    On ``1234`` the nonconstant edge vector of ``b`` spans the kernel of the
    functional of the opposite edge. Colorings transform by the inverse of
    ``A_o A_1 A_2``; the lowest order term of each transformed vector must be
    ``(rho_123 - rho_124)`` times the constant edge vector.

    Raises:
        LimitError: ``rho_123 = rho_124``.
        VerificationError: The inverse transform is wrong.
    """
    field = data.field
    A_o, A_1, A_2 = transform_matrices(data)
    inverse = _inverse_transform(data)
    if A_o @ A_1 @ A_2 @ inverse != LaurentMatrix.identity(field, 2):
        msg = "Coloring transform is not inverse to the functional transform"
        raise VerificationError(msg)
    M = nonconstant_functionals(data)
    passed = True
    for position, (a, c) in enumerate(EDGE_VECTOR_TABLE):
        opposite = len(TETRAHEDRON_EDGES) - 1 - position
        alpha, beta = M.entry(opposite, 0), M.entry(opposite, 1)
        kernel = LaurentMatrix(field, [[beta], [_neg(field, alpha)]])
        if (LaurentMatrix(field, [[alpha, beta]]) @ kernel).valuation is not None:
            passed = False
            continue
        image = (inverse @ kernel).leading().to_dense()
        expected = [[field.mul(data.delta, field.from_int(v))] for v in (a, c)]
        if image != expected:
            a_, b_ = TETRAHEDRON_EDGES[position]
            logger.debug(
                "Edge %d%d: limit %s, expected %s",
                TETRAHEDRON[a_],
                TETRAHEDRON[b_],
                image,
                expected,
            )
            passed = False
    return passed


def _constant_duality(field: FieldSpec) -> bool:
    K = Triangulation(5, [PENTACHORON])
    functionals = edge_functional_matrix(K, field)
    return all(
        not any(functionals.apply(edge_vector(K, b, field)))
        for b in K.simplices(1)
    )


def verify_limits(
    field: FieldSpec,
    trials: int,
    rng: np.random.Generator,
) -> tuple[Check, ...]:
    """Run the limit checks on ``trials`` random generic cocycles.

    Checks the step-by-step and one-shot limits against the constant table,
    the edge vector limit, that two distinct cocycles reach the same limit,
    and that constant edge vectors annihilate the constant functionals.
    """
    expected = constant_functionals(field)
    failures = {"limit_exact": 0, "limit_one_shot": 0, "edge_vector_limit": 0}
    for _ in range(trials):
        data = random_generic_cocycle(field, rng)
        M = nonconstant_functionals(data)
        failures["limit_exact"] += limit_transform(M, data) != expected
        failures["limit_one_shot"] += limit_transform_one_shot(M, data) != expected
        failures["edge_vector_limit"] += not edge_vector_limit_check(data)
    checks = [
        Check(name, not count, f"{trials - count}/{trials} trials")
        for name, count in failures.items()
    ]

    first = random_generic_cocycle(field, rng)
    second = random_generic_cocycle(field, rng)
    for _ in range(64):
        if nonconstant_functionals(first) != nonconstant_functionals(second):
            break
        second = random_generic_cocycle(field, rng)
    distinct = nonconstant_functionals(first) != nonconstant_functionals(second)
    same_limit = limit_transform(
        nonconstant_functionals(first), first
    ) == limit_transform(nonconstant_functionals(second), second)
    checks.append(
        Check(
            "limit_independent_of_rho",
            same_limit,
            "" if distinct else "only one cocycle family was drawn",
        )
    )
    checks.append(Check("constant_duality", _constant_duality(field)))
    logger.info(
        "Limit checks over %s: %d/%d passed",
        field.name,
        sum(check.passed for check in checks),
        len(checks),
    )
    return tuple(checks)
