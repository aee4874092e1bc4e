"""Exact linear algebra over finite fields.

Subspaces are stored by their reduced row echelon basis, pivots being the
smallest eligible columns, so two spanning sets of the same subspace give
identical `Subspace` values.

Over ``F_2`` rows are packed into python ``int`` bitsets (bit ``j`` is column
``j``), other fields use sparse ``dict`` rows.
"""

from __future__ import annotations

from typing import (
    TYPE_CHECKING,
    Any,
    Dict,
    Iterable,
    Iterator,
    Mapping,
    NamedTuple,
    Sequence,
    Union,
)

import numpy as np

from hexcol.exceptions import DimensionError, FieldError, MembershipError

if TYPE_CHECKING:
    from hexcol.fields import FieldSpec

__all__ = [
    "Matrix",
    "Subspace",
    "QuotientSpace",
    "RrefResult",
    "mat_rref",
    "mat_inverse",
    "quotient_coords",
]

Vector = Union[Sequence[int], Mapping[int, int]]
"""Dense sequence of field elements, or sparse mapping ``column -> value``."""

SparseRow = Dict[int, int]
Row = Any

_UNPACK_BLOCK = 1024


class _BitRows:
    """Row operations on ``F_2`` rows packed into ints."""

    zero = 0

    def __init__(self, field: FieldSpec) -> None:
        self.field = field

    @staticmethod
    def pack(entries: Mapping[int, int]) -> int:
        row = 0
        for col, value in entries.items():
            if value & 1:
                row ^= 1 << col
        return row

    def unpack(self, row: int) -> SparseRow:
        return dict.fromkeys(self.support(row), 1)

    @staticmethod
    def support(row: int) -> Iterator[int]:
        while row:
            low = row & -row
            yield low.bit_length() - 1
            row ^= low

    @staticmethod
    def lead(row: int) -> int:
        return (row & -row).bit_length() - 1

    @staticmethod
    def entry(row: int, col: int) -> int:
        return (row >> col) & 1

    @staticmethod
    def eliminate(row: int, coeff: int, other: int) -> int:
        return row ^ other if coeff else row

    @staticmethod
    def scale(row: int, coeff: int) -> int:
        return row if coeff else 0

    @staticmethod
    def unit(col: int) -> int:
        return 1 << col

    @staticmethod
    def empty_mask() -> int:
        return 0

    @staticmethod
    def add_to_mask(mask: int, col: int) -> int:
        return mask | (1 << col)

    def within(self, row: int, mask: int) -> list[int]:
        return list(self.support(row & mask))


class _DictRows:
    """Row operations on sparse ``dict`` rows."""

    def __init__(self, field: FieldSpec) -> None:
        self.field = field

    @property
    def zero(self) -> SparseRow:
        return {}

    @staticmethod
    def pack(entries: Mapping[int, int]) -> SparseRow:
        return {col: value for col, value in entries.items() if value}

    @staticmethod
    def unpack(row: SparseRow) -> SparseRow:
        return dict(row)

    @staticmethod
    def support(row: SparseRow) -> Iterator[int]:
        return iter(sorted(row))

    @staticmethod
    def lead(row: SparseRow) -> int:
        return min(row) if row else -1

    @staticmethod
    def entry(row: SparseRow, col: int) -> int:
        return row.get(col, 0)

    def eliminate(self, row: SparseRow, coeff: int, other: SparseRow) -> SparseRow:
        if not coeff:
            return row
        field = self.field
        new = dict(row)
        for col, value in other.items():
            updated = field.sub(new.get(col, 0), field.mul(coeff, value))
            if updated:
                new[col] = updated
            else:
                new.pop(col, None)
        return new

    def scale(self, row: SparseRow, coeff: int) -> SparseRow:
        if not coeff:
            return {}
        return {col: self.field.mul(coeff, value) for col, value in row.items()}

    @staticmethod
    def unit(col: int) -> SparseRow:
        return {col: 1}

    @staticmethod
    def empty_mask() -> set[int]:
        return set()

    @staticmethod
    def add_to_mask(mask: set[int], col: int) -> set[int]:
        mask.add(col)
        return mask

    @staticmethod
    def within(row: SparseRow, mask: set[int]) -> list[int]:
        return sorted(col for col in row if col in mask)


def _ops(field: FieldSpec) -> _BitRows | _DictRows:
    if field.order == 2:  # noqa: PLR2004
        return _BitRows(field)
    return _DictRows(field)


class _Echelon:
    """Incremental echelon form, rows keyed by their leading column."""

    def __init__(self, ops: _BitRows | _DictRows) -> None:
        self.ops = ops
        self.rows: dict[int, Row] = {}
        self.tags: dict[int, Row] = {}

    def reduce(self, row: Row, tag: Row | None = None) -> tuple[Row, Row | None]:
        ops = self.ops
        lead = ops.lead(row)
        while lead >= 0 and lead in self.rows:
            coeff = ops.entry(row, lead)
            row = ops.eliminate(row, coeff, self.rows[lead])
            if tag is not None:
                tag = ops.eliminate(tag, coeff, self.tags[lead])
            lead = ops.lead(row)
        return row, tag

    def insert(self, row: Row, tag: Row | None = None) -> bool:
        """Add ``row``, returns whether it was independent of the rows so far."""
        ops = self.ops
        row, tag = self.reduce(row, tag)
        lead = ops.lead(row)
        if lead < 0:
            return False
        inverse = ops.field.inv(ops.entry(row, lead))
        self.rows[lead] = ops.scale(row, inverse)
        if tag is not None:
            self.tags[lead] = ops.scale(tag, inverse)
        return True

    def rref(self) -> list[tuple[int, Row]]:
        """Fully reduced rows sorted by pivot."""
        ops = self.ops
        reduced: dict[int, Row] = {}
        mask = ops.empty_mask()
        for lead in sorted(self.rows, reverse=True):
            row = self.rows[lead]
            for col in ops.within(row, mask):
                row = ops.eliminate(row, ops.entry(row, col), reduced[col])
            reduced[lead] = row
            mask = ops.add_to_mask(mask, lead)
        return [(lead, reduced[lead]) for lead in sorted(reduced)]


def _as_mapping(vector: Vector, size: int) -> Mapping[int, int]:
    if isinstance(vector, Mapping):
        if any(not 0 <= col < size for col in vector):
            msg = f"Sparse vector has a column outside 0..{size - 1}"
            raise DimensionError(msg)
        return vector
    if len(vector) != size:
        msg = f"Expected a vector of length {size}, got {len(vector)}"
        raise DimensionError(msg)
    return {col: value for col, value in enumerate(vector) if value}


def _dense(row: Mapping[int, int], size: int) -> list[int]:
    dense = [0] * size
    for col, value in row.items():
        dense[col] = value
    return dense


class Matrix:
    """Matrix over a finite field, stored as sparse rows.

    >>> from hexcol.fields import field_make
    >>> M = Matrix.from_dense(field_make(3), [[1, 2], [0, 1]])
    >>> M.shape
    (2, 2)
    >>> (M @ M).to_dense()
    [[1, 1], [0, 1]]
    """

    def __init__(
        self,
        field: FieldSpec,
        shape: tuple[int, int],
        rows: Iterable[Mapping[int, int]] = (),
    ) -> None:
        nrows, ncols = shape
        self._field = field
        self._shape = (nrows, ncols)
        self._rows: tuple[SparseRow, ...] = tuple(
            {col: value for col, value in _as_mapping(row, ncols).items() if value}
            for row in rows
        )
        if len(self._rows) < nrows:
            self._rows += tuple({} for _ in range(nrows - len(self._rows)))
        if len(self._rows) != nrows:
            msg = f"Expected {nrows} rows, got {len(self._rows)}"
            raise DimensionError(msg)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(field={self._field!r}, shape={self._shape})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self._field, self._shape, self._rows) == (
            other._field,
            other._shape,
            other._rows,
        )

    __hash__ = None

    @classmethod
    def from_dense(
        cls,
        field: FieldSpec,
        rows: Sequence[Sequence[int]],
        ncols: int | None = None,
    ) -> Matrix:
        """Build from a list of dense rows, entries reduced into ``field``."""
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if field.is_prime_field:
            rows = [[field.from_int(v) for v in row] for row in rows]
        return cls(field, (len(rows), ncols), rows)

    @classmethod
    def identity(cls, field: FieldSpec, size: int) -> Matrix:
        """Identity matrix."""
        return cls(field, (size, size), ({i: 1} for i in range(size)))

    @property
    def field(self) -> FieldSpec:
        """Coefficient field."""
        return self._field

    @property
    def shape(self) -> tuple[int, int]:
        """``(rows, columns)``."""
        return self._shape

    @property
    def rows(self) -> tuple[SparseRow, ...]:
        """Sparse rows, ``column -> nonzero value``."""
        return self._rows

    def to_dense(self) -> list[list[int]]:
        """Dense list of rows."""
        return [_dense(row, self._shape[1]) for row in self._rows]

    def transpose(self) -> Matrix:
        """Transposed matrix."""
        columns: list[SparseRow] = [{} for _ in range(self._shape[1])]
        for i, row in enumerate(self._rows):
            for j, value in row.items():
                columns[j][i] = value
        return Matrix(self._field, (self._shape[1], self._shape[0]), columns)

    def apply(self, vector: Vector) -> list[int]:
        """Matrix-vector product ``M v``."""
        field = self._field
        v = _as_mapping(vector, self._shape[1])
        result = []
        for row in self._rows:
            acc = 0
            for col, value in row.items():
                other = v.get(col, 0)
                if other:
                    acc = field.add(acc, field.mul(value, other))
            result.append(acc)
        return result

    def __matmul__(self, other: Matrix) -> Matrix:
        if self._field != other._field:
            msg = "Matrices are defined over different fields"
            raise FieldError(msg)
        if self._shape[1] != other._shape[0]:
            msg = f"Cannot multiply shapes {self._shape} and {other._shape}"
            raise DimensionError(msg)
        field = self._field
        rows = []
        for row in self._rows:
            acc: SparseRow = {}
            for k, value in row.items():
                for j, other_value in other._rows[k].items():
                    acc[j] = field.add(acc.get(j, 0), field.mul(value, other_value))
            rows.append(acc)
        return Matrix(field, (self._shape[0], other._shape[1]), rows)

    def vstack(self, other: Matrix) -> Matrix:
        """Rows of ``self`` followed by rows of ``other``."""
        if self._shape[1] != other._shape[1]:
            msg = f"Cannot stack shapes {self._shape} and {other._shape}"
            raise DimensionError(msg)
        return Matrix(
            self._field,
            (self._shape[0] + other._shape[0], self._shape[1]),
            self._rows + other._rows,
        )


class Subspace:
    """Linear subspace of ``F^m`` in canonical form.

    Build instances with `Subspace.span`; the basis is the reduced row echelon
    form of any spanning set.
    """

    def __init__(
        self,
        field: FieldSpec,
        ambient_dim: int,
        rref: list[tuple[int, Row]],
    ) -> None:
        self._field = field
        self._ambient_dim = ambient_dim
        self._ops = _ops(field)
        self._pivots: tuple[int, ...] = tuple(lead for lead, _ in rref)
        self._packed: tuple = tuple(row for _, row in rref)
        self._index = {lead: i for i, lead in enumerate(self._pivots)}
        mask = self._ops.empty_mask()
        for lead in self._pivots:
            mask = self._ops.add_to_mask(mask, lead)
        self._mask = mask

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}(field={self._field!r}, "
            f"ambient_dim={self._ambient_dim}, dim={self.dim})"
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self._field, self._ambient_dim, self._packed) == (
            other._field,
            other._ambient_dim,
            other._packed,
        )

    def __hash__(self) -> int:
        return hash((self._field, self._ambient_dim, self._pivots))

    def __len__(self) -> int:
        return len(self._pivots)

    @classmethod
    def span(
        cls,
        field: FieldSpec,
        ambient_dim: int,
        vectors: Iterable[Vector],
    ) -> Subspace:
        """Subspace spanned by ``vectors``.

        >>> from hexcol.fields import field_make
        >>> S = Subspace.span(field_make(2), 3, [[1, 1, 0], [0, 1, 1], [1, 0, 1]])
        >>> S.dim, S.pivots
        (2, (0, 1))
        >>> S.basis()
        [[1, 0, 1], [0, 1, 1]]
        """
        ops = _ops(field)
        echelon: _Echelon = _Echelon(ops)
        for vector in vectors:
            echelon.insert(ops.pack(_as_mapping(vector, ambient_dim)))
        return cls(field, ambient_dim, echelon.rref())

    @classmethod
    def zero(cls, field: FieldSpec, ambient_dim: int) -> Subspace:
        """The zero subspace."""
        return cls(field, ambient_dim, [])

    @classmethod
    def full(cls, field: FieldSpec, ambient_dim: int) -> Subspace:
        """The whole space ``F^m``."""
        return cls.span(field, ambient_dim, ({i: 1} for i in range(ambient_dim)))

    @property
    def field(self) -> FieldSpec:
        """Coefficient field."""
        return self._field

    @property
    def ambient_dim(self) -> int:
        """Dimension ``m`` of the ambient space."""
        return self._ambient_dim

    @property
    def dim(self) -> int:
        """Dimension of the subspace."""
        return len(self._pivots)

    @property
    def pivots(self) -> tuple[int, ...]:
        """Pivot column of each basis row, strictly increasing."""
        return self._pivots

    def rows(self) -> list[SparseRow]:
        """Canonical basis as sparse rows."""
        return [self._ops.unpack(row) for row in self._packed]

    def basis(self) -> list[list[int]]:
        """Canonical basis as dense rows."""
        return [_dense(row, self._ambient_dim) for row in self.rows()]

    def basis_matrix(self) -> Matrix:
        """Canonical basis as the rows of a matrix."""
        return Matrix(self._field, (self.dim, self._ambient_dim), self.rows())

    def _pack(self, vector: Vector) -> int | SparseRow:
        return self._ops.pack(_as_mapping(vector, self._ambient_dim))

    def _residual(self, packed: Row) -> tuple[Row, list[tuple[int, int]]]:
        """``v - sum v[p_i] b_i`` and the coordinates ``(i, v[p_i])``."""
        ops = self._ops
        coordinates = []
        residual = packed
        for lead in ops.within(packed, self._mask):
            coeff = ops.entry(packed, lead)
            index = self._index[lead]
            coordinates.append((index, coeff))
            residual = ops.eliminate(residual, coeff, self._packed[index])
        return residual, coordinates

    def contains(self, vector: Vector) -> bool:
        """Whether ``vector`` lies in the subspace."""
        residual, _ = self._residual(self._pack(vector))
        return not residual

    def coordinates(self, vector: Vector) -> list[int]:
        """Coordinates of ``vector`` in the canonical basis.

        Raises:
            MembershipError: ``vector`` is not in the subspace.
        """
        residual, coordinates = self._residual(self._pack(vector))
        if residual:
            msg = "Vector does not lie in the subspace"
            raise MembershipError(msg)
        dense = [0] * self.dim
        for index, coeff in coordinates:
            dense[index] = coeff
        return dense

    def combination(self, coefficients: Sequence[int]) -> list[int]:
        """Dense vector ``sum c_i b_i`` over the canonical basis."""
        if len(coefficients) != self.dim:
            msg = f"Expected {self.dim} coefficients, got {len(coefficients)}"
            raise DimensionError(msg)
        ops = self._ops
        acc = ops.zero
        minus = self._field.neg
        for coeff, row in zip(coefficients, self._packed):
            acc = ops.eliminate(acc, minus(coeff), row)
        return _dense(ops.unpack(acc), self._ambient_dim)

    def is_subspace_of(self, other: Subspace) -> bool:
        """Whether every basis vector of ``self`` lies in ``other``."""
        self._check_compatible(other)
        return all(not other._residual(row)[0] for row in self._packed)

    def _check_compatible(self, other: Subspace) -> None:
        if self._field != other._field:
            msg = "Subspaces are defined over different fields"
            raise FieldError(msg)
        if self._ambient_dim != other._ambient_dim:
            msg = (
                f"Subspaces live in different ambient dimensions: "
                f"{self._ambient_dim} != {other._ambient_dim}"
            )
            raise DimensionError(msg)

    def __add__(self, other: Subspace) -> Subspace:
        self._check_compatible(other)
        return Subspace.span(
            self._field,
            self._ambient_dim,
            [*self.rows(), *other.rows()],
        )

    def projection(self, columns: Sequence[int]) -> Subspace:
        """Image under the coordinate projection onto ``columns``.

        The image lives in ``F^len(columns)``, coordinate ``i`` being column
        ``columns[i]``.
        """
        positions = {col: i for i, col in enumerate(columns)}
        images = (
            {positions[col]: value for col, value in row.items() if col in positions}
            for row in self.rows()
        )
        return Subspace.span(self._field, len(columns), images)

    def vanishing_on(self, columns: Iterable[int]) -> Subspace:
        """Vectors of the subspace whose entries at ``columns`` are all zero."""
        rows = self.rows()
        functionals = []
        for col in columns:
            functional = {i: row[col] for i, row in enumerate(rows) if col in row}
            if functional:
                functionals.append(functional)
        matrix = Matrix(self._field, (len(functionals), self.dim), functionals)
        kernel = mat_rref(matrix)
        return Subspace.span(
            self._field,
            self._ambient_dim,
            (self.combination(coeffs) for coeffs in kernel.kernel.basis()),
        )


class RrefResult(NamedTuple):
    """Result of `mat_rref`."""

    row_space: Subspace
    """Row space in canonical form."""

    pivots: tuple[int, ...]
    """Pivot columns, the smallest eligible ones."""

    kernel: Subspace
    """Right kernel ``{x : M x = 0}`` in canonical form."""

    @property
    def rank(self) -> int:
        """Dimension of the row space."""
        return self.row_space.dim


def _bit_kernel(rref: list[tuple[int, int]], ncols: int) -> list[int]:
    pivots = [lead for lead, _ in rref]
    free = np.setdiff1d(np.arange(ncols), np.array(pivots, dtype=np.int64))
    if not free.size:
        return []
    nbytes = (ncols + 7) // 8
    kernel = np.zeros((free.size, ncols), dtype=bool)
    kernel[np.arange(free.size), free] = True
    for start in range(0, len(rref), _UNPACK_BLOCK):
        block = rref[start : start + _UNPACK_BLOCK]
        raw = b"".join(row.to_bytes(nbytes, "little") for _, row in block)
        packed = np.frombuffer(raw, dtype=np.uint8).reshape(len(block), nbytes)
        bits = np.unpackbits(packed, axis=1, bitorder="little")[:, :ncols].astype(bool)
        kernel[:, pivots[start : start + len(block)]] = bits[:, free].T
    packed_kernel = np.packbits(kernel, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed_kernel]


def _dict_kernel(
    field: FieldSpec,
    rref: list[tuple[int, SparseRow]],
    ncols: int,
) -> list[SparseRow]:
    pivot_set = {lead for lead, _ in rref}
    kernel = {col: {col: 1} for col in range(ncols) if col not in pivot_set}
    for lead, row in rref:
        for col, value in row.items():
            if col != lead:
                kernel[col][lead] = field.neg(value)
    return list(kernel.values())


def mat_rref(matrix: Matrix) -> RrefResult:
    """Row reduce ``matrix``.

    Returns the canonical row space, the pivot columns and the canonical
    right kernel; ``rank + kernel dimension == number of columns``.

    >>> from hexcol.fields import field_make
    >>> result = mat_rref(Matrix.from_dense(field_make(2), [[1, 1, 0], [1, 1, 0]]))
    >>> result.rank, result.pivots, result.kernel.basis()
    (1, (0,), [[1, 1, 0], [0, 0, 1]])
    """
    field = matrix.field
    ncols = matrix.shape[1]
    ops = _ops(field)
    echelon: _Echelon = _Echelon(ops)
    for row in matrix.rows:
        echelon.insert(ops.pack(row))
    rref = echelon.rref()
    row_space = Subspace(field, ncols, rref)
    if isinstance(ops, _BitRows):
        kernel_rows: Iterable[Vector] = (
            ops.unpack(row) for row in _bit_kernel(rref, ncols)
        )
    else:
        kernel_rows = _dict_kernel(field, rref, ncols)
    kernel = Subspace.span(field, ncols, kernel_rows)
    return RrefResult(row_space, row_space.pivots, kernel)


def mat_inverse(matrix: Matrix) -> Matrix:
    """Inverse of a square matrix.

    Raises:
        DimensionError: ``matrix`` is not square.
        MembershipError: ``matrix`` is singular.
    """
    size, ncols = matrix.shape
    if size != ncols:
        msg = f"Only square matrices are invertible, got shape {matrix.shape}"
        raise DimensionError(msg)
    ops = _ops(matrix.field)
    echelon: _Echelon = _Echelon(ops)
    for i, row in enumerate(matrix.rows):
        if not echelon.insert(ops.pack(row), ops.unit(i)):
            msg = "Matrix is singular"
            raise MembershipError(msg)
    # reduce tags alongside rows to reach the identity
    reduced: dict[int, tuple] = {}
    for lead in sorted(echelon.rows, reverse=True):
        row, tag = echelon.rows[lead], echelon.tags[lead]
        for col in list(ops.support(row)):
            if col != lead:
                coeff = ops.entry(row, col)
                row = ops.eliminate(row, coeff, reduced[col][0])
                tag = ops.eliminate(tag, coeff, reduced[col][1])
        reduced[lead] = (row, tag)
    return Matrix(
        matrix.field,
        (size, size),
        [ops.unpack(reduced[i][1]) for i in range(size)],
    )


class QuotientSpace:
    """Quotient ``W / W0`` with a canonical coset basis.

    Coset representatives are the canonical basis rows of ``W`` that are
    independent modulo ``W0`` and the earlier representatives, scanned by
    increasing pivot.

    Raises:
        MembershipError: ``W0`` is not contained in ``W``.
    """

    def __init__(self, W: Subspace, W0: Subspace) -> None:
        W0._check_compatible(W)
        if not W0.is_subspace_of(W):
            msg = "Sub-subspace is not contained in the ambient subspace"
            raise MembershipError(msg)
        self._W = W
        self._W0 = W0
        ops = W._ops
        minus_one = W.field.neg(1)
        echelon: _Echelon = _Echelon(ops)
        for row in W0._packed:
            echelon.insert(row, ops.zero)
        representatives: list[int] = []
        coordinates: list = []
        for j, row in enumerate(W._packed):
            residual, tag = echelon.reduce(row, ops.zero)
            if ops.lead(residual) < 0:
                coordinates.append(ops.eliminate(ops.zero, 1, tag))
                continue
            index = len(representatives)
            representatives.append(j)
            unit = ops.unit(index)
            coordinates.append(unit)
            echelon.insert(residual, ops.eliminate(unit, minus_one, tag))
        self._representatives = tuple(representatives)
        self._coordinates = tuple(coordinates)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(dim={self.dim})"

    @property
    def W(self) -> Subspace:
        """Ambient subspace."""
        return self._W

    @property
    def W0(self) -> Subspace:
        """Subspace quotiented out."""
        return self._W0

    @property
    def dim(self) -> int:
        """``dim W - dim W0``."""
        return len(self._representatives)

    @property
    def field(self) -> FieldSpec:
        """Coefficient field."""
        return self._W.field

    def representatives(self) -> list[list[int]]:
        """Dense coset representatives, one per quotient basis vector."""
        basis = self._W.basis()
        return [basis[j] for j in self._representatives]

    def coordinates(self, vector: Vector) -> list[int]:
        """Coordinates of ``vector + W0`` in the coset basis.

        Raises:
            MembershipError: ``vector`` is not in ``W``.
        """
        W = self._W
        ops = W._ops
        residual, coordinates = W._residual(W._pack(vector))
        if residual:
            msg = "Vector does not lie in the ambient subspace"
            raise MembershipError(msg)
        minus = W.field.neg
        acc = ops.zero
        for index, coeff in coordinates:
            acc = ops.eliminate(acc, minus(coeff), self._coordinates[index])
        return _dense(ops.unpack(acc), self.dim)

    def lift(self, coordinates: Sequence[int]) -> list[int]:
        """Dense vector ``sum c_i r_i`` over the coset representatives."""
        if len(coordinates) != self.dim:
            msg = f"Expected {self.dim} coordinates, got {len(coordinates)}"
            raise DimensionError(msg)
        full = [0] * self._W.dim
        for coeff, j in zip(coordinates, self._representatives):
            full[j] = coeff
        return self._W.combination(full)


def quotient_coords(Q: QuotientSpace, vector: Vector) -> list[int]:
    """Coordinates of ``vector + W0`` in the canonical coset basis of ``Q``.

    Raises:
        MembershipError: ``vector`` is not in ``Q.W``.
    """
    return Q.coordinates(vector)
