"""Sparse multivariate polynomials over finite fields.

Polynomials are formal: over ``F_2`` the polynomials ``x`` and ``x^2`` are
different even though they agree as functions.
"""

from __future__ import annotations

import itertools
from typing import TYPE_CHECKING, Iterable, Iterator, Mapping, Sequence, Tuple

from hexcol.exceptions import DimensionError, FieldError

if TYPE_CHECKING:
    from hexcol.fields import FieldSpec
    from hexcol.linalg import Matrix

__all__ = [
    "MPoly",
    "Exponent",
    "monomials",
    "poly_substitute_linear",
]

Exponent = Tuple[int, ...]


def _grlex_key(exponent: Exponent) -> tuple[int, Exponent]:
    return (sum(exponent), exponent)


def monomials(nvars: int, degree: int) -> list[Exponent]:
    """Exponent vectors of total ``degree``, in canonical (graded-lex) order.

    >>> monomials(2, 2)
    [(2, 0), (1, 1), (0, 2)]
    """
    result = [
        exponent
        for combo in itertools.combinations_with_replacement(range(nvars), degree)
        for exponent in [tuple(combo.count(i) for i in range(nvars))]
    ]
    return sorted(result, key=_grlex_key, reverse=True)


class MPoly:
    """Polynomial in ``nvars`` variables, stored as ``exponent -> coefficient``.

    Terms iterate in graded-lexicographic order: higher total degree first,
    then larger exponent of the first variable first.

    >>> from hexcol.fields import field_make
    >>> F = field_make(2)
    >>> x, y = MPoly.variable(F, 2, 0), MPoly.variable(F, 2, 1)
    >>> ((x + y) ** 2).format(["x", "y"])
    'x^2 + y^2'
    """

    __slots__ = ("_field", "_nvars", "_terms", "_hash")

    def __init__(
        self,
        field: FieldSpec,
        nvars: int,
        terms: Mapping[Exponent, int] | None = None,
    ) -> None:
        self._field = field
        self._nvars = nvars
        self._terms: dict[Exponent, int] = {}
        self._hash: int | None = None
        for exponent, coeff in (terms or {}).items():
            if len(exponent) != nvars:
                msg = f"Exponent {exponent} does not have {nvars} entries"
                raise DimensionError(msg)
            if coeff:
                self._terms[tuple(exponent)] = coeff

    @classmethod
    def zero(cls, field: FieldSpec, nvars: int) -> MPoly:
        """The zero polynomial."""
        return cls(field, nvars)

    @classmethod
    def constant(cls, field: FieldSpec, nvars: int, value: int) -> MPoly:
        """Constant polynomial."""
        return cls(field, nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, field: FieldSpec, nvars: int, index: int) -> MPoly:
        """The polynomial ``x_index``."""
        if not 0 <= index < nvars:
            msg = f"Variable index {index} outside 0..{nvars - 1}"
            raise DimensionError(msg)
        exponent = [0] * nvars
        exponent[index] = 1
        return cls(field, nvars, {tuple(exponent): 1})

    @classmethod
    def linear(cls, field: FieldSpec, coefficients: Sequence[int]) -> MPoly:
        """Linear form ``sum c_i x_i``."""
        nvars = len(coefficients)
        terms = {}
        for i, coeff in enumerate(coefficients):
            if coeff:
                exponent = [0] * nvars
                exponent[i] = 1
                terms[tuple(exponent)] = coeff
        return cls(field, nvars, terms)

    @property
    def field(self) -> FieldSpec:
        """Coefficient field."""
        return self._field

    @property
    def nvars(self) -> int:
        """Number of variables."""
        return self._nvars

    @property
    def degree(self) -> int:
        """Total degree, ``-1`` for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_zero(self) -> bool:
        """Whether no term is stored."""
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> list[tuple[Exponent, int]]:
        """``(exponent, coefficient)`` pairs in canonical order."""
        return sorted(
            self._terms.items(),
            key=lambda term: _grlex_key(term[0]),
            reverse=True,
        )

    def __iter__(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self.terms())

    def coefficient(self, exponent: Sequence[int]) -> int:
        """Coefficient of a monomial, zero when absent."""
        return self._terms.get(tuple(exponent), 0)

    def __repr__(self) -> str:
        names = [f"x{i + 1}" for i in range(self._nvars)]
        text = self.format(names)
        return f"{self.__class__.__name__}({text!r}, field={self._field!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MPoly):
            return NotImplemented
        return (self._field, self._nvars, self._terms) == (
            other._field,
            other._nvars,
            other._terms,
        )

    def __hash__(self) -> int:
        if self._hash is None:
            items = frozenset(self._terms.items())
            self._hash = hash((self._field, self._nvars, items))
        return self._hash

    def _check(self, other: MPoly) -> None:
        if self._field != other._field:
            msg = "Polynomials are defined over different fields"
            raise FieldError(msg)
        if self._nvars != other._nvars:
            msg = f"Polynomials have {self._nvars} and {other._nvars} variables"
            raise DimensionError(msg)

    def __add__(self, other: MPoly) -> MPoly:
        self._check(other)
        add = self._field.add
        terms = dict(self._terms)
        for exponent, coeff in other._terms.items():
            terms[exponent] = add(terms.get(exponent, 0), coeff)
        return MPoly(self._field, self._nvars, terms)

    def __neg__(self) -> MPoly:
        neg = self._field.neg
        return MPoly(
            self._field,
            self._nvars,
            {exponent: neg(coeff) for exponent, coeff in self._terms.items()},
        )

    def __sub__(self, other: MPoly) -> MPoly:
        return self + (-other)

    def scale(self, value: int) -> MPoly:
        """Multiply every coefficient by the field element ``value``."""
        mul = self._field.mul
        return MPoly(
            self._field,
            self._nvars,
            {exponent: mul(value, coeff) for exponent, coeff in self._terms.items()},
        )

    def __mul__(self, other: MPoly | int) -> MPoly:
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        field = self._field
        terms: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponent = tuple(a + b for a, b in zip(e1, e2))
                terms[exponent] = field.add(terms.get(exponent, 0), field.mul(c1, c2))
        return MPoly(field, self._nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MPoly:
        if n < 0:
            msg = "Polynomials only have nonnegative powers"
            raise ValueError(msg)
        result = MPoly.constant(self._field, self._nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, point: Sequence[int]) -> int:
        """Value at ``point`` (function semantics)."""
        if len(point) != self._nvars:
            msg = f"Expected {self._nvars} values, got {len(point)}"
            raise DimensionError(msg)
        field = self._field
        total = 0
        for exponent, coeff in self._terms.items():
            value = coeff
            for x, e in zip(point, exponent):
                if e:
                    value = field.mul(value, field.pow(x, e))
            total = field.add(total, value)
        return total

    def remap(self, targets: Sequence[int], nvars: int) -> MPoly:
        """Rename variable ``i`` to ``targets[i]`` in a ring of ``nvars`` variables."""
        if len(targets) != self._nvars:
            msg = f"Expected {self._nvars} targets, got {len(targets)}"
            raise DimensionError(msg)
        add = self._field.add
        terms: dict[Exponent, int] = {}
        for exponent, coeff in self._terms.items():
            new = [0] * nvars
            for i, e in enumerate(exponent):
                if e:
                    new[targets[i]] += e
            key = tuple(new)
            terms[key] = add(terms.get(key, 0), coeff)
        return MPoly(self._field, nvars, terms)

    def partial_degrees(self, blocks: Sequence[Iterable[int]]) -> set[tuple[int, ...]]:
        """Set of degree vectors of the terms with respect to variable ``blocks``."""
        block_sets = [set(block) for block in blocks]
        return {
            tuple(sum(exponent[i] for i in block) for block in block_sets)
            for exponent in self._terms
        }

    def format(self, names: Sequence[str]) -> str:
        """Human readable form using variable ``names``.

        Prime field coefficients print as balanced residues.
        """
        if not self._terms:
            return "0"
        field = self._field
        pieces: list[str] = []
        for exponent, coeff in self.terms():
            sign = "+"
            shown = field.format(coeff)
            p = field.characteristic
            if field.is_prime_field and p > 2 and coeff > p // 2:  # noqa: PLR2004
                sign = "-"
                shown = str(p - coeff)
            factors = [
                names[i] if e == 1 else f"{names[i]}^{e}"
                for i, e in enumerate(exponent)
                if e
            ]
            if shown != "1" or not factors:
                if not field.is_prime_field and factors:
                    shown = f"({shown})"
                factors.insert(0, shown)
            monomial = "*".join(factors)
            if not pieces:
                pieces.append(monomial if sign == "+" else f"-{monomial}")
            else:
                pieces.append(f"{sign} {monomial}")
        return " ".join(pieces)


def poly_substitute_linear(
    f: MPoly,
    L: Matrix,
    shift: Sequence[int] | None = None,
) -> MPoly:
    """Substitute ``x_i <- sum_j L[i, j] y_j + shift[i]`` in ``f``.

    Raises:
        DimensionError: ``L`` is not ``f.nvars`` rows high.

    >>> from hexcol.fields import field_make
    >>> from hexcol.linalg import Matrix
    >>> F = field_make(3)
    >>> f = MPoly(F, 1, {(3,): 1})
    >>> poly_substitute_linear(f, Matrix.from_dense(F, [[2]])).format(["y"])
    '-y^3'
    """
    nrows, ncols = L.shape
    if nrows != f.nvars:
        msg = f"Substitution has {nrows} rows for {f.nvars} variables"
        raise DimensionError(msg)
    if shift is not None and len(shift) != nrows:
        msg = f"Shift has {len(shift)} entries for {nrows} variables"
        raise DimensionError(msg)
    field = f.field
    forms = []
    for i, row in enumerate(L.rows):
        terms: dict[Exponent, int] = {}
        for j, value in row.items():
            exponent = [0] * ncols
            exponent[j] = 1
            terms[tuple(exponent)] = value
        if shift is not None and shift[i]:
            terms[(0,) * ncols] = shift[i]
        forms.append(MPoly(field, ncols, terms))

    powers: dict[tuple[int, int], MPoly] = {}

    def power(i: int, e: int) -> MPoly:
        key = (i, e)
        if key not in powers:
            powers[key] = forms[i] if e == 1 else power(i, e - 1) * forms[i]
        return powers[key]

    result = MPoly.zero(field, ncols)
    for exponent, coeff in f.terms():
        term = MPoly.constant(field, ncols, coeff)
        for i, e in enumerate(exponent):
            if e:
                term = term * power(i, e)
                if not term:
                    break
        result = result + term
    return result
