"""Finite fields."""

from __future__ import annotations

import re
from functools import lru_cache
from typing import TYPE_CHECKING, Iterator

import galois
import numpy as np

from hexcol.config import check_cap
from hexcol.exceptions import FieldError
from hexcol.utils import logger

if TYPE_CHECKING:
    from numpy.typing import NDArray

__all__ = [
    "FieldSpec",
    "field_make",
    "parse_field",
    "is_prime",
]


def is_prime(n: int) -> bool:
    """Whether ``n`` is a prime number.

    >>> [n for n in range(12) if is_prime(n)]
    [2, 3, 5, 7, 11]
    """
    return n > 1 and bool(galois.is_prime(n))


class FieldSpec:
    """The finite field ``F_{p^k}``.

    Elements are plain ``int`` codes ``0 .. p^k - 1``: the base-``p`` digits of a
    code are the coefficients, lowest degree first, of a polynomial reduced modulo
    `modulus`. For ``k == 1`` codes are the residues themselves.

    Use `field_make` rather than the constructor, instances are cached.
    """

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]) -> None:
        self._p = p
        self._k = k
        self._modulus = modulus
        self._order = p**k
        self._add: list[list[int]] | None = None
        self._mul: list[list[int]] | None = None
        self._neg: list[int] | None = None
        self._inv: list[int] | None = None
        self._tables: tuple[NDArray[np.int64], NDArray[np.int64]] | None = None

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(p={self._p}, k={self._k})"

    def __str__(self) -> str:
        return f"{self._p}^{self._k}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self._p, self._modulus) == (other._p, other._modulus)

    def __hash__(self) -> int:
        return hash((self._p, self._modulus))

    def __reduce__(self) -> tuple[object, ...]:
        return (field_make, (self._p, self._k))

    @property
    def characteristic(self) -> int:
        """Prime characteristic ``p``."""
        return self._p

    @property
    def degree(self) -> int:
        """Extension degree ``k``."""
        return self._k

    @property
    def modulus(self) -> tuple[int, ...]:
        """Monic irreducible modulus, coefficients lowest degree first."""
        return self._modulus

    @property
    def order(self) -> int:
        """Number of elements."""
        return self._order

    @property
    def name(self) -> str:
        """Display name such as ``F_4``."""
        return f"F_{self._order}"

    @property
    def is_prime_field(self) -> bool:
        """Whether ``k == 1``."""
        return self._k == 1

    def elements(self) -> Iterator[int]:
        """Iterate every element code."""
        return iter(range(self._order))

    def coefficients(self, a: int) -> tuple[int, ...]:
        """Coefficient vector of ``a`` over ``F_p``, lowest degree first."""
        digits = []
        for _ in range(self._k):
            a, digit = divmod(a, self._p)
            digits.append(digit)
        return tuple(digits)

    def from_coefficients(self, coefficients: tuple[int, ...] | list[int]) -> int:
        """Element with the given coefficient vector (reduced mod ``p``)."""
        if len(coefficients) != self._k:
            msg = f"Expected {self._k} coefficients, got {len(coefficients)}"
            raise FieldError(msg)
        code = 0
        for c in reversed(coefficients):
            code = code * self._p + c % self._p
        return code

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` in the prime subfield."""
        return n % self._p

    def check(self, a: int) -> int:
        """Return ``a`` if it is an element code, raise `FieldError` otherwise."""
        if not 0 <= a < self._order:
            msg = f"{a} is not an element of {self.name}"
            raise FieldError(msg)
        return a

    @property
    def galois_field(self) -> type[galois.FieldArray]:
        """The same field as a `galois.FieldArray` class.

        Integer representations agree with the element codes of this class.
        """
        return _galois_field(self._p, self._k, self._modulus)

    def _build_tables(self) -> None:
        check_cap("max_field_order", self._order)
        logger.debug("Building arithmetic tables for %s", self.name)
        GF = self.galois_field
        x = GF.elements
        add = _codes(x[:, None] + x[None, :])
        mul = _codes(x[:, None] * x[None, :])
        self._tables = (add, mul)
        self._add = add.tolist()
        self._mul = mul.tolist()
        self._neg = _codes(-x).tolist()
        self._inv = [0, *_codes(np.reciprocal(x[1:])).tolist()]

    def tables(self) -> tuple[NDArray[np.int64], NDArray[np.int64]]:
        """Addition and multiplication tables as ``(q, q)`` arrays."""
        if self._k == 1:
            r = np.arange(self._p, dtype=np.int64)
            add = (r[:, None] + r[None, :]) % self._p
            mul = (r[:, None] * r[None, :]) % self._p
            return add, mul
        if self._tables is None:
            self._build_tables()
        assert self._tables is not None  # noqa: S101
        return self._tables

    def add(self, a: int, b: int) -> int:
        """Sum ``a + b``."""
        if self._k == 1:
            return (a + b) % self._p
        if self._add is None:
            self._build_tables()
        return self._add[a][b]  # type: ignore[index]

    def neg(self, a: int) -> int:
        """Additive inverse ``-a``."""
        if self._k == 1:
            return -a % self._p
        if self._neg is None:
            self._build_tables()
        return self._neg[a]  # type: ignore[index]

    def sub(self, a: int, b: int) -> int:
        """Difference ``a - b``."""
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        """Product ``a * b``."""
        if self._k == 1:
            return a * b % self._p
        if self._mul is None:
            self._build_tables()
        return self._mul[a][b]  # type: ignore[index]

    def inv(self, a: int) -> int:
        """Multiplicative inverse.

        Raises:
            FieldError: ``a`` is zero.
        """
        if a == 0:
            msg = f"Zero has no inverse in {self.name}"
            raise FieldError(msg)
        if self._k == 1:
            return pow(a, self._p - 2, self._p)
        if self._inv is None:
            self._build_tables()
        return self._inv[a]  # type: ignore[index]

    def div(self, a: int, b: int) -> int:
        """Quotient ``a / b``."""
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        """Power ``a ** n``, negative ``n`` allowed for nonzero ``a``."""
        if n < 0:
            return self.pow(self.inv(a), -n)
        if self._k == 1:
            return pow(a, n, self._p)
        result = 1
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def random(self, rng: np.random.Generator, *, nonzero: bool = False) -> int:
        """Uniform random element drawn from ``rng``."""
        low = 1 if nonzero else 0
        return int(rng.integers(low, self._order))

    def format(self, a: int) -> str:
        """Human readable element.

        Prime field elements print as residues, extension elements as
        polynomials in the generator ``a``.

        >>> F = field_make(2, 2)
        >>> [F.format(v) for v in F.elements()]
        ['0', '1', 'a', 'a+1']
        """
        if self._k == 1:
            return str(a)
        terms = []
        for i, c in reversed(list(enumerate(self.coefficients(a)))):
            if not c:
                continue
            base = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
            if not base:
                terms.append(str(c))
            else:
                terms.append(base if c == 1 else f"{c}{base}")
        return "+".join(terms) or "0"


@lru_cache(maxsize=None)
def field_make(p: int, k: int = 1) -> FieldSpec:
    """Build ``F_{p^k}``.

    The modulus is the irreducible monic polynomial of degree ``k`` whose lower
    coefficients, read as base-``p`` digits, give the smallest integer.

    Raises:
        FieldError: ``p`` is not prime or ``k < 1``.

    >>> field_make(2, 2).modulus
    (1, 1, 1)
    >>> field_make(2, 3).modulus
    (1, 1, 0, 1)
    """
    if not is_prime(p):
        msg = f"Field characteristic must be prime, got {p}"
        raise FieldError(msg)
    if k < 1:
        msg = f"Extension degree must be at least 1, got {k}"
        raise FieldError(msg)
    if k == 1:
        return FieldSpec(p, 1, (0, 1))
    poly = galois.irreducible_poly(p, k, method="min")
    modulus = tuple(int(c) for c in poly.coeffs[::-1])
    logger.debug("Modulus of F_%d^%d: %s", p, k, modulus)
    return FieldSpec(p, k, modulus)


@lru_cache(maxsize=None)
def _galois_field(p: int, k: int, modulus: tuple[int, ...]) -> type[galois.FieldArray]:
    if k == 1:
        return galois.GF(p)
    poly = galois.Poly(list(reversed(modulus)), field=galois.GF(p))
    return galois.GF(p**k, irreducible_poly=poly)


def _codes(array: galois.FieldArray) -> NDArray[np.int64]:
    """Integer representation of a field array as a plain ``int64`` array."""
    return array.view(np.ndarray).astype(np.int64)


_FIELD_RE = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")
_ORDER_RE = re.compile(r"^\s*F_(\d+)\s*$")


def parse_field(text: str) -> FieldSpec:
    """Parse ``"p"``, ``"p^k"`` or a field name ``"F_q"``.

    Raises:
        FieldError: Malformed text or invalid parameters.

    >>> parse_field("2^2")
    FieldSpec(p=2, k=2)
    >>> parse_field("F_9")
    FieldSpec(p=3, k=2)
    """
    match = _ORDER_RE.match(text)
    if match is not None:
        order = int(match.group(1))
        primes, exponents = galois.factors(order) if order > 1 else ([], [])
        if len(primes) != 1:
            msg = f"Field order must be a prime power, got {order}"
            raise FieldError(msg)
        return field_make(int(primes[0]), int(exponents[0]))
    match = _FIELD_RE.match(text)
    if match is None:
        msg = f"Field must be written 'p', 'p^k' or 'F_q', got {text!r}"
        raise FieldError(msg)
    return field_make(int(match.group(1)), int(match.group(2) or 1))
