"""Tests for hexagon cochains on standard simplices."""

from __future__ import annotations

import itertools
from typing import TYPE_CHECKING

import numpy as np
import pytest
from hexcol.coloring import edge_functional, permitted_space
from hexcol.complex import simplex_boundary
from hexcol.enums import CochainKind, QuotientConvention
from hexcol.exceptions import (
    CochainSyntaxError,
    CocycleError,
    DimensionError,
    FieldError,
)
from hexcol.fields import field_make
from hexcol.hexagon import (
    BUILTIN_COCYCLES,
    HexCochain,
    ambient_to_canonical,
    ambient_to_tilde,
    ambient_variable,
    builtin_cocycle,
    coboundary,
    hex_cohomology,
    is_cocycle,
    parse_cochain,
    random_cochain,
    standard_colorings,
    tilde_to_ambient,
)
from hexcol.polynomials import MPoly

if TYPE_CHECKING:
    from hexcol.fields import FieldSpec


def test_standard_dimensions(field: FieldSpec) -> None:
    """It parametrizes the permitted colorings of the standard simplices."""
    assert standard_colorings(3, field).dim == 2
    assert standard_colorings(4, field).dim == 5
    upper = standard_colorings(5, field)
    assert upper.dim == permitted_space(simplex_boundary(4), field).dim
    assert upper.ambient_dim == 30


def test_standard_level_range(F2: FieldSpec) -> None:
    """It only builds levels 3 to 5."""
    with pytest.raises(DimensionError):
        standard_colorings(2, F2)
    with pytest.raises(DimensionError):
        standard_colorings(6, F2)


@pytest.mark.parametrize("level", [4, 5])
def test_edge_functionals_restrict_to_zero(field: FieldSpec, level: int) -> None:
    """It maps every edge functional to the zero cochain."""
    space = standard_colorings(level, field)
    K = space.complex
    for u in K.simplices(4):
        for ij in itertools.combinations(u, 2):
            row = edge_functional(K, u, ij, field)
            coefficients = [row.get(i, 0) for i in range(space.ambient_dim)]
            f = MPoly.linear(field, coefficients)
            assert ambient_to_canonical(level, f).is_zero()


def test_coboundary_of_constant(field: FieldSpec) -> None:
    """It sums the five faces of a constant with alternating signs."""
    one = HexCochain(3, CochainKind.POLYNOMIAL, MPoly.constant(field, 2, 1))
    image = coboundary(one)
    assert image.level == 4
    assert image.poly == MPoly.constant(field, 5, 1)


def test_coboundary_top_level(F2: FieldSpec) -> None:
    """It has no coboundary above level 4."""
    with pytest.raises(DimensionError):
        coboundary(HexCochain.zero(5, F2, CochainKind.POLYNOMIAL))


@pytest.mark.parametrize("kind", list(CochainKind))
def test_coboundary_squares_to_zero(
    kind: CochainKind,
    rng: np.random.Generator,
) -> None:
    """It composes two coboundaries to zero."""
    for F in (field_make(2), field_make(3), field_make(2, 2)):
        c = random_cochain(3, 3, F, rng, kind)
        assert coboundary(coboundary(c)).is_zero()


def test_builtin_cocycles(field: FieldSpec) -> None:
    """It builds the bilinear cocycles everywhere and the cubic ones in char 2."""
    for name in BUILTIN_COCYCLES:
        if "cubic" in name and field.characteristic != 2:
            with pytest.raises(FieldError):
                builtin_cocycle(name, field)
            continue
        c = builtin_cocycle(name, field)
        assert is_cocycle(c)
        assert not c.is_zero()


def test_builtin_cocycle_unknown(F2: FieldSpec) -> None:
    """It raises on unknown names."""
    with pytest.raises(CocycleError):
        builtin_cocycle("c5", F2)


def test_builtin_levels_and_kinds(F2: FieldSpec) -> None:
    """It assigns levels and kinds to the built-in cocycles."""
    assert builtin_cocycle("c3_bilinear", F2).level == 3
    c = builtin_cocycle("c4_cubic_1", F2)
    assert (c.level, c.kind, c.poly.degree) == (4, CochainKind.POLYNOMIAL, 3)
    assert builtin_cocycle("c4_bilinear", F2).kind == CochainKind.BILINEAR


def test_parse_cochain_matches_builtin(F3: FieldSpec) -> None:
    """It parses literals into canonical form."""
    assert parse_cochain("y[2345]*y'[1234]", F3) == builtin_cocycle("c4_bilinear", F3)
    literal = "-x[1234]*y'[1234] - y[1234]*x'[1234]"
    assert parse_cochain(literal, F3) == builtin_cocycle("c3_bilinear", F3)


def test_parse_cochain_powers_and_constants(F2: FieldSpec) -> None:
    """It reads powers, integer factors and explicit levels."""
    c = parse_cochain("y[2345]*y[1234]^2", F2)
    assert c == builtin_cocycle("c4_cubic_1", F2)
    assert parse_cochain("3", F2, level=3).poly == MPoly.constant(F2, 2, 1)
    assert parse_cochain("2*x[1234]", F2).is_zero()


@pytest.mark.parametrize(
    "text",
    ["", "x[1234]*", "z[1234]", "3", "x[1244]", "x[1234] y[1234]", "x[1234]^"],
)
def test_parse_cochain_errors(F2: FieldSpec, text: str) -> None:
    """It reports malformed literals."""
    with pytest.raises(CochainSyntaxError):
        parse_cochain(text, F2)


def test_ambient_variable_primes(F2: FieldSpec) -> None:
    """It refuses primed variables in polynomial cochains."""
    with pytest.raises(CochainSyntaxError):
        ambient_variable(3, F2, "x1234'")
    bilinear = ambient_variable(3, F2, "x1234'", kind=CochainKind.BILINEAR)
    assert bilinear.nvars == 4


def test_bilinear_bidegree(F3: FieldSpec) -> None:
    """It rejects bilinear cochains of the wrong bidegree."""
    with pytest.raises(CocycleError):
        HexCochain(3, CochainKind.BILINEAR, MPoly.variable(F3, 4, 0))
    with pytest.raises(DimensionError):
        HexCochain(3, CochainKind.POLYNOMIAL, MPoly.variable(F3, 4, 0))


def test_cochain_arithmetic(F3: FieldSpec) -> None:
    """It adds, negates and scales cochains of the same level and kind."""
    c = builtin_cocycle("c3_bilinear", F3)
    assert (c + c.scale(2)).is_zero()
    assert (c - c).is_zero()
    assert -c == c.scale(2)
    with pytest.raises(DimensionError):
        c + builtin_cocycle("c4_bilinear", F3)


def test_tilde_roundtrip(F3: FieldSpec) -> None:
    """It inverts the tilde change of coordinates."""
    x, y = MPoly.variable(F3, 2, 0), MPoly.variable(F3, 2, 1)
    f = x * x * y + y.scale(2)
    assert ambient_to_tilde(tilde_to_ambient(f)) == f
    assert tilde_to_ambient(ambient_to_tilde(f)) == f
    with pytest.raises(DimensionError):
        tilde_to_ambient(MPoly.variable(F3, 3, 0))


def test_hex_cohomology_level_three(field: FieldSpec) -> None:
    """It has no coboundaries at the bottom level."""
    report = hex_cohomology(3, 1, field)
    assert report.coboundary_dim == 0
    assert report.cohomology_dim == report.cocycle_dim
    for c in report.representatives:
        assert is_cocycle(c)


def test_hex_cohomology_cubic_classes(F2: FieldSpec) -> None:
    """It finds the two cubic classes independent in degree three."""
    report = hex_cohomology(4, 3, F2)
    assert report.cohomology_dim >= 2
    cubic = [builtin_cocycle(name, F2) for name in ("c4_cubic_1", "c4_cubic_2")]
    assert report.independent(cubic)
    assert set(report.dims) == set(QuotientConvention)


def test_hex_cohomology_bilinear_class(F2: FieldSpec) -> None:
    """It locates the bilinear level 4 cocycle in a nonzero class."""
    report = hex_cohomology(4, 2, F2, CochainKind.BILINEAR)
    assert any(report.coordinates(builtin_cocycle("c4_bilinear", F2)))
    for c in report.representatives:
        assert is_cocycle(c)


def test_hex_cohomology_homogeneous(F2: FieldSpec) -> None:
    """It counts only top degree monomials in the homogeneous convention."""
    bounded = hex_cohomology(4, 3, F2)
    homogeneous = hex_cohomology(4, 3, F2, convention=QuotientConvention.HOMOGENEOUS)
    assert homogeneous.dims == bounded.dims
    assert homogeneous.cocycle_dim <= bounded.cocycle_dim
    assert all(c.poly.degree == 3 for c in homogeneous.representatives)


def test_hex_cohomology_rejects_non_cocycle(F2: FieldSpec) -> None:
    """It refuses coordinates of cochains outside the searched degrees."""
    report = hex_cohomology(4, 1, F2)
    with pytest.raises(CocycleError):
        report.coordinates(builtin_cocycle("c4_cubic_1", F2))


def test_hex_cohomology_ranges(F2: FieldSpec) -> None:
    """It computes at levels 3 and 4 with a nonnegative degree."""
    with pytest.raises(DimensionError):
        hex_cohomology(5, 1, F2)
    with pytest.raises(DimensionError):
        hex_cohomology(4, -1, F2)
