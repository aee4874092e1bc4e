"""Tests for the fixture library."""

from __future__ import annotations

from typing import TYPE_CHECKING

import pytest
from hexcol.complex import (
    link,
    serialize_triangulation,
    simplex_boundary,
    validate_closed,
)
from hexcol.config import Caps, applied_caps
from hexcol.exceptions import UnavailableFixtureError, UnknownFixtureError
from hexcol.fixtures import fixture, fixture_info, fixture_names

if TYPE_CHECKING:
    from pathlib import Path


def test_fixture_names() -> None:
    """It registers building blocks and manifolds."""
    names = fixture_names()
    assert names[0] == "S1"
    assert {"S4", "CP2", "RP4", "S2xS2", "RP2xT2", "T4"} <= set(names)


def test_fixture_unknown() -> None:
    """It raises on unknown names."""
    with pytest.raises(UnknownFixtureError):
        fixture("K3")
    with pytest.raises(UnknownFixtureError):
        fixture_info("K3")


def test_fixture_without_data() -> None:
    """It raises when a registered fixture ships no data."""
    assert fixture_info("S2xS2tw").source == "external"
    with pytest.raises(UnavailableFixtureError):
        fixture("S2xS2tw")


def test_fixture_directory_override(tmp_path: Path) -> None:
    """It prefers documents found in the configured directory."""
    (tmp_path / "s2xs2tw.txt").write_text(
        serialize_triangulation(simplex_boundary(4)),
        encoding="utf-8",
    )
    with applied_caps(Caps(fixture_dir=str(tmp_path))):
        assert fixture("S2xS2tw") == simplex_boundary(4)
    with pytest.raises(UnavailableFixtureError):
        fixture("S2xS2tw")


@pytest.mark.parametrize(
    ("name", "f_vector", "euler"),
    [
        ("S1", (3, 3), 0),
        ("S2", (4, 6, 4), 2),
        ("T2", (7, 21, 14), 0),
        ("RP2", (6, 15, 10), 1),
        ("S4", (6, 15, 20, 15, 6), 2),
        ("CP2", (9, 36, 84, 90, 36), 3),
    ],
)
def test_bundled_fixtures(name: str, f_vector: tuple[int, ...], euler: int) -> None:
    """It loads closed complexes with the expected counts."""
    T = fixture(name)
    assert T.f_vector == f_vector
    assert T.euler_characteristic == euler
    assert validate_closed(T).passed


@pytest.mark.slow()
@pytest.mark.parametrize(
    ("name", "facets", "euler"),
    [
        ("RP4", 1920, 1),
        ("S2xS2", 96, 4),
        ("S2xT2", 336, 0),
        ("RP2xS2", 240, 2),
        ("RP2xT2", 840, 0),
        ("RP2xRP2", 600, 1),
        ("T4", 1176, 0),
    ],
)
def test_large_fixtures(name: str, facets: int, euler: int) -> None:
    """It builds closed 4-manifolds with the expected facet counts."""
    T = fixture(name)
    assert T.count(4) == facets
    assert T.euler_characteristic == euler
    assert validate_closed(T).passed


def test_expected_dimensions() -> None:
    """It records the coloring homology dimensions of the manifolds."""
    expected = {name: fixture_info(name).expected_d for name in fixture_names()}
    assert expected["CP2"] == 1
    assert expected["RP2xT2"] == 7
    assert expected["T4"] is None
    assert expected["S2xS2tw"] == 2


def _bad_edge_links(name: str) -> list[tuple[int, ...]]:
    T = fixture(name)
    bad = []
    for edge in T.simplices(1):
        L = link(T, edge)
        closed = L.dimension == 2 and validate_closed(L).passed  # noqa: PLR2004
        if not closed or L.euler_characteristic != 2:  # noqa: PLR2004
            bad.append(edge)
    return bad


@pytest.mark.parametrize("name", ["S4", "CP2"])
def test_edge_links_are_spheres(name: str) -> None:
    """It links every edge of a 4-manifold to a closed surface of Euler char 2."""
    assert _bad_edge_links(name) == []


@pytest.mark.slow()
@pytest.mark.parametrize("name", ["RP4", "S2xS2", "RP2xS2", "RP2xRP2"])
def test_edge_links_are_spheres_large(name: str) -> None:
    """It links every edge of the larger fixtures to a 2-sphere."""
    assert _bad_edge_links(name) == []
