"""Tests for simplicial complexes and triangulation documents."""

from __future__ import annotations

import json

import pytest
from hexcol.complex import (
    SimplicialComplex,
    Triangulation,
    connected_components,
    fixture_hash,
    link,
    parse_triangulation,
    renumber,
    serialize_triangulation,
    simplex_boundary,
    staircase_product,
    validate_closed,
)
from hexcol.exceptions import MalformedDocumentError, TriangulationError
from hexcol.fixtures import fixture


def test_simplex_boundary_counts() -> None:
    """It builds spheres with binomial face counts."""
    S2 = simplex_boundary(2)
    assert S2.f_vector == (4, 6, 4)
    assert S2.euler_characteristic == 2
    assert simplex_boundary(3).euler_characteristic == 0


def test_faces_are_sorted_and_indexed() -> None:
    """It orders simplices lexicographically and indexes them."""
    T = Triangulation(4, [(4, 2, 1), (1, 3, 4)])
    assert T.facets == ((1, 2, 4), (1, 3, 4))
    assert T.edges == ((1, 2), (1, 3), (1, 4), (2, 4), (3, 4))
    assert T.index(1)[(1, 4)] == 2
    assert T.contains((4, 1))
    assert not T.contains((2, 3))
    assert T.simplices(5) == ()


@pytest.mark.parametrize(
    "facets",
    [
        [(1, 1, 2)],
        [(1, 2, 3), (3, 2, 1)],
        [(1, 2, 3), (1, 2)],
        [],
    ],
)
def test_invalid_facets(facets: list[tuple[int, ...]]) -> None:
    """It rejects repeated vertices, duplicates, mixed dimensions and emptiness."""
    with pytest.raises(TriangulationError):
        SimplicialComplex(facets)


def test_triangulation_vertex_range() -> None:
    """It requires every vertex of 1..N_0 to be used."""
    with pytest.raises(TriangulationError):
        Triangulation(3, [(1, 2)])
    with pytest.raises(TriangulationError):
        Triangulation(2, [(1, 3)])
    with pytest.raises(TriangulationError):
        Triangulation(6, [(1, 2, 3, 4, 5, 6)])


def test_from_facets_relabels() -> None:
    """It compacts arbitrary labels in order."""
    T = Triangulation.from_facets([(10, 30), (30, 20)])
    assert T.facets == ((1, 3), (2, 3))


@pytest.mark.parametrize(
    "document",
    [
        "pentachoron 1 2 3 4 5",
        "vertices 5\npentachoron 1 2 3 4",
        "vertices 5\nsimplex 1 2 3 4 5",
        "vertices 4\ntriangle 1 2 3\ntetrahedron 1 2 3 4",
        "vertices x",
        "vertices 5",
        '{"vertices": 3}',
        '{"vertices": 3, "edges": [[1, 2]], "triangles": []}',
        '{"vertices": 3, "edges": [[1, 2, 3]]}',
        "{not json",
    ],
)
def test_parse_malformed(document: str) -> None:
    """It reports malformed documents."""
    with pytest.raises(MalformedDocumentError):
        parse_triangulation(document)


def test_parse_comments_and_json() -> None:
    """It skips comments and reads both formats to the same complex."""
    text = "# circle\nvertices 3\n\nedge 1 2\nedge 2 3\n# last\nedge 1 3\n"
    T = parse_triangulation(text)
    J = parse_triangulation('{"vertices": 3, "edges": [[1, 2], [2, 3], [3, 1]]}')
    assert T == J
    assert parse_triangulation(serialize_triangulation(T, fmt="json")) == T
    with pytest.raises(ValueError, match="format"):
        serialize_triangulation(T, fmt="xml")


def test_fixture_hash_stable() -> None:
    """It hashes the canonical document."""
    T = simplex_boundary(4)
    document = serialize_triangulation(T)
    assert fixture_hash(T) == fixture_hash(parse_triangulation(document))
    assert len(fixture_hash(T)) == 64


def test_link() -> None:
    """It links vertices and edges and rejects facets."""
    S4 = simplex_boundary(4)
    assert link(S4, (1,)).to_triangulation() == simplex_boundary(3)
    assert link(S4, (2, 1)).base == (1, 2)
    with pytest.raises(TriangulationError):
        link(S4, (1, 2, 3, 4, 5))
    with pytest.raises(TriangulationError):
        link(simplex_boundary(2), (1, 5))


def test_validate_closed() -> None:
    """It detects boundary and pinched links."""
    assert validate_closed(fixture("CP2")).passed
    ball = Triangulation(4, [(1, 2, 3, 4)])
    assert len(validate_closed(ball).boundary) == 4
    # two sphere boundaries glued at a vertex
    second = [(1, 5, 6), (1, 5, 7), (1, 6, 7), (5, 6, 7)]
    pinched = Triangulation(7, [*simplex_boundary(2).facets, *second])
    report = validate_closed(pinched)
    assert not report.passed
    assert (1,) in report.disconnected_links


def test_staircase_product_circle_square() -> None:
    """It triangulates the torus as a product of circles."""
    S1 = simplex_boundary(1)
    T = staircase_product(S1, S1)
    assert T.f_vector == (9, 27, 18)
    assert T.euler_characteristic == 0
    assert validate_closed(T).passed


def test_staircase_product_dimension_cap() -> None:
    """It refuses products above dimension four."""
    with pytest.raises(TriangulationError):
        staircase_product(simplex_boundary(2), simplex_boundary(3))


def test_renumber() -> None:
    """It relabels by permutations only."""
    S2 = simplex_boundary(2)
    assert renumber(S2, [4, 3, 2, 1]) == S2
    with pytest.raises(TriangulationError):
        renumber(S2, [1, 1, 2, 3])


def test_connected_components() -> None:
    """It splits disjoint unions and compacts labels."""
    T = Triangulation(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
    parts = connected_components(T)
    assert len(parts) == 2
    assert all(part == simplex_boundary(1) for part in parts)
    assert connected_components(simplex_boundary(1)) == [simplex_boundary(1)]


def test_serialize_json_key() -> None:
    """It names the facet list by dimension."""
    data = json.loads(serialize_triangulation(simplex_boundary(4), fmt="json"))
    assert data["vertices"] == 6
    assert len(data["pentachora"]) == 6
