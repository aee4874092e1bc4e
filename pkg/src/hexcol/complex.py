"""Ordered-vertex simplicial complexes."""

from __future__ import annotations

import itertools
import json
from functools import cached_property
from typing import (
    TYPE_CHECKING,
    Iterable,
    Iterator,
    Mapping,
    NamedTuple,
    Sequence,
    Tuple,
)

from hexcol.exceptions import MalformedDocumentError, TriangulationError
from hexcol.utils import logger, sha256_text

if TYPE_CHECKING:
    from typing_extensions import Self

__all__ = [
    "Simplex",
    "SimplicialComplex",
    "Triangulation",
    "LinkComplex",
    "ClosedReport",
    "MAX_DIMENSION",
    "KEYWORDS",
    "parse_triangulation",
    "serialize_triangulation",
    "validate_closed",
    "link",
    "staircase_product",
    "simplex_boundary",
    "component_facets",
    "connected_components",
    "renumber",
    "compactify",
    "fixture_hash",
]

Simplex = Tuple[int, ...]

MAX_DIMENSION = 4
"""Largest dimension of a `Triangulation`."""

KEYWORDS = ("vertex", "edge", "triangle", "tetrahedron", "pentachoron")
"""Document keyword of a facet, indexed by dimension."""

_PLURALS = ("points", "edges", "triangles", "tetrahedra", "pentachora")


class SimplicialComplex:
    """Pure simplicial complex given by its facets.

    Every simplex is a strictly increasing tuple of vertex labels; faces inherit
    the vertex order.
    """

    def __init__(self, facets: Iterable[Sequence[int]]) -> None:
        seen: set[Simplex] = set()
        size = None
        for raw in facets:
            facet = tuple(sorted(raw))
            if len(set(facet)) != len(facet):
                msg = f"Repeated vertex in simplex {tuple(raw)}"
                raise TriangulationError(msg)
            if size is None:
                size = len(facet)
            elif len(facet) != size:
                msg = f"Facet {facet} has {len(facet)} vertices, expected {size}"
                raise TriangulationError(msg)
            if facet in seen:
                msg = f"Duplicate facet {facet}"
                raise TriangulationError(msg)
            seen.add(facet)
        if size is None or size == 0:
            msg = "A complex needs at least one nonempty facet"
            raise TriangulationError(msg)
        self._facets: tuple[Simplex, ...] = tuple(sorted(seen))
        self._dimension = size - 1

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}(dimension={self._dimension}, "
            f"facets={len(self._facets)})"
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex) or type(self) is not type(other):
            return NotImplemented
        return self._facets == other._facets

    def __hash__(self) -> int:
        return hash(self._facets)

    @property
    def facets(self) -> tuple[Simplex, ...]:
        """Top dimensional simplices in lexicographic order."""
        return self._facets

    @property
    def dimension(self) -> int:
        """Dimension of the facets."""
        return self._dimension

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        """Vertex labels in increasing order."""
        return tuple(sorted({v for facet in self._facets for v in facet}))

    @cached_property
    def _simplices(self) -> tuple[tuple[Simplex, ...], ...]:
        faces: list[set[Simplex]] = [set() for _ in range(self._dimension + 1)]
        for facet in self._facets:
            for n in range(self._dimension + 1):
                faces[n].update(itertools.combinations(facet, n + 1))
        return tuple(tuple(sorted(level)) for level in faces)

    @cached_property
    def _indices(self) -> tuple[dict[Simplex, int], ...]:
        return tuple(
            {simplex: i for i, simplex in enumerate(level)} for level in self._simplices
        )

    @cached_property
    def _vertex_facets(self) -> dict[int, list[int]]:
        incidence: dict[int, list[int]] = {}
        for i, facet in enumerate(self._facets):
            for v in facet:
                incidence.setdefault(v, []).append(i)
        return incidence

    def simplices(self, n: int) -> tuple[Simplex, ...]:
        """The ``n``-simplices in lexicographic order, empty outside ``0..dim``."""
        if not 0 <= n <= self._dimension:
            return ()
        return self._simplices[n]

    def index(self, n: int) -> dict[Simplex, int]:
        """Position of each ``n``-simplex in `simplices`."""
        if not 0 <= n <= self._dimension:
            return {}
        return self._indices[n]

    def count(self, n: int) -> int:
        """Number ``N_n`` of ``n``-simplices."""
        return len(self.simplices(n))

    @property
    def f_vector(self) -> tuple[int, ...]:
        """``(N_0, ..., N_dim)``."""
        return tuple(self.count(n) for n in range(self._dimension + 1))

    @property
    def euler_characteristic(self) -> int:
        """Alternating sum of the f-vector."""
        return sum((-1) ** n * count for n, count in enumerate(self.f_vector))

    def contains(self, simplex: Sequence[int]) -> bool:
        """Whether ``simplex`` (in any vertex order) is a face of the complex."""
        key = tuple(sorted(simplex))
        return key in self.index(len(key) - 1)

    def facets_containing(self, simplex: Sequence[int]) -> list[Simplex]:
        """Facets having ``simplex`` as a face."""
        vertices = set(simplex)
        if not vertices:
            return list(self._facets)
        first = min(vertices)
        return [
            self._facets[i]
            for i in self._vertex_facets.get(first, [])
            if vertices.issubset(self._facets[i])
        ]

    def is_connected(self) -> bool:
        """Whether the 1-skeleton is connected."""
        return len(_vertex_classes(self._facets)) == 1


def _vertex_classes(facets: Sequence[Simplex]) -> list[list[int]]:
    """Vertex sets of the connected components, sorted by smallest vertex."""
    parent: dict[int, int] = {}

    def find(v: int) -> int:
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    for facet in facets:
        for v in facet:
            parent.setdefault(v, v)
        for v in facet[1:]:
            a, b = find(facet[0]), find(v)
            if a != b:
                parent[max(a, b)] = min(a, b)
    classes: dict[int, list[int]] = {}
    for v in sorted(parent):
        classes.setdefault(find(v), []).append(v)
    return [classes[root] for root in sorted(classes)]


class Triangulation(SimplicialComplex):
    """Pure simplicial complex on the vertices ``1 .. N_0``.

    >>> T = simplex_boundary(4)
    >>> T.num_vertices, T.f_vector
    (6, (6, 15, 20, 15, 6))

    Raises:
        TriangulationError: Invalid vertex labels or facets.
    """

    def __init__(self, num_vertices: int, facets: Iterable[Sequence[int]]) -> None:
        super().__init__(facets)
        if self.dimension > MAX_DIMENSION:
            msg = f"Dimension {self.dimension} exceeds {MAX_DIMENSION}"
            raise TriangulationError(msg)
        for facet in self.facets:
            if facet[0] < 1 or facet[-1] > num_vertices:
                msg = f"Vertex of {facet} outside 1..{num_vertices}"
                raise TriangulationError(msg)
        if len(self.vertices) != num_vertices:
            missing = sorted(set(range(1, num_vertices + 1)) - set(self.vertices))
            msg = f"Vertices {missing} belong to no facet"
            raise TriangulationError(msg)
        self._num_vertices = num_vertices

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}(num_vertices={self._num_vertices}, "
            f"dimension={self.dimension}, facets={len(self.facets)})"
        )

    @classmethod
    def from_facets(cls, facets: Iterable[Sequence[int]]) -> Self:
        """Build from facets on arbitrary labels, relabeled onto ``1 .. N_0``."""
        facets = [tuple(f) for f in facets]
        labels = sorted({v for facet in facets for v in facet})
        mapping = {v: i + 1 for i, v in enumerate(labels)}
        return cls(len(labels), ([mapping[v] for v in facet] for facet in facets))

    @classmethod
    def point(cls) -> Self:
        """The one-vertex complex."""
        return cls(1, [(1,)])

    @property
    def num_vertices(self) -> int:
        """``N_0``."""
        return self._num_vertices

    @property
    def pentachora(self) -> tuple[Simplex, ...]:
        """4-simplices."""
        return self.simplices(4)

    @property
    def tetrahedra(self) -> tuple[Simplex, ...]:
        """3-simplices."""
        return self.simplices(3)

    @property
    def edges(self) -> tuple[Simplex, ...]:
        """1-simplices."""
        return self.simplices(1)


class LinkComplex(SimplicialComplex):
    """Link ``lk(b, K)``: simplices ``B`` disjoint from ``b`` with ``b * B`` in ``K``.

    Vertex labels and order are inherited from ``K``.
    """

    def __init__(self, base: Simplex, facets: Iterable[Sequence[int]]) -> None:
        super().__init__(facets)
        self._base = base

    @property
    def base(self) -> Simplex:
        """The simplex ``b`` whose link this is."""
        return self._base

    def to_triangulation(self) -> Triangulation:
        """Same complex relabeled onto ``1 .. N_0``."""
        return Triangulation.from_facets(self.facets)


def link(T: SimplicialComplex, b: Sequence[int]) -> LinkComplex:
    """Link of the simplex ``b`` in ``T``.

    >>> link(simplex_boundary(4), (1, 2)).facets
    ((3, 4, 5), (3, 4, 6), (3, 5, 6), (4, 5, 6))

    Raises:
        TriangulationError: ``b`` is not a simplex of ``T``, or is a facet.
    """
    base = tuple(sorted(b))
    if not T.contains(base):
        msg = f"{base} is not a simplex of the complex"
        raise TriangulationError(msg)
    if len(base) == T.dimension + 1:
        msg = f"{base} is a facet, its link is empty"
        raise TriangulationError(msg)
    members = set(base)
    return LinkComplex(
        base,
        (
            tuple(v for v in facet if v not in members)
            for facet in T.facets_containing(base)
        ),
    )


class ClosedReport(NamedTuple):
    """Outcome of `validate_closed`."""

    passed: bool
    """Whether every check succeeded."""

    boundary: tuple[tuple[Simplex, int], ...]
    """Codimension one faces not lying in exactly two facets, with their count."""

    disconnected_links: tuple[Simplex, ...]
    """Vertices and edges whose link is not connected."""


def validate_closed(T: SimplicialComplex) -> ClosedReport:
    """Check ``T`` looks like a closed pseudomanifold.

    Every codimension one face must lie in exactly two facets, vertex links
    must be connected (dimension at least 2) and edge links must be connected
    (dimension at least 3).

    >>> validate_closed(simplex_boundary(4)).passed
    True
    >>> len(validate_closed(Triangulation(5, [(1, 2, 3, 4, 5)])).boundary)
    5
    """
    counts: dict[Simplex, int] = {}
    for facet in T.facets:
        for ridge in itertools.combinations(facet, len(facet) - 1):
            counts[ridge] = counts.get(ridge, 0) + 1
    boundary = tuple(
        (ridge, n)
        for ridge, n in sorted(counts.items())
        if n != 2  # noqa: PLR2004
    )

    disconnected = []
    for size in (1, 2):
        if T.dimension < size + 1:
            continue
        for simplex in T.simplices(size - 1):
            if not link(T, simplex).is_connected():
                disconnected.append(simplex)
    report = ClosedReport(
        not boundary and not disconnected,
        boundary,
        tuple(disconnected),
    )
    if not report.passed:
        logger.debug(
            "Complex is not closed: %d boundary faces, %d disconnected links",
            len(boundary),
            len(disconnected),
        )
    return report


def _parse_text(document: str) -> tuple[int, list[list[int]], int]:
    num_vertices = None
    facets: list[list[int]] = []
    dimension = None
    for number, raw in enumerate(document.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword, *values = line.split()
        try:
            numbers = [int(value) for value in values]
        except ValueError as exception:
            msg = f"Line {number}: expected integers, got {raw!r}"
            raise MalformedDocumentError(msg) from exception
        if num_vertices is None:
            if keyword != "vertices" or len(numbers) != 1:
                msg = f"Line {number}: document must start with 'vertices N'"
                raise MalformedDocumentError(msg)
            num_vertices = numbers[0]
            continue
        if keyword not in KEYWORDS:
            msg = f"Line {number}: unknown keyword {keyword!r}"
            raise MalformedDocumentError(msg)
        if dimension is None:
            dimension = KEYWORDS.index(keyword)
        elif KEYWORDS.index(keyword) != dimension:
            msg = f"Line {number}: {keyword!r} mixed with {KEYWORDS[dimension]!r}"
            raise MalformedDocumentError(msg)
        if len(numbers) != dimension + 1:
            msg = f"Line {number}: a {keyword} has {dimension + 1} vertices"
            raise MalformedDocumentError(msg)
        facets.append(numbers)
    if num_vertices is None or dimension is None:
        msg = "Document has no 'vertices' line or no simplices"
        raise MalformedDocumentError(msg)
    return num_vertices, facets, dimension


def _parse_json(document: str) -> tuple[int, list[list[int]], int]:
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exception:
        msg = f"Invalid JSON document: {exception}"
        raise MalformedDocumentError(msg) from exception
    if not isinstance(data, dict) or not isinstance(data.get("vertices"), int):
        msg = "JSON document must be an object with an integer 'vertices'"
        raise MalformedDocumentError(msg)
    keys = [key for key in _PLURALS if key in data]
    unknown = set(data) - {"vertices", *_PLURALS}
    if len(keys) != 1 or unknown:
        msg = f"JSON document needs exactly one of {list(_PLURALS)}"
        raise MalformedDocumentError(msg)
    dimension = _PLURALS.index(keys[0])
    facets = data[keys[0]]
    if not isinstance(facets, list) or not all(
        isinstance(facet, list)
        and len(facet) == dimension + 1
        and all(isinstance(v, int) for v in facet)
        for facet in facets
    ):
        msg = f"'{keys[0]}' must be a list of {dimension + 1}-integer lists"
        raise MalformedDocumentError(msg)
    return data["vertices"], facets, dimension


def parse_triangulation(document: str) -> Triangulation:
    """Parse a text or JSON triangulation document.

    Text documents start with ``vertices N`` followed by one facet per line,
    ``pentachoron i1 i2 i3 i4 i5`` (or ``tetrahedron``, ``triangle``, ``edge``,
    ``vertex`` for lower dimensions). Lines starting with ``#`` are comments.
    JSON documents look like ``{"vertices": N, "pentachora": [[...], ...]}``.

    Raises:
        MalformedDocumentError: Document does not follow the format.
        TriangulationError: Vertex out of range, repeated vertex, duplicate facet.

    >>> T = parse_triangulation("vertices 5\\npentachoron 5 4 3 2 1")
    >>> T.facets
    ((1, 2, 3, 4, 5),)
    """
    if document.lstrip().startswith("{"):
        num_vertices, facets, _ = _parse_json(document)
    else:
        num_vertices, facets, _ = _parse_text(document)
    triangulation = Triangulation(num_vertices, facets)
    logger.debug("Parsed triangulation %r", triangulation)
    return triangulation


def serialize_triangulation(T: Triangulation, *, fmt: str = "text") -> str:
    """Write ``T`` as a document understood by `parse_triangulation`.

    >>> print(serialize_triangulation(simplex_boundary(1)), end="")
    vertices 3
    edge 1 2
    edge 1 3
    edge 2 3
    >>> serialize_triangulation(simplex_boundary(1), fmt="json")
    '{"vertices": 3, "edges": [[1, 2], [1, 3], [2, 3]]}'
    """
    if fmt == "json":
        key = _PLURALS[T.dimension]
        facets = [list(facet) for facet in T.facets]
        return json.dumps({"vertices": T.num_vertices, key: facets})
    if fmt != "text":
        msg = f"Unknown triangulation format {fmt!r}"
        raise ValueError(msg)
    keyword = KEYWORDS[T.dimension]
    lines = [f"vertices {T.num_vertices}"]
    lines += [f"{keyword} {' '.join(map(str, facet))}" for facet in T.facets]
    return "\n".join(lines) + "\n"


def fixture_hash(T: Triangulation) -> str:
    """SHA-256 of the canonical text document of ``T``."""
    return sha256_text(serialize_triangulation(T))


def _lattice_paths(a: int, b: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Monotone lattice paths from ``(0, 0)`` to ``(a, b)``."""
    for rights in itertools.combinations(range(a + b), a):
        i = j = 0
        path = [(0, 0)]
        for step in range(a + b):
            if step in rights:
                i += 1
            else:
                j += 1
            path.append((i, j))
        yield tuple(path)


def staircase_product(A: Triangulation, B: Triangulation) -> Triangulation:
    """Staircase triangulation of ``|A| x |B|``.

    Vertex ``(i, j)`` becomes ``(i - 1) * N_0(B) + j``, so the lexicographic
    order of pairs is the vertex order and every product cell ``s x t`` splits
    into the simplices of the monotone lattice paths through its vertex grid.

    >>> S2 = simplex_boundary(2)
    >>> staircase_product(S2, S2).count(4)
    96

    Raises:
        TriangulationError: Product dimension exceeds `MAX_DIMENSION`.
    """
    a, b = A.dimension, B.dimension
    if a + b > MAX_DIMENSION:
        msg = f"Product of dimensions {a} and {b} exceeds {MAX_DIMENSION}"
        raise TriangulationError(msg)
    width = B.num_vertices
    paths = list(_lattice_paths(a, b))
    facets = [
        tuple((s[i] - 1) * width + t[j] for i, j in path)
        for s in A.facets
        for t in B.facets
        for path in paths
    ]
    logger.debug(
        "Staircase product: %d cells x %d paths",
        len(facets) // len(paths),
        len(paths),
    )
    return Triangulation(A.num_vertices * width, facets)


def simplex_boundary(n: int) -> Triangulation:
    """Boundary of the ``(n + 1)``-simplex, an ``n``-sphere on ``n + 2`` vertices."""
    return Triangulation(n + 2, itertools.combinations(range(1, n + 3), n + 1))


def renumber(
    T: Triangulation,
    mapping: Mapping[int, int] | Sequence[int],
) -> Triangulation:
    """Relabel vertices by a permutation of ``1 .. N_0``.

    ``mapping`` sends old labels to new ones; a sequence gives the new label of
    vertex ``i + 1`` at position ``i``.

    Raises:
        TriangulationError: ``mapping`` is not a permutation of ``1 .. N_0``.
    """
    if not isinstance(mapping, Mapping):
        mapping = {i + 1: v for i, v in enumerate(mapping)}
    expected = set(range(1, T.num_vertices + 1))
    if set(mapping) != expected or set(mapping.values()) != expected:
        msg = f"Relabeling is not a permutation of 1..{T.num_vertices}"
        raise TriangulationError(msg)
    return Triangulation(T.num_vertices, ([mapping[v] for v in f] for f in T.facets))


def compactify(facets: Iterable[Sequence[int]]) -> Triangulation:
    """Order-preserving relabeling of ``facets`` onto ``1 .. N_0``."""
    return Triangulation.from_facets(facets)


def component_facets(K: SimplicialComplex) -> list[tuple[Simplex, ...]]:
    """Facets of each connected component, components sorted by smallest vertex.

    >>> component_facets(SimplicialComplex([(1, 2), (3, 4), (2, 5)]))
    [((1, 2), (2, 5)), ((3, 4),)]
    """
    classes = _vertex_classes(K.facets)
    owner = {v: i for i, members in enumerate(classes) for v in members}
    grouped: list[list[Simplex]] = [[] for _ in classes]
    for facet in K.facets:
        grouped[owner[facet[0]]].append(facet)
    return [tuple(group) for group in grouped]


def connected_components(T: Triangulation) -> list[Triangulation]:
    """Connected components, compactified, sorted by their smallest vertex."""
    groups = component_facets(T)
    if len(groups) == 1:
        return [T]
    return [compactify(group) for group in groups]
