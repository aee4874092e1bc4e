"""Library of bundled and product-generated triangulations."""

from __future__ import annotations

import functools
from importlib import resources
from pathlib import Path
from typing import Callable, NamedTuple

from hexcol.complex import (
    Triangulation,
    parse_triangulation,
    simplex_boundary,
    staircase_product,
)
from hexcol.config import active_caps
from hexcol.exceptions import UnavailableFixtureError, UnknownFixtureError
from hexcol.utils import logger

__all__ = [
    "FixtureInfo",
    "fixture",
    "fixture_info",
    "fixture_names",
]


class FixtureInfo(NamedTuple):
    """Description of a registered fixture."""

    name: str
    """Registry key, e.g. ``"RP2xS2"``."""

    description: str
    """What the fixture triangulates."""

    source: str
    """One of ``"bundled"``, ``"boundary"``, ``"product"`` or ``"external"``."""

    expected_d: int | None
    """Coloring homology dimension over ``F_2`` when the fixture is a 4-manifold."""


_REGISTRY: dict[str, FixtureInfo] = {
    info.name: info
    for info in (
        FixtureInfo("S1", "Three-vertex circle", "bundled", None),
        FixtureInfo("S2", "Boundary of the tetrahedron", "boundary", None),
        FixtureInfo("T2", "Seven-vertex torus", "bundled", None),
        FixtureInfo("RP2", "Six-vertex real projective plane", "bundled", None),
        FixtureInfo("S4", "Boundary of the 5-simplex", "boundary", 0),
        FixtureInfo("CP2", "Nine-vertex complex projective plane", "bundled", 1),
        FixtureInfo("RP4", "Real projective 4-space", "bundled", 2),
        FixtureInfo("S2xS2", "Product of two 2-spheres", "product", 2),
        FixtureInfo("S2xS2tw", "Twisted 2-sphere bundle over S2", "external", 2),
        FixtureInfo("S2xT2", "Product of a 2-sphere and a torus", "product", 4),
        FixtureInfo("RP2xS2", "Product of RP2 and a 2-sphere", "product", 3),
        FixtureInfo("RP2xT2", "Product of RP2 and a torus", "product", 7),
        FixtureInfo("RP2xRP2", "Product of two projective planes", "product", 5),
        FixtureInfo("T4", "Four-torus, product of two tori", "product", None),
    )
}

_FACTORS = {
    "S2xS2": ("S2", "S2"),
    "S2xT2": ("S2", "T2"),
    "RP2xS2": ("RP2", "S2"),
    "RP2xT2": ("RP2", "T2"),
    "RP2xRP2": ("RP2", "RP2"),
    "T4": ("T2", "T2"),
}

_BOUNDARIES: dict[str, Callable[[], Triangulation]] = {
    "S2": functools.partial(simplex_boundary, 2),
    "S4": functools.partial(simplex_boundary, 4),
}


def fixture_names() -> list[str]:
    """Registered fixture names, building blocks first."""
    return list(_REGISTRY)


def fixture_info(name: str) -> FixtureInfo:
    """Registry entry of ``name``.

    Raises:
        UnknownFixtureError: No fixture called ``name``.
    """
    try:
        return _REGISTRY[name]
    except KeyError:
        msg = f"Unknown fixture {name!r}, expected one of {fixture_names()}"
        raise UnknownFixtureError(msg) from None


def _external_document(name: str) -> str | None:
    directory = active_caps().fixture_dir
    if not directory:
        return None
    for suffix in (".txt", ".json"):
        path = Path(directory) / f"{name.lower()}{suffix}"
        if path.is_file():
            logger.debug("Reading fixture %s from '%s'", name, path)
            return path.read_text(encoding="utf-8")
    return None


@functools.lru_cache(maxsize=None)
def _builtin(name: str) -> Triangulation:
    info = _REGISTRY[name]
    if info.source == "bundled":
        data = resources.files("hexcol") / "data" / f"{name.lower()}.txt"
        return parse_triangulation(data.read_text(encoding="utf-8"))
    if info.source == "boundary":
        return _BOUNDARIES[name]()
    if info.source == "product":
        first, second = _FACTORS[name]
        return staircase_product(_builtin(first), _builtin(second))
    msg = (
        f"Fixture {name!r} ships without data; put '{name.lower()}.txt' in the "
        f"directory named by HEXCOL_FIXTURE_DIR"
    )
    raise UnavailableFixtureError(msg)


def fixture(name: str) -> Triangulation:
    """Load the triangulation registered as ``name``.

    A file ``<name>.txt`` or ``<name>.json`` (lower case) in the configured
    ``fixture_dir`` takes precedence over the bundled data.

    >>> fixture("S4").f_vector
    (6, 15, 20, 15, 6)
    >>> fixture("CP2").count(4)
    36

    Raises:
        UnknownFixtureError: No fixture called ``name``.
        UnavailableFixtureError: The fixture has no data.
    """
    fixture_info(name)
    document = _external_document(name)
    if document is not None:
        triangulation = parse_triangulation(document)
    else:
        triangulation = _builtin(name)
    logger.info("Loaded fixture %s: %r", name, triangulation)
    return triangulation
