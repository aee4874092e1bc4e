"""Package enums."""

from __future__ import annotations

import sys

if sys.version_info < (3, 11):
    from enum import Enum

    class StrEnum(str, Enum):
        """StrEnum is a Python `enum.Enum` that inherits from `str`."""

        def __str__(self) -> str:
            return str(self.value)
else:
    from enum import StrEnum

__all__ = [
    "CochainKind",
    "MoveKind",
    "OutputFormat",
    "QuotientConvention",
    "VerifySuite",
]


class CochainKind(StrEnum):
    """Shape of a hexagon cochain."""

    POLYNOMIAL = "polynomial"
    """Arbitrary polynomial in the permitted-coloring coordinates."""

    BILINEAR = "bilinear"
    """Bilinear form, one coloring in the plain slot and one in the primed slot.

    Represented as a polynomial of bidegree (1, 1) in two copies of the
    coordinates.
    """


class MoveKind(StrEnum):
    """Pachner move named by the number of pentachora removed and added."""

    ONE_FIVE = "1-5"
    TWO_FOUR = "2-4"
    THREE_THREE = "3-3"
    FOUR_TWO = "4-2"
    FIVE_ONE = "5-1"

    @classmethod
    def from_size(cls, k: int) -> MoveKind:
        """Move replacing ``k`` pentachora by ``6 - k``."""
        return cls(f"{k}-{6 - k}")

    @property
    def size(self) -> int:
        """Number of pentachora removed."""
        return int(self.value[0])


class OutputFormat(StrEnum):
    """Command line report formats."""

    TEXT = "text"
    """Plain text, laid out for reading next to the published tables."""

    JSON = "json"
    """A single JSON document, see ``hexcol/data/report.schema.json``."""


class QuotientConvention(StrEnum):
    """Which cochains are quotiented out when counting cocycle classes."""

    BOUNDED = "bounded"
    """Cocycles and coboundaries of every degree up to the bound."""

    HOMOGENEOUS = "homogeneous"
    """Only cocycles and coboundaries of exactly the requested degree."""


class VerifySuite(StrEnum):
    """Property suites runnable from ``hexcol verify``."""

    PACHNER = "pachner"
    """Colorings agree across every Pachner move cluster."""

    CHAINMAP = "chainmap"
    """Evaluation of hexagon cochains commutes with the coboundaries."""

    CLASSDEP = "classdep"
    """Invariant polynomials depend only on classes, not representatives."""

    LIMIT = "limit"
    """Constant functionals are limits of pentachoron-dependent ones."""

    COCYCLES = "cocycles"
    """Built-in hexagon cochains are cocycles."""
