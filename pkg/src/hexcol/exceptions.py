"""Package exceptions."""


class HexcolError(Exception):
    """Base exception for ``hexcol`` package errors."""


class FieldError(HexcolError):
    """Invalid finite field parameters or field mismatch between operands."""


class DimensionError(HexcolError):
    """Operands with inconsistent dimensions."""


class MembershipError(HexcolError):
    """A vector expected to lie in a subspace does not."""


class TriangulationError(HexcolError):
    """Invalid simplicial complex or simplex query."""


class MalformedDocumentError(TriangulationError):
    """A triangulation document does not follow the file format."""


class ConfigError(HexcolError):
    """Invalid configuration value."""


class UnknownFixtureError(HexcolError):
    """No fixture is registered under the requested name."""


class UnavailableFixtureError(HexcolError):
    """The fixture is registered but no data was supplied for it."""


class OrientationError(HexcolError):
    """A fundamental cycle does not exist over the requested field."""


class DisconnectedComplexError(HexcolError):
    """Operation requires a connected complex."""


class CocycleError(HexcolError):
    """A cochain expected to be a cocycle is not, or cannot be built."""


class CochainSyntaxError(CocycleError):
    """A cochain literal could not be parsed."""


class MoveError(HexcolError):
    """A Pachner move cannot be applied at the requested place."""


class LimitError(HexcolError):
    """A formal limit is undefined or its data is not generic enough."""


class ResourceCapError(HexcolError):
    """A computation would exceed a configured resource cap."""


class VerificationError(HexcolError):
    """An internal consistency check failed."""


class InputError(HexcolError):
    """Command line input that cannot be read or used."""
