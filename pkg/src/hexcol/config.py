"""Resource caps and configuration."""

from __future__ import annotations

import os
from contextlib import contextmanager
from typing import TYPE_CHECKING, Generic, Iterator, TypeVar, overload

from hexcol.exceptions import ConfigError, ResourceCapError
from hexcol.utils import logger

if TYPE_CHECKING:
    from typing_extensions import Self

__all__ = [
    "CapSetting",
    "CapField",
    "Options",
    "Caps",
    "active_caps",
    "apply_caps",
    "applied_caps",
    "reset_caps",
    "check_cap",
]

T = TypeVar("T", int, str)


class CapSetting(Generic[T]):
    """Wrapper of a ``HEXCOL_*`` environment variable."""

    def __init__(self, variable: str, *, type_: type[T], default: T) -> None:
        self._variable = variable
        self._type: type[T] = type_
        self._default: T = default

    def __repr__(self) -> str:  # pragma: no cover
        return f"{self.__class__.__name__}(variable={self._variable!r})"

    @property
    def variable(self) -> str:
        """Environment variable name."""
        return self._variable

    @property
    def default(self) -> T:
        """Default value."""
        return self._default

    def get(self) -> T | None:
        """Get value from environment, ``None`` if the variable is unset.

        Raises:
            ConfigError: Value can't be converted to the setting type.
        """
        raw = os.environ.get(self._variable)
        if raw is None or raw == "":
            return None
        try:
            return self._type(raw)
        except ValueError as exception:
            msg = f"Invalid value for {self._variable}: {raw!r}"
            raise ConfigError(msg) from exception

    def validate(self, value: T) -> T:
        """Return ``value`` if acceptable for this setting.

        Raises:
            ConfigError: Numeric caps must be positive.
        """
        if isinstance(value, int) and value <= 0:
            msg = f"{self._variable} must be positive, got {value}"
            raise ConfigError(msg)
        return value


class CapField(Generic[T]):
    """Access a value for a `CapSetting` on a class like a python `property`.

    Example::

        class MyCaps(Options):
            max_rows = CapField("HEXCOL_MAX_ROWS", type=int, default=100)

        caps = MyCaps(max_rows=10)
    """

    def __init__(
        self,
        variable: str,
        *,
        type: type[T],  # noqa: A002
        default: T,
    ) -> None:
        self.setting: CapSetting[T] = CapSetting(variable, type_=type, default=default)
        self.name = ""

    def __set_name__(self, owner: type[object], name: str) -> None:
        self.name = name

    @overload
    def __get__(self, obj: None, objtype: None) -> CapField[T]: ...

    @overload
    def __get__(self, obj: object, objtype: type[object]) -> T: ...

    def __get__(
        self,
        obj: object | None,
        objtype: type[object] | None = None,
    ) -> CapField[T] | T:
        if obj is None:  # pragma: no cover
            return self
        if self.name in obj.__dict__:
            return obj.__dict__[self.name]  # type: ignore[no-any-return]
        return self.setting.default

    def __set__(self, obj: object, value: T) -> None:
        obj.__dict__[self.name] = self.setting.validate(value)


class Options:
    """Base class for declaring a collection of `CapField`."""

    def __init__(self, **kwargs: object) -> None:
        for key, value in kwargs.items():
            if not isinstance(getattr(type(self), key, None), CapField):
                msg = f"Unknown option: {key!r}"
                raise ConfigError(msg)
            setattr(self, key, value)

    @classmethod
    def from_env(cls) -> Self:
        """Initialize a new instance from environment variables."""
        self = cls()
        for descriptor in self._descriptors():
            value = descriptor.setting.get()
            if value is None:
                continue
            descriptor.__set__(self, value)
        return self

    @classmethod
    def _descriptors(cls) -> Iterator[CapField]:
        for klass in reversed(cls.__mro__):
            for descriptor in vars(klass).values():
                if isinstance(descriptor, CapField):
                    yield descriptor

    def __iter__(self) -> Iterator[tuple[CapSetting, object]]:
        for descriptor in self._descriptors():
            yield (descriptor.setting, descriptor.__get__(self, type(self)))

    def __repr__(self) -> str:
        values = ", ".join(
            f"{descriptor.name}={descriptor.__get__(self, type(self))!r}"
            for descriptor in self._descriptors()
        )
        return f"{self.__class__.__name__}({values})"

    def replace(self, **kwargs: object) -> Self:
        """Return a copy with ``kwargs`` overriding current values."""
        new = type(self)()
        new.__dict__.update(self.__dict__)
        for key, value in kwargs.items():
            setattr(new, key, value)
        return new


class Caps(Options):
    """Resource caps guarding the exhaustive computations."""

    max_enumeration_points = CapField(
        "HEXCOL_MAX_ENUMERATION_POINTS",
        type=int,
        default=2**20,
    )
    """Largest number of argument tuples a value distribution may enumerate."""

    max_monomial_columns = CapField(
        "HEXCOL_MAX_MONOMIAL_COLUMNS",
        type=int,
        default=200_000,
    )
    """Largest monomial space assembled by the hexagon cocycle search."""

    max_field_order = CapField("HEXCOL_MAX_FIELD_ORDER", type=int, default=1024)
    """Largest extension field built from arithmetic tables."""

    max_gl_search = CapField("HEXCOL_MAX_GL_SEARCH", type=int, default=2**16)
    """Largest number of invertible matrices tried by a linear-equivalence search."""

    fixture_dir = CapField("HEXCOL_FIXTURE_DIR", type=str, default="")
    """Directory searched for fixture data before the bundled files."""


_applied: list[Caps] = []


def active_caps() -> Caps:
    """Caps currently in force: the innermost applied caps, else the environment."""
    if _applied:
        return _applied[-1]
    return Caps.from_env()


def apply_caps(caps: Caps) -> None:
    """Make ``caps`` the caps in force outside of any `applied_caps` context."""
    logger.debug("Applying caps: %r", caps)
    if _applied:
        _applied[0] = caps
    else:
        _applied.append(caps)


@contextmanager
def applied_caps(caps: Caps) -> Iterator[Caps]:
    """Apply ``caps`` during context."""
    _applied.append(caps)
    try:
        yield caps
    finally:
        _applied.pop()


def check_cap(name: str, requested: int) -> None:
    """Raise if ``requested`` exceeds the active cap called ``name``.

    Raises:
        ResourceCapError: ``requested`` is above the cap.
    """
    cap = getattr(active_caps(), name)
    if requested > cap:
        msg = f"{name} exceeded: {requested} > {cap}"
        raise ResourceCapError(msg)


def reset_caps() -> None:
    """Forget applied caps, environment variables are read again."""
    _applied.clear()
