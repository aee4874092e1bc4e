"""Package utils."""

from __future__ import annotations

import hashlib
import logging
from typing import NamedTuple

logger = logging.getLogger("hexcol")

__all__ = [
    "Check",
]


class Check(NamedTuple):
    """Outcome of one named verification step."""

    name: str
    """Short identifier of the check."""

    passed: bool
    """Whether the check succeeded."""

    detail: str = ""
    """Human readable explanation, empty when there is nothing to add."""


def get_version() -> str:
    """Returns installed package version, ``"0+unknown"`` when not installed."""
    try:
        from importlib.metadata import PackageNotFoundError, version
    except ImportError:  # pragma: no cover
        return "0+unknown"
    try:
        return version("hexcol")
    except PackageNotFoundError:
        return "0+unknown"


def sha256_text(text: str) -> str:
    """Hex digest of ``text`` encoded as utf-8.

    >>> sha256_text("")[:12]
    'e3b0c44298fc'
    """
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def first_failure(checks: list[Check]) -> Check | None:
    """Return the first failing check of ``checks``, if any."""
    for check in checks:
        if not check.passed:
            return check
    return None
