"""Tests for resource caps."""

from __future__ import annotations

from typing import TYPE_CHECKING

import pytest
from hexcol.config import Caps, active_caps, applied_caps, apply_caps, check_cap
from hexcol.exceptions import ConfigError, ResourceCapError

if TYPE_CHECKING:
    from pytest import MonkeyPatch  # noqa: PT013


def test_caps_defaults() -> None:
    """It returns default values."""
    caps = Caps()
    assert caps.max_field_order == 1024
    assert caps.fixture_dir == ""


def test_caps_from_env(monkeypatch: MonkeyPatch) -> None:
    """It reads values from the environment."""
    monkeypatch.setenv("HEXCOL_MAX_GL_SEARCH", "12")
    monkeypatch.setenv("HEXCOL_FIXTURE_DIR", "/tmp/fixtures")  # noqa: S108
    caps = Caps.from_env()
    assert caps.max_gl_search == 12
    assert caps.fixture_dir == "/tmp/fixtures"  # noqa: S108
    assert active_caps().max_gl_search == 12


def test_caps_from_env_invalid(monkeypatch: MonkeyPatch) -> None:
    """It raises on values of the wrong type."""
    monkeypatch.setenv("HEXCOL_MAX_FIELD_ORDER", "lots")
    with pytest.raises(ConfigError):
        Caps.from_env()


def test_caps_validation() -> None:
    """It rejects unknown options and nonpositive caps."""
    with pytest.raises(ConfigError):
        Caps(max_rows=3)
    with pytest.raises(ConfigError):
        Caps(max_field_order=0)


def test_caps_replace() -> None:
    """It copies with overrides and leaves the original untouched."""
    caps = Caps(max_gl_search=5)
    other = caps.replace(max_field_order=7)
    assert other.max_gl_search == 5
    assert other.max_field_order == 7
    assert caps.max_field_order == 1024


def test_caps_iter_and_repr() -> None:
    """It iterates settings with their values."""
    caps = Caps(max_gl_search=5)
    values = {setting.variable: value for setting, value in caps}
    assert values["HEXCOL_MAX_GL_SEARCH"] == 5
    assert "max_gl_search=5" in repr(caps)


def test_applied_caps_nesting() -> None:
    """It restores the outer caps when a context exits."""
    apply_caps(Caps(max_gl_search=10))
    with applied_caps(Caps(max_gl_search=3)):
        assert active_caps().max_gl_search == 3
        with pytest.raises(ResourceCapError):
            check_cap("max_gl_search", 4)
    assert active_caps().max_gl_search == 10
    check_cap("max_gl_search", 10)
