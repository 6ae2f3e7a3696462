"""Exception types shared across the package."""

from __future__ import annotations


class GuardExceeded(RuntimeError):
    """A computation refused to run because a size guard was exceeded."""


class UnsupportedInput(ValueError):
    """The input is valid but outside the supported shapes for this operation."""
