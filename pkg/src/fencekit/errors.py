"""Exception types and resource ceilings shared across the package."""

import os


class FencekitError(ValueError):
    """Base class for domain errors (bad input, incompatibility, bounds)."""


class IncompatibleError(FencekitError):
    """A linearization or label violates a compatibility condition."""


class ResourceBoundError(FencekitError):
    """An exhaustive computation would exceed its configured ceiling."""


ENV_MAX_MONOMIALS = "FENCEKIT_MAX_MONOMIALS"


def monomial_ceiling(default):
    """Return the ceiling from FENCEKIT_MAX_MONOMIALS, else ``default``."""
    raw = os.environ.get(ENV_MAX_MONOMIALS)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise FencekitError(f"{ENV_MAX_MONOMIALS} must be an integer, got {raw!r}")
    if value < 1:
        raise FencekitError(f"{ENV_MAX_MONOMIALS} must be positive")
    return value
