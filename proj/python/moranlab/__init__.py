"""Moran constructions in metric spaces: pressure, axiom checks, probes."""

from ._core import *  # noqa: F401,F403
from ._core import DomainError, InputError, ResourceError, __version__

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
