"""Coupled trust-event network dynamics: simulation, equilibria, stability."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
