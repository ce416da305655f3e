"""Finite loop analysis: Cayley tables, multiplication groups, isotopes, T(1/2)."""

from ._loopforge import *  # noqa: F401,F403
from ._loopforge import __doc__  # noqa: F401

__version__ = "0.1.0"
