"""Combinatorial maps as involution systems: operations, symmetry types, enumeration."""

from ._mapkit import *  # noqa: F401,F403
from ._mapkit import __doc__  # noqa: F401

__version__ = "0.1.0"
