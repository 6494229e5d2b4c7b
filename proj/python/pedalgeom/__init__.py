"""Pedal and antipedal triangle constructions."""

from ._core import *  # noqa: F401,F403
from ._core import GeometryError, ParseError, __doc__  # noqa: F401

__version__ = "0.1.0"
