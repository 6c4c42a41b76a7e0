"""Kazhdan-Lusztig polynomials of 321-hexagon-avoiding permutations."""

from ._klheap import *  # noqa: F401,F403
from ._klheap import Error, ParseError, DomainError, ResourceError, InternalError  # noqa: F401

__version__ = "0.1.0"
