"""Faithful permutation representations of G/N for nonabelian minimal normal N."""

from ._backend import NAME as backend
from .group import GroupHom, PermGroup
from .perm import Permutation, compose, format_cycles, identity, inverse, parse_cycles

__version__ = "0.1.0"

__all__ = [
    "backend",
    "Permutation",
    "PermGroup",
    "GroupHom",
    "compose",
    "inverse",
    "identity",
    "parse_cycles",
    "format_cycles",
]
