"""Periodic colorings of the infinite square grid.

Core objects: `Lattice` (period lattice in Hermite normal form),
`PeriodicColoring` (coloring constant on lattice cosets), quotient
matrices and the equitable check in `perfect`, twin detection and
merging in `twins`, diagonal structure in `diagonals`, symmetry orbits
in `orbits`, and exhaustive search in `search`.
"""

from .coloring import Lattice, PcgParseError, PeriodicColoring, WindowColoring, parse
from .perfect import NotPerfectError, check, quotient
from .twins import merge, twin_pairs

__all__ = [
    "Lattice",
    "NotPerfectError",
    "PcgParseError",
    "PeriodicColoring",
    "WindowColoring",
    "check",
    "merge",
    "parse",
    "quotient",
    "twin_pairs",
]
