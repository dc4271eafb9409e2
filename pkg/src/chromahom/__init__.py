"""Chromatic graph cohomology over Z[x]/(x^m) with exact integer arithmetic.

The core entry points::

    >>> from chromahom import family, cohomology
    >>> str(cohomology(family("K4"), 3, 1, 5))
    'Z_3^2 + Z_6 + Z^2'
"""

from .complex import cohomology, differential, homology, slice_complex, torsion_h1
from .graphs import SimpleGraph, build_graph, family, stats
from .homology import AbelianGroup, IntMatrix, parse_group, smith_normal_form

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup", "IntMatrix", "SimpleGraph", "build_graph", "cohomology", "differential",
    "family", "homology", "parse_group", "slice_complex", "smith_normal_form", "stats", "torsion_h1",
]
