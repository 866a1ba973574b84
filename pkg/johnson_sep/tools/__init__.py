"""
Johnson Sep Tools
=================

Exact-arithmetic kernels:
- freegroup: words, automorphisms, Nielsen moves, IA-generators
- nilpotent: Magnus expansions, Johnson depth and tau, unitriangular checks
- intlattice: integer matrices, Smith normal form, orbit spans
- extrep: exterior powers, Hom action, symplectic contraction
- cover: finite regular covers, rho, deck group
- surface: point and curve push formulas
"""

from . import cover, extrep, freegroup, intlattice, nilpotent, surface

__all__ = [
    "cover",
    "extrep",
    "freegroup",
    "intlattice",
    "nilpotent",
    "surface",
]
