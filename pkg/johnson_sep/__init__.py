"""
Johnson Sep - Homological Representations vs. the Johnson Filtration
====================================================================

Exact-arithmetic toolkit for free-group automorphisms, finite covers of the
wedge of circles, Johnson depth, congruence depth and orbit-span lattices.

Usage:
    from johnson_sep.tools import freegroup, cover
    from johnson_sep.config import get_settings

    # CLI
    johnson-sep verify-claim1 --rank 3 --mod 2 --exp 2
"""

__version__ = "0.1.0"
