"""Orientation signs for determinant bundles of real Cauchy-Riemann operators.

Combinatorial calculators for the action of real automorphisms on
orientations, with brute-force oracles and a JSON command line.
"""

from .bundles import *  # noqa: F401,F403
from .det_signs import *  # noqa: F401,F403
from .errors import *  # noqa: F401,F403
from .moduli import *  # noqa: F401,F403
from .pin_spin import *  # noqa: F401,F403
from .surface_topology import *  # noqa: F401,F403

__version__ = "0.1.0"
