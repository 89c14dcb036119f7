"""Finite lattices, Wallman spaces of minimal prime filters, and the
reflection between lattices and compact T1 spaces, checked exhaustively on
small cases."""

from .errors import LatdualError
from .order import FiniteLattice, FinitePoset, LatticeMorphism
from .topology import FiniteSpace, PointMap

__version__ = "0.1.0"

__all__ = [
    "FiniteLattice", "FinitePoset", "FiniteSpace", "LatdualError",
    "LatticeMorphism", "PointMap", "__version__",
]
