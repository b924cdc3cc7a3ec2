from .lattice import (
    HomClass,
    IntersectionLattice,
    lattice_of,
    moduli_dimension_bound,
    pairing,
    square,
)
from .search import (
    Strategy,
    essential_torus_obstruction,
    find_isotropic_orthogonal,
    isotropic_classes,
)

__all__ = [
    "HomClass",
    "IntersectionLattice",
    "Strategy",
    "essential_torus_obstruction",
    "find_isotropic_orthogonal",
    "isotropic_classes",
    "lattice_of",
    "moduli_dimension_bound",
    "pairing",
    "square",
]
