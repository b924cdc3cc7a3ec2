import math

from nulltorus.errors import NonIntegralGenusError, PreconditionError
from nulltorus.lattice import HomClass, IntersectionLattice, pairing, square


def adjunction_min_genus(k: HomClass, s: HomClass) -> int:
    """
    Least g with 2g − 2 ≥ s² + |k·s|, the genus bound for a surface in
    the class s when k is a basic class.
    """
    s_square = square(s)
    if s_square < 0:
        raise PreconditionError(
            f"The adjunction bound needs s^2 >= 0, got {s_square}."
        )
    return max(0, math.ceil((s_square + abs(pairing(k, s)) + 2) / 2))


def symplectic_genus(s: HomClass, canonical: HomClass) -> int:
    """
    Genus of a symplectic surface in the class s from the adjunction
    formula 2g − 2 = s² + K·s.
    """
    total = square(s) + pairing(canonical, s)
    if total % 2 != 0:
        raise NonIntegralGenusError(
            f"s^2 + K.s = {total} is odd, no surface has this genus."
        )
    return total // 2 + 1


def canonical_genus(k: int) -> int:
    """
    Genus of a symplectic surface representing the canonical class of a
    manifold homeomorphic to ℂP²#kℂP̄² with K = 3h − Σ eᵢ, i.e. K² + 1.
    """
    canonical = IntersectionLattice(k).anticanonical()
    return symplectic_genus(canonical, canonical)
