from dataclasses import replace

from nulltorus.lattice import HomClass, IntersectionLattice
from nulltorus.seiberg_witten.invariant import SWInvariant

from .manifold import (
    FourManifold,
    HandleCounts,
    SymplecticData,
    blow_up,
    characteristic_square,
)

# Records of the manifolds the construction passes through. Closed records
# carry e, sign and b1; manifolds with boundary carry χ, b1, b2 and a
# handle decomposition.

#################
# with boundary #
#################


def b4() -> FourManifold:
    return FourManifold(
        name="B4",
        euler=1,
        signature=0,
        closed=False,
        simply_connected=True,
        b2=0,
        handles=HandleCounts(1, 0, 0, 0, 0),
    )


def t2xd2() -> FourManifold:
    return FourManifold(
        name="T2xD2",
        euler=0,
        signature=0,
        b1=2,
        closed=False,
        b2=1,
        handles=HandleCounts(1, 2, 1, 0, 0),
    )


def manifold_a() -> FourManifold:
    """B⁴ with a pair of 2-handles attached and a pair carved out."""
    return FourManifold(
        name="A",
        euler=1,
        signature=0,
        b1=2,
        closed=False,
        b2=2,
        handles=HandleCounts(1, 2, 2, 0, 0),
    )


def t0xt0() -> FourManifold:
    """Product of two punctured tori, χ = (−1)·(−1)."""
    return FourManifold(
        name="T0xT0",
        euler=1,
        signature=0,
        b1=4,
        closed=False,
        b2=4,
    )


##########
# closed #
##########


def cp2() -> FourManifold:
    lattice = IntersectionLattice(0)
    return FourManifold(
        name="CP2",
        euler=3,
        signature=1,
        simply_connected=True,
        symplectic=SymplecticData(
            canonical_square=9,
            k_dot_omega_sign="negative",
            canonical_class=lattice.canonical(),
        ),
        # positive scalar curvature
        sw=SWInvariant.empty(),
        lattice=lattice,
        diffeo_tag="standard CP2",
    )


def cp2k(k: int) -> FourManifold:
    """ℂP²#kℂP̄² with its Kähler data and vanishing SW invariant."""
    if k < 0:
        raise ValueError(f"The number of blow-ups must be >= 0, got {k}.")
    manifold = cp2()
    for _ in range(k):
        manifold = blow_up(manifold)
    if k == 0:
        return manifold
    return replace(
        manifold,
        name=f"CP2#{k}CP2bar",
        sw=SWInvariant.empty(),
        diffeo_tag=f"standard CP2#{k}CP2bar",
    )


def sym2(genus: int = 3) -> FourManifold:
    """
    Symmetric square of a genus g surface: χ = (χ(Σ)² + χ(Σ))/2,
    sign = 1 − g, b1 = 2g. K·ω > 0 once g >= 2.
    """
    if genus < 1:
        raise ValueError(f"Sym2 needs genus >= 1, got {genus}.")
    chi_surface = 2 - 2 * genus
    manifold = FourManifold(
        name=f"Sym2(Sigma{genus})",
        euler=(chi_surface**2 + chi_surface) // 2,
        signature=1 - genus,
        b1=2 * genus,
    )
    return replace(
        manifold,
        symplectic=SymplecticData(
            canonical_square=characteristic_square(manifold),
            k_dot_omega_sign="positive" if genus >= 2 else "negative",
        ),
    )


def t4() -> FourManifold:
    return FourManifold(
        name="T4",
        euler=0,
        signature=0,
        b1=4,
        symplectic=SymplecticData(canonical_square=0, k_dot_omega_sign="zero"),
    )


def t2xs2() -> FourManifold:
    return FourManifold(
        name="T2xS2",
        euler=0,
        signature=0,
        b1=2,
        symplectic=SymplecticData(
            canonical_square=0, k_dot_omega_sign="negative"
        ),
    )


def exotic_canonical(k: int) -> HomClass:
    """3h − Σ eᵢ in ⟨1⟩ ⊕ k⟨−1⟩: a class of square 9 − k, used for the
    canonical class of the exotic manifolds homeomorphic to ℂP²#kℂP̄²."""
    return IntersectionLattice(k).anticanonical()
