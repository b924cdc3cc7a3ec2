from .manifold import (
    Betti,
    FourManifold,
    FramingStatus,
    HandleCounts,
    ManifoldInvariants,
    Sign,
    SymplecticData,
    TorusSite,
    TorusStatus,
    b_plus,
    blow_up,
    characteristic_square,
    derive_betti,
    euler_from_handles,
    invariants,
)

from . import catalog  # isort: skip

__all__ = [
    "Betti",
    "FourManifold",
    "FramingStatus",
    "HandleCounts",
    "ManifoldInvariants",
    "Sign",
    "SymplecticData",
    "TorusSite",
    "TorusStatus",
    "b_plus",
    "blow_up",
    "catalog",
    "characteristic_square",
    "derive_betti",
    "euler_from_handles",
    "invariants",
]
