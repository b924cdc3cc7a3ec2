import sys
from typing import Literal, Sequence

if sys.version_info >= (3, 11):
    from typing import assert_never
else:
    from typing_extensions import assert_never

from nulltorus.logging import logger
from nulltorus.manifold.manifold import FourManifold, derive_betti

from .invariant import SWInvariant

#########
# types #
#########

SignVerdict = Literal[
    "consistent_with_rational", "exotic_certificate", "inapplicable"
]

##########
# public #
##########


def taubes_nonvanishing(manifold: FourManifold) -> bool:
    """A closed symplectic manifold with b⁺ ≥ 2 has nonzero SW."""
    if manifold.symplectic is None or not manifold.closed:
        return False
    return derive_betti(manifold).b_plus >= 2


def li_liu_sign_check(manifold: FourManifold) -> SignVerdict:
    """
    Every symplectic form on ℂP²#kℂP̄² has K·ω < 0. A symplectic record
    asserted homeomorphic to one (simply connected, b⁺ = 1) with K·ω > 0
    therefore cannot be diffeomorphic to it.
    """
    symplectic = manifold.symplectic
    if (
        symplectic is None
        or not manifold.closed
        or not manifold.simply_connected
        or derive_betti(manifold).b_plus != 1
    ):
        return "inapplicable"

    sign = symplectic.k_dot_omega_sign
    match sign:
        case "positive":
            logger.debug(f"{manifold.name}: K.omega > 0.")
            return "exotic_certificate"
        case "negative":
            return "consistent_with_rational"
        case "zero":
            return "inapplicable"
        case _:
            assert_never(sign)


def pairwise_distinct(family: Sequence[SWInvariant]) -> bool:
    """
    Whether no two invariants agree, even after negating every class of
    one of them.
    """
    seen: set[SWInvariant] = set()
    for sw in family:
        if sw in seen or sw.negate_classes() in seen:
            return False
        seen.add(sw)
    return True
