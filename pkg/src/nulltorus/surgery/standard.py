import sys
from typing import Literal

if sys.version_info >= (3, 11):
    from typing import assert_never
else:
    from typing_extensions import assert_never

from nulltorus.errors import AssemblyError
from nulltorus.logging import logger
from nulltorus.manifold import FourManifold, catalog

#########
# types #
#########

StandardSite = Literal["A_in_T2xS2", "lagrangian_pair_in_T4", "A_standalone"]

##########
# public #
##########


def standard_surgeries(site: StandardSite) -> FourManifold:
    """
    Result of the standard surgeries on the recorded pair of tori:
    the Bing tori of A inside T²×S² give T⁴, the matching Lagrangian pair
    in T⁴ gives T²×S² back, and the Bing tori of A alone give T₀×T₀.
    """
    source, result = standard_pair(site)
    if (source.euler, source.signature) != (result.euler, result.signature):
        raise AssemblyError(
            f"Standard surgery on {source.name} changed (e, sign) from "
            f"({source.euler}, {source.signature}) to "
            f"({result.euler}, {result.signature})."
        )
    logger.debug(f"Standard surgeries: {source.name} -> {result.name}.")
    return result


def standard_pair(site: StandardSite) -> tuple[FourManifold, FourManifold]:
    match site:
        case "A_in_T2xS2":
            return catalog.t2xs2(), catalog.t4()
        case "lagrangian_pair_in_T4":
            return catalog.t4(), catalog.t2xs2()
        case "A_standalone":
            return catalog.manifold_a(), catalog.t0xt0()
        case _:
            assert_never(site)
