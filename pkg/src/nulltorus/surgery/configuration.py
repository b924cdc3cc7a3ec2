import sys
from typing import Literal, NamedTuple

if sys.version_info >= (3, 11):
    from typing import assert_never
else:
    from typing_extensions import assert_never

from nulltorus.errors import (
    InconsistentRecordError,
    PreconditionError,
    StateError,
)
from nulltorus.logging import logger
from nulltorus.manifold import FourManifold

#########
# types #
#########

ConfigurationKind = Literal[
    "single_essential", "bing_pair", "whitehead_double", "lagrangian_pair"
]
Which = Literal["first", "second"]


class TorusConfiguration(NamedTuple):
    """
    A group of tori inside a torus neighbourhood of `ambient`, by the
    names of their sites.
    """

    kind: ConfigurationKind
    ambient: FourManifold
    tori: tuple[str, ...]
    name: str = ""


##########
# public #
##########


def bing_pair(
    ambient: FourManifold, first: str, second: str, *, name: str = ""
) -> TorusConfiguration:
    """Bing double of a torus, both components nullhomologous."""
    for torus in (first, second):
        site = ambient.site(torus)
        if site is None:
            raise InconsistentRecordError(
                f"{ambient.name} has no torus {torus!r}."
            )
        if site.status != "nullhomologous":
            raise InconsistentRecordError(
                f"The Bing torus {torus} of {ambient.name} is {site.status}."
            )
    return TorusConfiguration(
        kind="bing_pair", ambient=ambient, tori=(first, second), name=name
    )


def bing_surgery_step(
    configuration: TorusConfiguration, which: Which, coefficient: int = 1
) -> TorusConfiguration:
    """
    ±1 surgery on one torus of a Bing pair turns the other one into the
    Whitehead double of the torus the pair doubles.
    """
    match configuration.kind:
        case "bing_pair":
            pass
        case "single_essential" | "whitehead_double" | "lagrangian_pair":
            raise StateError(
                f"No surgery step is defined on a {configuration.kind} "
                f"configuration ({configuration.name or 'unnamed'})."
            )
        case _:
            assert_never(configuration.kind)
    if abs(coefficient) != 1:
        raise PreconditionError(
            f"The Bing step needs a ±1 surgery, got {coefficient}."
        )

    first, second = configuration.tori
    match which:
        case "first":
            remaining = second
        case "second":
            remaining = first
        case _:
            assert_never(which)

    logger.debug(
        f"{configuration.name or 'Bing pair'}: {remaining} is now a "
        "Whitehead double."
    )
    return configuration._replace(kind="whitehead_double", tori=(remaining,))
