import math
from dataclasses import dataclass, replace
import sys
from typing import Literal

if sys.version_info >= (3, 11):
    from typing import assert_never
else:
    from typing_extensions import assert_never

from nulltorus.errors import (
    InconsistentRecordError,
    PreconditionError,
    RuleNotCoveredError,
)
from nulltorus.logging import logger
from nulltorus.manifold import (
    FourManifold,
    FramingStatus,
    TorusSite,
    TorusStatus,
    derive_betti,
)

#########
# types #
#########

# a: 1/q on a nullhomologous torus, b: p/q with |p| != 1 on one,
# c: ±1 on a primitive torus whose framing curve is essential
Rule = Literal["a", "b", "c"]


@dataclass(frozen=True)
class TorusSurgerySpec:
    """
    p/q surgery on a square-zero torus T with respect to a loop b: the
    meridian disk boundary is glued to q·[S¹_b] + p·[μ_T].

    The fraction is stored reduced with q > 0, or as (1, 0) for the trivial
    surgery, so "1/n" always has |p| = 1.
    """

    torus_status: TorusStatus
    meridian_generates_summand: bool
    framing_curve_status: FramingStatus
    p: int
    q: int
    lagrangian_framing: bool = False

    def __post_init__(self) -> None:
        if self.torus_status not in (
            "nullhomologous",
            "primitive",
            "essential_nonprimitive",
        ):
            raise ValueError(f"Unknown torus status {self.torus_status!r}.")
        if self.framing_curve_status not in (
            "nullhomologous_in_complement",
            "essential_in_complement",
        ):
            raise ValueError(
                f"Unknown framing curve status "
                f"{self.framing_curve_status!r}."
            )
        if self.p == 0 and self.q == 0:
            raise ValueError("0/0 is not a surgery coefficient.")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(
                f"The coefficient {self.p}/{self.q} is not reduced."
            )
        if self.q < 0 or (self.q == 0 and self.p < 0):
            object.__setattr__(self, "p", -self.p)
            object.__setattr__(self, "q", -self.q)

    @property
    def coefficient(self) -> str:
        return f"{self.p}/{self.q}"


##########
# public #
##########


def nullhomologous_surgery(p: int, q: int) -> TorusSurgerySpec:
    """p/q surgery on a nullhomologous torus along a nullhomologous
    framing curve, the meridian generating a summand."""
    return TorusSurgerySpec(
        torus_status="nullhomologous",
        meridian_generates_summand=True,
        framing_curve_status="nullhomologous_in_complement",
        p=p,
        q=q,
    )


def luttinger_surgery(sign: int = 1) -> TorusSurgerySpec:
    """±1 Luttinger surgery on a Lagrangian torus whose framing curve is
    essential in the complement."""
    if sign not in (1, -1):
        raise ValueError(f"Luttinger surgery is ±1 here, got {sign}.")
    return TorusSurgerySpec(
        torus_status="primitive",
        meridian_generates_summand=False,
        framing_curve_status="essential_in_complement",
        p=1,
        q=sign,
        lagrangian_framing=True,
    )


def classify(spec: TorusSurgerySpec) -> Rule:
    """
    Pick the rule of the table that covers the surgery. Combinations the
    table does not treat raise instead of being extrapolated.
    """
    if (
        spec.torus_status == "nullhomologous"
        and spec.meridian_generates_summand
        and spec.framing_curve_status == "nullhomologous_in_complement"
    ):
        return "a" if abs(spec.p) == 1 else "b"
    if (
        spec.torus_status == "primitive"
        and spec.framing_curve_status == "essential_in_complement"
        and abs(spec.p) == 1
        and spec.q == 1
    ):
        return "c"
    raise RuleNotCoveredError(
        f"No rule covers {spec.coefficient} surgery on a "
        f"{spec.torus_status} torus with framing curve "
        f"{spec.framing_curve_status} (meridian generates summand: "
        f"{spec.meridian_generates_summand})."
    )


def torus_surgery(
    manifold: FourManifold,
    spec: TorusSurgerySpec,
    *,
    site: str | None = None,
    name: str | None = None,
) -> FourManifold:
    """
    Apply the p/q surgery rule table to an invariant record.

    Parameters
    ----------
    manifold : FourManifold
        Closed manifold containing the torus
    spec : TorusSurgerySpec
        Status of the torus, its framing curve and the coefficient
    site : str | None, default=None
        Name of the torus in `manifold.sites`. A recorded site is consumed
        and replaced by the core torus of the surgery
    name : str | None, default=None
        Name of the result, derived from the input when None

    Returns
    -------
    FourManifold
        Record with the same e and sign. Simple connectivity, SW data and
        diffeomorphism tags are dropped, they are never derived
    """
    if not manifold.closed:
        raise PreconditionError(
            f"{manifold.name}: the rule table is for closed manifolds."
        )
    rule = classify(spec)
    current = None if site is None else manifold.site(site)
    if current is not None and (current.status, current.framing) != (
        spec.torus_status,
        spec.framing_curve_status,
    ):
        raise RuleNotCoveredError(
            f"{manifold.name}: {site} is a {current.status} torus with a "
            f"{current.framing} framing curve, the surgery is for a "
            f"{spec.torus_status} torus with a {spec.framing_curve_status} "
            "framing curve."
        )
    others = tuple(s for s in manifold.sites if s.name != site)
    core_name = site or "T"

    keeps_symplectic = (
        manifold.symplectic is not None
        and spec.lagrangian_framing
        and abs(spec.p) == 1
    )
    symplectic = manifold.symplectic if keeps_symplectic else None
    b1 = manifold.b1
    torsion = manifold.h1_torsion
    lattice = None
    sites = others

    match rule:
        case "a":
            lattice = manifold.lattice
            sites = manifold.sites
        case "b":
            if spec.p == 0:
                b1 += 1
                # undoes an earlier ±1 surgery on a primitive torus
                if current is not None and current.reverse_symplectic:
                    symplectic = current.reverse_symplectic
                sites = others + (
                    TorusSite(
                        name=core_name,
                        status="primitive",
                        framing="essential_in_complement",
                        lagrangian=symplectic is not None,
                    ),
                )
            else:
                torsion = torsion + (abs(spec.p),)
        case "c":
            betti = derive_betti(manifold)
            if manifold.b1 < 1 or betti.b_plus < 1:
                raise RuleNotCoveredError(
                    f"{manifold.name}: ±1 surgery on a primitive torus needs "
                    f"b1 >= 1 and b+ >= 1, got b1 = {manifold.b1}, "
                    f"b+ = {betti.b_plus}."
                )
            b1 -= 1
            sites = others + (
                TorusSite(
                    name=core_name,
                    status="nullhomologous",
                    framing="nullhomologous_in_complement",
                    reverse_symplectic=symplectic,
                ),
            )
        case _:
            assert_never(rule)

    logger.debug(
        f"Rule ({rule}) {spec.coefficient} surgery on {manifold.name}"
        f"{'' if site is None else f' at {site}'}."
    )
    try:
        return replace(
            manifold,
            name=name or f"{manifold.name}[{core_name}:{spec.coefficient}]",
            b1=b1,
            h1_torsion=torsion,
            simply_connected=False,
            symplectic=symplectic,
            sw=None,
            lattice=lattice,
            sites=sites,
            diffeo_tag=None,
            notes=(),
        )
    except InconsistentRecordError as exc:
        raise RuleNotCoveredError(
            f"Rule ({rule}) leaves an inconsistent record: {exc}"
        ) from exc


def trivializing_surgery(
    manifold: FourManifold, n: int, site: str
) -> FourManifold:
    """
    1/n surgery along a framing curve with a 0-vanishing cycle gives back
    the same manifold, so the record comes back unchanged, diffeomorphism
    tag included.
    """
    if n == 0:
        raise PreconditionError("1/n surgery needs a nonzero n.")
    torus = manifold.site(site)
    if torus is None:
        raise PreconditionError(f"{manifold.name} has no torus {site!r}.")
    if not torus.vanishing_cycle:
        raise PreconditionError(
            f"The framing curve of {site} in {manifold.name} has no "
            "0-vanishing cycle."
        )
    logger.debug(f"1/{n} surgery at {site} leaves {manifold.name} fixed.")
    return manifold
