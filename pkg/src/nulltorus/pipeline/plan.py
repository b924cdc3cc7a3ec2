from dataclasses import dataclass, replace

from nulltorus.errors import (
    ChainError,
    InconsistentRecordError,
    WorkbenchError,
)
from nulltorus.logging import logger
from nulltorus.manifold import FourManifold, TorusSite, catalog, derive_betti
from nulltorus.surgery import (
    TorusSurgerySpec,
    luttinger_surgery,
    torus_surgery,
)

#########
# types #
#########

PIN_CITATION = "pinwheel construction of the rational surface"


@dataclass(frozen=True)
class ReverseEngineeringPlan:
    """
    Target R, symplectic model M with e(M) = e(R) and sign(M) = sign(R),
    and one Luttinger surgery per unit of b1(M).

    `tori` names the model's Lagrangian tori in surgery order. The claims
    that their framing curves span H1(M; R) and that the result is simply
    connected are declarations carried with the plan, `citation` names
    where they come from.
    """

    target: FourManifold
    model: FourManifold
    lagrangian_tori: tuple[TorusSurgerySpec, ...]
    family_range: tuple[int, ...] = ()
    tori: tuple[str, ...] = ()
    spans_h1: bool = True
    citation: str = PIN_CITATION

    def __post_init__(self) -> None:
        if not self.target.simply_connected:
            raise InconsistentRecordError(
                f"The target {self.target.name} must be simply connected."
            )
        if self.tori and len(self.tori) != len(self.lagrangian_tori):
            raise InconsistentRecordError(
                f"{len(self.tori)} torus names for "
                f"{len(self.lagrangian_tori)} surgeries."
            )

    def torus_name(self, step: int) -> str:
        """Name of the torus surgered at `step`, counted from 1."""
        return self.tori[step - 1] if self.tori else f"L{step}"


##########
# public #
##########


def check_model(plan: ReverseEngineeringPlan) -> bool:
    model, target = plan.model, plan.target
    return (
        model.euler == target.euler
        and model.signature == target.signature
        and len(plan.lagrangian_tori) == model.b1
        and all(spec.lagrangian_framing for spec in plan.lagrangian_tori)
        and plan.spans_h1
    )


def run_chain(plan: ReverseEngineeringPlan) -> list[FourManifold]:
    """
    Luttinger surgeries on the model one torus at a time. Each step lowers
    b1 and b⁺ by one, so the last manifold X has b1 = 0 and b⁺(X) = b⁺(R).

    Returns
    -------
    list[FourManifold]
        M = M₀, M₁, …, M_n = X. X carries the target's lattice and the
        simple connectivity assertion of the plan
    """
    if not check_model(plan):
        raise ChainError(
            0,
            f"{plan.model.name} is not a model for {plan.target.name}: "
            "e, sign or the number of Lagrangian tori do not match.",
        )
    start = derive_betti(plan.model)
    chain = [plan.model]
    steps = len(plan.lagrangian_tori)

    for i, spec in enumerate(plan.lagrangian_tori, start=1):
        try:
            manifold = torus_surgery(
                chain[-1],
                spec,
                site=plan.torus_name(i),
                name="X" if i == steps else f"M{i}",
            )
        except WorkbenchError as exc:
            raise ChainError(i, str(exc)) from exc
        betti = derive_betti(manifold)
        if (manifold.b1, betti.b_plus) != (
            plan.model.b1 - i,
            start.b_plus - i,
        ):
            raise ChainError(
                i,
                f"(b1, b+) = ({manifold.b1}, {betti.b_plus}), expected "
                f"({plan.model.b1 - i}, {start.b_plus - i}).",
            )
        chain.append(manifold)

    if steps > 0:
        chain[-1] = _assert_target_type(chain[-1], plan, steps)

    logger.info(
        f"Luttinger chain {plan.model.name} -> {chain[-1].name}: (b1, b+) = "
        + " -> ".join(
            f"({m.b1}, {derive_betti(m).b_plus})" for m in chain
        )
    )
    return chain


def sym2_model(genus: int = 3) -> FourManifold:
    """Sym²(Σ_g) with its 2g disjoint Lagrangian tori."""
    return replace(
        catalog.sym2(genus),
        sites=tuple(
            TorusSite(
                name=f"L{i}",
                status="primitive",
                framing="essential_in_complement",
                lagrangian=True,
            )
            for i in range(1, 2 * genus + 1)
        ),
    )


def sym2_plan(
    family_range: tuple[int, ...] = tuple(range(1, 11)),
) -> ReverseEngineeringPlan:
    """Sym²(Σ₃) as the model for ℂP²#3ℂP̄²."""
    model = sym2_model(3)
    return ReverseEngineeringPlan(
        target=catalog.cp2k(3),
        model=model,
        lagrangian_tori=tuple(luttinger_surgery(1) for _ in model.sites),
        family_range=family_range,
        tori=tuple(site.name for site in model.sites),
    )


###########
# private #
###########


def _assert_target_type(
    x: FourManifold, plan: ReverseEngineeringPlan, steps: int
) -> FourManifold:
    target = plan.target
    if (x.euler, x.signature, x.b1, tuple(sorted(x.h1_torsion))) != (
        target.euler,
        target.signature,
        target.b1,
        tuple(sorted(target.h1_torsion)),
    ):
        raise ChainError(
            steps,
            f"{x.name} does not have the homology of {target.name}.",
        )
    try:
        return replace(
            x,
            simply_connected=True,
            lattice=target.lattice,
            notes=(
                "simply connected: asserted per citation "
                f"({plan.citation})",
            ),
        )
    except InconsistentRecordError as exc:
        raise ChainError(steps, str(exc)) from exc
