from dataclasses import replace
from typing import NamedTuple

from nulltorus import config
from nulltorus.errors import (
    AssemblyError,
    CannotCertifyError,
    InconsistentRecordError,
    NotCloseableError,
    PreconditionError,
    ScheduleError,
    UnsupportedArityError,
)
from nulltorus.logging import logger
from nulltorus.manifold import (
    FourManifold,
    SymplecticData,
    TorusSite,
    catalog,
    characteristic_square,
    derive_betti,
    invariants,
)
from nulltorus.pinwheel import (
    PinwheelDescription,
    assemble,
    blow_up_component,
    cp2_pinwheel,
    trade_around,
)
from nulltorus.seiberg_witten import (
    SignVerdict,
    li_liu_sign_check,
    mms_combine,
    pairwise_distinct,
    single_term_reduction,
    taubes_nonvanishing,
)
from nulltorus.surgery import (
    ConfigurationKind,
    TorusConfiguration,
    bing_pair,
    bing_surgery_step,
    luttinger_surgery,
    nullhomologous_surgery,
    standard_surgeries,
    torus_surgery,
    trivializing_surgery,
)

from .family import (
    FamilyRow,
    FamilyTable,
    GluingData,
    canonical_gluing_data,
    shift_family,
)
from .plan import ReverseEngineeringPlan, run_chain, sym2_plan

#########
# types #
#########

N_COMPONENTS = 3


class ConstructionStage(NamedTuple):
    name: str
    manifold: FourManifold
    pinwheel: PinwheelDescription | None = None


class ConstructionReport(NamedTuple):
    """
    Everything the six-torus construction produced: the stages it went
    through, ℂP²#3ℂP̄² with its six Bing tori, Q with the corresponding
    Lagrangian tori, the Luttinger chain down to X, and the torus
    configurations of each component.
    """

    stages: tuple[ConstructionStage, ...]
    rational: FourManifold
    q: FourManifold
    x: FourManifold
    plan: ReverseEngineeringPlan
    chain: tuple[FourManifold, ...]
    bing_pairs: tuple[TorusConfiguration, ...]
    lagrangian_pairs: tuple[TorusConfiguration, ...]


class ReductionStep(NamedTuple):
    index: int
    torus: str
    configuration: str
    before: ConfigurationKind
    # None once both tori of the configuration are surgered
    after: ConfigurationKind | None
    manifold: FourManifold


class ReductionLedger(NamedTuple):
    steps: tuple[ReductionStep, ...]
    manifold: FourManifold
    remaining_torus: str
    configuration: TorusConfiguration


class RunResult(NamedTuple):
    report: ConstructionReport
    ledger: ReductionLedger
    family: FamilyTable
    verdict: SignVerdict


def torus_name(torus: int, component: int) -> str:
    """T_(torus),component, the torus-th Bing torus of component C_j."""
    return f"T_({torus}),{component}"


# both tori of B_{T,2}, then of B_{T,1}, then one torus of B_{T,0}
REDUCTION_SCHEDULE: tuple[str, ...] = (
    torus_name(1, 2),
    torus_name(2, 2),
    torus_name(1, 1),
    torus_name(2, 1),
    torus_name(1, 0),
)
# the torus left over by the reduction is surgered last
LUTTINGER_ORDER: tuple[str, ...] = REDUCTION_SCHEDULE + (torus_name(2, 0),)

##########
# public #
##########


def six_tori_construction(
    family_range: tuple[int, ...] | None = None,
) -> ConstructionReport:
    """
    Build ℂP²#3ℂP̄² as a pinwheel of three copies of A#ℂP̄², turn each A
    into T₀×T₀ by standard surgeries on its Bing tori to get Q, then kill
    b1(Q) = 6 with Luttinger surgeries on the six resulting Lagrangian
    tori to get X.
    """
    if family_range is None:
        family_range = tuple(range(1, config.FAMILY_SIZE + 1))
    try:
        stages, rational, q = _build_stages()
    except (
        InconsistentRecordError,
        NotCloseableError,
        UnsupportedArityError,
    ) as exc:
        raise AssemblyError(str(exc)) from exc

    plan = ReverseEngineeringPlan(
        target=catalog.cp2k(3),
        model=q,
        lagrangian_tori=tuple(luttinger_surgery(1) for _ in LUTTINGER_ORDER),
        family_range=family_range,
        tori=LUTTINGER_ORDER,
    )
    chain = run_chain(plan)
    x = chain[-1]
    stages = stages + (ConstructionStage("X", x),)
    logger.info(
        f"X: e = {x.euler}, sign = {x.signature}, b1 = {x.b1}, "
        f"b+ = {derive_betti(x).b_plus}, K.omega "
        f"{x.symplectic.k_dot_omega_sign if x.symplectic else 'undefined'}."
    )

    return ConstructionReport(
        stages=stages,
        rational=rational,
        q=q,
        x=x,
        plan=plan,
        chain=tuple(chain),
        bing_pairs=tuple(
            bing_pair(
                rational,
                torus_name(1, j),
                torus_name(2, j),
                name=f"B_T,{j}",
            )
            for j in range(N_COMPONENTS)
        ),
        lagrangian_pairs=tuple(
            TorusConfiguration(
                kind="lagrangian_pair",
                ambient=q,
                tori=(torus_name(1, j), torus_name(2, j)),
                name=f"L_{j}",
            )
            for j in range(N_COMPONENTS)
        ),
    )


def reduce_to_one_torus(
    report: ConstructionReport,
    schedule: tuple[str, ...] = REDUCTION_SCHEDULE,
    n: int = 1,
) -> ReductionLedger:
    """
    Replay the trivial surgeries: 1/n surgery on a torus whose framing
    curve has a 0-vanishing cycle leaves ℂP²#3ℂP̄² unchanged, so after the
    schedule one torus of the six is left, a Whitehead double.
    """
    manifold = report.rational
    reference = (invariants(manifold), manifold.diffeo_tag)
    configurations = {c.name: c for c in report.bing_pairs}
    steps = []

    for index, torus in enumerate(schedule, start=1):
        configuration = _configuration_of(configurations, torus, index)
        try:
            result = trivializing_surgery(manifold, n, torus)
        except PreconditionError as exc:
            raise ScheduleError(f"Step {index} ({torus}): {exc}") from exc
        if (invariants(result), result.diffeo_tag) != reference:
            raise ScheduleError(
                f"Step {index} ({torus}) left {result.name} changed."
            )
        manifold = replace(
            result, sites=tuple(s for s in result.sites if s.name != torus)
        )

        before = configuration.kind
        after: ConfigurationKind | None
        if before == "bing_pair":
            which = "first" if configuration.tori[0] == torus else "second"
            configurations[configuration.name] = bing_surgery_step(
                configuration, which
            )
            after = "whitehead_double"
        elif before == "whitehead_double":
            del configurations[configuration.name]
            after = None
        else:
            raise ScheduleError(
                f"Step {index} ({torus}): no reduction on a {before} "
                "configuration."
            )
        steps.append(
            ReductionStep(
                index=index,
                torus=torus,
                configuration=configuration.name,
                before=before,
                after=after,
                manifold=manifold,
            )
        )
        logger.debug(
            f"Step {index}: 1/{n} surgery on {torus} ({configuration.name} "
            f"{before} -> {after or 'done'}), still {manifold.name}."
        )

    remaining = [site.name for site in manifold.sites]
    if len(remaining) != 1:
        raise ScheduleError(
            f"{len(remaining)} tori remain after the schedule: {remaining}."
        )
    configuration = _configuration_of(
        configurations, remaining[0], len(schedule)
    )
    logger.info(
        f"{len(steps)} trivial surgeries: still {manifold.name}, "
        f"{remaining[0]} remains as a {configuration.kind}."
    )
    return ReductionLedger(
        steps=tuple(steps),
        manifold=manifold,
        remaining_torus=remaining[0],
        configuration=configuration,
    )


def single_torus_family(
    report: ConstructionReport,
    ledger: ReductionLedger,
    gluing: GluingData,
    family_range: tuple[int, ...] | None = None,
) -> FamilyTable:
    """
    1/n surgeries on the one torus left in ℂP²#3ℂP̄² by the reduction.

    Surgery coefficients are read in the framing of ℂP²#3ℂP̄², where 1/n
    on the remaining torus is 1/(n − 1) on the same torus of X: n = 1
    gives X back and n = 0 is ℂP²#3ℂP̄² itself. Rows are indexed that way,
    so `shift_family(table, -1)` lines them up with `build_family` on X.

    Parameters
    ----------
    report : ConstructionReport
        Construction the ledger was reduced from. X certifies SW(X₀)
    ledger : ReductionLedger
        Reduction holding ℂP²#3ℂP̄² and its remaining torus
    gluing : GluingData
        SW(X), SW(X₀), T₀ and the class correspondence
    family_range : tuple[int, ...] | None, default=None
        Coefficients n in ℂP²#3ℂP̄², the plan's family range shifted by
        one when None

    Returns
    -------
    FamilyTable
        One row per n
    """
    rational, site = ledger.manifold, ledger.remaining_torus
    if rational.site(site) is None or report.x.site(site) is None:
        raise ScheduleError(
            f"{site} is not a torus of both {rational.name} and "
            f"{report.x.name}."
        )
    if family_range is None:
        family_range = tuple(n + 1 for n in report.plan.family_range)

    x0 = torus_surgery(
        report.x, nullhomologous_surgery(0, 1), site=site, name="X0"
    )
    if not taubes_nonvanishing(x0):
        raise CannotCertifyError(
            f"No certificate that SW({x0.name}) is nonzero."
        )
    single_term = single_term_reduction(
        gluing.sw_x0, gluing.t0, gluing.dual_exists, gluing.corr
    )

    expected = invariants(rational)._replace(k_dot_omega_sign=None)
    rows = []
    for n in family_range:
        member = (
            rational
            if n == 0
            else torus_surgery(
                rational,
                nullhomologous_surgery(1, n),
                site=site,
                name=f"{rational.name}[{site}:1/{n}]",
            )
        )
        member = replace(
            member,
            simply_connected=report.x.simply_connected,
            sw=mms_combine(
                gluing.sw_x,
                gluing.sw_x0,
                gluing.t0,
                n - 1,
                gluing.corr,
                single_term=single_term,
            ),
            notes=report.x.notes,
        )
        got = invariants(member)._replace(k_dot_omega_sign=None)
        if got != expected:
            raise AssemblyError(
                f"{member.name} has invariants {got}, {rational.name} has "
                f"{expected}."
            )
        rows.append(FamilyRow(n=n, manifold=member, sw=member.sw))

    distinct = pairwise_distinct([row.sw for row in rows])
    logger.info(
        f"Family of {len(rows)} manifolds from {rational.name} at {site}: "
        f"SW {'pairwise distinct' if distinct else 'NOT pairwise distinct'}."
    )
    return FamilyTable(
        rows=tuple(rows), distinct=distinct, single_term=single_term
    )


def run_cp2k3(
    family_range: tuple[int, ...] | None = None, m: int = 1
) -> RunResult:
    """
    The whole construction for ℂP²#3ℂP̄², every check raising on failure.
    """
    report = six_tori_construction(family_range)
    ledger = reduce_to_one_torus(report)
    # back to the coefficients of X
    family = shift_family(
        single_torus_family(report, ledger, canonical_gluing_data(m)), -1
    )

    model_x = run_chain(sym2_plan(report.plan.family_range))[-1]
    if invariants(model_x) != invariants(report.x):
        raise AssemblyError(
            f"X from the pinwheel {invariants(report.x)} differs from X "
            f"from Sym2 {invariants(model_x)}."
        )
    verdict = li_liu_sign_check(report.x)
    if verdict != "exotic_certificate":
        raise AssemblyError(f"X: sign check gave {verdict}.")
    rational_verdict = li_liu_sign_check(catalog.cp2k(3))
    if rational_verdict != "consistent_with_rational":
        raise AssemblyError(
            f"CP2#3CP2bar: sign check gave {rational_verdict}."
        )
    if not family.distinct:
        raise AssemblyError("The family has repeated SW invariants.")
    return RunResult(
        report=report, ledger=ledger, family=family, verdict=verdict
    )


###########
# private #
###########


def _build_stages() -> (
    tuple[tuple[ConstructionStage, ...], FourManifold, FourManifold]
):
    pinwheel = cp2_pinwheel()
    cp2 = assemble(pinwheel, signature=1, name="CP2", simply_connected=True)
    _expect_same(cp2, catalog.cp2())

    traded = trade_around(pinwheel)
    a_handles = catalog.manifold_a().handles
    for component in traded.components:
        if component.handles != a_handles:
            raise AssemblyError(
                f"Traded component {component.name} has handles "
                f"{component.handles}, A has {a_handles}."
            )
    traded_cp2 = assemble(
        traded, signature=1, name="CP2 (traded)", simply_connected=True
    )
    _expect_same(traded_cp2, catalog.cp2())

    blown = replace(
        traded,
        components=tuple(blow_up_component(c) for c in traded.components),
    )
    assembled = assemble(
        blown, signature=-2, name="CP2#3CP2bar", simply_connected=True
    )
    rational = catalog.cp2k(3)
    _expect_same(assembled, rational)
    rational = replace(rational, sites=_bing_tori())
    logger.info(
        f"{rational.name} as a pinwheel of three copies of A#CP2bar: "
        f"e = {assembled.euler}."
    )

    t0xt0 = standard_surgeries("A_standalone")
    q_pinwheel = replace(
        blown,
        components=tuple(
            replace(
                c,
                name=f"{t0xt0.name}#CP2bar[{j}]",
                euler=t0xt0.euler + 1,
                handles=None,
            )
            for j, c in enumerate(blown.components)
        ),
    )
    q = assemble(q_pinwheel, signature=-2, b1=2 * N_COMPONENTS, name="Q")
    betti = derive_betti(q)
    if betti.b_plus != 7:
        raise AssemblyError(f"Q has b+ = {betti.b_plus}, expected 7.")
    # K.omega > 0 as for the minimal model Sym2(Sigma3)
    q = replace(
        q,
        symplectic=SymplecticData(
            canonical_square=characteristic_square(q),
            k_dot_omega_sign="positive",
        ),
        sites=_lagrangian_tori(),
    )
    logger.info(
        f"Q: e = {q.euler}, sign = {q.signature}, b1 = {q.b1}, "
        f"b+ = {betti.b_plus}, K^2 = {characteristic_square(q)}."
    )

    stages = (
        ConstructionStage("CP2", cp2, pinwheel),
        ConstructionStage("CP2 traded", traded_cp2, traded),
        ConstructionStage("CP2#3CP2bar", rational, blown),
        ConstructionStage("Q", q, q_pinwheel),
    )
    return stages, rational, q


def _bing_tori() -> tuple[TorusSite, ...]:
    # only the torus surgered last lacks a 0-vanishing cycle
    return tuple(
        TorusSite(
            name=name,
            status="nullhomologous",
            framing="nullhomologous_in_complement",
            vanishing_cycle=name != LUTTINGER_ORDER[-1],
        )
        for name in LUTTINGER_ORDER
    )


def _lagrangian_tori() -> tuple[TorusSite, ...]:
    return tuple(
        TorusSite(
            name=name,
            status="primitive",
            framing="essential_in_complement",
            lagrangian=True,
        )
        for name in LUTTINGER_ORDER
    )


def _expect_same(built: FourManifold, reference: FourManifold) -> None:
    got = invariants(built)._replace(k_dot_omega_sign=None)
    expected = invariants(reference)._replace(k_dot_omega_sign=None)
    if got != expected:
        raise AssemblyError(
            f"{built.name} assembled with {got}, {reference.name} has "
            f"{expected}."
        )


def _configuration_of(
    configurations: dict[str, TorusConfiguration], torus: str, index: int
) -> TorusConfiguration:
    for configuration in configurations.values():
        if torus in configuration.tori:
            return configuration
    raise ScheduleError(
        f"Step {index}: {torus} is not in any remaining configuration."
    )
