from dataclasses import replace
from typing import NamedTuple

from nulltorus.errors import AssemblyError, CannotCertifyError
from nulltorus.logging import logger
from nulltorus.manifold import FourManifold, invariants
from nulltorus.seiberg_witten import (
    ClassCorrespondence,
    ClassKey,
    SWInvariant,
    mms_combine,
    pairwise_distinct,
    single_term_reduction,
    symbol,
    taubes_nonvanishing,
)
from nulltorus.surgery import nullhomologous_surgery, torus_surgery

from .plan import ReverseEngineeringPlan

#########
# types #
#########


class GluingData(NamedTuple):
    """Seiberg–Witten input of the gluing formula for X, X₀ and T₀."""

    sw_x: SWInvariant
    sw_x0: SWInvariant
    t0: ClassKey
    corr: ClassCorrespondence = ClassCorrespondence()
    dual_exists: bool = False


class FamilyRow(NamedTuple):
    n: int
    manifold: FourManifold
    sw: SWInvariant


class FamilyTable(NamedTuple):
    rows: tuple[FamilyRow, ...]
    distinct: bool
    single_term: bool


##########
# public #
##########


def canonical_gluing_data(m: int = 1) -> GluingData:
    """
    SW(X) = t − t⁻¹ with t the canonical class K, and SW(X₀) = m·(t₀ − t₀⁻¹)
    for a nonzero integer m, K₀ corresponding to K and orthogonal to T₀.
    """
    k, k0 = symbol("K"), symbol("K0")
    return GluingData(
        sw_x=SWInvariant.of({k: 1, -k: -1}),
        sw_x0=SWInvariant.of({k0: m, -k0: -m}),
        t0=symbol("T0"),
        corr=ClassCorrespondence.of({k0: k, -k0: -k}, {"K0": 0}),
        dual_exists=True,
    )


def build_family(
    plan: ReverseEngineeringPlan,
    x: FourManifold,
    gluing: GluingData,
    *,
    site: str,
) -> FamilyTable:
    """
    X_{1/n} for n in the plan's family range, with SW from the gluing
    formula.

    X₀, the 0 surgery on the torus `site` of X, must be certified to have
    nonzero SW. Every member keeps the homology of X and the simple
    connectivity assertion of the plan; X itself is the member n = 0.

    Parameters
    ----------
    plan : ReverseEngineeringPlan
        Plan X came from, for the family range and the citation
    x : FourManifold
        Result of the Luttinger chain
    gluing : GluingData
        SW(X), SW(X₀), T₀ and the class correspondence
    site : str
        Nullhomologous torus of X the family is built on

    Returns
    -------
    FamilyTable
        One row per n and whether the SW column is pairwise distinct
    """
    x0 = torus_surgery(x, nullhomologous_surgery(0, 1), site=site, name="X0")
    if not taubes_nonvanishing(x0):
        raise CannotCertifyError(
            f"No certificate that SW({x0.name}) is nonzero: X0 must be "
            "symplectic with b+ >= 2."
        )
    single_term = single_term_reduction(
        gluing.sw_x0, gluing.t0, gluing.dual_exists, gluing.corr
    )

    expected = invariants(x)
    rows = []
    for n in plan.family_range:
        # 1/0 surgery gives X back
        member = (
            x
            if n == 0
            else torus_surgery(
                x, nullhomologous_surgery(1, n), site=site, name=f"X_1/{n}"
            )
        )
        member = replace(
            member,
            simply_connected=x.simply_connected,
            sw=mms_combine(
                gluing.sw_x,
                gluing.sw_x0,
                gluing.t0,
                n,
                gluing.corr,
                single_term=single_term,
            ),
            notes=x.notes,
        )
        got = invariants(member)
        if got._replace(k_dot_omega_sign=None) != expected._replace(
            k_dot_omega_sign=None
        ):
            raise AssemblyError(
                f"{member.name} has invariants {got}, X has {expected}."
            )
        rows.append(FamilyRow(n=n, manifold=member, sw=member.sw))

    distinct = pairwise_distinct([row.sw for row in rows])
    logger.info(
        f"Family of {len(rows)} manifolds from {x.name} at {site}: SW "
        f"{'pairwise distinct' if distinct else 'NOT pairwise distinct'}."
    )
    return FamilyTable(
        rows=tuple(rows), distinct=distinct, single_term=single_term
    )


def shift_family(table: FamilyTable, offset: int) -> FamilyTable:
    """The same members with every index n moved to n + offset."""
    return table._replace(
        rows=tuple(row._replace(n=row.n + offset) for row in table.rows)
    )
