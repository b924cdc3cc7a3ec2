import json
from dataclasses import replace

import polars as pl
import pytest

from nulltorus.errors import (
    CannotCertifyError,
    ChainError,
    InconsistentRecordError,
    ScheduleError,
)
from nulltorus.lattice import IntersectionLattice, find_isotropic_orthogonal
from nulltorus.manifold import catalog, derive_betti, invariants
from nulltorus.pipeline import (
    LUTTINGER_ORDER,
    REDUCTION_SCHEDULE,
    ConstructionReport,
    ReverseEngineeringPlan,
    build_family,
    canonical_gluing_data,
    check_model,
    family_frame,
    format_h1,
    format_text,
    ledger_frame,
    manifolds_frame,
    reduce_to_one_torus,
    run_chain,
    run_cp2k3,
    seams_frame,
    shift_family,
    single_torus_family,
    six_tori_construction,
    sym2_plan,
    to_json,
    torus_name,
    write_report,
)
from nulltorus.pinwheel import cp2_pinwheel
from nulltorus.seiberg_witten import li_liu_sign_check, symbol
from nulltorus.surgery import luttinger_surgery


@pytest.fixture(scope="module")
def report() -> ConstructionReport:
    return six_tori_construction(tuple(range(1, 11)))


def test_check_model() -> None:
    plan = sym2_plan()
    assert check_model(plan)
    wrong_sign = replace(
        plan, model=replace(plan.model, euler=7, signature=-1)
    )
    assert not check_model(wrong_sign)
    five = replace(plan, lagrangian_tori=plan.lagrangian_tori[:5], tori=())
    assert not check_model(five)
    assert not check_model(replace(plan, spans_h1=False))


def test_plan_needs_a_simply_connected_target() -> None:
    with pytest.raises(InconsistentRecordError):
        replace(sym2_plan(), target=catalog.sym2(3))
    with pytest.raises(InconsistentRecordError):
        replace(sym2_plan(), tori=("L1",))


def test_luttinger_chain_on_sym2() -> None:
    chain = run_chain(sym2_plan())
    assert len(chain) == 7
    assert [(m.b1, derive_betti(m).b_plus) for m in chain] == [
        (6 - i, 7 - i) for i in range(7)
    ]
    assert all((m.euler, m.signature) == (6, -2) for m in chain)
    x = chain[-1]
    assert x.name == "X"
    assert x.simply_connected
    assert x.lattice == IntersectionLattice(3)
    assert x.symplectic is not None
    assert x.symplectic.k_dot_omega_sign == "positive"
    assert x.notes[0].startswith("simply connected: asserted per citation")


def test_empty_chain() -> None:
    rational = catalog.cp2k(3)
    plan = ReverseEngineeringPlan(
        target=rational, model=rational, lagrangian_tori=()
    )
    assert run_chain(plan) == [rational]


def test_chain_refuses_a_bad_model() -> None:
    plan = sym2_plan()
    with pytest.raises(ChainError) as error:
        run_chain(replace(plan, spans_h1=False))
    assert error.value.step == 0


def test_chain_refuses_to_reuse_a_torus() -> None:
    plan = replace(sym2_plan(), tori=("L1",) * 6)
    with pytest.raises(ChainError) as error:
        run_chain(plan)
    assert error.value.step == 2


def test_canonical_family() -> None:
    chain = run_chain(sym2_plan())
    table = build_family(
        sym2_plan(), chain[-1], canonical_gluing_data(), site="L6"
    )
    assert [row.n for row in table.rows] == list(range(1, 11))
    assert table.distinct
    assert table.single_term
    k = symbol("K")
    for row in table.rows:
        m = row.manifold
        assert (m.euler, m.signature, m.b1, m.h1_torsion) == (6, -2, 0, ())
        assert m.simply_connected
        assert row.sw.coefficient(k) == 1 + row.n
        assert row.sw.coefficient(-k) == -1 - row.n


def test_family_member_zero_is_x() -> None:
    plan = replace(sym2_plan(), family_range=(0,))
    x = run_chain(plan)[-1]
    table = build_family(plan, x, canonical_gluing_data(3), site="L6")
    assert table.rows[0].manifold.name == "X"
    assert table.rows[0].sw == canonical_gluing_data().sw_x


def test_empty_family() -> None:
    plan = replace(sym2_plan(), family_range=())
    x = run_chain(plan)[-1]
    table = build_family(plan, x, canonical_gluing_data(), site="L6")
    assert table.rows == ()
    assert table.distinct


def test_family_needs_a_certificate() -> None:
    plan = sym2_plan()
    x = run_chain(plan)[-1]
    # no symplectic form on X and none to restore on its tori
    x = replace(
        x,
        symplectic=None,
        sites=tuple(s._replace(reverse_symplectic=None) for s in x.sites),
    )
    with pytest.raises(CannotCertifyError):
        build_family(plan, x, canonical_gluing_data(), site="L6")


def test_six_tori_construction(report: ConstructionReport) -> None:
    q = report.q
    assert (q.euler, q.signature, q.b1) == (6, -2, 6)
    assert derive_betti(q).b_plus == 7
    assert [site.name for site in q.sites] == list(LUTTINGER_ORDER)
    assert all(site.lagrangian for site in q.sites)
    x = report.x
    assert (x.euler, x.signature, x.b1) == (6, -2, 0)
    assert derive_betti(x).b_plus == 1
    assert x.symplectic is not None
    assert x.symplectic.k_dot_omega_sign == "positive"
    assert li_liu_sign_check(x) == "exotic_certificate"
    assert li_liu_sign_check(catalog.cp2k(3)) == "consistent_with_rational"
    assert [stage.name for stage in report.stages] == [
        "CP2",
        "CP2 traded",
        "CP2#3CP2bar",
        "Q",
        "X",
    ]
    assert [c.kind for c in report.bing_pairs] == ["bing_pair"] * 3
    assert [c.kind for c in report.lagrangian_pairs] == [
        "lagrangian_pair"
    ] * 3


def test_construction_matches_the_sym2_chain(
    report: ConstructionReport,
) -> None:
    assert invariants(report.x) == invariants(run_chain(sym2_plan())[-1])


def test_reduction_to_one_torus(report: ConstructionReport) -> None:
    ledger = reduce_to_one_torus(report)
    assert [step.torus for step in ledger.steps] == list(REDUCTION_SCHEDULE)
    assert [step.before for step in ledger.steps] == [
        "bing_pair",
        "whitehead_double",
        "bing_pair",
        "whitehead_double",
        "bing_pair",
    ]
    reference = invariants(report.rational)
    for step in ledger.steps:
        assert invariants(step.manifold) == reference
        assert step.manifold.diffeo_tag == "standard CP2#3CP2bar"
    assert ledger.remaining_torus == torus_name(2, 0)
    assert ledger.configuration.kind == "whitehead_double"


def test_negative_n_reduction(report: ConstructionReport) -> None:
    ledger = reduce_to_one_torus(report, n=-5)
    assert ledger.remaining_torus == torus_name(2, 0)


def test_sixth_trivial_surgery_is_refused(report: ConstructionReport) -> None:
    schedule = REDUCTION_SCHEDULE + (torus_name(2, 0),)
    with pytest.raises(ScheduleError):
        reduce_to_one_torus(report, schedule)


def test_remaining_torus_reproduces_the_family(
    report: ConstructionReport,
) -> None:
    ledger = reduce_to_one_torus(report)
    family = single_torus_family(report, ledger, canonical_gluing_data())
    assert [row.n for row in family.rows] == list(range(2, 12))
    assert all(
        row.manifold.name.startswith("CP2#3CP2bar[") for row in family.rows
    )
    direct = build_family(
        sym2_plan(),
        run_chain(sym2_plan())[-1],
        canonical_gluing_data(),
        site="L6",
    )
    assert family_frame(shift_family(family, -1)).equals(
        family_frame(direct)
    )


def test_first_surgery_on_the_remaining_torus_gives_x(
    report: ConstructionReport,
) -> None:
    ledger = reduce_to_one_torus(report)
    gluing = canonical_gluing_data()
    family = single_torus_family(report, ledger, gluing, family_range=(1,))
    (row,) = family.rows
    assert row.sw == gluing.sw_x
    assert invariants(row.manifold)._replace(
        k_dot_omega_sign=None
    ) == invariants(report.x)._replace(k_dot_omega_sign=None)
    assert row.manifold.lattice == ledger.manifold.lattice


def test_remaining_torus_must_survive_the_reduction(
    report: ConstructionReport,
) -> None:
    ledger = reduce_to_one_torus(report)
    moved = ledger._replace(remaining_torus=torus_name(1, 0))
    with pytest.raises(ScheduleError):
        single_torus_family(report, moved, canonical_gluing_data())


def test_run_cp2k3() -> None:
    result = run_cp2k3(tuple(range(1, 4)), m=2)
    frame = family_frame(result.family)
    assert frame["n"].to_list() == [1, 2, 3]
    assert frame["e"].to_list() == [6, 6, 6]
    assert frame["H1"].to_list() == ["0", "0", "0"]
    assert frame["distinct"].to_list() == [True, True, True]
    assert frame["SW"].to_list()[0] == "-3[-K] +3[K]"
    assert result.verdict == "exotic_certificate"


def test_format_h1() -> None:
    assert format_h1(0, ()) == "0"
    assert format_h1(1, ()) == "Z"
    assert format_h1(6, (5, 3)) == "Z^6 + Z/3 + Z/5"


def test_frames(report: ConstructionReport, tmp_path) -> None:
    chain = manifolds_frame(report.chain)
    assert chain["b1"].to_list() == [6, 5, 4, 3, 2, 1, 0]
    assert chain["b+"].to_list() == [7, 6, 5, 4, 3, 2, 1]
    ledger = ledger_frame(reduce_to_one_torus(report))
    assert ledger["after"].to_list()[1] == "done"
    seams = seams_frame(cp2_pinwheel())
    assert seams["sum"].to_list() == [-1, -1, -1]

    paths = write_report(ledger, tmp_path / "out", "ledger")
    assert [p.name for p in paths] == ["ledger.tsv", "ledger.txt"]
    assert pl.read_csv(paths[0], separator="\t").shape == ledger.shape
    assert "T_(1),2" in paths[1].read_text()
    assert "|" in format_text(seams)
    assert '"torus": "T_(1),2"' in to_json(ledger)


def test_to_json_converts_classes_and_records() -> None:
    witness = find_isotropic_orthogonal(
        IntersectionLattice(1).vector([1, 1]), 2, strategy="box"
    )
    data = json.loads(
        to_json(
            {
                "witness": witness,
                "sw": canonical_gluing_data().sw_x,
                "steps": (1, 2),
            }
        )
    )
    assert data["witness"] == [1, 1]
    assert data["sw"] == {"terms": [["-K", -1], ["K", 1]]}
    assert data["steps"] == [1, 2]


def test_luttinger_surgeries_of_the_plan(report: ConstructionReport) -> None:
    assert report.plan.lagrangian_tori == (luttinger_surgery(1),) * 6
    assert report.plan.tori == LUTTINGER_ORDER
