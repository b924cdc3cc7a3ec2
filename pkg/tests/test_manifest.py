import json
from pathlib import Path

import pytest

from nulltorus.errors import ManifestError
from nulltorus.manifest import (
    load_json,
    manifold_from_dict,
    manifold_to_dict,
    pinwheel_from_dict,
    pinwheel_to_dict,
    plan_from_dict,
    recipe_from_list,
    spec_from_dict,
    spec_to_dict,
    sw_from_list,
    sw_to_list,
)
from nulltorus.manifold import FourManifold, catalog, invariants
from nulltorus.pinwheel import closing_condition, cp2_pinwheel
from nulltorus.pipeline import (
    build_family,
    canonical_gluing_data,
    check_model,
    run_chain,
    sym2_model,
    sym2_plan,
)
from nulltorus.seiberg_witten import SWInvariant, symbol
from nulltorus.surgery import (
    luttinger_surgery,
    nullhomologous_surgery,
    torus_surgery,
)
from nulltorus.utils import manifests_dir


@pytest.mark.parametrize(
    "manifold",
    [
        catalog.cp2k(3),
        catalog.manifold_a(),
        catalog.t4(),
        sym2_model(3),
    ],
)
def test_manifold_round_trip(manifold: FourManifold) -> None:
    assert manifold_from_dict(manifold_to_dict(manifold)) == manifold


def test_sym2_manifest() -> None:
    sym2 = manifold_from_dict(load_json(manifests_dir / "sym2_sigma3.json"))
    assert invariants(sym2) == invariants(catalog.sym2(3))
    assert [site.name for site in sym2.sites] == ["L1", "L2"]
    assert all(site.lagrangian for site in sym2.sites)


def test_recipe_manifest() -> None:
    sym2 = manifold_from_dict(load_json(manifests_dir / "sym2_sigma3.json"))
    recipe = recipe_from_list(
        load_json(manifests_dir / "luttinger_recipe.json")
    )
    assert [step.site for step in recipe] == ["L1", "L1", None]
    assert recipe[0].spec == luttinger_surgery(1)
    assert recipe[1].spec == nullhomologous_surgery(0, 1)
    manifold = sym2
    b1s = []
    for step in recipe:
        manifold = torus_surgery(manifold, step.spec, site=step.site)
        b1s.append(manifold.b1)
    assert b1s == [5, 6, 6]
    assert manifold.h1_torsion == (5,)


def test_surgery_record_round_trip() -> None:
    spec = nullhomologous_surgery(-2, 7)
    assert spec_from_dict(spec_to_dict(spec)) == spec


def test_sw_terms() -> None:
    sw = sw_from_list(
        [
            {"class": "K", "coeff": 1},
            {"class": "-K", "coeff": -1},
            {"class": [3, 1, 1, 1], "coeff": 2},
        ]
    )
    assert sw.coefficient(symbol("K")) == 1
    assert sw_from_list(sw_to_list(sw)) == sw
    assert sw_from_list([]) == SWInvariant.empty()


def test_pinwheel_manifest() -> None:
    pinwheel = pinwheel_from_dict(
        load_json(manifests_dir / "cp2_pinwheel.json")
    )
    assert pinwheel == cp2_pinwheel()
    assert closing_condition(pinwheel)
    assert pinwheel_from_dict(pinwheel_to_dict(pinwheel)) == pinwheel


def test_plan_manifest() -> None:
    manifest = plan_from_dict(load_json(manifests_dir / "cp2k3_plan.json"))
    plan = manifest.plan
    assert check_model(plan)
    assert plan.lagrangian_tori == sym2_plan().lagrangian_tori
    assert plan.tori == tuple(f"L{i}" for i in range(1, 7))
    assert plan.family_range == tuple(range(1, 11))
    assert invariants(plan.target) == invariants(catalog.cp2k(3))
    assert manifest.gluing is not None
    assert manifest.gluing.t0 == symbol("T0")

    x = run_chain(plan)[-1]
    from_manifest = build_family(plan, x, manifest.gluing, site="L6")
    canonical = build_family(plan, x, canonical_gluing_data(), site="L6")
    assert [row.sw for row in from_manifest.rows] == [
        row.sw for row in canonical.rows
    ]


def test_missing_file(tmp_path: Path) -> None:
    with pytest.raises(ManifestError):
        load_json(tmp_path / "nothing.json")


def test_bad_json(tmp_path: Path) -> None:
    path = tmp_path / "bad.json"
    path.write_text("{ not json")
    with pytest.raises(ManifestError):
        load_json(path)


def test_missing_field() -> None:
    with pytest.raises(ManifestError, match="euler"):
        manifold_from_dict({"name": "M", "signature": 0})


@pytest.mark.parametrize("value", [True, 1.5, "6"])
def test_integers_are_checked(value: object) -> None:
    with pytest.raises(ManifestError):
        manifold_from_dict({"name": "M", "euler": value, "signature": 0})


def test_recipe_must_be_a_list() -> None:
    with pytest.raises(ManifestError):
        recipe_from_list(json.loads('{"p": 1}'))


def test_malformed_surgery_record() -> None:
    with pytest.raises(ManifestError):
        spec_from_dict(
            {
                "torus_status": "primitive",
                "meridian_generates_summand": False,
                "framing_curve_status": "essential_in_complement",
                "p": 2,
                "q": 4,
            }
        )
