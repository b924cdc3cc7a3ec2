import json
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Iterator, NamedTuple

from nulltorus.errors import ManifestError, WorkbenchError
from nulltorus.lattice import HomClass, IntersectionLattice
from nulltorus.manifold import (
    FourManifold,
    HandleCounts,
    SymplecticData,
    TorusSite,
)
from nulltorus.pinwheel import (
    InterfaceSurface,
    PinwheelComponent,
    PinwheelDescription,
)
from nulltorus.pipeline import GluingData, ReverseEngineeringPlan
from nulltorus.seiberg_witten import (
    ClassCorrespondence,
    SWInvariant,
    format_class,
    parse_class,
)
from nulltorus.surgery import TorusSurgerySpec

# JSON manifests for manifolds, surgery recipes, SW invariants, pinwheels
# and reverse-engineering plans.

#########
# types #
#########


class RecipeStep(NamedTuple):
    spec: TorusSurgerySpec
    site: str | None = None


class PlanManifest(NamedTuple):
    plan: ReverseEngineeringPlan
    gluing: GluingData | None = None


##########
# public #
##########


def load_json(path: Path | str) -> Any:
    path = Path(path)
    try:
        return json.loads(path.read_text())
    except FileNotFoundError as exc:
        raise ManifestError(f"No manifest at {path}.") from exc
    except json.JSONDecodeError as exc:
        raise ManifestError(f"{path} is not valid JSON: {exc}") from exc


def manifold_from_dict(data: dict[str, Any]) -> FourManifold:
    with _reading("manifold"):
        symplectic = data.get("symplectic")
        sw = data.get("sw")
        lattice = data.get("lattice")
        handles = data.get("handles")
        return FourManifold(
            name=data["name"],
            euler=_int(data["euler"]),
            signature=_int(data["signature"]),
            b1=_int(data.get("b1", 0)),
            h1_torsion=tuple(_int(t) for t in data.get("h1_torsion", [])),
            simply_connected=bool(data.get("simply_connected", False)),
            closed=bool(data.get("closed", True)),
            symplectic=(
                None if symplectic is None else _symplectic(symplectic)
            ),
            sw=None if sw is None else sw_from_list(sw),
            lattice=(
                None
                if lattice is None
                else IntersectionLattice(_int(lattice["b_minus"]))
            ),
            b2=None if data.get("b2") is None else _int(data["b2"]),
            handles=(
                None
                if handles is None
                else HandleCounts(*(_int(h) for h in handles))
            ),
            sites=tuple(_site(s) for s in data.get("sites", [])),
            diffeo_tag=data.get("diffeo_tag"),
        )


def manifold_to_dict(manifold: FourManifold) -> dict[str, Any]:
    data: dict[str, Any] = {
        "name": manifold.name,
        "euler": manifold.euler,
        "signature": manifold.signature,
        "b1": manifold.b1,
        "h1_torsion": list(manifold.h1_torsion),
        "closed": manifold.closed,
        "simply_connected": manifold.simply_connected,
    }
    if manifold.symplectic is not None:
        data["symplectic"] = {
            "canonical_square": manifold.symplectic.canonical_square,
            "k_dot_omega_sign": manifold.symplectic.k_dot_omega_sign,
        }
        if manifold.symplectic.canonical_class is not None:
            data["symplectic"]["canonical_class"] = list(
                manifold.symplectic.canonical_class.coeffs
            )
    if manifold.sw is not None:
        data["sw"] = sw_to_list(manifold.sw)
    if manifold.lattice is not None:
        data["lattice"] = {"b_minus": manifold.lattice.b_minus}
    if manifold.b2 is not None:
        data["b2"] = manifold.b2
    if manifold.handles is not None:
        data["handles"] = list(manifold.handles)
    if manifold.sites:
        data["sites"] = [site._asdict() for site in manifold.sites]
        for site in data["sites"]:
            site.pop("reverse_symplectic")
    if manifold.diffeo_tag is not None:
        data["diffeo_tag"] = manifold.diffeo_tag
    return data


def spec_from_dict(data: dict[str, Any]) -> TorusSurgerySpec:
    with _reading("surgery spec"):
        return TorusSurgerySpec(
            torus_status=data["torus_status"],
            meridian_generates_summand=bool(
                data["meridian_generates_summand"]
            ),
            framing_curve_status=data["framing_curve_status"],
            p=_int(data["p"]),
            q=_int(data["q"]),
            lagrangian_framing=bool(data.get("lagrangian_framing", False)),
        )


def spec_to_dict(spec: TorusSurgerySpec) -> dict[str, Any]:
    return {
        "torus_status": spec.torus_status,
        "meridian_generates_summand": spec.meridian_generates_summand,
        "framing_curve_status": spec.framing_curve_status,
        "p": spec.p,
        "q": spec.q,
        "lagrangian_framing": spec.lagrangian_framing,
    }


def recipe_from_list(data: list[dict[str, Any]]) -> list[RecipeStep]:
    """A recipe is a list of specs; an optional "site" names the torus."""
    if not isinstance(data, list):
        raise ManifestError("A surgery recipe is a JSON array.")
    return [RecipeStep(spec_from_dict(d), d.get("site")) for d in data]


def sw_from_list(data: list[dict[str, Any]]) -> SWInvariant:
    with _reading("SW invariant"):
        return SWInvariant.of(
            [
                (parse_class(term["class"]), _int(term["coeff"]))
                for term in data
            ]
        )


def sw_to_list(sw: SWInvariant) -> list[dict[str, Any]]:
    return [
        {"class": format_class(key), "coeff": coeff} for key, coeff in sw.terms
    ]


def pinwheel_from_dict(data: dict[str, Any]) -> PinwheelDescription:
    with _reading("pinwheel"):
        return PinwheelDescription(
            components=tuple(
                PinwheelComponent(
                    name=c["name"],
                    euler=_int(c["euler"]),
                    interface_out=_interface(c["interface_out"]),
                    interface_in=_interface(c["interface_in"]),
                    handles=(
                        None
                        if c.get("handles") is None
                        else HandleCounts(*(_int(h) for h in c["handles"]))
                    ),
                )
                for c in data["components"]
            ),
            closure_piece_euler=_int(data.get("closure_piece_euler", 0)),
        )


def pinwheel_to_dict(description: PinwheelDescription) -> dict[str, Any]:
    components = []
    for c in description.components:
        component: dict[str, Any] = {
            "name": c.name,
            "euler": c.euler,
            "interface_out": {
                "genus": c.interface_out.genus,
                "euler_number": c.interface_out.euler_number,
            },
            "interface_in": {
                "genus": c.interface_in.genus,
                "euler_number": c.interface_in.euler_number,
            },
        }
        if c.handles is not None:
            component["handles"] = list(c.handles)
        components.append(component)
    return {
        "components": components,
        "closure_piece_euler": description.closure_piece_euler,
    }


def plan_from_dict(data: dict[str, Any]) -> PlanManifest:
    """
    A plan: target and model manifolds, the Luttinger specs in surgery
    order, the family range and optionally the gluing data for the family.
    """
    with _reading("plan"):
        plan = ReverseEngineeringPlan(
            target=manifold_from_dict(data["target"]),
            model=manifold_from_dict(data["model"]),
            lagrangian_tori=tuple(
                spec_from_dict(s) for s in data["lagrangian_tori"]
            ),
            family_range=tuple(_int(n) for n in data.get("family_range", [])),
            tori=tuple(data.get("tori", [])),
            spans_h1=bool(data.get("spans_h1", True)),
            **({"citation": data["citation"]} if "citation" in data else {}),
        )
        gluing = data.get("gluing")
        return PlanManifest(
            plan=plan, gluing=None if gluing is None else _gluing(gluing)
        )


###########
# private #
###########


@contextmanager
def _reading(what: str) -> Iterator[None]:
    try:
        yield
    except WorkbenchError:
        raise
    except KeyError as exc:
        raise ManifestError(f"Missing field {exc} in the {what}.") from exc
    except (TypeError, ValueError, AttributeError) as exc:
        raise ManifestError(f"Malformed {what}: {exc}") from exc


def _int(value: Any) -> int:
    # bool is an int subclass
    if isinstance(value, bool) or not isinstance(value, int):
        raise ManifestError(f"Expected an integer, got {value!r}.")
    return value


def _symplectic(data: dict[str, Any]) -> SymplecticData:
    canonical = data.get("canonical_class")
    return SymplecticData(
        canonical_square=_int(data["canonical_square"]),
        k_dot_omega_sign=data["k_dot_omega_sign"],
        canonical_class=(
            None
            if canonical is None
            else HomClass(tuple(_int(c) for c in canonical))
        ),
    )


def _site(data: dict[str, Any]) -> TorusSite:
    return TorusSite(
        name=data["name"],
        status=data["status"],
        framing=data["framing"],
        lagrangian=bool(data.get("lagrangian", False)),
        vanishing_cycle=bool(data.get("vanishing_cycle", False)),
    )


def _interface(data: dict[str, Any]) -> InterfaceSurface:
    return InterfaceSurface(
        genus=_int(data["genus"]), euler_number=_int(data["euler_number"])
    )


def _gluing(data: dict[str, Any]) -> GluingData:
    correspondence = data.get("correspondence", {})
    return GluingData(
        sw_x=sw_from_list(data["sw_x"]),
        sw_x0=sw_from_list(data["sw_x0"]),
        t0=parse_class(data["t0"]),
        corr=ClassCorrespondence.of(
            {
                parse_class(pair["from"]): parse_class(pair["to"])
                for pair in correspondence.get("x0_to_x", [])
            },
            {
                str(name): _int(value)
                for name, value in correspondence.get(
                    "t0_pairings", {}
                ).items()
            },
        ),
        dual_exists=bool(data.get("dual_exists", False)),
    )
