from dataclasses import dataclass, replace

from nulltorus.errors import (
    AdjacencyError,
    InconsistentRecordError,
    NotCloseableError,
    PreconditionError,
    UnsupportedArityError,
)
from nulltorus.lattice import IntersectionLattice
from nulltorus.logging import logger
from nulltorus.manifold import FourManifold, HandleCounts, derive_betti

#########
# types #
#########

# the interface Euler numbers of each seam must add up to this
SEAM_EULER_SUM = -1


@dataclass(frozen=True)
class InterfaceSurface:
    """A removed interface surface: its genus and normal Euler number."""

    genus: int
    euler_number: int

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise InconsistentRecordError(
                f"An interface surface has genus >= 0, got {self.genus}."
            )


@dataclass(frozen=True)
class PinwheelComponent:
    """
    One piece of a pinwheel. `interface_out` is glued to the next
    component's `interface_in` in the cyclic order.
    """

    name: str
    euler: int
    interface_out: InterfaceSurface
    interface_in: InterfaceSurface
    handles: HandleCounts | None = None

    def __post_init__(self) -> None:
        if self.handles is not None and self.handles.euler != self.euler:
            raise InconsistentRecordError(
                f"{self.name}: handles give chi {self.handles.euler}, "
                f"component says {self.euler}."
            )


@dataclass(frozen=True)
class PinwheelDescription:
    components: tuple[PinwheelComponent, ...]
    # χ(T²×D²)
    closure_piece_euler: int = 0

    def __post_init__(self) -> None:
        if len(self.components) < 2:
            raise UnsupportedArityError(
                "A pinwheel has at least two components, got "
                f"{len(self.components)}."
            )

    def __len__(self) -> int:
        return len(self.components)


##########
# public #
##########


def closing_condition(description: PinwheelDescription) -> bool:
    """
    Whether the boundary left after gluing the components can be filled by
    T²×D²: at every seam the normal Euler numbers of the two removed
    surfaces add up to −1. Only three-component pinwheels are treated.
    """
    if len(description) != 3:
        raise UnsupportedArityError(
            "The closing condition is only known for three components, got "
            f"{len(description)}."
        )
    return all(
        out + inn == SEAM_EULER_SUM
        for out, inn in seam_euler_numbers(description)
    )


def seam_euler_numbers(
    description: PinwheelDescription,
) -> list[tuple[int, int]]:
    components = description.components
    return [
        (
            c.interface_out.euler_number,
            components[(i + 1) % len(components)].interface_in.euler_number,
        )
        for i, c in enumerate(components)
    ]


def assemble(
    description: PinwheelDescription,
    *,
    signature: int,
    b1: int = 0,
    name: str = "pinwheel",
    simply_connected: bool = False,
) -> FourManifold:
    """
    Glue the components and fill in the boundary.

    Parameters
    ----------
    description : PinwheelDescription
        Components in cyclic order
    signature : int
        Signature of the result, never computed here
    b1 : int, default=0
        First Betti number of the result, never computed here
    name : str, default="pinwheel"
        Name of the record
    simply_connected : bool, default=False
        Asserted simple connectivity; a b⁺ = 1 result then gets its
        diagonal lattice

    Returns
    -------
    FourManifold
        Closed record with e = Σ χ(components) + χ(closure piece), the
        gluing regions having χ = 0
    """
    if not closing_condition(description):
        raise NotCloseableError(
            "Seam Euler numbers "
            f"{seam_euler_numbers(description)} do not all add up to "
            f"{SEAM_EULER_SUM}."
        )
    euler = (
        sum(c.euler for c in description.components)
        + description.closure_piece_euler
    )
    manifold = FourManifold(
        name=name,
        euler=euler,
        signature=signature,
        b1=b1,
        notes=("signature and b1 supplied by the caller",),
    )
    if simply_connected:
        betti = derive_betti(manifold)
        manifold = replace(
            manifold,
            simply_connected=True,
            lattice=(
                IntersectionLattice(betti.b_minus)
                if betti.b_plus == 1
                else None
            ),
        )
    logger.debug(
        f"Assembled {name} from {len(description)} components: e = {euler}."
    )
    return manifold


def handle_trade(
    description: PinwheelDescription, receiver: int, giver: int
) -> tuple[PinwheelComponent, PinwheelComponent]:
    """
    Move a pair of 2-handles from `giver` to its neighbour `receiver`.
    Taking a 2-handle away is attaching a 1-handle, so the receiver gains
    two 2-handles and the giver two 1-handles; the interface between them
    becomes a torus.
    """
    size = len(description)
    if receiver == giver or giver % size not in (
        (receiver + 1) % size,
        (receiver - 1) % size,
    ):
        raise AdjacencyError(
            f"Components {receiver} and {giver} are not adjacent in a "
            f"pinwheel of {size}."
        )
    c = description.components[receiver % size]
    d = description.components[giver % size]
    if c.handles is None or d.handles is None:
        raise PreconditionError(
            f"Handle trading needs handle counts on {c.name} and {d.name}."
        )

    forward = giver % size == (receiver + 1) % size
    c_side, d_side = (
        ("interface_out", "interface_in")
        if forward
        else ("interface_in", "interface_out")
    )
    c_new = replace(
        c,
        euler=c.euler + 2,
        handles=c.handles._replace(h2=c.handles.h2 + 2),
        **_torus_interface(c, c_side),
    )
    d_new = replace(
        d,
        euler=d.euler - 2,
        handles=d.handles._replace(h1=d.handles.h1 + 2),
        **_torus_interface(d, d_side),
    )
    return c_new, d_new


def trade_around(description: PinwheelDescription) -> PinwheelDescription:
    """Trade handles once at every seam, each component receiving from the
    next one."""
    components = list(description.components)
    size = len(components)
    for i in range(size):
        current = replace(description, components=tuple(components))
        c, d = handle_trade(current, i, (i + 1) % size)
        components[i] = c
        components[(i + 1) % size] = d
    logger.debug(
        "Traded handles around the pinwheel: "
        + ", ".join(f"{c.name} {tuple(c.handles or ())}" for c in components)
    )
    return replace(description, components=tuple(components))


def blow_up_component(component: PinwheelComponent) -> PinwheelComponent:
    return replace(
        component,
        name=f"{component.name}#CP2bar",
        euler=component.euler + 1,
        handles=(
            None
            if component.handles is None
            else component.handles._replace(h2=component.handles.h2 + 1)
        ),
    )


def rotate(
    description: PinwheelDescription, steps: int
) -> PinwheelDescription:
    steps %= len(description)
    components = description.components
    return replace(
        description, components=components[steps:] + components[:steps]
    )


def cp2_pinwheel() -> PinwheelDescription:
    """
    ℂP² as three 4-balls: each removes a (−1)-sphere glued forward and a
    0-sphere glued backward.
    """
    return PinwheelDescription(
        components=tuple(
            PinwheelComponent(
                name=f"C{i}",
                euler=1,
                interface_out=InterfaceSurface(genus=0, euler_number=-1),
                interface_in=InterfaceSurface(genus=0, euler_number=0),
                handles=HandleCounts(1, 0, 0, 0, 0),
            )
            for i in range(3)
        )
    )


###########
# private #
###########


def _torus_interface(
    component: PinwheelComponent, side: str
) -> dict[str, InterfaceSurface]:
    surface: InterfaceSurface = getattr(component, side)
    return {side: replace(surface, genus=1)}
