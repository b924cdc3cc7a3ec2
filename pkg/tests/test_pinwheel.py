from dataclasses import replace

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nulltorus.errors import (
    AdjacencyError,
    InconsistentRecordError,
    NotCloseableError,
    PreconditionError,
    UnsupportedArityError,
)
from nulltorus.lattice import IntersectionLattice
from nulltorus.manifold import HandleCounts, catalog
from nulltorus.pinwheel import (
    InterfaceSurface,
    PinwheelComponent,
    PinwheelDescription,
    assemble,
    blow_up_component,
    closing_condition,
    cp2_pinwheel,
    handle_trade,
    rotate,
    seam_euler_numbers,
    trade_around,
)


def component(
    name: str, euler: int, out: int, inn: int
) -> PinwheelComponent:
    return PinwheelComponent(
        name=name,
        euler=euler,
        interface_out=InterfaceSurface(0, out),
        interface_in=InterfaceSurface(0, inn),
    )


def test_cp2_pinwheel_closes() -> None:
    pinwheel = cp2_pinwheel()
    assert seam_euler_numbers(pinwheel) == [(-1, 0)] * 3
    assert closing_condition(pinwheel)
    cp2 = assemble(pinwheel, signature=1, name="CP2", simply_connected=True)
    assert cp2.euler == 3
    assert cp2.lattice == IntersectionLattice(0)
    assert cp2.notes == ("signature and b1 supplied by the caller",)


def test_seams_summing_to_zero_do_not_close() -> None:
    pinwheel = PinwheelDescription(
        tuple(component(f"C{i}", 1, 0, 0) for i in range(3))
    )
    assert not closing_condition(pinwheel)
    with pytest.raises(NotCloseableError):
        assemble(pinwheel, signature=1)


def test_closing_condition_needs_three_components() -> None:
    pinwheel = PinwheelDescription(
        tuple(component(f"C{i}", 1, -1, 0) for i in range(2))
    )
    with pytest.raises(UnsupportedArityError):
        closing_condition(pinwheel)
    with pytest.raises(UnsupportedArityError):
        PinwheelDescription((component("C0", 1, -1, 0),))


def test_interface_genus_is_nonnegative() -> None:
    with pytest.raises(InconsistentRecordError):
        InterfaceSurface(-1, 0)


def test_component_handles_must_match_euler() -> None:
    with pytest.raises(InconsistentRecordError):
        replace(cp2_pinwheel().components[0], euler=2)


def test_full_trade_gives_copies_of_a() -> None:
    traded = trade_around(cp2_pinwheel())
    a = catalog.manifold_a()
    for c in traded.components:
        assert c.handles == HandleCounts(1, 2, 2, 0, 0) == a.handles
        assert c.euler == a.euler == 1
        assert c.interface_out.genus == c.interface_in.genus == 1
    assert closing_condition(traded)
    assert assemble(traded, signature=1).euler == 3


def test_single_trade_conserves_the_pair() -> None:
    pinwheel = cp2_pinwheel()
    c, d = handle_trade(pinwheel, 0, 1)
    assert c.euler + d.euler == 2
    assert c.handles == HandleCounts(1, 0, 2, 0, 0)
    assert d.handles == HandleCounts(1, 2, 0, 0, 0)
    assert c.interface_out.genus == 1 and c.interface_in.genus == 0
    assert d.interface_in.genus == 1 and d.interface_out.genus == 0
    backward_c, backward_d = handle_trade(pinwheel, 1, 0)
    assert backward_c.interface_in.genus == 1
    assert backward_d.interface_out.genus == 1


def test_trade_needs_adjacent_components_with_handles() -> None:
    four = PinwheelDescription(
        tuple(
            replace(component(f"C{i}", 1, -1, 0), handles=HandleCounts())
            for i in range(4)
        )
    )
    with pytest.raises(AdjacencyError):
        handle_trade(four, 0, 2)
    with pytest.raises(AdjacencyError):
        handle_trade(four, 1, 1)
    bare = PinwheelDescription(
        tuple(component(f"C{i}", 1, -1, 0) for i in range(3))
    )
    with pytest.raises(PreconditionError):
        handle_trade(bare, 0, 1)


def test_blown_up_traded_pinwheel() -> None:
    traded = trade_around(cp2_pinwheel())
    blown = replace(
        traded,
        components=tuple(blow_up_component(c) for c in traded.components),
    )
    assert [c.euler for c in blown.components] == [2, 2, 2]
    assert blown.components[0].handles == HandleCounts(1, 2, 3, 0, 0)
    rational = assemble(
        blown, signature=-2, name="CP2#3CP2bar", simply_connected=True
    )
    assert rational.euler == 6
    assert rational.lattice == IntersectionLattice(3)


def test_q_components() -> None:
    t0xt0 = catalog.t0xt0()
    pinwheel = PinwheelDescription(
        tuple(component(f"Q{i}", t0xt0.euler + 1, -1, 0) for i in range(3))
    )
    q = assemble(pinwheel, signature=-2, b1=6, name="Q")
    assert (q.euler, q.signature, q.b1) == (6, -2, 6)


@given(
    st.lists(st.integers(-5, 5), min_size=3, max_size=3),
    st.integers(0, 5),
)
def test_assembly_is_additive_and_rotation_invariant(
    eulers: list[int], steps: int
) -> None:
    pinwheel = PinwheelDescription(
        tuple(component(f"C{i}", e, -1, 0) for i, e in enumerate(eulers)),
        closure_piece_euler=0,
    )
    # keep b2 = e - 2 >= 0 and of the parity of the signature
    total = sum(eulers)
    if total < 2:
        return
    signature = total % 2
    assembled = assemble(pinwheel, signature=signature)
    rotated = assemble(rotate(pinwheel, steps), signature=signature)
    assert assembled.euler == rotated.euler == total
