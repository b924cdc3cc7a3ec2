import pytest
from hypothesis import given
from hypothesis import strategies as st

from nulltorus.errors import InconsistentRecordError
from nulltorus.lattice import IntersectionLattice, square
from nulltorus.manifold import (
    Betti,
    FourManifold,
    HandleCounts,
    SymplecticData,
    blow_up,
    catalog,
    characteristic_square,
    derive_betti,
    euler_from_handles,
    invariants,
)


@pytest.mark.parametrize(
    "manifold, expected",
    [
        (catalog.cp2k(3), Betti(1, 3, 4)),
        (catalog.sym2(3), Betti(7, 9, 16)),
        (catalog.t4(), Betti(3, 3, 6)),
        (catalog.cp2(), Betti(1, 0, 1)),
        (catalog.t2xs2(), Betti(1, 1, 2)),
    ],
)
def test_derive_betti(manifold: FourManifold, expected: Betti) -> None:
    assert derive_betti(manifold) == expected


def test_sym2_matches_cp2k3_numbers() -> None:
    sym2 = catalog.sym2(3)
    assert (sym2.euler, sym2.signature, sym2.b1) == (6, -2, 6)
    assert sym2.symplectic is not None
    assert sym2.symplectic.canonical_square == 6
    assert sym2.symplectic.k_dot_omega_sign == "positive"


def test_parity_violation() -> None:
    with pytest.raises(InconsistentRecordError):
        FourManifold(name="odd", euler=4, signature=1)


def test_negative_b2() -> None:
    with pytest.raises(InconsistentRecordError):
        FourManifold(name="negative", euler=0, signature=0)


def test_simply_connected_needs_trivial_h1() -> None:
    with pytest.raises(InconsistentRecordError):
        FourManifold(
            name="bad",
            euler=0,
            signature=0,
            b1=2,
            simply_connected=True,
        )


def test_simply_connected_b_plus_one_needs_a_lattice() -> None:
    with pytest.raises(InconsistentRecordError):
        FourManifold(
            name="no lattice", euler=6, signature=-2, simply_connected=True
        )
    with pytest.raises(InconsistentRecordError):
        FourManifold(
            name="wrong lattice",
            euler=6,
            signature=-2,
            simply_connected=True,
            lattice=IntersectionLattice(2),
        )


def test_canonical_class_square_is_checked() -> None:
    with pytest.raises(InconsistentRecordError):
        SymplecticData(
            canonical_square=5,
            k_dot_omega_sign="negative",
            canonical_class=IntersectionLattice(3).canonical(),
        )
    with pytest.raises(InconsistentRecordError):
        SymplecticData(canonical_square=0, k_dot_omega_sign="sideways")


@pytest.mark.parametrize(
    "handles, euler",
    [
        (HandleCounts(1, 2, 2, 0, 0), 1),
        (HandleCounts(1, 0, 0, 0, 0), 1),
        (HandleCounts(1, 2, 1, 0, 0), 0),
    ],
)
def test_euler_from_handles(handles: HandleCounts, euler: int) -> None:
    assert euler_from_handles(handles) == euler


@pytest.mark.parametrize(
    "manifold", [catalog.b4(), catalog.t2xd2(), catalog.manifold_a()]
)
def test_boundary_records_match_their_handles(manifold: FourManifold) -> None:
    assert manifold.handles is not None
    assert euler_from_handles(manifold.handles) == manifold.euler


def test_boundary_annotations_are_checked() -> None:
    with pytest.raises(InconsistentRecordError):
        FourManifold(
            name="A?",
            euler=1,
            signature=0,
            closed=False,
            handles=HandleCounts(1, 2, 1, 0, 0),
        )
    with pytest.raises(InconsistentRecordError):
        FourManifold(
            name="A?", euler=1, signature=0, b1=2, b2=1, closed=False
        )
    with pytest.raises(InconsistentRecordError):
        derive_betti(catalog.manifold_a())


def test_blow_up_cp2_three_times() -> None:
    manifold = catalog.cp2()
    for _ in range(3):
        manifold = blow_up(manifold)
    assert (manifold.euler, manifold.signature) == (6, -2)
    assert manifold.lattice == IntersectionLattice(3)
    assert manifold.symplectic is not None
    assert manifold.symplectic.canonical_square == 6
    assert manifold.symplectic.canonical_class is not None
    assert square(manifold.symplectic.canonical_class) == 6


def test_blow_up_a_and_t4() -> None:
    a = blow_up(catalog.manifold_a())
    assert (a.euler, a.b1, a.b2) == (2, 2, 3)
    assert a.handles == HandleCounts(1, 2, 3, 0, 0)
    t4 = blow_up(catalog.t4())
    assert (t4.euler, t4.signature) == (1, -1)


@given(st.integers(0, 12))
def test_blow_up_adds_one_negative_summand(k: int) -> None:
    before = derive_betti(catalog.cp2k(k))
    after = derive_betti(blow_up(catalog.cp2k(k)))
    assert after.b_minus == before.b_minus + 1
    assert after.b_plus == before.b_plus


@given(st.integers(0, 10), st.integers(0, 10), st.integers(0, 10))
def test_betti_round_trip(b1: int, b_plus: int, b_minus: int) -> None:
    euler = 2 - 2 * b1 + b_plus + b_minus
    signature = b_plus - b_minus
    manifold = FourManifold(
        name="M", euler=euler, signature=signature, b1=b1
    )
    betti = derive_betti(manifold)
    assert (betti.b_plus, betti.b_minus) == (b_plus, b_minus)
    assert 2 - 2 * b1 + betti.b2 == manifold.euler
    assert betti.b_plus - betti.b_minus == manifold.signature


def test_cp2k_records() -> None:
    rational = catalog.cp2k(3)
    assert rational.simply_connected
    assert rational.sw is not None and rational.sw.is_zero()
    assert rational.diffeo_tag == "standard CP2#3CP2bar"
    assert rational.symplectic is not None
    assert rational.symplectic.k_dot_omega_sign == "negative"
    with pytest.raises(ValueError):
        catalog.cp2k(-1)


def test_characteristic_square() -> None:
    assert characteristic_square(catalog.cp2k(3)) == 6
    assert characteristic_square(catalog.sym2(3)) == 6
    assert characteristic_square(catalog.cp2()) == 9


def test_invariants_ignore_names() -> None:
    renamed = FourManifold(
        name="other",
        euler=6,
        signature=-2,
        simply_connected=True,
        lattice=IntersectionLattice(3),
        symplectic=SymplecticData(6, "negative"),
    )
    assert invariants(renamed) == invariants(catalog.cp2k(3))


def test_exotic_canonical_genus_square() -> None:
    for k in range(2, 8):
        assert square(catalog.exotic_canonical(k)) == 9 - k
