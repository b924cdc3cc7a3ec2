import pytest
from hypothesis import given
from hypothesis import strategies as st

from nulltorus.errors import DimensionError
from nulltorus.lattice import (
    HomClass,
    IntersectionLattice,
    lattice_of,
    moduli_dimension_bound,
    pairing,
    square,
)


def classes(rank: int, size: int = 50) -> st.SearchStrategy[HomClass]:
    return st.lists(
        st.integers(-size, size), min_size=rank, max_size=rank
    ).map(lambda coeffs: HomClass(tuple(coeffs)))


@st.composite
def class_triples(draw) -> tuple[HomClass, HomClass, HomClass]:
    rank = draw(st.integers(1, 10))
    return draw(classes(rank)), draw(classes(rank)), draw(classes(rank))


def test_basis_pairings() -> None:
    lattice = IntersectionLattice(3)
    assert pairing(lattice.h(), lattice.h()) == 1
    assert pairing(lattice.e(1), lattice.e(1)) == -1
    assert pairing(lattice.h(), lattice.e(1)) == 0
    assert pairing(lattice.e(1), lattice.e(2)) == 0


def test_anticanonical_square() -> None:
    k = IntersectionLattice(3).vector([3, 1, 1, 1])
    assert k == IntersectionLattice(3).anticanonical()
    assert square(k) == 6
    assert square(IntersectionLattice(3).canonical()) == 6


def test_storage_sign_convention() -> None:
    lattice = IntersectionLattice(3)
    k = 3 * lattice.h() + lattice.e(1) + lattice.e(2) + lattice.e(3)
    # 3h + e1 + e2 + e3 is stored with negated diagonal coefficients
    assert k.coeffs == (3, -1, -1, -1)
    assert lattice.h() - lattice.e(1) == HomClass((1, 1, 0, 0))


def test_rank_mismatch_is_a_dimension_error() -> None:
    with pytest.raises(DimensionError):
        pairing(HomClass((1, 0)), HomClass((1, 0, 0)))
    with pytest.raises(DimensionError):
        IntersectionLattice(2).vector([1, 2])
    with pytest.raises(DimensionError):
        IntersectionLattice(2).e(3)


def test_lattice_properties() -> None:
    lattice = IntersectionLattice(9)
    assert lattice.rank == 10
    assert lattice.signature == -8
    assert lattice.gram.shape == (10, 10)
    assert lattice_of(lattice.zero()) == lattice
    assert lattice.contains(lattice.h())
    assert not lattice.contains(HomClass((1,)))


@pytest.mark.parametrize(
    "k_square, e, sign, expected",
    [(6, 6, -2, True), (0, 6, -2, False), (8, 4, 0, True)],
)
def test_moduli_dimension_bound(
    k_square: int, e: int, sign: int, expected: bool
) -> None:
    # a class of the given square in <1> + <-1>: (a, b) with a^2 - b^2
    k = {
        6: IntersectionLattice(3).anticanonical(),
        0: HomClass((1, 1)),
        8: HomClass((3, 1)),
    }[k_square]
    assert square(k) == k_square
    assert moduli_dimension_bound(k, e, sign) is expected


@given(class_triples(), st.integers(-20, 20), st.integers(-20, 20))
def test_pairing_is_symmetric_and_bilinear(
    triple: tuple[HomClass, HomClass, HomClass], a: int, b: int
) -> None:
    u, v, w = triple
    assert pairing(u, v) == pairing(v, u)
    assert pairing(a * u + b * v, w) == a * pairing(u, w) + b * pairing(
        v, w
    )


@given(class_triples())
def test_square_of_sum(triple: tuple[HomClass, HomClass, HomClass]) -> None:
    u, v, _ = triple
    assert square(u + v) == square(u) + 2 * pairing(u, v) + square(v)


@given(classes(5, size=10**30))
def test_no_wraparound_on_large_coefficients(u: HomClass) -> None:
    assert square(u) == u.alpha**2 - sum(b**2 for b in u.betas)
    assert (-u) + u == lattice_of(u).zero()
