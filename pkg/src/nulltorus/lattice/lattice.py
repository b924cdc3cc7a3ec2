from typing import NamedTuple, Sequence

import numpy as np
import numpy.typing as npt

from nulltorus.errors import DimensionError

#########
# types #
#########


class HomClass(NamedTuple):
    """
    Integer class a·h − Σ bᵢ·eᵢ, stored as the vector (a, b₁, …, b_b).

    The minus sign of the diagonal part is part of the storage convention,
    so 3h − e₁ − e₂ − e₃ is stored as (3, 1, 1, 1).
    """

    coeffs: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    @property
    def alpha(self) -> int:
        return self.coeffs[0]

    @property
    def betas(self) -> tuple[int, ...]:
        return self.coeffs[1:]

    def __add__(self, other: object) -> "HomClass":
        if not isinstance(other, HomClass):
            return NotImplemented
        _check_rank(self, other)
        return HomClass(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "HomClass") -> "HomClass":
        return self + (-other)

    def __neg__(self) -> "HomClass":
        return HomClass(tuple(-a for a in self.coeffs))

    def __mul__(self, scalar: object) -> "HomClass":
        if not isinstance(scalar, int):
            return NotImplemented
        return HomClass(tuple(scalar * a for a in self.coeffs))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def sort_key(self) -> tuple[int, ...]:
        return self.coeffs

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.coeffs) + ")"


class IntersectionLattice(NamedTuple):
    """The odd diagonal lattice ⟨1⟩ ⊕ b⟨−1⟩."""

    b_minus: int

    @property
    def rank(self) -> int:
        return 1 + self.b_minus

    @property
    def signature(self) -> int:
        return 1 - self.b_minus

    @property
    def gram(self) -> npt.NDArray[np.object_]:
        # object dtype keeps python integers, so no wraparound
        return np.diag([1] + [-1] * self.b_minus).astype(object)

    def vector(self, coeffs: Sequence[int]) -> HomClass:
        if len(coeffs) != self.rank:
            raise DimensionError(
                f"Expected {self.rank} coefficients, got {len(coeffs)}."
            )
        return HomClass(tuple(int(a) for a in coeffs))

    def zero(self) -> HomClass:
        return HomClass((0,) * self.rank)

    def h(self) -> HomClass:
        return HomClass((1,) + (0,) * self.b_minus)

    def e(self, i: int) -> HomClass:
        """The exceptional class eᵢ, 1-indexed."""
        if not 1 <= i <= self.b_minus:
            raise DimensionError(
                f"e_{i} does not exist in a lattice with b_minus "
                f"{self.b_minus}."
            )
        coeffs = [0] * self.rank
        coeffs[i] = -1
        return HomClass(tuple(coeffs))

    def anticanonical(self) -> HomClass:
        """3h − Σ eᵢ, the anticanonical class of ℂP²#bℂP̄²."""
        return HomClass((3,) + (1,) * self.b_minus)

    def canonical(self) -> HomClass:
        """−3h + Σ eᵢ, the canonical class of ℂP²#bℂP̄²."""
        return -self.anticanonical()

    def contains(self, u: HomClass) -> bool:
        return u.rank == self.rank


##########
# public #
##########


def pairing(u: HomClass, v: HomClass) -> int:
    _check_rank(u, v)
    return u.alpha * v.alpha - sum(a * b for a, b in zip(u.betas, v.betas))


def square(u: HomClass) -> int:
    return pairing(u, u)


def moduli_dimension_bound(k: HomClass, e: int, sign: int) -> bool:
    """
    Whether k² ≥ 3·sign + 2·e, i.e. the moduli space attached to the basic
    class k has nonnegative expected dimension.
    """
    return square(k) >= 3 * sign + 2 * e


def lattice_of(u: HomClass) -> IntersectionLattice:
    if u.rank < 1:
        raise DimensionError("A class needs at least the h coefficient.")
    return IntersectionLattice(u.rank - 1)


###########
# private #
###########


def _check_rank(u: HomClass, v: HomClass) -> None:
    if u.rank != v.rank:
        raise DimensionError(
            f"Classes live in lattices of rank {u.rank} and {v.rank}."
        )
