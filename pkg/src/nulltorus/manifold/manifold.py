from dataclasses import dataclass, field, replace
from typing import TYPE_CHECKING, Literal, NamedTuple

from nulltorus.errors import InconsistentRecordError
from nulltorus.lattice import HomClass, IntersectionLattice, square

if TYPE_CHECKING:
    from nulltorus.seiberg_witten.invariant import SWInvariant

#########
# types #
#########

Sign = Literal["negative", "zero", "positive"]
TorusStatus = Literal["nullhomologous", "primitive", "essential_nonprimitive"]
FramingStatus = Literal[
    "nullhomologous_in_complement", "essential_in_complement"
]


@dataclass(frozen=True)
class SymplecticData:
    """
    Symplectic bookkeeping: K², the sign of K·ω and optionally K itself.
    The form ω is only ever seen through that sign.
    """

    canonical_square: int
    k_dot_omega_sign: Sign
    canonical_class: HomClass | None = None

    def __post_init__(self) -> None:
        if self.k_dot_omega_sign not in ("negative", "zero", "positive"):
            raise InconsistentRecordError(
                f"Unknown K.omega sign {self.k_dot_omega_sign!r}."
            )
        if (
            self.canonical_class is not None
            and square(self.canonical_class) != self.canonical_square
        ):
            raise InconsistentRecordError(
                f"K^2 is {self.canonical_square} but the canonical class "
                f"{self.canonical_class} squares to "
                f"{square(self.canonical_class)}."
            )


class HandleCounts(NamedTuple):
    """
    Handles of index 0..4. Carved handles of index i are recorded as
    handles of index i − 1.
    """

    h0: int = 1
    h1: int = 0
    h2: int = 0
    h3: int = 0
    h4: int = 0

    @property
    def euler(self) -> int:
        return self.h0 - self.h1 + self.h2 - self.h3 + self.h4


class TorusSite(NamedTuple):
    """An embedded square-zero torus recorded inside a manifold."""

    name: str
    status: TorusStatus
    framing: FramingStatus
    lagrangian: bool = False
    # the framing curve bounds a compatibly framed disk in the complement
    vanishing_cycle: bool = False
    # symplectic data on the other side of a ±1 / 0 surgery pair
    reverse_symplectic: SymplecticData | None = None


class Betti(NamedTuple):
    b_plus: int
    b_minus: int
    b2: int


class ManifoldInvariants(NamedTuple):
    euler: int
    signature: int
    b1: int
    h1_torsion: tuple[int, ...]
    b_plus: int | None
    b_minus: int | None
    k_dot_omega_sign: Sign | None
    simply_connected: bool


@dataclass(frozen=True)
class FourManifold:
    """
    Invariant record of a 4-manifold, closed or with boundary.

    `simply_connected` is an assertion made by whoever builds the record;
    nothing here derives it. For manifolds with boundary only χ is
    automatic, `b2` and `handles` are annotations checked against it.
    """

    name: str
    euler: int
    signature: int
    b1: int = 0
    h1_torsion: tuple[int, ...] = ()
    simply_connected: bool = False
    closed: bool = True
    symplectic: SymplecticData | None = None
    sw: "SWInvariant | None" = None
    lattice: IntersectionLattice | None = None
    b2: int | None = None
    handles: HandleCounts | None = None
    sites: tuple[TorusSite, ...] = ()
    diffeo_tag: str | None = None
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.b1 < 0:
            raise InconsistentRecordError(f"{self.name}: b1 is negative.")
        if any(order < 2 for order in self.h1_torsion):
            raise InconsistentRecordError(
                f"{self.name}: torsion orders must be at least 2."
            )
        if self.simply_connected and (self.b1 != 0 or self.h1_torsion):
            raise InconsistentRecordError(
                f"{self.name}: a simply connected manifold has H1 = 0."
            )
        if self.closed:
            self._check_closed()
        else:
            self._check_boundary()

    def site(self, name: str) -> TorusSite | None:
        return next((s for s in self.sites if s.name == name), None)

    def _check_closed(self) -> None:
        betti = derive_betti(self)
        if self.lattice is not None:
            if betti.b_plus != 1 or self.lattice.b_minus != betti.b_minus:
                raise InconsistentRecordError(
                    f"{self.name}: lattice with b_minus "
                    f"{self.lattice.b_minus} does not match b+ "
                    f"{betti.b_plus}, b- {betti.b_minus}."
                )
        elif self.simply_connected and betti.b_plus == 1:
            raise InconsistentRecordError(
                f"{self.name}: simply connected with b+ = 1 needs a lattice."
            )
        canonical = (
            self.symplectic.canonical_class if self.symplectic else None
        )
        if (
            canonical is not None
            and self.lattice is not None
            and not self.lattice.contains(canonical)
        ):
            raise InconsistentRecordError(
                f"{self.name}: canonical class outside the lattice."
            )

    def _check_boundary(self) -> None:
        if self.handles is not None and self.handles.euler != self.euler:
            raise InconsistentRecordError(
                f"{self.name}: handles give chi {self.handles.euler}, "
                f"record says {self.euler}."
            )
        # connected with b3 = b4 = 0
        if self.b2 is not None and 1 - self.b1 + self.b2 != self.euler:
            raise InconsistentRecordError(
                f"{self.name}: b1 = {self.b1}, b2 = {self.b2} do not give "
                f"chi {self.euler}."
            )


##########
# public #
##########


def derive_betti(manifold: FourManifold) -> Betti:
    if not manifold.closed:
        raise InconsistentRecordError(
            f"{manifold.name}: betti numbers are only derived for closed "
            "manifolds."
        )
    b2 = manifold.euler - 2 + 2 * manifold.b1
    if b2 < 0:
        raise InconsistentRecordError(
            f"{manifold.name}: e = {manifold.euler}, b1 = {manifold.b1} "
            f"give b2 = {b2}."
        )
    if (b2 + manifold.signature) % 2 != 0:
        raise InconsistentRecordError(
            f"{manifold.name}: b2 = {b2} and sign = {manifold.signature} "
            "have different parities."
        )
    b_plus = (b2 + manifold.signature) // 2
    b_minus = (b2 - manifold.signature) // 2
    if b_plus < 0 or b_minus < 0:
        raise InconsistentRecordError(
            f"{manifold.name}: |sign| = {abs(manifold.signature)} exceeds "
            f"b2 = {b2}."
        )
    return Betti(b_plus, b_minus, b2)


def b_plus(manifold: FourManifold) -> int:
    return derive_betti(manifold).b_plus


def euler_from_handles(handles: HandleCounts) -> int:
    return handles.euler


def blow_up(manifold: FourManifold) -> FourManifold:
    """
    Connected sum with ℂP̄²: e + 1, sign − 1, one more ⟨−1⟩ summand.
    """
    symplectic = manifold.symplectic
    if symplectic is not None:
        canonical = symplectic.canonical_class
        symplectic = SymplecticData(
            canonical_square=symplectic.canonical_square - 1,
            k_dot_omega_sign=symplectic.k_dot_omega_sign,
            # K + E, and E = e_new is stored with coefficient −1
            canonical_class=(
                None
                if canonical is None
                else HomClass(canonical.coeffs + (-1,))
            ),
        )
    return replace(
        manifold,
        name=f"{manifold.name}#CP2bar",
        euler=manifold.euler + 1,
        signature=manifold.signature - 1,
        symplectic=symplectic,
        sw=None,
        lattice=(
            None
            if manifold.lattice is None
            else IntersectionLattice(manifold.lattice.b_minus + 1)
        ),
        b2=None if manifold.b2 is None else manifold.b2 + 1,
        handles=(
            None
            if manifold.handles is None
            else manifold.handles._replace(h2=manifold.handles.h2 + 1)
        ),
        diffeo_tag=None,
    )


def invariants(manifold: FourManifold) -> ManifoldInvariants:
    """Name-free summary used to compare records built along different
    routes."""
    betti = derive_betti(manifold) if manifold.closed else None
    return ManifoldInvariants(
        euler=manifold.euler,
        signature=manifold.signature,
        b1=manifold.b1,
        h1_torsion=tuple(sorted(manifold.h1_torsion)),
        b_plus=None if betti is None else betti.b_plus,
        b_minus=None if betti is None else betti.b_minus,
        k_dot_omega_sign=(
            None
            if manifold.symplectic is None
            else manifold.symplectic.k_dot_omega_sign
        ),
        simply_connected=manifold.simply_connected,
    )


def characteristic_square(manifold: FourManifold) -> int:
    """c₁² = 2e + 3·sign, the square of the canonical class of any almost
    complex structure."""
    return 2 * manifold.euler + 3 * manifold.signature
