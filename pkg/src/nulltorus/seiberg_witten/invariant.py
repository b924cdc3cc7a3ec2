import re
from typing import Iterable, Mapping, NamedTuple

from nulltorus.errors import DimensionError, ManifestError
from nulltorus.lattice import HomClass, pairing

#########
# types #
#########


class SymbolicClass(NamedTuple):
    """
    Integer combination of named generators, for manifolds whose second
    homology is never coordinatised (K, K0, T0, ...).
    """

    terms: tuple[tuple[str, int], ...]

    @classmethod
    def of(cls, coefficients: Mapping[str, int]) -> "SymbolicClass":
        return cls(
            tuple(
                sorted(
                    (name, coeff)
                    for name, coeff in coefficients.items()
                    if coeff != 0
                )
            )
        )

    def as_dict(self) -> dict[str, int]:
        return dict(self.terms)

    def __add__(self, other: object) -> "SymbolicClass":
        if not isinstance(other, SymbolicClass):
            return NotImplemented
        total = self.as_dict()
        for name, coeff in other.terms:
            total[name] = total.get(name, 0) + coeff
        return SymbolicClass.of(total)

    def __sub__(self, other: "SymbolicClass") -> "SymbolicClass":
        return self + (-other)

    def __neg__(self) -> "SymbolicClass":
        return SymbolicClass(tuple((n, -c) for n, c in self.terms))

    def __mul__(self, scalar: object) -> "SymbolicClass":
        if not isinstance(scalar, int):
            return NotImplemented
        return SymbolicClass.of({n: scalar * c for n, c in self.terms})

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def sort_key(self) -> tuple[tuple[str, int], ...]:
        return self.terms

    def without(self, generator: str) -> "SymbolicClass":
        return SymbolicClass(tuple(t for t in self.terms if t[0] != generator))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for name, coeff in self.terms:
            sign = "-" if coeff < 0 else "+"
            size = "" if abs(coeff) == 1 else f"{abs(coeff)}*"
            out += f"{sign}{size}{name}"
        return out.removeprefix("+")


ClassKey = HomClass | SymbolicClass


class SWInvariant(NamedTuple):
    """
    Finite formal sum Σ cᵢ·[kᵢ] over basic classes, kept in canonical order
    with no zero coefficients.
    """

    terms: tuple[tuple[ClassKey, int], ...]

    @classmethod
    def of(
        cls, coefficients: Mapping[ClassKey, int] | Iterable[tuple]
    ) -> "SWInvariant":
        items = (
            coefficients.items()
            if isinstance(coefficients, Mapping)
            else coefficients
        )
        total: dict[ClassKey, int] = {}
        for key, coeff in items:
            total[key] = total.get(key, 0) + coeff
        return cls(
            tuple(
                sorted(
                    ((k, c) for k, c in total.items() if c != 0),
                    key=lambda term: _class_order(term[0]),
                )
            )
        )

    @classmethod
    def empty(cls) -> "SWInvariant":
        return cls(())

    def as_dict(self) -> dict[ClassKey, int]:
        return dict(self.terms)

    def coefficient(self, key: ClassKey) -> int:
        return self.as_dict().get(key, 0)

    def basic_classes(self) -> list[ClassKey]:
        return [key for key, _ in self.terms]

    def negate_classes(self) -> "SWInvariant":
        return SWInvariant.of({-k: c for k, c in self.terms})

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = [f"{c:+d}[{k}]" for k, c in self.terms]
        return " ".join(parts)


class ClassCorrespondence(NamedTuple):
    """
    Shared symbol table between X, X₀ and X_{1/n}.

    `x0_to_x` names the X class (also the X_{1/n} class) an X₀ class
    corresponds to; missing classes correspond to themselves, after the
    T₀ generator is projected out for symbolic classes and after lattice
    classes are reduced modulo T₀. `t0_pairings` gives the pairing of
    symbolic generators with T₀, zero when absent.
    """

    x0_to_x: tuple[tuple[ClassKey, ClassKey], ...] = ()
    t0_pairings: tuple[tuple[str, int], ...] = ()

    @classmethod
    def of(
        cls,
        x0_to_x: Mapping[ClassKey, ClassKey] | None = None,
        t0_pairings: Mapping[str, int] | None = None,
    ) -> "ClassCorrespondence":
        return cls(
            tuple((x0_to_x or {}).items()),
            tuple(sorted((t0_pairings or {}).items())),
        )

    def to_x(self, key: ClassKey, t0: ClassKey) -> ClassKey:
        table = dict(self.x0_to_x)
        if key in table:
            return table[key]
        if isinstance(key, SymbolicClass) and isinstance(t0, SymbolicClass):
            base = key
            for generator, _ in t0.terms:
                base = base.without(generator)
            return table.get(base, base)
        if isinstance(key, HomClass) and isinstance(t0, HomClass):
            base = _reduce_mod(key, t0)
            return table.get(base, base)
        return key

    def pair_with_t0(self, key: ClassKey, t0: ClassKey) -> int:
        if isinstance(key, HomClass) and isinstance(t0, HomClass):
            return pairing(key, t0)
        if isinstance(key, SymbolicClass) and isinstance(t0, SymbolicClass):
            pairings = dict(self.t0_pairings)
            return sum(c * pairings.get(n, 0) for n, c in key.terms)
        raise DimensionError(
            "Cannot pair a lattice class with a symbolic class."
        )


##########
# public #
##########


def symbol(name: str) -> SymbolicClass:
    return SymbolicClass(((name, 1),))


def parse_class(value: object) -> ClassKey:
    """
    Read a class from a manifest: a list of integers is a lattice vector, a
    string such as "K", "-K" or "K0+2*T0" is a symbolic class.
    """
    if isinstance(value, list) and all(isinstance(v, int) for v in value):
        return HomClass(tuple(value))
    if isinstance(value, str):
        text = value.replace(" ", "")
        if not _symbolic_re.fullmatch(text):
            raise ManifestError(f"Malformed class symbol {value!r}.")
        coefficients: dict[str, int] = {}
        for sign, size, name in _term_re.findall(text):
            coeff = int(size) if size else 1
            coeff = -coeff if sign == "-" else coeff
            coefficients[name] = coefficients.get(name, 0) + coeff
        return SymbolicClass.of(coefficients)
    raise ManifestError(f"Cannot read a class from {value!r}.")


def format_class(key: ClassKey) -> list[int] | str:
    return list(key.coeffs) if isinstance(key, HomClass) else str(key)


###########
# private #
###########

_term = r"([+-]?)(\d*)\*?([A-Za-z_][A-Za-z0-9_]*)"
_term_re = re.compile(_term)
_symbolic_re = re.compile(rf"(?:{_term})+")


def _class_order(key: ClassKey) -> tuple:
    match key:
        case HomClass():
            return (0, key.sort_key())
        case SymbolicClass():
            return (1, key.sort_key())
        case _:
            raise TypeError(f"Not a class: {key!r}.")


def _reduce_mod(key: HomClass, t0: HomClass) -> HomClass:
    # representative of key + Z·t0 whose pivot coordinate lies between 0
    # and t0's, the pivot being t0's first nonzero coordinate
    if key.rank != t0.rank:
        raise DimensionError(
            f"Cannot reduce a rank {key.rank} class by a rank {t0.rank} "
            "class."
        )
    pivot = next((i for i, c in enumerate(t0.coeffs) if c != 0), None)
    if pivot is None:
        return key
    return key - t0 * (key.coeffs[pivot] // t0.coeffs[pivot])
