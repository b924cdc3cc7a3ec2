from collections import defaultdict

from nulltorus.errors import AdjunctionError, PreconditionError
from nulltorus.logging import logger

from .invariant import ClassCorrespondence, ClassKey, SWInvariant

##########
# public #
##########


def mms_combine(
    sw_x: SWInvariant,
    sw_x0: SWInvariant,
    t0: ClassKey,
    n: int,
    corr: ClassCorrespondence = ClassCorrespondence(),
    *,
    single_term: bool = False,
) -> SWInvariant:
    """
    Seiberg–Witten invariant of X_{1/n} from those of X and X₀:

        SW_{X_{1/n}}(k) = SW_X(k) + n·Σᵢ SW_{X₀}(k₀ + i·T₀)

    The i-sum runs over the finite support of `sw_x0`: terms whose classes
    differ by multiples of T₀ form one orbit and are summed together.

    Parameters
    ----------
    sw_x : SWInvariant
        Invariant of X (the 1/0 surgery)
    sw_x0 : SWInvariant
        Invariant of X₀ (the 0 surgery)
    t0 : ClassKey
        Class of the core torus T₀ of the 0 surgery
    n : int
        Surgery coefficient 1/n
    corr : ClassCorrespondence, default=ClassCorrespondence()
        How X₀ classes are named in X and X_{1/n}
    single_term : bool, default=False
        Take each orbit sum to be its only nonzero term, valid when
        `single_term_reduction` holds

    Returns
    -------
    SWInvariant
        Exactly the nonzero terms of SW_{X_{1/n}}
    """
    _check_adjunction(sw_x0, t0, corr)
    orbits = _orbits(sw_x0, t0, corr)

    total = sw_x.as_dict()
    for key, coefficients in orbits.items():
        if single_term:
            if len(coefficients) > 1:
                raise PreconditionError(
                    f"The orbit of {key} under T0 has {len(coefficients)} "
                    "nonzero terms, the single term evaluation does not "
                    "apply."
                )
            contribution = coefficients[0]
        else:
            contribution = sum(coefficients)
        total[key] = total.get(key, 0) + n * contribution

    result = SWInvariant.of(total)
    logger.debug(f"Gluing formula at n = {n}: {result}.")
    return result


def single_term_reduction(
    sw_x0: SWInvariant,
    t0: ClassKey,
    dual_exists: bool,
    corr: ClassCorrespondence = ClassCorrespondence(),
) -> bool:
    """
    Whether the i-sum of the gluing formula collapses to one term. A torus
    dual to T₀ separates the classes k₀ + i·T₀ by their pairing with it, so
    at most one of them is basic; the supplied SW_{X₀} is checked to agree.
    """
    if not dual_exists:
        return False
    return all(len(c) <= 1 for c in _orbits(sw_x0, t0, corr).values())


###########
# private #
###########


def _check_adjunction(
    sw_x0: SWInvariant, t0: ClassKey, corr: ClassCorrespondence
) -> None:
    for key in sw_x0.basic_classes():
        product = corr.pair_with_t0(key, t0)
        if product != 0:
            raise AdjunctionError(
                f"The basic class {key} of X0 pairs to {product} with "
                f"{t0}; the adjunction inequality forces 0."
            )


def _orbits(
    sw_x0: SWInvariant, t0: ClassKey, corr: ClassCorrespondence
) -> dict[ClassKey, list[int]]:
    orbits: dict[ClassKey, list[int]] = defaultdict(list)
    for key, coeff in sw_x0.terms:
        orbits[corr.to_x(key, t0)].append(coeff)
    return dict(orbits)
