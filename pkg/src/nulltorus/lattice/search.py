import functools
import math
from concurrent.futures import ProcessPoolExecutor
import sys
from typing import Iterator, Literal

if sys.version_info >= (3, 11):
    from typing import assert_never
else:
    from typing_extensions import assert_never

import numpy as np
import numpy.typing as npt

from nulltorus import config
from nulltorus.errors import HypothesisViolationError
from nulltorus.logging import logger

from .lattice import HomClass, lattice_of, square

#########
# types #
#########

Strategy = Literal["pruned", "box", "exhaustive"]

# dense boxes and isotropic tables beyond this many points are refused
MAX_BOX_POINTS = 5_000_000
MAX_OBSTRUCTED_B_MINUS = 8

##########
# public #
##########


def find_isotropic_orthogonal(
    k: HomClass,
    bound: int | None = None,
    *,
    strategy: Strategy = "pruned",
    n_workers: int | None = None,
) -> HomClass | None:
    """
    Search the box [−bound, bound]^rank for a nonzero class T with T² = 0
    and k·T = 0.

    Nonzero isotropic classes have a nonzero h coefficient and come in
    pairs ±T, so the search runs over the half box with positive h
    coefficient and returns the lexicographically first witness. `None`
    means no witness inside the box, not a proof that none exists.

    Parameters
    ----------
    k : HomClass
        Class the witness must be orthogonal to
    bound : int | None, default=None
        Coefficient bound, `config.SEARCH_BOUND` when None
    strategy : Strategy, default="pruned"
        "pruned" enumerates coordinate by coordinate and drops branches
        whose remaining coordinates cannot satisfy the orthogonality
        equation (Cauchy–Schwarz on the tail); "box" materialises the whole
        box with numpy and filters it; "exhaustive" enumerates every
        isotropic class of the box with no orthogonality cut and tests the
        pairing afterwards
    n_workers : int | None, default=None
        Number of processes the h-coefficient range is split across,
        `config.SEARCH_WORKERS` when None. The answer does not depend on it

    Returns
    -------
    HomClass | None
        First witness in lexicographic order, or None
    """
    if bound is None:
        bound = config.SEARCH_BOUND
    if bound < 1:
        raise ValueError(f"The search bound must be positive, got {bound}.")
    if n_workers is None:
        n_workers = config.SEARCH_WORKERS

    match strategy:
        case "pruned":
            coeffs = _search_pruned(k.coeffs, bound, max(1, n_workers))
        case "box":
            coeffs = _search_box(k.coeffs, bound)
        case "exhaustive":
            coeffs = _search_exhaustive(k.coeffs, bound)
        case _:
            assert_never(strategy)

    return None if coeffs is None else HomClass(coeffs)


def essential_torus_obstruction(k: HomClass) -> bool:
    """
    Whether no essential square-zero class orthogonal to k can exist.

    For a b⁺ = 1 diagonal lattice with b_minus ≤ 8 this holds exactly when
    k² > 0: writing k = αh − Σβᵢeᵢ and T = ah − Σbᵢeᵢ, T² = 0 and k·T = 0
    would give |aα| = |Σbᵢβᵢ| ≤ |a|·√(Σβᵢ²) < |aα|.
    """
    lattice = lattice_of(k)
    if lattice.b_minus > MAX_OBSTRUCTED_B_MINUS:
        raise HypothesisViolationError(
            f"The obstruction needs b_minus <= {MAX_OBSTRUCTED_B_MINUS}, "
            f"got {lattice.b_minus}."
        )
    return square(k) > 0


def isotropic_classes(b_minus: int, bound: int) -> list[HomClass]:
    """
    Every class αh − Σβᵢeᵢ with 1 <= α <= bound and square zero, in
    lexicographic order.

    Each coordinate is only limited by the square still to place, so the
    table does not depend on any class the witness should be orthogonal to.
    """
    if b_minus < 0:
        raise ValueError(f"b_minus must be non-negative, got {b_minus}.")
    if bound < 1:
        raise ValueError(f"The search bound must be positive, got {bound}.")
    return [
        HomClass(tuple(int(c) for c in row))
        for row in _isotropic_table(b_minus, bound)
    ]


###########
# private #
###########


def _search_pruned(
    k: tuple[int, ...], bound: int, n_workers: int
) -> tuple[int, ...] | None:
    alphas = list(range(1, bound + 1))
    if n_workers == 1:
        return _search_alphas(k, bound, alphas)

    chunk_size = math.ceil(len(alphas) / n_workers)
    chunks = [
        alphas[i : i + chunk_size]
        for i in range(0, len(alphas), chunk_size)
    ]
    logger.debug(
        f"Splitting the isotropic search over {len(chunks)} partitions."
    )
    with ProcessPoolExecutor(max_workers=n_workers) as executor:
        results = list(
            executor.map(
                _search_alphas,
                [k] * len(chunks),
                [bound] * len(chunks),
                chunks,
            )
        )
    # chunks are ordered, so the first hit is the global first
    return next((r for r in results if r is not None), None)


def _search_alphas(
    k: tuple[int, ...], bound: int, alphas: list[int]
) -> tuple[int, ...] | None:
    k_alpha, k_betas = k[0], k[1:]
    # tails[j] = Σ_{i >= j} k_betas[i]²
    tails = [0] * (len(k_betas) + 1)
    for j in range(len(k_betas) - 1, -1, -1):
        tails[j] = tails[j + 1] + k_betas[j] ** 2

    for alpha in alphas:
        witness = next(
            _extend(k_betas, tails, bound, alpha**2, k_alpha * alpha, ()),
            None,
        )
        if witness is not None:
            return (alpha, *witness)
    return None


def _extend(
    k_betas: tuple[int, ...],
    tails: list[int],
    bound: int,
    remaining: int,
    residual: int,
    prefix: tuple[int, ...],
) -> Iterator[tuple[int, ...]]:
    # remaining: squares still to place, residual: Σ kᵢbᵢ still owed
    j = len(prefix)
    if j == len(k_betas):
        if remaining == 0 and residual == 0:
            yield prefix
        return
    if residual * residual > tails[j] * remaining:
        return
    if remaining == 0:
        if residual == 0:
            yield prefix + (0,) * (len(k_betas) - j)
        return

    reach = min(bound, math.isqrt(remaining))
    for b in range(-reach, reach + 1):
        yield from _extend(
            k_betas,
            tails,
            bound,
            remaining - b * b,
            residual - k_betas[j] * b,
            prefix + (b,),
        )


def _search_exhaustive(
    k: tuple[int, ...], bound: int
) -> tuple[int, ...] | None:
    largest = max(bound, *(abs(c) for c in k))
    if len(k) * largest * largest >= 2**62:
        raise OverflowError("Coefficients too large for the isotropic table.")
    table = _isotropic_table(len(k) - 1, bound)
    if len(table) == 0:
        return None
    gram = lattice_of(HomClass(k)).gram.astype(np.int64)
    pairings = table @ (gram @ np.array(k, dtype=np.int64))
    hits = np.flatnonzero(pairings == 0)
    if hits.size == 0:
        return None
    return tuple(int(c) for c in table[hits[0]])


@functools.cache
def _isotropic_table(b_minus: int, bound: int) -> npt.NDArray[np.int64]:
    rows: list[tuple[int, ...]] = []
    for alpha in range(1, bound + 1):
        for betas in _sphere(b_minus, alpha**2, ()):
            rows.append((alpha, *betas))
            if len(rows) > MAX_BOX_POINTS:
                raise ValueError(
                    f"More than {MAX_BOX_POINTS} isotropic classes below "
                    f"bound {bound}; use the pruned strategy."
                )
    logger.debug(
        f"{len(rows)} isotropic classes for b_minus={b_minus}, "
        f"bound={bound}."
    )
    table = np.array(rows, dtype=np.int64).reshape(-1, b_minus + 1)
    table.flags.writeable = False
    return table


def _sphere(
    size: int, remaining: int, prefix: tuple[int, ...]
) -> Iterator[tuple[int, ...]]:
    # integer points of length `size` with Σbᵢ² = remaining
    if len(prefix) == size:
        if remaining == 0:
            yield prefix
        return
    reach = math.isqrt(remaining)
    for b in range(-reach, reach + 1):
        yield from _sphere(size, remaining - b * b, prefix + (b,))


def _search_box(k: tuple[int, ...], bound: int) -> tuple[int, ...] | None:
    rank = len(k)
    n_points = bound * (2 * bound + 1) ** (rank - 1)
    if n_points > MAX_BOX_POINTS:
        raise ValueError(
            f"The dense box has {n_points} points, more than "
            f"{MAX_BOX_POINTS}; use the pruned strategy."
        )
    # int64 is exact as long as every product stays far from 2**63
    largest = max(bound, *(abs(c) for c in k))
    if rank * largest * largest >= 2**62:
        raise OverflowError("Coefficients too large for the dense box.")

    gram = lattice_of(HomClass(k)).gram.astype(np.int64)
    axes = [np.arange(1, bound + 1, dtype=np.int64)] + [
        np.arange(-bound, bound + 1, dtype=np.int64)
    ] * (rank - 1)
    # "ij" indexing flattens in lexicographic order
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(
        -1, rank
    )
    squares = np.einsum("ij,jk,ik->i", grid, gram, grid)
    pairings = grid @ gram @ np.array(k, dtype=np.int64)
    hits = np.flatnonzero((squares == 0) & (pairings == 0))
    if hits.size == 0:
        return None
    return tuple(int(c) for c in grid[hits[0]])
