"""Known perfect arrays and the order-squaring construction for triples.

The catalog holds the explicit small arrays: the 24-permutation PSCA(5, 4)
with multiplicity 1, the six-permutation maximum-coverage set on [5] whose
union with a translate forms the PSCA(5, 3) with multiplicity 2, and the
trivial PSCA given by all of S_n.

``square_construction`` lifts a PSCA(n, 3) with multiplicity lam to a
PSCA(n^2, 3) with multiplicity 2(n+1)·lam using an affine plane of order n:
each output permutation walks the blocks of one parallel class in the order
a member permutation dictates, permuting each block internally by the same
member (and, for the second half of the output, reversing each block's
run).  Iterating from S_3 gives perfect triple-coverage arrays on 3^r
symbols whose multiplicity is :func:`multiplicity_for_power`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from psca.errors import InputError, ResourceLimitError
from psca.perms import (
    Perm,
    PermutationArray,
    all_perms,
    compose_right,
    coverage_report,
    restrict_symbols,
)
from psca.planes import AffinePlane, affine_plane

_PSCA_5_4_TEXT = """
12345 12543 51423 41523
13524 15342 14325 54132
52134 21453 24135 42513
23514 25341 52431 42315
53124 31452 43512 34125
32154 45321 32451 35421
"""

_MAXCOV_5_3_TEXT = "12345 43215 35214 14523 25413 53412"

_TRANSLATE_SIGMA: Perm = (1, 3, 2, 5, 4)

DEFAULT_CELL_CAP = 2_000_000

CATALOG_NAMES = ("psca_5_4_l1", "psca_5_3_l2", "trivial", "prop1_X", "prop1_Xsigma")


def _parse_words(text: str) -> tuple[Perm, ...]:
    return tuple(tuple(int(ch) for ch in word) for word in text.split())


@dataclass(frozen=True)
class CatalogEntry:
    """A named array with its declared parameters (lam None = no claim)."""

    name: str
    n: int
    k: int
    lam: int | None
    array: PermutationArray


def catalog(name: str, n: int | None = None) -> CatalogEntry:
    """Look up a catalog entry by name; ``trivial`` additionally needs n."""
    if name == "psca_5_4_l1":
        rows = _parse_words(_PSCA_5_4_TEXT)
        return CatalogEntry(name, 5, 4, 1, PermutationArray.from_rows(5, rows))
    if name == "prop1_X":
        rows = _parse_words(_MAXCOV_5_3_TEXT)
        return CatalogEntry(name, 5, 3, None, PermutationArray.from_rows(5, rows))
    if name == "prop1_Xsigma":
        base = catalog("prop1_X").array
        return CatalogEntry(name, 5, 3, None, compose_right(base, _TRANSLATE_SIGMA))
    if name == "psca_5_3_l2":
        x = catalog("prop1_X").array
        x_sigma = catalog("prop1_Xsigma").array
        return CatalogEntry(
            name, 5, 3, 2, PermutationArray(5, x.perms + x_sigma.perms)
        )
    if name == "trivial":
        if n is None or n < 2:
            raise InputError("catalog('trivial') needs n >= 2")
        # perfect at every k <= n with multiplicity n!/k!; declared at k = n
        return CatalogEntry(name, n, n, 1, PermutationArray(n, tuple(all_perms(n))))
    raise InputError(f"unknown catalog name {name!r}; known: {', '.join(CATALOG_NAMES)}")


def square_words(blocks: tuple[tuple[int, ...], ...], sigma: Perm) -> tuple[Perm, Perm]:
    """The straight and block-reversed output words for one (class, member) pair.

    ``blocks`` is one parallel class; block j is visited in position i when
    sigma(i) = j, and inside a block the points (in their sorted order
    a_1 < ... < a_n) are emitted as a_{sigma(1)}, ..., a_{sigma(n)}.
    """
    straight: list[int] = []
    reversed_blocks: list[int] = []
    for j in sigma:
        block = blocks[j - 1]
        run = [block[s - 1] for s in sigma]
        straight.extend(run)
        reversed_blocks.extend(reversed(run))
    return tuple(straight), tuple(reversed_blocks)


def square_construction(
    X: PermutationArray, plane: AffinePlane, *, check: bool = True
) -> PermutationArray:
    """Lift a PSCA(n, 3) to [n^2]; output size is always 2(n+1)|X|.

    With ``check`` (default) the input is first certified to be perfect at
    k = 3; pass check=False to skip the certification for large inputs that
    were already verified.
    """
    n = X.n
    if plane.order != n:
        raise InputError(f"plane order {plane.order} != array ground size {n}")
    if check:
        rep = coverage_report(X, 3)
        if rep.uniform_lambda is None:
            witness, count = (
                (rep.witness_uncovered[0], rep.min_cov)
                if rep.witness_uncovered
                else (rep.witness_overcovered[0], rep.max_cov)
            )
            raise InputError(
                f"input is not a perfect triple-coverage array: sequence {witness} "
                f"is covered {count} times (coverage ranges {rep.min_cov}..{rep.max_cov})"
            )
    straight_half: list[Perm] = []
    reversed_half: list[Perm] = []
    for blocks in plane.classes:
        for sigma in X.perms:
            w, z = square_words(blocks, sigma)
            straight_half.append(w)
            reversed_half.append(z)
    return PermutationArray(n * n, tuple(straight_half + reversed_half))


@lru_cache(maxsize=None)
def multiplicity_for_power(r: int) -> int:
    """Multiplicity of the iterated construction on 3^r symbols.

    lam(1) = 1 and lam(r) = 2·(3^ceil(r/2) + 1)·lam(ceil(r/2)); for r = 2^t
    this closes to 2^(t-1)·(3^r - 1).
    """
    if r < 1:
        raise InputError(f"r must be >= 1, got {r}")
    if r == 1:
        return 1
    half = (r + 1) // 2
    return 2 * (3**half + 1) * multiplicity_for_power(half)


def iterate_to_power(
    r: int, *, check: bool = True, cell_cap: int = DEFAULT_CELL_CAP
) -> PermutationArray:
    """A perfect triple-coverage array on [3^r] with multiplicity lam(r).

    Even r: square the array for r/2 over the plane of order 3^(r/2).
    Odd r > 1: build the array for r + 1 and delete the symbols above 3^r
    (restriction keeps the array perfect with the same multiplicity, and
    lam(r) = lam(r+1) for odd r).
    """
    if r < 1:
        raise InputError(f"r must be >= 1, got {r}")
    # odd r > 1 is built by restricting the array for r + 1, so that is its real cost
    required = _cells(r) if r == 1 or r % 2 == 0 else _cells(r + 1)
    if required > cell_cap:
        raise ResourceLimitError(
            f"array for r={r} needs {required} cells (cap {cell_cap})"
        )
    if r == 1:
        return catalog("trivial", 3).array
    if r % 2 == 1:
        return restrict_symbols(iterate_to_power(r + 1, check=check, cell_cap=cell_cap), 3**r)
    half = iterate_to_power(r // 2, check=check, cell_cap=cell_cap)
    plane = affine_plane(3 ** (r // 2))
    return square_construction(half, plane, check=check)


def _cells(r: int) -> int:
    return 6 * multiplicity_for_power(r) * 3**r
