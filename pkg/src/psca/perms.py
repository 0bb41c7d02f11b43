"""Permutations of [n], k-sequences, and exact coverage counting.

Conventions used everywhere in this package:

- A permutation of [n] is a tuple of the integers 1..n, each exactly once,
  in word notation: ``perm[i]`` is the image of position ``i + 1``.
- A k-sequence is a tuple of k distinct integers from 1..n.  The set of all
  of them has size n·(n-1)···(n-k+1); each one gets a dense rank (see
  :func:`rank_sequence`) used to index coverage tables.
- Arrays of permutations are multisets: duplicates are allowed and counted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Iterator

import numpy as np

from psca import kernels
from psca.errors import InputError, ResourceLimitError

Perm = tuple[int, ...]
Seq = tuple[int, ...]


def falling(n: int, k: int) -> int:
    """n·(n-1)···(n-k+1), the number of k-sequences over [n]."""
    return math.perm(n, k)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def reverse(perm: Perm) -> Perm:
    return perm[::-1]


def inverse(perm: Perm) -> Perm:
    inv = [0] * len(perm)
    for pos, sym in enumerate(perm):
        inv[sym - 1] = pos + 1
    return tuple(inv)


def all_perms(n: int) -> list[Perm]:
    """All permutations of [n] in lexicographic order."""
    return [tuple(p) for p in permutations(range(1, n + 1))]


def validate_perm(perm: Iterable[int], n: int) -> Perm:
    """Return ``perm`` as a tuple after checking it is a permutation of [n]."""
    word = tuple(perm)
    if len(word) != n or sorted(word) != list(range(1, n + 1)):
        raise InputError(f"not a permutation of 1..{n}: {word!r}")
    return word


def validate_sequence(seq: Iterable[int], n: int, k: int | None = None) -> Seq:
    """Return ``seq`` as a tuple after checking it is a sequence of distinct symbols in 1..n."""
    s = tuple(seq)
    if k is not None and len(s) != k:
        raise InputError(f"expected a sequence of length {k}, got {s!r}")
    if len(set(s)) != len(s) or any(not 1 <= x <= n for x in s):
        raise InputError(f"not a sequence of distinct symbols in 1..{n}: {s!r}")
    return s


def rank_sequence(seq: Seq, n: int) -> int:
    """Dense rank of a k-sequence among all k-sequences over [n].

    Mixed-radix over falling-factorial place values: digit i is the symbol's
    position among the symbols not used by earlier entries.

    >>> [rank_sequence((a, b), 3) for a, b in [(1,2),(1,3),(2,1),(2,3),(3,1),(3,2)]]
    [0, 1, 2, 3, 4, 5]
    """
    k = len(seq)
    rank = 0
    place = falling(n - 1, k - 1)
    for i, s in enumerate(seq):
        d = s - 1
        for t in seq[:i]:
            if t < s:
                d -= 1
        rank += d * place
        if i + 1 < k:
            place //= n - 1 - i
    return rank


def unrank_sequence(rank: int, n: int, k: int) -> Seq:
    """Inverse of :func:`rank_sequence`."""
    digits = []
    place = falling(n - 1, k - 1)
    for i in range(k):
        digits.append(rank // place)
        rank %= place
        if i + 1 < k:
            place //= n - 1 - i
    out: list[int] = []
    for d in digits:
        remaining = [s for s in range(1, n + 1) if s not in out]
        out.append(remaining[d])
    return tuple(out)


def is_subsequence(kappa: Seq, sigma: Perm) -> bool:
    """True iff kappa's symbols occur in sigma in the same relative order.

    Single left-to-right scan, O(len(sigma)).
    """
    n = len(sigma)
    if any(not 1 <= s <= n for s in kappa):
        raise InputError(f"sequence {kappa!r} uses symbols outside 1..{n}")
    it = iter(sigma)
    return all(s in it for s in kappa)


def covered_sequences(perm: Perm, k: int) -> Iterator[Seq]:
    """The math.comb(n, k) k-sequences covered by one permutation.

    Every k-subset of positions induces exactly one covered k-sequence.
    """
    for positions in combinations(range(len(perm)), k):
        yield tuple(perm[p] for p in positions)


@dataclass(frozen=True)
class PermutationArray:
    """A multiset of permutations of [n] (order kept, duplicates counted)."""

    n: int
    perms: tuple[Perm, ...]

    @classmethod
    def from_rows(cls, n: int, rows: Iterable[Iterable[int]]) -> "PermutationArray":
        return cls(n, tuple(validate_perm(row, n) for row in rows))

    def __len__(self) -> int:
        return len(self.perms)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.perms)

    def to_numpy(self) -> np.ndarray:
        """(m, n) int32 array of 0-based symbols, for the counting kernels."""
        return np.asarray(self.perms, dtype=np.int32) - 1


@dataclass(frozen=True)
class CoverageReport:
    """Exact per-sequence coverage multiplicities of an array, summarized."""

    n: int
    k: int
    total_sequences: int
    min_cov: int
    max_cov: int
    histogram: dict[int, int]
    uniform_lambda: int | None
    witness_uncovered: tuple[Seq, ...] = field(default=())
    witness_overcovered: tuple[Seq, ...] = field(default=())

    def is_covering(self) -> bool:
        return self.min_cov >= 1


def _check_k(n: int, k: int) -> None:
    if not 2 <= k <= n:
        raise InputError(f"k must satisfy 2 <= k <= n, got k={k}, n={n}")


def coverage_counts(
    X: PermutationArray, k: int, *, mem_cap_mb: int = 512, threads: int = 1
) -> np.ndarray:
    """uint32 array of length falling(n, k): coverage count per ranked k-sequence."""
    _check_k(X.n, k)
    table_bytes = falling(X.n, k) * 4
    cap = mem_cap_mb * 1024 * 1024
    if table_bytes > cap:
        raise ResourceLimitError(
            f"coverage table for n={X.n}, k={k} needs {table_bytes} bytes "
            f"(cap {cap} bytes); raise mem_cap_mb to proceed",
            required_bytes=table_bytes,
            cap_bytes=cap,
        )
    if len(X) >= 2**32:
        raise ResourceLimitError("array too large for 32-bit coverage counters")
    return kernels.coverage_counts(X.to_numpy(), k, threads=threads)


def coverage_report(
    X: PermutationArray,
    k: int,
    *,
    witness_cap: int = 16,
    mem_cap_mb: int = 512,
    threads: int = 1,
) -> CoverageReport:
    """Count, for every k-sequence over [n], how many members of X cover it.

    Enumerates the math.comb(n, k) position subsets of each permutation and
    accumulates into a dense table, so the cost is |X|·math.comb(n, k) rather
    than testing all falling(n, k) sequences against every permutation.
    """
    counts = coverage_counts(X, k, mem_cap_mb=mem_cap_mb, threads=threads)
    return summarize_counts(counts, X.n, k, witness_cap=witness_cap)


def summarize_counts(
    counts: np.ndarray, n: int, k: int, *, witness_cap: int = 16
) -> CoverageReport:
    """Build a CoverageReport from a per-rank coverage table."""
    values, freqs = np.unique(counts, return_counts=True)
    histogram = {int(v): int(c) for v, c in zip(values, freqs)}
    min_cov = int(values[0])
    max_cov = int(values[-1])
    uniform = min_cov if min_cov == max_cov else None

    uncovered: tuple[Seq, ...] = ()
    overcovered: tuple[Seq, ...] = ()
    if min_cov == 0 and witness_cap > 0:
        ranks = np.flatnonzero(counts == 0)[:witness_cap]
        uncovered = tuple(unrank_sequence(int(r), n, k) for r in ranks)
    if uniform is None and witness_cap > 0:
        ranks = np.flatnonzero(counts == max_cov)[:witness_cap]
        overcovered = tuple(unrank_sequence(int(r), n, k) for r in ranks)

    return CoverageReport(
        n=n,
        k=k,
        total_sequences=falling(n, k),
        min_cov=min_cov,
        max_cov=max_cov,
        histogram=histogram,
        uniform_lambda=uniform,
        witness_uncovered=uncovered,
        witness_overcovered=overcovered,
    )


def _translate(X: PermutationArray, sigma: Perm) -> PermutationArray:
    return PermutationArray(
        X.n, tuple(tuple(sigma[s - 1] for s in perm) for perm in X.perms)
    )


def compose_right(X: PermutationArray, sigma: Perm) -> PermutationArray:
    """Right-translate every member by sigma: position i maps to sigma(perm(i)).

    Composition is read left to right (perm first, then sigma), which is the
    convention that the known lambda=2 construction on five symbols relies on.
    """
    sigma = validate_perm(sigma, X.n)
    return _translate(X, sigma)


def relabel(X: PermutationArray, g: Perm) -> PermutationArray:
    """Rename symbol s to g(s) in every member.

    Relabeling maps covered sequences bijectively, so the coverage histogram
    of the result equals that of X for every k.
    """
    g = validate_perm(g, X.n)
    return _translate(X, g)


def restrict_symbols(X: PermutationArray, n_new: int) -> PermutationArray:
    """Delete all symbols larger than n_new from every member.

    Dropping the largest symbol from a perfect array keeps it perfect with
    the same multiplicity, so this maps a PSCA(n, k) to a PSCA(n_new, k).
    """
    if not 1 <= n_new <= X.n:
        raise InputError(f"n_new must be in 1..{X.n}, got {n_new}")
    rows = tuple(tuple(s for s in perm if s <= n_new) for perm in X.perms)
    return PermutationArray(n_new, rows)
