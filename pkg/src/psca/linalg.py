"""Exact integer and mod-p linear algebra for the rank-based bounds.

Everything here is exact: rank and determinant use fraction-free (Bareiss)
elimination over Python integers, mod-p ranks reduce first and eliminate
over GF(p).  No floating point anywhere.

The matrices of interest:

- the 0/1 incidence matrix of t-sequences against an array's members;
- its Gram matrix, whose entry at (kappa, sigma) counts members covering
  both sequences;
- the 0/1 inclusion matrix of t-subsets against r-subsets of [n], whose
  mod-p rank has a closed form (:func:`subset_inclusion_rank`);
- the normalized Gram core on the pairs (1,n), ..., (n-1,n), (n,1), whose
  determinant 3(n+1) certifies the linear lower bound for triples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from psca.errors import InputError, ResourceLimitError
from psca.fields import is_prime
from psca.perms import PermutationArray, covered_sequences, falling, rank_sequence, unrank_sequence

Label = tuple[int, ...]


@dataclass
class IntMatrix:
    """Dense exact-integer matrix with optional row/column labels."""

    entries: list[list[int]]
    row_labels: tuple[Label, ...] | None = None
    col_labels: tuple[Label, ...] | None = None

    def __post_init__(self) -> None:
        if self.entries and any(len(row) != len(self.entries[0]) for row in self.entries):
            raise InputError("ragged matrix")
        for labels, count, axis in (
            (self.row_labels, self.rows, "row"),
            (self.col_labels, self.cols, "column"),
        ):
            if labels is not None:
                if len(labels) != count:
                    raise InputError(f"{axis} label count does not match shape")
                if len(set(labels)) != len(labels):
                    raise InputError(f"duplicate {axis} labels")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def row_index(self, label: Label) -> int:
        if self.row_labels is None:
            raise InputError("matrix has no row labels")
        return self.row_labels.index(label)

    def col_index(self, label: Label) -> int:
        if self.col_labels is None:
            raise InputError("matrix has no column labels")
        return self.col_labels.index(label)

    def to_numpy(self) -> np.ndarray:
        arr = np.asarray(self.entries, dtype=np.int64)
        return arr

    @classmethod
    def identity(cls, m: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(m)] for i in range(m)])


def incidence_matrix(
    X: PermutationArray, t: int, *, mem_cap_mb: int = 512
) -> IntMatrix:
    """0/1 matrix: rows = all t-sequences in rank order, columns = members of X.

    Entry 1 iff the row's sequence is a subsequence of the column's member.
    Column sums are all math.comb(n, t).
    """
    n = X.n
    if not 1 <= t <= n:
        raise InputError(f"t must be in 1..{n}, got {t}")
    num_rows = falling(n, t)
    cap = mem_cap_mb * 1024 * 1024
    if num_rows * len(X) * 8 > cap:
        raise ResourceLimitError(
            f"incidence matrix {num_rows}x{len(X)} exceeds cap",
            required_bytes=num_rows * len(X) * 8,
            cap_bytes=cap,
        )
    entries = [[0] * len(X) for _ in range(num_rows)]
    for col, perm in enumerate(X.perms):
        for seq in covered_sequences(perm, t):
            entries[rank_sequence(seq, n)][col] = 1
    labels = tuple(unrank_sequence(i, n, t) for i in range(num_rows))
    return IntMatrix(entries, row_labels=labels, col_labels=None)


def gram(A: IntMatrix) -> IntMatrix:
    """A·Aᵀ with exact integer entries; labels inherited from A's rows."""
    max_abs = max((abs(e) for row in A.entries for e in row), default=0)
    # int64 matmul is exact as long as the dot products cannot overflow
    if A.cols * max_abs * max_abs < 2**62:
        arr = A.to_numpy()
        product = (arr @ arr.T).tolist()
    else:
        product = [
            [sum(a * b for a, b in zip(row_i, row_j)) for row_j in A.entries]
            for row_i in A.entries
        ]
    return IntMatrix(
        [[int(e) for e in row] for row in product],
        row_labels=A.row_labels,
        col_labels=A.row_labels,
    )


def divide_by_gcd(M: IntMatrix) -> tuple[IntMatrix, int]:
    """Divide every entry by the gcd of all entries; returns (matrix, gcd).

    The zero matrix is returned unchanged with gcd 0.
    """
    g = 0
    for row in M.entries:
        for e in row:
            g = math.gcd(g, e)
    if g <= 1:
        return M, g
    return (
        IntMatrix(
            [[e // g for e in row] for row in M.entries],
            row_labels=M.row_labels,
            col_labels=M.col_labels,
        ),
        g,
    )


def _exact_div(a: int, b: int) -> int:
    q, rem = divmod(a, b)
    if rem:
        raise AssertionError("fraction-free elimination produced a non-exact division")
    return q


def _fraction_free_eliminate(entries: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """Bareiss elimination; returns (rank, sign, last_pivot).

    Deterministic pivoting: first nonzero entry in column order.  Divisions
    by the previous pivot are exact (checked).
    """
    m = [list(row) for row in entries]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    sign = 1
    prev = 1
    last_pivot = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
            sign = -sign
        pivot = m[r][c]
        for i in range(r + 1, rows):
            factor = m[i][c]
            row_i = m[i]
            row_r = m[r]
            for j in range(c + 1, cols):
                row_i[j] = _exact_div(pivot * row_i[j] - factor * row_r[j], prev)
            row_i[c] = 0
        prev = pivot
        last_pivot = pivot
        r += 1
    return r, sign, last_pivot


def rank_exact(M: IntMatrix) -> int:
    """Rank over the rationals, by fraction-free elimination."""
    return _fraction_free_eliminate(M.entries)[0]


def det_exact(M: IntMatrix) -> int:
    """Exact determinant (square matrices only)."""
    if M.rows != M.cols:
        raise InputError(f"determinant needs a square matrix, got {M.rows}x{M.cols}")
    if M.rows == 0:
        return 1
    rank, sign, last_pivot = _fraction_free_eliminate(M.entries)
    if rank < M.rows:
        return 0
    return sign * last_pivot


def rank_mod_p(M: IntMatrix, p: int) -> int:
    """Rank of M reduced mod p, by Gaussian elimination over GF(p)."""
    if not is_prime(p):
        raise InputError(f"p={p} is not prime")
    if M.rows == 0 or M.cols == 0:
        return 0
    a = np.array([[e % p for e in row] for row in M.entries], dtype=np.int64)
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, c]), -1, p)
        a[rank] = (a[rank] * inv) % p
        below = np.nonzero(a[rank + 1 :, c])[0]
        if below.size:
            idx = rank + 1 + below
            a[idx] = (a[idx] - np.outer(a[idx, c], a[rank])) % p
        rank += 1
    return rank


def _colex_subsets(size: int, n: int) -> list[tuple[int, ...]]:
    return sorted(combinations(range(1, n + 1), size), key=lambda s: s[::-1])


def inclusion_matrix(t: int, r: int, n: int) -> IntMatrix:
    """0/1 matrix of t-subsets (rows) against r-subsets (cols) of [n], colex order.

    Entry 1 iff the row's subset is contained in the column's subset.
    """
    _check_inclusion_params(t, r, n)
    row_sets = _colex_subsets(t, n)
    col_sets = _colex_subsets(r, n)
    entries = [
        [1 if set(T) <= set(R) else 0 for R in col_sets] for T in row_sets
    ]
    return IntMatrix(entries, row_labels=tuple(row_sets), col_labels=tuple(col_sets))


def subset_inclusion_rank(t: int, r: int, n: int, p: int) -> int:
    """Closed-form rank of the inclusion matrix over GF(p).

    Sums C(n, i) - C(n, i-1) over the i in 0..t with C(r-i, t-i) nonzero
    mod p; C(n, -1) counts as 0.  Must agree with eliminating the explicit
    matrix, which the tests check across the whole small-parameter range.
    """
    _check_inclusion_params(t, r, n)
    if not is_prime(p):
        raise InputError(f"p={p} is not prime")
    total = 0
    for i in range(t + 1):
        if math.comb(r - i, t - i) % p != 0:
            total += math.comb(n, i) - (math.comb(n, i - 1) if i >= 1 else 0)
    return total


def _check_inclusion_params(t: int, r: int, n: int) -> None:
    if not 1 <= t <= min(r, n - r):
        raise InputError(
            f"need 1 <= t <= min(r, n-r); got t={t}, r={r}, n={n}"
        )


def pair_core_matrix(n: int) -> IntMatrix:
    """The normalized Gram core on pairs (1,n), ..., (n-1,n), (n,1).

    For any perfect triple-coverage array on [n], the Gram matrix of ordered
    pairs restricted to these rows and columns, divided by the multiplicity,
    is exactly this matrix: 3 on the diagonal, 2 between pairs sharing the
    endpoint n, 1 between (i,n) and (n,1) for i >= 2, and 0 between (1,n)
    and (n,1).  Its determinant is 3(n+1).
    """
    if n < 3:
        raise InputError(f"n must be >= 3, got {n}")
    labels = _pair_core_labels(n)
    entries = [[0] * n for _ in range(n)]
    for i in range(n):
        entries[i][i] = 3
    for i in range(n - 1):
        for j in range(n - 1):
            if i != j:
                entries[i][j] = 2
    for i in range(1, n - 1):
        entries[i][n - 1] = entries[n - 1][i] = 1
    entries[0][n - 1] = entries[n - 1][0] = 0
    return IntMatrix(entries, row_labels=labels, col_labels=labels)


def _pair_core_labels(n: int) -> tuple[Label, ...]:
    return tuple((i, n) for i in range(1, n)) + ((n, 1),)


def pair_core_from_array(X: PermutationArray, lam: int) -> IntMatrix:
    """Extract the pair core from an actual array's Gram matrix at t = 2.

    ``lam`` is the array's (verified) multiplicity at k = 3; entries must
    divide exactly by it or the array was not perfect as claimed.
    """
    if lam < 1:
        raise InputError(f"multiplicity must be >= 1, got {lam}")
    B = gram(incidence_matrix(X, 2))
    assert B.row_labels is not None
    idx = [B.row_index(label) for label in _pair_core_labels(X.n)]
    entries = []
    for i in idx:
        row = []
        for j in idx:
            value = B.entries[i][j]
            if value % lam:
                raise InputError(
                    f"Gram entry {value} at {B.row_labels[i]},{B.row_labels[j]} "
                    f"is not a multiple of the claimed multiplicity {lam}"
                )
            row.append(value // lam)
        entries.append(row)
    labels = _pair_core_labels(X.n)
    return IntMatrix(entries, row_labels=labels, col_labels=labels)
