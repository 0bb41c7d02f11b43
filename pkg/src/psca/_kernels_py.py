"""Pure-Python coverage kernel, the fallback when the compiled one is absent.

Semantics must stay bit-identical to ``_kernels_c``: the kernel equivalence
tests compare both backends entry for entry.
"""

from itertools import combinations

BACKEND = "python"


def accumulate_coverage(perms, place, table, k):
    """Add the coverage of every row of ``perms`` into ``table``.

    perms: (m, n) int32 array of 0-based symbols.
    place: length-k falling-factorial place values.
    table: uint32 array of length n·(n-1)···(n-k+1), modified in place.
    """
    m, n = perms.shape
    pv = [int(p) for p in place]
    for row in range(m):
        word = perms[row].tolist()
        for comb in combinations(range(n), k):
            idx = 0
            for i in range(k):
                s = word[comb[i]]
                d = s
                for j in range(i):
                    if word[comb[j]] < s:
                        d -= 1
                idx += d * pv[i]
            table[idx] += 1
