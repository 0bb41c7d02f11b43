# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled coverage kernel: the inner loop of every coverage count.

Enumerates the k-subsets of positions of each permutation with an odometer
and bumps one dense counter per induced k-sequence.  Runs without the GIL so
chunked calls can share the work across threads.
"""

BACKEND = "cython"

DEF MAX_K = 16


def accumulate_coverage(const int[:, ::1] perms, const long long[::1] place, unsigned int[::1] table, int k):
    """Same contract as the pure backend: add coverage of all rows to table."""
    cdef Py_ssize_t m = perms.shape[0]
    cdef int n = <int> perms.shape[1]
    cdef long long pv[MAX_K]
    cdef int comb[MAX_K]
    cdef int syms[MAX_K]
    cdef long long idx
    cdef Py_ssize_t row
    cdef int i, j, d, s

    if k < 1 or k > n or k > MAX_K:
        raise ValueError(f"k={k} out of range for this kernel (1..min(n, {MAX_K}))")
    for i in range(k):
        pv[i] = place[i]

    with nogil:
        for row in range(m):
            for i in range(k):
                comb[i] = i
            while True:
                idx = 0
                for i in range(k):
                    s = perms[row, comb[i]]
                    syms[i] = s
                    d = s
                    for j in range(i):
                        if syms[j] < s:
                            d -= 1
                    idx += d * pv[i]
                table[<Py_ssize_t> idx] += 1
                # advance the position odometer
                i = k - 1
                while i >= 0 and comb[i] == n - k + i:
                    i -= 1
                if i < 0:
                    break
                comb[i] += 1
                for j in range(i + 1, k):
                    comb[j] = comb[j - 1] + 1
