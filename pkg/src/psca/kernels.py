"""Kernel backend selection: compiled extension when available, pure Python otherwise.

Set ``PSCA_PURE_PYTHON=1`` in the environment to force the fallback (used by
the benchmark and the backend-equivalence tests).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

if os.environ.get("PSCA_PURE_PYTHON"):
    from psca import _kernels_py as _impl
else:
    try:
        from psca import _kernels_c as _impl  # type: ignore[no-redef]
    except ImportError:
        from psca import _kernels_py as _impl  # type: ignore[no-redef]


def backend() -> str:
    """Name of the active kernel backend: "cython" or "python"."""
    return _impl.BACKEND


def _place_values(n: int, k: int) -> np.ndarray:
    place = [1] * k
    for i in range(k - 2, -1, -1):
        place[i] = place[i + 1] * (n - 1 - i)
    return np.asarray(place, dtype=np.int64)


def coverage_counts(perms: np.ndarray, k: int, threads: int = 1) -> np.ndarray:
    """Coverage count per ranked k-sequence for an (m, n) array of 0-based rows.

    Results are independent of ``threads``: chunk tables are merged by
    addition, which commutes.
    """
    perms = np.ascontiguousarray(perms, dtype=np.int32)
    m, n = perms.shape
    place = _place_values(n, k)
    size = int(place[0]) * n if k >= 1 else 1

    if threads <= 1 or m < 2 * threads:
        table = np.zeros(size, dtype=np.uint32)
        _impl.accumulate_coverage(perms, place, table, k)
        return table

    chunks = np.array_split(perms, threads)
    tables = [np.zeros(size, dtype=np.uint32) for _ in chunks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [
            pool.submit(_impl.accumulate_coverage, chunk, place, tbl, k)
            for chunk, tbl in zip(chunks, tables)
        ]
        for fut in futures:
            fut.result()
    total = np.zeros(size, dtype=np.uint64)
    for tbl in tables:
        total += tbl
    return total.astype(np.uint32)
