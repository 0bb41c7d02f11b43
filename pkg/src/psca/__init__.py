"""Perfect sequence covering arrays: constructions, verification, bounds, search.

A PSCA(n, k) is a multiset of permutations of [n] in which every sequence of
k distinct symbols appears as a subsequence of exactly lambda members.  This
package builds the known small arrays and the recursive order-squaring
construction, certifies claimed multiplicities exactly, computes the
rank-based lower bounds and quasi-linear upper bound for triples, and runs
exhaustive symmetry-reduced searches for small parameters.
"""

from psca.errors import InputError, PscaError, ResourceLimitError
from psca.perms import (
    CoverageReport,
    PermutationArray,
    compose_right,
    coverage_report,
    is_subsequence,
    relabel,
    restrict_symbols,
)

__version__ = "0.1.0"

__all__ = [
    "CoverageReport",
    "InputError",
    "PermutationArray",
    "PscaError",
    "ResourceLimitError",
    "compose_right",
    "coverage_report",
    "is_subsequence",
    "relabel",
    "restrict_symbols",
    "__version__",
]
