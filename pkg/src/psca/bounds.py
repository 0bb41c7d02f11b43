"""Lower and upper bounds on the minimum multiplicity g(n, k).

g(n, k) is the smallest lambda for which a PSCA(n, k) exists.  Computable
bounds implemented here:

- lower: the rank argument gives g(n, 2t) >= (C(n,t) - C(n,t-1)) / (2t)! for
  prime t, and chaining g(n, k) >= g(n, k-1)/k turns any such bound at an
  even j <= k into g(n, k) >= (C(n,j/2) - C(n,j/2-1)) / k!.  For k = 3 the
  Gram-core determinant gives the linear bound g(n, 3) >= n/6.  All fractions
  are rounded up since g is an integer.
- upper: n!/k! always (all permutations), and for k = 3 the multiplicity of
  the iterated squaring construction on the smallest power of 3 that is >= n,
  which is quasi-linear in n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from psca.constructions import multiplicity_for_power
from psca.errors import InputError
from psca.fields import is_prime


@dataclass(frozen=True)
class LowerBound:
    value: int
    winner: str
    trace: tuple[str, ...]


@dataclass(frozen=True)
class TripleUpperBound:
    """The squaring-construction bound for k = 3 with its certificates."""

    n: int
    n_prime: int  # smallest power of 3 that is >= n
    r: int
    value: int  # exact recurrence value lam(r)
    cert_t: int  # ceil(log2 r)
    cert_value: int  # 7^t * 3^r, always >= value
    closed_form: int | None  # 2^(t-1) (3^r - 1) when r = 2^t


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    lower: int
    lower_trace: tuple[str, ...]
    upper: int
    upper_trace: tuple[str, ...]


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def lower_bound_g(n: int, k: int) -> LowerBound:
    """Best computable lower bound on g(n, k), with a derivation trace."""
    if not 2 <= k <= n:
        raise InputError(f"need 2 <= k <= n, got k={k}, n={n}")
    candidates: list[tuple[int, str]] = [(1, "trivial: g >= 1")]
    if k == 3:
        candidates.append(
            (_ceil_div(n, 6), f"Gram-core determinant: g({n},3) >= {n}/6")
        )
    kfact = math.factorial(k)
    for j in range(4, k + 1, 2):
        t = j // 2
        if not is_prime(t):
            continue
        numerator = math.comb(n, t) - math.comb(n, t - 1)
        value = max(1, _ceil_div(numerator, kfact))
        candidates.append(
            (
                value,
                f"rank bound at t={t} chained from k={j} down to k={k}: "
                f"ceil((C({n},{t}) - C({n},{t - 1}))/{k}!)",
            )
        )
    best_value, winner = max(candidates, key=lambda c: c[0])
    return LowerBound(
        value=best_value,
        winner=winner,
        trace=tuple(f"{v}: {d}" for v, d in candidates),
    )


def upper_bound_g3(n: int) -> TripleUpperBound:
    """The squaring-construction upper bound on g(n, 3)."""
    if n < 3:
        raise InputError(f"need n >= 3, got {n}")
    r = 1
    while 3**r < n:
        r += 1
    value = multiplicity_for_power(r)
    cert_t = (r - 1).bit_length()  # ceil(log2 r)
    closed = None
    if r >= 2 and r & (r - 1) == 0:
        closed = 2 ** (cert_t - 1) * (3**r - 1)
    return TripleUpperBound(
        n=n,
        n_prime=3**r,
        r=r,
        value=value,
        cert_t=cert_t,
        cert_value=7**cert_t * 3**r,
        closed_form=closed,
    )


def bound_report(n: int, k: int) -> BoundReport:
    """Both bounds for g(n, k) as one report."""
    lower = lower_bound_g(n, k)
    upper_candidates: list[tuple[int, str]] = [
        (
            math.factorial(n) // math.factorial(k),
            f"trivial: all of S_{n} is perfect with multiplicity {n}!/{k}!",
        )
    ]
    if k == 3:
        triple = upper_bound_g3(n)
        upper_candidates.append(
            (
                triple.value,
                f"iterated squaring construction on [{triple.n_prime}] restricted "
                f"to [{n}]: multiplicity {triple.value} "
                f"(<= 7^{triple.cert_t}·3^{triple.r} = {triple.cert_value})",
            )
        )
    upper_value, _ = min(upper_candidates, key=lambda c: c[0])
    report = BoundReport(
        n=n,
        k=k,
        lower=lower.value,
        lower_trace=lower.trace,
        upper=upper_value,
        upper_trace=tuple(f"{v}: {d}" for v, d in upper_candidates),
    )
    if not 1 <= report.lower <= report.upper:
        raise AssertionError(f"bound inversion for n={n}, k={k}: {report}")
    return report
