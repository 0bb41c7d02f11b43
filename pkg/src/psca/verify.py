"""Certificate-grade verification of claimed (n, k, lambda) properties.

A perfect claim is judged in two steps: the size identity |X| = lambda·k!
must hold (each permutation covers C(n, k) of the k!·C(n, k) sequences, so
uniform coverage forces exactly that size), and then every sequence's exact
multiplicity must equal lambda.  A covering-only claim just needs every
sequence covered at least once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from psca.errors import InputError
from psca.perms import (
    CoverageReport,
    PermutationArray,
    Seq,
    coverage_counts,
    summarize_counts,
    unrank_sequence,
)


@dataclass(frozen=True)
class Certificate:
    """Pass/fail judgment of an array against a declared claim."""

    n: int
    k: int
    claim_lambda: int | None  # None means covering-only
    passed: bool
    reason: str
    report: CoverageReport | None
    failures: tuple[tuple[Seq, int], ...]  # (sequence, its multiplicity)
    implied_lambda: int | None  # |X|/k! when that is an integer

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


def certify(
    X: PermutationArray,
    k: int,
    lam: int | None = None,
    *,
    witness_cap: int = 16,
    mem_cap_mb: int = 512,
    threads: int = 1,
) -> Certificate:
    """Certify X as a PSCA(n, k) with multiplicity ``lam``, or as covering.

    ``lam=None`` checks the covering-only property (every sequence covered
    at least once).  Failures list up to ``witness_cap`` sequences with
    their actual multiplicities.
    """
    if lam is not None and lam < 1:
        raise InputError(f"claimed multiplicity must be >= 1, got {lam}")
    kfact = math.factorial(k)
    implied = len(X) // kfact if len(X) % kfact == 0 else None

    if lam is not None and len(X) != lam * kfact:
        return Certificate(
            n=X.n,
            k=k,
            claim_lambda=lam,
            passed=False,
            reason=(
                f"size not lambda*k!: |X| = {len(X)} but a multiplicity-{lam} "
                f"array on {X.n} symbols must have {lam}*{k}! = {lam * kfact} members"
            ),
            report=None,
            failures=(),
            implied_lambda=implied,
        )

    counts = coverage_counts(X, k, mem_cap_mb=mem_cap_mb, threads=threads)
    report = summarize_counts(counts, X.n, k, witness_cap=witness_cap)

    if lam is None:
        passed = report.min_cov >= 1
        reason = (
            "every sequence is covered at least once"
            if passed
            else f"{report.histogram.get(0, 0)} sequences are uncovered"
        )
        bad = np.flatnonzero(counts == 0)[:witness_cap]
    else:
        passed = report.uniform_lambda == lam
        reason = (
            f"every sequence is covered exactly {lam} times"
            if passed
            else (
                f"coverage ranges {report.min_cov}..{report.max_cov}, "
                f"not uniformly {lam}"
            )
        )
        bad = np.flatnonzero(counts != lam)[:witness_cap]

    failures = tuple(
        (unrank_sequence(int(r), X.n, k), int(counts[int(r)])) for r in bad
    ) if not passed else ()

    return Certificate(
        n=X.n,
        k=k,
        claim_lambda=lam,
        passed=passed,
        reason=reason,
        report=report,
        failures=failures,
        implied_lambda=implied,
    )
