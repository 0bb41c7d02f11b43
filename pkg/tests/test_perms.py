"""Core permutation/coverage semantics, checked against brute-force oracles."""

import math
import random
from itertools import permutations

import numpy as np
import pytest

from psca import _kernels_py, kernels
from psca.errors import InputError, ResourceLimitError
from psca.perms import (
    PermutationArray,
    all_perms,
    compose_right,
    coverage_counts,
    coverage_report,
    covered_sequences,
    falling,
    identity,
    inverse,
    is_subsequence,
    rank_sequence,
    relabel,
    restrict_symbols,
    reverse,
    unrank_sequence,
    validate_perm,
)


def brute_force_counts(X, k):
    """Independent oracle: test every k-sequence against every member."""
    counts = {}
    for seq in permutations(range(1, X.n + 1), k):
        counts[seq] = sum(1 for perm in X.perms if is_subsequence(seq, perm))
    return counts


def random_array(rng, n, size):
    perms = all_perms(n)
    return PermutationArray(n, tuple(rng.choice(perms) for _ in range(size)))


class TestIsSubsequence:
    def test_prefix(self):
        assert is_subsequence((1, 2, 3), (1, 2, 3, 4, 5))

    def test_block_permuted_word(self):
        assert is_subsequence((4, 9, 2), (4, 9, 2, 5, 7, 3, 6, 8, 1))

    def test_order_violated(self):
        assert not is_subsequence((1, 3, 2), (1, 2, 3, 4, 5))

    def test_symbol_out_of_range(self):
        with pytest.raises(InputError):
            is_subsequence((1, 6), (1, 2, 3, 4, 5))

    def test_each_perm_covers_binom_n_k(self):
        rng = random.Random(7)
        for _ in range(20):
            n = rng.randint(2, 7)
            k = rng.randint(2, n)
            perm = tuple(rng.sample(range(1, n + 1), n))
            covered = sum(
                1 for seq in permutations(range(1, n + 1), k) if is_subsequence(seq, perm)
            )
            assert covered == math.comb(n, k)


class TestRanking:
    def test_roundtrip(self):
        for n, k in [(3, 2), (5, 3), (6, 4), (7, 2)]:
            seen = set()
            for seq in permutations(range(1, n + 1), k):
                r = rank_sequence(seq, n)
                assert 0 <= r < falling(n, k)
                assert unrank_sequence(r, n, k) == seq
                seen.add(r)
            assert len(seen) == falling(n, k)


class TestCoverage:
    def test_matches_brute_force(self):
        rng = random.Random(2024)
        for _ in range(25):
            n = rng.randint(3, 6)
            k = rng.randint(2, min(n, 4))
            X = random_array(rng, n, rng.randint(1, 8))
            counts = coverage_counts(X, k)
            oracle = brute_force_counts(X, k)
            for seq, cov in oracle.items():
                assert counts[rank_sequence(seq, n)] == cov

    def test_backends_agree(self):
        rng = random.Random(99)
        for _ in range(10):
            n = rng.randint(3, 7)
            k = rng.randint(2, min(n, 5))
            X = random_array(rng, n, rng.randint(1, 10))
            perms0 = X.to_numpy()
            place = kernels._place_values(n, k)
            selected = kernels.coverage_counts(perms0, k)
            pure = np.zeros(falling(n, k), dtype=np.uint32)
            _kernels_py.accumulate_coverage(perms0, place, pure, k)
            assert np.array_equal(selected, pure)

    def test_threaded_counts_identical(self):
        rng = random.Random(5)
        X = random_array(rng, 6, 30)
        single = kernels.coverage_counts(X.to_numpy(), 3, threads=1)
        quad = kernels.coverage_counts(X.to_numpy(), 3, threads=4)
        assert np.array_equal(single, quad)

    def test_mass_identity(self):
        rng = random.Random(11)
        for _ in range(15):
            n = rng.randint(3, 7)
            k = rng.randint(2, min(n, 4))
            X = random_array(rng, n, rng.randint(1, 9))
            rep = coverage_report(X, k)
            assert sum(rep.histogram.values()) == rep.total_sequences
            mass = sum(cov * cnt for cov, cnt in rep.histogram.items())
            assert mass == len(X) * math.comb(n, k)

    def test_duplicates_counted(self):
        X = PermutationArray.from_rows(3, [(1, 2, 3), (1, 2, 3)])
        rep = coverage_report(X, 2)
        assert rep.histogram == {0: 3, 2: 3}

    def test_trivial_psca_n_n(self):
        X = PermutationArray.from_rows(3, list(permutations([1, 2, 3])))
        assert coverage_report(X, 3).uniform_lambda == 1

    def test_perm_and_reverse_cover_pairs_once(self):
        rng = random.Random(3)
        for _ in range(10):
            n = rng.randint(2, 7)
            perm = tuple(rng.sample(range(1, n + 1), n))
            X = PermutationArray(n, (perm, reverse(perm)))
            assert coverage_report(X, 2).uniform_lambda == 1

    def test_k_out_of_range(self):
        X = PermutationArray.from_rows(3, [(1, 2, 3)])
        with pytest.raises(InputError):
            coverage_report(X, 1)
        with pytest.raises(InputError):
            coverage_report(X, 4)

    def test_memory_cap(self):
        X = PermutationArray.from_rows(9, [tuple(range(1, 10))])
        with pytest.raises(ResourceLimitError) as err:
            coverage_report(X, 9, mem_cap_mb=1)
        assert err.value.required_bytes == falling(9, 9) * 4

    def test_witnesses(self):
        X = PermutationArray.from_rows(3, [(1, 2, 3)])
        rep = coverage_report(X, 2)
        assert set(rep.witness_uncovered) == {(2, 1), (3, 1), (3, 2)}
        assert set(rep.witness_overcovered) == {(1, 2), (1, 3), (2, 3)}


class TestCoveredSequences:
    def test_matches_subsequence_test(self):
        perm = (2, 4, 1, 3)
        got = set(covered_sequences(perm, 2))
        expected = {
            seq for seq in permutations(range(1, 5), 2) if is_subsequence(seq, perm)
        }
        assert got == expected
        assert len(list(covered_sequences(perm, 2))) == math.comb(4, 2)


class TestComposeRelabel:
    def test_identity_fixpoints(self):
        X = PermutationArray.from_rows(4, [(2, 1, 4, 3), (4, 3, 2, 1)])
        assert compose_right(X, identity(4)) == X
        assert relabel(X, identity(4)) == X

    def test_relabel_of_identity_gives_g(self):
        X = PermutationArray.from_rows(3, [(1, 2, 3)])
        assert relabel(X, (2, 3, 1)).perms == ((2, 3, 1),)

    def test_compose_right_then_inverse_restores(self):
        rng = random.Random(17)
        for _ in range(10):
            n = rng.randint(2, 6)
            X = random_array(rng, n, rng.randint(1, 6))
            sigma = tuple(rng.sample(range(1, n + 1), n))
            assert compose_right(compose_right(X, sigma), inverse(sigma)) == X

    def test_single_member_translation(self):
        # convention fixed by the known five-symbol construction: perm first, then sigma
        X = PermutationArray.from_rows(3, [(2, 1, 3)])
        assert compose_right(X, (3, 2, 1)).perms == ((2, 3, 1),)

    def test_relabel_preserves_histogram(self):
        rng = random.Random(23)
        for _ in range(200):
            n = rng.randint(3, 7)
            k = rng.randint(2, min(n, 4))
            X = random_array(rng, n, rng.randint(1, 8))
            g = tuple(rng.sample(range(1, n + 1), n))
            assert (
                coverage_report(relabel(X, g), k).histogram
                == coverage_report(X, k).histogram
            )

    def test_mismatched_n(self):
        X = PermutationArray.from_rows(3, [(1, 2, 3)])
        with pytest.raises(InputError):
            compose_right(X, (1, 2, 3, 4))
        with pytest.raises(InputError):
            relabel(X, (2, 1))


class TestRestrict:
    def test_drop_largest(self):
        X = PermutationArray.from_rows(4, [(4, 2, 1, 3), (1, 2, 3, 4)])
        assert restrict_symbols(X, 3).perms == ((2, 1, 3), (1, 2, 3))

    def test_bad_target(self):
        X = PermutationArray.from_rows(3, [(1, 2, 3)])
        with pytest.raises(InputError):
            restrict_symbols(X, 0)
        with pytest.raises(InputError):
            restrict_symbols(X, 5)


class TestValidation:
    def test_rejects_non_permutations(self):
        for bad in [(1, 2), (1, 2, 2), (0, 1, 2), (1, 2, 4)]:
            with pytest.raises(InputError):
                validate_perm(bad, 3)

    def test_array_rejects_mixed_n(self):
        with pytest.raises(InputError):
            PermutationArray.from_rows(3, [(1, 2, 3), (1, 2, 3, 4)])
