"""Catalog arrays and the order-squaring construction, against golden values."""

import math

import pytest

from psca.constructions import (
    catalog,
    iterate_to_power,
    multiplicity_for_power,
    square_construction,
    square_words,
)
from psca.errors import InputError, ResourceLimitError
from psca.perms import coverage_report, restrict_symbols
from psca.planes import affine_plane, canned_plane_order3


class TestCatalog:
    def test_psca_5_4(self):
        entry = catalog("psca_5_4_l1")
        assert len(entry.array) == 24
        assert coverage_report(entry.array, 4).uniform_lambda == 1

    def test_maxcov_six_set_histogram(self):
        entry = catalog("prop1_X")
        rep = coverage_report(entry.array, 3)
        assert rep.min_cov == 0 and rep.max_cov == 2
        assert rep.histogram == {0: 4, 1: 52, 2: 4}
        assert set(rep.witness_uncovered) == {(1, 3, 2), (2, 3, 1), (1, 5, 4), (4, 5, 1)}
        assert set(rep.witness_overcovered) == {(1, 2, 3), (3, 2, 1), (1, 4, 5), (5, 4, 1)}

    def test_translate_golden(self):
        got = set(catalog("prop1_Xsigma").array.perms)
        assert got == {
            (1, 3, 2, 5, 4),
            (5, 2, 3, 1, 4),
            (2, 4, 3, 1, 5),
            (1, 5, 4, 3, 2),
            (3, 4, 5, 1, 2),
            (4, 2, 5, 1, 3),
        }

    def test_union_is_perfect(self):
        entry = catalog("psca_5_3_l2")
        assert len(entry.array) == 12
        assert coverage_report(entry.array, 3).uniform_lambda == 2 == entry.lam

    def test_trivial(self):
        entry = catalog("trivial", 3)
        assert len(entry.array) == 6
        assert coverage_report(entry.array, 3).uniform_lambda == 1
        # at smaller k the multiplicity is n!/k!
        assert coverage_report(catalog("trivial", 4).array, 3).uniform_lambda == 4

    def test_unknown_name(self):
        with pytest.raises(InputError):
            catalog("nope")
        with pytest.raises(InputError):
            catalog("trivial")


class TestSquareWords:
    def test_golden_class_and_member(self):
        plane = canned_plane_order3()
        w, z = square_words(plane.classes[3], (2, 3, 1))
        assert w == (4, 9, 2, 5, 7, 3, 6, 8, 1)
        assert z == (2, 9, 4, 3, 7, 5, 1, 8, 6)


class TestSquareConstruction:
    def test_size_and_validity(self):
        base = catalog("trivial", 3).array
        out = square_construction(base, canned_plane_order3())
        assert len(out) == 2 * 4 * 6
        for perm in out:
            assert sorted(perm) == list(range(1, 10))

    def test_multiplicity_order3(self):
        base = catalog("trivial", 3).array
        for plane in (canned_plane_order3(), affine_plane(3)):
            out = square_construction(base, plane)
            assert coverage_report(out, 3).uniform_lambda == 8

    def test_rejects_mismatched_plane(self):
        base = catalog("trivial", 3).array
        with pytest.raises(InputError):
            square_construction(base, affine_plane(4))

    def test_rejects_imperfect_input(self):
        bad = catalog("prop1_X").array  # covers only 56 of 60 triples
        with pytest.raises(InputError, match=r"\(1, 3, 2\)"):
            square_construction(bad, affine_plane(5))

    def test_check_flag_skips_certification(self):
        bad = catalog("prop1_X").array
        out = square_construction(bad, affine_plane(5), check=False)
        assert len(out) == 2 * 6 * 6


class TestMultiplicityRecurrence:
    def test_small_values(self):
        assert [multiplicity_for_power(r) for r in range(1, 9)] == [
            1, 8, 160, 160, 8960, 8960, 26240, 26240,
        ]

    def test_power_of_two_closed_form(self):
        for t in range(1, 6):
            r = 2**t
            assert multiplicity_for_power(r) == 2 ** (t - 1) * (3**r - 1)

    def test_bad_r(self):
        with pytest.raises(InputError):
            multiplicity_for_power(0)


class TestIterateToPower:
    def test_r1(self):
        out = iterate_to_power(1)
        assert len(out) == 6 and out.n == 3
        assert coverage_report(out, 3).uniform_lambda == 1

    def test_r2(self):
        out = iterate_to_power(2)
        assert len(out) == 48 and out.n == 9
        assert coverage_report(out, 3).uniform_lambda == 8

    def test_r3_restriction_of_r4(self):
        out = iterate_to_power(3)
        assert out.n == 27
        assert len(out) == 6 * 160
        assert coverage_report(out, 3).uniform_lambda == 160

    def test_restriction_preserves_multiplicity(self):
        base = iterate_to_power(2)
        for n_new in (8, 7, 6):
            shrunk = restrict_symbols(base, n_new)
            assert coverage_report(shrunk, 3).uniform_lambda == 8

    def test_cell_cap(self):
        with pytest.raises(ResourceLimitError):
            iterate_to_power(6)
        with pytest.raises(ResourceLimitError):
            iterate_to_power(5)  # needs the r=6 array first

    def test_output_size_formula(self):
        out = iterate_to_power(2)
        assert len(out) == 6 * multiplicity_for_power(2)
        assert math.comb(len(out), 1) == 48
