from fractions import Fraction
from itertools import permutations

import pytest

from bicomm import (
    RationalFunction,
    RationalMatrix,
    UniPoly,
    char_det,
    dicks_formanek,
    dim_component,
    expand,
    hilbert_free_bicomm,
    invariant_dimension,
    molien_bicomm,
    molien_classic,
    permutation_matrix,
    trivial_group,
)
from bicomm.hilbert import poly_gcd

ONE = UniPoly.one()
T = UniPoly.t()


def rf(num, den=(1,)):
    return RationalFunction(UniPoly.from_coeffs(num), UniPoly.from_coeffs(den))


def cycle_lengths(perm):
    seen = set()
    lengths = []
    for start in range(len(perm)):
        if start in seen:
            continue
        length = 0
        i = start
        while i not in seen:
            seen.add(i)
            i = perm[i]
            length += 1
        lengths.append(length)
    return lengths


class TestUniPoly:
    def test_normalization_strips_trailing_zeros(self):
        assert UniPoly.from_coeffs([1, 2, 0, 0]).coeffs == (Fraction(1), Fraction(2))
        assert UniPoly.from_coeffs([0, 0]).is_zero()

    def test_division_inverts_multiplication(self):
        a = UniPoly.from_coeffs([1, -2, 3])
        b = UniPoly.from_coeffs([2, 5])
        q, r = divmod(a * b, b)
        assert q == a and r.is_zero()

    def test_divmod_with_remainder(self):
        a = UniPoly.from_coeffs([1, 0, 1])
        b = UniPoly.from_coeffs([1, 1])
        q, r = divmod(a, b)
        assert b * q + r == a
        assert r.degree < b.degree

    def test_gcd_extracts_common_factor(self):
        common = UniPoly.from_coeffs([1, 1])
        a = common * UniPoly.from_coeffs([1, -1])
        b = common * UniPoly.from_coeffs([2, 1])
        assert poly_gcd(a, b) == common
        assert poly_gcd(a, UniPoly.zero()) == a.monic()


class TestRationalFunction:
    def test_construction_reduces_to_lowest_terms(self):
        f = rf([0, 1, 1], [1, 1])  # t(1+t)/(1+t)
        assert f == rf([0, 1])
        assert f.denominator == ONE

    def test_denominator_constant_term_normalized(self):
        f = RationalFunction(UniPoly.from_coeffs([2]), UniPoly.from_coeffs([2, 2]))
        assert f.denominator.constant_term == 1
        assert f == rf([1], [1, 1])

    def test_zero_at_origin_denominator_rejected(self):
        with pytest.raises(ValueError):
            RationalFunction(ONE, T)

    def test_arithmetic(self):
        geometric = rf([1], [1, -1])
        assert geometric - RationalFunction.one() == rf([0, 1], [1, -1])
        assert geometric * geometric == rf([1], [1, -2, 1])

    def test_equality_is_canonical(self):
        a = rf([1], [1, -1]) + rf([1], [1, 1])
        b = rf([2], [1, 0, -1])
        assert a == b

    def test_coprimality_invariant(self):
        f = molien_classic(trivial_group(2))
        assert poly_gcd(f.numerator, f.denominator).degree == 0


class TestCharDet:
    def test_identity(self):
        assert char_det(RationalMatrix.identity(2)) == UniPoly.from_coeffs([1, -2, 1])

    def test_swap(self):
        assert char_det(permutation_matrix((1, 0))) == UniPoly.from_coeffs([1, 0, -1])

    def test_rotation(self):
        rotation = RationalMatrix.from_rows([[0, -1], [1, 0]])
        assert char_det(rotation) == UniPoly.from_coeffs([1, 0, 1])

    def test_constant_term_is_one(self, catalogue):
        for _, group in catalogue:
            for g in group.elements:
                assert char_det(g).constant_term == 1

    def test_permutation_matrices_factor_over_cycles(self):
        for d in range(1, 5):
            for perm in permutations(range(d)):
                expected = ONE
                for length in cycle_lengths(perm):
                    factor = [1] + [0] * (length - 1) + [-1]
                    expected = expected * UniPoly.from_coeffs(factor)
                assert char_det(permutation_matrix(perm)) == expected


class TestClosedForms:
    def test_molien_classic_trivial(self):
        assert molien_classic(trivial_group(2)) == rf([1], [1, -2, 1])

    def test_molien_classic_swap(self, swap_group):
        expected = RationalFunction(
            ONE, UniPoly.from_coeffs([1, -1]) * UniPoly.from_coeffs([1, 0, -1])
        )
        assert molien_classic(swap_group) == expected

    def test_molien_classic_negation(self, negation_d1):
        assert molien_classic(negation_d1) == rf([1], [1, 0, -1])

    def test_dicks_formanek_trivial(self):
        for d in (1, 2, 3):
            assert dicks_formanek(trivial_group(d)) == rf([1], [1, -d])

    def test_dicks_formanek_negation(self, negation_d1):
        assert dicks_formanek(negation_d1) == rf([1], [1, 0, -1])

    def test_dicks_formanek_swap(self, swap_group):
        assert dicks_formanek(swap_group) == rf([1, -1], [1, -2])

    def test_free_series_rank_one(self):
        geometric_sq = rf([1], [1, -2, 1])
        expected = rf([0, 1]) + rf([0, 0, 1]) * geometric_sq
        assert hilbert_free_bicomm(1) == expected
        series = expand(hilbert_free_bicomm(1), 6)
        assert list(series.coefficients) == [0, 1, 1, 2, 3, 4, 5]

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_free_series_counts_basis(self, d):
        series = expand(hilbert_free_bicomm(d), 8)
        assert series.coefficient(0) == 0
        for n in range(1, 9):
            assert series.coefficient(n) == dim_component(d, n)

    def test_molien_bicomm_trivial_matches_free(self):
        for d in (1, 2, 3, 4):
            assert molien_bicomm(trivial_group(d)) == hilbert_free_bicomm(d)

    def test_molien_bicomm_negation_closed_form(self, negation_d1):
        numerator = UniPoly.from_coeffs([0, 0, 1, 0, 1])  # t^2 (1 + t^2)
        denominator = UniPoly.from_coeffs([1, 0, -1]) ** 2  # (1 - t^2)^2
        assert molien_bicomm(negation_d1) == RationalFunction(numerator, denominator)
        series = expand(molien_bicomm(negation_d1), 10)
        for m in range(6):
            assert series.coefficient(2 * m) == (2 * m - 1 if m else 0)
        for m in range(5):
            assert series.coefficient(2 * m + 1) == 0

    def test_molien_bicomm_swap_series(self, swap_group):
        series = expand(molien_bicomm(swap_group), 6)
        dims = [invariant_dimension(swap_group, n) for n in range(1, 7)]
        assert list(series.coefficients) == [0] + dims
        assert dims == [1, 2, 6, 13, 22, 36]

    def test_summand_sanity_per_element(self, catalogue):
        for _, group in catalogue:
            for g in group.elements:
                bulk = RationalFunction(ONE, char_det(g)) - RationalFunction.one()
                term = bulk * bulk + RationalFunction.from_poly(
                    UniPoly.from_coeffs([0, g.trace()])
                )
                series = expand(term, 1)
                assert series.coefficient(0) == 0
                assert series.coefficient(1) == g.trace()


class TestExpand:
    def test_geometric(self):
        assert list(expand(rf([1], [1, -1]), 3).coefficients) == [1, 1, 1, 1]

    def test_geometric_squared(self):
        assert list(expand(rf([1], [1, -2, 1]), 3).coefficients) == [1, 2, 3, 4]

    def test_polynomial_expansion_is_exact(self):
        series = expand(rf([Fraction(1, 2), 0, -3]), 4)
        assert list(series.coefficients) == [Fraction(1, 2), 0, -3, 0, 0]

    def test_truncation_order(self):
        series = expand(rf([1], [1, -1]), 5)
        assert series.truncation_order == 5
        with pytest.raises(ValueError):
            expand(rf([1], [1, -1]), -1)
