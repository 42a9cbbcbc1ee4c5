"""Mean proportions: single and double means, inversion, cube duplication."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from stoicheia.enclosure import Enclosure, cube_root_enclosure
from stoicheia.field import R2, FieldElement, rational_cube_root
from stoicheia.proportion import (
    MeanChain,
    chain_valid,
    check_single_mean,
    check_two_means,
    construct_mean,
    duplicate_cube,
    invert_chain,
    mean_triangle,
    square_duplication_mean,
    two_mean_chain,
)

positive_rationals = st.fractions(
    min_value=Fraction(1, 40), max_value=40, max_denominator=40
)


class TestSingleMean:
    def test_two_four_eight(self):
        assert check_single_mean(2, 4, 8)

    def test_one_sqrt2_two(self):
        assert check_single_mean(1, R2, 2)

    def test_invalid(self):
        assert not check_single_mean(1, 2, 3)

    def test_nonpositive_rejected(self):
        with pytest.raises(ValueError):
            check_single_mean(0, 1, 1)
        with pytest.raises(ValueError):
            check_single_mean(1, -2, 4)

    def test_degenerate_equal_endpoints(self):
        # a == b is legal and the mean equals a
        assert check_single_mean(3, 3, 3)
        assert construct_mean(3, 3) == FieldElement(3)


class TestConstructMean:
    def test_exact_sqrt2(self):
        assert construct_mean(1, 2) == R2

    def test_exact_four(self):
        assert construct_mean(2, 8) == FieldElement(4)

    def test_out_of_field_sqrt5(self):
        mean = construct_mean(1, 5, Fraction(1, 10**6))
        assert isinstance(mean, Enclosure)
        assert mean.lo**2 <= 5 <= mean.hi**2
        assert mean.lo > Fraction(2236, 1000)

    @given(positive_rationals, positive_rationals)
    @settings(deadline=None, max_examples=60)
    def test_mean_always_checks(self, a, b):
        mean = construct_mean(a, b, Fraction(1, 10**9))
        if isinstance(mean, FieldElement):
            assert check_single_mean(FieldElement(a), mean, FieldElement(b))
        else:
            product = Fraction(a) * Fraction(b)
            assert mean.lo**2 <= product <= mean.hi**2

    def test_mean_checks_seeded_bulk(self):
        import random

        rng = random.Random(16180339)
        width = Fraction(1, 2**12)
        for _ in range(10_000):
            a = Fraction(rng.randrange(1, 100), rng.randrange(1, 40))
            b = Fraction(rng.randrange(1, 100), rng.randrange(1, 40))
            mean = construct_mean(a, b, width)
            if isinstance(mean, FieldElement):
                assert check_single_mean(FieldElement(a), mean, FieldElement(b))
            else:
                product = a * b
                assert mean.width <= width
                assert mean.lo**2 <= product <= mean.hi**2


class TestMeanTriangle:
    def test_symmetric(self):
        t = mean_triangle(1, 1)
        assert t.apex == (FieldElement(1), FieldElement(1))
        assert t.right_angle_exact

    def test_one_two(self):
        t = mean_triangle(1, 2)
        assert t.apex == (FieldElement(1), R2)
        assert t.right_angle_exact

    def test_four_nine(self):
        t = mean_triangle(4, 9)
        assert t.apex == (FieldElement(4), FieldElement(6))
        assert t.base_end == (FieldElement(13), FieldElement(0))
        # dot product of (D-O) and (D-B) vanishes
        dx, dy = t.apex
        bx, _ = t.base_end
        assert (dx * (dx - bx) + dy * dy).sign() == 0

    def test_out_of_field_height(self):
        t = mean_triangle(1, 5)
        assert isinstance(t.height, Enclosure)
        with pytest.raises(ValueError):
            _ = t.apex


class TestChains:
    def test_invert_preserves_validity(self):
        chain = MeanChain((FieldElement(2), FieldElement(4), FieldElement(8)))
        assert chain_valid(chain)
        assert chain_valid(invert_chain(chain))

    def test_invert_preserves_invalidity(self):
        chain = MeanChain((FieldElement(1), FieldElement(2), FieldElement(3)))
        assert not chain_valid(chain)
        assert not chain_valid(invert_chain(chain))

    def test_invert_reverses(self):
        chain = MeanChain((FieldElement(1), R2, FieldElement(2)))
        assert invert_chain(chain).terms == (FieldElement(2), R2, FieldElement(1))

    @given(positive_rationals, positive_rationals)
    @settings(deadline=None, max_examples=60)
    def test_inversion_invariance_random(self, a, r):
        chain = MeanChain(
            (
                FieldElement(a),
                FieldElement(a * r),
                FieldElement(a * r * r),
            )
        )
        assert chain_valid(chain) == chain_valid(invert_chain(chain))

    def test_length_policed(self):
        with pytest.raises(ValueError):
            MeanChain((FieldElement(1), FieldElement(2)))

    def test_positivity_policed(self):
        with pytest.raises(ValueError):
            MeanChain((FieldElement(1), FieldElement(-1), FieldElement(2)))


class TestTwoMeans:
    def test_powers_of_two(self):
        assert check_two_means(
            FieldElement(1), FieldElement(2), FieldElement(4), FieldElement(8)
        )

    def test_powers_of_three(self):
        assert check_two_means(
            FieldElement(1), FieldElement(3), FieldElement(9), FieldElement(27)
        )

    def test_failure(self):
        assert not check_two_means(
            FieldElement(1), FieldElement(2), FieldElement(4), FieldElement(9)
        )

    @given(positive_rationals, positive_rationals)
    @settings(deadline=None, max_examples=100)
    def test_cube_identity(self, a, r):
        fa = FieldElement(a)
        c = FieldElement(a * r)
        d = FieldElement(a * r * r)
        fb = FieldElement(a * r * r * r)
        assert check_two_means(fa, c, d, fb)
        assert c * c * c == fa * fa * fb

    def test_enclosure_chain_for_doubling(self):
        width = Fraction(1, 10**9)
        c = cube_root_enclosure(2, width)
        d = cube_root_enclosure(4, width)
        one = FieldElement(1)
        two = FieldElement(2)
        assert check_two_means(one, c, d, two, tolerance=Fraction(1, 10**6))
        residual = c.cube() - 2
        assert -Fraction(1, 10**6) <= residual.lo and residual.hi <= Fraction(1, 10**6)

    def test_mixed_terms_promoted(self):
        width = Fraction(1, 10**9)
        c = cube_root_enclosure(2, width)
        d = cube_root_enclosure(4, width)
        assert check_two_means(FieldElement(1), c, d, FieldElement(2))


class TestTwoMeanChain:
    def test_exact_when_rational_cubes(self):
        chain = two_mean_chain(1, 8)
        assert chain.exact
        assert chain.terms[1] == FieldElement(2)
        assert chain.terms[2] == FieldElement(4)

    def test_enclosures_otherwise(self):
        chain = two_mean_chain(1, 2)
        assert not chain.exact
        assert chain_valid(chain)


class TestDuplicateCube:
    def test_unit(self):
        dup = duplicate_cube(1, Fraction(1, 10**6))
        assert dup.side.lo <= Fraction("1.259922")
        assert dup.side.hi >= Fraction("1.259921")
        assert dup.side.width <= Fraction(1, 10**6)
        assert dup.cube.lo <= 2 <= dup.cube.hi
        assert dup.residual_bound < Fraction(1, 10**4)

    def test_scaling_linearity(self):
        dup = duplicate_cube(2, Fraction(1, 10**6))
        unit = duplicate_cube(1, Fraction(1, 10**7))
        # side(2) = 2 * side(1): intervals must overlap after scaling
        assert dup.side.lo <= 2 * unit.side.hi
        assert dup.side.hi >= 2 * unit.side.lo
        assert Fraction("2.519842") - Fraction(1, 10**5) <= dup.side.midpoint
        assert dup.side.midpoint <= Fraction("2.519843")

    def test_never_a_rational_point(self):
        dup = duplicate_cube(1, Fraction(1, 10**12))
        assert dup.side.width > 0
        assert rational_cube_root(2) is None

    def test_field_side(self):
        dup = duplicate_cube(R2, Fraction(1, 10**6))
        # target is 2*(sqrt2)**3 = 4*sqrt2 ~ 5.65685; side ~ 1.77828
        assert dup.cube.lo <= Fraction("5.65686")
        assert dup.cube.hi >= Fraction("5.65685")


class TestSquareDuplication:
    def test_unit(self):
        assert square_duplication_mean(1) == R2

    def test_three(self):
        assert square_duplication_mean(3) == 3 * R2

    def test_sqrt2_input(self):
        mean = square_duplication_mean(R2)
        assert mean == FieldElement(2)
        assert check_single_mean(R2, mean, 2 * R2)

    @given(positive_rationals)
    @settings(deadline=None, max_examples=60)
    def test_always_in_field_and_valid(self, a):
        fa = FieldElement(a)
        mean = square_duplication_mean(fa)
        assert isinstance(mean, FieldElement)
        assert check_single_mean(fa, mean, 2 * fa)
