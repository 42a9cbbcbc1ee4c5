"""Exact field arithmetic: defining relations, sign, roots, text forms."""

from __future__ import annotations

import random
from decimal import Decimal, localcontext
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from stoicheia.field import (
    ONE,
    R2,
    R3,
    R6,
    ZERO,
    FieldElement,
    rational_cube_root,
    sqrt_in_field,
)


def decimal_sign(x: FieldElement, digits: int = 50) -> int:
    """Independent sign oracle: 50-digit decimal evaluation."""
    with localcontext() as ctx:
        ctx.prec = digits
        q0, q1, q2, q3 = (
            Decimal(c.numerator) / Decimal(c.denominator) for c in x.coordinates
        )
        value = (
            q0
            + q1 * Decimal(2).sqrt()
            + q2 * Decimal(3).sqrt()
            + q3 * Decimal(6).sqrt()
        )
    if value == 0:
        return 0
    return 1 if value > 0 else -1


rationals = st.fractions(min_value=-10, max_value=10, max_denominator=60)
field_values = st.builds(FieldElement, rationals, rationals, rationals, rationals)


class TestDefiningRelations:
    def test_sqrt2_squared(self):
        assert R2 * R2 == 2

    def test_difference_of_squares(self):
        assert (1 + R2) * (-1 + R2) == 1

    def test_basis_product(self):
        assert R2 * R3 == R6

    def test_more_basis_products(self):
        assert R2 * R6 == 2 * R3
        assert R3 * R6 == 3 * R2
        assert R6 * R6 == 6


class TestSign:
    def test_zero(self):
        assert ZERO.sign() == 0
        assert FieldElement(0, 0, 0, 0).sign() == 0

    def test_three_minus_two_sqrt2(self):
        x = FieldElement(3, -2)
        assert x.sign() == 1
        assert decimal_sign(x) == 1

    def test_radical_combination(self):
        x = R2 + R3 - R6
        assert x.sign() == 1
        assert decimal_sign(x) == 1

    def test_near_zero_negative(self):
        # 7/5 - sqrt2 < 0 by a whisker
        x = FieldElement(Fraction(7, 5), -1)
        assert x.sign() == -1

    @given(field_values)
    @settings(deadline=None)
    def test_matches_decimal_oracle(self, x):
        assert x.sign() == decimal_sign(x)

    @given(field_values, field_values)
    @settings(deadline=None)
    def test_multiplicative(self, x, y):
        assert x.sign() * y.sign() == (x * y).sign()

    def test_total_order(self):
        values = [FieldElement(1), R2, FieldElement(Fraction(3, 2)), R3, FieldElement(2)]
        assert sorted(values) == [
            FieldElement(1),
            R2,
            FieldElement(Fraction(3, 2)),
            R3,
            FieldElement(2),
        ]


class TestFieldAxioms:
    @given(field_values, field_values, field_values)
    @settings(deadline=None)
    def test_ring_laws(self, x, y, z):
        assert (x + y) + z == x + (y + z)
        assert x + y == y + x
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x * (y + z) == x * y + x * z

    @given(field_values)
    @settings(deadline=None)
    def test_multiplicative_inverse(self, x):
        if x.is_zero:
            with pytest.raises(ZeroDivisionError):
                x.inverse()
        else:
            assert x * x.inverse() == ONE

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ONE / ZERO

    @given(field_values, field_values)
    @settings(deadline=None)
    def test_division_roundtrip(self, x, y):
        if not y.is_zero:
            assert (x / y) * y == x

    def test_pow(self):
        assert R2**4 == 4
        assert (1 + R2) ** 0 == 1
        assert R2 ** (-2) == Fraction(1, 2)


class TestSqrtInField:
    def test_two(self):
        assert sqrt_in_field(2) == R2

    def test_nine_quarters(self):
        assert sqrt_in_field(Fraction(9, 4)) == FieldElement(Fraction(3, 2))

    def test_five_absent(self):
        assert sqrt_in_field(5) is None

    def test_five_absent_grid_oracle(self):
        # No small-coordinate candidate squares to 5 either.
        coords = [Fraction(p, q) for q in (1, 2, 3) for p in range(-6, 7)]
        target = FieldElement(5)
        for a in coords:
            for b in coords:
                y = FieldElement(a, b)
                assert y * y != target

    def test_mixed_radical_square(self):
        # (sqrt2 + sqrt3)**2 = 5 + 2*sqrt6
        assert sqrt_in_field(5 + 2 * R6) == R2 + R3

    def test_six(self):
        assert sqrt_in_field(6) == R6

    def test_three_halves_of_six(self):
        # (sqrt6/2)**2 = 3/2
        assert sqrt_in_field(Fraction(3, 2)) == R6 / 2

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            sqrt_in_field(-1)

    def test_zero(self):
        assert sqrt_in_field(0) == ZERO

    @given(field_values)
    @settings(deadline=None)
    def test_roundtrip_on_squares(self, y):
        square = y * y
        root = square.sqrt()
        assert root is not None
        assert root * root == square
        assert root.sign() >= 0

    def test_canonical_root_nonnegative(self):
        root = sqrt_in_field(2)
        assert root is not None and root.sign() > 0


class TestRationalCubeRoot:
    def test_eight(self):
        assert rational_cube_root(8) == 2

    def test_fraction(self):
        assert rational_cube_root(Fraction(27, 8)) == Fraction(3, 2)

    def test_two_absent(self):
        assert rational_cube_root(2) is None

    def test_one(self):
        assert rational_cube_root(1) == 1

    def test_large_cube(self):
        n = 12345679
        assert rational_cube_root(Fraction(n**3, 7**3)) == Fraction(n, 7)

    def test_near_cube(self):
        assert rational_cube_root(9) is None
        assert rational_cube_root(7) is None

    def test_nonpositive_rejected(self):
        with pytest.raises(ValueError):
            rational_cube_root(0)
        with pytest.raises(ValueError):
            rational_cube_root(-8)


class TestTextAndJson:
    def test_canonical_emission(self):
        assert str(R2) == "0 + 1*r2 + 0*r3 + 0*r6"
        x = FieldElement(Fraction(3, 2), -1, 0, Fraction(2, 7))
        assert str(x) == "3/2 - 1*r2 + 0*r3 + 2/7*r6"

    def test_parse_canonical(self):
        assert FieldElement.parse("0 + 1*r2 + 0*r3 + 0*r6") == R2

    def test_parse_shorthand(self):
        assert FieldElement.parse("r2") == R2
        assert FieldElement.parse("3/2") == FieldElement(Fraction(3, 2))
        assert FieldElement.parse("2 + r3") == FieldElement(2, 0, 1, 0)
        assert FieldElement.parse("-r6") == -R6
        assert FieldElement.parse("0.25") == FieldElement(Fraction(1, 4))

    def test_parse_rejects_garbage(self):
        for bad in ("", "glop", "1 + ", "1 1", "r5"):
            with pytest.raises(ValueError):
                FieldElement.parse(bad)

    @given(field_values)
    @settings(deadline=None)
    def test_roundtrip(self, x):
        assert FieldElement.parse(str(x)) == x
        assert FieldElement.from_json(x.to_json()) == x

    def test_json_form(self):
        x = FieldElement(1, Fraction(-2, 3), 0, 4)
        assert x.to_json() == ["1", "-2/3", "0", "4"]

    def test_approx_sqrt2(self):
        assert R2.approx(12).startswith("1.4142135623")

    def test_approx_zero(self):
        assert ZERO.approx() == "0"


class TestHashing:
    def test_rational_hash_matches_fraction(self):
        assert hash(FieldElement(Fraction(3, 2))) == hash(Fraction(3, 2))
        assert hash(FieldElement(7)) == hash(7)

    def test_usable_as_dict_key(self):
        d = {R2: "root two", FieldElement(2): "two"}
        assert d[R2] == "root two"
        assert d[FieldElement(2)] == "two"


class TestSeededBulk:
    def test_field_axioms_seeded(self):
        rng = random.Random(20260808)

        def rand_value():
            return FieldElement(
                Fraction(rng.randrange(-20, 21), rng.randrange(1, 12)),
                Fraction(rng.randrange(-20, 21), rng.randrange(1, 12)),
                Fraction(rng.randrange(-20, 21), rng.randrange(1, 12)),
                Fraction(rng.randrange(-20, 21), rng.randrange(1, 12)),
            )

        for _ in range(500):
            x, y, z = rand_value(), rand_value(), rand_value()
            assert (x + y) + z == x + (y + z)
            assert x * (y + z) == x * y + x * z
            if not x.is_zero:
                assert x * x.inverse() == ONE
