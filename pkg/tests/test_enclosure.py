"""Certified enclosures: bisection roots, refinement, interval arithmetic."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from stoicheia.enclosure import (
    Enclosure,
    cube_root_enclosure,
    enclose_value,
    refine,
    sqrt_enclosure,
)
from stoicheia.field import R2

MICRO = Fraction(1, 10**6)


def test_cube_root_of_two_bounds():
    e = cube_root_enclosure(2, MICRO)
    assert e.width <= MICRO
    # certified: lo**3 <= 2 <= hi**3
    assert e.lo**3 <= 2 <= e.hi**3
    assert Fraction("1.259921") - MICRO <= e.lo and e.hi <= Fraction("1.259922") + MICRO


def test_sqrt_enclosure_straddles():
    e = sqrt_enclosure(2, Fraction(1, 10**4))
    assert e.lo <= Fraction("1.41421") <= e.hi + Fraction(1, 10**4)
    assert e.lo**2 <= 2 <= e.hi**2


def test_sqrt_enclosure_of_field_value():
    e = sqrt_enclosure(2 + R2, Fraction(1, 10**8))
    mid = e.midpoint
    # (sqrt(2+sqrt2))**2 == 2+sqrt2, so mid**2 should be close
    assert abs(float(mid) ** 2 - (2 + 2**0.5)) < 1e-6


def test_point_interval_refines_to_itself():
    p = Enclosure.point(3)
    assert refine(p, Fraction(1, 1000)) == p
    assert p.width == 0


def test_refine_hits_exact_root():
    e = sqrt_enclosure(4, Fraction(1, 2))
    refined = refine(e, Fraction(1, 10**12))
    assert refined.contains(2)


def test_refine_without_oracle_raises():
    e = Enclosure(Fraction(0), Fraction(1))
    with pytest.raises(ValueError):
        refine(e, Fraction(1, 10))


def test_empty_interval_rejected():
    with pytest.raises(ValueError):
        Enclosure(Fraction(1), Fraction(0))


@given(st.integers(min_value=2, max_value=30))
@settings(deadline=None)
def test_refine_is_monotone(denom_power):
    e = cube_root_enclosure(2, Fraction(1, 4))
    tighter = refine(e, Fraction(1, 2**denom_power))
    assert tighter.is_subinterval_of(e)
    assert tighter.width <= Fraction(1, 2**denom_power)


def test_refinement_never_widens_in_stages():
    e = cube_root_enclosure(5, Fraction(1, 2))
    for power in (4, 8, 16, 32):
        tighter = refine(e, Fraction(1, 2**power))
        assert tighter.is_subinterval_of(e)
        e = tighter


def test_interval_arithmetic():
    a = Enclosure(Fraction(1), Fraction(2))
    b = Enclosure(Fraction(-1), Fraction(3))
    assert (a + b).lo == 0 and (a + b).hi == 5
    assert (a - b).lo == -2 and (a - b).hi == 3
    prod = a * b
    assert prod.lo == -2 and prod.hi == 6
    assert (-a).lo == -2 and (-a).hi == -1
    assert (a + 1).lo == 2


def test_cube_of_enclosure():
    e = Enclosure(Fraction(1), Fraction(2))
    c = e.cube()
    assert c.lo == 1 and c.hi == 8


def test_enclose_exact_value_is_refinable():
    e = enclose_value(R2, Fraction(1, 100))
    assert e.width <= Fraction(1, 100)
    assert e.lo**2 <= 2 <= e.hi**2
    tighter = refine(e, Fraction(1, 10**9))
    assert tighter.is_subinterval_of(e)
    assert tighter.width <= Fraction(1, 10**9)
    assert tighter.lo**2 <= 2 <= tighter.hi**2


def test_cube_root_rejects_nonpositive():
    with pytest.raises(ValueError):
        cube_root_enclosure(0)
    with pytest.raises(ValueError):
        cube_root_enclosure(-3)


def test_sqrt_rejects_negative():
    with pytest.raises(ValueError):
        sqrt_enclosure(-1)
