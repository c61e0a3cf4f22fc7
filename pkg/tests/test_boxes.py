from fractions import Fraction

import pytest

from llterm.exactalg.boxes import Box, sqrt_bounds


def test_point_and_width():
    b = Box.point(Fraction(1, 2))
    assert b.is_point and b.width == 0
    c = Box.make(0, 1, -1, 1)
    assert c.width == 2


def test_add_mul_enclosure():
    a = Box.make(1, 2, 0, 1)      # contains 1.5 + 0.5i
    b = Box.make(-1, 0, 2, 3)     # contains -0.5 + 2.5i
    s = a + b
    assert s.contains_point(Fraction(1), Fraction(5, 2))
    z1, z2 = complex(1.5, 0.5), complex(-0.5, 2.5)
    p = a * b
    prod = z1 * z2
    assert p.contains_point(Fraction(prod.real).limit_denominator(10**6),
                            Fraction(prod.imag).limit_denominator(10**6))


def test_neg_conj():
    a = Box.make(1, 2, 3, 4)
    assert (-a) == Box.make(-2, -1, -4, -3)
    assert a.conjugate() == Box.make(1, 2, -4, -3)


def test_reciprocal():
    a = Box.make(1, 2, 1, 2)  # away from zero
    r = a.reciprocal()
    z = complex(1.5, 1.5)
    inv = 1 / z
    assert r.contains_point(Fraction(inv.real).limit_denominator(10**9),
                            Fraction(inv.imag).limit_denominator(10**9))
    with pytest.raises(ZeroDivisionError):
        Box.make(-1, 1, -1, 1).reciprocal()


def test_modulus_bounds():
    a = Box.make(3, 3, 4, 4)
    lo, hi = a.modulus_sq_bounds()
    assert lo == hi == 25
    b = Box.make(-1, 1, -1, 1)
    lo, hi = b.modulus_sq_bounds()
    assert lo == 0 and hi == 2


def test_pow():
    i_box = Box.point(0, 1)
    sq = i_box.pow(2)
    assert sq.contains_point(-1, 0) and sq.is_point


def test_sqrt_bounds():
    lo, hi = sqrt_bounds(Fraction(2))
    assert lo * lo <= 2 <= hi * hi
    assert hi - lo < Fraction(1, 10**6)
    assert sqrt_bounds(Fraction(0)) == (0, 0)
    with pytest.raises(ValueError):
        sqrt_bounds(Fraction(-1))


def test_intersections():
    a = Box.make(0, 1, 0, 1)
    b = Box.make(1, 2, 1, 2)  # shares the corner (1,1)
    assert a.intersects(b)
    c = Box.make(2, 3, 0, 1)
    assert not a.intersects(c)
    inter = a.intersection(b)
    assert inter.is_point
