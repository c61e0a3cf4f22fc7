from fractions import Fraction

import pytest

from llterm.exactalg.algebraic import isolate_roots
from llterm.exactalg.intpoly import IntPolynomial
from llterm.exactalg.numberfield import NumberField


def P(*coeffs):
    return IntPolynomial(coeffs)


def sqrt2_field() -> NumberField:
    pos = [r for r, _ in isolate_roots(P(-2, 0, 1)) if r.box.re_lo >= 0][0]
    return NumberField(pos)


def test_basic_arithmetic():
    k = sqrt2_field()
    s = k.gen()              # sqrt 2
    one = k.one()
    x = s + one              # 1 + sqrt2
    assert (x * x).coords == (Fraction(3), Fraction(2))  # 3 + 2 sqrt2
    assert (s * s).coords == (Fraction(2), Fraction(0))
    assert (x - x).is_zero


def test_inverse_and_division():
    k = sqrt2_field()
    s = k.gen()
    x = s + k.one()
    inv = x.inverse()
    assert (x * inv) == k.one()
    # 1/(1+sqrt2) = sqrt2 - 1
    assert inv.coords == (Fraction(-1), Fraction(1))
    with pytest.raises(ZeroDivisionError):
        k.zero().inverse()


def test_zero_test_is_structural():
    k = sqrt2_field()
    s = k.gen()
    z = s * s - k.from_fraction(2)
    assert z.is_zero


def test_sign_via_interval():
    k = sqrt2_field()
    s = k.gen()
    x = s - k.from_fraction(Fraction(141, 100))   # sqrt2 - 1.41 > 0
    assert x.sign() == 1
    y = s - k.from_fraction(Fraction(142, 100))
    assert y.sign() == -1
    assert k.zero().sign() == 0


def test_pow():
    k = sqrt2_field()
    s = k.gen()
    assert s.pow(4).coords == (Fraction(4), Fraction(0))
    assert s.pow(-2).coords == (Fraction(1, 2), Fraction(0))


def test_to_algebraic_round_trip():
    k = sqrt2_field()
    x = k.gen() + k.from_fraction(Fraction(1, 3))
    alg = x.to_algebraic()
    # value is 1/3 + sqrt2; square it and compare exactly
    expected = alg * alg
    direct = (x * x).to_algebraic()
    assert expected.equals(direct)


def test_complex_generator_interval():
    i_root = [r for r, _ in isolate_roots(P(1, 0, 1)) if r.box.im_lo >= 0][0]
    k = NumberField(i_root)
    x = k.gen() + k.one()  # 1 + i
    box = x.interval(Fraction(1, 2**20))
    assert box.contains_point(1, 1)


def test_element_reduction_of_long_coords():
    k = sqrt2_field()
    # x^2 reduces to 2
    e = k.element([0, 0, 1])
    assert e.coords == (Fraction(2), Fraction(0))
