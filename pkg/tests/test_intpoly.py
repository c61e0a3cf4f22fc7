from fractions import Fraction

from llterm.exactalg.intpoly import (
    IntPolynomial,
    clear_denominators,
    cyclotomic,
    factor_primitive,
    mignotte_separation_lb,
    product_poly,
    rational_minpoly,
    sum_poly,
)


def P(*coeffs):
    return IntPolynomial(coeffs)


def test_basic_structure():
    p = P(-8, 10, -5, 1)
    assert p.degree == 3
    assert p.leading == 1
    assert p.height == 10
    assert p.content == 1
    assert P().is_zero
    assert P().degree == -1


def test_content_and_primitive():
    p = P(4, -6, 2)
    assert p.content == 2
    assert p.primitive() == P(2, -3, 1)
    q = P(-4, 0, -2)
    assert q.primitive() == P(2, 0, 1)  # sign normalised


def test_arithmetic():
    p, q = P(1, 1), P(-1, 1)
    assert p * q == P(-1, 0, 1)
    assert p + q == P(0, 2)
    assert (p - q) == P(2)


def test_eval():
    p = P(-8, 10, -5, 1)
    assert p.eval_int(2) == 0
    assert p.eval_fraction(Fraction(1, 2)) == Fraction(-8) + 5 - Fraction(5, 4) + Fraction(1, 8)


def test_root_transforms():
    p = P(-2, 0, 1)  # x^2 - 2, roots +-sqrt2
    shifted = p.shift_roots(Fraction(1))  # roots 1 +- sqrt2
    assert shifted.eval_fraction(Fraction(1)) != 0
    # (x-1)^2 - 2 = x^2 - 2x - 1
    assert shifted == P(-1, -2, 1)
    scaled = p.scale_roots(Fraction(2))  # roots +-2 sqrt2 -> x^2 - 8
    assert scaled == P(-8, 0, 1)
    assert p.negate_roots() == p
    q = P(-1, 3)  # root 1/3
    assert q.reverse_roots() == P(-3, 1)
    assert p.compose_square() == P(-2, 0, 0, 0, 1)


def test_divides_and_powmod():
    p = P(1, 1, 1)  # x^2 + x + 1 divides x^3 - 1
    assert p.divides(P(-1, 0, 0, 1))
    assert not p.divides(P(-1, 0, 1))
    assert p.pow_x_mod(3) == [Fraction(1)]
    assert p.pow_x_mod(1) == [Fraction(0), Fraction(1)]


def test_factor():
    p = P(-8, 10, -5, 1)
    factors = factor_primitive(p)
    assert set(f.degree for f, _ in factors) == {1, 2}
    assert sorted(m for _, m in factors) == [1, 1]
    sq = P(1, 2, 1)
    ((f, m),) = factor_primitive(sq)
    assert f == P(1, 1) and m == 2


def test_sum_product_polys():
    sqrt2 = P(-2, 0, 1)
    s = sum_poly(sqrt2, sqrt2)  # contains root 2*sqrt2 -> divisible by x^2-8
    assert P(-8, 0, 1).divides(s) or s == P(-8, 0, 1) * P(1)
    pr = product_poly(sqrt2, sqrt2)  # contains root 2
    assert pr.eval_int(2) == 0


def test_mignotte_bound_positive_and_small():
    p = P(-2, 0, 1)
    b = mignotte_separation_lb(p)
    assert 0 < b < Fraction(3)  # actual gap is 2*sqrt2 ~ 2.83


def test_clear_denominators():
    p = clear_denominators([Fraction(1, 2), Fraction(1, 3)])
    assert p == P(3, 2)


def test_cyclotomic_and_rational_minpoly():
    assert cyclotomic(3) == P(1, 1, 1)
    assert cyclotomic(4) == P(1, 0, 1)
    assert rational_minpoly(Fraction(3, 2)) == P(-3, 2)
