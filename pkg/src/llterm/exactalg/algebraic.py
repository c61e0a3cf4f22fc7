"""Canonical exact algebraic numbers.

A value is represented by its (irreducible, primitive) minimal polynomial
together with an isolating rectangle containing exactly that one root.
Boxes only ever shrink; refinement swaps the box attribute atomically, so
values can be shared across threads (concurrent refiners may duplicate
work but never corrupt state).

Arithmetic goes through resultants: the sum/product polynomial is factored
exactly and the correct root is selected by shrinking a rigorous interval
enclosure of the true value until it isolates a single candidate.
Equality refines both boxes and, when overlap persists, falls back to the
Mignotte root-separation bound, which makes it decidable.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

from sympy.polys.domains import QQ, ZZ
from sympy.polys.rootisolation import (
    dup_count_complex_roots,
    dup_count_real_roots,
    dup_isolate_all_roots_sqf,
)

from .boxes import Box, sqrt_bounds
from .intpoly import (
    IntPolynomial,
    X_POLY,
    cyclotomic,
    factor_primitive,
    mignotte_separation_lb,
    product_poly,
    rational_minpoly,
    sum_poly,
)


def _mpq_to_fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def _dup(p: IntPolynomial):
    """sympy dense representation (highest first) over ZZ."""
    return [ZZ(c) for c in reversed(p.coeffs)]


class AlgebraicNumber:
    """Exact complex algebraic number in canonical form."""

    __slots__ = ("minpoly", "_box")

    def __init__(self, minpoly: IntPolynomial, box: Box):
        self.minpoly = minpoly
        self._box = box

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_fraction(q) -> "AlgebraicNumber":
        q = Fraction(q)
        return AlgebraicNumber(rational_minpoly(q), Box.point(q))

    @staticmethod
    def from_int(n: int) -> "AlgebraicNumber":
        return AlgebraicNumber.from_fraction(Fraction(n))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    @property
    def box(self) -> Box:
        return self._box

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    @property
    def is_zero(self) -> bool:
        return self.minpoly == X_POLY

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self!r} is not rational")
        c0, c1 = self.minpoly.coeffs
        return Fraction(-c0, c1)

    @property
    def height(self) -> int:
        return self.minpoly.height

    def is_real(self) -> bool:
        box = self._box
        if box.im_lo == 0 and box.im_hi == 0:
            return True
        if not (box.im_lo <= 0 <= box.im_hi):
            return False
        # The box holds exactly one root; it is our value. It is real iff
        # the minimal polynomial has a real root in the box's real range.
        n = dup_count_real_roots(
            _dup(self.minpoly), ZZ, QQ(box.re_lo.numerator, box.re_lo.denominator),
            QQ(box.re_hi.numerator, box.re_hi.denominator),
        )
        return n > 0

    def is_algebraic_integer(self) -> bool:
        return self.minpoly.is_monic()

    def denominator_bound(self) -> int:
        """Positive integer t with t * self an algebraic integer."""
        return abs(self.minpoly.leading)

    # -- refinement ----------------------------------------------------------

    def refined(self, width: Fraction) -> Box:
        """Shrink the isolating box to the requested width and return it."""
        box = self._box
        if box.width <= width:
            return box
        if self.is_rational:
            q = self.as_fraction()
            box = Box.point(q)
        elif box.im_lo == 0 and box.im_hi == 0:
            box = self._refine_real(box, width)
        else:
            box = self._refine_complex(box, width)
        self._box = box  # atomic swap; boxes only shrink
        return box

    def _refine_real(self, box: Box, width: Fraction) -> Box:
        p = self.minpoly
        lo, hi = box.re_lo, box.re_hi
        s_lo = p.eval_fraction(lo)
        s_hi = p.eval_fraction(hi)
        if s_lo == 0 or s_hi == 0:  # pragma: no cover - excluded by canonicity
            raise AssertionError("rational endpoint is a root of an irreducible poly")
        while hi - lo > width:
            mid = (lo + hi) / 2
            s_mid = p.eval_fraction(mid)
            if (s_lo < 0) == (s_mid < 0):
                lo, s_lo = mid, s_mid
            else:
                hi, s_hi = mid, s_mid
        return Box(lo, hi, Fraction(0), Fraction(0))

    def _count_in(self, re_lo, re_hi, im_lo, im_hi) -> int:
        return dup_count_complex_roots(
            _dup(self.minpoly),
            ZZ,
            (QQ(re_lo.numerator, re_lo.denominator), QQ(im_lo.numerator, im_lo.denominator)),
            (QQ(re_hi.numerator, re_hi.denominator), QQ(im_hi.numerator, im_hi.denominator)),
        )

    def _refine_complex(self, box: Box, width: Fraction) -> Box:
        re_lo, re_hi, im_lo, im_hi = box.re_lo, box.re_hi, box.im_lo, box.im_hi
        while max(re_hi - re_lo, im_hi - im_lo) > width:
            split_re = (re_hi - re_lo) >= (im_hi - im_lo)
            lo, hi = (re_lo, re_hi) if split_re else (im_lo, im_hi)
            # Try a few cut points in case a root sits exactly on the cut.
            for num, den in ((1, 2), (1, 3), (2, 5)):
                cut = lo + (hi - lo) * Fraction(num, den)
                try:
                    if split_re:
                        n = self._count_in(re_lo, cut, im_lo, im_hi)
                    else:
                        n = self._count_in(re_lo, re_hi, im_lo, cut)
                except Exception:  # pragma: no cover - defensive cut retry
                    continue
                if n == 1:
                    if split_re:
                        re_hi = cut
                    else:
                        im_hi = cut
                    break
                if n == 0:
                    if split_re:
                        re_lo = cut
                    else:
                        im_lo = cut
                    break
            else:  # pragma: no cover - defensive
                raise AssertionError("failed to refine isolating box")
        return Box(re_lo, re_hi, im_lo, im_hi)

    def interval(self, width) -> Box:
        return self.refined(Fraction(width))

    def approx(self, width=Fraction(1, 10**12)) -> complex:
        return self.refined(Fraction(width)).midpoint()

    # -- comparisons -----------------------------------------------------------

    def equals(self, other: "AlgebraicNumber") -> bool:
        """Exact equality, decided by interval refinement plus the Mignotte
        separation bound on the product of the two minimal polynomials."""
        if self is other:
            return True
        if self.is_rational and other.is_rational:
            return self.as_fraction() == other.as_fraction()
        prod = self.minpoly * other.minpoly
        sep = mignotte_separation_lb(prod.primitive())
        width = Fraction(1, 4)
        while True:
            ba = self.refined(width)
            bb = other.refined(width)
            if not ba.intersects(bb):
                return False
            if ba.width <= sep / 8 and bb.width <= sep / 8:
                # Boxes tighter than the separation bound still overlap:
                # the two roots are closer than any two distinct roots of
                # the product polynomial could be, hence equal.
                return True
            width /= 8

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraicNumber):
            return NotImplemented
        if self.minpoly != other.minpoly:
            return False
        return self.equals(other)

    def __hash__(self) -> int:
        return hash(self.minpoly)

    def sign(self) -> int:
        """Sign of a real algebraic number."""
        if self.is_zero:
            return 0
        if self.is_rational:
            q = self.as_fraction()
            return -1 if q < 0 else 1
        if not self.is_real():
            raise ValueError("sign of a non-real algebraic number")
        width = self._box.width or Fraction(1)
        while True:
            box = self.refined(width)
            if box.re_lo > 0:
                return 1
            if box.re_hi < 0:
                return -1
            width /= 8

    def real_interval(self, width) -> tuple[Fraction, Fraction]:
        box = self.refined(Fraction(width))
        return box.re_lo, box.re_hi

    def __repr__(self) -> str:
        z = self._box.midpoint()
        return f"AlgebraicNumber({self.minpoly!r} ~ {z:.6g})"

    # -- arithmetic -----------------------------------------------------------

    def __neg__(self) -> "AlgebraicNumber":
        if self.is_rational:
            return AlgebraicNumber.from_fraction(-self.as_fraction())
        return AlgebraicNumber(self.minpoly.negate_roots(), -self._box)

    def conjugate(self) -> "AlgebraicNumber":
        return AlgebraicNumber(self.minpoly, self._box.conjugate())

    def add_fraction(self, q: Fraction) -> "AlgebraicNumber":
        if q == 0:
            return self
        if self.is_rational:
            return AlgebraicNumber.from_fraction(self.as_fraction() + q)
        return AlgebraicNumber(self.minpoly.shift_roots(q), self._box.shift(q))

    def mul_fraction(self, q: Fraction) -> "AlgebraicNumber":
        if q == 0:
            return ZERO
        if q == 1:
            return self
        if self.is_rational:
            return AlgebraicNumber.from_fraction(self.as_fraction() * q)
        return AlgebraicNumber(self.minpoly.scale_roots(Fraction(q)), self._box.scale(q))

    def __add__(self, other: "AlgebraicNumber") -> "AlgebraicNumber":
        if other.is_rational:
            return self.add_fraction(other.as_fraction())
        if self.is_rational:
            return other.add_fraction(self.as_fraction())
        poly = sum_poly(self.minpoly, other.minpoly)
        return _select_root(poly, lambda w: self.refined(w) + other.refined(w))

    def __sub__(self, other: "AlgebraicNumber") -> "AlgebraicNumber":
        return self + (-other)

    def __mul__(self, other: "AlgebraicNumber") -> "AlgebraicNumber":
        if self.is_zero or other.is_zero:
            return ZERO
        if other.is_rational:
            return self.mul_fraction(other.as_fraction())
        if self.is_rational:
            return other.mul_fraction(self.as_fraction())
        poly = product_poly(self.minpoly, other.minpoly)
        return _select_root(poly, lambda w: self.refined(w) * other.refined(w))

    def inverse(self) -> "AlgebraicNumber":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational:
            return AlgebraicNumber.from_fraction(1 / self.as_fraction())
        width = Fraction(1)
        while self._box.contains_zero():
            self.refined(min(width, self._box.width / 4))
            width /= 4
        poly = self.minpoly.reverse_roots()
        return _select_root(poly, lambda w: _recip_enclosure(self, w))

    def __truediv__(self, other: "AlgebraicNumber") -> "AlgebraicNumber":
        return self * other.inverse()

    def pow(self, k: int) -> "AlgebraicNumber":
        if k < 0:
            return self.inverse().pow(-k)
        acc = ONE
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def real_part(self) -> "AlgebraicNumber":
        if self.is_real():
            return self
        return (self + self.conjugate()).mul_fraction(Fraction(1, 2))

    def imag_part(self) -> "AlgebraicNumber":
        if self.is_real():
            return ZERO
        return ((self - self.conjugate()) * NEG_I).mul_fraction(Fraction(1, 2))

    def modulus_sq(self) -> "AlgebraicNumber":
        if self.is_real():
            return self * self
        return self * self.conjugate()

    def sqrt_nonneg(self) -> "AlgebraicNumber":
        """Nonnegative square root of a nonnegative real value."""
        if self.sign() < 0:
            raise ValueError("square root of a negative value")
        if self.is_zero:
            return ZERO
        if self.is_rational:
            q = self.as_fraction()
            rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
            if rn * rn == q.numerator and rd * rd == q.denominator:
                return AlgebraicNumber.from_fraction(Fraction(rn, rd))
        poly = self.minpoly.compose_square()

        def encl(w: Fraction) -> Box:
            box = self.refined(w)
            lo = sqrt_bounds(max(box.re_lo, Fraction(0)))[0]
            hi = sqrt_bounds(max(box.re_hi, Fraction(0)))[1]
            return Box(lo, hi, Fraction(0), Fraction(0))

        return _select_root(poly, encl)

    # -- roots of unity ---------------------------------------------------------

    def root_of_unity_order(self) -> Optional[int]:
        """Minimal r with self^r = 1, or None.

        Uses the bound r <= 2 n^2 for a degree-n root of unity and the
        divisibility test minpoly | x^r - 1.
        """
        if self.is_rational:
            q = self.as_fraction()
            if q == 1:
                return 1
            if q == -1:
                return 2
            return None
        p = self.minpoly
        # roots of unity are algebraic integers of norm 1
        if abs(p.leading) != 1 or abs(p.coeffs[0]) != 1:
            return None
        n = p.degree
        for r in range(1, 2 * n * n + 1):
            rem = p.pow_x_mod(r)
            if rem == [Fraction(1)]:
                return r
        return None


def _recip_enclosure(a: AlgebraicNumber, w: Fraction) -> Box:
    box = a.refined(w)
    while box.contains_zero():  # pragma: no cover - caller pre-refines
        box = a.refined(box.width / 4)
    return box.reciprocal()


def roots_with_boxes(p: IntPolynomial) -> list[tuple[AlgebraicNumber, int]]:
    """All distinct complex roots of p with multiplicities.

    Each root's minimal polynomial is the irreducible factor it satisfies;
    real and non-real roots are isolated separately so real values always
    carry exact real boxes.
    """
    if p.is_zero:
        raise ValueError("cannot isolate roots of the zero polynomial")
    out: list[tuple[AlgebraicNumber, int]] = []
    for factor, mult in factor_primitive(p):
        if factor.degree == 0:
            continue
        if factor.degree == 1:
            c0, c1 = factor.coeffs
            out.append((AlgebraicNumber.from_fraction(Fraction(-c0, c1)), mult))
            continue
        real_parts, complex_parts = dup_isolate_all_roots_sqf(_dup(factor), ZZ)
        for a, b in real_parts:
            lo, hi = _mpq_to_fraction(a), _mpq_to_fraction(b)
            out.append(
                (AlgebraicNumber(factor, Box(lo, hi, Fraction(0), Fraction(0))), mult)
            )
        for (u, v), (s, t) in complex_parts:
            box = Box(
                _mpq_to_fraction(u), _mpq_to_fraction(s),
                _mpq_to_fraction(v), _mpq_to_fraction(t),
            )
            out.append((AlgebraicNumber(factor, box), mult))
    return out


def isolate_roots(p: IntPolynomial) -> list[tuple[AlgebraicNumber, int]]:
    return roots_with_boxes(p)


def select_root(poly: IntPolynomial, enclosure) -> AlgebraicNumber:
    """Pick the unique root of `poly` matched by a shrinking enclosure.

    `enclosure(width)` must return a rigorous Box containing the target
    value, shrinking as `width` decreases; the target is known to be a
    root of `poly`.
    """
    candidates = [root for root, _ in roots_with_boxes(poly)]
    width = Fraction(1, 4)
    while True:
        encl = enclosure(width)
        alive = [c for c in candidates if c.refined(width).intersects(encl)]
        if len(alive) == 1:
            return alive[0]
        if not alive:  # pragma: no cover - enclosure must contain the value
            raise AssertionError("enclosure excluded all candidate roots")
        candidates = alive
        width /= 8


# wire the internal name used by the arithmetic methods above
_select_root = select_root


def root_of_unity(k: int, r: int) -> AlgebraicNumber:
    """The exact value e^(2*pi*i*k/r)."""
    import mpmath

    k %= r
    g = math.gcd(k, r) if k else r
    m = r // g
    if m == 1:
        return ONE
    if m == 2:
        return MINUS_ONE
    poly = cyclotomic(m)

    def encl(width: Fraction) -> Box:
        prec = max(60, int(-math.log2(float(width))) + 30)
        old = mpmath.iv.prec
        try:
            mpmath.iv.prec = prec
            theta = mpmath.iv.pi * 2 * k / r
            c, s = mpmath.iv.cos(theta), mpmath.iv.sin(theta)
            pad = Fraction(1, 2 ** (prec // 2))
            c_lo, c_hi = iv_endpoints(c)
            s_lo, s_hi = iv_endpoints(s)
            return Box(c_lo - pad, c_hi + pad, s_lo - pad, s_hi + pad)
        finally:
            mpmath.iv.prec = old

    return select_root(poly, encl)


def iv_endpoints(x) -> tuple[Fraction, Fraction]:
    """Exact rational endpoints of an mpmath real interval."""
    lo, hi = x._mpi_
    return _raw_mpf_to_fraction(lo), _raw_mpf_to_fraction(hi)


def _raw_mpf_to_fraction(raw) -> Fraction:
    sign, man, exp, _ = raw
    if man == 0 and exp == 0:
        return Fraction(0)
    val = Fraction(man) * (Fraction(2) ** exp)
    return -val if sign else val


ZERO = AlgebraicNumber.from_int(0)
ONE = AlgebraicNumber.from_int(1)
MINUS_ONE = AlgebraicNumber.from_int(-1)
ALG_I = AlgebraicNumber(IntPolynomial([1, 0, 1]), Box.make(0, 0, 1, 1))
NEG_I = AlgebraicNumber(IntPolynomial([1, 0, 1]), Box.make(0, 0, -1, -1))
