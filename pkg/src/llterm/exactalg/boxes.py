"""Exact complex interval arithmetic on rectangles with rational corners.

A Box is a closed axis-aligned rectangle in C. All endpoint arithmetic is
done with Fractions, so enclosures computed here are rigorous: if z lies in
a box and w in another, then z op w lies in the box the operation returns.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rat = Union[int, Fraction]


def _interval_mul(a_lo, a_hi, b_lo, b_hi):
    ps = (a_lo * b_lo, a_lo * b_hi, a_hi * b_lo, a_hi * b_hi)
    return min(ps), max(ps)


def sqrt_bounds(q: Fraction, bits: int = 32) -> tuple[Fraction, Fraction]:
    """Outward rational bounds for sqrt(q), q >= 0."""
    if q < 0:
        raise ValueError("sqrt of negative rational")
    if q == 0:
        return Fraction(0), Fraction(0)
    n, d = q.numerator, q.denominator
    s = 1 << bits
    t = n * d * s * s
    r = math.isqrt(t)
    return Fraction(r, d * s), Fraction(r + 1, d * s)


@dataclass(frozen=True)
class Box:
    """Closed rectangle [re_lo, re_hi] x [im_lo, im_hi] in C."""

    re_lo: Fraction
    re_hi: Fraction
    im_lo: Fraction
    im_hi: Fraction

    def __post_init__(self):
        if self.re_lo > self.re_hi or self.im_lo > self.im_hi:
            raise ValueError("empty box")

    @staticmethod
    def point(re: Rat, im: Rat = 0) -> "Box":
        re, im = Fraction(re), Fraction(im)
        return Box(re, re, im, im)

    @staticmethod
    def make(re_lo: Rat, re_hi: Rat, im_lo: Rat = 0, im_hi: Rat = 0) -> "Box":
        return Box(Fraction(re_lo), Fraction(re_hi), Fraction(im_lo), Fraction(im_hi))

    # -- geometry ---------------------------------------------------------

    @property
    def width(self) -> Fraction:
        return max(self.re_hi - self.re_lo, self.im_hi - self.im_lo)

    @property
    def is_point(self) -> bool:
        return self.re_lo == self.re_hi and self.im_lo == self.im_hi

    def contains_zero(self) -> bool:
        return self.re_lo <= 0 <= self.re_hi and self.im_lo <= 0 <= self.im_hi

    def contains_point(self, re: Rat, im: Rat = 0) -> bool:
        return self.re_lo <= re <= self.re_hi and self.im_lo <= im <= self.im_hi

    def intersects(self, other: "Box") -> bool:
        return not (
            self.re_hi < other.re_lo
            or other.re_hi < self.re_lo
            or self.im_hi < other.im_lo
            or other.im_hi < self.im_lo
        )

    def intersection(self, other: "Box") -> "Box":
        return Box(
            max(self.re_lo, other.re_lo),
            min(self.re_hi, other.re_hi),
            max(self.im_lo, other.im_lo),
            min(self.im_hi, other.im_hi),
        )

    def midpoint(self) -> complex:
        return complex((self.re_lo + self.re_hi) / 2, (self.im_lo + self.im_hi) / 2)

    # -- arithmetic (rigorous enclosures) ----------------------------------

    def __add__(self, other: "Box") -> "Box":
        return Box(
            self.re_lo + other.re_lo,
            self.re_hi + other.re_hi,
            self.im_lo + other.im_lo,
            self.im_hi + other.im_hi,
        )

    def __sub__(self, other: "Box") -> "Box":
        return self + (-other)

    def __neg__(self) -> "Box":
        return Box(-self.re_hi, -self.re_lo, -self.im_hi, -self.im_lo)

    def conjugate(self) -> "Box":
        return Box(self.re_lo, self.re_hi, -self.im_hi, -self.im_lo)

    def __mul__(self, other: "Box") -> "Box":
        ac_lo, ac_hi = _interval_mul(self.re_lo, self.re_hi, other.re_lo, other.re_hi)
        bd_lo, bd_hi = _interval_mul(self.im_lo, self.im_hi, other.im_lo, other.im_hi)
        ad_lo, ad_hi = _interval_mul(self.re_lo, self.re_hi, other.im_lo, other.im_hi)
        bc_lo, bc_hi = _interval_mul(self.im_lo, self.im_hi, other.re_lo, other.re_hi)
        return Box(ac_lo - bd_hi, ac_hi - bd_lo, ad_lo + bc_lo, ad_hi + bc_hi)

    def scale(self, r: Rat) -> "Box":
        r = Fraction(r)
        if r >= 0:
            return Box(self.re_lo * r, self.re_hi * r, self.im_lo * r, self.im_hi * r)
        return Box(self.re_hi * r, self.re_lo * r, self.im_hi * r, self.im_lo * r)

    def shift(self, r: Rat) -> "Box":
        r = Fraction(r)
        return Box(self.re_lo + r, self.re_hi + r, self.im_lo, self.im_hi)

    def modulus_sq_bounds(self) -> tuple[Fraction, Fraction]:
        """Exact bounds of |z|^2 over the box."""

        def sq_bounds(lo, hi):
            if lo <= 0 <= hi:
                return Fraction(0), max(lo * lo, hi * hi)
            m = min(lo * lo, hi * hi)
            return m, max(lo * lo, hi * hi)

        re2_lo, re2_hi = sq_bounds(self.re_lo, self.re_hi)
        im2_lo, im2_hi = sq_bounds(self.im_lo, self.im_hi)
        return re2_lo + im2_lo, re2_hi + im2_hi

    def reciprocal(self) -> "Box":
        """Enclosure of {1/z : z in box}; requires 0 not in box."""
        if self.contains_zero():
            raise ZeroDivisionError("box contains zero")
        m_lo, m_hi = self.modulus_sq_bounds()
        conj = self.conjugate()
        # 1/z = conj(z) / |z|^2; divide the conjugate box by the |z|^2 range.
        def div_bounds(lo, hi):
            cands = (lo / m_lo, lo / m_hi, hi / m_lo, hi / m_hi)
            return min(cands), max(cands)

        re_lo, re_hi = div_bounds(conj.re_lo, conj.re_hi)
        im_lo, im_hi = div_bounds(conj.im_lo, conj.im_hi)
        return Box(re_lo, re_hi, im_lo, im_hi)

    def pow(self, k: int) -> "Box":
        if k < 0:
            return self.reciprocal().pow(-k)
        acc = Box.point(1)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def abs_upper(self) -> Fraction:
        """Rational upper bound on |z| over the box."""
        _, m_hi = self.modulus_sq_bounds()
        return sqrt_bounds(m_hi)[1]

    def abs_lower(self) -> Fraction:
        lo, _ = self.modulus_sq_bounds()
        return sqrt_bounds(lo)[0]
