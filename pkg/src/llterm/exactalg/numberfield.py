"""Elements of a fixed number field Q(theta) with rational coordinates.

Arithmetic is plain polynomial arithmetic modulo the generator's minimal
polynomial, so zero tests are free (all coordinates zero) and signs of
real values reduce to interval evaluation at the generator's isolating
box. This is what keeps per-point witness evaluation cheap; conversion to
a canonical AlgebraicNumber happens only at API boundaries.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional

from .algebraic import AlgebraicNumber, ZERO
from .boxes import Box


class NumberField:
    """Q(theta) for a fixed generator with known minimal polynomial."""

    def __init__(self, generator: AlgebraicNumber):
        self.generator = generator
        p = generator.minpoly
        self.degree = p.degree
        lead = Fraction(p.leading)
        # monic reduction polynomial over Q
        self._monic = [Fraction(c) / lead for c in p.coeffs]
        self._power_cache: dict[int, "FieldElement"] = {}
        self._alg_power_cache: dict[int, AlgebraicNumber] = {0: _one_alg()}

    def __repr__(self) -> str:
        return f"NumberField({self.generator.minpoly!r})"

    def zero(self) -> "FieldElement":
        return FieldElement(self, (Fraction(0),) * self.degree)

    def one(self) -> "FieldElement":
        return self.from_fraction(Fraction(1))

    def from_fraction(self, q) -> "FieldElement":
        coords = [Fraction(0)] * self.degree
        coords[0] = Fraction(q)
        return FieldElement(self, tuple(coords))

    def gen(self) -> "FieldElement":
        if self.degree == 1:
            return self.from_fraction(self.generator.as_fraction())
        coords = [Fraction(0)] * self.degree
        coords[1] = Fraction(1)
        return FieldElement(self, tuple(coords))

    def element(self, coords: Iterable) -> "FieldElement":
        cs = [Fraction(c) for c in coords]
        if len(cs) > self.degree:
            cs = self._reduce(cs)
        cs += [Fraction(0)] * (self.degree - len(cs))
        return FieldElement(self, tuple(cs))

    def _reduce(self, cs: list[Fraction]) -> list[Fraction]:
        n = self.degree
        cs = list(cs)
        for i in range(len(cs) - 1, n - 1, -1):
            f = cs[i]
            if f:
                for j in range(n):
                    cs[i - n + j] -= f * self._monic[j]
            cs[i] = Fraction(0)
        return cs[:n]

    def _mul_coords(self, a, b) -> tuple[Fraction, ...]:
        prod = [Fraction(0)] * (2 * self.degree - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    prod[i + j] += ca * cb
        out = self._reduce(prod)
        return tuple(out + [Fraction(0)] * (self.degree - len(out)))

    def _inv_coords(self, a) -> tuple[Fraction, ...]:
        # extended Euclid in Q[x] against the monic reduction polynomial
        def trim(p):
            while p and p[-1] == 0:
                p.pop()
            return p

        def polydivmod(num, den):
            num = list(num)
            q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
            for i in range(len(num) - 1, len(den) - 2, -1):
                f = num[i] / den[-1]
                if f:
                    q[i - len(den) + 1] = f
                    for j, dc in enumerate(den):
                        num[i - len(den) + 1 + j] -= f * dc
            return q, trim(num)

        r0 = trim([c for c in self._monic] + [Fraction(1)])
        r1 = trim(list(a))
        if not r1:
            raise ZeroDivisionError("inverse of zero field element")
        s0, s1 = [], [Fraction(1)]
        while True:
            q, r = polydivmod(r0, r1)
            if not r:
                break
            # s_new = s0 - q * s1
            s_new = list(s0) + [Fraction(0)] * max(0, len(q) + len(s1) - 1 - len(s0))
            for i, qc in enumerate(q):
                if qc:
                    for j, sc in enumerate(s1):
                        if i + j >= len(s_new):
                            s_new.extend([Fraction(0)] * (i + j + 1 - len(s_new)))
                        s_new[i + j] -= qc * sc
            r0, r1, s0, s1 = r1, r, s1, trim(s_new)
        # r1 is a nonzero constant gcd; scale s1 by its inverse
        c = r1[0]
        inv = [sc / c for sc in s1]
        inv = self._reduce(inv)
        return tuple(inv + [Fraction(0)] * (self.degree - len(inv)))

    def gen_power_box(self, k: int, width: Fraction) -> Box:
        return self.generator.refined(width).pow(k)

    def gen_alg_power(self, k: int) -> AlgebraicNumber:
        cache = self._alg_power_cache
        if k not in cache:
            cache[k] = self.generator.pow(k)
        return cache[k]


def _one_alg() -> AlgebraicNumber:
    from .algebraic import ONE

    return ONE


class FieldElement:
    """Value sum(coords[k] * theta^k) inside a NumberField."""

    __slots__ = ("field", "coords", "_alg")

    def __init__(self, field: NumberField, coords: tuple[Fraction, ...]):
        self.field = field
        self.coords = coords
        self._alg: Optional[AlgebraicNumber] = None

    # -- ring/field operations ------------------------------------------------

    def _check(self, other: "FieldElement"):
        if other.field is not self.field:
            raise ValueError("field elements belong to different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(
            self.field, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(
            self.field, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        return FieldElement(self.field, self.field._mul_coords(self.coords, other.coords))

    __rmul__ = __mul__

    def scale(self, q) -> "FieldElement":
        q = Fraction(q)
        return FieldElement(self.field, tuple(a * q for a in self.coords))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field._inv_coords(self.coords))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def pow(self, k: int) -> "FieldElement":
        if k < 0:
            return self.inverse().pow(-k)
        acc = self.field.one()
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    # -- predicates -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("field element is not rational")
        return self.coords[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._check(other)
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"FieldElement({list(self.coords)} over {self.field!r})"

    # -- analytic views -----------------------------------------------------------

    def interval(self, width: Fraction) -> Box:
        """Rigorous enclosure of the embedded complex value."""
        box = Box.point(self.coords[0])
        gen_box = self.field.generator.refined(width)
        power = gen_box
        for k in range(1, len(self.coords)):
            c = self.coords[k]
            if c:
                box = box + power.scale(c)
            if k + 1 < len(self.coords):
                power = power * gen_box
        return box

    def sign(self) -> int:
        """Sign of a real-embedded element (real generator required)."""
        if self.is_zero:
            return 0
        if self.is_rational():
            return -1 if self.coords[0] < 0 else 1
        width = Fraction(1, 16)
        while True:
            box = self.interval(width)
            if box.re_lo > 0:
                return 1
            if box.re_hi < 0:
                return -1
            width /= 16

    def conjugate_element(self, conj_field: "NumberField") -> "FieldElement":
        """Same coordinates over the conjugate generator's field."""
        return FieldElement(conj_field, self.coords)

    def to_algebraic(self) -> AlgebraicNumber:
        if self._alg is not None:
            return self._alg
        if self.is_zero:
            alg = ZERO
        elif self.is_rational():
            alg = AlgebraicNumber.from_fraction(self.coords[0])
        else:
            alg = ZERO
            for k, c in enumerate(self.coords):
                if c:
                    alg = alg + self.field.gen_alg_power(k).mul_fraction(c)
        self._alg = alg
        return alg
