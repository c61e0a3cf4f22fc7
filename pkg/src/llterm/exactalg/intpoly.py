"""Dense integer polynomials with exact arithmetic.

Coefficients are arbitrary-precision ints stored lowest degree first.
These polynomials are the backbone of the algebraic-number layer: minimal
polynomials, characteristic polynomials and the resultant/factorisation
bridge all live here.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import sympy
from sympy.polys.domains import ZZ

_X = sympy.Symbol("x")


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class IntPolynomial:
    """Immutable polynomial over Z, lowest-degree-first coefficients.

    The zero polynomial has an empty coefficient tuple and degree -1.
    `content` (gcd of all coefficients, 0 for the zero polynomial) is
    computed once and kept with the value.
    """

    __slots__ = ("coeffs", "content")

    def __init__(self, coeffs: Iterable[int]):
        cs = _trim([int(c) for c in coeffs])
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "content", math.gcd(*cs) if cs else 0)

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("IntPolynomial is immutable")

    # -- basic structure -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def height(self) -> int:
        """Max absolute coefficient (0 for the zero polynomial)."""
        return max((abs(c) for c in self.coeffs), default=0)

    def primitive(self) -> "IntPolynomial":
        """Content-1 copy with positive leading coefficient."""
        if self.is_zero:
            return self
        g = self.content
        if self.leading < 0:
            g = -g
        return IntPolynomial([c // g for c in self.coeffs])

    def is_monic(self) -> bool:
        return not self.is_zero and self.leading == 1

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPolynomial(
            [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
        )

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coeffs])

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial([])
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    def scale(self, k: int) -> "IntPolynomial":
        return IntPolynomial([k * c for c in self.coeffs])

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero:
            return "IntPolynomial(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{k}")
        return "IntPolynomial(" + " + ".join(reversed(terms)) + ")"

    # -- evaluation -------------------------------------------------------

    def eval_fraction(self, q: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def eval_int(self, n: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    # -- root transforms (exact, used for the rational fast paths) --------

    def shift_roots(self, r: Fraction) -> "IntPolynomial":
        """Primitive polynomial whose roots are (root + r)."""
        # p(x - r), computed over Q then cleared of denominators.
        cs: list[Fraction] = [Fraction(0)] * (len(self.coeffs) or 1)
        for c in reversed(self.coeffs):
            # acc = acc * (x - r) + c
            nxt = [Fraction(0)] * (len(cs) + 1)
            for i, a in enumerate(cs):
                nxt[i + 1] += a
                nxt[i] -= a * r
            nxt[0] += c
            cs = nxt
        return clear_denominators(cs)

    def scale_roots(self, r: Fraction) -> "IntPolynomial":
        """Primitive polynomial whose roots are (root * r); r != 0."""
        if r == 0:
            raise ValueError("scale factor must be nonzero")
        cs = [Fraction(c) / r**k for k, c in enumerate(self.coeffs)]
        return clear_denominators(cs)

    def negate_roots(self) -> "IntPolynomial":
        return IntPolynomial(
            [(-c if k % 2 else c) for k, c in enumerate(self.coeffs)]
        ).primitive()

    def reverse_roots(self) -> "IntPolynomial":
        """Primitive polynomial whose roots are reciprocals; requires p(0) != 0."""
        if self.is_zero or self.coeffs[0] == 0:
            raise ValueError("polynomial has a zero root")
        return IntPolynomial(list(reversed(self.coeffs))).primitive()

    def compose_square(self) -> "IntPolynomial":
        """p(x^2): roots are the square roots (both signs) of p's roots."""
        out = [0] * (2 * len(self.coeffs) - 1) if self.coeffs else []
        for k, c in enumerate(self.coeffs):
            out[2 * k] = c
        return IntPolynomial(out)

    # -- division over Q ----------------------------------------------------

    def divmod_q(self, divisor: "IntPolynomial") -> tuple[list[Fraction], list[Fraction]]:
        """Quotient and remainder over Q, lowest-first Fraction lists."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        dcs = [Fraction(c) for c in divisor.coeffs]
        dn = len(dcs) - 1
        lead = dcs[-1]
        quo = [Fraction(0)] * max(len(rem) - dn, 0)
        for i in range(len(rem) - 1, dn - 1, -1):
            f = rem[i] / lead
            if f:
                quo[i - dn] = f
                for j, dc in enumerate(dcs):
                    rem[i - dn + j] -= f * dc
        while rem and rem[-1] == 0:
            rem.pop()
        return quo, rem

    def divides(self, other: "IntPolynomial") -> bool:
        _, rem = other.divmod_q(self)
        return not rem

    def pow_x_mod(self, r: int) -> list[Fraction]:
        """x^r reduced mod self (over Q), lowest-first."""
        result = [Fraction(1)]
        base = [Fraction(0), Fraction(1)]
        e = r

        def mulmod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
            prod = [Fraction(0)] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                if ca:
                    for j, cb in enumerate(b):
                        prod[i + j] += ca * cb
            return _reduce_mod(prod, self)

        while e:
            if e & 1:
                result = mulmod(result, base)
            base = mulmod(base, base)
            e >>= 1
        return result


def _reduce_mod(cs: list[Fraction], mod: IntPolynomial) -> list[Fraction]:
    dn = mod.degree
    lead = Fraction(mod.leading)
    cs = list(cs)
    for i in range(len(cs) - 1, dn - 1, -1):
        f = cs[i] / lead
        if f:
            for j, mc in enumerate(mod.coeffs):
                cs[i - dn + j] -= f * mc
        cs[i] = Fraction(0)
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def clear_denominators(cs: Sequence[Fraction]) -> IntPolynomial:
    """Primitive integer polynomial proportional to the rational one."""
    denom = math.lcm(*(c.denominator for c in cs)) if cs else 1
    return IntPolynomial([int(c * denom) for c in cs]).primitive()


def from_sympy(poly: sympy.Poly) -> IntPolynomial:
    return IntPolynomial([int(c) for c in reversed(poly.all_coeffs())])


def to_sympy(p: IntPolynomial) -> sympy.Poly:
    return sympy.Poly(list(reversed(p.coeffs)) or [0], _X, domain=ZZ)


@lru_cache(maxsize=4096)
def factor_primitive(p: IntPolynomial) -> tuple[tuple[IntPolynomial, int], ...]:
    """Irreducible factors over Q with multiplicities (content dropped).

    Factors are primitive with positive leading coefficient; exactness is
    delegated to sympy's integer polynomial factorisation.
    """
    if p.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    _, factors = to_sympy(p).factor_list()
    return tuple((from_sympy(f).primitive(), int(m)) for f, m in factors)


def resultant(p: IntPolynomial, q_expr) -> IntPolynomial:
    """Resultant in x of p(x) and a sympy expression in (x, y), as a poly in y."""
    res = sympy.resultant(to_sympy(p).as_expr(), q_expr, _X)
    return from_sympy(sympy.Poly(sympy.expand(res), sympy.Symbol("y")))


def sum_poly(pa: IntPolynomial, pb: IntPolynomial) -> IntPolynomial:
    """Polynomial with roots {a + b : p_a(a) = 0, p_b(b) = 0}."""
    y = sympy.Symbol("y")
    qb = sympy.expand(to_sympy(pb).as_expr().subs(_X, y - _X))
    return resultant(pa, qb)


def product_poly(pa: IntPolynomial, pb: IntPolynomial) -> IntPolynomial:
    """Polynomial with roots {a * b}; requires p_b(0) != 0."""
    y = sympy.Symbol("y")
    db = pb.degree
    qb = sympy.expand(sum(c * y**k * _X ** (db - k) for k, c in enumerate(pb.coeffs)))
    return resultant(pa, qb)


def mignotte_separation_lb(p: IntPolynomial) -> Fraction:
    """Rational lower bound for sqrt(6) / (d^((d+1)/2) * H^(d-1)).

    Any two distinct roots of p are farther apart than this value.
    """
    d, h = p.degree, p.height
    if d < 2:
        return Fraction(1)
    # rational under-approximation of sqrt(6)
    sqrt6_lb = Fraction(2449, 1000)
    # rational over-approximation of d^((d+1)/2)
    if (d + 1) % 2 == 0:
        dpow_ub = Fraction(d ** ((d + 1) // 2))
    else:
        scale = 10**6
        sqrt_d_ub = Fraction(math.isqrt(d * scale * scale) + 1, scale)
        dpow_ub = Fraction(d ** (d // 2)) * sqrt_d_ub
    return sqrt6_lb / (dpow_ub * h ** (d - 1))


def cyclotomic(r: int) -> IntPolynomial:
    return from_sympy(sympy.Poly(sympy.cyclotomic_poly(r, _X), _X))


X_POLY = IntPolynomial([0, 1])
ONE_POLY = IntPolynomial([1])


def rational_minpoly(q: Fraction) -> IntPolynomial:
    """Minimal polynomial q.denominator * x - q.numerator, normalised."""
    return IntPolynomial([-q.numerator, q.denominator]).primitive()
