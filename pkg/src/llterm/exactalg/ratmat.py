"""Exact linear algebra over Q and over the algebraic numbers.

RationalMatrix keeps Fraction entries and never rounds. FieldMatrix runs
the same eliminations over any element type exposing +, -, *, inverse()
and is_zero (AlgebraicNumber, FieldElement), which is what the
eigen-decomposition and witness machinery need.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .intpoly import IntPolynomial, clear_denominators


class RationalMatrix:
    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if self.rows:
            w = len(self.rows[0])
            if any(len(r) != w for r in self.rows):
                raise ValueError("ragged matrix")

    @staticmethod
    def identity(n: int) -> "RationalMatrix":
        return RationalMatrix(
            [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        )

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"RationalMatrix({[list(map(str, r)) for r in self.rows]})"

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def scale(self, q) -> "RationalMatrix":
        q = Fraction(q)
        return RationalMatrix([[a * q for a in r] for r in self.rows])

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows))
        return RationalMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        )

    def mul_vector(self, v: Sequence) -> list[Fraction]:
        v = [Fraction(x) for x in v]
        return [sum(a * b for a, b in zip(row, v)) for row in self.rows]

    def pow(self, k: int) -> "RationalMatrix":
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative matrix power")
        acc = RationalMatrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                acc = acc @ base
            base = base @ base
            k >>= 1
        return acc

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(list(zip(*self.rows)))

    def is_integer(self) -> bool:
        return all(x.denominator == 1 for r in self.rows for x in r)

    def to_int_rows(self) -> list[list[int]]:
        if not self.is_integer():
            raise ValueError("matrix has non-integer entries")
        return [[int(x) for x in r] for r in self.rows]

    # -- eliminations ------------------------------------------------------

    def rref(self) -> tuple["RationalMatrix", tuple[int, ...]]:
        rows = [list(r) for r in self.rows]
        pivots: list[int] = []
        pr = 0
        for pc in range(self.ncols):
            pivot_row = next((i for i in range(pr, len(rows)) if rows[i][pc] != 0), None)
            if pivot_row is None:
                continue
            rows[pr], rows[pivot_row] = rows[pivot_row], rows[pr]
            inv = 1 / rows[pr][pc]
            rows[pr] = [x * inv for x in rows[pr]]
            for i in range(len(rows)):
                if i != pr and rows[i][pc] != 0:
                    f = rows[i][pc]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[pr])]
            pivots.append(pc)
            pr += 1
            if pr == len(rows):
                break
        return RationalMatrix(rows), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[list[Fraction]]:
        red, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for fc in free:
            v = [Fraction(0)] * self.ncols
            v[fc] = Fraction(1)
            for pr, pc in enumerate(pivots):
                v[pc] = -red.rows[pr][fc]
            basis.append(v)
        return basis

    def solve(self, rhs: Sequence) -> Optional[list[Fraction]]:
        """A particular solution of self @ x = rhs, or None if inconsistent."""
        rhs = [Fraction(x) for x in rhs]
        aug = RationalMatrix([list(r) + [b] for r, b in zip(self.rows, rhs)])
        red, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        x = [Fraction(0)] * self.ncols
        for pr, pc in enumerate(pivots):
            x[pc] = red.rows[pr][self.ncols]
        return x

    def det(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        rows = [list(r) for r in self.rows]
        n = self.nrows
        det = Fraction(1)
        for c in range(n):
            pivot = next((i for i in range(c, n) if rows[i][c] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != c:
                rows[c], rows[pivot] = rows[pivot], rows[c]
                det = -det
            det *= rows[c][c]
            inv = 1 / rows[c][c]
            for i in range(c + 1, n):
                if rows[i][c] != 0:
                    f = rows[i][c] * inv
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
        return det

    # -- polynomial invariants ------------------------------------------------

    def charpoly(self) -> IntPolynomial:
        """Exact characteristic polynomial det(xI - A).

        Computed with the Faddeev-LeVerrier recurrence over Q; the result
        is cleared to a primitive integer polynomial (monic already for
        integer input).
        """
        if self.nrows != self.ncols:
            raise ValueError("characteristic polynomial of a non-square matrix")
        n = self.nrows
        coeffs = [Fraction(1)]  # c_0 = 1 for x^n
        m = RationalMatrix.identity(n)
        for k in range(1, n + 1):
            m = self @ m
            ck = -Fraction(sum(m.rows[i][i] for i in range(n)), k)
            coeffs.append(ck)
            if k < n:
                m = m + RationalMatrix.identity(n).scale(ck)
        # coeffs are for x^n, x^(n-1), ..., constant
        return clear_denominators(list(reversed(coeffs)))

    def charpoly_cofactor(self) -> IntPolynomial:
        """Independent oracle: cofactor expansion of det(xI - A) over Q[x]."""
        n = self.nrows

        def poly_det(mat: list[list[list[Fraction]]]) -> list[Fraction]:
            if len(mat) == 1:
                return mat[0][0]
            acc = [Fraction(0)]
            for j, head in enumerate(mat[0]):
                if all(c == 0 for c in head):
                    continue
                minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
                sub = poly_det(minor)
                prod = [Fraction(0)] * (len(head) + len(sub) - 1)
                for a, ca in enumerate(head):
                    for b, cb in enumerate(sub):
                        prod[a + b] += ca * cb
                sign = -1 if j % 2 else 1
                if len(prod) > len(acc):
                    acc += [Fraction(0)] * (len(prod) - len(acc))
                for i, c in enumerate(prod):
                    acc[i] += sign * c
            return acc

        entries = [
            [
                [Fraction(-self.rows[i][j]), Fraction(1)] if i == j else [Fraction(-self.rows[i][j])]
                for j in range(n)
            ]
            for i in range(n)
        ]
        return clear_denominators(poly_det(entries))

    def minimal_polynomial(self) -> IntPolynomial:
        """Monic minimal polynomial via the first dependency among powers."""
        n = self.nrows
        powers = [RationalMatrix.identity(n)]
        vecs = [[x for row in powers[0].rows for x in row]]
        for _ in range(n):
            powers.append(self @ powers[-1])
            vecs.append([x for row in powers[-1].rows for x in row])
            # look for a dependency  A^k = sum c_i A^i  (i < k)
            k = len(vecs) - 1
            system = RationalMatrix(list(zip(*vecs[:k])))
            sol = system.solve(vecs[k])
            if sol is not None:
                coeffs = [-c for c in sol] + [Fraction(1)]
                return clear_denominators(coeffs)
        raise AssertionError("minimal polynomial must have degree <= n")


# -- generic elimination over algebraic elements -------------------------------


@dataclass
class LinearSolution:
    status: str  # "unique" | "underdetermined" | "inconsistent"
    particular: Optional[list]
    kernel: list[list]


class FieldMatrix:
    """Dense matrix over elements with +, -, *, inverse() and is_zero."""

    def __init__(self, entries: Sequence[Sequence], zero, one):
        self.entries = [list(r) for r in entries]
        self.zero = zero
        self.one = one

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def mul_vector(self, v: list) -> list:
        out = []
        for row in self.entries:
            acc = self.zero
            for a, b in zip(row, v):
                if not (a.is_zero or b.is_zero):
                    acc = acc + a * b
            out.append(acc)
        return out

    def solve(self, rhs: list) -> LinearSolution:
        """Gauss-Jordan over the element field; exact zero tests."""
        rows = [list(r) + [b] for r, b in zip(self.entries, rhs)]
        ncols = self.ncols
        pivots: list[int] = []
        pr = 0
        for pc in range(ncols):
            pivot_row = next(
                (i for i in range(pr, len(rows)) if not rows[i][pc].is_zero), None
            )
            if pivot_row is None:
                continue
            rows[pr], rows[pivot_row] = rows[pivot_row], rows[pr]
            inv = rows[pr][pc].inverse()
            rows[pr] = [x * inv for x in rows[pr]]
            for i in range(len(rows)):
                if i != pr and not rows[i][pc].is_zero:
                    f = rows[i][pc]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[pr])]
            pivots.append(pc)
            pr += 1
            if pr == len(rows):
                break
        for i in range(pr, len(rows)):
            if not rows[i][ncols].is_zero:
                return LinearSolution("inconsistent", None, [])
        particular = [self.zero] * ncols
        for r, pc in enumerate(pivots):
            particular[pc] = rows[r][ncols]
        kernel = []
        for fc in range(ncols):
            if fc in pivots:
                continue
            v = [self.zero] * ncols
            v[fc] = self.one
            for r, pc in enumerate(pivots):
                v[pc] = self.zero - rows[r][fc]
            kernel.append(v)
        status = "unique" if not kernel else "underdetermined"
        return LinearSolution(status, particular, kernel)


def solve_linear_exact(matrix: Sequence[Sequence], rhs: Sequence) -> LinearSolution:
    """Exact solve over the algebraic numbers.

    Returns a particular solution plus a kernel basis, or an inconsistency
    marker; entries must be AlgebraicNumber (use from_fraction to lift
    rational data).
    """
    from .algebraic import ONE, ZERO

    return FieldMatrix(matrix, ZERO, ONE).solve(list(rhs))


def int_matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def int_matpow(a: list[list[int]], k: int) -> list[list[int]]:
    n = len(a)
    acc = [[int(i == j) for j in range(n)] for i in range(n)]
    base = [row[:] for row in a]
    while k:
        if k & 1:
            acc = int_matmul(acc, base)
        base = int_matmul(base, base)
        k >>= 1
    return acc


def int_matvec(a: list[list[int]], v: list[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def lcm_many(xs) -> int:
    out = 1
    for x in xs:
        out = math.lcm(out, x)
    return out
