import random
from fractions import Fraction

import pytest

from llterm.exactalg.algebraic import AlgebraicNumber, isolate_roots
from llterm.exactalg.intpoly import IntPolynomial
from llterm.exactalg.ratmat import (
    FieldMatrix,
    RationalMatrix,
    int_matpow,
    solve_linear_exact,
)


def P(*coeffs):
    return IntPolynomial(coeffs)


def test_charpoly_identity():
    m = RationalMatrix.identity(2)
    assert m.charpoly() == P(1, -2, 1)  # (x-1)^2


def test_charpoly_rotation():
    m = RationalMatrix([[0, -1], [1, 0]])
    assert m.charpoly() == P(1, 0, 1)


def test_charpoly_companion():
    m = RationalMatrix([[0, 1, 0], [0, 0, 1], [8, -10, 5]])
    assert m.charpoly() == P(-8, 10, -5, 1)


def test_charpoly_matches_cofactor_oracle_random():
    rng = random.Random(7)
    for n in (2, 3, 4, 5):
        for _ in range(3):
            m = RationalMatrix([[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)])
            assert m.charpoly() == m.charpoly_cofactor()


def test_cayley_hamilton_random():
    rng = random.Random(11)
    for n in (2, 3, 4, 5):
        m = RationalMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        p = m.charpoly()
        acc = RationalMatrix([[0] * n for _ in range(n)])
        power = RationalMatrix.identity(n)
        for c in p.coeffs:
            acc = acc + power.scale(c)
            power = power @ m
        assert all(x == 0 for row in acc.rows for x in row)


def test_minimal_polynomial():
    jordan = RationalMatrix([[1, 1], [0, 1]])
    assert jordan.minimal_polynomial() == P(1, -2, 1)
    diag = RationalMatrix([[1, 0], [0, 1]])
    assert diag.minimal_polynomial() == P(-1, 1)
    comp = RationalMatrix([[0, 1, 0], [0, 0, 1], [8, -10, 5]])
    assert comp.minimal_polynomial() == P(-8, 10, -5, 1)


def test_solve_and_nullspace():
    m = RationalMatrix([[1, 2], [2, 4]])
    sol = m.solve([1, 2])
    assert sol is not None
    assert m.mul_vector(sol) == [Fraction(1), Fraction(2)]
    assert m.solve([1, 3]) is None
    ns = m.nullspace()
    assert len(ns) == 1
    assert m.mul_vector(ns[0]) == [Fraction(0), Fraction(0)]


def test_det():
    assert RationalMatrix([[1, 2], [3, 4]]).det() == -2
    assert RationalMatrix([[1, 2], [2, 4]]).det() == 0


def test_pow():
    a = RationalMatrix([[1, -1], [1, 1]])
    a4 = a.pow(4)
    assert a4 == RationalMatrix([[-4, 0], [0, -4]])
    assert int_matpow([[1, -1], [1, 1]], 4) == [[-4, 0], [0, -4]]


def test_solve_linear_exact_identity():
    one = AlgebraicNumber.from_int(1)
    zero = AlgebraicNumber.from_int(0)
    rhs = [AlgebraicNumber.from_int(3), AlgebraicNumber.from_int(5)]
    res = solve_linear_exact([[one, zero], [zero, one]], rhs)
    assert res.status == "unique"
    assert res.particular[0].equals(rhs[0]) and res.particular[1].equals(rhs[1])


def test_solve_linear_exact_singular_consistent():
    one = AlgebraicNumber.from_int(1)
    two = AlgebraicNumber.from_int(2)
    res = solve_linear_exact([[one, two], [two, AlgebraicNumber.from_int(4)]],
                             [one, two])
    assert res.status == "underdetermined"
    assert len(res.kernel) == 1


def test_solve_linear_exact_vandermonde_eigenvalues():
    # nodes 2, (3 +- i sqrt7)/2 are distinct, so the Vandermonde is invertible
    roots = [r for r, _ in isolate_roots(P(-8, 10, -5, 1))]
    rows = [[r.pow(k) for k in range(3)] for r in roots]
    rhs = [AlgebraicNumber.from_int(v) for v in (1, 2, 3)]
    res = solve_linear_exact(rows, rhs)
    assert res.status == "unique"
    # residual must be exactly zero
    for row, b in zip(rows, rhs):
        acc = AlgebraicNumber.from_int(0)
        for a, x in zip(row, res.particular):
            acc = acc + a * x
        assert acc.equals(b)
