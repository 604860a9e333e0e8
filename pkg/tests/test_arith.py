"""Tests for exact rational arithmetic and exact linear algebra."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from m0nbar.arith import Rational, RationalMatrix, matrix_rank, rat

nonzero_ints = st.integers(min_value=-10**6, max_value=10**6).filter(lambda n: n != 0)
ints = st.integers(min_value=-10**6, max_value=10**6)
rationals = st.builds(Rational, ints, nonzero_ints)
nonzero_rationals = st.builds(Rational, nonzero_ints, nonzero_ints)


def test_canonical_form():
    assert (Rational(2, 4).num, Rational(2, 4).den) == (1, 2)
    assert (Rational(-2, -4).num, Rational(-2, -4).den) == (1, 2)
    assert (Rational(2, -4).num, Rational(2, -4).den) == (-1, 2)
    assert (Rational(0, -7).num, Rational(0, -7).den) == (0, 1)
    with pytest.raises(ZeroDivisionError):
        Rational(1, 0)


def test_int_interop_and_hash():
    assert Rational(4, 2) == 2
    assert hash(Rational(4, 2)) == hash(2)
    assert Rational(1, 2) + 1 == Rational(3, 2)
    assert 1 - Rational(1, 2) == Rational(1, 2)
    assert 3 * Rational(1, 2) == Rational(3, 2)
    assert 1 / Rational(2, 3) == Rational(3, 2)
    assert {Rational(2): "x"}[2] == "x"


def test_str_and_parse():
    assert str(Rational(3, 4)) == "3/4"
    assert str(Rational(-3, 4)) == "-3/4"
    assert str(Rational(7)) == "7"
    assert str(Rational(0)) == "0"
    for s in ["3/4", "-3/4", "7", "0", "-12/5"]:
        assert str(Rational.from_string(s)) == s


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + Rational(0) == a
    assert a * Rational(1) == a
    assert a + (-a) == Rational(0)


@given(nonzero_rationals)
def test_inverse(a):
    assert a * a.inverse() == Rational(1)
    assert a.inverse() == 1 / a


@given(rationals, rationals)
def test_order_compatible_with_subtraction(a, b):
    assert (a < b) == ((b - a).num > 0)
    assert (a <= b) == (a < b or a == b)
    assert (a < b) != (a >= b)


@given(rationals)
def test_matches_stdlib_fractions(a):
    f = Fraction(a.num, a.den)
    assert (a.num, a.den) == (f.numerator, f.denominator)
    b = a * a - a + Rational(7, 3)
    g = f * f - f + Fraction(7, 3)
    assert (b.num, b.den) == (g.numerator, g.denominator)


# -- matrices ----------------------------------------------------------


def fraction_rank(rows):
    """Independent oracle: plain Gaussian elimination over Fraction."""
    m = [[Fraction(x.num, x.den) if isinstance(x, Rational) else Fraction(x)
          for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        rank += 1
        r += 1
        if r == len(m):
            break
    return rank


def test_rank_examples():
    assert matrix_rank([[1, 2], [2, 4]]) == 1
    assert matrix_rank([[1, 0], [0, 1]]) == 2
    assert matrix_rank([[0, 0], [0, 0]]) == 0
    assert matrix_rank([]) == 0
    # det = 1/2*2 - 1/3*3/2 = 1/2, nonzero
    assert matrix_rank([[rat(1, 2), rat(1, 3)], [rat(3, 2), rat(2)]]) == 2
    # det = 1/2*1 - 1/3*3/2 = 0
    assert matrix_rank([[rat(1, 2), rat(1, 3)], [rat(3, 2), rat(1)]]) == 1
    # rank 2: rows 3 and 4 are combinations of rows 1 and 2
    rows = [[1, 2, 3, 4], [0, 1, 1, 0], [1, 3, 4, 4], [2, 5, 7, 8]]
    assert matrix_rank(rows) == 2


matrix_entries = st.integers(min_value=-30, max_value=30)


@given(st.lists(st.lists(matrix_entries, min_size=1, max_size=5),
                min_size=1, max_size=6).filter(
                    lambda rows: len({len(r) for r in rows}) == 1))
@settings(max_examples=200)
def test_rank_matches_fraction_oracle(rows):
    assert matrix_rank(rows) == fraction_rank(rows)


@given(st.integers(min_value=1, max_value=5).flatmap(
           lambda w: st.lists(st.lists(matrix_entries, min_size=w, max_size=w),
                              min_size=2, max_size=6)),
       st.integers(min_value=0, max_value=10**6),
       nonzero_rationals)
@settings(max_examples=150)
def test_rank_invariant_under_row_operations(rows, seed, scale):
    base = matrix_rank(rows)
    i, j = seed % len(rows), (seed // len(rows)) % len(rows)
    swapped = list(rows)
    swapped[i], swapped[j] = swapped[j], swapped[i]
    assert matrix_rank(swapped) == base
    scaled = [list(r) for r in rows]
    scaled[i] = [scale * rat(x) for x in scaled[i]]
    assert matrix_rank(scaled) == base


@given(st.lists(st.lists(matrix_entries, min_size=3, max_size=3),
                min_size=3, max_size=3))
def test_rank_transpose_invariant(rows):
    t = [list(col) for col in zip(*rows)]
    assert matrix_rank(rows) == matrix_rank(t)


def test_solve():
    m = RationalMatrix([[1, 1], [1, -1]])
    x = m.solve([rat(3), rat(1)])
    assert x == [rat(2), rat(1)]
    # inconsistent
    m = RationalMatrix([[1, 1], [2, 2]])
    assert m.solve([rat(1), rat(3)]) is None
    # underdetermined: any exact solution is fine
    m = RationalMatrix([[1, 1, 1]])
    x = m.solve([rat(5)])
    assert x is not None and sum(x, rat(0)) == rat(5)


@given(st.lists(st.lists(matrix_entries, min_size=3, max_size=3),
                min_size=2, max_size=4),
       st.lists(matrix_entries, min_size=3, max_size=3))
@settings(max_examples=100)
def test_solve_produces_valid_solutions(rows, xs):
    mat = RationalMatrix(rows)
    rhs = [sum((rat(a) * rat(x) for a, x in zip(row, xs)), rat(0))
           for row in rows]
    sol = mat.solve(rhs)
    assert sol is not None
    for row, b in zip(rows, rhs):
        assert sum((rat(a) * s for a, s in zip(row, sol)), rat(0)) == b
