"""Exact rational arithmetic and exact linear algebra.

Rationals are implemented from scratch on top of Python's arbitrary
precision integers and kept in canonical form at all times: the
denominator is positive, numerator and denominator are coprime, and
zero is stored as 0/1.  Equality and hashing agree with plain ints for
integral values, so Rational(4, 2) == 2 and both hash alike.

Matrix rank is computed by fraction-free (Bareiss) elimination after
clearing denominators row by row, so no floating point is involved
anywhere.
"""

from __future__ import annotations

from math import gcd, lcm
from typing import Sequence, Union

RationalLike = Union["Rational", int]


class Rational:
    """An exact rational number in canonical form."""

    __slots__ = ("num", "den")

    num: int
    den: int

    def __init__(self, num: int, den: int = 1) -> None:
        if den == 0:
            raise ZeroDivisionError("rational with zero denominator")
        if den < 0:
            num, den = -num, -den
        g = gcd(num, den)
        if g > 1:
            num //= g
            den //= g
        self.num = num
        self.den = den

    @classmethod
    def from_string(cls, text: str) -> "Rational":
        """Parse "p/q" or "p" (the serialization produced by str)."""
        s = text.strip()
        if "/" in s:
            p, q = s.split("/")
            return cls(int(p), int(q))
        return cls(int(s))

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: RationalLike) -> "Rational":
        if isinstance(other, int):
            return Rational(self.num + other * self.den, self.den)
        if not isinstance(other, Rational):
            return NotImplemented
        if self.den == 1 and other.den == 1:
            return Rational(self.num + other.num)
        return Rational(self.num * other.den + other.num * self.den,
                        self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other: RationalLike) -> "Rational":
        if isinstance(other, int):
            return Rational(self.num - other * self.den, self.den)
        if not isinstance(other, Rational):
            return NotImplemented
        if self.den == 1 and other.den == 1:
            return Rational(self.num - other.num)
        return Rational(self.num * other.den - other.num * self.den,
                        self.den * other.den)

    def __rsub__(self, other: RationalLike) -> "Rational":
        if isinstance(other, int):
            return Rational(other * self.den - self.num, self.den)
        return NotImplemented

    def __mul__(self, other: RationalLike) -> "Rational":
        if isinstance(other, int):
            return Rational(self.num * other, self.den)
        if not isinstance(other, Rational):
            return NotImplemented
        if self.den == 1 and other.den == 1:
            return Rational(self.num * other.num)
        return Rational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: RationalLike) -> "Rational":
        if isinstance(other, int):
            return Rational(self.num, self.den * other)
        if not isinstance(other, Rational):
            return NotImplemented
        return Rational(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other: RationalLike) -> "Rational":
        if isinstance(other, int):
            return Rational(other * self.den, self.num)
        return NotImplemented

    def __neg__(self) -> "Rational":
        r = object.__new__(Rational)
        r.num = -self.num
        r.den = self.den
        return r

    def __pos__(self) -> "Rational":
        return self

    def __abs__(self) -> "Rational":
        r = object.__new__(Rational)
        r.num = abs(self.num)
        r.den = self.den
        return r

    def inverse(self) -> "Rational":
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        return Rational(self.den, self.num)

    # -- comparison ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Rational):
            return self.num == other.num and self.den == other.den
        if isinstance(other, int):
            return self.den == 1 and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.den == 1:
            return hash(self.num)
        return hash((self.num, self.den))

    # denominators are positive, so cross multiplication keeps order
    def __lt__(self, other: RationalLike) -> bool:
        if isinstance(other, int):
            return self.num < other * self.den
        return self.num * other.den < other.num * self.den

    def __le__(self, other: RationalLike) -> bool:
        if isinstance(other, int):
            return self.num <= other * self.den
        return self.num * other.den <= other.num * self.den

    def __gt__(self, other: RationalLike) -> bool:
        if isinstance(other, int):
            return self.num > other * self.den
        return self.num * other.den > other.num * self.den

    def __ge__(self, other: RationalLike) -> bool:
        if isinstance(other, int):
            return self.num >= other * self.den
        return self.num * other.den >= other.num * self.den

    def __bool__(self) -> bool:
        return self.num != 0

    # -- formatting ---------------------------------------------------

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"Rational({self.num}, {self.den})"


ZERO = Rational(0)
ONE = Rational(1)


def rat(num: int, den: int = 1) -> Rational:
    """Shorthand constructor."""
    return Rational(num, den)


def _as_rational(x: RationalLike) -> Rational:
    return x if isinstance(x, Rational) else Rational(x)


class RationalMatrix:
    """A dense matrix of Rationals with exact rank and solving."""

    def __init__(self, rows: Sequence[Sequence[RationalLike]]) -> None:
        self.rows: list[list[Rational]] = [
            [_as_rational(x) for x in row] for row in rows
        ]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError("ragged matrix")

    def _integer_rows(self) -> list[list[int]]:
        # scaling a row by a positive integer never changes the rank
        out = []
        for row in self.rows:
            m = lcm(*(x.den for x in row)) if row else 1
            out.append([x.num * (m // x.den) for x in row])
        return out

    def rank(self) -> int:
        return _integer_rank(self._integer_rows())

    def solve(self, rhs: Sequence[RationalLike]) -> list[Rational] | None:
        """One exact solution x of self * x = rhs, or None if inconsistent.

        Free variables are set to zero.  Uses Gauss-Jordan elimination
        over the rationals.
        """
        if len(rhs) != self.nrows:
            raise ValueError("rhs length does not match row count")
        aug = [row[:] + [_as_rational(b)] for row, b in zip(self.rows, rhs)]
        n, m = self.nrows, self.ncols
        pivots: list[tuple[int, int]] = []
        r = 0
        for c in range(m):
            pivot = next((i for i in range(r, n) if aug[i][c].num != 0), None)
            if pivot is None:
                continue
            aug[r], aug[pivot] = aug[pivot], aug[r]
            inv = aug[r][c].inverse()
            aug[r] = [x * inv for x in aug[r]]
            for i in range(n):
                if i != r and aug[i][c].num != 0:
                    f = aug[i][c]
                    aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
            pivots.append((r, c))
            r += 1
            if r == n:
                break
        for i in range(r, n):
            if aug[i][m].num != 0:
                return None
        x = [Rational(0) for _ in range(m)]
        for pr, pc in pivots:
            x[pc] = aug[pr][m]
        return x


def _integer_rank(rows: list[list[int]]) -> int:
    """Rank by Bareiss fraction-free elimination (exact divisions only)."""
    m = [row[:] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    prev = 1
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        # every row below is updated, zero pivot column or not: Bareiss
        # exactness (each entry a minor of the input) needs the uniform rule
        for i in range(r + 1, nrows):
            mi, mr = m[i], m[r]
            f = mi[c]
            for j in range(c, ncols):
                mi[j] = (mi[j] * p - f * mr[j]) // prev
        prev = p
        rank += 1
        r += 1
        if r == nrows:
            break
    return rank


def matrix_rank(rows: Sequence[Sequence[RationalLike]]) -> int:
    """Exact rank of a matrix given as nested sequences of Rational/int."""
    return RationalMatrix(rows).rank()
