"""Sparse multivariate polynomials over a multigraded polynomial ring.

The coordinate ring of a product of projective spaces has its variables
grouped into blocks, one block per factor; the multidegree of a monomial
is the vector of per-block total degrees.  Auxiliary variables (used
only for elimination) sit at the end of the variable list and carry
multidegree zero.

Representation: a monomial is a tuple of exponents over all variables,
a polynomial is a dict mapping monomials to nonzero Rational
coefficients.  Monomial orders compare precomputed integer key tuples
that are additive under monomial multiplication, which makes every
order here a genuine monomial order (multiplicative, with 1 minimal).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .arith import Rational

Monomial = tuple  # exponent tuple, one entry per ring variable
Multidegree = tuple  # per-block total degrees
Coefficient = Union[Rational, int]

_BLOCK_LETTERS = "abcdef"


@dataclass(frozen=True)
class RingSpec:
    """Variable layout of a multigraded polynomial ring.

    block_sizes lists the number of variables in each block; names lists
    all variable names, blocks concatenated in order, then aux_names.
    Aux variables do not contribute to the multidegree.
    """

    block_sizes: tuple
    names: tuple
    aux_names: tuple = ()

    def __post_init__(self):
        if sum(self.block_sizes) != len(self.names):
            raise ValueError("block sizes do not match name count")
        all_names = self.names + self.aux_names
        if len(set(all_names)) != len(all_names):
            raise ValueError("duplicate variable names")

    @property
    def nvars(self) -> int:
        return len(self.names) + len(self.aux_names)

    @property
    def nblocks(self) -> int:
        return len(self.block_sizes)

    @property
    def all_names(self) -> tuple:
        return self.names + self.aux_names

    def block_slices(self) -> list:
        out = []
        start = 0
        for size in self.block_sizes:
            out.append((start, start + size))
            start += size
        return out

    def index(self, name: str) -> int:
        return self.all_names.index(name)

    def multidegree(self, mono: Monomial) -> Multidegree:
        out = []
        start = 0
        for size in self.block_sizes:
            out.append(sum(mono[start:start + size]))
            start += size
        return tuple(out)

    def total_degree(self, mono: Monomial) -> int:
        """Sum of block degrees (aux variables do not count)."""
        return sum(mono[:len(self.names)])

    def extended(self, count: int = 1) -> "RingSpec":
        """Same ring with `count` extra aux (elimination) variables."""
        k = len(self.aux_names)
        extra = tuple(f"_t{k + i}" for i in range(count))
        return RingSpec(self.block_sizes, self.names, self.aux_names + extra)

    # -- polynomial constructors --------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: Coefficient) -> "Polynomial":
        c = c if isinstance(c, Rational) else Rational(c)
        if c.num == 0:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> "Polynomial":
        return self.var_by_index(self.index(name))

    def var_by_index(self, i: int) -> "Polynomial":
        mono = [0] * self.nvars
        mono[i] = 1
        return Polynomial(self, {tuple(mono): Rational(1)})

    def vars(self) -> list:
        """All non-aux variables as polynomials, in ring order."""
        return [self.var_by_index(i) for i in range(len(self.names))]


def moduli_ring(n: int) -> RingSpec:
    """Coordinate ring of P^1 x P^2 x ... x P^(n-3) for n points.

    Block i (1-based) has i+1 variables; names follow the letter scheme
    a0,a1,b0,b1,b2,... for n <= 9 and fall back to w<i>_<j> beyond.
    """
    if n < 5:
        raise ValueError("need n >= 5")
    sizes = tuple(range(2, n - 1))
    names = []
    for i, size in enumerate(sizes, start=1):
        if n <= 9:
            prefix = _BLOCK_LETTERS[i - 1]
            names.extend(f"{prefix}{j}" for j in range(size))
        else:
            names.extend(f"w{i}_{j}" for j in range(size))
    return RingSpec(sizes, tuple(names))


def polynomial_ring(names: Sequence[str],
                    block_sizes: Sequence[int] | None = None) -> RingSpec:
    """A ring over the given variables; one block (standard grading)
    unless block_sizes says otherwise."""
    if block_sizes is None:
        block_sizes = (len(names),)
    return RingSpec(tuple(block_sizes), tuple(names))


class MonomialOrder:
    """A monomial order given by flat, additive integer key tuples.

    kind "lex" or "grevlex", optionally preceded by an elimination block
    of the first `elim` variables (in permuted priority order): monomials
    are compared by grevlex on the elimination block first, then grevlex
    on the rest.  perm lists variable indices from highest priority to
    lowest; the default is ring order (a0 > a1 > b0 > ...).
    """

    def __init__(self, ring: RingSpec, kind: str = "grevlex",
                 perm: Sequence[int] | None = None, elim: int = 0) -> None:
        if kind not in ("lex", "grevlex"):
            raise ValueError(f"unknown order kind {kind!r}")
        self.ring = ring
        self.kind = kind
        self.perm = tuple(perm) if perm is not None else tuple(range(ring.nvars))
        if sorted(self.perm) != list(range(ring.nvars)):
            raise ValueError("perm must be a permutation of all variables")
        self.elim = elim
        self._cache: dict = {}

    def key(self, mono: Monomial) -> tuple:
        """Order key; bigger key = bigger monomial. Additive in mono."""
        k = self._cache.get(mono)
        if k is None:
            k = self._compute_key(mono)
            self._cache[mono] = k
        return k

    def _compute_key(self, mono: Monomial) -> tuple:
        pe = [mono[p] for p in self.perm]
        head, tail = pe[:self.elim], pe[self.elim:]
        parts: list = []
        if head:
            parts.append(sum(head))
            parts.extend(-e for e in reversed(head))
        if self.kind == "lex":
            parts.extend(tail)
        else:
            parts.append(sum(tail))
            parts.extend(-e for e in reversed(tail))
        return tuple(parts)

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) > self.key(b)

    def sorted(self, monos: Iterable[Monomial], reverse: bool = False) -> list:
        return sorted(monos, key=self.key, reverse=reverse)

    def _ident(self) -> tuple:
        return (self.kind, self.perm, self.elim, self.ring)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MonomialOrder) and self._ident() == other._ident()

    def __hash__(self) -> int:
        return hash(self._ident())

    def __repr__(self) -> str:
        e = f", elim={self.elim}" if self.elim else ""
        return f"MonomialOrder({self.kind}{e})"


def lex_order(ring: RingSpec) -> MonomialOrder:
    return MonomialOrder(ring, "lex")


def grevlex_order(ring: RingSpec) -> MonomialOrder:
    return MonomialOrder(ring, "grevlex")


def elimination_order(ring: RingSpec, front: Sequence[int]) -> MonomialOrder:
    """Order eliminating the variables with indices in `front`: any
    monomial involving one of them beats any monomial in the rest."""
    front = list(front)
    rest = [i for i in range(ring.nvars) if i not in front]
    return MonomialOrder(ring, "grevlex", front + rest, elim=len(front))


def aux_elimination_order(ring: RingSpec) -> MonomialOrder:
    """Eliminate all aux variables of the ring."""
    nv, na = ring.nvars, len(ring.aux_names)
    return elimination_order(ring, range(nv - na, nv))


class Polynomial:
    """Sparse polynomial: dict from exponent tuple to nonzero Rational."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingSpec, terms: Mapping) -> None:
        self.ring = ring
        self.terms: dict = {m: c for m, c in terms.items() if c.num != 0}

    @classmethod
    def from_terms(cls, ring: RingSpec, pairs: Iterable) -> "Polynomial":
        acc: dict = {}
        for mono, coeff in pairs:
            coeff = coeff if isinstance(coeff, Rational) else Rational(coeff)
            cur = acc.get(mono)
            acc[mono] = coeff if cur is None else cur + coeff
        return cls(ring, acc)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Rational)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            cur = out.get(m)
            s = c if cur is None else cur + c
            if s.num == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Rational)):
            c = other if isinstance(other, Rational) else Rational(other)
            if c.num == 0:
                return self.ring.zero()
            return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.ring != self.ring:
            raise ValueError("polynomials from different rings")
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                c = c1 * c2
                cur = out.get(m)
                s = c if cur is None else cur + c
                if s.num == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one()
        for _ in range(e):
            out = out * self
        return out

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        if isinstance(other, (int, Rational)):
            return self.ring.constant(other)
        return NotImplemented

    # -- structure ----------------------------------------------------

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> Rational:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        lc = self.leading_coefficient(order)
        if lc == 1:
            return self
        inv = lc.inverse()
        return Polynomial(self.ring, {m: c * inv for m, c in self.terms.items()})

    def multidegree(self) -> Multidegree:
        """Common multidegree of all terms; raises if not homogeneous."""
        degs = {self.ring.multidegree(m) for m in self.terms}
        if len(degs) != 1:
            raise ValueError("polynomial is not multihomogeneous")
        return degs.pop()

    def is_multihomogeneous(self) -> bool:
        degs = {self.ring.multidegree(m) for m in self.terms}
        return len(degs) <= 1

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(self.ring.total_degree(m) for m in self.terms)

    def evaluate(self, values: Sequence[Coefficient]) -> Rational:
        """Value at a point, one coordinate per ring variable."""
        if len(values) != self.ring.nvars:
            raise ValueError("wrong number of coordinates")
        vals = [v if isinstance(v, Rational) else Rational(v) for v in values]
        total = Rational(0)
        for mono, coeff in self.terms.items():
            t = coeff
            for x, e in zip(vals, mono):
                for _ in range(e):
                    t = t * x
            total = total + t
        return total

    def map_to_ring(self, target: RingSpec) -> "Polynomial":
        """Reinterpret in a ring with the same named block variables and
        a different number of aux variables (exponents of dropped aux
        variables must be zero)."""
        if target.names != self.ring.names or target.block_sizes != self.ring.block_sizes:
            raise ValueError("rings differ in block variables")
        nv = len(self.ring.names)
        old_aux = self.ring.nvars - nv
        new_aux = target.nvars - nv
        out = {}
        for mono, coeff in self.terms.items():
            aux = mono[nv:]
            if any(aux[new_aux:]):
                raise ValueError("polynomial involves aux variables being dropped")
            out[mono[:nv] + aux[:new_aux] + (0,) * (new_aux - old_aux)] = coeff
        return Polynomial(target, out)

    # -- formatting ---------------------------------------------------

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"<{format_polynomial(self)}>"


def multidegree_of(p: Polynomial) -> Multidegree:
    return p.multidegree()


def evaluate(p: Polynomial, values: Sequence[Coefficient]) -> Rational:
    return p.evaluate(values)


def _compositions(total: int, parts: int) -> Iterator:
    """All tuples of `parts` nonnegative ints summing to `total`,
    lexicographically descending."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def count_monomials_of_multidegree(ring: RingSpec, degree: Sequence[int]) -> int:
    out = 1
    for d, s in zip(degree, ring.block_sizes):
        out *= comb(d + s - 1, s - 1)
    return out


def monomials_of_multidegree(ring: RingSpec, degree: Sequence[int]) -> list:
    """All monomials of the given multidegree (aux exponents zero),
    in a fixed deterministic order."""
    if len(degree) != ring.nblocks:
        raise ValueError("degree vector length does not match block count")
    per_block = [list(_compositions(d, s))
                 for d, s in zip(degree, ring.block_sizes)]
    aux = (0,) * len(ring.aux_names)
    out = []
    for pieces in product(*per_block):
        mono = ()
        for piece in pieces:
            mono += piece
        out.append(mono + aux)
    return out


def format_polynomial(p: Polynomial) -> str:
    """Render with terms in descending lex order: "a0*b0*b1 - a1*b0*b1"."""
    if not p.terms:
        return "0"
    names = p.ring.all_names
    lex = lex_order(p.ring)
    parts: list = []
    for mono in sorted(p.terms, key=lex.key, reverse=True):
        coeff = p.terms[mono]
        factors = []
        for name, e in zip(names, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not parts:
            parts.append(f"-{body}" if coeff.num < 0 else body)
        else:
            parts.append(f"- {body}" if coeff.num < 0 else f"+ {body}")
    return " ".join(parts)


def parse_polynomial(ring: RingSpec, text: str) -> Polynomial:
    """Parse the format produced by format_polynomial.

    Terms are separated by + or -, factors within a term by '*', powers
    written name^e, coefficients as integer or p/q rationals.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return ring.zero()
    # split into signed terms
    terms: list = []
    sign = 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        s = s[1:]
    cur = ""
    for ch in s:
        if ch in "+-" and cur and cur[-1] != "/":
            terms.append((sign, cur))
            sign = -1 if ch == "-" else 1
            cur = ""
        else:
            cur += ch
    if not cur:
        raise ValueError("dangling sign in polynomial text")
    terms.append((sign, cur))

    pairs = []
    for sgn, term in terms:
        coeff = Rational(sgn)
        mono = [0] * ring.nvars
        for factor in term.split("*"):
            if not factor:
                raise ValueError(f"empty factor in {term!r}")
            if factor[0].isdigit():
                coeff = coeff * Rational.from_string(factor)
                continue
            if "^" in factor:
                name, _, e = factor.partition("^")
                exp = int(e)
            else:
                name, exp = factor, 1
            try:
                idx = ring.index(name)
            except ValueError:
                raise ValueError(f"unknown variable {name!r}") from None
            mono[idx] += exp
        pairs.append((tuple(mono), coeff))
    return Polynomial.from_terms(ring, pairs)
