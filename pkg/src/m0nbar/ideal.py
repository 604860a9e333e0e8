"""Groebner bases and ideal-level operations.

Division and Buchberger's algorithm run on integer polynomial dicts
internally (content-free, positive leading coefficient); an exact
running denominator is tracked so that normal_form still returns the
true rational remainder.  The S-pair queue uses the normal selection
strategy (smallest lcm total degree first, ties broken by the monomial
order) with the Gebauer-Moller update, which implements Buchberger's
coprimality and chain criteria.  Public Groebner bases are reduced,
monic, and sorted by ascending leading monomial, so equal ideals yield
identical bases.

Saturation I : v^infinity is computed by the auxiliary-variable method:
adjoin t, add 1 - t*v, eliminate t.  Ideal intersection uses t*I and
(1-t)*J the same way.  Graded invariants (piece dimensions, minimal
generator counts, Hilbert codimension and degree) come either from
standard monomials of an initial ideal or from exact matrix ranks.
"""

from __future__ import annotations

from heapq import heappop, heappush
from math import gcd, lcm
from operator import add, le, sub
from typing import Callable, Iterable, Sequence

from .arith import Rational, matrix_rank
from .poly import (
    Monomial,
    MonomialOrder,
    Polynomial,
    RingSpec,
    aux_elimination_order,
    grevlex_order,
    monomials_of_multidegree,
)

Progress = Callable[[int, int, int], None]


# -- integer polynomial engine ------------------------------------------


class _Gen:
    """Basis element in integer form: content-free, positive lead."""

    __slots__ = ("terms", "lm", "lc", "tail")

    def __init__(self, terms: dict, order: MonomialOrder) -> None:
        self.terms = terms
        self.lm = max(terms, key=order.key)
        self.lc = terms[self.lm]
        self.tail = [(m, c) for m, c in terms.items() if m != self.lm]


def _int_form(p: Polynomial) -> dict:
    """Clear denominators: integer dict equal to p up to a positive scalar."""
    scale = 1
    for c in p.terms.values():
        scale = lcm(scale, c.den)
    return {m: c.num * (scale // c.den) for m, c in p.terms.items()}


def _strip_content(terms: dict) -> None:
    g = 0
    for v in terms.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for m in terms:
            terms[m] //= g


def _normalized_gen(terms: dict, order: MonomialOrder) -> _Gen:
    _strip_content(terms)
    g = _Gen(terms, order)
    if g.lc < 0:
        flipped = {m: -c for m, c in terms.items()}
        g = _Gen(flipped, order)
    return g


def _reduce(num: dict, order: MonomialOrder, gens: Sequence[_Gen],
            den: int = 1) -> tuple:
    """Fully reduce the integer polynomial `num` (consumed) modulo gens.

    Returns (remainder, den): remainder/den is the exact rational
    remainder of the input num/den.  No term of the remainder is
    divisible by any generator's leading monomial.  Deterministic: the
    largest unprocessed monomial is cancelled against the first
    generator (in list order) whose lead divides it.
    """
    key = order.key
    negkeys: dict = {}
    heap: list = []
    for m in num:
        nk = tuple(-x for x in key(m))
        negkeys[m] = nk
        heappush(heap, (nk, m))
    out: dict = {}
    while heap:
        _, mono = heappop(heap)
        c = num.pop(mono, 0)
        if not c:
            continue
        red = None
        for g in gens:
            if all(map(le, g.lm, mono)):
                red = g
                break
        if red is None:
            out[mono] = c
            continue
        g0 = gcd(c, red.lc)
        mult = red.lc // g0
        cc = c // g0
        if mult != 1:
            for k in num:
                num[k] *= mult
            for k in out:
                out[k] *= mult
            den *= mult
        shift = tuple(map(sub, mono, red.lm))
        for m2, c2 in red.tail:
            mm = tuple(map(add, m2, shift))
            cur = num.get(mm)
            if cur is None:
                num[mm] = -cc * c2
                nk = negkeys.get(mm)
                if nk is None:
                    nk = tuple(-x for x in key(mm))
                    negkeys[mm] = nk
                heappush(heap, (nk, mm))
            else:
                cur -= cc * c2
                if cur:
                    num[mm] = cur
                else:
                    del num[mm]
    return out, den


def _spoly(gi: _Gen, gj: _Gen) -> dict:
    """Integer S-polynomial (lead terms cancel exactly)."""
    lcm_m = tuple(map(max, gi.lm, gj.lm))
    si = tuple(map(sub, lcm_m, gi.lm))
    sj = tuple(map(sub, lcm_m, gj.lm))
    g0 = gcd(gi.lc, gj.lc)
    ci = gj.lc // g0
    cj = gi.lc // g0
    num: dict = {}
    for m, c in gi.terms.items():
        num[tuple(map(add, m, si))] = ci * c
    for m, c in gj.terms.items():
        mm = tuple(map(add, m, sj))
        cur = num.get(mm, 0) - cj * c
        if cur:
            num[mm] = cur
        else:
            num.pop(mm, None)
    return num


def _update(G: list, P: list, h: _Gen, order: MonomialOrder) -> None:
    """Gebauer-Moller pair update: append h to G, prune and extend P.

    Prunes old pairs by the chain criterion, groups the new pairs by
    lcm, keeps only minimal lcms with one representative each, and drops
    whole groups containing a coprime-lead pair (product criterion).
    """
    key = order.key
    t = len(G)
    lmh = h.lm
    kept = []
    for entry in P:
        i, j, l = entry[2], entry[3], entry[4]
        if (not all(map(le, lmh, l))
                or tuple(map(max, G[i].lm, lmh)) == l
                or tuple(map(max, G[j].lm, lmh)) == l):
            kept.append(entry)
    P[:] = kept
    groups: dict = {}
    for i in range(t):
        groups.setdefault(tuple(map(max, G[i].lm, lmh)), []).append(i)
    lcms = list(groups)
    survivors = [l for l in lcms
                 if not any(l2 != l and all(map(le, l2, l)) for l2 in lcms)]
    for l in sorted(survivors, key=lambda m: (key(m), m)):
        members = groups[l]
        if any(tuple(map(add, G[i].lm, lmh)) == l for i in members):
            continue
        P.append((sum(l), key(l), min(members), t, l))
    G.append(h)


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder,
               progress: Progress | None = None) -> list:
    """Reduced monic Groebner basis of the ideal generated by gens.

    Output is sorted by ascending leading monomial, so it is a canonical
    form: two generating sets of the same ideal give the same list.
    """
    polys = [p for p in gens if p.terms]
    if not polys:
        raise ValueError("need at least one nonzero generator")
    ring = polys[0].ring
    for p in polys:
        if p.ring != ring or order.ring != ring:
            raise ValueError("generators and order must share one ring")

    G: list = []
    P: list = []
    for p in polys:
        r, _ = _reduce(_int_form(p), order, G)
        if r:
            _update(G, P, _normalized_gen(r, order), order)

    done = 0
    while P:
        idx = min(range(len(P)), key=P.__getitem__)
        _, _, i, j, _ = P.pop(idx)
        r, _ = _reduce(_spoly(G[i], G[j]), order, G)
        done += 1
        if r:
            _update(G, P, _normalized_gen(r, order), order)
        if progress is not None and done % 100 == 0:
            progress(done, len(P), len(G))
    if progress is not None:
        progress(done, 0, len(G))

    return _reduced_basis(G, order, ring)


def _reduced_basis(G: Sequence[_Gen], order: MonomialOrder,
                   ring: RingSpec) -> list:
    """Minimalize, tail-reduce, and make monic; sort by leading monomial."""
    by_key = sorted(range(len(G)), key=lambda i: (order.key(G[i].lm), i))
    kept: list = []
    kept_lms: list = []
    for i in by_key:
        lm = G[i].lm
        if any(all(map(le, l, lm)) for l in kept_lms):
            continue
        kept.append(G[i])
        kept_lms.append(lm)
    out = []
    for idx, g in enumerate(kept):
        others = kept[:idx] + kept[idx + 1:]
        r, _ = _reduce(dict(g.terms), order, others)
        lead = r[max(r, key=order.key)]
        out.append(Polynomial(ring, {m: Rational(c, lead) for m, c in r.items()}))
    out.sort(key=lambda p: order.key(p.leading_monomial(order)))
    return out


# -- ideals ---------------------------------------------------------------


class Ideal:
    """An ideal given by generators, with cached Groebner bases."""

    def __init__(self, ring: RingSpec, gens: Iterable[Polynomial]) -> None:
        self.ring = ring
        self.gens = tuple(gens)
        for g in self.gens:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
        self._gb: dict = {}

    def groebner_basis(self, order: MonomialOrder | None = None,
                       progress: Progress | None = None) -> tuple:
        if order is None:
            order = grevlex_order(self.ring)
        cached = self._gb.get(order)
        if cached is None:
            cached = tuple(buchberger(self.gens, order, progress))
            # sanity: every original generator must reduce to zero
            for g in self.gens:
                if g.terms and normal_form(g, cached, order).terms:
                    raise AssertionError("generator does not reduce to zero "
                                         "against its own Groebner basis")
            self._gb[order] = cached
        return cached

    def with_cached_basis(self, order: MonomialOrder,
                          basis: Sequence[Polynomial]) -> "Ideal":
        self._gb[order] = tuple(basis)
        return self

    def __repr__(self) -> str:
        return f"Ideal({len(self.gens)} generators in {self.ring.nblocks} blocks)"


def normal_form(f: Polynomial, basis: Sequence[Polynomial],
                order: MonomialOrder) -> Polynomial:
    """Remainder of f on division by basis (deterministic: first divisor
    in list order wins).  Exact: returns the textbook rational remainder."""
    scale = 1
    for c in f.terms.values():
        scale = lcm(scale, c.den)
    num = {m: c.num * (scale // c.den) for m, c in f.terms.items()}
    gens = [_Gen(_int_form(g), order) for g in basis if g.terms]
    out, den = _reduce(num, order, gens, scale)
    return Polynomial(f.ring, {m: Rational(c, den) for m, c in out.items()})


def spolynomial(f: Polynomial, g: Polynomial,
                order: MonomialOrder) -> Polynomial:
    """S-polynomial lcm/lt(f)*f - lcm/lt(g)*g over the rationals."""
    lmf, lmg = f.leading_monomial(order), g.leading_monomial(order)
    l = tuple(map(max, lmf, lmg))
    mf = Polynomial(f.ring, {tuple(map(sub, l, lmf)):
                             f.leading_coefficient(order).inverse()})
    mg = Polynomial(g.ring, {tuple(map(sub, l, lmg)):
                             g.leading_coefficient(order).inverse()})
    return mf * f - mg * g


def contains(I: Ideal, f: Polynomial,
             order: MonomialOrder | None = None) -> bool:
    """Ideal membership via normal form against a cached Groebner basis."""
    if not f.terms:
        return True
    order = order or grevlex_order(I.ring)
    return not normal_form(f, I.groebner_basis(order), order).terms


def equal_ideals(I: Ideal, J: Ideal,
                 order: MonomialOrder | None = None) -> bool:
    """Compare via reduced Groebner bases, which are canonical."""
    order = order or grevlex_order(I.ring)
    return list(I.groebner_basis(order)) == list(J.groebner_basis(order))


# -- elimination, saturation, intersection --------------------------------


def _eliminate_aux(gb: Iterable[Polynomial], base: RingSpec,
                   ext: RingSpec) -> list:
    """Aux-free elements of a Groebner basis under an aux elimination
    order; they are the reduced basis of the contraction to `base`."""
    nv = len(ext.names)
    out = []
    for g in gb:
        if all(not any(m[nv:]) for m in g.terms):
            out.append(g.map_to_ring(base))
    return out


def saturate_by_variable(I: Ideal, var: str | int,
                         progress: Progress | None = None) -> Ideal:
    """I : v^infinity via the auxiliary variable t and 1 - t*v."""
    ring = I.ring
    if ring.aux_names:
        raise ValueError("saturation needs a ring without aux variables")
    idx = ring.index(var) if isinstance(var, str) else var
    ext = ring.extended()
    t = ext.var_by_index(ext.nvars - 1)
    v = ext.var_by_index(idx)
    gens = [g.map_to_ring(ext) for g in I.gens]
    gens.append(ext.one() - t * v)
    order = aux_elimination_order(ext)
    gb = buchberger(gens, order, progress)
    kept = _eliminate_aux(gb, ring, ext)
    # the aux-free elements are already the reduced grevlex basis
    return Ideal(ring, kept).with_cached_basis(grevlex_order(ring), kept)


def intersect(I: Ideal, J: Ideal,
              progress: Progress | None = None) -> Ideal:
    """Ideal intersection via t*I + (1-t)*J and elimination of t."""
    ring = I.ring
    if J.ring != ring:
        raise ValueError("ideals live in different rings")
    if ring.aux_names:
        raise ValueError("intersection needs a ring without aux variables")
    ext = ring.extended()
    t = ext.var_by_index(ext.nvars - 1)
    one_minus_t = ext.one() - t
    gens = [t * g.map_to_ring(ext) for g in I.gens]
    gens += [one_minus_t * g.map_to_ring(ext) for g in J.gens]
    order = aux_elimination_order(ext)
    gb = buchberger(gens, order, progress)
    kept = _eliminate_aux(gb, ring, ext)
    return Ideal(ring, kept).with_cached_basis(grevlex_order(ring), kept)


def saturate_by_block(I: Ideal, block: int,
                      progress: Progress | None = None) -> Ideal:
    """Saturate by the irrelevant ideal of one block: the intersection
    of the single-variable saturations over the block's variables."""
    start, stop = I.ring.block_slices()[block]
    parts = [saturate_by_variable(I, v, progress) for v in range(start, stop)]
    result = parts[0]
    for p in parts[1:]:
        result = intersect(result, p, progress)
    return result


def saturation_pipeline(n: int,
                        progress: Progress | None = None) -> Ideal:
    """Saturate the minor-cubic ideal by every block in turn (first
    block first), returning the conjectured defining ideal."""
    from .moduli import cubic_generators
    from .poly import moduli_ring
    ring = moduli_ring(n)
    I = Ideal(ring, cubic_generators(n))
    for block in range(ring.nblocks):
        I = saturate_by_block(I, block, progress)
    return I


# -- monomial ideals and graded invariants ---------------------------------


def _minimalize(monos: Iterable[Monomial]) -> tuple:
    out: list = []
    for m in sorted(set(monos), key=lambda m: (sum(m), m)):
        if not any(all(map(le, g, m)) for g in out):
            out.append(m)
    return tuple(out)


class MonomialIdeal:
    """A monomial ideal stored by its minimal (mutually indivisible)
    generating monomials."""

    def __init__(self, ring: RingSpec, monos: Iterable[Monomial]) -> None:
        self.ring = ring
        self.gens = _minimalize(monos)

    def contains(self, mono: Monomial) -> bool:
        return any(all(map(le, g, mono)) for g in self.gens)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and self.gens == other.gens

    def __repr__(self) -> str:
        names = self.ring.all_names
        def fmt(m):
            return "*".join(f"{n}^{e}" if e > 1 else n
                            for n, e in zip(names, m) if e) or "1"
        return "MonomialIdeal(" + ", ".join(fmt(m) for m in self.gens) + ")"


def initial_ideal(I: Ideal, order: MonomialOrder | None = None) -> MonomialIdeal:
    """Ideal of leading monomials of a Groebner basis."""
    order = order or grevlex_order(I.ring)
    gb = I.groebner_basis(order)
    return MonomialIdeal(I.ring, [g.leading_monomial(order) for g in gb])


def is_squarefree(M: MonomialIdeal) -> bool:
    return M.is_squarefree()


def _hilbert_numerator(gens: tuple, memo: dict) -> tuple:
    """Numerator N(T) of the Hilbert series of R/M over (1-T)^nvars,
    grading every variable by 1.  gens must be minimal."""
    if not gens:
        return (1,)
    if any(sum(g) == 0 for g in gens):
        return (0,)
    cached = memo.get(gens)
    if cached is not None:
        return cached
    nv = len(gens[0])
    occ = [0] * nv
    for g in gens:
        for v in range(nv):
            if g[v]:
                occ[v] += 1
    best = max(range(nv), key=lambda v: occ[v])
    if occ[best] < 2:
        # pairwise disjoint supports: series factors
        result = (1,)
        for g in gens:
            d = sum(g)
            factor = [0] * (d + 1)
            factor[0], factor[d] = 1, -1
            result = _series_mul(result, tuple(factor))
    else:
        # N(M) = N(M + x) + T * N(M : x) for a single variable x
        ex = tuple(1 if v == best else 0 for v in range(nv))
        plus = _minimalize([ex] + [g for g in gens if not g[best]])
        colon = _minimalize(tuple(map(sub, g, ex)) if g[best] else g
                            for g in gens)
        a = _hilbert_numerator(plus, memo)
        b = _hilbert_numerator(colon, memo)
        result = _series_add(a, (0,) + b)
    memo[gens] = result
    return result


def _series_mul(a: tuple, b: tuple) -> tuple:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _series_add(a: tuple, b: tuple) -> tuple:
    n = max(len(a), len(b))
    return tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                 for i in range(n))


def hilbert_numerator(M: MonomialIdeal) -> list:
    """Coefficients of N(T) with H_{R/M}(T) = N(T)/(1-T)^nvars under the
    flattened grading (every variable has degree 1)."""
    if M.ring.aux_names:
        raise ValueError("monomial ideal involves aux variables")
    return list(_hilbert_numerator(M.gens, {}))


def hilbert_degree(I: Ideal, order: MonomialOrder | None = None) -> tuple:
    """(codimension, degree) of R/I under the flattened total grading.

    Computed from the initial ideal: the Hilbert series numerator N(T)
    has (1-T)-multiplicity equal to the codimension, and evaluating the
    cofactor at T=1 gives the degree.
    """
    N = hilbert_numerator(initial_ideal(I, order))
    if not any(N):
        raise ValueError("unit ideal has no degree")
    codim = 0
    while sum(N) == 0:
        # exact synthetic division by (1 - T): prefix sums
        acc = 0
        q = []
        for c in N:
            acc += c
            q.append(acc)
        while q and q[-1] == 0:
            q.pop()
        N = q
        codim += 1
    return codim, sum(N)


def graded_piece_dim(I: Ideal, degree: Sequence[int],
                     method: str = "standard") -> int:
    """Dimension of the ideal's graded piece in one multidegree.

    method "standard": count monomials of that multidegree inside the
    initial ideal (any Groebner basis order gives the same answer).
    method "rank": rank of the coefficient matrix of all products
    monomial * generator landing in that degree; works straight from
    the given generators, no Groebner basis involved.
    """
    degree = tuple(degree)
    ring = I.ring
    if method == "standard":
        M = initial_ideal(I)
        return sum(1 for m in monomials_of_multidegree(ring, degree)
                   if M.contains(m))
    if method != "rank":
        raise ValueError(f"unknown method {method!r}")
    cols = {m: i for i, m in enumerate(monomials_of_multidegree(ring, degree))}
    rows = []
    for g in I.gens:
        if not g.terms:
            continue
        gdeg = g.multidegree()
        rem = tuple(map(sub, degree, gdeg))
        if any(d < 0 for d in rem):
            continue
        for m in monomials_of_multidegree(ring, rem):
            row = [Rational(0)] * len(cols)
            for mono, coeff in g.terms.items():
                row[cols[tuple(map(add, mono, m))]] = coeff
            rows.append(row)
    if not rows:
        return 0
    return matrix_rank(rows)


def min_gens_by_total_degree(I: Ideal) -> dict:
    """Number of minimal generators of I, grouped by total degree.

    Graded Nakayama: in each multidegree D the minimal generator count
    is dim I_D minus the dimension of the span of all products
    (monomial != 1) * (basis element) landing in D.  Only multidegrees
    of Groebner basis elements can contribute.
    """
    gb = I.groebner_basis()
    ring = I.ring
    degrees = sorted({g.multidegree() for g in gb})
    M = initial_ideal(I)
    out: dict = {}
    for D in degrees:
        dim_full = sum(1 for m in monomials_of_multidegree(ring, D)
                       if M.contains(m))
        cols = {m: i for i, m in enumerate(monomials_of_multidegree(ring, D))}
        rows = []
        for g in gb:
            gdeg = g.multidegree()
            rem = tuple(map(sub, D, gdeg))
            if any(d < 0 for d in rem) or not any(rem):
                continue
            for m in monomials_of_multidegree(ring, rem):
                if not any(m):
                    continue
                row = [Rational(0)] * len(cols)
                for mono, coeff in g.terms.items():
                    row[cols[tuple(map(add, mono, m))]] = coeff
                rows.append(row)
        lower = matrix_rank(rows) if rows else 0
        count = dim_full - lower
        if count:
            td = sum(D)
            out[td] = out.get(td, 0) + count
    return out
