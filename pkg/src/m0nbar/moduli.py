"""Equations and combinatorics of the moduli space of stable n-pointed
rational curves embedded in P^1 x P^2 x ... x P^(n-3).

An n-tuple of distinct points (p_1, ..., p_n) on the line maps to the
product of projective spaces by cross ratios: the block-i coordinates
are

    w_j = (p_1 - p_{j+2}) / (p_{i+3} - p_{j+2}),    j = 0, ..., i.

The conjectured defining equations come from 2x2 minors of one 2x(i+1)
matrix per pair of blocks i < j:

    row 1:  w_r^(i) * (w_r^(j) - w_{i+1}^(j))       r = 0, ..., i
    row 2:  w_r^(j)

All minors together give binomial(n-1, 4) cubics; saturating the ideal
they generate by every block's irrelevant ideal produces one extra
minimal generator per degree 4, 5, ..., n-3, the first layer of which
is the six-term quartic family below (binomial(n-1, 5) equations).

This module also covers the associated combinatorics: counts of
boundary strata (trivalent leaf-labeled trees), the pairwise-nesting
graph of boundary divisors, and the binomial identity predicting the
number of degree-d generators.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb, gcd, lcm
from typing import Iterable, Sequence

from .arith import Rational, RationalMatrix
from .ideal import Ideal, contains, normal_form
from .poly import (
    Polynomial,
    RingSpec,
    grevlex_order,
    lex_order,
    moduli_ring,
    monomials_of_multidegree,
    parse_polynomial,
    polynomial_ring,
)


def _block_var(ring: RingSpec, block: int, j: int) -> Polynomial:
    """w_j of block `block` (1-based) as a polynomial."""
    start, stop = ring.block_slices()[block - 1]
    if not 0 <= j < stop - start:
        raise IndexError(f"block {block} has no coordinate {j}")
    return ring.var_by_index(start + j)


def _canonical_sign(p: Polynomial) -> Polynomial:
    """Scale to integer, content-free coefficients with a positive
    lex-leading coefficient."""
    num_gcd = 0
    den_lcm = 1
    for c in p.terms.values():
        num_gcd = gcd(num_gcd, c.num)
        den_lcm = lcm(den_lcm, c.den)
    scale = Rational(den_lcm, num_gcd)
    if p.leading_coefficient(lex_order(p.ring)).num < 0:
        scale = -scale
    return p * scale


def _sorted_by_lead(polys: Iterable[Polynomial], ring: RingSpec) -> list:
    """Ascending by graded-reverse-lex leading monomial, the
    conventional display order for the generator lists."""
    order = grevlex_order(ring)
    return sorted(polys, key=lambda p: order.key(p.leading_monomial(order)))


# -- minor matrices and cubic generators -----------------------------------


@dataclass(frozen=True)
class MinorMatrix:
    """The 2x(i+1) matrix attached to a pair of blocks i < j."""

    block_small: int
    block_large: int
    row1: tuple
    row2: tuple

    def minor(self, r: int, s: int) -> Polynomial:
        """2x2 minor on columns r < s."""
        return self.row1[r] * self.row2[s] - self.row1[s] * self.row2[r]

    def minors(self) -> list:
        cols = len(self.row1)
        return [self.minor(r, s) for r, s in combinations(range(cols), 2)]


def minor_matrices(n: int) -> list:
    """One matrix per pair of blocks 1 <= i < j <= n-3."""
    ring = moduli_ring(n)
    out = []
    for i in range(1, n - 3):
        for j in range(i + 1, n - 2):
            wi = [_block_var(ring, i, r) for r in range(i + 1)]
            wj = [_block_var(ring, j, r) for r in range(j + 1)]
            row1 = tuple(wi[r] * (wj[r] - wj[i + 1]) for r in range(i + 1))
            row2 = tuple(wj[r] for r in range(i + 1))
            out.append(MinorMatrix(i, j, row1, row2))
    return out


def cubic_generators(n: int) -> list:
    """All 2x2 minors of all minor matrices: binomial(n-1, 4) cubics,
    content-free with positive lex-leading coefficient, sorted by
    ascending graded-reverse-lex leading monomial."""
    ring = moduli_ring(n)
    gens = [_canonical_sign(m) for mat in minor_matrices(n)
            for m in mat.minors()]
    return _sorted_by_lead(gens, ring)


def minor_ideal(n: int) -> Ideal:
    """The ideal generated by the cubic minors."""
    return Ideal(moduli_ring(n), cubic_generators(n))


# -- quartic equations ------------------------------------------------------


def quartic_tuples(n: int) -> list:
    """Index tuples (i, j, k, l, m) with 0 <= i < j <= k < l < m <= n-3."""
    top = n - 3
    out = []
    for m in range(3, top + 1):
        for l in range(2, m):
            for k in range(1, l):
                for j in range(1, k + 1):
                    for i in range(j):
                        out.append((i, j, k, l, m))
    return out


def quartic_equation(n: int, tup: Sequence[int]) -> Polynomial:
    """The six-term quartic generator for one index tuple."""
    i, j, k, l, m = tup
    ring = moduli_ring(n)
    w = _block_var
    return _canonical_sign(
        w(ring, k, i) * w(ring, l, i) * w(ring, m, j) * w(ring, m, k + 1)
        - w(ring, k, i) * w(ring, l, k + 1) * w(ring, m, j) * w(ring, m, k + 1)
        - w(ring, k, i) * w(ring, l, i) * w(ring, m, j) * w(ring, m, l + 1)
        + w(ring, k, j) * w(ring, l, i) * w(ring, m, j) * w(ring, m, l + 1)
        + w(ring, k, i) * w(ring, l, k + 1) * w(ring, m, j) * w(ring, m, l + 1)
        - w(ring, k, j) * w(ring, l, i) * w(ring, m, k + 1) * w(ring, m, l + 1))


def quartic_raw_form(n: int, tup: Sequence[int]) -> Polynomial:
    """The minor-style expansion of the same quartic: manifestly a
    combination of products of block coordinates that vanish on the
    cross-ratio locus.  Differs from quartic_equation by an element of
    the cubic ideal."""
    i, j, k, l, m = tup
    ring = moduli_ring(n)
    w = _block_var
    ik, jk = w(ring, k, i), w(ring, k, j)
    il, jl, kl = w(ring, l, i), w(ring, l, j), w(ring, l, k + 1)
    jm, km, lm = w(ring, m, j), w(ring, m, k + 1), w(ring, m, l + 1)
    return (km * lm * (ik * jl - jk * il)
            + lm * jm * (jk * il - ik * il)
            + jm * km * (ik * il - ik * jl))


def quartic_equations(n: int) -> list:
    """The full quartic family: binomial(n-1, 5) equations, canonically
    normalized and sorted like cubic_generators."""
    ring = moduli_ring(n)
    return _sorted_by_lead(
        (quartic_equation(n, t) for t in quartic_tuples(n)), ring)


def quartic_membership_witness(J: Ideal, tup: Sequence[int]) -> Polynomial:
    """Difference between the two quartic expansions, verified to lie in
    the cubic ideal J by a normal-form computation.

    Returns the difference; raises AssertionError if its normal form
    against a Groebner basis of J is nonzero.
    """
    n = len(J.ring.block_sizes) + 3
    diff = quartic_raw_form(n, tup) - quartic_equation(n, tup)
    if not diff.is_multihomogeneous():
        raise AssertionError("witness difference is not multihomogeneous")
    order = grevlex_order(J.ring)
    r = normal_form(diff, J.groebner_basis(order), order)
    if r.terms:
        raise AssertionError(
            f"quartic witness for {tuple(tup)} does not reduce to zero")
    return diff


# -- point configurations and the embedding --------------------------------


@dataclass(frozen=True)
class PointConfig:
    """n distinct rational points on the affine line."""

    points: tuple

    def __post_init__(self):
        pts = tuple(p if isinstance(p, Rational) else Rational(p)
                    for p in self.points)
        object.__setattr__(self, "points", pts)
        if len(set(pts)) != len(pts):
            raise ValueError("points must be distinct")
        if len(pts) < 4:
            raise ValueError("need at least four points")

    @property
    def n(self) -> int:
        return len(self.points)


def embedding_coordinates(config: PointConfig) -> list:
    """Cross-ratio coordinates of a point configuration, flattened in
    ring variable order (block 1 first)."""
    p = config.points
    n = config.n
    coords = []
    for i in range(1, n - 2):
        for j in range(i + 1):
            coords.append((p[0] - p[j + 1]) / (p[i + 2] - p[j + 1]))
    return coords


@dataclass
class VanishingReport:
    n: int
    trials: int
    equations: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def checks(self) -> int:
        return self.trials * self.equations


def vanishing_test(n: int, trials: int = 50, seed: int = 0) -> VanishingReport:
    """Evaluate every cubic and quartic generator at random distinct
    integer point configurations; exact zeros required.

    Points are drawn without repetition from [-20, 20] with a seeded
    generator, so runs are reproducible.
    """
    rng = random.Random(seed)
    eqs = cubic_generators(n) + quartic_equations(n)
    failures = []
    for trial in range(trials):
        pts = rng.sample(range(-20, 21), n)
        coords = embedding_coordinates(PointConfig(tuple(pts)))
        for idx, eq in enumerate(eqs):
            value = eq.evaluate(coords)
            if value.num != 0:
                failures.append((trial, tuple(pts), idx, str(value)))
    return VanishingReport(n, trials, len(eqs), failures)


# -- the n=5 Segre re-embedding ---------------------------------------------

# quadrics cutting out the image of the five-point moduli space inside
# P^5 under t_{3i+j} = a_i * b_j
SEGRE_QUADRICS_N5 = (
    "t0*t1 - t0*t4 + t2*t3 - t1*t2",
    "t0*t4 - t3*t4 + t3*t5 - t1*t5",
    "t1*t3 - t0*t4",
    "t2*t3 - t0*t5",
    "t2*t4 - t1*t5",
)


def segre_quadrics_n5() -> Ideal:
    """Quadric ideal of the five-point moduli space re-embedded in P^5.

    Constructs the ideal from first principles: pull the products
    a0 * (cubic) and a1 * (cubic) back through the Segre identification
    t_{3i+j} = a_i * b_j by exact linear solving, add the three 2x2
    Segre relations of the matrix [[t0,t1,t2],[t3,t4,t5]], and verify
    two-way containment against the five reference quadrics (ten
    normal-form checks).  Raises AssertionError on any mismatch.
    """
    tring = polynomial_ring([f"t{i}" for i in range(6)])
    base = moduli_ring(5)
    cubic = cubic_generators(5)[0]

    # images of the 21 quadratic t-monomials inside degree (2,2)
    tmonos = monomials_of_multidegree(tring, (2,))
    images = []
    for mono in tmonos:
        img = base.one()
        for idx, e in enumerate(mono):
            ai, bj = divmod(idx, 3)
            for _ in range(e):
                img = img * base.var(f"a{ai}") * base.var(f"b{bj}")
        images.append(img.leading_monomial(lex_order(base)))
    rows_index = {m: r for r, m in
                  enumerate(monomials_of_multidegree(base, (2, 2)))}
    matrix = [[Rational(0)] * len(tmonos) for _ in rows_index]
    for col, img in enumerate(images):
        matrix[rows_index[img]][col] = Rational(1)
    solver = RationalMatrix(matrix)

    lifted = []
    for a in ("a0", "a1"):
        target = base.var(a) * cubic
        rhs = [Rational(0)] * len(rows_index)
        for mono, coeff in target.terms.items():
            rhs[rows_index[mono]] = coeff
        sol = solver.solve(rhs)
        if sol is None:
            raise AssertionError(f"{a} * cubic is not a quadric pullback")
        lifted.append(Polynomial.from_terms(
            tring, zip(tmonos, sol)))

    t = [tring.var(f"t{i}") for i in range(6)]
    relations = [t[0] * t[4] - t[1] * t[3],
                 t[0] * t[5] - t[2] * t[3],
                 t[1] * t[5] - t[2] * t[4]]
    constructed = Ideal(tring, lifted + relations)
    reference = Ideal(tring, [parse_polynomial(tring, s)
                              for s in SEGRE_QUADRICS_N5])
    for f in reference.gens:
        if not contains(constructed, f):
            raise AssertionError(f"reference quadric {f} not in construction")
    for f in constructed.gens:
        if not contains(reference, f):
            raise AssertionError(f"constructed quadric {f} not in reference")
    return constructed


# -- boundary combinatorics -------------------------------------------------


def double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def enumerate_trivalent_trees(leaves: int) -> set:
    """All trivalent trees with the given labeled leaves, as canonical
    forms: the frozenset of leaf bipartitions (one side per edge, the
    side not containing leaf 0).  Built by recursive edge insertion."""
    if leaves < 3:
        raise ValueError("need at least three leaves")

    def splits(adj: dict) -> frozenset:
        out = set()
        edges = {tuple(sorted((u, v), key=str)) for u in adj for v in adj[u]}
        for u, v in edges:
            # leaves on v's side when edge u-v is cut
            seen = {u, v}
            stack = [v]
            side = set()
            while stack:
                x = stack.pop()
                if isinstance(x, int) and x >= 0:
                    side.add(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            if 0 in side:
                side = set(range(leaves)) - side
            out.add(frozenset(side))
        return frozenset(out)

    # start with the unique 3-leaf tree: internal node -1 joined to 0,1,2
    base = {-1: {0, 1, 2}, 0: {-1}, 1: {-1}, 2: {-1}}
    trees = [base]
    next_leaf = 3
    while next_leaf < leaves:
        grown = []
        for adj in trees:
            edges = {tuple(sorted((u, v), key=str))
                     for u in adj for v in adj[u]}
            new_internal = min(x for x in adj if isinstance(x, int) and x < 0) - 1
            for u, v in edges:
                t = {x: set(n) for x, n in adj.items()}
                t[u].remove(v)
                t[v].remove(u)
                t[new_internal] = {u, v, next_leaf}
                t[u].add(new_internal)
                t[v].add(new_internal)
                t[next_leaf] = {new_internal}
                grown.append(t)
        trees = grown
        next_leaf += 1
    return {splits(t) for t in trees}


def stable_tree_count(n: int) -> int:
    """Number of trivalent trees with n-1 labeled leaves: the product
    formula (2n-7)!!, cross-checked against explicit enumeration for
    n <= 8."""
    if n < 4:
        raise ValueError("need n >= 4")
    count = double_factorial(2 * n - 7)
    if n <= 8:
        enumerated = len(enumerate_trivalent_trees(n - 1))
        if enumerated != count:
            raise AssertionError(
                f"enumeration found {enumerated} trees, formula says {count}")
    return count


def generator_count_identity(n: int, d: int) -> tuple:
    """Both sides of the degree-d generator count identity:

        sum_i binomial(n-3-i, d-2) * binomial(i+1, 2) = binomial(n-1, d+1)
    """
    lhs = sum(comb(n - 3 - i, d - 2) * comb(i + 1, 2)
              for i in range(1, n - 2))
    rhs = comb(n - 1, d + 1)
    return lhs, rhs


@dataclass(frozen=True, order=True)
class BoundaryDivisor:
    """A boundary divisor: an unordered partition {I, I^c} of the marked
    points 1..n with both sides of size >= 2, stored by the
    lexicographically smaller side."""

    n: int
    part: tuple

    @classmethod
    def from_subset(cls, n: int, subset: Iterable[int]) -> "BoundaryDivisor":
        side = tuple(sorted(set(subset)))
        if not all(1 <= x <= n for x in side):
            raise ValueError("marked points run from 1 to n")
        other = tuple(x for x in range(1, n + 1) if x not in side)
        if len(side) < 2 or len(other) < 2:
            raise ValueError("both sides need at least two points")
        return cls(n, min(side, other))

    @property
    def label(self) -> str:
        return "d{" + ",".join(str(x) for x in self.part) + "}"

    def compatible(self, other: "BoundaryDivisor") -> bool:
        """Whether the two partitions nest (the divisors intersect)."""
        a, b = set(self.part), set(other.part)
        full = set(range(1, self.n + 1))
        return (a <= b or b <= a or not (a & b) or (a | b) == full)


@dataclass
class BoundaryGraph:
    n: int
    vertices: list
    adjacency: dict

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return sum(len(v) for v in self.adjacency.values()) // 2

    def degrees(self) -> list:
        return [len(self.adjacency[v]) for v in self.vertices]

    def girth(self) -> int | None:
        """Length of a shortest cycle, None for a forest."""
        best = None
        for root in self.vertices:
            dist = {root: 0}
            parent = {root: None}
            queue = [root]
            while queue:
                u = queue.pop(0)
                for w in self.adjacency[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif parent[u] != w:
                        cycle = dist[u] + dist[w] + 1
                        if best is None or cycle < best:
                            best = cycle
        return best

    def export(self) -> str:
        """Adjacency list, one line per vertex: "d{1,2}: d{3,4} d{3,5}"."""
        lines = []
        for v in self.vertices:
            nbrs = " ".join(w.label for w in sorted(self.adjacency[v]))
            lines.append(f"{v.label}: {nbrs}".rstrip())
        return "\n".join(lines)


def boundary_graph(n: int) -> BoundaryGraph:
    """Vertices: boundary divisors (2^(n-1) - n - 1 of them); edges:
    pairs whose partitions nest, i.e. whose divisors intersect."""
    if n < 4:
        raise ValueError("need n >= 4")
    seen = set()
    for size in range(2, n - 1):
        for subset in combinations(range(1, n + 1), size):
            seen.add(BoundaryDivisor.from_subset(n, subset))
    vertices = sorted(seen)
    adjacency = {v: set() for v in vertices}
    for v, w in combinations(vertices, 2):
        if v.compatible(w):
            adjacency[v].add(w)
            adjacency[w].add(v)
    return BoundaryGraph(n, vertices, adjacency)


# -- equation export ---------------------------------------------------------


def format_generator_file(n: int, include_quartics: bool = False) -> str:
    """Plain-text export: a header recording n and the counts, then one
    polynomial per line (lex-descending terms)."""
    cubics = cubic_generators(n)
    quartics = quartic_equations(n) if include_quartics else []
    header = f"# n={n} cubics={len(cubics)} quartics={len(quartics)}"
    lines = [header] + [str(p) for p in cubics] + [str(p) for p in quartics]
    return "\n".join(lines) + "\n"
