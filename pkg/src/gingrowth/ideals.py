"""Homogeneous ideals and the usual plumbing around them.

:class:`Ideal` caches its Groebner bases.  The module also provides
elimination, colon ideals, saturation by a variable, intersections and
gcd/lcm of polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._dense import monomial_space, rref_mod_p
from .field import PrimeField
from .groebner import GroebnerBasis, GBStats, _dense_capable, buchberger
from .monomial import MonomialIdeal
from .ring import (
    DEGREVLEX,
    LinearChange,
    MonomialOrder,
    Polynomial,
    Ring,
    apply_change,
    elimination_order,
    monomials_of_degree,
)
from .series import HilbertSeries, HilbertTable, count_monomials


class Ideal:
    """An ideal of a polynomial ring, given by generators."""

    def __init__(self, ring: Ring, gens=(), label: str = ""):
        gens = [g for g in gens if not g.is_zero()]
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator lives in a different ring")
        self.ring = ring
        self.gens = gens
        self.label = label
        self._gb: dict = {}

    @classmethod
    def zero(cls, ring: Ring) -> Ideal:
        return cls(ring, [])

    @classmethod
    def from_monomial_ideal(cls, ring: Ring, I: MonomialIdeal) -> Ideal:
        return cls(ring, I.to_polynomials(ring))

    def __repr__(self):
        body = ", ".join(str(g) for g in self.gens[:4])
        more = ", ..." if len(self.gens) > 4 else ""
        return f"Ideal({body}{more})"

    def is_zero(self) -> bool:
        return not self.gens

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def generator_degrees(self) -> list:
        return sorted(g.degree() for g in self.gens)

    def max_generator_degree(self) -> int:
        return max((g.degree() for g in self.gens), default=0)

    # -- Groebner bases ---------------------------------------------------

    def groebner(self, order: MonomialOrder = DEGREVLEX, degree_bound: int | None = None) -> GroebnerBasis:
        full = self._gb.get((order, None))
        if full is not None:
            return full
        if degree_bound is not None:
            hit = self._gb.get((order, "bounded"))
            if hit is not None and hit.degree_bound >= degree_bound:
                return hit
        if not self.gens:
            gb = GroebnerBasis(self.ring, order, [], 0, GBStats(engine="zero"), None)
            self._gb[(order, None)] = gb
            return gb
        gb = buchberger(self.gens, order, degree_bound)
        if degree_bound is None:
            self._gb[(order, None)] = gb
        else:
            self._gb[(order, "bounded")] = gb
        return gb

    def contains(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        if self.is_homogeneous() and f.is_homogeneous():
            return self.groebner(degree_bound=f.degree()).contains(f)
        return self.groebner().contains(f)

    def contains_ideal(self, other: Ideal) -> bool:
        return all(self.contains(g) for g in other.gens)

    def __eq__(self, other):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            return NotImplemented
        return set(self.groebner().polys) == set(other.groebner().polys)

    def __hash__(self):
        return hash((self.ring, frozenset(self.groebner().polys)))

    def __add__(self, other: Ideal) -> Ideal:
        return Ideal(self.ring, self.gens + list(other.gens))

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return Ideal(self.ring, [g * other for g in self.gens])
        return Ideal(self.ring, [f * g for f in self.gens for g in other.gens])

    def initial_ideal(self, order: MonomialOrder = DEGREVLEX) -> MonomialIdeal:
        return self.groebner(order).initial_ideal()

    def is_unit(self) -> bool:
        return any(g.degree() == 0 for g in self.groebner().polys)

    # -- Hilbert data ------------------------------------------------------

    def hilbert_series(self) -> HilbertSeries:
        if not self.is_homogeneous():
            raise ValueError("Hilbert series needs a homogeneous ideal")
        return self.initial_ideal().hilbert_series

    def hilbert_table(self, t_max: int, t_min: int = 0) -> HilbertTable:
        series = self.hilbert_series()
        return HilbertTable(self.ring.nvars, series.values(t_max, t_min), t_min, series, self.alpha_or_none())

    def alpha_or_none(self):
        degs = [g.degree() for g in self.gens]
        return min(degs) if degs else None

    def alpha(self) -> int:
        a = self.alpha_or_none()
        if a is None:
            raise ValueError("the zero ideal has no initial degree")
        return a

    def component_basis(self, d: int) -> list[Polynomial]:
        """A K-basis of I_d (homogeneous I)."""
        if not self.gens or d < 0:
            return []
        gb = self.groebner(degree_bound=d)
        if _dense_capable(self.ring):
            tab = gb.nf_matrix(d)
            rows = tab.component_basis()
            return [Polynomial(self.ring, tab.space.to_coeffs(r, d)) for r in rows]
        out = []
        inI = gb.initial_ideal()
        for m in monomials_of_degree(self.ring.nvars, d):
            if inI.contains(m):
                mono = self.ring.monomial(m)
                out.append(mono - gb.normal_form(mono))
        return out

    def truncate(self, d: int) -> Ideal:
        """<(I)_{<=d}>: the reduced GB elements of degree <= d generate it."""
        gb = self.groebner(degree_bound=d)
        return Ideal(self.ring, [g for g in gb.polys if g.degree() <= d])

    def apply(self, g: LinearChange) -> Ideal:
        return Ideal(self.ring, [apply_change(f, g) for f in self.gens], self.label)


# ---------------------------------------------------------------------------
# variable permutations


def _permute(f: Polynomial, perm, ring: Ring | None = None) -> Polynomial:
    """Move the exponent of variable i to position perm[i]."""
    ring = ring or f.ring
    out = {}
    for m, c in f.coeffs.items():
        e = [0] * ring.nvars
        for i, v in enumerate(m):
            e[perm[i]] = v
        out[tuple(e)] = c
    return Polynomial(ring, out)


def _inverse_perm(perm):
    inv = [0] * len(perm)
    for i, j in enumerate(perm):
        inv[j] = i
    return inv


# ---------------------------------------------------------------------------
# elimination


def elimination_ideal(gens, keep) -> list[Polynomial]:
    """Generators of I ∩ K[keep], ``keep`` a collection of 0-based variable indices."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    n = ring.nvars
    keep = sorted(set(keep))
    drop = [i for i in range(n) if i not in keep]
    if not drop:
        return list(gens)
    perm = [0] * n
    for pos, i in enumerate(drop + keep):
        perm[i] = pos
    moved = [_permute(g, perm) for g in gens]
    gb = buchberger(moved, elimination_order(len(drop)))
    inv = _inverse_perm(perm)
    out = []
    for g in gb.polys:
        if all(not any(m[:len(drop)]) for m in g.coeffs):
            out.append(_permute(g, inv))
    return out


# ---------------------------------------------------------------------------
# intersections


def graded_kernel_gb(ring: Ring, functionals, stop, order: MonomialOrder = DEGREVLEX,
                     start: int = 0, max_degree: int = 200) -> GroebnerBasis:
    """Reduced GB of a homogeneous ideal described degree-wise as a kernel.

    ``functionals(t)`` returns a matrix whose rows are indexed by the
    degree-t monomials (descending order) and whose kernel (on row
    combinations) is I_t.  Monomials are processed in increasing order so
    that each dependent monomial is the leading term of a kernel element
    whose tail consists of standard monomials.  ``stop(lm_ideal, t)`` is
    asked after each degree whether the leading monomials found so far
    already generate in(I).
    """
    if not _dense_capable(ring):
        raise ValueError("kernel computations need a prime field")
    p = ring.field.p
    n = ring.nvars
    space = monomial_space(n, order)
    lms: list = []
    polys: list = []
    lm_ideal = MonomialIdeal(n, [])
    for t in range(start, max_degree + 1):
        mons = space.monomials(t)
        cand = [i for i, m in enumerate(mons) if not lm_ideal.contains(m)]
        if cand:
            V = np.asarray(functionals(t), dtype=np.int64) % p
            asc = cand[::-1]
            A = V[asc].T
            R, pivots = rref_mod_p(A, p)
            piv_set = set(pivots)
            new = []
            for c in range(len(asc)):
                if c in piv_set:
                    continue
                coeffs = {mons[asc[c]]: 1}
                for r, pc in enumerate(pivots):
                    if pc > c:
                        break
                    v = int(R[r, c])
                    if v:
                        coeffs[mons[asc[pc]]] = (-v) % p
                new.append((mons[asc[c]], Polynomial(ring, coeffs)))
            for m, f in new:
                lms.append(m)
                polys.append(f)
            if new:
                lm_ideal = MonomialIdeal(n, lms)
        if stop(lm_ideal, t):
            return GroebnerBasis(ring, order, polys, 0, GBStats(engine="kernel"), None)
    raise RuntimeError("kernel basis did not stabilise below the degree cap")


def _series_stop(target: HilbertSeries):
    def stop(lm_ideal: MonomialIdeal, t: int) -> bool:
        return lm_ideal.hilbert_series.numerator == target.numerator

    return stop


def _nf_functionals(gbs):
    """Rows: degree-t monomials; columns: NF coordinates modulo each GB in turn."""

    def functionals(t):
        blocks = [gb.nf_matrix(t).matrix for gb in gbs]
        return np.hstack(blocks) if blocks else None

    return functionals


def ideal_intersection(I: Ideal, J: Ideal, method: str = "auto") -> Ideal:
    """I ∩ J.  ``method`` is "graded" (degree-wise kernel, homogeneous over F_p),
    "eliminate" (the t-trick) or "auto"."""
    if I.ring != J.ring:
        raise ValueError("ring mismatch")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal.zero(ring)
    homogeneous = I.is_homogeneous() and J.is_homogeneous()
    if method == "auto":
        method = "graded" if homogeneous and _dense_capable(ring) else "eliminate"
    if method == "graded":
        if not homogeneous:
            raise ValueError("graded intersection needs homogeneous ideals")
        target = I.hilbert_series() + J.hilbert_series() - (I + J).hilbert_series()
        gI, gJ = I.groebner(), J.groebner()
        start = max(min(I.generator_degrees()), min(J.generator_degrees()))
        gb = graded_kernel_gb(ring, _nf_functionals([gI, gJ]), _series_stop(target), start=start)
        out = Ideal(ring, gb.polys)
        out._gb[(DEGREVLEX, None)] = gb
        return out
    if method != "eliminate":
        raise ValueError(f"unknown intersection method {method!r}")
    return _intersection_eliminate(I, J)


def _intersection_eliminate(I: Ideal, J: Ideal) -> Ideal:
    ring = I.ring
    n = ring.nvars
    big = Ring(n + 1, ring.field, ("_t",) + ring.names)
    t = big.gen(0)

    def lift(f):
        return Polynomial(big, {(0,) + m: c for m, c in f.coeffs.items()})

    gens = [t * lift(f) for f in I.gens] + [(big.one() - t) * lift(g) for g in J.gens]
    gb = buchberger(gens, elimination_order(1))
    out = []
    for g in gb.polys:
        if all(m[0] == 0 for m in g.coeffs):
            f = Polynomial(ring, {m[1:]: c for m, c in g.coeffs.items()})
            if I.is_homogeneous() and J.is_homogeneous():
                out.extend(f.homogeneous_components().values())
            else:
                out.append(f)
    return Ideal(ring, out)


# ---------------------------------------------------------------------------
# colon and saturation


def colon_by_poly(I: Ideal, f: Polynomial, method: str = "auto") -> Ideal:
    """I : f, computed as (I ∩ (f)) / f."""
    if f.is_zero():
        raise ValueError("colon by the zero polynomial")
    ring = I.ring
    if f.degree() == 0:
        return Ideal(ring, I.gens)
    inter = ideal_intersection(I, Ideal(ring, [f]), method)
    return Ideal(ring, [g.exact_divide(f) for g in inter.gens])


def _colon_last_variable(I: Ideal, full: bool) -> Ideal:
    """I : x_n (or I : x_n^oo when ``full``) via the degrevlex basis."""
    gb = I.groebner()
    n = I.ring.nvars
    out = []
    for g in gb.polys:
        k = min(m[n - 1] for m in g.coeffs)
        if not full:
            k = min(k, 1)
        if k:
            g = Polynomial(I.ring, {m[:-1] + (m[-1] - k,): c for m, c in g.coeffs.items()})
        out.append(g)
    return Ideal(I.ring, out)


def colon_by_variable(I: Ideal, k: int | None = None) -> Ideal:
    """I : x_k (k 0-based, default the last variable)."""
    if not I.is_homogeneous():
        return colon_by_poly(I, I.ring.gen(I.ring.nvars - 1 if k is None else k))
    n = I.ring.nvars
    k = n - 1 if k is None else k
    if k == n - 1:
        return _colon_last_variable(I, full=False)
    perm = list(range(n))
    perm[k], perm[n - 1] = n - 1, k
    moved = Ideal(I.ring, [_permute(g, perm) for g in I.gens])
    res = _colon_last_variable(moved, full=False)
    return Ideal(I.ring, [_permute(g, perm) for g in res.gens])


@dataclass
class SaturationResult:
    ideal: Ideal
    steps: int  # number of colon steps that changed the ideal

    @property
    def was_saturated(self) -> bool:
        return self.steps == 0


def saturate_by_variable(I: Ideal, k: int | None = None, max_steps: int = 10_000) -> SaturationResult:
    """I : x_k^oo by iterated colon; stops when a colon step returns the same ideal."""
    current = I
    for step in range(max_steps):
        nxt = colon_by_variable(current, k)
        if set(nxt.groebner().polys) == set(current.groebner().polys):
            return SaturationResult(current, step)
        current = Ideal(I.ring, nxt.groebner().polys)
    raise RuntimeError("saturation did not stabilise")


def saturation(I: Ideal, seed: int = 0) -> SaturationResult:
    """Saturation with respect to the irrelevant ideal (I : m^oo).

    After a random change of coordinates the last variable is a general
    linear form, and I : m^oo = I : l^oo for general l.
    """
    g = LinearChange.random(I.ring, seed)
    moved = I.apply(g)
    res = saturate_by_variable(moved)
    back = res.ideal.apply(g.inverse())
    return SaturationResult(back, res.steps)


# ---------------------------------------------------------------------------
# general linear sections


def substitute_linear(f: Polynomial, rows, target: Ring) -> Polynomial:
    """Replace x_i by sum_j rows[i][j] y_j, the y_j being the variables of ``target``."""
    if _dense_capable(f.ring):
        from ._dense import substitute_linear_dense

        return substitute_linear_dense(f, rows, target)
    F = target.field
    images = {}
    for i, row in enumerate(rows):
        images[i] = Polynomial(
            target, {tuple(1 if k == j else 0 for k in range(target.nvars)): F.coerce(c) for j, c in enumerate(row) if c != 0}
        )
    return f.substitute(images)


def section_rows(ring: Ring, s: int, seed: int):
    """Rows sending the last s variables to random linear forms in the others.

    Substituting with these rows realises R/(I + (L_1..L_s)) for s random
    linear forms L_k = x_{n-s+k} - (random form in x_1..x_{n-s}).
    """
    n = ring.nvars
    m = n - s
    if m < 0:
        raise ValueError("cannot cut by more linear forms than variables")
    rng = np.random.default_rng(seed)
    F = ring.field
    rows = []
    for i in range(n):
        if i < m:
            rows.append(tuple(F.one if j == i else F.zero for j in range(m)))
        else:
            rows.append(tuple(F.random(rng) for _ in range(m)))
    return rows


def restrict_general(I: Ideal, s: int, seed: int = 0) -> Ideal:
    """(I + (L_1..L_s)) / (L_1..L_s) as an ideal of K[x_1..x_{n-s}], L_k random."""
    ring = I.ring
    if s == 0:
        return I
    target = Ring(ring.nvars - s, ring.field, ring.names[: ring.nvars - s])
    rows = section_rows(ring, s, seed)
    return Ideal(target, [substitute_linear(f, rows, target) for f in I.gens])


# ---------------------------------------------------------------------------
# gcd and lcm


def poly_lcm(f: Polynomial, g: Polynomial) -> Polynomial:
    """Generator of (f) ∩ (g)."""
    inter = ideal_intersection(Ideal(f.ring, [f]), Ideal(f.ring, [g]))
    gens = inter.groebner().polys
    if len(gens) != 1:
        # the reduced basis of a principal ideal has one element
        raise RuntimeError("intersection of principal ideals is not principal")
    return gens[0]


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd, via f g / lcm(f, g)."""
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if f.degree() == 0 or g.degree() == 0:
        return f.ring.one()
    return (f * g).exact_divide(poly_lcm(f, g)).monic()


def membership_oracle(I: Ideal, f: Polynomial) -> bool:
    """Membership by linear algebra in degree deg f: is f in the span of the multiples of the generators?"""
    if f.is_zero():
        return True
    d = f.degree()
    if not f.is_homogeneous():
        raise ValueError("oracle works degree by degree on forms")
    rows = []
    for g in I.gens:
        e = d - g.degree()
        if e < 0:
            continue
        for m in monomials_of_degree(I.ring.nvars, e):
            rows.append(g.mul_term(m, I.ring.field.one))
    return _in_span(I.ring, rows, f, d)


def _in_span(ring: Ring, rows, f, d) -> bool:
    F = ring.field
    mons = list(monomials_of_degree(ring.nvars, d))
    idx = {m: i for i, m in enumerate(mons)}
    if isinstance(F, PrimeField) and F.p < 2**31:
        p = F.p
        A = np.zeros((len(rows) + 1, len(mons)), dtype=np.int64)
        for r, g in enumerate(rows):
            for m, c in g.coeffs.items():
                A[r, idx[m]] = c
        for m, c in f.coeffs.items():
            A[-1, idx[m]] = c
        from ._dense import rank_mod_p

        return rank_mod_p(A[:-1], p) == rank_mod_p(A, p)
    # exact Gaussian elimination over Q
    basis: dict = {}

    def reduce(vec):
        vec = dict(vec)
        while vec:
            piv = min(vec, key=lambda m: idx[m])
            if piv not in basis:
                return vec, piv
            b = basis[piv]
            c = vec[piv]
            for m, v in b.items():
                nv = vec.get(m, 0) - c * v
                if nv:
                    vec[m] = nv
                else:
                    vec.pop(m, None)
        return vec, None

    for g in rows:
        vec, piv = reduce(g.coeffs)
        if vec:
            inv = 1 / vec[piv]
            basis[piv] = {m: v * inv for m, v in vec.items()}
    vec, _ = reduce(f.coeffs)
    return not vec


def hilbert_function_oracle(I: Ideal, t_max: int) -> list:
    """H(R/I, t) by ranks of the spans of generator multiples (no Groebner bases)."""
    ring = I.ring
    out = []
    for d in range(t_max + 1):
        rows = []
        for g in I.gens:
            e = d - g.degree()
            if e < 0:
                continue
            for m in monomials_of_degree(ring.nvars, e):
                rows.append(g.mul_term(m, ring.field.one))
        out.append(count_monomials(ring.nvars, d) - _span_rank(ring, rows, d))
    return out


def _span_rank(ring: Ring, rows, d) -> int:
    if not rows:
        return 0
    mons = list(monomials_of_degree(ring.nvars, d))
    idx = {m: i for i, m in enumerate(mons)}
    F = ring.field
    if isinstance(F, PrimeField) and F.p < 2**31:
        from ._dense import rank_mod_p

        A = np.zeros((len(rows), len(mons)), dtype=np.int64)
        for r, g in enumerate(rows):
            for m, c in g.coeffs.items():
                A[r, idx[m]] = c
        return rank_mod_p(A, F.p)
    # rational rank via fraction-free elimination
    from fractions import Fraction

    M = [[Fraction(g.coeffs.get(m, 0)) for m in mons] for g in rows]
    rank = 0
    cols = len(mons)
    for c in range(cols):
        piv = next((r for r in range(rank, len(M)) if M[r][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(rank + 1, len(M)):
            if M[r][c] != 0:
                f = M[r][c] / M[rank][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank
