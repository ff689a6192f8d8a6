"""Buchberger's algorithm, normal forms and initial ideals.

Two engines share one pair-management routine (normal selection plus the
Gebauer-Moeller installation of the coprime and chain criteria):

* a dense engine for homogeneous input over F_p that works one degree at a
  time on numpy vectors indexed by the monomials of that degree;
* a sparse dict-based engine for everything else (rational coefficients,
  inhomogeneous input, alternative selection strategies).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from ._dense import monomial_space
from .field import PrimeField
from .ring import (
    DEGREVLEX,
    MonomialOrder,
    Polynomial,
    Ring,
    coprime,
    divides,
    mono_div,
    mono_lcm,
    mono_mul,
)


@dataclass
class GBStats:
    pairs_formed: int = 0
    pairs_discarded: int = 0
    reductions: int = 0
    zero_reductions: int = 0
    engine: str = ""

    def as_dict(self) -> dict:
        return {
            "pairs_formed": self.pairs_formed,
            "pairs_discarded": self.pairs_discarded,
            "reductions": self.reductions,
            "zero_reductions": self.zero_reductions,
            "engine": self.engine,
        }


def _dense_capable(ring: Ring) -> bool:
    return isinstance(ring.field, PrimeField) and ring.field.p < 2**31


class GroebnerBasis:
    """A reduced Groebner basis (monic, auto-reduced), sorted by leading monomial.

    If ``degree_bound`` is set the basis is only guaranteed up to that
    degree (homogeneous input): every element of the ideal of degree at
    most the bound reduces to zero.
    """

    def __init__(self, ring: Ring, order: MonomialOrder, polys, source_count=0,
                 stats: GBStats | None = None, degree_bound: int | None = None):
        self.ring = ring
        self.order = order
        key = order.key
        lead = [(p.leading_monomial(order), p) for p in polys]
        lead.sort(key=lambda t: key(t[0]))
        self.polys = [p for _, p in lead]
        self.lms = [m for m, _ in lead]
        self.source_count = source_count
        self.stats = stats or GBStats()
        self.degree_bound = degree_bound
        self._nf_cache: dict = {}

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    @property
    def is_complete(self) -> bool:
        return self.degree_bound is None

    def leading_monomials(self) -> list:
        return list(self.lms)

    def max_degree(self) -> int:
        return max((sum(m) for m in self.lms), default=0)

    def is_homogeneous(self) -> bool:
        return all(p.is_homogeneous() for p in self.polys)

    def initial_ideal(self):
        from .monomial import MonomialIdeal

        return MonomialIdeal(self.ring.nvars, self.lms)

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise ValueError("ring mismatch")
        if not f.coeffs or not self.polys:
            return f
        if (
            _dense_capable(self.ring)
            and f.is_homogeneous()
            and self.is_homogeneous()
            and (self.degree_bound is None or f.degree() <= self.degree_bound)
        ):
            t = f.degree()
            view = self.nf_matrix(t)
            space = view.space
            vec = space.to_dense(f, t, self.ring.field.p)
            return Polynomial(self.ring, view.reduce_vector(vec))
        return _sparse_normal_form(f, self.polys, self.lms, self.order)

    def contains(self, f: Polynomial) -> bool:
        if self.degree_bound is not None and f.degree() > self.degree_bound:
            raise ValueError("membership above the degree bound of a truncated basis")
        return self.normal_form(f).is_zero()

    def nf_matrix(self, t: int) -> NormalFormTable:
        """Degree-t normal forms of all monomials (dense, F_p only)."""
        tab = self._nf_cache.get(t)
        if tab is None:
            tab = NormalFormTable(self, t)
            self._nf_cache[t] = tab
        return tab

    def __repr__(self):
        return f"GroebnerBasis({len(self.polys)} elements, {self.order})"


# ---------------------------------------------------------------------------
# sparse reduction


def _neg_key(key, m):
    return tuple(-x for x in key(m))


def _sparse_normal_form(f: Polynomial, polys, lms, order: MonomialOrder) -> Polynomial:
    """Full reduction of f by ``polys`` (leading monomials ``lms``)."""
    F = f.ring.field
    key = order.key
    rem = dict(f.coeffs)
    heap = [(_neg_key(key, m), m) for m in rem]
    heapq.heapify(heap)
    out: dict = {}
    lead_cache = [p.leading_term(order)[1] for p in polys]
    while heap:
        _, m = heapq.heappop(heap)
        c = rem.pop(m, None)
        if c is None:
            continue
        for g, lm, lc in zip(polys, lms, lead_cache):
            if divides(lm, m):
                q = mono_div(m, lm)
                factor = F.div(c, lc)
                for gm, gc in g.coeffs.items():
                    if gm == lm:
                        continue
                    u = mono_mul(q, gm)
                    old = rem.get(u)
                    v = F.sub(F.zero if old is None else old, F.mul(factor, gc))
                    if v != 0:
                        if old is None:
                            heapq.heappush(heap, (_neg_key(key, u), u))
                        rem[u] = v
                    elif old is not None:
                        del rem[u]
                break
        else:
            out[m] = c
    return Polynomial(f.ring, out)


# ---------------------------------------------------------------------------
# pair management


class _Pairs:
    """Critical pairs with Gebauer-Moeller updates."""

    def __init__(self, stats: GBStats):
        self.pairs: list = []  # (i, j, lcm)
        self.stats = stats

    def update(self, lms: list, h: int, alive=None):
        lh = lms[h]
        cands = [(g, mono_lcm(lms[g], lh)) for g in range(h) if alive is None or alive[g]]
        self.stats.pairs_formed += len(cands)
        # chain criterion among the new pairs: keep (g, h) only if no other
        # new pair has an lcm that divides it (ties resolved by first index)
        kept = []
        for k, (g, lcm) in enumerate(cands):
            if coprime(lms[g], lh):
                kept.append((g, lcm, True))
                continue
            dominated = False
            for k2, (g2, lcm2) in enumerate(cands):
                if k2 == k:
                    continue
                if divides(lcm2, lcm) and (lcm2 != lcm or k2 < k):
                    dominated = True
                    break
            if not dominated:
                kept.append((g, lcm, False))
        # among pairs with equal lcm keep one, preferring a coprime one
        by_lcm: dict = {}
        for g, lcm, cop in kept:
            prev = by_lcm.get(lcm)
            if prev is None or (cop and not prev[1]):
                by_lcm[lcm] = (g, cop)
        new = []
        for lcm, (g, cop) in by_lcm.items():
            if not cop:
                new.append((g, h, lcm))
        self.stats.pairs_discarded += len(cands) - len(new)
        # chain criterion on the old pairs
        survivors = []
        for i, j, lcm in self.pairs:
            if (
                divides(lh, lcm)
                and mono_lcm(lms[i], lh) != lcm
                and mono_lcm(lms[j], lh) != lcm
            ):
                self.stats.pairs_discarded += 1
                continue
            survivors.append((i, j, lcm))
        self.pairs = survivors + new

    def __bool__(self):
        return bool(self.pairs)

    def min_degree(self) -> int:
        return min(sum(l) for _, _, l in self.pairs)

    def pop_degree(self, t: int) -> list:
        batch = [pr for pr in self.pairs if sum(pr[2]) == t]
        self.pairs = [pr for pr in self.pairs if sum(pr[2]) != t]
        return batch


# ---------------------------------------------------------------------------
# dense homogeneous engine


class _DenseElem:
    __slots__ = ("deg", "lm", "vec", "lead")

    def __init__(self, deg, lm, vec, lead):
        self.deg = deg
        self.lm = lm
        self.vec = vec
        self.lead = lead


class _DegreeTable:
    """Reducer lookup for one degree t: position -> (element, multiplier)."""

    def __init__(self, space, t: int, elems: list, p: int):
        self.space = space
        self.t = t
        self.p = p
        size = space.size(t)
        self.red_e = np.full(size, -1, dtype=np.int64)
        self.red_q = np.zeros(size, dtype=np.int64)
        self.elems = elems
        for k, e in enumerate(elems):
            if e.deg > t:
                continue
            self._register(k, e)
        self._refresh()

    def _register(self, k, e):
        pos = self.space.shift(self.t - e.deg, e.lm)
        free = self.red_e[pos] < 0
        self.red_e[pos[free]] = k
        self.red_q[pos[free]] = np.flatnonzero(free)

    def add(self, k: int):
        self._register(k, self.elems[k])
        self._refresh()

    def _refresh(self):
        self.rpos = np.flatnonzero(self.red_e >= 0)

    def reduce(self, v: np.ndarray, skip: int = -1) -> np.ndarray:
        """Fully reduce v in place; position ``skip`` is left alone."""
        p = self.p
        space = self.space
        rpos = self.rpos
        steps = 0
        start = 0
        while True:
            vals = v[rpos[start:]]
            nz = np.flatnonzero(vals)
            if skip >= 0 and len(nz) and rpos[start + nz[0]] == skip:
                nz = nz[1:]
            if not len(nz):
                return steps
            k = start + nz[0]
            pos = rpos[k]
            e = self.elems[self.red_e[pos]]
            a = e.deg
            q = space.monomials(self.t - a)[self.red_q[pos]]
            idx = space.shift(a, q)
            c = int(v[pos])
            v[idx] = (v[idx] - c * e.vec) % p
            steps += 1
            start = k + 1


def _buchberger_dense(ring: Ring, gens, order: MonomialOrder, degree_bound, stats: GBStats):
    p = ring.field.p
    n = ring.nvars
    space = monomial_space(n, order)
    stats.engine = "dense"
    inputs: dict = {}
    for f in gens:
        if f.is_zero():
            continue
        t = f.degree()
        inputs.setdefault(t, []).append(space.to_dense(f, t, p))
    elems: list[_DenseElem] = []
    lms: list = []
    pairs = _Pairs(stats)
    while inputs or pairs:
        t = min(list(inputs) + ([pairs.min_degree()] if pairs else []))
        if degree_bound is not None and t > degree_bound:
            break
        batch = pairs.pop_degree(t)
        table = _DegreeTable(space, t, elems, p)
        cands = []
        for i, j, lcm in batch:
            ei, ej = elems[i], elems[j]
            v = np.zeros(space.size(t), dtype=np.int64)
            v[space.shift(ei.deg, mono_div(lcm, ei.lm))] += ei.vec
            v[space.shift(ej.deg, mono_div(lcm, ej.lm))] -= ej.vec
            cands.append(v % p)
        cands.extend(inputs.pop(t, []))
        fresh = []
        for v in cands:
            stats.reductions += 1
            table.reduce(v)
            nz = np.flatnonzero(v)
            if not len(nz):
                stats.zero_reductions += 1
                continue
            lead = int(nz[0])
            v = v * pow(int(v[lead]), -1, p) % p
            lm = space.monomials(t)[lead]
            elems.append(_DenseElem(t, lm, v, lead))
            lms.append(lm)
            k = len(elems) - 1
            table.add(k)
            fresh.append(k)
            pairs.update(lms, k)
        # tail-reduce the elements found in this degree against each other
        for k in fresh:
            e = elems[k]
            table.reduce(e.vec, skip=e.lead)
    polys = [Polynomial(ring, space.to_coeffs(e.vec, e.deg)) for e in elems]
    return polys


# ---------------------------------------------------------------------------
# sparse engine


def _sugar(f: Polynomial) -> int:
    return f.degree()


def _buchberger_sparse(ring: Ring, gens, order: MonomialOrder, degree_bound, strategy, stats):
    F = ring.field
    key = order.key
    stats.engine = "sparse"
    basis: list[Polynomial] = []
    lms: list = []
    sugars: list = []
    alive: list = []
    pairs = _Pairs(stats)
    homogeneous = all(g.is_homogeneous() for g in gens)

    def add(h: Polynomial, sugar: int):
        h = h.monic(order)
        lm = h.leading_monomial(order)
        basis.append(h)
        lms.append(lm)
        sugars.append(sugar)
        alive.append(True)
        # pair with everything currently in the basis, then drop the
        # elements whose leading monomial h divides
        pairs.update(lms, len(basis) - 1, alive)
        for k in range(len(basis) - 1):
            if alive[k] and divides(lm, lms[k]):
                alive[k] = False

    def reducers():
        ks = [k for k in range(len(basis)) if alive[k]]
        return [basis[k] for k in ks], [lms[k] for k in ks]

    queue = sorted((g for g in gens if not g.is_zero()), key=lambda g: key(g.leading_monomial(order)))
    for g in queue:
        polys, ls = reducers()
        stats.reductions += 1
        r = _sparse_normal_form(g, polys, ls, order) if polys else g
        if r.is_zero():
            stats.zero_reductions += 1
            continue
        add(r, _sugar(g))

    def pair_sugar(pr):
        i, j, lcm = pr
        d = sum(lcm)
        return max(sugars[i] - sum(lms[i]), sugars[j] - sum(lms[j])) + d

    while pairs:
        if strategy == "first":
            pr = pairs.pairs.pop(0)
        else:
            if strategy == "sugar":
                best = min(range(len(pairs.pairs)), key=lambda k: (pair_sugar(pairs.pairs[k]), key(pairs.pairs[k][2])))
            else:
                best = min(range(len(pairs.pairs)), key=lambda k: key(pairs.pairs[k][2]))
            pr = pairs.pairs.pop(best)
        i, j, lcm = pr
        if degree_bound is not None and homogeneous and sum(lcm) > degree_bound:
            stats.pairs_discarded += 1
            continue
        fi, fj = basis[i], basis[j]
        s = fi.mul_term(mono_div(lcm, lms[i]), F.one) - fj.mul_term(mono_div(lcm, lms[j]), F.one)
        polys, ls = reducers()
        stats.reductions += 1
        r = _sparse_normal_form(s, polys, ls, order)
        if r.is_zero():
            stats.zero_reductions += 1
            continue
        add(r, pair_sugar(pr))
    # minimalize and interreduce
    keep = [basis[k] for k in range(len(basis)) if alive[k]]
    keep_lms = [lms[k] for k in range(len(basis)) if alive[k]]
    out = []
    for k, g in enumerate(keep):
        others = [h for k2, h in enumerate(keep) if k2 != k]
        other_lms = [m for k2, m in enumerate(keep_lms) if k2 != k]
        lm, lc = g.leading_term(order)
        tail = Polynomial(ring, {m: c for m, c in g.coeffs.items() if m != lm})
        tail = _sparse_normal_form(tail, others, other_lms, order) if others else tail
        out.append((tail + ring.monomial(lm, lc)).monic(order))
    return out


# ---------------------------------------------------------------------------
# public entry points


def buchberger(gens, order: MonomialOrder = DEGREVLEX, degree_bound: int | None = None,
               strategy: str = "normal", engine: str = "auto") -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    ``engine`` is "auto", "dense" or "sparse"; the dense engine needs
    homogeneous input over a prime field and the normal strategy.
    ``degree_bound`` truncates the computation (homogeneous input only).
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator (pass the ring's zero)")
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators live in different rings")
    if strategy not in ("normal", "sugar", "first"):
        raise ValueError(f"unknown selection strategy {strategy!r}")
    homogeneous = all(g.is_homogeneous() for g in gens)
    if degree_bound is not None and not homogeneous:
        raise ValueError("a degree bound needs homogeneous generators")
    nonzero = [g for g in gens if not g.is_zero()]
    stats = GBStats()
    if any(g.degree() == 0 for g in nonzero):
        stats.engine = "unit"
        return GroebnerBasis(ring, order, [ring.one()], len(gens), stats, None)
    use_dense = engine == "dense" or (
        engine == "auto" and strategy == "normal" and homogeneous and _dense_capable(ring)
    )
    if use_dense:
        if not (homogeneous and _dense_capable(ring)):
            raise ValueError("dense engine needs homogeneous input over F_p")
        polys = _buchberger_dense(ring, nonzero, order, degree_bound, stats)
    else:
        polys = _buchberger_sparse(ring, nonzero, order, degree_bound, strategy, stats)
    return GroebnerBasis(ring, order, polys, len(gens), stats, degree_bound)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    return G.normal_form(f)


def initial_ideal(G: GroebnerBasis):
    return G.initial_ideal()


# ---------------------------------------------------------------------------
# degree-t normal form tables


class NormalFormTable:
    """Normal forms of all degree-t monomials modulo a homogeneous GB over F_p.

    ``standard`` lists the positions (in the descending monomial list of
    degree t) of the standard monomials; ``matrix[i]`` holds NF(m_i) in
    the standard-monomial coordinates.
    """

    def __init__(self, gb: GroebnerBasis, t: int):
        if not _dense_capable(gb.ring):
            raise ValueError("normal form tables need a prime field")
        if gb.degree_bound is not None and t > gb.degree_bound:
            raise ValueError("degree above the bound of a truncated basis")
        p = gb.ring.field.p
        space = monomial_space(gb.ring.nvars, gb.order)
        self.space = space
        self.t = t
        self.p = p
        size = space.size(t)
        elems = []
        for g in gb.polys:
            if g.degree() > t:
                continue
            d = g.degree()
            vec = space.to_dense(g, d, p)
            lead = space.index(d)[g.leading_monomial(gb.order)]
            elems.append(_DenseElem(d, g.leading_monomial(gb.order), vec, lead))
        red_e = np.full(size, -1, dtype=np.int64)
        red_q = np.zeros(size, dtype=np.int64)
        for k, e in enumerate(elems):
            pos = space.shift(t - e.deg, e.lm)
            free = red_e[pos] < 0
            red_e[pos[free]] = k
            red_q[pos[free]] = np.flatnonzero(free)
        self.standard = np.flatnonzero(red_e < 0)
        self.reducible = np.flatnonzero(red_e >= 0)
        col = np.full(size, -1, dtype=np.int64)
        col[self.standard] = np.arange(len(self.standard))
        self.column = col
        mat = np.zeros((size, len(self.standard)), dtype=np.int64)
        mat[self.standard, np.arange(len(self.standard))] = 1
        # smaller monomials sit at larger positions, so sweep from the end
        for pos in self.reducible[::-1]:
            e = elems[red_e[pos]]
            q = space.monomials(t - e.deg)[red_q[pos]]
            idx = space.shift(e.deg, q)
            tail = idx != pos
            coeffs = e.vec[tail]
            nzt = np.flatnonzero(coeffs)
            if len(nzt):
                mat[pos] = (-(coeffs[nzt] @ mat[idx[tail][nzt]])) % p
        self.matrix = mat

    @property
    def dim(self) -> int:
        return len(self.standard)

    def reduce_vector(self, vec: np.ndarray) -> dict:
        nz = np.flatnonzero(vec)
        red = (vec[nz] @ self.matrix[nz]) % self.p if len(nz) else np.zeros(self.dim, dtype=np.int64)
        mons = self.space.monomials(self.t)
        return {mons[self.standard[i]]: int(red[i]) for i in np.flatnonzero(red)}

    def coordinates(self, vec: np.ndarray) -> np.ndarray:
        """NF coordinates of a dense degree-t vector."""
        nz = np.flatnonzero(vec)
        if not len(nz):
            return np.zeros(self.dim, dtype=np.int64)
        return (vec[nz] @ self.matrix[nz]) % self.p

    def component_basis(self) -> np.ndarray:
        """Rows m - NF(m) for the non-standard m: a basis of I_t (dense vectors)."""
        size = self.space.size(self.t)
        rows = np.zeros((len(self.reducible), size), dtype=np.int64)
        for r, pos in enumerate(self.reducible):
            rows[r, self.standard] = (-self.matrix[pos]) % self.p
            rows[r, pos] = 1
        return rows
