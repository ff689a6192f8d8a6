"""Finite point sets in projective space and their vanishing ideals."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from ._dense import monomial_space
from .groebner import GroebnerBasis, _dense_capable
from .ideals import Ideal, graded_kernel_gb, ideal_intersection
from .monomial import MonomialIdeal
from .ring import DEGREVLEX, LinearChange, MonomialOrder, Polynomial, Ring
from .series import count_monomials


def _normalize(point, F):
    """Scale so that the first nonzero coordinate is 1."""
    lead = next((c for c in point if c != 0), None)
    if lead is None:
        raise ValueError("the zero vector is not a projective point")
    inv = F.inv(lead)
    return tuple(F.mul(c, inv) for c in point)


@dataclass(frozen=True)
class PointSet:
    """Distinct points of P^{n-1}, stored normalized (first nonzero coordinate 1)."""

    ring: Ring
    points: tuple
    tag: str = ""

    def __post_init__(self):
        F = self.ring.field
        norm = []
        for pt in self.points:
            if len(pt) != self.ring.nvars:
                raise ValueError("point has the wrong number of coordinates")
            norm.append(_normalize(tuple(F.coerce(c) for c in pt), F))
        if len(set(norm)) != len(norm):
            raise ValueError("duplicate points")
        object.__setattr__(self, "points", tuple(norm))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def n(self) -> int:
        return self.ring.nvars

    def union(self, other: PointSet) -> PointSet:
        return PointSet(self.ring, self.points + other.points, f"{self.tag}+{other.tag}")

    def pull_back(self, g: LinearChange) -> PointSet:
        """The point set whose ideal is g applied to the ideal of self."""
        return PointSet(self.ring, tuple(g.pull_back_point(pt) for pt in self.points), self.tag)

    def subset(self, indices) -> PointSet:
        return PointSet(self.ring, tuple(self.points[i] for i in indices), self.tag)

    def to_json(self) -> list:
        F = self.ring.field
        return [[int(F.to_str(c)) if isinstance(c, int) else str(c) for c in pt] for pt in self.points]


# ---------------------------------------------------------------------------
# evaluation and Buchberger-Moeller


def evaluation_matrix(P: PointSet, t: int, order: MonomialOrder = DEGREVLEX) -> np.ndarray:
    """Rows: degree-t monomials (descending in ``order``); columns: the points."""
    p = P.ring.field.p
    space = monomial_space(P.n, order)
    mons = space.monomials(t)
    pts = np.array(P.points, dtype=np.int64).reshape(len(P), P.n) % p
    powers = [[np.ones(len(P), dtype=np.int64)] for _ in range(P.n)]
    for i in range(P.n):
        for _ in range(t):
            powers[i].append(powers[i][-1] * pts[:, i] % p)
    out = np.empty((len(mons), len(P)), dtype=np.int64)
    for r, m in enumerate(mons):
        v = np.ones(len(P), dtype=np.int64)
        for i, e in enumerate(m):
            if e:
                v = v * powers[i][e] % p
        out[r] = v
    return out


def buchberger_moller(P: PointSet, order: MonomialOrder = DEGREVLEX) -> GroebnerBasis:
    """Reduced GB of the vanishing ideal of P.

    Runs degree by degree over the evaluation matrices and stops once the
    leading monomials found so far have Hilbert function |P| in every
    later degree (the Hilbert function of points never exceeds |P|).
    """
    ring = P.ring
    if not _dense_capable(ring):
        raise ValueError("point computations need a prime field")
    npts = len(P)
    if npts == 0:
        return GroebnerBasis(ring, order, [ring.one()], 0)

    def stop(lm_ideal: MonomialIdeal, t: int) -> bool:
        if lm_ideal.is_zero():
            return False
        hs = lm_ideal.hilbert_series
        if hs.dimension != 1 or hs.degree != npts:
            return False
        last = max(t + 1, hs.polynomial_from())
        return all(hs.value(u) == npts for u in range(t + 1, last + 1))

    return graded_kernel_gb(ring, lambda t: evaluation_matrix(P, t, order), stop, order, start=1)


def point_ideal(P: PointSet) -> Ideal:
    """The vanishing ideal of P, remembering P (used by fast generic-change paths)."""
    gb = buchberger_moller(P)
    I = Ideal(P.ring, gb.polys, label=P.tag)
    I._gb[(DEGREVLEX, None)] = gb
    I.points = P
    return I


# ---------------------------------------------------------------------------
# constructions


def random_points(ring: Ring, count: int, seed: int = 0) -> PointSet:
    """``count`` distinct points with uniformly random coordinates."""
    if count < 0:
        raise ValueError("count must be non-negative")
    rng = np.random.default_rng(seed)
    F = ring.field
    seen: dict = {}
    while len(seen) < count:
        pt = tuple(F.random(rng) for _ in range(ring.nvars))
        if not any(pt):
            continue
        seen.setdefault(_normalize(pt, F), None)
    return PointSet(ring, tuple(seen), f"random({count},seed={seed})")


def _values_on_line(f: Polynomial, A, B, p: int) -> np.ndarray:
    """f(A + lam * B) for every lam in F_p."""
    lam = np.arange(p, dtype=np.int64)
    coords = [(int(a) + lam * int(b)) % p for a, b in zip(A, B)]
    total = np.zeros(p, dtype=np.int64)
    for m, c in f.coeffs.items():
        v = np.full(p, int(c) % p, dtype=np.int64)
        for i, e in enumerate(m):
            for _ in range(e):
                v = v * coords[i] % p
        total = (total + v) % p
    return total


def points_on_hypersurface(f: Polynomial, count: int, seed: int = 0, max_lines: int = 100_000) -> PointSet:
    """Random F_p-rational points of the hypersurface f = 0, found on random lines."""
    ring = f.ring
    if f.is_zero():
        raise ValueError("f must be nonzero")
    if ring.nvars > 4:
        raise ValueError("hypersurface sampling is limited to P^3")
    if not _dense_capable(ring):
        raise ValueError("hypersurface sampling needs a prime field")
    F = ring.field
    p = F.p
    rng = np.random.default_rng(seed)
    found: dict = {}
    lines = 0
    while len(found) < count:
        lines += 1
        if lines > max_lines:
            raise RuntimeError("not enough rational points found")
        A = [F.random(rng) for _ in range(ring.nvars)]
        B = [F.random(rng) for _ in range(ring.nvars)]
        if not any(B):
            continue
        roots = np.flatnonzero(_values_on_line(f, A, B, p) == 0)
        if not len(roots):
            continue
        # one root per line keeps the sample spread out
        lam = int(roots[int(rng.integers(len(roots)))])
        pt = tuple((a + lam * b) % p for a, b in zip(A, B))
        if not any(pt):
            continue
        found.setdefault(_normalize(pt, F), None)
    return PointSet(ring, tuple(found), f"on_hypersurface({count},seed={seed})")


def points_on_rational_curve(ring: Ring, forms, count: int, seed: int = 0) -> PointSet:
    """Points [F_1(s,t): ... : F_n(s,t)] for random (s, t), ``forms`` being callables."""
    F = ring.field
    rng = np.random.default_rng(seed)
    found: dict = {}
    guard = 0
    while len(found) < count:
        guard += 1
        if guard > 100 * (count + 10):
            raise RuntimeError("curve has too few rational points")
        s, t = F.random(rng), F.random(rng)
        pt = tuple(F.coerce(fn(s, t)) for fn in forms)
        if not any(pt):
            continue
        found.setdefault(_normalize(pt, F), None)
    return PointSet(ring, tuple(found), f"rational_curve({count},seed={seed})")


def random_complete_intersection(ring: Ring, degrees, seed: int = 0, attempts: int = 10) -> Ideal:
    """Random forms of the given degrees, rejection-sampled until they form a regular sequence."""
    from .series import HilbertSeries, poly_mul

    target = [1]
    for d in degrees:
        target = poly_mul(target, [1] + [0] * (d - 1) + [-1])
    want = HilbertSeries(ring.nvars, tuple(target))
    for k in range(attempts):
        rng = np.random.default_rng(seed + 1000 * k)
        I = Ideal(ring, [ring.random_form(d, rng) for d in degrees], label=f"CI{tuple(degrees)}")
        if I.hilbert_series().numerator == want.numerator:
            return I
    raise RuntimeError("could not draw a complete intersection")


def intersect_point_ideals(A: Ideal, B: Ideal) -> Ideal:
    """Ideal of the union of two schemes (the intersection of their ideals)."""
    pa, pb = getattr(A, "points", None), getattr(B, "points", None)
    if pa is not None and pb is not None and not set(pa.points) & set(pb.points):
        return point_ideal(pa.union(pb))
    if A.is_zero():
        return A
    if B.is_zero():
        return B
    return ideal_intersection(A, B)


def generic_h_vector(n: int, count: int) -> list:
    """h-vector of ``count`` general points in P^{n-1}: truncated binomial growth."""
    h = []
    total = 0
    t = 0
    while total < count:
        c = min(count_monomials(n - 1, t), count - total)
        h.append(c)
        total += c
        t += 1
    return h


def check_upp_bruteforce(P: PointSet, limit: int = 12) -> bool:
    """Do all subsets of equal size share a Hilbert function?  Exponential in |P|."""
    if len(P) > limit:
        raise ValueError(f"{len(P)} points exceed the brute-force limit {limit}")
    for k in range(1, len(P)):
        seen = None
        for sub in combinations(range(len(P)), k):
            hs = buchberger_moller(P.subset(sub)).initial_ideal().hilbert_series.numerator
            if seen is None:
                seen = hs
            elif hs != seen:
                return False
    return True


__all__ = [
    "PointSet",
    "buchberger_moller",
    "check_upp_bruteforce",
    "evaluation_matrix",
    "generic_h_vector",
    "intersect_point_ideals",
    "point_ideal",
    "points_on_hypersurface",
    "points_on_rational_curve",
    "random_complete_intersection",
    "random_points",
]
