"""Monomial ideals and the calculus of strongly stable (Borel fixed) ideals.

Generators are exponent tuples.  Variable indices in the public API of
this module (``D``, ``M``, ``substitute_var_one``) are 1-based, matching
the convention that x1 is the largest variable.
"""

from __future__ import annotations

from collections import Counter
from functools import cached_property, lru_cache

from .ring import (
    DEGREVLEX,
    Polynomial,
    Ring,
    coprime,
    divides,
    format_monomial,
    mono_max,
    mono_min,
    monomials_of_degree,
)
from .series import HilbertSeries, HilbertTable, binom, poly_add, poly_mul, poly_shift


class NotStronglyStable(ValueError):
    pass


def minimalize(gens) -> list:
    """Remove generators divisible by other generators (and duplicates)."""
    uniq = sorted(set(tuple(g) for g in gens), key=lambda m: (sum(m), DEGREVLEX.key(m)))
    out: list = []
    for m in uniq:
        if not any(divides(g, m) for g in out):
            out.append(m)
    return out


def _display_key(m):
    # by degree, then descending degrevlex inside a degree
    return (sum(m), tuple(-x for x in DEGREVLEX.key(m)))


class MonomialIdeal:
    """A monomial ideal given by its minimal generators."""

    def __init__(self, nvars: int, gens=()):
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != nvars:
                raise ValueError("generator has the wrong number of variables")
        self.nvars = nvars
        self.gens = tuple(sorted(minimalize(gens), key=_display_key))

    @classmethod
    def from_polynomials(cls, polys) -> MonomialIdeal:
        polys = list(polys)
        if not polys:
            raise ValueError("need the ring: pass at least one polynomial")
        n = polys[0].ring.nvars
        gens = []
        for f in polys:
            if len(f.coeffs) != 1:
                raise ValueError(f"{f} is not a monomial")
            gens.extend(f.coeffs)
        return cls(n, gens)

    def to_polynomials(self, ring: Ring) -> list:
        return [ring.monomial(g) for g in self.gens]

    # -- basics ---------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.nvars == other.nvars and set(self.gens) == set(other.gens)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.gens)))

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.gens)

    def contains(self, m) -> bool:
        return any(divides(g, m) for g in self.gens)

    def degrees(self) -> list:
        return [sum(g) for g in self.gens]

    def to_string(self, names=None) -> str:
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(format_monomial(g, names) for g in self.gens) + ")"

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"MonomialIdeal{self.to_string()}"

    def generators_in_degree(self, d: int) -> list:
        return [g for g in self.gens if sum(g) == d]

    def basis_in_degree(self, d: int) -> list:
        """Monomials of degree d lying in the ideal."""
        return [m for m in monomials_of_degree(self.nvars, d) if self.contains(m)]

    # -- Borel calculus -------------------------------------------------------

    @cached_property
    def strongly_stable(self) -> bool:
        for m in self.gens:
            for i, e in enumerate(m):
                if not e:
                    continue
                for j in range(i):
                    moved = list(m)
                    moved[i] -= 1
                    moved[j] += 1
                    if not self.contains(moved):
                        return False
        return True

    def is_strongly_stable(self) -> bool:
        return self.strongly_stable

    def _require_stable(self):
        if not self.strongly_stable:
            raise NotStronglyStable("the ideal is not strongly stable")

    def _require_nonzero(self):
        if not self.gens:
            raise ValueError("undefined for the zero ideal")

    @cached_property
    def D(self) -> int:
        """max over generators of min(supp); 0 for the unit ideal."""
        self._require_nonzero()
        return max((mono_min(g) for g in self.gens if sum(g)), default=0)

    @cached_property
    def M(self) -> int:
        """max over generators of max(supp); 0 for the unit ideal."""
        self._require_nonzero()
        return max((mono_max(g) for g in self.gens if sum(g)), default=0)

    @cached_property
    def spor(self) -> frozenset:
        """Monomials x^K with x_M^r x^K a generator of max index M, r > 0; empty when D = M."""
        self._require_stable()
        self._require_nonzero()
        if self.D == self.M:
            return frozenset()
        M = self.M
        out = set()
        for g in self.gens:
            if sum(g) and mono_max(g) == M:
                for r in range(1, g[M - 1] + 1):
                    k = list(g)
                    k[M - 1] -= r
                    out.add(tuple(k))
        return frozenset(out)

    def spor_set(self) -> list:
        return sorted(self.spor, key=_display_key)

    def spor_count(self, m: int) -> int:
        return sum(1 for k in self.spor if sum(k) == m)

    def substitute_last_zero(self) -> MonomialIdeal:
        """x_n -> 0: drop generators involving x_n, read in n - 1 variables."""
        return MonomialIdeal(self.nvars - 1, [g[:-1] for g in self.gens if g[-1] == 0])

    def substitute_var_one(self, k: int | None = None) -> MonomialIdeal:
        """x_k -> 1 (1-based, default the last variable), kept in n variables."""
        k = self.nvars if k is None else k
        if not 1 <= k <= self.nvars:
            raise ValueError("variable index out of range")
        gens = []
        for g in self.gens:
            h = list(g)
            h[k - 1] = 0
            gens.append(tuple(h))
        return MonomialIdeal(self.nvars, gens)

    def colon_variable(self, k: int, power: int = 1) -> MonomialIdeal:
        """I : x_k^power (k 1-based)."""
        gens = []
        for g in self.gens:
            h = list(g)
            h[k - 1] = max(0, h[k - 1] - power)
            gens.append(tuple(h))
        return MonomialIdeal(self.nvars, gens)

    def is_saturated_stable(self) -> bool:
        """For strongly stable I: saturated iff no generator involves x_n."""
        self._require_stable()
        return all(g[-1] == 0 for g in self.gens)

    def sat_degree(self) -> int:
        self._require_stable()
        return max((sum(g) for g in self.gens if g[-1]), default=0)

    def regularity(self) -> int:
        """Max generator degree (the regularity when I is strongly stable)."""
        self._require_stable()
        self._require_nonzero()
        return max(sum(g) for g in self.gens)

    def max_generator_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def ek_betti(self) -> list:
        """Eliahou-Kervaire Betti numbers beta_i = sum_m C(max(m) - 1, i)."""
        self._require_stable()
        betti = [0] * self.nvars
        for g in self.gens:
            j = mono_max(g) if sum(g) else 1
            for i in range(j):
                betti[i] += binom(j - 1, i)
        while len(betti) > 1 and betti[-1] == 0:
            betti.pop()
        return betti

    # -- Hilbert series -------------------------------------------------------

    @cached_property
    def hilbert_series(self) -> HilbertSeries:
        return HilbertSeries(self.nvars, tuple(_numerator(self.nvars, frozenset(self.gens))))

    def hilbert_function(self, t_max: int, t_min: int = 0) -> HilbertTable:
        return hilbert_function_monomial(self, t_max, t_min)

    def alpha(self) -> int:
        self._require_nonzero()
        return min(sum(g) for g in self.gens)


# ---------------------------------------------------------------------------
# Hilbert series numerator by pivot recursion


@lru_cache(maxsize=200_000)
def _numerator(n: int, gens: frozenset) -> list:
    """N(t) with HS(R/I) = N(t) / (1 - t)^n."""
    if not gens:
        return [1]
    gl = list(gens)
    if any(sum(g) == 0 for g in gl):
        return [0]
    if all(coprime(a, b) for i, a in enumerate(gl) for b in gl[i + 1:]):
        out = [1]
        for g in gl:
            out = poly_mul(out, [1] + [0] * (sum(g) - 1) + [-1])
        return out
    counts = Counter(i for g in gl for i, e in enumerate(g) if e)
    best = max(counts.values())
    x = min(i for i, c in counts.items() if c == best)
    unit = tuple(1 if j == x else 0 for j in range(n))
    plus = frozenset(minimalize([g for g in gl if not g[x]] + [unit]))
    colon = frozenset(minimalize([tuple(e - 1 if j == x and e else e for j, e in enumerate(g)) for g in gl]))
    return poly_add(_numerator(n, plus), poly_shift(_numerator(n, colon), 1))


def hilbert_function_monomial(I: MonomialIdeal, t_max: int, t_min: int = 0) -> HilbertTable:
    series = I.hilbert_series
    alpha = I.alpha() if I.gens else None
    return HilbertTable(I.nvars, series.values(t_max, t_min), t_min, series, alpha)


def hilbert_function_bruteforce(I: MonomialIdeal, t_max: int) -> list:
    """Count standard monomials degree by degree (oracle)."""
    return [sum(1 for m in monomials_of_degree(I.nvars, t) if not I.contains(m)) for t in range(t_max + 1)]


# ---------------------------------------------------------------------------
# Borel closures and helpers


def borel_moves(m) -> list:
    out = []
    for i, e in enumerate(m):
        if e:
            for j in range(i):
                k = list(m)
                k[i] -= 1
                k[j] += 1
                out.append(tuple(k))
    return out


def borel_closure(nvars: int, gens) -> MonomialIdeal:
    """The smallest strongly stable ideal containing the given monomials."""
    seen = set()
    stack = [tuple(g) for g in gens]
    while stack:
        m = stack.pop()
        if m in seen:
            continue
        seen.add(m)
        stack.extend(k for k in borel_moves(m) if k not in seen)
    return MonomialIdeal(nvars, seen)


def ek_regularity_crosscheck(I: MonomialIdeal) -> dict:
    """Regularity read off the Eliahou-Kervaire resolution, with Betti counts."""
    betti = I.ek_betti()
    reg = max(sum(g) for g in I.gens) if I.gens else 0
    return {"reg": reg, "betti": betti, "agrees": reg == I.regularity()}


def spor_kernel_dimension(I: MonomialIdeal, m: int) -> int:
    """dim (J^sat / J)_m with J = I|x_n->0 and J^sat = J|x_{n-1}->1."""
    J = I.substitute_last_zero()
    Js = J.substitute_var_one(J.nvars)
    return J.hilbert_series.value(m) - Js.hilbert_series.value(m)


def lift_to_ring(I: MonomialIdeal, ring: Ring) -> list[Polynomial]:
    if ring.nvars != I.nvars:
        raise ValueError("ring has a different number of variables")
    return I.to_polynomials(ring)


__all__ = [
    "MonomialIdeal",
    "NotStronglyStable",
    "borel_closure",
    "ek_regularity_crosscheck",
    "hilbert_function_bruteforce",
    "hilbert_function_monomial",
    "minimalize",
    "spor_kernel_dimension",
]
