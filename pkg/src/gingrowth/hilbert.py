"""Hilbert functions and the invariants read off them or off a Gin.

Reduction numbers, Macaulay's growth bound, the Crystallization Principle
and a Weak Lefschetz test by ranks of multiplication maps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

import numpy as np

from ._dense import monomial_space, rank_mod_p
from .gin import DEFAULT_TRIALS, GinResult, gin
from .groebner import _dense_capable
from .ideals import Ideal, restrict_general
from .monomial import MonomialIdeal
from .ring import Polynomial, unit_vector
from .series import HilbertTable, binom, count_monomials


def hilbert_table(I, t_max: int, t_min: int = 0) -> HilbertTable:
    """H(R/I, t) for t_min <= t <= t_max (I an Ideal or a MonomialIdeal)."""
    if isinstance(I, MonomialIdeal):
        return I.hilbert_function(t_max, t_min)
    return I.hilbert_table(t_max, t_min)


def alpha(I) -> int:
    """Initial degree: the least degree with a nonzero component."""
    return I.alpha()


def component_basis(I: Ideal, d: int) -> list[Polynomial]:
    return I.component_basis(d)


# ---------------------------------------------------------------------------
# reduction numbers


@dataclass
class ReductionProfile:
    s: int
    value: int | None
    witness: int | None
    crosscheck: int | None
    certified: bool
    seeds: list = field(default_factory=list)
    warning: str = ""

    def as_dict(self) -> dict:
        return {
            "s": self.s,
            "value": self.value,
            "witness": self.witness,
            "crosscheck": self.crosscheck,
            "certified": self.certified,
        }


def reduction_witness(G: MonomialIdeal, s: int) -> int | None:
    """min{k : x_{n-s}^{k+1} in G} for a strongly stable G, or None."""
    n = G.nvars
    j = n - s - 1
    if not 0 <= j < n:
        raise ValueError("s must satisfy 0 <= s < n")
    for g in G.gens:
        if g[j] and sum(g) == g[j]:
            return g[j] - 1
    return None


def artinian_last_degree(I: Ideal) -> int | None:
    """Largest t with H(R/I, t) != 0, or None when R/I is not Artinian."""
    hs = I.hilbert_series()
    if hs.dimension != 0:
        return None
    h = hs.h_vector
    return max((t for t, v in enumerate(h) if v), default=None)


def reduction_number(I: Ideal, s: int, trials: int = DEFAULT_TRIALS, seed: int = 0,
                     gin_result: GinResult | None = None, retries: int = 2) -> ReductionProfile:
    """r_s(R/I) from the Gin witness, cross-checked with s random linear forms."""
    G = gin_result or gin(I, trials=trials, seed=seed)
    witness = reduction_witness(G.ideal, s)
    warning = ""
    dim = I.hilbert_series().dimension
    if s < dim:
        warning = f"s={s} is below dim R/I = {dim}"
    seeds = []
    cross = None
    for k in range(retries + 1):
        sd = seed + 104729 * (k + 1)
        seeds.append(sd)
        cross = artinian_last_degree(restrict_general(I, s, sd))
        if cross == witness:
            break
    certified = cross == witness and witness is not None and G.generic
    return ReductionProfile(s, witness if certified else (witness if witness is not None else cross),
                            witness, cross, certified, seeds, warning)


# ---------------------------------------------------------------------------
# Macaulay


def binomial_expansion(h: int, d: int) -> list:
    """The d-binomial expansion h = C(k_d, d) + C(k_{d-1}, d-1) + ... as [(k_i, i)]."""
    if h < 0 or d < 1:
        raise ValueError("need h >= 0 and d >= 1")
    out = []
    i = d
    while h > 0 and i >= 1:
        k = i
        while binom(k + 1, i) <= h:
            k += 1
        out.append((k, i))
        h -= binom(k, i)
        i -= 1
    return out


def macaulay_growth_bound(h: int, d: int) -> int:
    """Largest H(R/I, d + 1) permitted by Macaulay's theorem when H(R/I, d) = h."""
    return sum(binom(k + 1, i + 1) for k, i in binomial_expansion(h, d))


def lex_segment_growth(h: int, d: int, n: int) -> int:
    """Oracle: H(R/L, d + 1) for the lex-segment ideal L with H(R/L, d) = h in n variables."""
    total = count_monomials(n, d)
    if h > total:
        raise ValueError("h exceeds the number of monomials")
    mons = sorted(
        (tuple(combo.count(i) for i in range(n)) for combo in combinations_with_replacement(range(n), d)),
        reverse=True,
    )
    segment = mons[: total - h]
    nxt = set()
    for m in segment:
        for i in range(n):
            nxt.add(tuple(e + (j == i) for j, e in enumerate(m)))
    return count_monomials(n, d + 1) - len(nxt)


def macaulay_violations(table: HilbertTable) -> list:
    """Degrees d >= 1 where H(d + 1) exceeds the Macaulay bound."""
    vals = table.full_values()
    return [d for d in range(1, len(vals) - 1) if vals[d + 1] > macaulay_growth_bound(vals[d], d)]


# ---------------------------------------------------------------------------
# crystallization


@dataclass
class CrystallizationVerdict:
    d: int
    generator_in_next_degree: bool
    regular: bool
    gin_max_gen_degree: int | None

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "generator_in_next_degree": self.generator_in_next_degree,
            "regular": self.regular,
            "gin_max_gen_degree": self.gin_max_gen_degree,
        }


def crystallization_check(I: Ideal, d: int, trials: int = DEFAULT_TRIALS, seed: int = 0,
                          full: bool = True) -> CrystallizationVerdict:
    """If Gin(I) has no generator in degree d + 1 then I is d-regular.

    With ``full`` the complete Gin is also computed and the conclusion is
    verified against its maximal generator degree.
    """
    if I.max_generator_degree() > d:
        raise ValueError(f"I has generators above degree {d}")
    G = gin(I, trials=trials, seed=seed, degree_bound=d + 1)
    has_next = bool(G.ideal.generators_in_degree(d + 1))
    top = None
    if full:
        top = gin(I, trials=trials, seed=seed).ideal.max_generator_degree()
    regular = not has_next
    if regular and top is not None and top > d:
        from .growth import TheoremViolation

        raise TheoremViolation(f"no Gin generator in degree {d + 1} but Gin has one in degree {top}")
    return CrystallizationVerdict(d, has_next, regular if top is None else top <= d, top)


# ---------------------------------------------------------------------------
# weak Lefschetz


@dataclass
class WLPResult:
    holds: bool | None
    failing_degrees: list
    seeds: list
    h_cut1: list = field(default_factory=list)
    h_cut2: list = field(default_factory=list)
    ranks: list = field(default_factory=list)

    @property
    def inconclusive(self) -> bool:
        return self.holds is None

    def as_dict(self) -> dict:
        return {
            "holds": self.holds,
            "failing_degrees": self.failing_degrees,
            "seeds": self.seeds,
            "h_cut1": self.h_cut1,
            "h_cut2": self.h_cut2,
        }


def multiplication_ranks(A: Ideal, form: Polynomial, t_max: int) -> list:
    """[(t, rank, dim_t, dim_{t+1})] for x form : (R/A)_t -> (R/A)_{t+1}."""
    if not _dense_capable(A.ring):
        raise ValueError("rank computations need a prime field")
    p = A.ring.field.p
    gb = A.groebner()
    n = A.ring.nvars
    space = monomial_space(n, gb.order)
    coeffs = [(j, form.coeffs.get(unit_vector(n, j), 0)) for j in range(n)]
    out = []
    for t in range(t_max + 1):
        lo, hi = gb.nf_matrix(t), gb.nf_matrix(t + 1)
        if lo.dim == 0 or hi.dim == 0:
            out.append((t, 0, lo.dim, hi.dim))
            continue
        M = np.zeros((lo.dim, hi.dim), dtype=np.int64)
        for j, c in coeffs:
            if c:
                targets = space.shift(t, unit_vector(n, j))[lo.standard]
                M = (M + int(c) * hi.matrix[targets]) % p
        out.append((t, rank_mod_p(M, p), lo.dim, hi.dim))
    return out


def _wlp_single(I: Ideal, seed: int):
    A = restrict_general(I, 1, seed)
    hs = A.hilbert_series()
    if hs.dimension != 0:
        raise ValueError("wlp_test needs dim R/I <= 1")
    top = max(len(hs.h_vector) - 1, 0)
    rng = np.random.default_rng(seed + 1)
    L2 = A.ring.random_linear_form(rng)
    ranks = multiplication_ranks(A, L2, top)
    failing = [t for t, r, a, b in ranks if r < min(a, b)]
    return failing, ranks, hs


def wlp_test(I: Ideal, seed: int = 0, draws: int = 2, retries: int = 2) -> WLPResult:
    """Weak Lefschetz test: x L2 on R/(I + L1) has maximal rank in every degree.

    Two independent draws must agree; on disagreement further draws are
    made and, failing agreement, the verdict is None (inconclusive).
    """
    if I.hilbert_series().dimension > 1:
        raise ValueError("wlp_test needs dim R/I <= 1")
    verdicts = []
    seeds = []
    first = None
    for k in range(draws + retries):
        sd = seed + 7 * k
        seeds.append(sd)
        failing, ranks, hs = _wlp_single(I, sd)
        if first is None:
            first = (failing, ranks, hs, sd)
        verdicts.append(not failing)
        if len(verdicts) >= draws and len(set(verdicts[-draws:])) == 1:
            break
    agreed = len(set(verdicts[-draws:])) == 1 and len(verdicts) >= draws
    failing, ranks, hs, sd = first
    top = len(hs.h_vector) + 1
    h1 = hs.values(top)
    h2 = restrict_general(I, 2, sd).hilbert_series().values(top)
    return WLPResult(verdicts[-1] if agreed else None, failing, seeds, h1, h2, ranks)


__all__ = [
    "CrystallizationVerdict",
    "ReductionProfile",
    "WLPResult",
    "alpha",
    "artinian_last_degree",
    "binomial_expansion",
    "component_basis",
    "crystallization_check",
    "hilbert_table",
    "lex_segment_growth",
    "macaulay_growth_bound",
    "macaulay_violations",
    "multiplication_ranks",
    "reduction_number",
    "reduction_witness",
    "wlp_test",
]
