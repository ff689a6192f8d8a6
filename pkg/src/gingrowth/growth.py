"""Growth-of-Hilbert-function pipelines.

Checks split in two kinds.  ASSERT checks encode guaranteed consequences
and raise :class:`TheoremViolation` when they fail (a defect or a missed
generic choice).  MONITOR checks record properties that are known to fail
in some examples and only report.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .gin import DEFAULT_TRIALS, GinResult, gin, is_saturated_via_gin
from .hilbert import ReductionProfile, multiplication_ranks, reduction_number, wlp_test
from .ideals import Ideal, poly_gcd, restrict_general
from .monomial import MonomialIdeal
from .ring import Polynomial
from .series import binom, differences


class TheoremViolation(AssertionError):
    """A guaranteed consequence failed on certified inputs."""


class PreconditionError(ValueError):
    """The hypotheses of a pipeline are not met."""


@dataclass
class GrowthReport:
    label: str
    d: int | None
    s: int | None = None
    r2: int | None = None
    r3: int | None = None
    truncation: list = field(default_factory=list)
    saturated: bool | None = None
    d_regular: bool | None = None
    dimension: int | None = None
    degree: int | None = None
    common_factor: Polynomial | None = None
    injective: bool | None = None
    wlp: bool | None = None
    verdict: str = "none"
    reason: str = ""
    certified: bool = False
    monitors: dict = field(default_factory=dict)
    seeds: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        """Plain data with a fixed key order; dimension is the projective dimension of the scheme."""
        return {
            "verdict": self.verdict,
            "reason": self.reason,
            "d": self.d,
            "s": self.s,
            "r2": self.r2,
            "r3": self.r3,
            "certified": self.certified,
            "truncation": [g.to_string() for g in self.truncation],
            "saturated": self.saturated,
            "d_regular": self.d_regular,
            "scheme_dim": self.dimension,
            "degree": self.degree,
            "common_factor": self.common_factor.to_string() if self.common_factor is not None else None,
            "injective": self.injective,
            "wlp": self.wlp,
            "monitors": dict(sorted(self.monitors.items())),
            "seeds": dict(sorted(self.seeds.items())),
        }


def _require(cond: bool, message: str):
    if not cond:
        raise TheoremViolation(message)


def truncate_ideal(I: Ideal, d: int) -> Ideal:
    """<(I)_{<=d}>; the zero ideal (with a warning) when d is below the initial degree."""
    a = I.alpha_or_none()
    if a is None or d < a:
        warnings.warn(f"d={d} is below the initial degree; the truncation is zero", stacklevel=2)
        return Ideal.zero(I.ring)
    T = I.truncate(d)
    T.label = f"{I.label}<={d}" if I.label else f"<={d}"
    return T


@dataclass
class _Truncation:
    ideal: Ideal
    gin: GinResult
    saturated: bool
    regularity: int
    dimension: int
    degree: int


def _study_truncation(I: Ideal, d: int, trials: int, seed: int) -> _Truncation:
    T = truncate_ideal(I, d)
    G = gin(T, trials=trials, seed=seed)
    hs = T.hilbert_series()
    return _Truncation(T, G, is_saturated_via_gin(G), G.ideal.max_generator_degree(), hs.dimension - 1, hs.degree)


def _delta_row(I: Ideal, t_max: int, k: int = 1) -> list:
    return differences(I.hilbert_series().values(t_max), k)


# ---------------------------------------------------------------------------
# monitors and simple checks


def decreasing_equality_check(G: MonomialIdeal, delta: list, r2: int, t_max: int) -> list:
    """Degrees r2 < t <= t_max where [dH(t) = dH(t+1)] and [no Gin generator in t+1] disagree."""
    bad = []
    for t in range(r2 + 1, min(t_max, len(delta) - 2) + 1):
        equal = delta[t] == delta[t + 1]
        quiet = not G.generators_in_degree(t + 1)
        if equal != quiet:
            bad.append(t)
    return bad


def strict_decrease_monitor(values, d: int) -> bool:
    """Does dH keep strictly decreasing after the flat step at d, d+1 until it reaches zero?

    ``values`` is a first-difference row (or a HilbertTable).  The
    precondition is dH(d) = dH(d+1) > dH(d+2) (or a zero tail); the answer is only a report.
    """
    if hasattr(values, "delta"):
        values = values.delta(1)
    values = list(values)
    if d + 2 >= len(values):
        raise PreconditionError("the row is too short")
    if values[d] != values[d + 1] or (values[d + 2] >= values[d + 1] and values[d + 1] != 0):
        raise PreconditionError(f"need dH({d}) = dH({d + 1}) > dH({d + 2})")
    t = d + 1
    while t + 1 < len(values) and values[t] > 0:
        if values[t] <= values[t + 1]:
            return False
        t += 1
    return True


def cm_check(I) -> dict:
    """Arithmetically Cohen-Macaulay test: D(Gin) = M(Gin)."""
    G = _monomial_gin(I)
    if G.is_zero():
        return {"cm": True, "D": None, "M": None}
    return {"cm": G.D == G.M, "D": G.D, "M": G.M}


def _monomial_gin(I) -> MonomialIdeal:
    if isinstance(I, MonomialIdeal):
        if not I.is_strongly_stable():
            raise ValueError("monomial input must be strongly stable")
        return I
    if isinstance(I, GinResult):
        return I.ideal
    return gin(I).ideal


def cohen1_bound_check(I) -> dict:
    """reg <= deg - C(alpha - 1 + e, alpha - 1) + alpha for ACM schemes, and the classical deg - e + 1."""
    G = _monomial_gin(I)
    cm = cm_check(G)
    if G.is_zero() or not cm["cm"]:
        raise PreconditionError("the bound needs a Cohen-Macaulay quotient")
    hs = G.hilbert_series
    e = G.D
    a = G.alpha()
    deg = hs.degree
    bound = deg - binom(a - 1 + e, a - 1) + a
    classical = deg - e + 1
    reg = G.max_generator_degree()
    return {
        "degree": deg,
        "codim": e,
        "alpha": a,
        "bound": bound,
        "classical_bound": classical,
        "reg": reg,
        "satisfied": reg <= bound,
        "classical_satisfied": reg <= classical,
    }


def common_factor_P3(I, d: int | None = None) -> Polynomial | None:
    """Common factor of the degree-d component (or of a list of forms); None when it is constant."""
    basis = list(I) if d is None else I.component_basis(d)
    basis = [f for f in basis if not f.is_zero()]
    if not basis:
        raise ValueError("the component is empty")
    g = basis[0].monic()
    for f in basis[1:]:
        if g.degree() == 0:
            break
        g = poly_gcd(g, f)
    return None if g.degree() == 0 else g


def upp_wlp_monitor(I: Ideal, r2: int) -> dict:
    """For points with UPP and WLP in P^3: d2H(d) > d2H(d+1) for d_2 <= d < r2."""
    gens = _minimal_generator_degrees(I)
    if len(gens) < 2:
        return {"d2": None, "window": [], "strict": True}
    d2 = gens[1]
    row = _delta_row(I, r2 + 2, 2)
    window = list(range(d2, r2))
    holds = all(row[t] > row[t + 1] for t in window)
    return {"d2": d2, "window": window, "strict": holds}


def _minimal_generator_degrees(I: Ideal) -> list:
    """Degrees of a minimal generating set, by ranks of I_t modulo R_1 I_{t-1}."""
    from .ideals import _span_rank

    gb = I.groebner()
    top = gb.max_degree()
    out = []
    for t in range(1, top + 1):
        here = len(I.component_basis(t))
        if not here:
            continue
        below = I.component_basis(t - 1)
        rows = [f * x for f in below for x in I.ring.gens()]
        out += [t] * (here - _span_rank(I.ring, rows, t))
    return out


# ---------------------------------------------------------------------------
# first differences


def _reduction_profiles(I: Ideal, G: GinResult, seed: int, trials: int, which) -> dict:
    return {s: reduction_number(I, s, trials=trials, seed=seed, gin_result=G) for s in which}


def first_difference_pipeline(I: Ideal, d: int | None = None, trials: int = DEFAULT_TRIALS, seed: int = 0,
                              strict: bool = True) -> GrowthReport:
    """Flat first difference above r_2: the truncation is a saturated d-regular curve ideal of degree s.

    With ``d=None`` the least qualifying degree is searched for.  When the
    reduction number and the Gin are certified, every conclusion is
    asserted (``strict``) and a failure raises TheoremViolation.
    """
    n = I.ring.nvars
    report = GrowthReport(I.label, d, seeds={"seed": seed, "trials": trials})
    if n < 3:
        raise PreconditionError("need at least three variables")
    hs = I.hilbert_series()
    if hs.dimension > 2:
        raise PreconditionError("need a scheme of dimension at most one")
    G = gin(I, trials=trials, seed=seed)
    if not is_saturated_via_gin(G):
        report.verdict, report.reason = "refused", "input ideal is not saturated"
        return report
    prof: ReductionProfile = reduction_number(I, 2, trials=trials, seed=seed, gin_result=G)
    r2 = prof.value
    report.r2 = r2
    if r2 is None:
        report.verdict, report.reason = "refused", "r2 is undefined"
        return report
    reg = G.ideal.max_generator_degree()
    t_max = max(reg, r2, d or 0) + 3
    delta = _delta_row(I, t_max)
    report.monitors["delta1"] = delta

    # non-increasing above r2 and the equality criterion
    certified = prof.certified and G.generic
    report.certified = certified
    noninc = all(delta[t] >= delta[t + 1] for t in range(r2, t_max))
    eq_bad = decreasing_equality_check(G.ideal, delta, r2, t_max - 2)
    report.monitors["nonincreasing_above_r2"] = noninc
    report.monitors["equality_criterion_mismatches"] = eq_bad
    if strict and certified:
        _require(noninc, "first difference increases above r2")
        _require(not eq_bad, f"equality criterion fails in degrees {eq_bad}")

    if d is None:
        cands = [t for t in range(r2 + 1, t_max - 1) if delta[t] == delta[t + 1] != 0]
        if not cands:
            report.reason = "no degree above r2 with a flat nonzero first difference"
            return report
        d = cands[0]
        report.d = d
    elif d <= r2:
        report.verdict, report.reason = "refused", f"d={d} is not above r2={r2}"
        return report
    elif not delta[d] == delta[d + 1] != 0:
        report.reason = f"dH({d}) = {delta[d]}, dH({d + 1}) = {delta[d + 1]}: not flat and nonzero"
        return report

    s = delta[d]
    report.s = s
    tr = _study_truncation(I, d, trials, seed)
    report.truncation = tr.ideal.gens
    report.saturated = tr.saturated
    report.d_regular = tr.regularity <= d
    report.dimension = tr.dimension
    report.degree = tr.degree
    report.verdict = "fired"
    if d + 2 < len(delta) and delta[d + 2] < delta[d + 1]:
        report.monitors["strict_decrease"] = strict_decrease_monitor(delta, d)
    if strict and certified:
        _require(tr.saturated, f"truncation at {d} is not saturated")
        _require(tr.regularity <= d, f"truncation at {d} has regularity {tr.regularity}")
        _require(tr.dimension == 1, f"truncation defines a scheme of dimension {tr.dimension}")
        _require(tr.degree == s, f"truncation has degree {tr.degree}, expected {s}")
    return report


def firstCH_regularity_check(I: Ideal, d: int, trials: int = DEFAULT_TRIALS, seed: int = 0) -> dict:
    """A curve ideal with d > r_2 and the vanishing hypothesis at d - 1 is d-regular.

    The vanishing hypothesis is replaced by the computable condition
    H(R/I, d - 1) = P(d - 1); the report flags the substitution.
    """
    hs = I.hilbert_series()
    if hs.dimension != 2:
        raise PreconditionError("need a curve (dim R/I = 2)")
    G = gin(I, trials=trials, seed=seed)
    if not is_saturated_via_gin(G):
        raise PreconditionError("need a saturated ideal")
    r2 = reduction_number(I, 2, trials=trials, seed=seed, gin_result=G).value
    if r2 is None or d <= r2:
        raise PreconditionError(f"need d > r2 = {r2}")
    surrogate = hs.value(d - 1) == hs.hilbert_polynomial_value(d - 1)
    reg = G.ideal.max_generator_degree()
    if surrogate and G.generic:
        _require(reg <= d, f"regularity {reg} exceeds {d}")
    return {
        "d": d,
        "r2": r2,
        "reg": reg,
        "surrogate_holds": surrogate,
        "d_regular": reg <= d,
        "note": "vanishing hypothesis replaced by H(d-1) = P(d-1)",
    }


# ---------------------------------------------------------------------------
# second differences


def second_difference_pipeline(I: Ideal, d: int, trials: int = DEFAULT_TRIALS, seed: int = 0,
                               strict: bool = True, with_wlp: bool = True) -> GrowthReport:
    """Flat H(R/(I + L1 + L2)) strictly between r_3 and r_2.

    Reports the truncation's saturation and regularity, the injectivity of
    x L2 : (R/(I + L1))_d -> (R/(I + L1))_{d+1}, the common factor in P^3 and,
    for points, the Weak Lefschetz branch.
    """
    n = I.ring.nvars
    if n < 4:
        raise PreconditionError("need at least four variables")
    hs = I.hilbert_series()
    if hs.dimension > 2:
        raise PreconditionError("need a scheme of dimension at most one")
    G = gin(I, trials=trials, seed=seed)
    if not is_saturated_via_gin(G):
        raise PreconditionError("input ideal is not saturated")
    profs = _reduction_profiles(I, G, seed, trials, (2, 3))
    r2, r3 = profs[2].value, profs[3].value
    if r2 is None or r3 is None or not r2 > d > r3:
        raise PreconditionError(f"need r2 > d > r3 (r2={r2}, r3={r3}, d={d})")
    cut2 = restrict_general(I, 2, seed + 1).hilbert_series()
    h2 = cut2.values(d + 1)
    if h2[d] != h2[d + 1]:
        raise PreconditionError(f"H(R/(I+L1+L2)) is {h2[d]}, {h2[d + 1]} in degrees {d}, {d + 1}")
    s = h2[d]
    report = GrowthReport(I.label, d, s, r2, r3, seeds={"seed": seed, "trials": trials})
    report.certified = certified = all(p.certified for p in profs.values()) and G.generic
    report.monitors["h_cut2"] = h2

    cut1 = restrict_general(I, 1, seed + 2)
    L2 = cut1.ring.random_linear_form(np.random.default_rng(seed + 3))
    _, rank, dim_d, _ = multiplication_ranks(cut1, L2, d)[d]
    report.injective = rank == dim_d

    tr = _study_truncation(I, d, trials, seed)
    report.truncation = tr.ideal.gens
    report.saturated = tr.saturated
    report.d_regular = tr.regularity <= d
    report.dimension = tr.dimension
    report.degree = tr.degree
    report.verdict = "fired"
    if strict and certified:
        _require(report.injective == report.d_regular,
                 f"injectivity {report.injective} but d-regularity {report.d_regular}")
        _require(tr.dimension == 2, f"truncation defines a scheme of dimension {tr.dimension}")
        _require(tr.degree == s, f"truncation has degree {tr.degree}, expected {s}")
        if report.injective:
            _require(tr.saturated, "injective but the truncation is not saturated")

    if n == 4:
        F = common_factor_P3(I, d)
        report.common_factor = F
        if strict and certified:
            _require(F is not None and F.degree() == s, f"common factor of degree {F.degree() if F else 0}, expected {s}")

    if with_wlp and hs.dimension <= 1:
        w = wlp_test(I, seed=seed)
        report.wlp = w.holds
        if w.holds and strict and certified:
            delta2 = _delta_row(I, len(w.h_cut2) - 1, 2)
            _require(all(max(delta2[t], 0) == h for t, h in enumerate(w.h_cut2)),
                     "H(R/(I+L1+L2)) differs from the positive part of the second difference")
            _require(tr.saturated and tr.regularity <= d, "WLP holds but the truncation is not saturated and d-regular")
    return report


__all__ = [
    "GrowthReport",
    "PreconditionError",
    "TheoremViolation",
    "cm_check",
    "cohen1_bound_check",
    "common_factor_P3",
    "decreasing_equality_check",
    "first_difference_pipeline",
    "firstCH_regularity_check",
    "second_difference_pipeline",
    "strict_decrease_monitor",
    "truncate_ideal",
    "upp_wlp_monitor",
]
