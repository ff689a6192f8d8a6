"""Generic initial ideals by random changes of coordinates.

Each trial draws a dense random invertible matrix g (seed ``seed + k``),
computes the initial ideal of g(I) and compares the trials.  Agreement of
all trials is the genericity certificate; the result is also checked to be
strongly stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groebner import buchberger
from .ideals import Ideal, restrict_general
from .monomial import MonomialIdeal
from .ring import DEGREVLEX, LinearChange, MonomialOrder

DEFAULT_TRIALS = 3


@dataclass
class GinResult:
    ideal: MonomialIdeal
    order: MonomialOrder
    trials: int
    seeds: list
    agreed: bool
    borel_verified: bool
    degree_bound: int | None = None
    per_trial: list = field(default_factory=list)

    @property
    def generic(self) -> bool:
        return self.agreed and self.borel_verified

    def as_dict(self, names=None) -> dict:
        from .ring import format_monomial

        names = names or [f"x{i + 1}" for i in range(self.ideal.nvars)]
        return {
            "generators": [format_monomial(g, names) for g in self.ideal.gens],
            "trials": self.trials,
            "agreed": self.agreed,
        }


def _initial_after_change(I: Ideal, g: LinearChange, order: MonomialOrder, degree_bound):
    points = getattr(I, "points", None)
    if points is not None and degree_bound is None:
        from .points import buchberger_moller

        return buchberger_moller(points.pull_back(g), order).initial_ideal()
    moved = I.apply(g)
    if moved.is_zero():
        return MonomialIdeal(I.ring.nvars, [])
    return buchberger(moved.gens, order, degree_bound).initial_ideal()


def gin(I: Ideal, order: MonomialOrder = DEGREVLEX, trials: int = DEFAULT_TRIALS, seed: int = 0,
        degree_bound: int | None = None) -> GinResult:
    """Generic initial ideal of a homogeneous ideal.

    With ``degree_bound`` only generators up to that degree are computed.
    Disagreement between trials is reported through ``agreed``; the
    returned ideal is the most common outcome (ties: the first trial).
    """
    if trials < 2:
        raise ValueError("need at least two trials for the agreement check")
    if not I.is_homogeneous():
        raise ValueError("Gin needs a homogeneous ideal")
    seeds = [seed + k for k in range(trials)]
    results = []
    for s in seeds:
        g = LinearChange.random(I.ring, s)
        results.append(_initial_after_change(I, g, order, degree_bound))
    counts: dict = {}
    for r in results:
        counts[r] = counts.get(r, 0) + 1
    best = max(results, key=lambda r: counts[r])
    agreed = counts[best] == len(results)
    return GinResult(best, order, trials, seeds, agreed, best.is_strongly_stable(), degree_bound, results)


def gin_hyperplane_restriction(G: GinResult) -> MonomialIdeal:
    """Gin of a general hyperplane section: x_n -> 0."""
    return G.ideal.substitute_last_zero()


def gin_saturation(G: GinResult) -> MonomialIdeal:
    """Gin of the saturation: x_n -> 1."""
    return G.ideal.substitute_var_one(G.ideal.nvars)


def gin_of_section(I: Ideal, s: int = 1, seed: int = 0, trials: int = DEFAULT_TRIALS) -> GinResult:
    """Gin of (I + (L_1..L_s)) / (L_1..L_s) computed directly (spot check for restriction)."""
    J = restrict_general(I, s, seed + 7919)
    return gin(J, trials=trials, seed=seed)


def is_saturated_via_gin(G: GinResult) -> bool:
    return gin_saturation(G) == G.ideal


__all__ = [
    "DEFAULT_TRIALS",
    "GinResult",
    "gin",
    "gin_hyperplane_restriction",
    "gin_of_section",
    "gin_saturation",
    "is_saturated_via_gin",
]
