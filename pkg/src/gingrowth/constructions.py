"""Named ideals and a JSON-driven builder for corpus entries.

A construction is a dict with a ``kind`` key:

* ``ideal``: ``text`` in the input grammar
* ``chardin_dcruz``: ``m``, ``n`` (four variables)
* ``random_points``: ``count``, ``seed``
* ``points``: explicit ``coordinates``
* ``points_on_hypersurface``: ``form`` (expression or ``{"random": deg, "seed": s}``), ``count``, ``seed``
* ``complete_intersection``: ``degrees``, ``seed``
* ``union``: ``parts``, a list of constructions whose ideals are intersected

Every kind accepts ``n`` (number of variables, default 4) and ``char``
(default 32003) at the top level.
"""

from __future__ import annotations

import numpy as np

from .field import DEFAULT_PRIME, field_from_spec
from .ideals import Ideal
from .points import (
    PointSet,
    intersect_point_ideals,
    point_ideal,
    points_on_hypersurface,
    random_complete_intersection,
    random_points,
)
from .ring import Polynomial, Ring


def default_ring(n: int = 4, char=DEFAULT_PRIME) -> Ring:
    return Ring.make(n, field_from_spec(char))


def nonacm_curve_ideal(ring: Ring | None = None) -> Ideal:
    """A curve in P^3 whose Gin has D = 2 < M = 3."""
    ring = ring or default_ring()
    x1, x2, x3, x4 = ring.gens()
    gens = [x3**3 - x1 * x4**2, x1**2 * x3**2 - x2**3 * x4, x2**3 * x3 - x1**3 * x4, x2**6 - x1**5 * x3]
    return Ideal(ring, gens, label="nonacm-curve")


def chardin_dcruz_ideal(m: int, n: int, ring: Ring | None = None) -> Ideal:
    """(x^m t - y^m z, z^{n+2} - x t^{n+1}) in K[x, y, z, t]: regularity m + n + 2."""
    ring = ring or default_ring()
    x, y, z, t = ring.gens()
    return Ideal(ring, [x**m * t - y**m * z, z ** (n + 2) - x * t ** (n + 1)], label=f"CD({m},{n})")


def random_form(ring: Ring, degree: int, seed: int) -> Polynomial:
    return ring.random_form(degree, np.random.default_rng(seed))


def quadric_union(variant: str = "ci", ring: Ring | None = None, quadric_seed: int = 5, points_seed: int = 7,
                  z1_seed: int = 3, on_quadric: int = 81) -> dict:
    """Z1 together with points on a general quadric Q.

    ``variant="ci"``: Z1 is a (2,2,2) complete intersection;
    ``variant="general"``: Z1 is 16 general points.
    Returns the pieces and the ideal of the union.
    """
    ring = ring or default_ring()
    Q = random_form(ring, 2, quadric_seed)
    Z2 = point_ideal(points_on_hypersurface(Q, on_quadric, seed=points_seed))
    if variant == "ci":
        Z1 = random_complete_intersection(ring, [2, 2, 2], seed=z1_seed)
    elif variant == "general":
        Z1 = point_ideal(random_points(ring, 16, seed=z1_seed))
    else:
        raise ValueError(f"unknown variant {variant!r}")
    Y = intersect_point_ideals(Z1, Z2)
    Y.label = f"quadric-union-{variant}"
    return {"Q": Q, "Z1": Z1, "Z2": Z2, "Y": Y}


# ---------------------------------------------------------------------------
# JSON builder


def _form(spec, ring: Ring) -> Polynomial:
    if isinstance(spec, dict):
        return random_form(ring, int(spec["random"]), int(spec.get("seed", 0)))
    from .parser import parse_ideal

    names = ", ".join(ring.names)
    char = getattr(ring.field, "p", 0)
    _, polys = parse_ideal(f"ring {names}; char {char}; ideal {spec};")
    if len(polys) != 1:
        raise ValueError("expected a single form")
    return polys[0]


def build(spec: dict, ring: Ring | None = None) -> Ideal:
    """Build the ideal described by a construction dict."""
    if ring is None:
        ring = default_ring(int(spec.get("n", 4)), spec.get("char", DEFAULT_PRIME))
    kind = spec.get("kind")
    if kind == "ideal":
        from .parser import load_ideal

        return load_ideal(spec["text"])
    if kind == "chardin_dcruz":
        return chardin_dcruz_ideal(int(spec["m"]), int(spec["n"]), ring)
    if kind == "nonacm_curve":
        return nonacm_curve_ideal(ring)
    if kind == "random_points":
        return point_ideal(random_points(ring, int(spec["count"]), int(spec.get("seed", 0))))
    if kind == "points":
        return point_ideal(PointSet(ring, tuple(tuple(p) for p in spec["coordinates"]), "points"))
    if kind == "points_on_hypersurface":
        f = _form(spec["form"], ring)
        return point_ideal(points_on_hypersurface(f, int(spec["count"]), int(spec.get("seed", 0))))
    if kind == "complete_intersection":
        return random_complete_intersection(ring, [int(d) for d in spec["degrees"]], int(spec.get("seed", 0)))
    if kind == "quadric_union":
        return quadric_union(spec.get("variant", "ci"), ring)["Y"]
    if kind == "union":
        parts = [build(p, ring) for p in spec["parts"]]
        if not parts:
            raise ValueError("a union needs at least one part")
        out = parts[0]
        for p in parts[1:]:
            out = intersect_point_ideals(out, p)
        return out
    raise ValueError(f"unknown construction kind {kind!r}")


__all__ = [
    "build",
    "chardin_dcruz_ideal",
    "default_ring",
    "nonacm_curve_ideal",
    "quadric_union",
    "random_form",
]
