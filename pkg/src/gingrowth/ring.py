"""Monomials, monomial orders, sparse polynomials and linear coordinate changes.

Variables are indexed from 0 in code and from 1 in printed output, with
``x1`` the largest variable.  Monomials are plain exponent tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations_with_replacement
from operator import add, sub

import numpy as np

from .field import DEFAULT_PRIME, Field, FieldElement, PrimeField, RationalField

Monomial = tuple  # tuple[int, ...]


# ---------------------------------------------------------------------------
# monomial helpers


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(add, a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(map(sub, a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(max, a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def support(m: Monomial) -> list[int]:
    """1-based indices of the variables occurring in m."""
    return [i + 1 for i, e in enumerate(m) if e]


def mono_max(m: Monomial) -> int:
    """max(x^K): largest 1-based index j with k_j > 0."""
    for i in range(len(m) - 1, -1, -1):
        if m[i]:
            return i + 1
    raise ValueError("max of the constant monomial is undefined")


def mono_min(m: Monomial) -> int:
    """min(x^K): smallest 1-based index j with k_j > 0."""
    for i, e in enumerate(m):
        if e:
            return i + 1
    raise ValueError("min of the constant monomial is undefined")


def unit_vector(n: int, i: int, power: int = 1) -> Monomial:
    return tuple(power if j == i else 0 for j in range(n))


@lru_cache(maxsize=None)
def monomials_of_degree(n: int, d: int) -> tuple:
    """All exponent vectors of total degree d in n variables (unsorted)."""
    if d < 0:
        return ()
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return tuple(out)


def format_monomial(m: Monomial, names) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


# ---------------------------------------------------------------------------
# monomial orders


@dataclass(frozen=True)
class MonomialOrder:
    """``degrevlex``, ``lex`` or ``elim`` (block order, first ``block`` variables eliminated).

    The elimination order compares the first block by degrevlex, then the
    rest by degrevlex, so any monomial involving the first block beats
    every monomial in the remaining variables.
    """

    kind: str = "degrevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.block < 1:
            raise ValueError("elimination order needs block >= 1")

    @cached_property
    def key(self):
        """Sort key: larger key means larger monomial."""
        if self.kind == "degrevlex":
            return _degrevlex_key
        if self.kind == "lex":
            return tuple
        b = self.block

        def elim_key(m):
            return _degrevlex_key(m[:b]) + _degrevlex_key(m[b:])

        return elim_key

    @property
    def is_graded(self) -> bool:
        return self.kind == "degrevlex"

    def __str__(self):
        return f"elim({self.block})" if self.kind == "elim" else self.kind


def _degrevlex_key(m):
    return (sum(m),) + tuple(-e for e in reversed(m))


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def elimination_order(block: int) -> MonomialOrder:
    return MonomialOrder("elim", block)


def compare(a: Monomial, b: Monomial, order: MonomialOrder = DEGREVLEX) -> int:
    """Return 1, 0 or -1 as a is greater than, equal to or less than b."""
    if len(a) != len(b):
        raise ValueError("monomials live in rings with different variable counts")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


# ---------------------------------------------------------------------------
# rings


@dataclass(frozen=True)
class Ring:
    """K[x1..xn]; ``names`` are the printed variable names in order."""

    nvars: int
    field: Field
    names: tuple

    def __post_init__(self):
        if len(self.names) != self.nvars:
            raise ValueError("need one name per variable")
        if len(set(self.names)) != self.nvars:
            raise ValueError("variable names must be distinct")

    @classmethod
    def make(cls, names_or_n=4, field=None) -> Ring:
        if field is None:
            field = PrimeField(DEFAULT_PRIME)
        if isinstance(names_or_n, int):
            names = tuple(f"x{i + 1}" for i in range(names_or_n))
        elif isinstance(names_or_n, str):
            names = tuple(s.strip() for s in names_or_n.split(","))
        else:
            names = tuple(names_or_n)
        return cls(len(names), field, names)

    def gen(self, i: int) -> Polynomial:
        """The variable with 0-based index i."""
        return Polynomial(self, {unit_vector(self.nvars, i): self.field.one})

    def gens(self) -> list[Polynomial]:
        return [self.gen(i) for i in range(self.nvars)]

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c) -> Polynomial:
        c = self.field.coerce(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c != 0 else {})

    def monomial(self, m: Monomial, c=1) -> Polynomial:
        if len(m) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        c = self.field.coerce(c)
        return Polynomial(self, {tuple(m): c} if c != 0 else {})

    def drop_last(self, k: int = 1) -> Ring:
        return Ring(self.nvars - k, self.field, self.names[: self.nvars - k])

    def with_field(self, field) -> Ring:
        return Ring(self.nvars, field, self.names)

    def random_linear_form(self, rng) -> Polynomial:
        F = self.field
        terms = {}
        for i in range(self.nvars):
            c = F.random(rng)
            if c != 0:
                terms[unit_vector(self.nvars, i)] = c
        return Polynomial(self, terms)

    def random_form(self, degree: int, rng) -> Polynomial:
        F = self.field
        terms = {}
        for m in monomials_of_degree(self.nvars, degree):
            c = F.random(rng)
            if c != 0:
                terms[m] = c
        return Polynomial(self, terms)

    def __str__(self):
        return f"{self.field.name}[{','.join(self.names)}]"


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Sparse polynomial: a dict {exponent tuple: nonzero raw coefficient}.

    Treat instances as immutable.  Term order is not stored; use
    :meth:`terms` / :meth:`leading_term` with an explicit order.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs: dict):
        self.ring = ring
        self.coeffs = coeffs

    @classmethod
    def from_terms(cls, ring: Ring, terms) -> Polynomial:
        """Build from (monomial, coefficient) pairs, combining duplicates."""
        F = ring.field
        acc: dict = {}
        for m, c in terms:
            m = tuple(m)
            acc[m] = F.add(acc.get(m, F.zero), F.coerce(c))
        return cls(ring, {m: c for m, c in acc.items() if c != 0})

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def monomials(self) -> list:
        return list(self.coeffs)

    def terms(self, order: MonomialOrder = DEGREVLEX) -> list:
        """(monomial, coefficient) pairs, strictly descending in ``order``."""
        key = order.key
        return sorted(self.coeffs.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self, order: MonomialOrder = DEGREVLEX):
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading term")
        key = order.key
        m = max(self.coeffs, key=key)
        return m, self.coeffs[m]

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX) -> Monomial:
        return self.leading_term(order)[0]

    def degree(self) -> int:
        if not self.coeffs:
            return -1
        return max(sum(m) for m in self.coeffs)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.coeffs}
        return len(degs) <= 1

    def homogeneous_components(self) -> dict:
        out: dict = {}
        for m, c in self.coeffs.items():
            out.setdefault(sum(m), {})[m] = c
        return {d: Polynomial(self.ring, t) for d, t in sorted(out.items())}

    def variables(self) -> set:
        """0-based indices of the variables that occur."""
        return {i for m in self.coeffs for i, e in enumerate(m) if e}

    def coefficient(self, m: Monomial):
        return self.coeffs.get(tuple(m), self.ring.field.zero)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: Polynomial):
        if other.ring != self.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return self.ring.constant(self.ring.field.coerce(other))

    def __add__(self, other):
        other = self._lift(other)
        F = self.ring.field
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            v = F.add(out.get(m, F.zero), c)
            if v != 0:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {m: F.neg(c) for m, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> Polynomial:
        F = self.ring.field
        c = F.coerce(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, {m: F.mul(v, c) for m, v in self.coeffs.items()})

    def mul_term(self, mono: Monomial, c) -> Polynomial:
        F = self.ring.field
        if c == 0:
            return self.ring.zero()
        return Polynomial(
            self.ring, {mono_mul(m, mono): F.mul(v, c) for m, v in self.coeffs.items()}
        )

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        F = self.ring.field
        if len(other.coeffs) > len(self.coeffs):
            a, b = other.coeffs, self.coeffs
        else:
            a, b = self.coeffs, other.coeffs
        out: dict = {}
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(map(add, ma, mb))
                out[m] = F.add(out.get(m, F.zero), F.mul(ca, cb))
        return Polynomial(self.ring, {m: c for m, c in out.items() if c != 0})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = self.ring.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monic(self, order: MonomialOrder = DEGREVLEX) -> Polynomial:
        if not self.coeffs:
            return self
        _, c = self.leading_term(order)
        return self.scale(self.ring.field.inv(c))

    def evaluate(self, point):
        """Evaluate at a point given as a sequence of raw field values."""
        F = self.ring.field
        total = F.zero
        for m, c in self.coeffs.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = F.mul(v, _field_pow(F, x, e))
            total = F.add(total, v)
        return total

    def substitute(self, images: dict) -> Polynomial:
        """Replace variable i by ``images[i]`` (polynomials in the target ring).

        Variables not listed are mapped to the same-index variable of the
        target ring, which must then be at least as large.
        """
        target = next(iter(images.values())).ring if images else self.ring
        F = target.field
        cache: dict = {}

        def var_power(i, e):
            key = (i, e)
            if key not in cache:
                base = images[i] if i in images else target.gen(i)
                cache[key] = base**e
            return cache[key]

        out = target.zero()
        for m, c in self.coeffs.items():
            term = target.constant(F.coerce(c) if F == self.ring.field else c)
            for i, e in enumerate(m):
                if e:
                    term = term * var_power(i, e)
            out = out + term
        return out

    def exact_divide(self, divisor: Polynomial, order: MonomialOrder = DEGREVLEX) -> Polynomial:
        """Quotient q with self == q * divisor; raises if the division is not exact."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        F = self.ring.field
        lm, lc = divisor.leading_term(order)
        inv = F.inv(lc)
        rem = dict(self.coeffs)
        quot: dict = {}
        key = order.key
        while rem:
            m = max(rem, key=key)
            if not divides(lm, m):
                raise ValueError("division is not exact")
            q = mono_div(m, lm)
            c = F.mul(rem[m], inv)
            quot[q] = c
            for dm, dc in divisor.coeffs.items():
                t = mono_mul(q, dm)
                v = F.sub(rem.get(t, F.zero), F.mul(c, dc))
                if v != 0:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return Polynomial(self.ring, quot)

    # -- comparison / printing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.coeffs == other.coeffs
        if isinstance(other, (int, FieldElement)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.nvars, frozenset(self.coeffs.items())))

    def to_string(self, order: MonomialOrder = DEGREVLEX) -> str:
        if not self.coeffs:
            return "0"
        F = self.ring.field
        out = []
        for m, c in self.terms(order):
            s = F.to_str(c)
            neg = s.startswith("-")
            if neg:
                s = s[1:]
            mono = format_monomial(m, self.ring.names)
            if mono == "1":
                body = s
            elif s == "1":
                body = mono
            else:
                body = f"{s}*{mono}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.to_string()!r})"


def _field_pow(F, x, e):
    if isinstance(F, PrimeField):
        return pow(x, e, F.p)
    return x**e


def leading_term(f: Polynomial, order: MonomialOrder = DEGREVLEX):
    return f.leading_term(order)


# ---------------------------------------------------------------------------
# linear changes of coordinates


def _solve_matrix_inverse(field: Field, rows):
    """Gauss-Jordan inverse over ``field``; returns None when singular."""
    n = len(rows)
    F = field
    a = [list(r) + [F.one if i == j else F.zero for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = F.inv(a[col][col])
        a[col] = [F.mul(v, inv) for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[r], a[col])]
    return tuple(tuple(r[n:]) for r in a)


class LinearChange:
    """An invertible n x n matrix g acting by x_i -> sum_j g[i][j] x_j."""

    __slots__ = ("ring", "matrix", "seed", "_inverse")

    def __init__(self, ring: Ring, matrix, seed=None):
        F = ring.field
        rows = tuple(tuple(F.coerce(v) for v in row) for row in matrix)
        if len(rows) != ring.nvars or any(len(r) != ring.nvars for r in rows):
            raise ValueError("matrix must be n x n")
        inverse = _solve_matrix_inverse(F, rows)
        if inverse is None:
            raise ValueError("singular matrix: not a change of coordinates")
        self.ring = ring
        self.matrix = rows
        self.seed = seed
        self._inverse = inverse

    @classmethod
    def identity(cls, ring: Ring) -> LinearChange:
        n = ring.nvars
        return cls(ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def permutation(cls, ring: Ring, perm) -> LinearChange:
        """x_i -> x_{perm[i]}."""
        n = ring.nvars
        return cls(ring, [[1 if perm[i] == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def random(cls, ring: Ring, seed: int) -> LinearChange:
        """Dense uniformly random matrix; singular draws are redrawn."""
        rng = np.random.default_rng(seed)
        F = ring.field
        while True:
            rows = [[F.random(rng) for _ in range(ring.nvars)] for _ in range(ring.nvars)]
            if _solve_matrix_inverse(F, rows) is not None:
                return cls(ring, rows, seed=seed)

    def inverse(self) -> LinearChange:
        return LinearChange(self.ring, self._inverse, seed=None)

    def compose(self, other: LinearChange) -> LinearChange:
        """The change whose action is ``self`` then ``other``: f -> other(self(f))."""
        # self(f)(x) = f(g x); other(self(f))(x) = f(g h x)
        F = self.ring.field
        n = self.ring.nvars
        prod = [
            [
                _dot(F, [self.matrix[i][k] for k in range(n)], [other.matrix[k][j] for k in range(n)])
                for j in range(n)
            ]
            for i in range(n)
        ]
        return LinearChange(self.ring, prod)

    def image_of_variable(self, i: int) -> Polynomial:
        n = self.ring.nvars
        return Polynomial(
            self.ring,
            {unit_vector(n, j): c for j, c in enumerate(self.matrix[i]) if c != 0},
        )

    def apply(self, f: Polynomial) -> Polynomial:
        return apply_change(f, self)

    def pull_back_point(self, point):
        """G^{-1} P: the point where f(g x) takes the value f has at P.

        For a point set P, ``apply_change`` maps the ideal of P to the
        ideal of {G^{-1} P}.
        """
        F = self.ring.field
        return tuple(_dot(F, row, point) for row in self._inverse)


def _dot(F, a, b):
    total = F.zero
    for x, y in zip(a, b):
        total = F.add(total, F.mul(x, y))
    return total


def apply_change(f: Polynomial, g: LinearChange) -> Polynomial:
    """f(x1..xn) -> f(g(x1)..g(xn))."""
    if f.ring != g.ring:
        raise ValueError("ring mismatch")
    if isinstance(f.ring.field, PrimeField) and f.ring.field.p < 2**31:
        from ._dense import apply_change_dense

        return apply_change_dense(f, g)
    images = {i: g.image_of_variable(i) for i in range(f.ring.nvars)}
    return f.substitute(images)


__all__ = [
    "DEGREVLEX",
    "LEX",
    "LinearChange",
    "Monomial",
    "MonomialOrder",
    "Polynomial",
    "PrimeField",
    "RationalField",
    "Ring",
    "apply_change",
    "compare",
    "elimination_order",
    "leading_term",
]
