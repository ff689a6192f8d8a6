"""Exact coefficient fields.

Two modes are supported: prime fields F_p (default p = 32003) and the
rationals.  Polynomials store *raw* coefficient values (``int`` in
``[0, p)`` or ``Fraction``); the field object does the arithmetic.
:class:`FieldElement` is a thin wrapper for user-facing code.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

DEFAULT_PRIME = 32003


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The prime field F_p; elements are ints in ``[0, p)``."""

    __slots__ = ("p",)
    zero = 0
    one = 1

    def __init__(self, p: int = DEFAULT_PRIME):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def name(self) -> str:
        return f"F_{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __call__(self, value) -> FieldElement:
        return FieldElement(self, self.coerce(value))

    def coerce(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value.value
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def random(self, rng):
        return int(rng.integers(0, self.p))

    def random_nonzero(self, rng):
        return int(rng.integers(1, self.p))

    def to_str(self, a) -> str:
        # symmetric representative reads better in reports
        return str(a - self.p if a > self.p // 2 else a)


class RationalField:
    """The rationals; elements are ``Fraction`` (always in lowest terms)."""

    __slots__ = ()
    zero = Fraction(0)
    one = Fraction(1)
    characteristic = 0
    name = "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "RationalField()"

    def __call__(self, value) -> FieldElement:
        return FieldElement(self, self.coerce(value))

    def coerce(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value.value
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def random(self, rng, bound: int = 100):
        return Fraction(int(rng.integers(-bound, bound + 1)))

    def random_nonzero(self, rng, bound: int = 100):
        while True:
            v = self.random(rng, bound)
            if v:
                return v

    def to_str(self, a) -> str:
        return str(a)


Field = PrimeField | RationalField


def field_from_spec(spec) -> Field:
    """``0``/``'Q'`` -> rationals, a prime (int or str) -> F_p."""
    if isinstance(spec, (PrimeField, RationalField)):
        return spec
    if isinstance(spec, str):
        if spec.strip().upper() in ("Q", "QQ", "0"):
            return RationalField()
        spec = int(spec)
    if spec == 0:
        return RationalField()
    return PrimeField(int(spec))


@dataclass(frozen=True)
class FieldElement:
    field: Field
    value: object

    def _other(self, other):
        return self.field.coerce(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        for _ in range(k):
            result = self.field.mul(result, self.value)
        return FieldElement(self.field, result)

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except (TypeError, ValueError, ZeroDivisionError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"{self.field.to_str(self.value)} in {self.field.name}"
