"""Hilbert series and Hilbert function tables.

A graded quotient R/I with R = K[x1..xn] has Hilbert series
N(t) / (1 - t)^n with an integer polynomial N.  Cancelling the factors of
(1 - t) gives h(t) / (1 - t)^dim, where dim is the Krull dimension of
R/I, h(1) its degree and the coefficients of h its h-vector.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb


def binom(a: int, b: int) -> int:
    """Binomial coefficient that vanishes outside 0 <= b <= a."""
    if b < 0 or a < b or a < 0:
        return 0
    return comb(a, b)


def count_monomials(n: int, t: int) -> int:
    """dim_K R_t for R in n variables."""
    if t < 0:
        return 0
    if n == 0:
        return 1 if t == 0 else 0
    return comb(t + n - 1, n - 1)


def poly_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_trim(out)


def poly_add(a: list, b: list) -> list:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return poly_trim(out)


def poly_trim(a: list) -> list:
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a or [0]


def poly_shift(a: list, k: int) -> list:
    return poly_trim([0] * k + list(a))


def divide_one_minus_t(a: list) -> list:
    """a(t) / (1 - t), assuming a(1) = 0."""
    out = []
    acc = 0
    for c in a[:-1]:
        acc += c
        out.append(acc)
    if acc + a[-1] != 0:
        raise ValueError("not divisible by 1 - t")
    return poly_trim(out) if out else [0]


@dataclass(frozen=True)
class HilbertSeries:
    """Exact Hilbert series numerator(t) / (1 - t)^n of R/I."""

    n: int
    numerator: tuple

    @property
    def reduced(self) -> tuple:
        """(h, dim) with HS = h(t) / (1 - t)^dim and h(1) != 0 (h = 0 for I = R)."""
        h = list(self.numerator)
        d = self.n
        if not any(h):
            return [0], 0
        while d > 0 and sum(h) == 0:
            h = divide_one_minus_t(h)
            d -= 1
        return poly_trim(h), d

    @property
    def dimension(self) -> int:
        h, d = self.reduced
        return d if any(h) else -1

    @property
    def degree(self) -> int:
        h, _ = self.reduced
        return sum(h)

    @property
    def h_vector(self) -> list:
        return list(self.reduced[0])

    def value(self, t: int) -> int:
        if t < 0:
            return 0
        n = self.n
        if n == 0:
            return self.numerator[t] if t < len(self.numerator) else 0
        return sum(c * binom(t - k + n - 1, n - 1) for k, c in enumerate(self.numerator) if c and k <= t)

    def values(self, t_max: int, t_min: int = 0) -> list:
        return [self.value(t) for t in range(t_min, t_max + 1)]

    def polynomial_from(self) -> int:
        """First degree from which the Hilbert function agrees with the Hilbert polynomial."""
        h, d = self.reduced
        if d == 0:
            return len(h)
        return max(0, len(h) - d)

    def hilbert_polynomial_value(self, t: int) -> int:
        h, d = self.reduced
        if d == 0:
            return 0
        # sum_k h_k C(t - k + d - 1, d - 1), read as a polynomial in t
        total = 0
        for k, c in enumerate(h):
            total += c * _poly_binom(t - k + d - 1, d - 1)
        return total

    def __add__(self, other: HilbertSeries) -> HilbertSeries:
        if other.n != self.n:
            raise ValueError("series over different rings")
        return HilbertSeries(self.n, tuple(poly_add(list(self.numerator), list(other.numerator))))

    def __sub__(self, other: HilbertSeries) -> HilbertSeries:
        if other.n != self.n:
            raise ValueError("series over different rings")
        neg = [-c for c in other.numerator]
        return HilbertSeries(self.n, tuple(poly_add(list(self.numerator), neg)))


def _poly_binom(a: int, b: int) -> int:
    """C(a, b) as the polynomial a(a-1)...(a-b+1)/b!, valid for negative a."""
    num = 1
    for i in range(b):
        num *= a - i
    den = 1
    for i in range(2, b + 1):
        den *= i
    return num // den


# ---------------------------------------------------------------------------
# tables


def differences(values: list, k: int = 1) -> list:
    """k-th difference with H(-1) = 0."""
    out = list(values)
    for _ in range(k):
        out = [v - (out[i - 1] if i else 0) for i, v in enumerate(out)]
    return out


def fit_polynomial_behaviour(values: list, max_order: int = 12):
    """Detect (dim, degree) from a raw table of values H(0..T).

    Looks for the smallest k with the k-th difference constant and nonzero
    over the last k + 2 entries (dim = k + 1, degree = that constant), or a
    zero tail (dim 0, degree = sum).  Returns None if nothing stabilises.
    """
    if len(values) >= 2 and values[-1] == 0 and values[-2] == 0:
        return 0, sum(values)
    for k in range(max_order + 1):
        diff = differences(values, k)
        window = k + 2
        if len(diff) < window + k + 1:
            return None
        tail = diff[-window:]
        if len(set(tail)) == 1 and tail[0] != 0:
            return k + 1, tail[0]
    return None


@dataclass
class HilbertTable:
    """H(R/I, t) for t in [t_min, t_max], with differences and invariants.

    ``series`` is attached when the exact Hilbert series is known; then
    dimension, degree and h-vector come from it.  Otherwise they are
    detected from the values and may be ``None`` (unknown).
    """

    n: int
    values: list
    t_min: int = 0
    series: HilbertSeries | None = None
    alpha: int | None = None
    label: str = ""
    extra: dict = field(default_factory=dict)

    @property
    def t_max(self) -> int:
        return self.t_min + len(self.values) - 1

    def value(self, t: int) -> int:
        if self.t_min <= t <= self.t_max:
            return self.values[t - self.t_min]
        if self.series is not None:
            return self.series.value(t)
        if t < 0:
            return 0
        raise IndexError(f"degree {t} outside the table window")

    def __getitem__(self, t: int) -> int:
        return self.value(t)

    def full_values(self) -> list:
        """Values from degree 0 (needed for differences with H(-1) = 0)."""
        return [self.value(t) for t in range(0, self.t_max + 1)]

    def delta(self, k: int = 1) -> list:
        """k-th difference over degrees 0..t_max."""
        return differences(self.full_values(), k)

    def delta_at(self, t: int, k: int = 1) -> int:
        if t < 0:
            return 0
        return differences([self.value(u) for u in range(0, t + 1)], k)[-1]

    @property
    def dimension(self):
        if self.series is not None:
            return self.series.dimension
        fit = fit_polynomial_behaviour(self.full_values())
        return None if fit is None else fit[0]

    @property
    def degree(self):
        if self.series is not None:
            return self.series.degree
        fit = fit_polynomial_behaviour(self.full_values())
        return None if fit is None else fit[1]

    @property
    def h_vector(self):
        if self.series is not None:
            return self.series.h_vector
        return None

    def as_dict(self) -> dict:
        return {
            "from": self.t_min,
            "to": self.t_max,
            "values": list(self.values),
            "delta1": self.delta(1)[self.t_min:],
            "delta2": self.delta(2)[self.t_min:],
        }


def table_from_series(series: HilbertSeries, t_max: int, t_min: int = 0, alpha=None) -> HilbertTable:
    return HilbertTable(series.n, series.values(t_max, t_min), t_min, series, alpha)
