import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gingrowth import DEGREVLEX, LEX, LinearChange, Polynomial, PrimeField, RationalField, Ring, elimination_order
from gingrowth.field import field_from_spec
from gingrowth.ring import apply_change, compare, leading_term, mono_mul, monomials_of_degree


def _triples(F, rng, count):
    for _ in range(count):
        yield F.random(rng), F.random(rng), F.random(rng)


@pytest.mark.parametrize("F", [PrimeField(32003), PrimeField(7), RationalField()], ids=str)
def test_field_axioms(F):
    rng = np.random.default_rng(0)
    for a, b, c in _triples(F, rng, 10_000):
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(a, F.neg(a)) == F.zero
        if a != F.zero:
            assert F.mul(a, F.inv(a)) == F.one


def test_canonical_representatives():
    F = PrimeField(32003)
    assert F.coerce(-1) == 32002
    assert F.coerce(32003 * 5 + 3) == 3
    Q = RationalField()
    assert Q.coerce(Fraction(4, -6)) == Fraction(-2, 3)
    assert Q.coerce(Fraction(4, -6)).denominator == 3


def test_field_errors():
    with pytest.raises(ValueError):
        PrimeField(32004)
    with pytest.raises(ZeroDivisionError):
        PrimeField(5).inv(0)
    with pytest.raises(ZeroDivisionError):
        RationalField().inv(Fraction(0))
    assert isinstance(field_from_spec("Q"), RationalField)
    assert field_from_spec(32003) == PrimeField(32003)


def test_field_element_wrapper():
    F = PrimeField(11)
    a = F(3)
    assert (a * a.inverse()).value == 1
    assert (a / 3).value == 1
    assert (a - 5).value == 9


# ---------------------------------------------------------------------------
# orders


def test_compare_examples():
    assert compare((0, 0, 3, 0), (1, 0, 0, 2), DEGREVLEX) == 1
    assert compare((1, 2, 0), (1, 2, 0), LEX) == 0
    assert compare((1, 0, 1), (0, 2, 0), LEX) == 1
    with pytest.raises(ValueError):
        compare((1, 0), (1, 0, 0))


def _naive_degrevlex(a, b):
    if sum(a) != sum(b):
        return 1 if sum(a) > sum(b) else -1
    diff = [x - y for x, y in zip(a, b)]
    for v in reversed(diff):
        if v != 0:
            return 1 if v < 0 else -1
    return 0


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_degrevlex_matches_naive(n):
    monos = [m for d in range(7) for m in monomials_of_degree(n, d)]
    if n == 5:
        monos = monos[::3]
    for a, b in itertools.combinations(monos, 2):
        assert compare(a, b) == _naive_degrevlex(a, b)


monomial = st.lists(st.integers(0, 4), min_size=4, max_size=4).map(tuple)
orders = st.sampled_from([DEGREVLEX, LEX, elimination_order(1), elimination_order(2)])


@given(monomial, monomial, monomial, orders)
def test_compare_is_total_multiplicative(a, b, c, order):
    ab, ba = compare(a, b, order), compare(b, a, order)
    assert ab == -ba
    assert (ab == 0) == (a == b)
    if ab > 0:
        assert compare(mono_mul(a, c), mono_mul(b, c), order) == 1
        if compare(b, c, order) > 0:
            assert compare(a, c, order) == 1


def test_elimination_order_block():
    order = elimination_order(2)
    # any monomial touching x1, x2 beats every monomial in x3, x4
    for m in monomials_of_degree(4, 3):
        if m[0] or m[1]:
            for k in monomials_of_degree(2, 5):
                assert compare(m, (0, 0) + k, order) == 1


# ---------------------------------------------------------------------------
# polynomials and linear changes


def test_polynomial_arithmetic(ring4):
    x1, x2, x3, x4 = ring4.gens()
    f = x1 * x3 - 7 * x2**2
    assert (f + (-f)).is_zero()
    assert leading_term(x1 + x2)[0] == (1, 0, 0, 0)
    assert ((x1 + x2) ** 2).to_string() == "x1^2 + 2*x1*x2 + x2^2"
    assert f.scale(2).coefficient((0, 2, 0, 0)) == ring4.field.coerce(-14)


def test_polynomial_invariants(ring4):
    x1, x2, _, _ = ring4.gens()
    f = x1 * x2 + x2 * x1 - 2 * x1 * x2 + x1
    assert f.to_string() == "x1"
    assert all(c != 0 for c in f.coeffs.values())
    terms = (x1**2 + x1 * x2 + x2**2).terms()
    keys = [DEGREVLEX.key(m) for m, _ in terms]
    assert keys == sorted(keys, reverse=True)


def test_ring_mismatch(ring4):
    other = Ring.make(3)
    with pytest.raises(ValueError):
        ring4.gen(0) + other.gen(0)


def test_apply_change_examples():
    R2 = Ring.make(2)
    x1, x2 = R2.gens()
    assert apply_change(x1**2, LinearChange.identity(R2)) == x1**2
    assert apply_change(x1**2, LinearChange.permutation(R2, [1, 0])) == x2**2
    R = Ring.make(4)
    g = LinearChange.random(R, 42)
    y1, y2 = R.gen(0), R.gen(1)
    image = apply_change(y1 * y2, g)
    assert image.is_homogeneous() and image.degree() == 2
    assert len(image.coeffs) == 10
    assert apply_change(image, g.inverse()) == y1 * y2


def test_singular_change_rejected(ring4):
    with pytest.raises(ValueError):
        LinearChange(ring4, [[1, 0, 0, 0]] * 4)


@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_apply_change_automorphism(seed_f, seed_g):
    R = Ring.make(3)
    rng = np.random.default_rng(seed_f)
    f, h = R.random_form(2, rng), R.random_form(1, rng)
    g = LinearChange.random(R, seed_g)
    assert apply_change(apply_change(f, g), g.inverse()) == f
    assert apply_change(f * h, g) == apply_change(f, g) * apply_change(h, g)
    assert apply_change(f + f, g) == apply_change(f, g).scale(2)
    assert apply_change(f, g).degree() == 2


def test_compose_associative(ring4):
    a, b, c = (LinearChange.random(ring4, s) for s in (1, 2, 3))
    f = ring4.gen(0) * ring4.gen(3) + ring4.gen(1) ** 2
    assert a.compose(b).compose(c).apply(f) == a.compose(b.compose(c)).apply(f)
    assert a.compose(b).apply(f) == b.apply(a.apply(f))


def test_rational_ring():
    R = Ring.make(2, RationalField())
    x, y = R.gens()
    f = (x + y).scale(Fraction(1, 3))
    assert f.coefficient((1, 0)) == Fraction(1, 3)
    assert isinstance(f, Polynomial)
