import pytest
from hypothesis import assume, given

from gingrowth import MonomialIdeal, borel_closure, hilbert_table, nonacm_curve_ideal
from gingrowth.ideals import hilbert_function_oracle
from gingrowth.monomial import (
    NotStronglyStable,
    ek_regularity_crosscheck,
    hilbert_function_bruteforce,
    spor_kernel_dimension,
)
from gingrowth.series import differences

from conftest import strongly_stable_ideals

CURVE_GIN = MonomialIdeal(4, [(3, 0, 0, 0), (2, 2, 0, 0), (1, 3, 0, 0), (0, 5, 0, 0), (0, 4, 2, 0)])


def _dimension_from_values(values: list) -> int:
    """Krull dimension: fewest differences after which the tail vanishes."""
    k = 0
    while any(differences(values, k)[-3:]):
        k += 1
    return k


def test_strongly_stable_examples():
    assert MonomialIdeal(3, [(4, 0, 0)]).is_strongly_stable()
    assert CURVE_GIN.is_strongly_stable()
    assert not MonomialIdeal(2, [(0, 2)]).is_strongly_stable()
    assert not MonomialIdeal(4, [(0, 2, 0, 0)]).is_strongly_stable()


def test_minimal_generators():
    I = MonomialIdeal(3, [(2, 0, 0), (3, 1, 0), (2, 0, 0), (1, 1, 0)])
    assert set(I.gens) == {(2, 0, 0), (1, 1, 0)}


def test_D_M_examples():
    assert (CURVE_GIN.D, CURVE_GIN.M) == (2, 3)
    x1 = MonomialIdeal(4, [(1, 0, 0, 0)])
    assert (x1.D, x1.M) == (1, 1)
    with pytest.raises(ValueError):
        MonomialIdeal(4, []).D


def test_curve_ideal_has_D_three():
    # a strongly stable ideal of n = 4 with one-dimensional quotient
    I = borel_closure(4, [(0, 0, 3, 0), (1, 2, 1, 0), (0, 3, 0, 0)])
    assert I.D == 3
    T = I.regularity() + 8
    assert _dimension_from_values(hilbert_function_bruteforce(I, T)) == 1


def test_spor_examples():
    assert CURVE_GIN.spor_set() == [(0, 4, 0, 0), (0, 4, 1, 0)]
    assert CURVE_GIN.spor_count(4) == 1 and CURVE_GIN.spor_count(5) == 1
    cm = MonomialIdeal(3, [(2, 0, 0), (1, 1, 0), (0, 2, 0)])
    assert cm.D == cm.M and cm.spor_set() == []
    small = MonomialIdeal(2, [(2, 0), (1, 2)])
    assert small.M == 2
    assert set(small.spor) == {(1, 0), (1, 1)}
    with pytest.raises(NotStronglyStable):
        MonomialIdeal(2, [(0, 2)]).spor_set()


def test_substitutions():
    saturated = MonomialIdeal(3, [(2, 0, 0), (1, 1, 0)])
    assert saturated.substitute_last_zero().gens == ((2, 0), (1, 1))
    restricted = CURVE_GIN.substitute_last_zero().substitute_var_one(3)
    assert set(restricted.gens) == {(3, 0, 0), (2, 2, 0), (1, 3, 0), (0, 4, 0)}
    assert MonomialIdeal(3, [(1, 0, 1)]).substitute_var_one().gens == ((1, 0, 0),)


def test_sat_degree_and_regularity():
    assert CURVE_GIN.sat_degree() == 0
    assert CURVE_GIN.regularity() == 6
    assert MonomialIdeal(3, [(1, 0, 0)]).regularity() == 1
    assert MonomialIdeal(3, [(2, 0, 0), (1, 1, 0), (0, 3, 0)]).regularity() == 3
    unsat = MonomialIdeal(3, [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 3, 0)])
    assert unsat.sat_degree() == 2
    with pytest.raises(NotStronglyStable):
        MonomialIdeal(2, [(0, 2)]).regularity()


def test_hilbert_function_examples():
    zero = MonomialIdeal(4, [])
    assert zero.hilbert_function(4).values == [1, 4, 10, 20, 35]
    square = borel_closure(4, [(0, 0, 0, 2)])
    assert square.hilbert_function(3).values == [1, 4, 0, 0]
    ideal = nonacm_curve_ideal()
    assert CURVE_GIN.hilbert_function(8).values == hilbert_function_oracle(ideal, 8)
    assert hilbert_table(CURVE_GIN, 8).values == hilbert_function_bruteforce(CURVE_GIN, 8)


def test_ek_examples():
    res = ek_regularity_crosscheck(MonomialIdeal(2, [(2, 0), (1, 1), (0, 2)]))
    assert res["betti"][:2] == [3, 2] and res["reg"] == 2
    principal = ek_regularity_crosscheck(MonomialIdeal(3, [(5, 0, 0)]))
    assert principal["betti"][0] == 1 and sum(principal["betti"][1:]) == 0
    assert principal["reg"] == 5
    curve = ek_regularity_crosscheck(CURVE_GIN)
    assert curve["reg"] == 6 and curve["agrees"]


# ---------------------------------------------------------------------------
# properties


@given(strongly_stable_ideals(n_max=5, max_deg=4))
def test_hilbert_recursion_matches_bruteforce(I):
    assert I.hilbert_function(7).values == hilbert_function_bruteforce(I, 7)


@given(strongly_stable_ideals(n_max=5, max_deg=4))
def test_codimension_is_D(I):
    assume(not I.is_unit())
    assert I.is_strongly_stable()
    values = hilbert_function_bruteforce(I, I.regularity() + I.nvars + 4)
    assert _dimension_from_values(values) == I.nvars - I.D
    assert I.hilbert_series.dimension == I.nvars - I.D


@given(strongly_stable_ideals())
def test_saturated_iff_no_last_variable(I):
    assume(not I.is_unit())
    saturated = I.colon_variable(I.nvars).gens == I.gens
    assert saturated == I.is_saturated_stable() == (I.sat_degree() == 0) == (I.M < I.nvars)


@given(strongly_stable_ideals())
def test_pure_power_of_x_D(I):
    assume(not I.is_unit())
    m = [0] * I.nvars
    m[I.D - 1] = I.regularity()
    assert I.contains(m)


@given(strongly_stable_ideals(n_min=3))
def test_spor_kernel_identity(I):
    assume(not I.is_unit() and I.is_saturated_stable())
    if I.M == I.nvars - 1 and I.D < I.M:
        for m in range(I.regularity() + 3):
            assert I.spor_count(m) == spor_kernel_dimension(I, m)
    elif I.M < I.nvars - 1:
        assert all(spor_kernel_dimension(I, m) == 0 for m in range(I.regularity() + 3))


@given(strongly_stable_ideals())
def test_ek_regularity_agrees(I):
    assume(not I.is_unit())
    res = ek_regularity_crosscheck(I)
    assert res["agrees"]
    assert res["betti"][0] == len(I.gens)
