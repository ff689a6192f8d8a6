import pytest
from hypothesis import given
from hypothesis import strategies as st

from gingrowth import (
    Ideal,
    MonomialIdeal,
    PointSet,
    Ring,
    TheoremViolation,
    chardin_dcruz_ideal,
    crystallization_check,
    gin,
    hilbert_table,
    macaulay_growth_bound,
    nonacm_curve_ideal,
    point_ideal,
    random_complete_intersection,
    random_points,
    reduction_number,
    wlp_test,
)
from gingrowth.growth import decreasing_equality_check
from gingrowth.hilbert import (
    alpha,
    artinian_last_degree,
    binomial_expansion,
    component_basis,
    lex_segment_growth,
    macaulay_violations,
    multiplication_ranks,
    reduction_witness,
)
from gingrowth.series import binom, count_monomials, differences

from conftest import random_ideal


def test_alpha_examples(ring4):
    x1, x2, _, _ = ring4.gens()
    assert alpha(Ideal(ring4, [x1**2, x2**3])) == 2
    assert alpha(chardin_dcruz_ideal(4, 4)) == 5
    assert alpha(point_ideal(random_points(ring4, 7, seed=0))) == 2
    with pytest.raises(ValueError):
        alpha(Ideal.zero(ring4))
    assert alpha(MonomialIdeal(3, [(1, 1, 0), (0, 0, 3)])) == 2


def test_zero_ideal_table():
    assert hilbert_table(Ideal.zero(Ring.make(3)), 3).values == [1, 3, 6, 10]


def test_ci444_table(ci444):
    table = hilbert_table(ci444, 11)
    assert table.delta()[:10] == [1, 3, 6, 10, 12, 12, 10, 6, 3, 1]
    assert table.h_vector == [1, 3, 6, 10, 12, 12, 10, 6, 3, 1]
    assert table.degree == 64 and table.dimension == 1


# ---------------------------------------------------------------------------
# component bases


def test_component_basis_examples():
    R = Ring.make(3)
    x1, x2, x3 = R.gens()
    assert component_basis(Ideal(R, [x1**2]), 1) == []
    basis = component_basis(Ideal(R, [x1]), 2)
    span = Ideal(R, basis)
    assert len(basis) == 3 and span == Ideal(R, [x1**2, x1 * x2, x1 * x3])
    cubic = component_basis(nonacm_curve_ideal(), 3)
    assert len(cubic) == 1 and cubic[0].monic() == nonacm_curve_ideal().gens[0].monic()


@pytest.mark.parametrize("seed", range(5))
def test_component_basis_size(seed):
    I = random_ideal(seed)
    n = I.ring.nvars
    values = hilbert_table(I, 5).values
    for d in range(6):
        assert len(component_basis(I, d)) == count_monomials(n, d) - values[d]


# ---------------------------------------------------------------------------
# reduction numbers


def test_reduction_ci444(ci444):
    prof = reduction_number(ci444, 2)
    assert prof.value == 4 and prof.witness == 4 and prof.crosscheck == 4 and prof.certified
    assert prof.warning == ""


def test_reduction_quadric_unions(union_ci, union_general):
    for Y, r3 in ((union_ci["Y"], 3), (union_general["Y"], 4)):
        G = gin(Y)
        r2p = reduction_number(Y, 2, gin_result=G)
        r3p = reduction_number(Y, 3, gin_result=G)
        assert (r2p.value, r3p.value) == (8, r3)
        assert r2p.certified and r3p.certified


def test_reduction_single_point(ring4):
    pt = point_ideal(PointSet(ring4, ((1, 2, 3, 4),)))
    prof = reduction_number(pt, 1)
    assert prof.value == 0 and prof.certified


def test_reduction_warns_below_dimension():
    prof = reduction_number(chardin_dcruz_ideal(1, 1), 1)
    assert "below" in prof.warning
    with pytest.raises(ValueError):
        reduction_witness(MonomialIdeal(3, [(1, 0, 0)]), 3)


def test_artinian_last_degree(ring4):
    assert artinian_last_degree(Ideal(ring4, list(ring4.gens()))) == 0
    assert artinian_last_degree(Ideal(ring4, [ring4.gen(0)])) is None


@pytest.mark.parametrize("count", [4, 10, 13])
def test_reduction_witness_matches_crosscheck(ring4, count):
    prof = reduction_number(point_ideal(random_points(ring4, count, seed=count)), 1)
    assert prof.certified and prof.witness == prof.crosscheck


# ---------------------------------------------------------------------------
# Macaulay


def test_macaulay_examples():
    assert binomial_expansion(12, 4) == [(5, 4), (4, 3), (3, 2)]
    assert macaulay_growth_bound(12, 4) == 15
    assert macaulay_growth_bound(0, 3) == 0
    for d in range(1, 8):
        for s in range(1, d + 1):
            assert macaulay_growth_bound(s, d) == s
    with pytest.raises(ValueError):
        binomial_expansion(3, 0)


@given(st.integers(0, 500), st.integers(1, 8))
def test_binomial_expansion_is_an_expansion(h, d):
    exp = binomial_expansion(h, d)
    assert sum(binom(k, i) for k, i in exp) == h
    ks = [k for k, _ in exp]
    assert all(a > b for a, b in zip(ks, ks[1:]))
    assert all(k >= i for k, i in exp)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_bound_matches_lex_segments(n):
    for d in range(1, 7):
        for h in range(0, min(30, count_monomials(n, d)) + 1):
            assert macaulay_growth_bound(h, d) == lex_segment_growth(h, d, n)


def test_no_violations_on_tables(ci444, union_ci):
    for I in (ci444, union_ci["Y"], chardin_dcruz_ideal(4, 4), nonacm_curve_ideal()):
        assert macaulay_violations(hilbert_table(I, 14)) == []


# ---------------------------------------------------------------------------
# crystallization


def test_crystallization_examples(ring4):
    x1, x2, x3, _ = ring4.gens()
    borel = Ideal(ring4, [x1**2, x1 * x2, x2**2, x1 * x3])
    v = crystallization_check(borel, 2)
    assert v.regular and not v.generator_in_next_degree and v.gin_max_gen_degree == 2
    cd = crystallization_check(chardin_dcruz_ideal(4, 4), 6)
    assert cd.generator_in_next_degree and not cd.regular and cd.gin_max_gen_degree == 10
    with pytest.raises(ValueError):
        crystallization_check(chardin_dcruz_ideal(4, 4), 5)


def test_crystallization_ci_curve(ring4):
    C = random_complete_intersection(ring4, [2, 16], seed=2)
    assert not crystallization_check(C, 16).regular
    v = crystallization_check(C, 17)
    assert v.regular and v.gin_max_gen_degree == 17


def test_crystallization_wrong_conclusion_raises(monkeypatch, ring4):
    import gingrowth.hilbert as hilbert_mod

    real = hilbert_mod.gin

    def fake(I, trials=3, seed=0, degree_bound=None):
        G = real(I, trials=trials, seed=seed, degree_bound=degree_bound)
        if degree_bound is None:
            G.ideal = MonomialIdeal(4, list(G.ideal.gens) + [(0, 0, 5, 0)])
        return G

    monkeypatch.setattr(hilbert_mod, "gin", fake)
    x1, x2, _, _ = ring4.gens()
    with pytest.raises(TheoremViolation):
        crystallization_check(Ideal(ring4, [x1**2, x1 * x2, x2**2]), 2)


# ---------------------------------------------------------------------------
# weak Lefschetz


def test_wlp_ci444(ci444):
    w = wlp_test(ci444)
    assert w.holds and not w.inconclusive and w.failing_degrees == []
    assert w.h_cut1[:10] == [1, 3, 6, 10, 12, 12, 10, 6, 3, 1]
    assert w.h_cut2[:6] == [1, 2, 3, 4, 2, 0]


def test_wlp_single_point(ring4):
    assert wlp_test(point_ideal(PointSet(ring4, ((1, 1, 1, 1),)))).holds


def test_wlp_fails_on_quadric_union(union_ci):
    w = wlp_test(union_ci["Y"])
    assert w.holds is False
    assert w.h_cut1[:10] == [1, 3, 6, 10, 12, 12, 13, 15, 17, 0]
    assert w.h_cut2[:10] == [1, 2, 3, 4, 2, 2, 2, 2, 2, 0]
    assert w.failing_degrees


def test_wlp_needs_low_dimension():
    with pytest.raises(ValueError):
        wlp_test(chardin_dcruz_ideal(1, 1))


@pytest.mark.parametrize("count", [7, 16, 21, 30])
def test_wlp_implies_second_difference(ring4, count):
    I = point_ideal(random_points(ring4, count, seed=1))
    w = wlp_test(I)
    if w.holds:
        d2 = differences(hilbert_table(I, len(w.h_cut2) - 1).values, 2)
        assert w.h_cut2 == [max(v, 0) for v in d2]


def test_multiplication_ranks_shape(ci444):
    from gingrowth import restrict_general

    A = restrict_general(ci444, 1, seed=4)
    ranks = multiplication_ranks(A, A.ring.gen(0) + A.ring.gen(2), 3)
    assert [r[0] for r in ranks] == [0, 1, 2, 3]
    assert all(r[1] <= min(r[2], r[3]) for r in ranks)


# ---------------------------------------------------------------------------
# non-increasing first difference and the equality criterion


@pytest.mark.parametrize(
    "build",
    [
        lambda R: chardin_dcruz_ideal(4, 4),
        lambda R: chardin_dcruz_ideal(2, 3),
        lambda R: nonacm_curve_ideal(),
        lambda R: random_complete_intersection(R, [2, 5], seed=1),
        lambda R: point_ideal(random_points(R, 30, seed=0)),
    ],
)
def test_decreasing_above_r2(ring4, build):
    I = build(ring4)
    G = gin(I)
    r2 = reduction_number(I, 2, gin_result=G).value
    t_max = G.ideal.max_generator_degree() + 4
    delta = differences(hilbert_table(I, t_max).values)
    assert all(delta[t] >= delta[t + 1] for t in range(r2, t_max))
    assert decreasing_equality_check(G.ideal, delta, r2, t_max - 2) == []
