"""Acceptance suite: each test carries a criterion marker and the summary prints one line per criterion."""

import time
from collections import Counter
from pathlib import Path

import numpy as np
import pytest

from gingrowth import (
    MonomialIdeal,
    PreconditionError,
    Ring,
    borel_closure,
    chardin_dcruz_ideal,
    cm_check,
    cohen1_bound_check,
    common_factor_P3,
    first_difference_pipeline,
    gin,
    hilbert_table,
    load_ideal,
    macaulay_growth_bound,
    point_ideal,
    random_complete_intersection,
    random_points,
    reduction_number,
    second_difference_pipeline,
    truncate_ideal,
    wlp_test,
)
from gingrowth.cli import corpus_files, default_corpus, load_input
from gingrowth.hilbert import lex_segment_growth, macaulay_violations
from gingrowth.ideals import hilbert_function_oracle
from gingrowth.monomial import hilbert_function_bruteforce, spor_kernel_dimension
from gingrowth.ring import monomials_of_degree
from gingrowth.series import count_monomials, differences

from conftest import random_ideal

criterion = pytest.mark.criterion

CURVE_GENS = "x3^3 - x1*x4^2, x1^2*x3^2 - x2^3*x4, x2^3*x3 - x1^3*x4, x2^6 - x1^5*x3"
CURVE_GIN = MonomialIdeal(4, [(3, 0, 0, 0), (2, 2, 0, 0), (1, 3, 0, 0), (0, 5, 0, 0), (0, 4, 2, 0)])

# Hilbert rows for t = 0..9: R/I, R/(I+L1), R/(I+L1+L2)
UNION_ROWS = {
    "ci": (
        [1, 4, 10, 20, 32, 44, 57, 72, 89, 89],
        [1, 3, 6, 10, 12, 12, 13, 15, 17, 0],
        [1, 2, 3, 4, 2, 2, 2, 2, 2, 0],
    ),
    "general": (
        [1, 4, 10, 20, 35, 52, 65, 80, 97, 97],
        [1, 3, 6, 10, 15, 17, 13, 15, 17, 0],
        [1, 2, 3, 4, 5, 2, 2, 2, 2, 0],
    ),
}


def _corpus_ideals() -> dict:
    """Distinct corpus ideals keyed by file name, dropping repeats of the same input."""
    seen, out = [], {}
    for f in corpus_files(default_corpus()):
        I = load_input(f)
        if any(I.ring.nvars == J.ring.nvars and I == J for J in seen):
            continue
        seen.append(I)
        out[Path(f).name] = I
    return out


@pytest.fixture(scope="module")
def corpus_ideals():
    return _corpus_ideals()


# ---------------------------------------------------------------------------
# 1


@criterion("1", "Gin of the curve example")
def test_gin_reproduction():
    start = time.perf_counter()
    I = load_ideal(f"ring x1, x2, x3, x4; char 32003; ideal {CURVE_GENS};")
    G = gin(I, trials=3)
    elapsed = time.perf_counter() - start
    assert G.agreed and len(G.per_trial) == 3
    assert all(P == CURVE_GIN for P in G.per_trial)
    assert G.ideal == CURVE_GIN
    assert set(G.ideal.gens) == set(CURVE_GIN.gens)
    assert (G.ideal.D, G.ideal.M, G.ideal.regularity()) == (2, 3, 6)
    assert G.ideal.is_saturated_stable()
    assert sorted(G.ideal.spor_set()) == [(0, 4, 0, 0), (0, 4, 1, 0)]
    assert elapsed < 5, elapsed


# ---------------------------------------------------------------------------
# 2


@criterion("2", "Chardin-D'Cruz regularity")
def test_chardin_dcruz():
    start = time.perf_counter()
    for m in range(1, 5):
        G = gin(chardin_dcruz_ideal(m, m))
        assert G.ideal.max_generator_degree() == 2 * m + 2
        assert G.ideal.regularity() == 2 * m + 2
    table = hilbert_table(chardin_dcruz_ideal(4, 4), 10)
    assert table.degree == 30 and table.dimension == 2
    assert table.delta() == [1, 3, 6, 10, 15, 20, 24, 27, 29, 30, 30]
    assert time.perf_counter() - start < 60


# ---------------------------------------------------------------------------
# 3


@criterion("3", "h-vectors of general points")
@pytest.mark.parametrize(
    "count,h",
    [(7, [1, 3, 3]), (16, [1, 3, 6, 6]), (30, [1, 3, 6, 10, 10])],
)
def test_general_points(count, h):
    R = Ring.make(4)
    votes = Counter()
    for seed in range(3):
        table = hilbert_table(point_ideal(random_points(R, count, seed=seed)), len(h) + 2)
        votes[table.delta() == h + [0, 0, 0]] += 1
    assert votes[True] >= 2, votes


# ---------------------------------------------------------------------------
# 4


@criterion("4", "complete intersection (4,4,4)")
def test_ci444(ci444):
    assert hilbert_table(ci444, 12).delta() == [1, 3, 6, 10, 12, 12, 10, 6, 3, 1, 0, 0, 0]
    assert wlp_test(ci444).holds
    prof = reduction_number(ci444, 2)
    assert prof.value == 4 and prof.witness == prof.crosscheck == 4 and prof.certified


# ---------------------------------------------------------------------------
# 5


@criterion("5", "unions failing the weak Lefschetz property")
@pytest.mark.parametrize("config", ["ci", "general"])
def test_wlp_failures(config, union_ci, union_general):
    start = time.perf_counter()
    U = union_ci if config == "ci" else union_general
    Y, Q = U["Y"], U["Q"]
    h, h1, h2 = UNION_ROWS[config]
    assert hilbert_table(Y, 9).values == h
    w = wlp_test(Y)
    assert w.holds is False
    assert w.h_cut1[:10] == h1 and w.h_cut2[:10] == h2

    G = gin(Y)
    r2 = reduction_number(Y, 2, gin_result=G).value
    r3 = reduction_number(Y, 3, gin_result=G).value
    assert (r2, r3) == ((8, 3) if config == "ci" else (8, 4))

    flat = 4 if config == "ci" else 5
    F = common_factor_P3(Y, flat)
    assert F is not None and F.monic() == Q.monic()

    if config == "ci":
        rep = second_difference_pipeline(Y, 4)
        assert rep.saturated and rep.d_regular is False
        assert gin(truncate_ideal(Y, 4)).ideal.regularity() == 6
        assert rep.common_factor.monic() == Q.monic()
    else:
        five = second_difference_pipeline(Y, 5, with_wlp=False)
        assert five.saturated is False
        six = second_difference_pipeline(Y, 6, with_wlp=False)
        assert six.saturated and six.d_regular
    assert time.perf_counter() - start < 90


# ---------------------------------------------------------------------------
# 6a


@criterion("6a", "flat degeneration of Hilbert functions")
@pytest.mark.parametrize("seed", range(20))
def test_flat_degeneration(seed):
    I = random_ideal(1000 + seed, max_deg=4)
    assert I.ring.nvars <= 4
    oracle = hilbert_function_oracle(I, 7)
    assert I.initial_ideal().hilbert_function(7).values == oracle
    assert gin(I).ideal.hilbert_function(7).values == oracle


# ---------------------------------------------------------------------------
# 6b-6d: seeded random monomial ideals


def _random_stable(rng, n, max_deg=5, variables=None) -> MonomialIdeal:
    variables = variables or n
    gens = []
    for _ in range(int(rng.integers(1, 4))):
        monos = monomials_of_degree(variables, int(rng.integers(1, max_deg + 1)))
        gens.append(monos[int(rng.integers(len(monos)))] + (0,) * (n - variables))
    return borel_closure(n, gens)


def _krull_dimension(values: list) -> int:
    k = 0
    while any(differences(values, k)[-3:]):
        k += 1
    return k


@criterion("6b", "codimension and saturation of strongly stable ideals")
def test_strongly_stable_D_and_saturation():
    rng = np.random.default_rng(606)
    checked, kinds = 0, set()
    while checked < 50:
        n = int(rng.integers(2, 6))
        I = _random_stable(rng, n)
        if I.is_unit():
            continue
        values = hilbert_function_bruteforce(I, I.regularity() + n + 4)
        assert I.D == n - _krull_dimension(values)
        saturated = I.colon_variable(n).gens == I.gens
        assert saturated == (I.M < n)
        kinds.add(saturated)
        checked += 1
    assert kinds == {True, False}


@criterion("6c", "sporadic zeros count the cohomology kernel")
def test_spor_identity():
    rng = np.random.default_rng(607)
    checked, nonzero = 0, 0
    while checked < 30:
        n = int(rng.integers(3, 6))
        I = _random_stable(rng, n, variables=n - 1)
        if I.is_unit() or I.M != n - 1 or I.D >= I.M:
            continue
        assert I.is_saturated_stable()
        for m in range(I.regularity() + 3):
            assert I.spor_count(m) == spor_kernel_dimension(I, m)
        nonzero += bool(I.spor_set())
        checked += 1
    assert nonzero >= 10


@criterion("6d", "degree bound for Cohen-Macaulay Borel ideals")
def test_cohen1_bound():
    rng = np.random.default_rng(608)
    checked = 0
    while checked < 50:
        n = int(rng.integers(2, 6))
        e = int(rng.integers(1, n + 1))
        gens = [tuple([0] * (e - 1) + [int(rng.integers(1, 6))] + [0] * (n - e))]
        for _ in range(int(rng.integers(0, 4))):
            monos = monomials_of_degree(e, int(rng.integers(1, 6)))
            gens.append(monos[int(rng.integers(len(monos)))] + (0,) * (n - e))
        B = borel_closure(n, gens)
        if B.is_unit():
            continue
        assert cm_check(B)["cm"]
        res = cohen1_bound_check(B)
        assert res["satisfied"]
        if res["alpha"] >= 2:
            assert res["bound"] <= res["classical_bound"]
        checked += 1


# ---------------------------------------------------------------------------
# 6e


@criterion("6e", "Macaulay growth bound")
def test_macaulay_bound(corpus_ideals, ci444, union_ci, union_general):
    for n in (2, 3, 4):
        for d in range(1, 7):
            for h in range(0, min(30, count_monomials(n, d)) + 1):
                assert macaulay_growth_bound(h, d) == lex_segment_growth(h, d, n)
    tables = [hilbert_table(I, 16) for I in corpus_ideals.values()]
    tables += [hilbert_table(I, 16) for I in (ci444, union_ci["Y"], union_general["Y"])]
    tables += [hilbert_table(chardin_dcruz_ideal(m, m), 16) for m in range(1, 5)]
    for table in tables:
        assert macaulay_violations(table) == []


# ---------------------------------------------------------------------------
# 6f, 6g


@criterion("6f", "first-difference theorem on the corpus")
def test_first_difference_on_corpus(corpus_ideals):
    fired = 0
    for name, I in corpus_ideals.items():
        if I.is_zero() or I.hilbert_series().dimension > 2:
            continue
        rep = first_difference_pipeline(I, strict=True)
        if rep.verdict == "fired":
            assert rep.certified, name
            assert rep.saturated and rep.d_regular, name
            assert rep.degree == rep.s and rep.dimension == 1, name
            fired += 1
    assert fired >= 4


@criterion("6g", "injectivity versus regularity on every second-difference run")
def test_second_difference_on_corpus(corpus_ideals, union_ci, union_general):
    inputs = dict(corpus_ideals)
    inputs["union ci"], inputs["union general"] = union_ci["Y"], union_general["Y"]
    runs = 0
    for name, I in inputs.items():
        if I.is_zero() or I.hilbert_series().dimension != 1:
            continue
        G = gin(I)
        r2 = reduction_number(I, 2, gin_result=G).value
        r3 = reduction_number(I, 3, gin_result=G).value
        for d in range(r3 + 1, r2):
            try:
                rep = second_difference_pipeline(I, d, with_wlp=False, strict=True)
            except PreconditionError:
                continue
            assert rep.injective == rep.d_regular, (name, d)
            runs += 1
    assert runs >= 7


# ---------------------------------------------------------------------------
# 7


@criterion("7", "complete intersection curve (2,16)")
def test_ci_2_16():
    C = random_complete_intersection(Ring.make(4), [2, 16], seed=2)
    expected = [1] + [2 * t + 1 for t in range(1, 16)] + [32, 32, 32]
    assert expected[15] == 31
    assert hilbert_table(C, 18).delta() == expected
    assert reduction_number(C, 2).value == 16


def test_criteria_cover_the_list():
    marked = {
        m.args[0]
        for obj in list(globals().values())
        for m in getattr(obj, "pytestmark", [])
        if m.name == "criterion"
    }
    assert marked == {"1", "2", "3", "4", "5", "6a", "6b", "6c", "6d", "6e", "6f", "6g", "7"}
