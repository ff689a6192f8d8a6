import pytest
from hypothesis import given
from hypothesis import strategies as st

from gingrowth import Ideal, PointSet, Ring, buchberger_moller, point_ideal, random_points
from gingrowth.constructions import random_form
from gingrowth.points import (
    check_upp_bruteforce,
    generic_h_vector,
    intersect_point_ideals,
    points_on_hypersurface,
)


def _h_vector(I: Ideal) -> list:
    return I.hilbert_series().h_vector


def test_coordinate_point(ring4):
    I = point_ideal(PointSet(ring4, ((1, 0, 0, 0),)))
    x1, x2, x3, x4 = ring4.gens()
    assert I == Ideal(ring4, [x2, x3, x4])


def test_two_points_in_the_plane():
    R = Ring.make(3)
    I = point_ideal(PointSet(R, ((1, 0, 0), (0, 1, 0))))
    assert I.hilbert_table(4).values == [1, 2, 2, 2, 2]
    assert _h_vector(I) == [1, 1]


def test_duplicates_rejected(ring4):
    with pytest.raises(ValueError):
        PointSet(ring4, ((1, 2, 3, 4), (2, 4, 6, 8)))
    with pytest.raises(ValueError):
        PointSet(ring4, ((0, 0, 0, 0),))


@pytest.mark.parametrize("count,h", [(7, [1, 3, 3]), (16, [1, 3, 6, 6]), (30, [1, 3, 6, 10, 10]), (1, [1])])
def test_general_points_h_vectors(ring4, count, h):
    assert generic_h_vector(4, count) == h
    hits = sum(_h_vector(point_ideal(random_points(ring4, count, seed))) == h for seed in range(3))
    assert hits >= 2


@given(st.integers(1, 12), st.integers(0, 1000))
def test_vanishing_and_stabilisation(count, seed):
    R = Ring.make(4)
    P = random_points(R, count, seed)
    G = buchberger_moller(P)
    for g in G.polys:
        assert all(g.evaluate(pt) == 0 for pt in P)
    values = Ideal(R, G.polys).hilbert_table(count + 2).values
    assert all(a <= b for a, b in zip(values, values[1:]))
    assert values[count - 1] == count and values[-1] == count


def test_points_on_hyperplane(ring4):
    P = points_on_hypersurface(ring4.gen(0), 5, seed=1)
    assert len(P) == 5 and all(pt[0] == 0 for pt in P)
    assert len(points_on_hypersurface(ring4.gen(0), 0, seed=1)) == 0
    with pytest.raises(ValueError):
        points_on_hypersurface(ring4.zero(), 3)


def test_points_on_quadric(ring4):
    Q = random_form(ring4, 2, 5)
    P = points_on_hypersurface(Q, 81, seed=7)
    assert len(P) == 81
    assert all(Q.evaluate(pt) == 0 for pt in P)


def test_unions(ring4):
    A = point_ideal(random_points(ring4, 5, seed=1))
    empty = point_ideal(PointSet(ring4, ()))
    assert intersect_point_ideals(A, empty) == A
    p = point_ideal(PointSet(ring4, ((1, 0, 0, 0),)))
    q = point_ideal(PointSet(ring4, ((0, 1, 0, 0),)))
    assert intersect_point_ideals(p, q).hilbert_table(3).values == [1, 2, 2, 2]
    # the general path (no point data attached) agrees
    plain = intersect_point_ideals(Ideal(ring4, p.gens), Ideal(ring4, q.gens))
    assert plain == intersect_point_ideals(p, q)


def test_quadric_union_hilbert_row(union_ci):
    Y = union_ci["Y"]
    assert Y.hilbert_table(9).values == [1, 4, 10, 20, 32, 44, 57, 72, 89, 89]
    assert Y.hilbert_series().degree == 89


def test_upp_examples():
    R = Ring.make(3)
    two = PointSet(R, ((1, 0, 0), (0, 1, 0)))
    assert check_upp_bruteforce(two)
    assert check_upp_bruteforce(random_points(R, 5, seed=4))
    collinear = PointSet(R, ((1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)))
    assert not check_upp_bruteforce(collinear)
    with pytest.raises(ValueError):
        check_upp_bruteforce(random_points(R, 13, seed=0))


def test_point_set_json(ring4):
    P = random_points(ring4, 3, seed=2)
    rebuilt = PointSet(ring4, tuple(tuple(c) for c in P.to_json()))
    assert rebuilt.points == P.points
