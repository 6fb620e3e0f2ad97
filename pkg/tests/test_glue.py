import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import degree_census
from singcurve.curve import CurveModel, closed_points_of_degree, count_points
from singcurve.glue import (
    GluingError,
    SingularCurve,
    SingularFiber,
    UnibranchThickening,
    build_glued_curve,
    build_selective_glued_curve,
    enumerate_profiles,
    fiber_types,
    genus_and_delta,
    glue_orbit,
    glued_rational_count,
    p1_glued_closed_form,
    p1_glued_difference_form,
    random_concrete_curve,
    random_profile,
    telescoping_count,
    telescoping_count_alt,
)
from singcurve.zeta import count_points_singular

P1_2 = CurveModel.projective_line(2)
P1_3 = CurveModel.projective_line(3)


def _shape(Y):
    return sorted((fb.d_P, fb.branches) for fb in Y.fibers)


def _rational(Y):
    return count_points_singular(Y, 1).counts_Y[1]


def test_p1_2_2():
    Y = build_glued_curve(P1_2, 2)
    assert _shape(Y) == [(1, (2,))]
    assert _rational(Y) == 4 and Y.arithmetic_genus == 1


def test_p1_3_2():
    Y = build_glued_curve(P1_3, 2)
    assert _shape(Y) == [(1, (2,))] * 3
    assert _rational(Y) == 3 + 1 + (9 - 3) // 2 == 7


def test_p1_2_3():
    Y = build_glued_curve(P1_2, 3)
    assert _shape(Y) == [(1, (2,)), (1, (3,)), (1, (3,))]
    assert _rational(Y) == 6 and genus_and_delta(Y) == (5, 5)


def test_selective():
    assert build_selective_glued_curve(P1_2, [2]) == build_glued_curve(P1_2, 2)
    Y = build_selective_glued_curve(P1_2, [3])
    assert _shape(Y) == [(1, (3,))] * 2 and _rational(Y) == 5
    Y = build_selective_glued_curve(P1_3, [2, 3])
    assert _shape(Y) == [(1, (2,))] * 3 + [(1, (3,))] * 8
    assert len(Y.fibers) == degree_census(3, 2) // 2 + degree_census(3, 3) // 3 == 11
    assert _rational(Y) == 15


@pytest.mark.parametrize("ts", [[], [1, 2], [3, 2], [2, 2]])
def test_selective_rejects_bad_degrees(ts):
    with pytest.raises(GluingError):
        build_selective_glued_curve(P1_2, ts)


def test_n_must_be_at_least_two():
    with pytest.raises(GluingError):
        build_glued_curve(P1_2, 1)


def test_genus_and_delta_examples():
    assert genus_and_delta(SingularCurve(P1_2)) == (0, 0)
    assert genus_and_delta(build_glued_curve(P1_3, 2)) == (3, 3)
    pt = closed_points_of_degree(P1_2, 1)[0]
    assert genus_and_delta(SingularCurve(P1_2, (), (UnibranchThickening(1, 2, pt),))) == (2, 0)


@pytest.mark.parametrize("C,n", [(P1_2, 4), (P1_3, 3), (CurveModel.projective_line(2, 2), 3)])
def test_order_independence(C, n):
    Y = build_glued_curve(C, n)
    rng = random.Random(n)
    for _ in range(5):
        order = list(range(len(Y.fibers)))
        rng.shuffle(order)
        assert build_glued_curve(C, n, order=order) == Y


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2), (5, 1)])
def test_glued_counts_and_genus_match_orbit_counts(p, e):
    C = CurveModel.projective_line(p, e)
    N = count_points(C, 4).counts
    for n in (2, 3, 4):
        Y = build_glued_curve(C, n)
        O = {t: len(closed_points_of_degree(C, t)) for t in range(2, n + 1)}
        assert _rational(Y) == glued_rational_count(N, O, range(2, n + 1)) == p1_glued_closed_form(C.q, n)[0]
        assert Y.arithmetic_genus == Y.delta == sum((t - 1) * o for t, o in O.items()) == p1_glued_closed_form(C.q, n)[1]
    assert _rational(build_glued_curve(C, 2)) == telescoping_count(N, [2]) == telescoping_count_alt(N, 2)


def test_difference_form():
    for q in (2, 3, 4, 5, 7, 8, 9):
        assert p1_glued_difference_form(q, 2) == p1_glued_closed_form(q, 2)
    assert p1_glued_difference_form(2, 3) == (Fraction(16, 3), Fraction(11, 3))
    assert p1_glued_closed_form(2, 3) == (6, 5)


def test_fiber_invariants():
    with pytest.raises(GluingError):
        SingularFiber(2, (3,))
    with pytest.raises(GluingError):
        SingularFiber(2, (1, 2))
    with pytest.raises(GluingError):
        SingularFiber(1, ())
    fb = SingularFiber(2, (4, 2))
    assert fb.branches == (2, 4) and fb.geometric_size == 3 and fb.delta == 4
    assert not SingularFiber(3, (3,)).is_singular


def test_disjointness():
    Y = build_glued_curve(P1_2, 2)
    pt = closed_points_of_degree(P1_2, 2)[0]
    with pytest.raises(GluingError):
        glue_orbit(Y, pt)
    with pytest.raises(GluingError):
        Y.with_thickening(UnibranchThickening(2, 1, pt))
    with pytest.raises(GluingError):
        SingularFiber(1, (), (pt, pt))
    other = closed_points_of_degree(P1_3, 2)[0]
    with pytest.raises(GluingError):
        SingularCurve(P1_2, (SingularFiber(1, (), (other,)),))


def test_random_profile_basics():
    assert all(fb.delta == 0 for fb in random_profile(0, 0).fibers)
    assert random_profile(0, 0, seminormal_only=True).fibers == ()
    assert random_profile(7, 4) == random_profile(7, 4)
    with pytest.raises(GluingError):
        random_profile(0, 3, d_P_range=(5, 6), branch_degree_range=(1, 4))
    with pytest.raises(GluingError):
        random_profile(0, -1)


def test_random_profiles_satisfy_invariants():
    for s in range(1000):
        Y = random_profile(s, 8, seminormal_only=s % 2 == 0)
        assert Y.delta <= 8
        for fb in Y.fibers:
            assert all(d % fb.d_P == 0 and d >= fb.d_P for d in fb.branches)
            assert sum(fb.branches) % fb.d_P == 0
            if s % 2 == 0:
                assert fb.geometric_size >= 2


def test_exhaustive_profiles():
    types = fiber_types(3, 6)
    assert all(1 <= fb.delta <= 3 for fb in types)
    assert SingularFiber(1, (2,)) in types and SingularFiber(3, (3, 3)) in types
    profiles = list(enumerate_profiles(2, 6))
    assert all(Y.delta == 2 for Y in profiles)
    assert len({tuple(_shape(Y)) for Y in profiles}) == len(profiles)
    # delta 1: {1,[1,1]}, {1,[2]}; delta 2: three pairs of those plus five single fibers
    assert len(list(enumerate_profiles(1, 6))) == 2
    assert len(profiles) == 3 + 5


def test_json_round_trip():
    pt = closed_points_of_degree(P1_3, 1)[0]
    Y = build_glued_curve(P1_3, 3).with_thickening(UnibranchThickening(1, 2, pt))
    assert SingularCurve.from_json(Y.to_json()) == Y
    A = random_profile(3, 6)
    assert SingularCurve.from_json(A.to_json()) == A
    bad = Y.to_json()
    bad["fibers"][0]["branches"] = [5]
    with pytest.raises(GluingError):
        SingularCurve.from_json(bad)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([2, 3, 4, 5]))
def test_random_concrete_curves(seed, q):
    C = CurveModel.projective_line(*{2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1)}[q])
    Y = random_concrete_curve(C, seed, max_degree=3, thickenings=2)
    assert Y.is_concrete
    assert Y.delta == sum(sum(fb.branches) - fb.d_P for fb in Y.fibers)
    assert Y.arithmetic_genus == Y.delta + sum(th.degree * th.y for th in Y.thickenings)
    pts = [pt for fb in Y.fibers for pt in fb.points] + [th.location for th in Y.thickenings]
    geometric = [x for pt in pts for x in pt.orbit()]
    assert len(set(geometric)) == len(geometric)
