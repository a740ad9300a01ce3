from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hyperdyn import GridSpace, Resolution, Subspace, closure_eps, dist2, nearest_in
from hyperdyn.errors import DimMismatch, EmptySet

from conftest import spaces

coords = st.integers(-20, 20)
pts2 = st.tuples(coords, coords)


def test_dist2_examples():
    assert dist2((0,), (0,)) == 0
    assert dist2((0, 0), (3, 4)) == 25
    assert dist2((1, 1), (2, 3)) == 5


def test_dist2_dim_mismatch():
    with pytest.raises(DimMismatch):
        dist2((0,), (0, 0))


def test_closure_examples():
    Z = GridSpace.line(0, 4)
    assert closure_eps([(2,)], 1, Z) == {1, 2, 3}
    assert closure_eps([(2,)], 0, Z) == {2}
    assert closure_eps([(0,), (4,)], Fraction(1, 2), Z) == {0, 4}
    with pytest.raises(EmptySet):
        closure_eps([], 1, Z)


def test_nearest_examples():
    Z = GridSpace.line(-1, 1)
    X = Subspace(Z, [Z.index((0,)), Z.index((1,))])
    assert nearest_in((-1,), X) == Z.index((0,))
    assert nearest_in((Fraction(1, 2),), X) == Z.index((0,))  # tie at 1/4
    assert nearest_in((1,), X) == Z.index((1,))


def test_gridspace_order_enforced():
    with pytest.raises(ValueError):
        GridSpace(1, ((1,), (0,)))
    with pytest.raises(ValueError):
        GridSpace(1, ((0,), (0,)))
    Z = GridSpace.from_points([(1, 0), (0, 5), (0, 1)])
    assert Z.points == ((0, 1), (0, 5), (1, 0))


def test_subspace_validation():
    Z = GridSpace.line(0, 2)
    with pytest.raises(EmptySet):
        Subspace(Z, ())
    with pytest.raises(Exception):
        Subspace(Z, (3,))


def test_resolution_nonnegative():
    with pytest.raises(ValueError):
        Resolution(Fraction(-1))
    assert str(Resolution(Fraction(1, 2))) == "1/2"


@given(pts2, pts2)
def test_dist2_symmetric_and_definite(a, b):
    assert dist2(a, b) == dist2(b, a)
    assert (dist2(a, b) == 0) == (a == b)


@given(pts2, pts2, pts2)
def test_triangle_inequality_squared_form(a, b, c):
    # sqrt(ac) <= sqrt(ab) + sqrt(bc)  <=>  ac - ab - bc <= 2 sqrt(ab bc)
    ab, bc, ac = dist2(a, b), dist2(b, c), dist2(a, c)
    s = ac - ab - bc
    assert s <= 0 or s * s <= 4 * ab * bc


@given(spaces(), st.data())
def test_closure_zero_and_monotone(Z, data):
    S = data.draw(st.sets(st.integers(0, len(Z) - 1), min_size=1))
    pts = [Z.points[i] for i in S]
    assert closure_eps(pts, 0, Z) == frozenset(S)
    e1 = data.draw(st.fractions(0, 4, max_denominator=4))
    e2 = data.draw(st.fractions(0, 4, max_denominator=4))
    lo, hi = min(e1, e2), max(e1, e2)
    assert closure_eps(pts, lo, Z) <= closure_eps(pts, hi, Z)
    assert frozenset(S) <= closure_eps(pts, lo, Z)


@given(spaces(), st.data())
def test_ball_cache_matches_closure(Z, data):
    i = data.draw(st.integers(0, len(Z) - 1))
    eps = data.draw(st.fractions(0, 3, max_denominator=3))
    assert Z.ball(i, eps * eps) == closure_eps([Z.points[i]], eps, Z)


@given(spaces(), st.data())
def test_nearest_idempotent_on_members(Z, data):
    X = Subspace(Z, tuple(data.draw(st.sets(st.integers(0, len(Z) - 1), min_size=1))))
    for i in X:
        assert nearest_in(Z.points[i], X) == i
