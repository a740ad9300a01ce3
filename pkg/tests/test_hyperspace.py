import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hyperdyn import GridSpace, KSet, VietorisNbhd, ball_nbhd, hausdorff2, vietoris_member
from hyperdyn.errors import EmptySet
from hyperdyn.harness import check_vietoris_hausdorff

small_pts = st.tuples(st.integers(0, 5), st.integers(0, 5))
ksets = st.sets(small_pts, min_size=1, max_size=3).map(lambda s: KSet(tuple(s), 3))


def test_hausdorff_example():
    assert hausdorff2(KSet(((0,), (3,)), 2), KSet(((1,),), 2)) == 4


def test_kset_bound_and_order():
    A = KSet(((2,), (0,), (2,)), 2)
    assert A.elems == ((0,), (2,))
    with pytest.raises(ValueError):
        KSet(((0,), (1,), (2,)), 2)
    with pytest.raises(EmptySet):
        KSet((), 1)
    assert KSet(((0,),), 1) == KSet(((0,),), 5)


def test_vietoris_member_basic():
    N = VietorisNbhd(([(0,), (1,)], [(3,)]))
    assert vietoris_member(KSet(((0,), (3,)), 2), N)
    assert not vietoris_member(KSet(((0,),), 2), N)            # misses the second open
    assert not vietoris_member(KSet(((0,), (2,), (3,)), 3), N)  # (2,) lies outside the union
    with pytest.raises(EmptySet):
        VietorisNbhd(([],))


def test_ball_nbhd_includes_center():
    Z = GridSpace.line(0, 4)
    N = ball_nbhd(KSet(((2,),), 1), 1, Z)
    assert N.opens == (frozenset({(1,), (2,), (3,)}),)


@given(ksets, ksets)
def test_hausdorff_symmetric_zero_iff_equal(A, B):
    assert hausdorff2(A, B) == hausdorff2(B, A)
    assert (hausdorff2(A, B) == 0) == (A == B)


@given(ksets, ksets, ksets)
def test_hausdorff_triangle(A, B, C):
    ab, bc, ac = hausdorff2(A, B), hausdorff2(B, C), hausdorff2(A, C)
    s = ac - ab - bc
    assert s <= 0 or s * s <= 4 * ab * bc


@given(st.sets(small_pts, min_size=1, max_size=7), st.sampled_from([Fraction(1, 2), 1, Fraction(3, 2), 2]),
       st.data())
def test_vietoris_hausdorff_random(pts, eps, data):
    Z = GridSpace.from_points(pts)
    B = KSet(tuple(data.draw(st.sets(st.sampled_from(Z.points), min_size=1, max_size=3))), 3)
    N = ball_nbhd(B, eps, Z)
    for m in range(1, 4):
        for A in itertools.combinations(Z.points, m):
            A = KSet(A, 3)
            h, mem = hausdorff2(A, B), vietoris_member(A, N)
            if h < eps * eps:
                assert mem
            if mem:
                assert h <= eps * eps


def test_vietoris_hausdorff_small_grid():
    assert check_vietoris_hausdorff(GridSpace.box((2, 3))).ok


def test_vietoris_examples():
    Z = GridSpace.line(0, 2)
    A = lambda *xs: KSet(tuple((x,) for x in xs), 3)  # noqa: E731
    assert vietoris_member(A(0, 2), VietorisNbhd.from_indices(Z, [[0], [2]]))
    assert not vietoris_member(A(0), VietorisNbhd.from_indices(Z, [[0], [2]]))
    assert vietoris_member(A(0, 1, 2), VietorisNbhd.from_indices(Z, [[0, 1], [1, 2]]))
