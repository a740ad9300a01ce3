import pytest
from hypothesis import given, strategies as st

from hyperdyn import (
    GridSpace, KSet, MultiMap, Subspace, UndefinedAt, extend_map, fix_points,
    internal_images, iterate, orbit_graph, period_at, periodic_set,
)
from hyperdyn.dynamics import internal_image_layers
from hyperdyn.errors import DimMismatch, NotInDomain, NotInHyperplane
from hyperdyn.harness import oracle_period
from hyperdyn.surd import Surd

from conftest import maps


def test_shift_iterate_and_period(shift):
    assert iterate(shift, 0, 1) == KSet(((2,),), 1)
    assert iterate(shift, 0, 2) == KSet(((0,),), 1)
    assert [period_at(shift, x) for x in range(4)] == [2, 2, 2, 2]
    assert fix_points(shift) == frozenset()
    assert periodic_set(shift, 1) == frozenset()
    assert periodic_set(shift, 2) == frozenset(range(4))


def test_push_internal_images(push):
    assert internal_images(push, [4], 2) == frozenset()
    assert internal_images(push, [0], 2) == {(8,)}
    assert iterate(push, 4, 2) == UndefinedAt(2)
    assert iterate(push, 0, 2) == KSet(((8,),), 1)
    assert iterate(push, 0, 3) == UndefinedAt(3)
    assert period_at(push, 0) is None


def test_fixed_point_and_branching():
    Z = GridSpace.line(0, 3)
    f = MultiMap(Subspace.full(Z), {0: [(1,), (2,)], 1: [(1,)], 2: [(3,)], 3: [(0,)]}, 2)
    assert fix_points(f) == {1}
    assert period_at(f, 1) == 1
    assert period_at(f, 0) == 3
    assert period_at(f, 0, limit=2) is None
    assert oracle_period(f, 0, 8) == 3
    assert oracle_period(f, 0, 2) is None
    assert periodic_set(f, 2) == {1}


def test_bad_inputs():
    Z = GridSpace.line(0, 3)
    with pytest.raises(ValueError):
        MultiMap(Subspace(Z, [0]), {0: [(1,), (2,)]}, 1)
    with pytest.raises(NotInDomain):
        MultiMap(Subspace(Z, [0, 1]), {0: [(1,)]}, 1)
    f = MultiMap(Subspace(Z, [0]), {0: [(1,)]}, 1)
    with pytest.raises(NotInDomain):
        iterate(f, 2, 1)
    with pytest.raises(ValueError):
        iterate(f, 0, 0)


def test_orbit_graph_dot(shift):
    g = orbit_graph(shift)
    assert g.edges == ((0, 2), (1, 3), (2, 0), (3, 1))
    dot = g.to_dot()
    assert dot.startswith("digraph orbit {\n")
    assert "  0 -> 2;\n" in dot
    assert '  3 [label="3"];\n' in dot
    assert dot.endswith("}\n")


def test_extension_example():
    Z = GridSpace.box((3, 2), lo=(-1, 0))
    X = Subspace(Z, [Z.index((0, 0)), Z.index((1, 0))])
    f = MultiMap(X, {Z.index((0, 0)): [(1, 0)], Z.index((1, 0)): [(0, 0)]}, 1)
    g = extend_map(f)
    assert g(Z.index((-1, 0))) == KSet(((1, 1),), 1)
    assert g(Z.index((-1, 1))) == KSet(((1, 2),), 1)
    assert g(Z.index((0, 1))) == KSet(((1, 1),), 1)
    assert period_at(g, Z.index((0, 0))) == 2


def test_extension_surd_lift():
    Z = GridSpace.box((3, 3), lo=(0, -1))
    X = Subspace(Z, [Z.index((0, 0))])
    f = MultiMap(X, {Z.index((0, 0)): [(2, 0)]}, 1)
    g = extend_map(f)
    (q,) = g(Z.index((1, 1))).elems
    # lifts: 1 + dist((1,0), X) = 2 and -1 + dist((2,0), X) = 1
    assert q == (2, 2)
    (q,) = g(Z.index((2, -1))).elems
    assert q == (2, 1)
    Z3 = GridSpace.box((2, 2, 2))
    X3 = Subspace(Z3, [Z3.index((0, 0, 0))])
    g3 = extend_map(MultiMap(X3, {Z3.index((0, 0, 0)): [(1, 1, 0)]}, 1))
    (q,) = g3(Z3.index((1, 1, 1))).elems
    assert isinstance(q[-1], Surd) and q[-1] == 1 + Surd(0, 1, 2)


def test_extension_errors():
    Z = GridSpace.line(0, 3)
    with pytest.raises(DimMismatch):
        extend_map(MultiMap(Subspace(Z, [0]), {0: [(1,)]}, 1))
    Z2 = GridSpace.box((2, 2))
    with pytest.raises(NotInHyperplane):
        extend_map(MultiMap(Subspace(Z2, [Z2.index((0, 1))]), {Z2.index((0, 1)): [(0, 0)]}, 1))
    with pytest.raises(NotInHyperplane):
        extend_map(MultiMap(Subspace(Z2, [Z2.index((0, 0))]), {Z2.index((0, 0)): [(1, 1)]}, 1))


@given(maps(), st.integers(1, 5))
def test_cardinality_law(f, n):
    for x in f.domain:
        r = iterate(f, x, n)
        if isinstance(r, KSet):
            assert len(r) <= f.k ** n


@given(maps(max_points=16))
def test_period_matches_oracle(f):
    for x in f.domain:
        p = period_at(f, x)
        want = p if p is not None and p <= 8 else None
        assert oracle_period(f, x, 8) == want


@given(maps(max_points=20, closed=True))
def test_period_is_first_internal_return(f):
    for x in f.domain:
        p = period_at(f, x)
        px = f.ambient.points[x]
        layers = internal_image_layers(f, [x], 8)
        first = next((m for m, A in enumerate(layers, 1) if px in A), None)
        assert first == (p if p is not None and p <= 8 else None)
        for m, A in enumerate(layers, 1):
            assert iterate(f, x, m).points == A


@given(maps(max_points=20), st.integers(1, 4), st.data())
def test_restriction_shrinks_periodic_set(f, M, data):
    A = data.draw(st.sets(st.sampled_from(f.domain.members), min_size=1))
    assert periodic_set(f.restrict(A), M) <= periodic_set(f, M) & A


@given(st.integers(1, 6), st.data())
def test_extension_properties(side, data):
    Z = GridSpace.box((2 * side + 1, 2 * side + 1), lo=(-side, -side))
    row = [i for i, p in enumerate(Z.points) if p[1] == 0]
    X = sorted(data.draw(st.sets(st.sampled_from(row), min_size=1)))
    pool = data.draw(st.sampled_from([X, row]))
    k = data.draw(st.integers(1, 3))
    images = {x: [Z.points[j] for j in data.draw(st.sets(st.sampled_from(pool), min_size=1, max_size=k))]
              for x in X}
    f = MultiMap(Subspace(Z, X), images, k)
    g = extend_map(f)
    for x in X:
        assert g(x) == f(x)
        assert period_at(g, x) == period_at(f, x)
    for i, p in enumerate(Z.points):
        if i not in f.domain and p[-1] >= 0:
            img = g(i)
            assert all(q[-1] > 0 for q in img)
            assert not (Z.indices(img) & set(X))


def test_oracle_examples(shift, push):
    cycle = MultiMap(Subspace.full(GridSpace.line(0, 2)), {i: [((i + 1) % 3,)] for i in range(3)}, 1)
    assert oracle_period(cycle, 0, 8) == 3
    assert oracle_period(shift, 0, 1) is None
    assert oracle_period(shift, 0, 2) == 2
    assert all(oracle_period(push, x, 8) is None for x in push.domain)
