import pytest
from hypothesis import settings, strategies as st

from hyperdyn import GridSpace, MultiMap, Subspace

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def shift_map(n=4, by=2):
    """f(x) = {(x + by) mod n} on the integer line {0..n-1}."""
    Z = GridSpace.line(0, n - 1)
    return MultiMap(Subspace.full(Z), {i: [((i + by) % n,)] for i in range(n)}, 1)


def push_map():
    """f(x) = {x + 4} on X = {0..5} inside Z = {0..9}."""
    Z = GridSpace.line(0, 9)
    return MultiMap(Subspace(Z, range(6)), {i: [(i + 4,)] for i in range(6)}, 1)


@pytest.fixture
def shift():
    return shift_map()


@pytest.fixture
def push():
    return push_map()


@st.composite
def spaces(draw, max_points=30):
    dims = draw(st.integers(1, 2))
    if dims == 1:
        n = draw(st.integers(1, max_points))
        return GridSpace.line(0, n - 1)
    w = draw(st.integers(1, 6))
    h = draw(st.integers(1, max(1, min(6, max_points // w))))
    return GridSpace.box((w, h))


@st.composite
def maps(draw, max_points=30, max_k=3, closed=None, fpf=False):
    """Random multivalued maps X -> exp_k(Z) on small grids."""
    Z = draw(spaces(max_points))
    n = len(Z)
    if fpf and n < 2:
        Z = GridSpace.line(0, 1)
        n = 2
    X = draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=n))
    if fpf and len(X) < 2:
        X = {0, 1}
    X = sorted(X)
    k = draw(st.integers(1, max_k))
    is_closed = draw(st.booleans()) if closed is None else closed
    pool = X if is_closed else list(range(n))
    images = {}
    for x in X:
        choices = [p for p in pool if not (fpf and p == x)]
        img = draw(st.sets(st.sampled_from(choices), min_size=1, max_size=min(k, len(choices))))
        images[x] = [Z.points[i] for i in sorted(img)]
    return MultiMap(Subspace(Z, tuple(X)), images, k)
