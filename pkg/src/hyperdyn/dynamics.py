"""Multivalued maps X -> exp_k(Z), their iterates, fixed points and periods."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Union

from .errors import DimMismatch, EmptySet, NotInDomain, NotInHyperplane
from .geometry import GridSpace, Point, Subspace, dist2, make_point, nearest_in
from .hyperspace import KSet
from .surd import exact_sqrt, normalize


class MultiMap:
    """A total table from the members of ``domain`` to KSets of ambient points.

    Image points are coordinate tuples; they are usually grid points of the
    ambient space but may be off-grid (extension images).
    """

    def __init__(self, domain: Subspace, images: Mapping[int, Iterable], k: int):
        if k < 1:
            raise ValueError("k must be a positive integer")
        self.domain = domain
        self.ambient: GridSpace = domain.space
        self.k = k
        dim = self.ambient.dim
        missing = [x for x in domain if x not in images]
        if missing:
            raise NotInDomain(f"no image given for domain point {missing[0]}", witness=missing[0])
        extra = [x for x in images if x not in domain]
        if extra:
            raise NotInDomain(f"image given for non-domain index {extra[0]}", witness=extra[0])
        table = {}
        for x in domain:
            img = images[x]
            if not isinstance(img, KSet):
                img = KSet(tuple(self._as_point(p) for p in img), k)
            elif len(img) > k:
                raise ValueError(f"image of {x} has {len(img)} > k={k} points")
            for p in img:
                if len(p) != dim:
                    raise DimMismatch(f"image point {p} of {x} is not {dim}-dimensional")
            table[x] = img
        self._table = table
        self._grid = {x: self.ambient.indices(img) for x, img in table.items()}
        dset = domain.member_set
        self._succ = {x: frozenset(i for i in g if i in dset) for x, g in self._grid.items()}

    def _as_point(self, p) -> Point:
        if isinstance(p, int):
            if not 0 <= p < len(self.ambient):
                raise NotInDomain(f"image index {p} out of range")
            return self.ambient.points[p]
        return make_point(p)

    def __call__(self, x: int) -> KSet:
        try:
            return self._table[x]
        except KeyError:
            raise NotInDomain(f"{x} is not in the domain", witness=x) from None

    def image_indices(self, x: int) -> frozenset:
        """Ambient indices of the on-grid points of f(x)."""
        return self._grid[x]

    def successors(self, x: int) -> frozenset:
        """Members of X lying in f(x)."""
        return self._succ[x]

    def is_self_map(self) -> bool:
        return all(len(self._succ[x]) == len(self._table[x]) for x in self.domain)

    def restrict(self, A: Iterable[int]) -> "MultiMap":
        A = Subspace(self.ambient, tuple(A))
        for a in A:
            if a not in self.domain:
                raise NotInDomain(f"{a} is not in the domain", witness=a)
        return MultiMap(A, {a: self._table[a] for a in A}, self.k)

    def table(self) -> dict:
        return dict(self._table)

    def __repr__(self):
        return f"MultiMap(|X|={len(self.domain)}, |Z|={len(self.ambient)}, k={self.k})"


def _check_member(f: MultiMap, x: int):
    if x not in f.domain:
        raise NotInDomain(f"{x} is not in the domain", witness=x)


def union_images(f: MultiMap, S: Iterable[int]) -> frozenset:
    """``U{f(s) : s in S}`` as a set of points."""
    out = set()
    for s in S:
        out.update(f(s).elems)
    return frozenset(out)


@dataclass(frozen=True)
class OrbitGraph:
    vertices: tuple
    edges: tuple

    def to_dot(self, name: str = "orbit") -> str:
        lines = [f"digraph {name} {{"]
        lines += [f'  {v} [label="{v}"];' for v in self.vertices]
        lines += [f"  {u} -> {v};" for u, v in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"


def orbit_graph(f: MultiMap) -> OrbitGraph:
    edges = tuple((u, v) for u in f.domain for v in sorted(f.successors(u)))
    return OrbitGraph(f.domain.members, edges)


@dataclass(frozen=True)
class UndefinedAt:
    """The iterate at ``step`` is undefined: the previous iterate left X."""

    step: int


IterResult = Union[KSet, UndefinedAt]


def iterate(f: MultiMap, x: int, n: int) -> IterResult:
    """``f^n(x)``, with ``f^{j+1}(x) = U{f(y) : y in f^j(x)}`` when that is defined."""
    _check_member(f, x)
    if n < 1:
        raise ValueError("n must be a positive integer")
    current = f(x).elems
    index_of = f.ambient.index_of
    dom = f.domain
    for step in range(2, n + 1):
        nxt = set()
        for p in current:
            i = index_of(p)
            if i is None or i not in dom:
                return UndefinedAt(step)
            nxt.update(f(i).elems)
        current = nxt
    return KSet(tuple(current), f.k ** n)


def internal_image_layers(f: MultiMap, S: Iterable[int], n: int) -> list:
    """``[A_1, ..., A_n]`` where ``A_1 = U f(S)`` and ``A_{j+1} = U{f(y) : y in A_j and X}``."""
    dom = f.domain
    layers = []
    idx = [s for s in S]
    for s in idx:
        _check_member(f, s)
    index_of = f.ambient.index_of
    for _ in range(n):
        A = union_images(f, idx)
        layers.append(A)
        idx = set()
        for p in A:
            i = index_of(p)
            if i is not None and i in dom:
                idx.add(i)
    return layers


def internal_images(f: MultiMap, S: Iterable[int], n: int) -> frozenset:
    """n-th image set of S computed through points of X only; may be empty."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    return internal_image_layers(f, S, n)[-1]


def fix_points(f: MultiMap) -> frozenset:
    return frozenset(x for x in f.domain if x in f.successors(x))


def period_at(f: MultiMap, x: int, limit: Optional[int] = None) -> Optional[int]:
    """Length of the shortest directed cycle through x in the orbit graph.

    Breadth-first search outward from x; with ``limit`` the search stops once
    no cycle of length at most ``limit`` is possible and returns None.
    """
    _check_member(f, x)
    succ = f.successors
    if x in succ(x):
        return 1
    seen = {x}
    frontier = [x]
    length = 1
    while frontier and (limit is None or length < limit):
        nxt = []
        for u in frontier:
            for v in succ(u):
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        length += 1
        for v in nxt:
            if x in succ(v):
                return length
        frontier = nxt
    return None


def periodic_set(f: MultiMap, K: int) -> frozenset:
    """Points of X at which f has period at most K."""
    if K < 1:
        raise ValueError("K must be a positive integer")
    return frozenset(x for x in f.domain if period_at(f, x, limit=K) is not None)


def project(p: Point) -> Point:
    """Projection onto the hyperplane {last coordinate = 0}."""
    return tuple(p[:-1]) + (0,)


def extend_map(f: MultiMap) -> MultiMap:
    """Extend f from a hyperplane subset X to the whole grid.

    ``g(p) = {(y_1..y_{n-1}, p_n + dist(pi(p), X)) : y in f(nearest point of X to pi(p))}``.
    The lifted coordinate is exact (a rational or a quadratic surd).
    """
    Z, X = f.ambient, f.domain
    if len(X) == 0:
        raise EmptySet("empty domain")
    if Z.dim < 2:
        raise DimMismatch("the extension needs an ambient dimension of at least 2")
    for x in X:
        if Z.points[x][-1] != 0:
            raise NotInHyperplane(f"domain point {Z.points[x]} is off the hyperplane", witness=x)
        for y in f(x):
            if y[-1] != 0:
                raise NotInHyperplane(f"image point {y} of {x} is off the hyperplane", witness=x)
    images = {}
    for i, p in enumerate(Z.points):
        q = project(p)
        j = nearest_in(q, X)
        lift = normalize(p[-1] + exact_sqrt(dist2(q, Z.points[j])))
        images[i] = [tuple(y[:-1]) + (lift,) for y in f(j)]
    return MultiMap(Subspace.full(Z), images, f.k)
