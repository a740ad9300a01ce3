"""Finite exact geometry on integer grids in R^n.

Points are tuples of exact scalars.  All metric comparisons are made on
squared distances so no square roots are ever taken here.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import DimMismatch, EmptySet, NotInDomain
from .surd import Scalar, normalize, parse_scalar, sort_key

Point = tuple  # tuple[Scalar, ...]


def make_point(coords: Iterable) -> Point:
    return tuple(normalize(c) for c in coords)


def point_key(p: Point) -> tuple:
    return tuple(sort_key(c) for c in p)


def dist2(a: Point, b: Point) -> Scalar:
    """Squared Euclidean distance."""
    if len(a) != len(b):
        raise DimMismatch(f"points of dimension {len(a)} and {len(b)}")
    total = 0
    for x, y in zip(a, b):
        d = x - y
        total = total + d * d
    return normalize(total) if not isinstance(total, int) else total


@dataclass(frozen=True, eq=False)
class GridSpace:
    """The ambient finite space: distinct points in canonical lexicographic order."""

    dim: int
    points: tuple
    name: str = ""
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        pts = tuple(make_point(p) for p in self.points)
        for p in pts:
            if len(p) != self.dim:
                raise DimMismatch(f"point {p} in a {self.dim}-dimensional space")
        keys = [point_key(p) for p in pts]
        if any(k1 >= k2 for k1, k2 in zip(keys, keys[1:])):
            raise ValueError("points must be distinct and in lexicographic order")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(pts)})
        object.__setattr__(self, "_balls", {})

    @classmethod
    def from_points(cls, points: Iterable, name: str = "") -> "GridSpace":
        pts = sorted({make_point(p) for p in points}, key=point_key)
        if not pts:
            raise EmptySet("a grid space needs at least one point")
        return cls(len(pts[0]), tuple(pts), name)

    @classmethod
    def box(cls, shape: Sequence[int], lo: Optional[Sequence[int]] = None, name: str = "") -> "GridSpace":
        """All integer points ``lo <= p < lo + shape`` (lo defaults to the origin)."""
        lo = tuple(lo) if lo is not None else (0,) * len(shape)
        axes = [range(o, o + s) for o, s in zip(lo, shape)]
        return cls(len(shape), tuple(itertools.product(*axes)), name)

    @classmethod
    def line(cls, lo: int, hi: int, name: str = "") -> "GridSpace":
        """Integer points ``lo..hi`` inclusive."""
        return cls(1, tuple((i,) for i in range(lo, hi + 1)), name)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def index_of(self, p: Point) -> Optional[int]:
        return self._index.get(p)

    def index(self, p: Point) -> int:
        i = self._index.get(tuple(p))
        if i is None:
            raise NotInDomain(f"{p} is not a grid point")
        return i

    def ball(self, i: int, eps2) -> frozenset:
        """Indices within squared distance ``eps2`` of point ``i`` (memoized)."""
        key = (i, eps2)
        b = self._balls.get(key)
        if b is None:
            c = self.points[i]
            b = frozenset(j for j, z in enumerate(self.points) if dist2(c, z) <= eps2)
            self._balls[key] = b
        return b

    def indices(self, pts: Iterable[Point]) -> frozenset:
        """Indices of the grid points among ``pts``; off-grid points are skipped."""
        out = set()
        for p in pts:
            i = self._index.get(p)
            if i is not None:
                out.add(i)
        return frozenset(out)


@dataclass(frozen=True, eq=False)
class Subspace:
    space: GridSpace
    members: tuple

    def __post_init__(self):
        mem = tuple(sorted(set(self.members)))
        if not mem:
            raise EmptySet("subspace has no members")
        n = len(self.space)
        for i in mem:
            if not isinstance(i, int) or not 0 <= i < n:
                raise NotInDomain(f"index {i!r} out of range for a space of {n} points")
        object.__setattr__(self, "members", mem)
        object.__setattr__(self, "_set", frozenset(mem))

    @classmethod
    def full(cls, space: GridSpace) -> "Subspace":
        return cls(space, tuple(range(len(space))))

    def __contains__(self, i) -> bool:
        return i in self._set

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    @property
    def member_set(self) -> frozenset:
        return self._set

    def points(self) -> list:
        return [self.space.points[i] for i in self.members]

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.space is other.space
                and self.members == other.members)

    def __hash__(self):
        return hash((id(self.space), self.members))


@dataclass(frozen=True)
class Resolution:
    epsilon: Fraction = Fraction(0)

    def __post_init__(self):
        eps = Fraction(self.epsilon)
        if eps < 0:
            raise ValueError("resolution must be nonnegative")
        object.__setattr__(self, "epsilon", eps)

    @property
    def eps2(self) -> Fraction:
        return self.epsilon * self.epsilon

    def __str__(self):
        e = self.epsilon
        return str(e.numerator) if e.denominator == 1 else f"{e.numerator}/{e.denominator}"


def as_resolution(eps: Union[Resolution, int, Fraction, str, None]) -> Resolution:
    if eps is None:
        return Resolution()
    if isinstance(eps, Resolution):
        return eps
    if isinstance(eps, str):
        eps = parse_scalar(eps)
    return Resolution(Fraction(eps))


def within(z: Point, pts: Iterable[Point], eps2) -> bool:
    """True iff some point of ``pts`` is at squared distance at most ``eps2`` from ``z``."""
    return any(dist2(z, s) <= eps2 for s in pts)


def closure_eps(S: Iterable[Point], eps, ambient: GridSpace) -> frozenset:
    """Indices of ambient points within distance eps of ``S``."""
    S = list(S)
    if not S:
        raise EmptySet("closure of an empty set")
    e2 = as_resolution(eps).eps2
    return frozenset(i for i, z in enumerate(ambient.points) if within(z, S, e2))


def nearest_in(p: Point, X: Subspace) -> int:
    """Index of the member of X nearest to ``p``; ties go to the smallest index."""
    pts = X.space.points
    return min(X.members, key=lambda i: (dist2(p, pts[i]), i))


def dist2_to_set(p: Point, X: Subspace) -> Scalar:
    pts = X.space.points
    return min(dist2(p, pts[i]) for i in X.members)
