"""Finite elements of exp_k, Hausdorff distance and Vietoris basic neighborhoods."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import EmptySet
from .geometry import GridSpace, as_resolution, closure_eps, dist2, make_point, point_key


@dataclass(frozen=True)
class KSet:
    """A nonempty set of at most ``bound`` points, stored in canonical order."""

    elems: tuple
    bound: int

    def __post_init__(self):
        pts = sorted({make_point(p) for p in self.elems}, key=point_key)
        if not pts:
            raise EmptySet("KSet must be nonempty")
        if self.bound < 1:
            raise ValueError("bound must be a positive integer")
        if len(pts) > self.bound:
            raise ValueError(f"{len(pts)} points exceed the bound k={self.bound}")
        object.__setattr__(self, "elems", tuple(pts))

    def __len__(self):
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __contains__(self, p):
        return p in self.elems

    @property
    def points(self) -> frozenset:
        return frozenset(self.elems)

    # equality is by point set; the bound only constrains construction
    def __eq__(self, other):
        return isinstance(other, KSet) and self.elems == other.elems

    def __hash__(self):
        return hash(self.elems)


@dataclass(frozen=True)
class VietorisNbhd:
    """``<U_1, ..., U_m>`` with each open given as a concrete point set."""

    opens: tuple

    def __post_init__(self):
        opens = tuple(frozenset(make_point(p) for p in U) for U in self.opens)
        if not opens:
            raise EmptySet("a Vietoris neighborhood needs at least one open set")
        if any(not U for U in opens):
            raise EmptySet("every open set must be nonempty")
        object.__setattr__(self, "opens", opens)

    @classmethod
    def from_indices(cls, space: GridSpace, opens: Iterable[Iterable[int]]) -> "VietorisNbhd":
        return cls(tuple([space.points[i] for i in U] for U in opens))


def vietoris_member(A: KSet, N: VietorisNbhd) -> bool:
    pts = A.elems
    union = frozenset().union(*N.opens)
    if not all(a in union for a in pts):
        return False
    return all(any(a in U for a in pts) for U in N.opens)


def hausdorff2(A: KSet, B: KSet):
    """Squared Hausdorff distance between two finite point sets."""
    ab = max(min(dist2(a, b) for b in B.elems) for a in A.elems)
    ba = max(min(dist2(a, b) for a in A.elems) for b in B.elems)
    return max(ab, ba)


def ball_nbhd(B: KSet, eps, space: GridSpace) -> VietorisNbhd:
    """``<ball(b, eps) : b in B>`` with balls resolved against the grid."""
    eps = as_resolution(eps)
    return VietorisNbhd(tuple(
        [space.points[i] for i in closure_eps([b], eps, space)] + [b] for b in B.elems
    ))
