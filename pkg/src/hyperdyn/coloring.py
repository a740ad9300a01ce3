"""Colors, bright colors and colorings of multivalued maps.

A set F of domain points is a color of f when it misses the union of the
images of its own points, and a bright color at resolution eps when it misses
the eps-fattening of that union.  :func:`brighten` turns an n-sized coloring
into an at most (2**n - 1)-sized bright one by the subfamily induction;
:func:`synth_coloring` builds a coloring of a fixed-point-free map from its
conflict graph.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .dynamics import MultiMap, fix_points, internal_image_layers, union_images
from .errors import NotFixedPointFree, NotInDomain, UnverifiedInput
from .geometry import Resolution, as_resolution, dist2
from .surd import exact_sqrt, normalize

log = logging.getLogger(__name__)

KINDS = ("plain", "bright", "nbright")


@dataclass
class Coloring:
    sets: list
    resolution: Resolution = field(default_factory=Resolution)
    kind: str = "plain"
    N: Optional[int] = None
    verified: bool = False

    def __post_init__(self):
        self.sets = [frozenset(s) for s in self.sets]
        self.resolution = as_resolution(self.resolution)
        if self.kind not in KINDS:
            raise ValueError(f"unknown coloring kind {self.kind!r}")
        if self.kind == "nbright" and (self.N is None or self.N < 1):
            raise ValueError("an nbright coloring needs N >= 1")

    def __len__(self):
        return len(self.sets)


def _check_subset(f: MultiMap, F) -> frozenset:
    F = frozenset(F)
    for x in F:
        if x not in f.domain:
            raise NotInDomain(f"{x} is not in the domain", witness=x)
    return F


def _hit(f: MultiMap, F: frozenset, pts: Iterable, eps2) -> Optional[tuple]:
    """A pair (x, p) with x in F and p in ``pts`` at squared distance <= eps2, if any."""
    space = f.ambient
    index_of = space.index_of
    off = []
    for p in pts:
        i = index_of(p)
        if i is None:
            off.append(p)
            continue
        if eps2 == 0:
            if i in F:
                return i, p
            continue
        near = space.ball(i, eps2)
        if not near.isdisjoint(F):
            return min(near & F), p
    for p in off:
        for x in sorted(F):
            if dist2(space.points[x], p) <= eps2:
                return x, p
    return None


def is_color(f: MultiMap, F) -> bool:
    F = _check_subset(f, F)
    return all(f.image_indices(x).isdisjoint(F) for x in F)


def is_bright_color(f: MultiMap, F, eps) -> bool:
    F = _check_subset(f, F)
    if not F:
        return True
    return _hit(f, F, union_images(f, F), as_resolution(eps).eps2) is None


def is_n_bright(f: MultiMap, F, N: int, eps) -> bool:
    """F misses the eps-fattening of its n-th internal image set for every n <= N."""
    if N < 1:
        raise ValueError("N must be a positive integer")
    F = _check_subset(f, F)
    if not F:
        return True
    e2 = as_resolution(eps).eps2
    return all(not A or _hit(f, F, A, e2) is None for A in internal_image_layers(f, F, N))


@dataclass
class SetFailure:
    set_index: int
    reason: str
    witness: object
    source: Optional[int] = None
    step: Optional[int] = None


@dataclass
class VerificationReport:
    ok: bool
    kind: str
    eps: Resolution
    uncovered: list
    failures: list

    def to_dict(self) -> dict:
        failures = []
        for s in self.failures:
            d = {"set": s.set_index, "reason": s.reason, "witness": s.witness}
            if s.source is not None:
                d["source"] = s.source
            if s.step is not None:
                d["step"] = s.step
            failures.append(d)
        return {
            "ok": self.ok,
            "kind": self.kind,
            "eps": str(self.eps),
            "uncovered": list(self.uncovered),
            "failures": failures,
        }


def _set_failure(f: MultiMap, idx: int, F: frozenset, kind: str, eps2, N) -> Optional[SetFailure]:
    outside = sorted(x for x in F if x not in f.domain)
    if outside:
        return SetFailure(idx, "outside domain", outside[0])
    if not F:
        return None
    if kind == "plain" or kind == "bright":
        e2 = 0 if kind == "plain" else eps2
        for x in sorted(F):
            hit = _hit(f, F, f(x).elems, e2)
            if hit is not None:
                reason = "not a color" if kind == "plain" else "not bright"
                return SetFailure(idx, reason, hit[0], source=x)
        return None
    for n, A in enumerate(internal_image_layers(f, F, N), start=1):
        if A:
            hit = _hit(f, F, A, eps2)
            if hit is not None:
                return SetFailure(idx, "not n-bright", hit[0], step=n)
    return None


def verify_coloring(f: MultiMap, C: Coloring) -> VerificationReport:
    """Check that C covers X and that each set satisfies the predicate of ``C.kind``.

    Sets ``C.verified`` to the outcome.
    """
    covered = frozenset().union(*C.sets) if C.sets else frozenset()
    uncovered = [x for x in f.domain if x not in covered]
    eps = C.resolution
    failures = []
    for i, F in enumerate(C.sets):
        bad = _set_failure(f, i, F, C.kind, eps.eps2, C.N)
        if bad is not None:
            failures.append(bad)
    ok = not uncovered and not failures
    C.verified = ok
    return VerificationReport(ok, C.kind, eps, uncovered, failures)


def conflict_graph(f: MultiMap) -> dict:
    """Symmetric adjacency on X: u ~ v iff v in f(u) or u in f(v), u != v."""
    adj = {x: set() for x in f.domain}
    for u in f.domain:
        for v in f.successors(u):
            if v != u:
                adj[u].add(v)
                adj[v].add(u)
    return adj


def dsatur(adj: dict) -> dict:
    """DSATUR greedy coloring; ties broken by degree, then smallest vertex."""
    color = {}
    sat = {v: set() for v in adj}
    deg = {v: len(adj[v]) for v in adj}
    uncolored = set(adj)
    while uncolored:
        v = min(uncolored, key=lambda u: (-len(sat[u]), -deg[u], u))
        c = 0
        while c in sat[v]:
            c += 1
        color[v] = c
        uncolored.discard(v)
        for w in adj[v]:
            if w in uncolored:
                sat[w].add(c)
    return color


def synth_coloring(f: MultiMap) -> Coloring:
    """Coloring of a fixed-point-free map by the color classes of its conflict graph."""
    fixed = fix_points(f)
    if fixed:
        w = min(fixed)
        raise NotFixedPointFree(f"{w} is a fixed point", witness=w)
    color = dsatur(conflict_graph(f))
    classes = [set() for _ in range(max(color.values()) + 1)]
    for v, c in color.items():
        classes[c].add(v)
    C = Coloring(classes, kind="plain")
    verify_coloring(f, C)
    return C


# ---------------------------------------------------------------------------
# brightening


@dataclass
class Neighborhood:
    family: tuple           # indices into the input coloring
    core: frozenset         # intersection of the family minus the previous open set
    gap2: object            # squared distance from core to the union of its images
    delta: object           # fattening radius actually used
    U: frozenset
    images_in_rest: bool    # images of core inside X lie in the union of the other sets
    core_disjoint: bool     # core misses the union of the other sets
    core_bright: bool


@dataclass
class BrightenStep:
    k: int
    size: int
    open_before: frozenset
    open_after: frozenset
    neighborhoods: list
    a1: bool
    a2: bool


@dataclass
class BrightenResult:
    coloring: Coloring
    requested_eps: Resolution
    achieved_eps: Resolution
    steps: list
    base_intersection: frozenset
    margin2: object
    covered: bool
    findings: list

    @property
    def families_processed(self) -> int:
        return sum(len(s.neighborhoods) for s in self.steps)


def _popcount(m: int) -> int:
    return bin(m).count("1")


def _fatten(f: MultiMap, core: frozenset, gap2, eps: Resolution):
    """Largest halving-search radius whose fattening of ``core`` is a bright color."""
    if not isinstance(gap2, (int, Fraction)):
        return core, 0
    pts = f.ambient.points
    others = {}
    for y in f.domain:
        if y not in core:
            others[y] = min(dist2(pts[y], pts[c]) for c in core)
    if others:
        dmin2 = min(others.values())
        delta = (exact_sqrt(gap2) - eps.epsilon) / 2
        while delta > 0 and delta * delta >= dmin2:
            d2 = delta * delta
            U = core | frozenset(y for y, d in others.items() if d <= d2)
            if is_bright_color(f, U, eps):
                return U, normalize(delta)
            delta = delta / 2
    return core, 0


def _run(f: MultiMap, sets: list, eps: Resolution):
    n = len(sets)
    X = f.domain.member_set
    full = (1 << n) - 1

    def inter(mask):
        out = X
        for i in range(n):
            if mask >> i & 1:
                out = out & sets[i]
        return out

    def union(mask):
        out = frozenset()
        for i in range(n):
            if mask >> i & 1:
                out = out | sets[i]
        return out

    O = frozenset()
    output = []
    steps = []
    for k in range(n):
        size = n - k
        masks = [m for m in range(1, full + 1) if _popcount(m) == size]
        chosen = []
        for m in masks:
            core = inter(m) - O
            if core:
                chosen.append((m, core))
        nbhds = []
        for m, core in chosen:
            rest = union(full & ~m)
            inside = frozenset().union(*(f.successors(x) for x in core))
            images_in_rest = inside <= rest
            core_disjoint = core.isdisjoint(rest)
            imgs = union_images(f, core)
            cpts = [f.ambient.points[c] for c in core]
            gap2 = min(dist2(c, p) for c in cpts for p in imgs)
            core_bright = gap2 > eps.eps2
            if core_bright:
                U, delta = _fatten(f, core, gap2, eps)
            else:
                U, delta = core, 0
            family = tuple(i for i in range(n) if m >> i & 1)
            nbhds.append(Neighborhood(family, core, gap2, delta, U, images_in_rest, core_disjoint, core_bright))
            output.append(U)
        O_new = O.union(*(nb.U for nb in nbhds)) if nbhds else O
        big = [m for m in range(1, full + 1) if _popcount(m) >= size]
        a1 = all(inter(m) <= O_new for m in big)
        covered_so_far = frozenset().union(*output) if output else frozenset()
        a2 = O_new <= covered_so_far and len(output) <= len(big)
        steps.append(BrightenStep(k, size, O, O_new, nbhds, a1, a2))
        O = O_new
    return steps, output


def brighten(f: MultiMap, C: Coloring, eps) -> BrightenResult:
    """Bright coloring of at most 2**len(C) - 1 sets built from a plain coloring C.

    If some core is not bright at the requested resolution, the resolution is
    halved until every core is, and the result at that resolution is returned.
    """
    eps = as_resolution(eps)
    plain = Coloring(C.sets, kind="plain")
    if not verify_coloring(f, plain).ok:
        raise UnverifiedInput("input is not a verified plain coloring")
    sets = list(plain.sets)
    n = len(sets)
    base = frozenset(f.domain.member_set).intersection(*sets) if sets else frozenset()

    cur = eps
    while True:
        steps, output = _run(f, sets, cur)
        if all(nb.core_bright for s in steps for nb in s.neighborhoods):
            break
        if cur.epsilon == 0:  # cores are colors, so unreachable
            raise AssertionError("a core failed to be a color")
        cur = Resolution(cur.epsilon / 2)

    findings = []
    for s in steps:
        for nb in s.neighborhoods:
            if not nb.images_in_rest:
                findings.append(f"step {s.k}: images of core of {nb.family} leave the other sets")
            if not nb.core_disjoint:
                findings.append(f"step {s.k}: core of {nb.family} meets the other sets")
        if not s.a1:
            findings.append(f"step {s.k}: A1 fails")
        if not s.a2:
            findings.append(f"step {s.k}: A2 fails")
    covered = frozenset().union(*output) >= f.domain.member_set if output else False
    if not covered:
        findings.append("output does not cover X")
    if len(output) > 2 ** n - 1:
        findings.append(f"{len(output)} sets exceed 2^n - 1 = {2 ** n - 1}")
    for msg in findings:
        log.warning("brighten: %s", msg)

    out = Coloring(output, resolution=cur, kind="bright")
    verify_coloring(f, out)
    margin2 = None
    for U in output:
        imgs = union_images(f, U)
        pts = [f.ambient.points[u] for u in U]
        g = min(dist2(a, p) for a in pts for p in imgs)
        margin2 = g if margin2 is None or g < margin2 else margin2
    return BrightenResult(out, eps, cur, steps, base, margin2, covered, findings)


def n_bright_ball(f: MultiMap, x: int, N: int, eps) -> Optional[object]:
    """Largest radius r, among 0 and the distances from x to X, whose ball is N-bright.

    Returns the exact radius (rational or surd), or None when {x} itself fails.
    Growing F only grows its internal images, so the scan stops at the first
    failing radius.
    """
    if x not in f.domain:
        raise NotInDomain(f"{x} is not in the domain", witness=x)
    eps = as_resolution(eps)
    pts = f.ambient.points
    d = {y: dist2(pts[x], pts[y]) for y in f.domain}
    radii2 = sorted(set(d.values()) | {0})
    best = None
    for r2 in radii2:
        F = frozenset(y for y, dy in d.items() if dy <= r2)
        if not is_n_bright(f, F, N, eps):
            break
        best = r2
    return None if best is None else exact_sqrt(Fraction(best))


def ball_members(f: MultiMap, x: int, r) -> frozenset:
    """Closed ball of radius r around x, intersected with X."""
    pts = f.ambient.points
    r2 = r * r
    return frozenset(y for y in f.domain if dist2(pts[x], pts[y]) <= r2)
