"""Seeded instance generators, brute-force oracles and the property suites."""
from __future__ import annotations

import itertools
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import coloring as col
from . import dynamics as dyn
from .dynamics import MultiMap
from .errors import UnknownSuite, Unsatisfiable
from .geometry import GridSpace, Subspace, dist2, nearest_in
from .hyperspace import KSet, ball_nbhd, hausdorff2, vietoris_member

MODELS = ("uniform_k", "fpf_uniform", "planted_cycles", "geometric", "planar")


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one generated instance; ``seed`` fixes everything else.

    The ambient space is the box ``{0..side-1}^dims`` (for ``planar``, a
    ``side x side`` box centred on the origin whose middle row is the
    hyperplane holding X).  ``size`` is |X| (None means all of Z).  With
    ``closed`` the images are drawn from X instead of Z.
    """

    model: str
    dims: int = 1
    side: int = 10
    size: Optional[int] = None
    k: int = 2
    seed: int = 0
    cycles: tuple = ()
    closed: bool = False
    fpf: bool = False

    def to_dict(self) -> dict:
        d = asdict(self)
        d["cycles"] = list(self.cycles)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "GenSpec":
        d = dict(d)
        d["cycles"] = tuple(d.get("cycles", ()))
        return cls(**d)


@dataclass
class Instance:
    spec: GenSpec
    space: GridSpace
    domain: Subspace
    f: MultiMap
    planted: tuple = ()  # one start point per planted cycle


def _nearest_other(space: GridSpace, pool: list, x: int) -> int:
    pts = space.points
    cands = [i for i in pool if i != x]
    if not cands:
        raise Unsatisfiable(f"no point other than {x} to repair a self-image with")
    return min(cands, key=lambda i: (dist2(pts[x], pts[i]), i))


def _repair(space: GridSpace, pool: list, images: dict, skip=()) -> None:
    """Replace every self-image by the nearest distinct pool point."""
    for x, img in images.items():
        if x in img and x not in skip:
            img.discard(x)
            img.add(_nearest_other(space, pool, x))


def generate(spec: GenSpec) -> Instance:
    if spec.model not in MODELS:
        raise ValueError(f"unknown model {spec.model!r}")
    if spec.k < 1 or spec.side < 1 or spec.dims < 1 or (spec.size is not None and spec.size < 1):
        raise ValueError("sizes and k must be positive")
    rng = random.Random(spec.seed)
    if spec.model == "planar":
        return _planar(spec, rng)
    space = GridSpace.box((spec.side,) * spec.dims)
    n = len(space)
    size = n if spec.size is None else spec.size
    if size > n:
        raise Unsatisfiable(f"|X| = {size} exceeds |Z| = {n}")
    X = sorted(rng.sample(range(n), size))
    pool = X if spec.closed else list(range(n))
    fpf = spec.fpf or spec.model == "fpf_uniform"
    if fpf and len(pool) == 1:
        raise Unsatisfiable("a one-point image pool forces a fixed point")

    images = {}
    planted = []
    if spec.model == "planted_cycles":
        total = sum(spec.cycles)
        if any(c < 1 for c in spec.cycles) or total > size:
            raise Unsatisfiable(f"cannot plant cycles {spec.cycles} in {size} points")
        if fpf and 1 in spec.cycles:
            raise Unsatisfiable("a 1-cycle is a fixed point")
        pts = rng.sample(X, total)
        pos = 0
        for length in spec.cycles:
            cyc = pts[pos:pos + length]
            pos += length
            planted.append(cyc[0])
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = {b}

    if spec.model == "geometric":
        A = [[rng.choice((-1, Fraction(-1, 2), 0, Fraction(1, 2), 1)) for _ in range(spec.dims)]
             for _ in range(spec.dims)]
        half = spec.side // 2
        b = [rng.randint(-half, half) for _ in range(spec.dims)]
        dom = Subspace(space, tuple(X))
        for x in X:
            p = space.points[x]
            c = [sum(A[r][j] * p[j] for j in range(spec.dims)) + b[r] for r in range(spec.dims)]
            img = set()
            for _ in range(rng.randint(1, spec.k)):
                q = tuple(min(max(round(ci + rng.randint(-1, 1)), 0), spec.side - 1) for ci in c)
                i = space.index(q)
                img.add(nearest_in(space.points[i], dom) if spec.closed else i)
            images[x] = img
    else:
        for x in X:
            if x in images:
                continue
            m = rng.randint(1, spec.k)
            images[x] = set(rng.sample(pool, min(m, len(pool))))

    if fpf:
        _repair(space, pool, images)
    dom = Subspace(space, tuple(X))
    f = MultiMap(dom, {x: [space.points[i] for i in sorted(img)] for x, img in images.items()}, spec.k)
    return Instance(spec, space, dom, f, tuple(planted))


def _planar(spec: GenSpec, rng: random.Random) -> Instance:
    s = max(spec.side, 1)
    lo = -(s // 2)
    space = GridSpace.box((s, s), (lo, lo))
    row = [i for i, p in enumerate(space.points) if p[-1] == 0]
    size = len(row) if spec.size is None else spec.size
    if size > len(row):
        raise Unsatisfiable(f"|X| = {size} exceeds the {len(row)} hyperplane points")
    X = sorted(rng.sample(row, size))
    pool = X if spec.closed else row
    fpf = spec.fpf
    if fpf and len(pool) == 1:
        raise Unsatisfiable("a one-point image pool forces a fixed point")
    images = {x: set(rng.sample(pool, min(rng.randint(1, spec.k), len(pool)))) for x in X}
    if fpf:
        _repair(space, pool, images)
    dom = Subspace(space, tuple(X))
    f = MultiMap(dom, {x: [space.points[i] for i in sorted(img)] for x, img in images.items()}, spec.k)
    return Instance(spec, space, dom, f)


# ---------------------------------------------------------------------------
# oracles


def oracle_period(f: MultiMap, x: int, L: int) -> Optional[int]:
    """Smallest M <= L admitting x = x_1, ..., x_M in X with x_{i+1} in f(x_i) and x in f(x_M).

    Plain depth-first enumeration of sequences; it reads images as point sets
    and never touches the orbit graph.
    """
    if x not in f.domain:
        raise ValueError(f"{x} is not in the domain")
    target = f.ambient.points[x]
    index_of = f.ambient.index_of
    dom = f.domain
    best = [None]

    def extend(last: int, length: int):
        img = f(last).elems
        if target in img:
            if best[0] is None or length < best[0]:
                best[0] = length
            return
        bound = L if best[0] is None else best[0] - 1
        if length + 1 > bound:
            return
        for p in img:
            i = index_of(p)
            if i is not None and i in dom:
                extend(i, length + 1)

    extend(x, 1)
    return best[0]


def proper_partitions(vertices: list, adj: dict, classes: int):
    """All partitions of ``vertices`` into exactly ``classes`` independent sets."""
    blocks: list = []

    def rec(pos: int):
        if pos == len(vertices):
            if len(blocks) == classes:
                yield [frozenset(b) for b in blocks]
            return
        if len(blocks) + (len(vertices) - pos) < classes:
            return
        v = vertices[pos]
        for b in blocks:
            if adj[v].isdisjoint(b):
                b.add(v)
                yield from rec(pos + 1)
                b.discard(v)
        if len(blocks) < classes:
            blocks.append({v})
            yield from rec(pos + 1)
            blocks.pop()

    yield from rec(0)


def chromatic_number(f: MultiMap) -> tuple:
    """Exhaustive minimum coloring of the conflict graph: ``(chi, all minimal partitions)``."""
    adj = col.conflict_graph(f)
    verts = sorted(adj)
    for c in range(1, len(verts) + 1):
        parts = list(proper_partitions(verts, adj, c))
        if parts:
            return c, parts
    raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# suites


@dataclass
class SuiteReport:
    suite: str
    budget: int
    seed: int
    instances: int = 0
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "budget": self.budget,
            "seed": self.seed,
            "instances": self.instances,
            "passed": self.passed,
            "failed": self.failed,
            "failures": self.failures,
            "stats": dict(sorted(self.stats.items())),
        }

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.instances == self.budget


@dataclass
class Outcome:
    witness: Optional[dict] = None
    stats: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.witness is None


def _spec_rng(name: str, seed: int, i: int) -> random.Random:
    return random.Random(f"{name}:{seed}:{i}")


def mixed_spec(rng: random.Random, fpf: bool = False, max_size: int = 200,
               models=("uniform_k", "fpf_uniform", "planted_cycles", "geometric")) -> GenSpec:
    model = rng.choice(models)
    dims = rng.choice((1, 2))
    if dims == 1:
        side = rng.randint(2, max_size + 20)
    else:
        side = rng.randint(2, max(2, int((max_size + 20) ** 0.5)))
    n = side ** dims
    size = rng.randint(2 if fpf else 1, min(n, max_size))
    k = rng.randint(1, 3)
    closed = rng.random() < 0.5
    cycles = ()
    if model == "planted_cycles":
        lens = [rng.randint(2 if fpf else 1, 6) for _ in range(rng.randint(1, 3))]
        while lens and sum(lens) > size:
            lens.pop()
        if not lens:
            model = "uniform_k"
        cycles = tuple(lens)
    if (fpf or model == "fpf_uniform") and closed and size < 2:
        closed = False
    return GenSpec(model, dims, side, size, k, rng.getrandbits(32), cycles, closed, fpf)


def _names(xs) -> list:
    return sorted(xs)


def check_period_oracle(inst: Instance, L: int = 8) -> Outcome:
    f = inst.f
    for x in f.domain:
        p = dyn.period_at(f, x)
        o = oracle_period(f, x, L)
        expect = p if p is not None and p <= L else None
        if o != expect:
            return Outcome({"point": x, "period": p, "oracle": o})
    return Outcome(stats={"points": len(f.domain)})


def check_period_iteration(inst: Instance, L: int = 8) -> Outcome:
    f = inst.f
    self_map = f.is_self_map()
    for x in f.domain:
        p = dyn.period_at(f, x)
        px = f.ambient.points[x]
        layers = dyn.internal_image_layers(f, [x], L)
        hits = [m for m, A in enumerate(layers, start=1) if px in A]
        first = hits[0] if hits else None
        if first != (p if p is not None and p <= L else None):
            return Outcome({"point": x, "period": p, "first_return": first})
        if self_map:
            for m, A in enumerate(layers, start=1):
                it = dyn.iterate(f, x, m)
                if not isinstance(it, KSet) or it.points != A:
                    return Outcome({"point": x, "n": m, "reason": "iterate differs from internal images"})
    return Outcome(stats={"self_maps": int(self_map)})


def check_kpow(inst: Instance, nmax: int = 5) -> Outcome:
    f = inst.f
    defined = 0
    for x in f.domain:
        for n in range(1, nmax + 1):
            try:
                r = dyn.iterate(f, x, n)
            except ValueError as e:
                return Outcome({"point": x, "n": n, "reason": str(e)})
            if isinstance(r, dyn.UndefinedAt):
                break
            defined += 1
            if len(r) > f.k ** n:
                return Outcome({"point": x, "n": n, "size": len(r), "bound": f.k ** n})
    return Outcome(stats={"defined_iterates": defined})


def _random_cover(rng: random.Random, X: list, parts: int) -> list:
    sets = [set() for _ in range(parts)]
    for x in X:
        sets[rng.randrange(parts)].add(x)
        if rng.random() < 0.2:
            sets[rng.randrange(parts)].add(x)
    return [s for s in sets if s]


def check_colorable_fpf(inst: Instance) -> Outcome:
    f = inst.f
    rng = random.Random(inst.spec.seed ^ 0x5EED)
    candidates = []
    fixed = dyn.fix_points(f)
    if not fixed:
        C = col.synth_coloring(f)
        candidates.append(C.sets)
        split = []
        for s in C.sets:
            s = sorted(s)
            cut = rng.randint(0, len(s))
            split += [x for x in (set(s[:cut]), set(s[cut:])) if x]
        candidates.append(split)
    X = list(f.domain)
    for _ in range(3):
        candidates.append(_random_cover(rng, X, rng.randint(1, 4)))
    verified = 0
    for sets in candidates:
        C = col.Coloring(sets, kind="plain")
        if col.verify_coloring(f, C).ok:
            verified += 1
            if fixed:
                return Outcome({"fixed_point": min(fixed), "coloring": [sorted(s) for s in C.sets]})
    return Outcome(stats={"verified_colorings": verified, "with_fixed_points": int(bool(fixed))})


def check_fpf_colorable(inst: Instance) -> Outcome:
    f = inst.f
    C = col.synth_coloring(f)
    rep = col.verify_coloring(f, C)
    if not rep.ok:
        return Outcome({"report": rep.to_dict()})
    adj = col.conflict_graph(f)
    maxdeg = max((len(v) for v in adj.values()), default=0)
    if len(C) > maxdeg + 1:
        return Outcome({"classes": len(C), "max_degree": maxdeg})
    if not all(col.is_color(f, F) for F in C.sets):
        return Outcome({"reason": "class is not a color"})
    return Outcome(stats={"classes": len(C)})


BRIGHTEN_EPS = (Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2))


def saturate(f: MultiMap, C: col.Coloring, rng: random.Random) -> col.Coloring:
    """Enlarge each set of C by every point (in random order) that keeps it a color."""
    X = list(f.domain)
    sets = []
    for F in C.sets:
        F = set(F)
        img = set().union(*(f.image_indices(x) for x in F))
        order = X[:]
        rng.shuffle(order)
        for y in order:
            if y in F or y in img:
                continue
            gy = f.image_indices(y)
            if y in gy or not gy.isdisjoint(F):
                continue
            F.add(y)
            img |= gy
        sets.append(F)
    out = col.Coloring(sets)
    col.verify_coloring(f, out)
    return out


def _brighten_instance(name: str, seed: int, i: int) -> tuple:
    rng = _spec_rng(name, seed, i)
    while True:
        spec = mixed_spec(rng, fpf=True)
        inst = generate(spec)
        C = col.synth_coloring(inst.f)
        if len(C) <= 6:
            if i % 2:
                C = saturate(inst.f, C, rng)
            return inst, C, rng.choice(BRIGHTEN_EPS)


def check_brighten(inst: Instance, C: col.Coloring, eps: Fraction) -> Outcome:
    f = inst.f
    n = len(C)
    r = col.brighten(f, C, eps)
    out = r.coloring
    w = None
    no_internal = frozenset(x for x in f.domain if not f.successors(x))
    if len(out) > 2 ** n:
        w = {"reason": "size", "n": n, "size": len(out)}
    elif not r.covered:
        w = {"reason": "cover"}
    elif r.achieved_eps.epsilon <= 0:
        w = {"reason": "achieved eps not positive"}
    elif not all(col.is_bright_color(f, U, r.achieved_eps) for U in out.sets):
        w = {"reason": "not bright"}
    elif not r.base_intersection <= no_internal:
        w = {"reason": "step-0 intersection", "points": _names(r.base_intersection)}
    elif f.is_self_map() and r.base_intersection:
        w = {"reason": "step-0 intersection of a self-map", "points": _names(r.base_intersection)}
    elif r.findings:
        w = {"reason": "findings", "findings": r.findings}
    elif not out.verified:
        w = {"reason": "output does not verify"}
    if w is not None:
        w.update({"eps": str(eps), "coloring": [sorted(s) for s in C.sets]})
        return Outcome(w)
    return Outcome(stats={
        "input_sets": n,
        "output_sets": len(out),
        "degraded": int(r.achieved_eps.epsilon < Fraction(eps)),
        "families": r.families_processed,
        "fattened": sum(1 for s in r.steps for nb in s.neighborhoods if nb.U != nb.core),
    })


NBRIGHT_EPS = (Fraction(0), Fraction(1, 2))


def _nbright_instance(name: str, seed: int, i: int) -> tuple:
    rng = _spec_rng(name, seed, i)
    while True:
        N = rng.randint(1, 3)
        spec = mixed_spec(rng, max_size=120)
        inst = generate(spec)
        if not dyn.periodic_set(inst.f, N):
            return inst, N, rng.choice(NBRIGHT_EPS)


def _gap_ok(f: MultiMap, x: int, N: int, eps: Fraction) -> bool:
    px = f.ambient.points[x]
    e2 = eps * eps
    return all(dist2(px, p) > e2 for A in dyn.internal_image_layers(f, [x], N) for p in A)


def check_nbright_ball(inst: Instance, N: int, eps: Fraction) -> Outcome:
    f = inst.f
    skipped = 0
    for x in f.domain:
        if not _gap_ok(f, x, N, eps):
            skipped += 1
            continue
        r = col.n_bright_ball(f, x, N, eps)
        if r is None:
            return Outcome({"point": x, "N": N, "eps": str(eps)})
        F = col.ball_members(f, x, r)
        if x not in F or not col.is_n_bright(f, F, N, eps):
            return Outcome({"point": x, "N": N, "eps": str(eps), "radius": str(r)})
    return Outcome(stats={"points": len(f.domain), "skipped_points": skipped})


def planar_spec(rng: random.Random) -> GenSpec:
    side = rng.randint(1, 8) * 2 + 1
    size = rng.randint(1, side)
    k = rng.randint(1, 3)
    seed = rng.getrandbits(32)
    fpf = rng.random() < 0.3
    closed = rng.random() < 0.5 and not (fpf and size < 2)
    return GenSpec("planar", 2, side, size, k, seed, closed=closed, fpf=fpf)


def check_extension(inst: Instance) -> Outcome:
    f = inst.f
    g = dyn.extend_map(f)
    Z = inst.space
    for x in f.domain:
        if g(x) != f(x):
            return Outcome({"reason": "g differs from f on X", "point": x})
    for i, p in enumerate(Z.points):
        if i in f.domain or p[-1] < 0:
            continue
        img = g(i)
        if not all(q[-1] > 0 for q in img):
            return Outcome({"reason": "image not lifted", "point": i})
        if Z.indices(img) & f.domain.member_set:
            return Outcome({"reason": "image meets X", "point": i})
    for x in f.domain:
        pf, pg = dyn.period_at(f, x), dyn.period_at(g, x)
        if pf != pg:
            return Outcome({"reason": "period differs", "point": x, "f": pf, "g": pg})
    return Outcome(stats={"grid_points": len(Z)})


def check_restriction(inst: Instance, A: list, M: int) -> Outcome:
    f = inst.f
    fa = f.restrict(A)
    small = dyn.periodic_set(fa, M)
    big = dyn.periodic_set(f, M) & frozenset(A)
    if not small <= big:
        return Outcome({"A": sorted(A), "M": M, "extra": _names(small - big)})
    return Outcome(stats={"restricted_periodic": len(small)})


def _restriction_instance(name: str, seed: int, i: int) -> tuple:
    rng = _spec_rng(name, seed, i)
    inst = generate(mixed_spec(rng))
    p = rng.random()
    X = list(inst.f.domain)
    A = [x for x in X if rng.random() < p] or [rng.choice(X)]
    return inst, A, rng.randint(1, 4)


VH_EPS = (Fraction(1, 2), Fraction(1), Fraction(2))


def vh_space(i: int, seed: int) -> GridSpace:
    if i == 0:
        return GridSpace.line(0, 11, name="line12")
    if i == 1:
        return GridSpace.box((3, 4), name="box3x4")
    rng = _spec_rng("vietoris_hausdorff", seed, i)
    pts = rng.sample(list(itertools.product(range(6), range(6))), rng.randint(1, 12))
    return GridSpace.from_points(pts, name=f"random{i}")


def check_vietoris_hausdorff(space: GridSpace, k: int = 3) -> Outcome:
    ksets = [KSet(c, k) for m in range(1, k + 1) for c in itertools.combinations(space.points, m)]
    pairs = 0
    for eps in VH_EPS:
        e2 = eps * eps
        nbhds = [ball_nbhd(B, eps, space) for B in ksets]
        for B, N in zip(ksets, nbhds):
            for A in ksets:
                h = hausdorff2(A, B)
                m = vietoris_member(A, N)
                pairs += 1
                if (h < e2 and not m) or (m and not h <= e2):
                    return Outcome({"space": space.name, "eps": str(eps), "A": [list(p) for p in A],
                                    "B": [list(p) for p in B], "h2": str(h), "member": m})
    return Outcome(stats={"pairs": pairs, "ksets": len(ksets)})


def check_chromatic(inst: Instance) -> Outcome:
    f = inst.f
    chi, parts = chromatic_number(f)
    C = col.synth_coloring(f)
    if len(C) < chi:
        return Outcome({"synth": len(C), "chi": chi})
    for P in parts:
        if not col.verify_coloring(f, col.Coloring(P)).ok:
            return Outcome({"chi": chi, "partition": [sorted(b) for b in P]})
    return Outcome(stats={"chi_sum": chi, "minimal_colorings": len(parts), "synth_excess": len(C) - chi})


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    case: Callable  # (name, seed, i) -> argument tuple for check
    check: Callable


def _plain(gen_spec: Callable):
    def case(name, seed, i):
        return (generate(gen_spec(_spec_rng(name, seed, i))),)
    return case


SUITES = {s.name: s for s in (
    Suite("period_oracle", "period_at agrees with depth-first sequence enumeration (L=8)",
          _plain(mixed_spec), check_period_oracle),
    Suite("period_iteration", "period M iff first return to x at the M-th internal image",
          _plain(mixed_spec), check_period_iteration),
    Suite("kpow_bound", "|f^n(x)| <= k^n for all defined iterates, n <= 5",
          _plain(mixed_spec), check_kpow),
    Suite("colorable_fpf", "every verified plain coloring belongs to a fixed-point-free map",
          _plain(lambda r: mixed_spec(r, fpf=r.random() < 0.6)), check_colorable_fpf),
    Suite("fpf_colorable", "synth_coloring colors every fixed-point-free map",
          _plain(lambda r: mixed_spec(r, fpf=True)), check_fpf_colorable),
    Suite("brighten_2n", "brighten outputs <= 2^n bright sets covering X",
          _brighten_instance, check_brighten),
    Suite("nbright_ball", "every point without short periods has an N-bright ball",
          _nbright_instance, check_nbright_ball),
    Suite("extension", "the hyperplane extension keeps f, lifts off X and keeps periods",
          _plain(planar_spec), check_extension),
    Suite("restriction", "periodic sets shrink under restriction",
          _restriction_instance, check_restriction),
    Suite("vietoris_hausdorff", "Hausdorff balls and Vietoris neighborhoods agree on grids",
          lambda name, seed, i: (vh_space(i, seed),), check_vietoris_hausdorff),
    Suite("chromatic_oracle", "exhaustive minimum colorings on |X| <= 10",
          _plain(lambda r: mixed_spec(r, fpf=True, max_size=10)), check_chromatic),
)}


def _case_spec(args: tuple) -> Optional[dict]:
    for a in args:
        if isinstance(a, Instance):
            return a.spec.to_dict()
        if isinstance(a, GridSpace):
            return {"space": a.name, "points": [list(p) for p in a.points]}
    return None


def _extra_args(args: tuple) -> dict:
    out = {}
    for a in args[1:]:
        if isinstance(a, Fraction):
            out["eps"] = str(a)
        elif isinstance(a, int):
            out.setdefault("param", a)
        elif isinstance(a, list):
            out["subset"] = sorted(a)
        elif isinstance(a, col.Coloring):
            out["coloring"] = [sorted(s) for s in a.sets]
    return out


def run_case(name: str, seed: int, i: int) -> Outcome:
    """Evaluate instance ``i`` of a suite; replaying a failure calls this again."""
    suite = _suite(name)
    return suite.check(*suite.case(name, seed, i))


def _suite(name: str) -> Suite:
    try:
        return SUITES[name]
    except KeyError:
        raise UnknownSuite(f"unknown suite {name!r}; known: {', '.join(SUITES)}") from None


def run_suite(name: str, budget: int, seed: int, on_instance: Optional[Callable] = None) -> SuiteReport:
    suite = _suite(name)
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    rep = SuiteReport(name, budget, seed)
    stats: dict = {}
    for i in range(budget):
        args = suite.case(name, seed, i)
        outcome = suite.check(*args)
        rep.instances += 1
        if outcome.ok:
            rep.passed += 1
            for key, v in outcome.stats.items():
                stats[key] = stats.get(key, 0) + v
        else:
            rep.failed += 1
            rep.failures.append({"index": i, "spec": _case_spec(args), **_extra_args(args),
                                 "witness": outcome.witness})
        if on_instance is not None:
            on_instance(i, outcome)
    rep.stats = stats
    return rep


def run_all(budgets: dict, seed: int) -> list:
    return [run_suite(name, budget, seed) for name, budget in budgets.items()]


ACCEPTANCE_BUDGETS = {
    "period_oracle": 500,
    "kpow_bound": 500,
    "colorable_fpf": 200,
    "fpf_colorable": 200,
    "brighten_2n": 200,
    "nbright_ball": 100,
    "extension": 50,
    "restriction": 200,
    "vietoris_hausdorff": 3,
}
