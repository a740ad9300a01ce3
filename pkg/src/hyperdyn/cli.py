"""Command-line front end: JSON on stdout, a one-line summary on stderr.

Exit status: 0 success, 1 verification failure (with witness JSON), 2 malformed input.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import coloring as col
from . import dynamics as dyn
from . import harness
from . import io
from .errors import HyperdynError, MalformedInput, NotFixedPointFree
from .geometry import as_resolution, closure_eps, dist2, nearest_in, point_key
from .hyperspace import KSet, VietorisNbhd, hausdorff2, vietoris_member
from .surd import format_scalar, parse_scalar


class Failed(Exception):
    """Verification failure: exit status 1 with the payload on stdout."""

    def __init__(self, payload: dict, summary: str):
        super().__init__(summary)
        self.payload = payload


def _indices(text: str, what: str) -> list:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise MalformedInput(f"--{what}: expected comma-separated indices, got {text!r}") from None


def _coords(text: str, what: str) -> tuple:
    try:
        return tuple(parse_scalar(t.strip()) for t in text.split(","))
    except ValueError as e:
        raise MalformedInput(f"--{what}: {e}") from None


def _eps(text):
    try:
        return as_resolution(text if text is not None else "0")
    except (ValueError, TypeError) as e:
        raise MalformedInput(f"--eps: {e}") from None


def _space(args):
    if not args.space:
        raise MalformedInput("--space is required")
    obj = io.read_json(args.space)
    return io.space_from_json(obj, args.space)


def _map(args):
    space, X = _space(args)
    if args.map:
        obj, source = io.read_json(args.map), args.map
    else:
        obj, source = io.read_json(args.space), args.space
        if "map" not in obj:
            raise MalformedInput("--map is required")
    return space, io.map_from_json(obj, space, X, source)


def _coloring(args):
    if not args.coloring:
        raise MalformedInput("--coloring is required")
    return io.coloring_from_json(io.read_json(args.coloring), args.coloring)


def _point(args, f):
    if args.point is None:
        raise MalformedInput("--point is required")
    if args.point not in f.domain:
        raise MalformedInput(f"--point: {args.point} is not in the domain")
    return args.point


def cmd_fix(args):
    _, f = _map(args)
    fix = sorted(dyn.fix_points(f))
    return {"fixed_points": fix}, f"{len(fix)} fixed point(s)"


def cmd_period(args):
    _, f = _map(args)
    if args.dot:
        Path(args.dot).write_text(dyn.orbit_graph(f).to_dot())
    if args.point is None:
        periods = [{"point": x, "period": dyn.period_at(f, x)} for x in f.domain]
        return {"periods": periods}, f"periods of {len(periods)} points"
    x = _point(args, f)
    p = dyn.period_at(f, x)
    return {"point": x, "period": p}, f"period at {x}: {p}"


def cmd_periodic_set(args):
    _, f = _map(args)
    K = args.max if args.max is not None else 1
    if K < 1:
        raise MalformedInput("--max must be a positive integer")
    pts = sorted(dyn.periodic_set(f, K))
    return {"max": K, "points": pts}, f"{len(pts)} point(s) of period <= {K}"


def cmd_iterate(args):
    _, f = _map(args)
    x = _point(args, f)
    n = args.n if args.n is not None else 1
    if n < 1:
        raise MalformedInput("--n must be a positive integer")
    r = dyn.iterate(f, x, n)
    if isinstance(r, dyn.UndefinedAt):
        return {"point": x, "n": n, "undefined_at": r.step}, f"f^{n}({x}) undefined at step {r.step}"
    return {"point": x, "n": n, "image": _pts(f.ambient, r.elems)}, f"|f^{n}({x})| = {len(r)}"


def _pts(space, pts):
    """Grid points as sorted indices, then off-grid points as coordinate lists."""
    on = sorted(i for i in (space.index_of(p) for p in pts) if i is not None)
    off = sorted((p for p in pts if space.index_of(p) is None), key=point_key)
    return on + [io.format_point(p) for p in off]


def cmd_images(args):
    _, f = _map(args)
    S = _indices(args.set or "", "set")
    for s in S:
        if s not in f.domain:
            raise MalformedInput(f"--set: {s} is not in the domain")
    n = args.n if args.n is not None else 1
    if n < 1:
        raise MalformedInput("--n must be a positive integer")
    A = dyn.internal_images(f, S, n)
    return {"set": sorted(S), "n": n, "images": _pts(f.ambient, A)}, f"{len(A)} point(s)"


def _kind_coloring(args, C):
    if args.kind:
        C.kind = args.kind
    if args.N is not None:
        C.N = args.N
    if args.eps is not None:
        C.resolution = _eps(args.eps)
    if C.kind == "nbright" and (C.N is None or C.N < 1):
        raise MalformedInput("nbright checks need --N >= 1")
    return C


def cmd_color_check(args):
    _, f = _map(args)
    C = _kind_coloring(args, _coloring(args))
    rep = col.verify_coloring(f, C)
    payload = rep.to_dict()
    if not rep.ok:
        raise Failed(payload, f"coloring rejected ({len(rep.uncovered)} uncovered, {len(rep.failures)} bad set(s))")
    return payload, f"{C.kind} coloring with {len(C)} set(s) verified"


def cmd_color_synth(args):
    _, f = _map(args)
    try:
        C = col.synth_coloring(f)
    except NotFixedPointFree as e:
        raise Failed({"error": e.code, "witness": e.witness}, str(e)) from None
    return io.coloring_to_json(C), f"{len(C)} color class(es)"


def cmd_brighten(args):
    _, f = _map(args)
    C = _coloring(args) if args.coloring else col.synth_coloring(f)
    try:
        r = col.brighten(f, C, _eps(args.eps))
    except HyperdynError as e:
        raise Failed({"error": e.code, "message": str(e)}, str(e)) from None
    payload = {
        "requested_eps": str(r.requested_eps),
        "achieved_eps": str(r.achieved_eps),
        "input_sets": len(C),
        "sets": len(r.coloring),
        "coloring": io.coloring_to_json(r.coloring),
        "verified": r.coloring.verified,
        "margin2": format_scalar(r.margin2),
        "base_intersection": sorted(r.base_intersection),
        "steps": [
            {
                "k": s.k,
                "size": s.size,
                "families": [
                    {"family": list(nb.family), "core": sorted(nb.core), "delta": format_scalar(nb.delta),
                     "U": sorted(nb.U), "images_in_rest": nb.images_in_rest,
                     "core_disjoint": nb.core_disjoint}
                    for nb in s.neighborhoods
                ],
                "A1": s.a1,
                "A2": s.a2,
            }
            for s in r.steps
        ],
        "findings": r.findings,
    }
    if not r.coloring.verified:
        raise Failed(payload, "brightened coloring failed verification")
    return payload, f"{len(r.coloring)} bright set(s) at eps {r.achieved_eps}"


def cmd_nbright_ball(args):
    _, f = _map(args)
    x = _point(args, f)
    N = args.N if args.N is not None else 1
    if N < 1:
        raise MalformedInput("--N must be a positive integer")
    eps = _eps(args.eps)
    r = col.n_bright_ball(f, x, N, eps)
    payload = {"point": x, "N": N, "eps": str(eps), "radius": None if r is None else format_scalar(r)}
    if r is not None:
        payload["ball"] = sorted(col.ball_members(f, x, r))
    return payload, f"N-bright radius at {x}: {payload['radius']}"


def cmd_extend(args):
    space, f = _map(args)
    g = dyn.extend_map(f)
    if args.point is not None:
        if not 0 <= args.point < len(space):
            raise MalformedInput(f"--point: {args.point} out of range")
        return {"point": args.point, "image": _pts(space, g(args.point).elems)}, "extension image"
    return {"space": io.space_to_json(space, g.domain), "map": io.map_to_json(g)}, \
        f"extended to {len(space)} grid points"


def cmd_gen(args):
    try:
        spec = harness.GenSpec(args.model, args.dims, args.side, args.size, args.k, args.seed,
                               tuple(_indices(args.cycles or "", "cycles")), args.closed, args.fpf)
        inst = harness.generate(spec)
    except (ValueError, TypeError) as e:
        raise MalformedInput(f"gen: {e}") from None
    payload = io.instance_to_json(inst.space, inst.f, {"spec": spec.to_dict(), "planted": list(inst.planted)})
    return payload, f"{spec.model} instance, |X| = {len(inst.domain)}"


def cmd_verify(args):
    names = [args.suite] if args.suite else list(harness.ACCEPTANCE_BUDGETS)
    reports = []
    for name in names:
        budget = args.budget if args.budget is not None else harness.ACCEPTANCE_BUDGETS.get(name, 100)
        try:
            reports.append(harness.run_suite(name, budget, args.seed))
        except HyperdynError as e:
            if e.code == "UnknownSuite":
                raise MalformedInput(str(e)) from None
            raise
    payload = reports[0].to_dict() if args.suite else {"reports": [r.to_dict() for r in reports]}
    failed = sum(r.failed for r in reports)
    summary = ", ".join(f"{r.suite} {r.passed}/{r.instances}" for r in reports)
    if failed:
        raise Failed(payload, summary)
    return payload, summary


def cmd_oracle_period(args):
    _, f = _map(args)
    x = _point(args, f)
    L = args.max if args.max is not None else 8
    p = harness.oracle_period(f, x, L)
    return {"point": x, "max": L, "period": p}, f"oracle period at {x}: {p}"


def cmd_dist2(args):
    a, b = _coords(args.a, "a"), _coords(args.b, "b")
    if len(a) != len(b):
        raise MalformedInput("DimMismatch: --a and --b have different dimensions")
    return {"dist2": format_scalar(dist2(a, b))}, "squared distance"


def cmd_closure(args):
    space, _ = _space(args)
    S = _indices(args.set or "", "set")
    if not S:
        raise MalformedInput("--set: EmptySet")
    for s in S:
        if not 0 <= s < len(space):
            raise MalformedInput(f"--set: index {s} out of range")
    eps = _eps(args.eps)
    cl = closure_eps([space.points[s] for s in S], eps, space)
    return {"set": sorted(S), "eps": str(eps), "closure": sorted(cl)}, f"{len(cl)} point(s)"


def cmd_nearest(args):
    space, X = _space(args)
    p = _coords(args.p, "p")
    if len(p) != space.dim:
        raise MalformedInput("DimMismatch: --p has the wrong dimension")
    i = nearest_in(p, X)
    return {"p": io.format_point(p), "nearest": i}, f"nearest member: {i}"


def _kset(space, text, what, k):
    idx = _indices(text or "", what)
    if not idx:
        raise MalformedInput(f"--{what}: EmptySet")
    for i in idx:
        if not 0 <= i < len(space):
            raise MalformedInput(f"--{what}: index {i} out of range")
    return KSet(tuple(space.points[i] for i in idx), max(k, len(set(idx))))


def cmd_hausdorff(args):
    space, _ = _space(args)
    A = _kset(space, args.A, "A", 1)
    B = _kset(space, args.B, "B", 1)
    return {"hausdorff2": format_scalar(hausdorff2(A, B))}, "squared Hausdorff distance"


def cmd_vietoris(args):
    space, _ = _space(args)
    A = _kset(space, args.A, "A", 1)
    if not args.opens:
        raise MalformedInput("--opens is required")
    opens = [_indices(u, "opens") for u in args.opens.split(";")]
    for U in opens:
        if not U:
            raise MalformedInput("--opens: EmptySet")
        for i in U:
            if not 0 <= i < len(space):
                raise MalformedInput(f"--opens: index {i} out of range")
    m = vietoris_member(A, VietorisNbhd.from_indices(space, opens))
    return {"member": m}, f"member: {m}"


COMMANDS = {
    "fix": (cmd_fix, "fixed points of the map"),
    "period": (cmd_period, "period at a point (or all points); --dot writes the orbit graph"),
    "periodic-set": (cmd_periodic_set, "points of period at most --max"),
    "iterate": (cmd_iterate, "the n-th iterate f^n(x)"),
    "images": (cmd_images, "n-th internal image set of --set"),
    "color-check": (cmd_color_check, "verify a coloring (plain, bright or nbright)"),
    "color-synth": (cmd_color_synth, "synthesize a coloring of a fixed-point-free map"),
    "brighten": (cmd_brighten, "turn a plain coloring into a bright one"),
    "nbright-ball": (cmd_nbright_ball, "largest N-bright ball around a point"),
    "extend": (cmd_extend, "extend a hyperplane map to the whole grid"),
    "gen": (cmd_gen, "generate a seeded instance"),
    "verify": (cmd_verify, "run property suites"),
    "oracle-period": (cmd_oracle_period, "period by exhaustive sequence enumeration up to --max"),
    "dist2": (cmd_dist2, "squared distance of two points"),
    "closure": (cmd_closure, "eps-fattening of a set of grid points"),
    "nearest": (cmd_nearest, "nearest member of X to a point"),
    "hausdorff": (cmd_hausdorff, "squared Hausdorff distance of two point sets"),
    "vietoris": (cmd_vietoris, "membership in a Vietoris neighborhood"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperdyn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--space")
        p.add_argument("--map")
        p.add_argument("--coloring")
        p.add_argument("--point", type=int)
        p.add_argument("--N", type=int)
        p.add_argument("--eps")
        p.add_argument("--max", type=int)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--budget", type=int)
        p.add_argument("--dot")
        if name in ("iterate", "images"):
            p.add_argument("--n", type=int)
        if name in ("images", "closure"):
            p.add_argument("--set")
        if name == "color-check":
            p.add_argument("--kind", choices=col.KINDS)
        if name == "gen":
            p.add_argument("--model", choices=harness.MODELS, required=True)
            p.add_argument("--dims", type=int, default=1)
            p.add_argument("--side", type=int, default=10)
            p.add_argument("--size", type=int)
            p.add_argument("--k", type=int, default=2)
            p.add_argument("--cycles")
            p.add_argument("--closed", action="store_true")
            p.add_argument("--fpf", action="store_true")
        if name == "verify":
            p.add_argument("--suite")
        if name == "dist2":
            p.add_argument("--a", required=True)
            p.add_argument("--b", required=True)
        if name == "nearest":
            p.add_argument("--p", required=True)
        if name in ("hausdorff", "vietoris"):
            p.add_argument("--A", required=True)
        if name == "hausdorff":
            p.add_argument("--B", required=True)
        if name == "vietoris":
            p.add_argument("--opens", help="semicolon-separated index lists, e.g. '0,1;2'")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        payload, summary = handler(args)
    except Failed as e:
        sys.stdout.write(io.dumps(e.payload))
        print(f"{args.command}: FAILED: {e}", file=sys.stderr)
        return 1
    except (HyperdynError, ValueError) as e:
        code = getattr(e, "code", "MalformedInput")
        sys.stdout.write(io.dumps({"error": code, "message": str(e)}))
        print(f"{args.command}: {code}: {e}", file=sys.stderr)
        return 2
    sys.stdout.write(io.dumps(payload))
    print(f"{args.command}: {summary}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
