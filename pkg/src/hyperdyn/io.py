"""JSON file formats for spaces, maps, colorings and generated instances.

space:    {"dim": n, "points": [[int, ...], ...], "X": [index, ...]}
map:      {"k": k, "X": [index, ...], "images": {"i": [index | [coord, ...], ...]}}
coloring: {"eps": "p/q", "kind": "plain|bright|nbright", "N": int, "sets": [[index, ...]]}

Rationals are written as "p/q" strings and quadratic surds as "a+b*sqrt(m)".
A file holding {"space": ..., "map": ...} (a generated instance) is accepted
wherever a space or map file is expected.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

from .coloring import KINDS, Coloring
from .dynamics import MultiMap
from .errors import HyperdynError, MalformedInput
from .geometry import GridSpace, Point, Subspace, as_resolution, point_key
from .surd import format_scalar, parse_scalar


def format_point(p: Point) -> list:
    return [format_scalar(c) for c in p]


def dumps(obj) -> str:
    """Stable serialization used for every report."""
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def read_json(path, source: Optional[str] = None):
    source = source or str(path)
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise MalformedInput(f"{source}: cannot read ({e.strerror})") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"{source}: invalid JSON at line {e.lineno} col {e.colno}: {e.msg}") from None


def _fail(source: str, path: str, reason: str):
    raise MalformedInput(f"{source}: {path}: {reason}")


def _int(v, source, path) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        _fail(source, path, f"expected an integer, got {v!r}")
    return v


def _list(v, source, path) -> list:
    if not isinstance(v, list):
        _fail(source, path, f"expected a list, got {type(v).__name__}")
    return v


def space_to_json(space: GridSpace, X: Optional[Subspace] = None) -> dict:
    out = {"dim": space.dim, "points": [format_point(p) for p in space.points]}
    if X is not None:
        out["X"] = list(X.members)
    if space.name:
        out["name"] = space.name
    return out


def space_from_json(obj, source: str = "<space>") -> tuple:
    """Returns ``(GridSpace, Subspace)``; X defaults to the whole space."""
    if isinstance(obj, dict) and "space" in obj and isinstance(obj["space"], dict):
        return space_from_json(obj["space"], source)
    if not isinstance(obj, dict):
        _fail(source, "$", "expected an object")
    for key in ("dim", "points"):
        if key not in obj:
            _fail(source, "$", f"missing key {key!r}")
    dim = _int(obj["dim"], source, "$.dim")
    if dim < 1:
        _fail(source, "$.dim", "dimension must be positive")
    pts = []
    for i, p in enumerate(_list(obj["points"], source, "$.points")):
        _list(p, source, f"$.points[{i}]")
        if len(p) != dim:
            _fail(source, f"$.points[{i}]", f"DimMismatch: expected {dim} coordinates, got {len(p)}")
        try:
            pts.append(tuple(parse_scalar(c) for c in p))
        except ValueError as e:
            _fail(source, f"$.points[{i}]", str(e))
    if not pts:
        _fail(source, "$.points", "no points")
    keys = [point_key(p) for p in pts]
    for i in range(1, len(keys)):
        if keys[i - 1] >= keys[i]:
            _fail(source, f"$.points[{i}]", "points must be distinct and in lexicographic order")
    space = GridSpace(dim, tuple(pts), obj.get("name", "") or "")
    X = _members(obj.get("X"), space, source, "$.X")
    return space, X


def _members(raw, space: GridSpace, source: str, path: str) -> Subspace:
    if raw is None:
        return Subspace.full(space)
    idx = []
    for j, i in enumerate(_list(raw, source, path)):
        i = _int(i, source, f"{path}[{j}]")
        if not 0 <= i < len(space):
            _fail(source, f"{path}[{j}]", f"index {i} out of range (space has {len(space)} points)")
        idx.append(i)
    if not idx:
        _fail(source, path, "EmptySet: the domain is empty")
    return Subspace(space, tuple(idx))


def map_to_json(f: MultiMap) -> dict:
    images = {}
    for x in f.domain:
        entry = []
        for p in f(x):
            i = f.ambient.index_of(p)
            entry.append(i if i is not None else format_point(p))
        images[str(x)] = entry
    return {"k": f.k, "X": list(f.domain.members), "images": images}


def map_from_json(obj, space: GridSpace, X: Optional[Subspace] = None,
                  source: str = "<map>") -> MultiMap:
    if isinstance(obj, dict) and "map" in obj and isinstance(obj["map"], dict):
        return map_from_json(obj["map"], space, X, source)
    if not isinstance(obj, dict):
        _fail(source, "$", "expected an object")
    for key in ("k", "images"):
        if key not in obj:
            _fail(source, "$", f"missing key {key!r}")
    k = _int(obj["k"], source, "$.k")
    if k < 1:
        _fail(source, "$.k", "k must be a positive integer")
    dom = _members(obj["X"], space, source, "$.X") if "X" in obj else (X or Subspace.full(space))
    raw = obj["images"]
    if not isinstance(raw, dict):
        _fail(source, "$.images", "expected an object keyed by domain index")
    images = {}
    for key, entry in raw.items():
        path = f"$.images[{key!r}]"
        try:
            x = int(key)
        except ValueError:
            _fail(source, path, "keys must be integer indices")
        if x not in dom:
            _fail(source, path, f"index {x} is not in the domain")
        pts = []
        for j, e in enumerate(_list(entry, source, path)):
            if isinstance(e, list):
                if len(e) != space.dim:
                    _fail(source, f"{path}[{j}]", f"DimMismatch: expected {space.dim} coordinates")
                try:
                    pts.append(tuple(parse_scalar(c) for c in e))
                except ValueError as err:
                    _fail(source, f"{path}[{j}]", str(err))
            else:
                i = _int(e, source, f"{path}[{j}]")
                if not 0 <= i < len(space):
                    _fail(source, f"{path}[{j}]", f"index {i} out of range")
                pts.append(space.points[i])
        if not pts:
            _fail(source, path, "EmptySet: image must be nonempty")
        if len(set(pts)) > k:
            _fail(source, path, f"image has more than k={k} points")
        images[x] = pts
    for x in dom:
        if x not in images:
            _fail(source, "$.images", f"no image for domain index {x}")
    try:
        return MultiMap(dom, images, k)
    except HyperdynError as e:
        _fail(source, "$", str(e))


def coloring_to_json(C: Coloring) -> dict:
    out = {"eps": str(C.resolution), "kind": C.kind}
    if C.N is not None:
        out["N"] = C.N
    out["sets"] = [sorted(s) for s in C.sets]
    return out


def coloring_from_json(obj, source: str = "<coloring>") -> Coloring:
    if not isinstance(obj, dict):
        _fail(source, "$", "expected an object")
    if "sets" not in obj:
        _fail(source, "$", "missing key 'sets'")
    kind = obj.get("kind", "plain")
    if kind not in KINDS:
        _fail(source, "$.kind", f"unknown kind {kind!r}")
    try:
        eps = as_resolution(obj.get("eps", 0))
    except (ValueError, TypeError) as e:
        _fail(source, "$.eps", str(e))
    N = obj.get("N")
    if N is not None:
        N = _int(N, source, "$.N")
    if kind == "nbright" and (N is None or N < 1):
        _fail(source, "$.N", "nbright colorings need N >= 1")
    sets = []
    for i, s in enumerate(_list(obj["sets"], source, "$.sets")):
        sets.append([_int(v, source, f"$.sets[{i}][{j}]") for j, v in enumerate(_list(s, source, f"$.sets[{i}]"))])
    return Coloring(sets, resolution=eps, kind=kind, N=N)


def instance_to_json(space: GridSpace, f: MultiMap, extra: Optional[dict] = None) -> dict:
    out = dict(extra or {})
    out["space"] = space_to_json(space, f.domain)
    out["map"] = map_to_json(f)
    return out
