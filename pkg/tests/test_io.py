import json

import pytest
from hypothesis import given

from hyperdyn import Coloring, extend_map, io
from hyperdyn.errors import MalformedInput
from hyperdyn.harness import GenSpec, generate

from conftest import maps


@given(maps())
def test_instance_roundtrip(f):
    obj = json.loads(io.dumps(io.instance_to_json(f.ambient, f)))
    space, X = io.space_from_json(obj)
    g = io.map_from_json(obj, space, X)
    assert space.points == f.ambient.points
    assert g.domain.members == f.domain.members
    assert g.table() == f.table()


def test_offgrid_images_roundtrip():
    inst = generate(GenSpec("planar", 2, 5, 3, 2, 1))
    g = extend_map(inst.f)
    obj = json.loads(io.dumps(io.instance_to_json(inst.space, g)))
    h = io.map_from_json(obj, *io.space_from_json(obj))
    assert h.table() == g.table()


def test_coloring_roundtrip():
    C = Coloring([{2, 0}, {1}], resolution="1/3", kind="nbright", N=2)
    D = io.coloring_from_json(json.loads(io.dumps(io.coloring_to_json(C))))
    assert (D.sets, D.resolution, D.kind, D.N) == (C.sets, C.resolution, C.kind, C.N)
    assert io.coloring_to_json(C)["sets"] == [[0, 2], [1]]


@pytest.mark.parametrize("obj, needle", [
    ({"dim": 1}, "missing key 'points'"),
    ({"dim": 1, "points": [[1], [0]]}, "lexicographic"),
    ({"dim": 2, "points": [[0]]}, "DimMismatch"),
    ({"dim": 1, "points": [["x"]]}, "$.points[0]"),
    ({"dim": 1, "points": [[0]], "X": []}, "EmptySet"),
    ({"dim": 1, "points": [[0]], "X": [3]}, "out of range"),
])
def test_space_errors_name_the_path(obj, needle):
    with pytest.raises(MalformedInput) as e:
        io.space_from_json(obj, "s.json")
    assert needle in str(e.value) and str(e.value).startswith("s.json: ")


@pytest.mark.parametrize("obj, needle", [
    ({"k": 1}, "missing key 'images'"),
    ({"k": 0, "images": {}}, "k must be"),
    ({"k": 1, "images": {"0": [1, 2]}}, "more than k=1"),
    ({"k": 1, "images": {"0": []}}, "EmptySet"),
    ({"k": 1, "images": {"0": [9]}}, "out of range"),
    ({"k": 1, "images": {"0": [[1, 2]]}}, "DimMismatch"),
    ({"k": 1, "images": {"0": [1], "1": [0]}}, "no image for domain index 2"),
    ({"k": 1, "images": {"a": [1]}}, "integer indices"),
])
def test_map_errors_name_the_path(obj, needle):
    space, X = io.space_from_json({"dim": 1, "points": [[0], [1], [2]]})
    with pytest.raises(MalformedInput) as e:
        io.map_from_json(obj, space, X, "m.json")
    assert needle in str(e.value)


def test_read_json_errors(tmp_path):
    with pytest.raises(MalformedInput, match="cannot read"):
        io.read_json(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(MalformedInput, match="invalid JSON"):
        io.read_json(bad)
