"""Freeze generator outputs as golden files under fixtures/<model>/<seed>.json.

Run from the repository root; existing files are overwritten.
"""
import argparse
from pathlib import Path

from hyperdyn import harness, io

GOLDEN = (
    harness.GenSpec("uniform_k", dims=1, side=5, size=5, k=2, seed=7),
    harness.GenSpec("fpf_uniform", dims=2, side=4, size=8, k=2, seed=11),
    harness.GenSpec("planted_cycles", dims=1, side=12, size=9, k=2, seed=3, cycles=(2, 3)),
    harness.GenSpec("geometric", dims=2, side=5, size=10, k=3, seed=5),
    harness.GenSpec("planar", dims=2, side=7, size=4, k=2, seed=13),
)


def render(spec: harness.GenSpec) -> str:
    inst = harness.generate(spec)
    return io.dumps(io.instance_to_json(inst.space, inst.f, {"spec": spec.to_dict(),
                                                            "planted": list(inst.planted)}))


def path_for(root: Path, spec: harness.GenSpec) -> Path:
    return root / spec.model / f"{spec.seed}.json"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="fixtures")
    root = Path(ap.parse_args().out)
    for spec in GOLDEN:
        p = path_for(root, spec)
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_text(render(spec))
        print(p)


if __name__ == "__main__":
    main()
