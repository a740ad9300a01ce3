"""Walk through one brightening run step by step on a generated instance."""
import argparse
import random
from fractions import Fraction

from hyperdyn import brighten, harness, synth_coloring
from hyperdyn.surd import format_scalar


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--model", default="fpf_uniform", choices=harness.MODELS)
    ap.add_argument("--dims", type=int, default=1)
    ap.add_argument("--side", type=int, default=36)
    ap.add_argument("--size", type=int, default=12)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--eps", default="1/2")
    ap.add_argument("--saturate", action="store_true", help="grow the plain sets so they overlap")
    args = ap.parse_args()

    inst = harness.generate(harness.GenSpec(args.model, args.dims, args.side, args.size, args.k, args.seed,
                                            fpf=True))
    f = inst.f
    C = synth_coloring(f)
    if args.saturate:
        C = harness.saturate(f, C, random.Random(args.seed))
    print(f"|X| = {len(f.domain)}, k = {f.k}, plain coloring with {len(C)} sets:")
    for i, s in enumerate(C.sets):
        print(f"  C{i} = {sorted(s)}")
    r = brighten(f, C, Fraction(args.eps))
    print(f"requested eps {r.requested_eps}, achieved eps {r.achieved_eps}, "
          f"margin^2 {format_scalar(r.margin2)}")
    for s in r.steps:
        print(f"step {s.k}: families of size {s.size}, A1={s.a1}, A2={s.a2}")
        for nb in s.neighborhoods:
            print(f"  {nb.family}: core {sorted(nb.core)} gap^2 {format_scalar(nb.gap2)} "
                  f"delta {format_scalar(nb.delta)} -> U {sorted(nb.U)}")
    print(f"{len(r.coloring)} bright sets (bound 2^{len(C)} - 1 = {2 ** len(C) - 1}), covered={r.covered}")


if __name__ == "__main__":
    main()
