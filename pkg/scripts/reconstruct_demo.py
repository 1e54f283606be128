#!/usr/bin/env python3
"""Walk one line-orthogonality reconstruction end to end, verbosely.

Draws a pair of lines (orthogonal unless --oblique), prints the common
perpendicular feet and the wrapping pair handed to the typed oracle, then
compares the witness-mode and sampled-mode verdicts against the direct
direction check they are meant to reproduce.
"""

import argparse
import json
import random
import sys

from orthokernel.generators import GenConfig, gen_line_pair
from orthokernel.linalg import vector_to_wire
from orthokernel.ortho import TypedPerpParams
from orthokernel.reconstruct import (
    ReconstructionMode,
    common_perpendicular_feet,
    ground_truth_oracle,
    lemma2_witness,
    line_perp_ground_truth,
    reconstruct_line_perp,
)


def show(name, flat):
    print(f"  {name} = {json.dumps(flat.to_wire())}")


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--dim", type=int, default=5)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--k1", type=int, default=2)
    p.add_argument("--k2", type=int, default=3)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument(
        "--oblique", action="store_true", help="draw non-orthogonal lines"
    )
    args = p.parse_args()

    params = TypedPerpParams(args.m, args.k1, args.k2)
    if not params.satisfiable_in(args.dim):
        print(
            f"error: (m,k1,k2)=({params.m},{params.k1},{params.k2}) needs"
            f" ambient dimension at least {params.k1 + params.k2 - params.m}",
            file=sys.stderr,
        )
        return 2
    cfg = GenConfig(dim=args.dim, seed=args.seed, perp_params=params)
    rng = random.Random(args.seed)
    l1, l2 = gen_line_pair(cfg, rng, orthogonal=not args.oblique)
    truth = line_perp_ground_truth(l1, l2)

    print(
        f"ambient dimension {args.dim},"
        f" oracle type (m,k1,k2)=({params.m},{params.k1},{params.k2})"
    )
    print("lines:")
    show("l1", l1)
    show("l2", l2)
    print(f"direct direction check: {truth}")

    if truth:
        q, pt = common_perpendicular_feet(l1, l2)
        print("common perpendicular feet:")
        print(f"  on l1: {json.dumps(vector_to_wire(q))}")
        print(f"  on l2: {json.dumps(vector_to_wire(pt))}")
        if params.k2 > 1:
            x1, x2 = lemma2_witness(
                l1, l2, params.k1 - params.m, params.k2
            )
            print("wrapping pair handed to the oracle:")
            show("x1", x1)
            show("x2", x2)

    oracle = ground_truth_oracle(params)
    w = reconstruct_line_perp(
        l1, l2, params, oracle, ReconstructionMode.witness()
    )
    s = reconstruct_line_perp(
        l1, l2, params, oracle, ReconstructionMode.sampled(args.samples), rng
    )
    print(f"witness mode verdict: {w}")
    print(f"sampled mode verdict (K={args.samples}): {s}")
    print("agreement with direct check:", "ok" if w == truth else "MISMATCH")
    return 0 if w == truth else 1


if __name__ == "__main__":
    sys.exit(main())
