#!/usr/bin/env python3
"""Census of reflection arrangements: hyperplane and chamber counts for the
small finite types, plus wall counts inside growing balls for the affine
types.  Handy smoke check that counting and the periodic families agree."""

import argparse
import json

from coxinv.arrangements import arrangement_of, count_chambers
from coxinv.reflection_groups import AffineWeylGroup, FiniteCoxeterGroup
from coxinv.root_systems import build_root_system

FINITE = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("G", 2)]
AFFINE = [("A", 1), ("A", 2), ("B", 2), ("G", 2)]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--radii", type=float, nargs="+",
                        default=[1.0, 2.0, 4.0])
    args = parser.parse_args()

    rows = []
    for label, rank in FINITE:
        g = FiniteCoxeterGroup(build_root_system(label, rank))
        arr = arrangement_of(g)
        rows.append({"type": f"{label}{rank}", "kind": "finite",
                     "hyperplanes": len(arr.base_hyperplanes),
                     "chambers": count_chambers(arr, seed=args.seed),
                     "order": g.order()})
    for label, rank in AFFINE:
        g = AffineWeylGroup(build_root_system(label, rank))
        arr = arrangement_of(g)
        rows.append({"type": f"{label}{rank} affine", "kind": "periodic",
                     "walls_in_ball": {str(r): len(arr.hyperplanes_in_ball(r))
                                       for r in args.radii}})
    print(json.dumps(rows, indent=2))


if __name__ == "__main__":
    main()
