#!/usr/bin/env python3
"""Build the separating map for a group spec and print the full battery of
reports: invariance, separation, oracle audit, transnormality.  The same
checks the CLI runs, but in one place with all the numbers visible."""

import argparse
import json

from coxinv.cli import parse_group_spec
from coxinv.oracle import oracle_separation_audit
from coxinv.reflection_groups import as_product
from coxinv.separator import (
    build_separating_map,
    check_invariance,
    check_separation,
)
from coxinv.transnormal import check_transnormal


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--group", default='{"type": "A", "rank": 2}',
                        help="GroupSpec JSON")
    parser.add_argument("--pairs", type=int, default=300)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--radius", type=int, default=3)
    args = parser.parse_args()

    group = parse_group_spec(args.group)
    fmap = build_separating_map(group)
    prod = as_product(group)

    inv = check_invariance(fmap, n_samples=args.pairs, seed=args.seed)
    sep = check_separation(fmap, n_pairs=args.pairs, seed=args.seed)
    gram, bracket, iso = check_transnormal(
        fmap, n_pairs=args.pairs, seed=args.seed, isoparametric=True)
    audits = [oracle_separation_audit(fmap, f, n=25, radius=args.radius,
                                      seed=args.seed).to_json_dict()
              for f in prod.factors]

    print(json.dumps({
        "input_dim": fmap.input_dim,
        "output_dim": fmap.output_dim,
        "content_hash": fmap.content_hash(),
        "invariance": inv.to_json_dict(),
        "separation": sep.to_json_dict(),
        "gram": gram.to_json_dict(),
        "bracket": bracket.to_json_dict(),
        "isoparametric": iso.to_json_dict(),
        "oracle_audits": audits,
    }, indent=2))


if __name__ == "__main__":
    main()
