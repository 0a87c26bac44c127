"""Command-line front end: construction, verification, JSON reporting.

All randomness flows from the single --seed flag through counter-based
generators, so identical invocations produce byte-identical reports.
Exit codes: 0 pass, 1 check failure, 2 usage or specification error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arrangements import arrangement_of, count_chambers, is_invariant
from .errors import CoxinvError
from .invariants import chevalley_generators, real_generators
from .oracle import bounded_affine_orbit, finite_orbit, oracle_separation_audit
from .reflection_groups import (
    AffineWeylGroup,
    FiniteCoxeterGroup,
    ProductGroup,
)
from .root_systems import build_root_system, classical_degrees
from .separator import build_separating_map, check_invariance, check_separation
from .sampling import make_rng
from .transnormal import check_transnormal
from .forms import jacobian_form, pullback_deviation


def parse_group_spec(d):
    """Build a group object from a GroupSpec dict.

    {"type": "A", "rank": 2, "affine": false} or
    {"product": [spec, ...], "trivial_dims": k}."""
    if isinstance(d, str):
        d = json.loads(d)
    if "product" in d:
        factors = [parse_group_spec(f) for f in d["product"]]
        return ProductGroup(factors, int(d.get("trivial_dims", 0)))
    rs = build_root_system(d["type"], int(d["rank"]))
    if d.get("affine", False):
        return AffineWeylGroup(rs)
    group = FiniteCoxeterGroup(rs)
    if d.get("trivial_dims", 0):
        return ProductGroup([group], int(d["trivial_dims"]))
    return group


def _load_group(args):
    if getattr(args, "group_file", None):
        with open(args.group_file, encoding="utf-8") as fh:
            return parse_group_spec(fh.read())
    if not args.group:
        raise CoxinvError("missing --group or --group-file")
    return parse_group_spec(args.group)


def _emit(report: dict, args) -> None:
    text = json.dumps(report, sort_keys=True, separators=(",", ":"))
    print(text)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def cmd_info(args) -> int:
    group = _load_group(args)
    if isinstance(group, ProductGroup):
        raise CoxinvError("info expects a single finite or affine group")
    rs = group.root_system
    report = {"type": rs.type_label, "rank": rs.rank,
              "ambient_dim": rs.ambient_dim,
              "positive_roots": len(rs.positive_roots),
              "affine": group.is_affine}
    if group.is_affine:
        report["finite_order"] = group.finite_part.order()
    else:
        report["order"] = group.order()
        report["degrees"] = classical_degrees(rs.type_label, rs.rank)
        report["chambers"] = count_chambers(arrangement_of(group),
                                            seed=args.seed)
    _emit(report, args)
    return 0


def cmd_invariants(args) -> int:
    group = _load_group(args)
    if isinstance(group, ProductGroup):
        raise CoxinvError("invariants expects a single finite or affine group")
    if group.is_affine:
        system = real_generators(group)
        gens = [g.to_json_dict() for g in system.generators]
        report = {"kind": "trig", "p": system.meta["p"], "q": system.meta["q"],
                  "involution": list(system.meta["involution"]),
                  "realness": [g.realness_flag for g in system.generators],
                  "jacobian_det": system.jacobian_det,
                  "generators": gens}
    else:
        system = chevalley_generators(group)
        report = {"kind": "polynomial",
                  "degrees": system.degrees_or_weights,
                  "jacobian_det": system.jacobian_det,
                  "generators": [g.to_json_dict() for g in system.generators]}
    _emit(report, args)
    return 0


def cmd_separate(args) -> int:
    group = _load_group(args)
    fmap = build_separating_map(group)
    inv = check_invariance(fmap, n_samples=max(1, args.pairs // 2),
                           tol=1e-10, seed=args.seed)
    sep = check_separation(fmap, n_pairs=args.pairs, tol=args.tol,
                           seed=args.seed)
    report = {"invariance_max": inv.max_deviation,
              "separation_min": sep.separation_min,
              "matched_orbit_max": sep.matched_orbit_max,
              "pass": inv.passed and sep.passed}
    _emit(report, args)
    return 0 if report["pass"] else 1


def cmd_transnormal(args) -> int:
    group = _load_group(args)
    fmap = build_separating_map(group)
    gram, bracket, iso = check_transnormal(
        fmap, n_pairs=args.pairs, tol_gram=args.tol, tol_bracket=args.tol,
        seed=args.seed, isoparametric=True)
    report = {"gram": gram.to_json_dict(),
              "bracket": bracket.to_json_dict(),
              "isoparametric": iso.to_json_dict(),
              "seed": args.seed,
              "pass": gram.passed and bracket.passed}
    _emit(report, args)
    return 0 if report["pass"] else 1


def cmd_forms_check(args) -> int:
    group = _load_group(args)
    fmap = build_separating_map(group)
    form = jacobian_form(fmap)
    prod = fmap.group
    devs = [pullback_deviation(form, g, n_samples=20, n_frames=3,
                               seed=args.seed) for g in prod.generators]
    report = {"degree": form.degree,
              "max_pullback_deviation": max(devs) if devs else 0.0,
              "pass": all(d < 1e-10 for d in devs)}
    _emit(report, args)
    return 0 if report["pass"] else 1


def cmd_orbit(args) -> int:
    group = _load_group(args)
    point = tuple(json.loads(args.point))
    if group.is_affine:
        orbit = bounded_affine_orbit(group, point, args.radius)
        images = sorted(map(list, (tuple(float(c) for c in p)
                                   for p in orbit.images())))
    else:
        images = sorted(map(list, (tuple(float(c) for c in p)
                                   for p in finite_orbit(group, point))))
    _emit({"size": len(images), "images": images}, args)
    return 0


def cmd_arrangement(args) -> int:
    group = _load_group(args)
    arr = arrangement_of(group)
    rs = group.root_system
    report = {"type": rs.type_label, "rank": rs.rank,
              "hyperplanes": len(arr.base_hyperplanes),
              "kind": arr.kind}
    if arr.kind == "finite":
        report["chambers"] = count_chambers(arr, seed=args.seed)
    invariant = all(is_invariant(arr, g, 10) for g in group.generators)
    report["invariant_under_generators"] = invariant
    _emit(report, args)
    return 0 if invariant else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coxinv")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_point=False):
        p.add_argument("--group", help="inline GroupSpec JSON")
        p.add_argument("--group-file", help="path to GroupSpec JSON")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", help="also write the JSON report here")
        p.add_argument("--pairs", type=int, default=300)
        p.add_argument("--tol", type=float, default=1e-6)
        p.add_argument("--radius", type=int, default=3)
        if needs_point:
            p.add_argument("--point", required=True,
                           help="point as a JSON array")

    common(sub.add_parser("info"))
    common(sub.add_parser("invariants"))
    common(sub.add_parser("separate"))
    common(sub.add_parser("transnormal"))
    common(sub.add_parser("forms-check"))
    common(sub.add_parser("orbit", help="debug orbit dump"), needs_point=True)
    common(sub.add_parser("arrangement"))
    return parser


_COMMANDS = {
    "info": cmd_info,
    "invariants": cmd_invariants,
    "separate": cmd_separate,
    "transnormal": cmd_transnormal,
    "forms-check": cmd_forms_check,
    "orbit": cmd_orbit,
    "arrangement": cmd_arrangement,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0,) else 0
    try:
        return _COMMANDS[args.command](args)
    except (CoxinvError, ValueError, KeyError, json.JSONDecodeError,
            OSError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
