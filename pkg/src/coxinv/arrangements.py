"""Reflection hyperplane arrangements and chamber bookkeeping.

Finite arrangements hold one hyperplane per positive root.  Periodic
arrangements (affine case) are never materialized: each positive root spawns
the family {<x, alpha> = k, k integer}, stored as a canonical primitive
normal plus an offset step, and all queries go through lattice arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import ratlinalg as rl
from .errors import NotCrystallographic
from .reflection_groups import AffineWeylGroup, FiniteCoxeterGroup, Isometry
from .sampling import make_rng

WALL_TOL = 1e-9


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class Hyperplane:
    """{x : <x, normal> = offset} in canonical form."""
    normal: tuple
    offset: object
    exact: bool = True

    @staticmethod
    def canonical(normal, offset) -> "Hyperplane":
        exact = all(isinstance(x, (int, Fraction)) for x in normal)
        if exact:
            prim, s = rl.primitive(tuple(Fraction(x) for x in normal))
            return Hyperplane(prim, Fraction(offset) * s, True)
        v = np.array([float(x) for x in normal])
        nrm = np.linalg.norm(v)
        v = v / nrm
        c = float(offset) / nrm
        lead = next(x for x in v if abs(x) > WALL_TOL)
        if lead < 0:
            v, c = -v, -c
        return Hyperplane(tuple(v), c, False)

    def key(self):
        if self.exact:
            return (self.normal, self.offset)
        return (tuple(round(x * 1e9) for x in self.normal),
                round(self.offset * 1e9))

    def eval_at(self, x):
        return _dot(self.normal, x) - self.offset

    def to_json_dict(self):
        if self.exact:
            return {"normal": [[c.numerator, c.denominator] for c in self.normal],
                    "offset": [self.offset.numerator, self.offset.denominator]}
        return {"normal": list(self.normal), "offset": self.offset}


@dataclass(frozen=True)
class Family:
    """Periodic family {<x, normal> = k * step, k integer} with canonical
    primitive normal."""
    normal: tuple
    step: Fraction

    def members_in_ball(self, radius) -> list[Hyperplane]:
        nrm = float(np.linalg.norm([float(x) for x in self.normal]))
        kmax = int(float(radius) * nrm / float(self.step))
        return [Hyperplane(self.normal, self.step * k, True)
                for k in range(-kmax, kmax + 1)]

    def contains(self, h: Hyperplane) -> bool:
        if h.normal != self.normal:
            return False
        q = h.offset / self.step
        return q.denominator == 1


@dataclass
class Arrangement:
    kind: str                      # "finite" or "periodic"
    base_hyperplanes: list         # finite case: the full family
    families: list | None = None   # periodic case
    group: object | None = None    # owning group, for chamber queries

    def hyperplanes_in_ball(self, radius) -> list[Hyperplane]:
        if self.kind == "finite":
            return list(self.base_hyperplanes)
        out = []
        for fam in self.families:
            out.extend(fam.members_in_ball(radius))
        return out

    def contains_hyperplane(self, h: Hyperplane) -> bool:
        if self.kind == "finite":
            keys = {b.key() for b in self.base_hyperplanes}
            return h.key() in keys
        return any(fam.contains(h) for fam in self.families)

    def to_json_dict(self):
        d = {"kind": self.kind,
             "hyperplanes": [h.to_json_dict() for h in self.base_hyperplanes]}
        if self.families is not None:
            d["families"] = [{"normal": [[c.numerator, c.denominator]
                                         for c in f.normal],
                              "step": [f.step.numerator, f.step.denominator]}
                             for f in self.families]
        return d


@dataclass(frozen=True)
class ChamberId:
    signs: tuple | None = None          # finite case
    alcove_coords: tuple | None = None  # periodic case: (wbar key, gamma)


def arrangement_of(group) -> Arrangement:
    """Reflection arrangement of a finite Coxeter group, or the periodic
    singular-hyperplane family of an affine Weyl group."""
    if isinstance(group, AffineWeylGroup):
        group.root_system.require_crystallographic()
        base, fams = [], []
        seen = set()
        for alpha in group.root_system.positive_roots:
            prim, s = rl.primitive(alpha)
            if prim in seen:
                continue
            seen.add(prim)
            base.append(Hyperplane(prim, Fraction(0), True))
            # <x, alpha> = k  <=>  <x, prim> = k * s  (prim = s * alpha)
            fams.append(Family(prim, abs(s)))
        return Arrangement("periodic", base, fams, group)
    if isinstance(group, FiniteCoxeterGroup):
        seen = {}
        for alpha in group.root_system.positive_roots:
            h = Hyperplane.canonical(alpha, 0)
            seen[h.key()] = h
        return Arrangement("finite", list(seen.values()), None, group)
    raise NotCrystallographic("expected a finite or affine reflection group")


def _image_hyperplane(h: Hyperplane, g: Isometry) -> Hyperplane:
    """Image of {<x, n> = c} under x |-> Ax + t is {<y, An> = c + <t, An>}."""
    n2 = g.apply_linear(h.normal)
    c2 = h.offset + _dot(g.translation, n2)
    return Hyperplane.canonical(n2, c2)


def is_invariant(arr: Arrangement, g: Isometry, probe_radius=1) -> bool:
    """True iff every family hyperplane meeting the probe ball maps to a
    family member.  Finite arrangements are checked globally."""
    if arr.kind == "finite":
        probe = arr.base_hyperplanes
    else:
        if probe_radius <= 0:
            raise ValueError("probe_radius must be positive")
        probe = arr.hyperplanes_in_ball(probe_radius)
    return all(arr.contains_hyperplane(_image_hyperplane(h, g)) for h in probe)


def chamber_of(arr: Arrangement, x) -> ChamberId:
    if arr.kind == "finite":
        signs = []
        exact = all(isinstance(c, (int, Fraction)) for c in x)
        scale = 1.0 + float(np.linalg.norm([float(c) for c in x]))
        for h in arr.base_hyperplanes:
            v = h.eval_at(x)
            if exact and h.exact:
                signs.append("0" if v == 0 else ("+" if v > 0 else "-"))
            else:
                fv = float(v)
                signs.append("0" if abs(fv) < WALL_TOL * scale
                             else ("+" if fv > 0 else "-"))
        return ChamberId(signs=tuple(signs))
    folded, _ = arr.group.fold(x)
    g = _witness_isometry(arr.group, x, folded)
    wbar, coords = arr.group.factor(g)
    return ChamberId(alcove_coords=(wbar.key(), coords))


def _witness_isometry(group: AffineWeylGroup, x, folded):
    """Isometry mapping the fundamental alcove chamber of x; rebuilt from the
    folding word."""
    _, word = group.fold(x)
    g = None
    for i in word:
        s = group.generators[i]
        g = s if g is None else s.compose(g)
    if g is None:
        from .reflection_groups import identity_isometry
        g = identity_isometry(group.ambient_dim)
    return g.inverse()


def count_chambers(arr: Arrangement, extra_samples: int | None = None,
                   seed: int = 0) -> int:
    """Number of distinct full-sign chambers hit by the deterministic
    sampling scheme: jittered normalized subset sums of the (+/-) normals
    plus 10*|H|^2 seeded unit vectors."""
    if arr.kind != "finite":
        raise ValueError("chamber counting requires a finite arrangement")
    hs = arr.base_hyperplanes
    dim = len(hs[0].normal)
    rng = make_rng(seed)

    normals = [np.array([float(c) for c in h.normal]) for h in hs]
    normals = normals + [-v for v in normals]
    points = []
    max_size = min(dim, 3)
    for size in range(1, max_size + 1):
        for combo in combinations(range(len(normals)), size):
            v = sum(normals[i] for i in combo)
            nrm = np.linalg.norm(v)
            if nrm < 1e-9:
                continue
            jitter = rng.standard_normal(dim)
            points.append(v / nrm + 1e-3 * jitter)
    n_rand = extra_samples if extra_samples is not None else 10 * len(hs) ** 2
    for _ in range(n_rand):
        v = rng.standard_normal(dim)
        points.append(v / np.linalg.norm(v))

    chambers = set()
    for p in points:
        cid = chamber_of(arr, tuple(p))
        if "0" not in cid.signs:
            chambers.add(cid.signs)
    return len(chambers)
