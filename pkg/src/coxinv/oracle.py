"""Brute-force ground truth: exhaustive finite-orbit enumeration and bounded
affine-orbit enumeration.  Deliberately naive; used to validate folding,
separation, and invariance results elsewhere in the package."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

import numpy as np

from .errors import EnumerationCapExceeded, NotCrystallographic, NotFinite
from .reflection_groups import AffineWeylGroup, FiniteCoxeterGroup
from .sampling import make_rng

MAX_SHELL_RADIUS = 6


def _key(point):
    if all(isinstance(c, (int, Fraction)) for c in point):
        return tuple(point)
    return tuple(round(float(c) * 1e9) for c in point)


def finite_orbit(group: FiniteCoxeterGroup, x) -> set:
    """{g x : g in W}; size divides |W| and equals |W| iff x is regular."""
    if getattr(group, "is_affine", False):
        raise NotFinite("finite_orbit needs a finite group")
    out = {}
    for g in group.elements():
        p = g.apply(tuple(x))
        out[_key(p)] = p
    return set(out.values())


@dataclass
class BoundedOrbit:
    base_point: tuple
    radius: int
    points: list    # (wbar index, gamma coords, image point)

    def images(self) -> list:
        return [p for _, _, p in self.points]


def bounded_affine_orbit(group: AffineWeylGroup, x, radius: int) -> BoundedOrbit:
    """{wbar x + gamma} over the finite part and all lattice vectors with
    coordinates bounded by radius in sup norm, deduplicated."""
    group.root_system.require_crystallographic()
    if radius < 1:
        raise ValueError("radius must be >= 1")
    if radius > MAX_SHELL_RADIUS:
        raise EnumerationCapExceeded(
            f"lattice shell radius capped at {MAX_SHELL_RADIUS}")
    x = tuple(x)
    seen = {}
    pts = []
    for wi, w in enumerate(group.finite_part.elements()):
        wx = w.apply(x)
        for coords in iproduct(range(-radius, radius + 1), repeat=group.rank):
            img = wx
            for c, v in zip(coords, group.translation_lattice.basis):
                if c:
                    img = tuple(a + c * b for a, b in zip(img, v))
            k = _key(img)
            if k not in seen:
                seen[k] = True
                pts.append((wi, coords, img))
    return BoundedOrbit(base_point=x, radius=radius, points=pts)


@dataclass
class SeparationAudit:
    constancy_deviation: float
    distinct_pairs_ok: bool
    min_distinct_gap: float
    n_points: int

    @property
    def passed(self) -> bool:
        return self.constancy_deviation < 1e-9 and self.distinct_pairs_ok

    def to_json_dict(self):
        return {"constancy_deviation": self.constancy_deviation,
                "distinct_pairs_ok": self.distinct_pairs_ok,
                "min_distinct_gap": self.min_distinct_gap,
                "n_points": self.n_points, "pass": self.passed}


def oracle_separation_audit(fmap, group, n: int = 50, radius: int = 3,
                            seed: int = 0, gap_tol: float = 1e-6) -> SeparationAudit:
    """Independent re-check of orbit separation: F must be constant on each
    enumerated (bounded) orbit and must distinguish distinct folded
    representatives."""
    rng = make_rng(seed)
    constancy = 0.0
    reps = []
    for _ in range(n):
        x = fmap.sample_interior(rng) if hasattr(fmap, "sample_interior") else \
            rng.standard_normal(group.ambient_dim)
        fx = fmap.evaluate(x)
        if getattr(group, "is_affine", False):
            orbit = bounded_affine_orbit(group, tuple(x), radius).images()
        else:
            orbit = finite_orbit(group, tuple(x))
        for y in orbit:
            fy = fmap.evaluate(y)
            constancy = max(constancy, float(np.max(np.abs(fx - fy))))
        folded, _ = group.fold(tuple(x))
        reps.append((np.array([float(v) for v in folded]), fx))
    distinct_ok = True
    min_gap = float("inf")
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            pi, fi = reps[i]
            pj, fj = reps[j]
            if np.linalg.norm(pi - pj) > 1e-6:
                gap = float(np.linalg.norm(fi - fj))
                min_gap = min(min_gap, gap)
                if gap <= gap_tol:
                    distinct_ok = False
    return SeparationAudit(constancy, distinct_ok, min_gap, n)
