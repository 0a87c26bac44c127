"""Assembly of the full invariant separating map across the orthogonal
decomposition: identity on the fixed subspace, Chevalley generators on finite
factors, real trigonometric generators on affine factors.

Separation is certified on sampled interior pairs plus orbit-oracle
cross-checks; the global statement is the underlying theorem, the finite
certificate is what we can test.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

import numpy as np

from .invariants import (
    GeneratorSystem,
    chevalley_generators,
    real_generators,
)
from .reflection_groups import (
    AffineWeylGroup,
    FiniteCoxeterGroup,
    Isometry,
    ProductGroup,
    as_product,
    orbit_equal,
)
from .sampling import e0_basis_float, make_rng, sample_interior_point


@dataclass
class SeparatingMap:
    """F(x0, x1, ..., xs) = (x0, F1(x1), ..., Fs(xs)) on the ambient space.

    Output layout: fixed-subspace coordinates first, then the generator
    values of each factor in order."""
    group: ProductGroup
    e0_rows: np.ndarray                 # (k, N) orthonormal rows, may be empty
    factor_systems: list                # GeneratorSystem per factor
    factor_slices: list                 # (lo, hi) input slice per factor

    @property
    def input_dim(self) -> int:
        return self.group.ambient_dim

    @property
    def output_dim(self) -> int:
        return len(self.e0_rows) + sum(len(s.generators)
                                       for s in self.factor_systems)

    def evaluate(self, x) -> np.ndarray:
        xf = np.array([float(v) for v in x])
        out = list(self.e0_rows @ xf) if len(self.e0_rows) else []
        for (lo, hi), sys in zip(self.factor_slices, self.factor_systems):
            xs = xf[lo:hi]
            out.extend(float(np.real(f.eval(xs))) for f in sys.generators)
        return np.array(out)

    def gradient_rows(self, x) -> np.ndarray:
        """d x output_dim matrix; row i is grad f_i at x (ambient)."""
        xf = np.array([float(v) for v in x])
        rows = [np.array(r) for r in self.e0_rows]
        for (lo, hi), sys in zip(self.factor_slices, self.factor_systems):
            xs = xf[lo:hi]
            for f in sys.generators:
                g = np.zeros(self.input_dim)
                g[lo:hi] = np.real(f.gradient(xs))
                rows.append(g)
        return np.array(rows)

    def hessians(self, x) -> list[np.ndarray]:
        xf = np.array([float(v) for v in x])
        n = self.input_dim
        out = [np.zeros((n, n)) for _ in range(len(self.e0_rows))]
        for (lo, hi), sys in zip(self.factor_slices, self.factor_systems):
            xs = xf[lo:hi]
            for f in sys.generators:
                h = np.zeros((n, n))
                h[lo:hi, lo:hi] = np.real(f.hessian(xs))
                out.append(h)
        return out

    def laplacians(self, x) -> np.ndarray:
        xf = np.array([float(v) for v in x])
        vals = [0.0] * len(self.e0_rows)
        for (lo, hi), sys in zip(self.factor_slices, self.factor_systems):
            xs = xf[lo:hi]
            vals.extend(float(np.real(f.laplacian(xs))) for f in sys.generators)
        return np.array(vals)

    def content_hash(self) -> str:
        payload = json.dumps(
            [[f.to_json_dict() for f in sys.generators]
             for sys in self.factor_systems], sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def sample_interior(self, rng, wall_floor: float = 1e-3) -> np.ndarray:
        """Point in the open fundamental domain of the product action."""
        x = np.zeros(self.input_dim)
        for (lo, hi), f in zip(self.factor_slices, self.group.factors):
            x[lo:hi] = sample_interior_point(f, rng, wall_floor)
        lo, hi = self.group.trivial_slice
        if hi > lo:
            x[lo:hi] = rng.uniform(-1.0, 1.0, hi - lo)
        return x


def build_separating_map(group) -> SeparatingMap:
    """Decompose, build per-factor generator systems, and include the
    identity on the fixed subspace."""
    prod = as_product(group)
    systems = []
    e0_rows = []
    for i, f in enumerate(prod.factors):
        lo, hi = prod.slices[i]
        if isinstance(f, AffineWeylGroup):
            systems.append(real_generators(f))
        elif isinstance(f, FiniteCoxeterGroup):
            systems.append(chevalley_generators(f))
        else:
            raise TypeError(f"unsupported factor type {type(f)!r}")
        for e in e0_basis_float(f):
            row = np.zeros(prod.ambient_dim)
            row[lo:hi] = e
            e0_rows.append(row)
    lo, hi = prod.trivial_slice
    for j in range(lo, hi):
        row = np.zeros(prod.ambient_dim)
        row[j] = 1.0
        e0_rows.append(row)
    return SeparatingMap(group=prod,
                         e0_rows=np.array(e0_rows) if e0_rows
                         else np.zeros((0, prod.ambient_dim)),
                         factor_systems=systems,
                         factor_slices=list(prod.slices))


@dataclass
class InvarianceReport:
    max_deviation: float
    tol: float
    n_samples: int
    seed: int

    @property
    def passed(self) -> bool:
        return self.max_deviation < self.tol

    def to_json_dict(self):
        return {"invariance_max": self.max_deviation, "tol": self.tol,
                "n_samples": self.n_samples, "seed": self.seed,
                "pass": self.passed}


@dataclass
class SeparationReport:
    separation_min: float
    matched_orbit_max: float
    oracle_agreements: int
    oracle_total: int
    tol: float
    n_pairs: int
    seed: int

    @property
    def passed(self) -> bool:
        return (self.separation_min > self.tol
                and self.matched_orbit_max < self.tol
                and self.oracle_agreements == self.oracle_total)

    def to_json_dict(self):
        return {"separation_min": self.separation_min,
                "matched_orbit_max": self.matched_orbit_max,
                "oracle_agreements": self.oracle_agreements,
                "oracle_total": self.oracle_total,
                "tol": self.tol, "n_pairs": self.n_pairs, "seed": self.seed,
                "pass": self.passed}


def check_invariance(fmap: SeparatingMap, group=None, n_samples: int = 500,
                     tol: float = 1e-10, seed: int = 0) -> InvarianceReport:
    """Max over seeded samples and group generators of ||F(g x) - F(x)||."""
    prod = as_product(group) if group is not None else fmap.group
    rng = make_rng(seed)
    gens = prod.generators
    worst = 0.0
    for _ in range(n_samples):
        x = rng.standard_normal(fmap.input_dim)
        fx = fmap.evaluate(x)
        for g in gens:
            gx = np.array([float(v) for v in g.apply(tuple(x))])
            worst = max(worst, float(np.max(np.abs(fmap.evaluate(gx) - fx))))
    return InvarianceReport(worst, tol, n_samples, seed)


def check_separation(fmap: SeparatingMap, group=None, n_pairs: int = 1000,
                     tol: float = 1e-6, seed: int = 0,
                     wall_floor: float = 1e-3) -> SeparationReport:
    """Distinct interior points must have F-values further than tol apart;
    matched-orbit pairs must agree within tol; fold-oracle and F-distance
    must give the same verdict."""
    prod = as_product(group) if group is not None else fmap.group
    rng = make_rng(seed)
    sep_min = float("inf")
    matched_max = 0.0
    agree = total = 0
    for _ in range(n_pairs):
        x = fmap.sample_interior(rng, wall_floor)
        y = fmap.sample_interior(rng, wall_floor)
        while np.linalg.norm(x - y) <= 10 * tol:
            y = fmap.sample_interior(rng, wall_floor)
        d = float(np.linalg.norm(fmap.evaluate(x) - fmap.evaluate(y)))
        sep_min = min(sep_min, d)
        g = prod.random_element(rng)
        gx = np.array([float(v) for v in g.apply(tuple(x))])
        dm = float(np.linalg.norm(fmap.evaluate(x) - fmap.evaluate(gx)))
        matched_max = max(matched_max, dm)
        # oracle consistency on a subsample
        if total < 200:
            total += 2
            if orbit_equal(prod, tuple(x), tuple(gx), tol=1e-9) == (dm < tol):
                agree += 1
            if orbit_equal(prod, tuple(x), tuple(y), tol=1e-9) == (d < tol):
                agree += 1
    return SeparationReport(sep_min, matched_max, agree, total, tol,
                            n_pairs, seed)
