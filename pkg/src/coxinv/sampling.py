"""Seeded randomness and fundamental-domain point sampling.

All randomness flows through counter-based Philox generators so that reports
are byte-identical across runs and across serial/parallel sweeps.
"""

from __future__ import annotations

import numpy as np

from .root_systems import fundamental_weights


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def _floatvec(v):
    return np.array([float(x) for x in v])


def e0_basis_float(group) -> list[np.ndarray]:
    """Orthonormal float basis of the subspace fixed pointwise by a single
    finite/affine factor (complement of the root span)."""
    roots = np.array([_floatvec(a) for a in group.root_system.simple_roots])
    _, s, vt = np.linalg.svd(roots, full_matrices=True)
    nz = int((s > 1e-9).sum())
    return [vt[i] for i in range(nz, group.ambient_dim)]


def sample_interior_point(group, rng, wall_floor: float = 1e-3,
                          e0_scale: float = 1.0) -> np.ndarray:
    """Random point in the open fundamental domain (chamber or alcove),
    at distance >= wall_floor from every wall, with a free component in the
    fixed subspace."""
    weights = [_floatvec(w) for w in fundamental_weights(group.root_system)]
    simple = [_floatvec(a) for a in group.root_system.simple_roots]
    e0 = e0_basis_float(group)
    for _ in range(10000):
        if group.is_affine:
            hr = _floatvec(group.highest_root)
            r = len(weights)
            u = rng.uniform(0.05, 1.0, r + 1)
            u = u / u.sum()
            verts = [np.zeros(group.ambient_dim)]
            verts += [w / float(hr @ w) for w in weights]
            x = sum(ui * v for ui, v in zip(u, verts))
            walls = [float(a @ x) / np.linalg.norm(a) for a in simple]
            walls.append((1.0 - float(hr @ x)) / np.linalg.norm(hr))
        else:
            t = rng.uniform(0.2, 1.2, len(weights))
            x = sum(ti * w for ti, w in zip(t, weights))
            walls = [float(a @ x) / np.linalg.norm(a) for a in simple]
        if min(walls) >= wall_floor:
            break
    else:
        raise RuntimeError("interior sampling failed")
    for e in e0:
        x = x + e0_scale * rng.uniform(-1.0, 1.0) * e
    return x


def sample_ball_point(dim: int, rng, radius: float = 1.5) -> np.ndarray:
    v = rng.standard_normal(dim)
    r = radius * rng.uniform() ** (1.0 / dim)
    return r * v / np.linalg.norm(v)
