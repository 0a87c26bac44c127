"""Root-system data for the finite reflection group types.

Crystallographic types (A-G) are built in exact rational arithmetic using the
conventional integer-coordinate embeddings: A_n lives in R^{n+1} as e_i - e_j,
B_n/C_n/D_n in R^n, G_2 in the A_2 plane of R^3, F_4 in R^4, E_6/E_7/E_8 in
R^8 (Bourbaki conventions for long/short roots).

The dihedral family I2(m) is handled in two modes.  For m in {2, 3, 4, 6} the
group is crystallographic and gets an exact embedding; for other m the simple
roots are unit floats at angle pi - pi/m and a documented 1e-12 tolerance
applies to the algebraic identities.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import ratlinalg as rl
from .errors import (
    InvalidClassification,
    NotCrystallographic,
    SingularGram,
    ZeroVector,
)

FLOAT_TOL = 1e-12

CRYSTALLOGRAPHIC_I2 = {2, 3, 4, 6}


def _e(i: int, n: int, scale=1):
    v = [Fraction(0)] * n
    v[i] = Fraction(scale)
    return tuple(v)


def _simple_root_data(type_label: str, rank: int):
    """Simple roots for the conventional embedding.  Returns
    (simple_roots, ambient_dim, exact)."""
    t, n = type_label, rank
    if t == "A":
        if n < 1:
            raise InvalidClassification("A requires rank >= 1")
        d = n + 1
        roots = [rl.vsub(_e(i, d), _e(i + 1, d)) for i in range(n)]
        return roots, d, True
    if t == "B":
        if n < 2:
            raise InvalidClassification("B requires rank >= 2")
        roots = [rl.vsub(_e(i, n), _e(i + 1, n)) for i in range(n - 1)]
        roots.append(_e(n - 1, n))
        return roots, n, True
    if t == "C":
        if n < 2:
            raise InvalidClassification("C requires rank >= 2")
        roots = [rl.vsub(_e(i, n), _e(i + 1, n)) for i in range(n - 1)]
        roots.append(_e(n - 1, n, 2))
        return roots, n, True
    if t == "D":
        if n < 4:
            raise InvalidClassification("D requires rank >= 4")
        roots = [rl.vsub(_e(i, n), _e(i + 1, n)) for i in range(n - 1)]
        roots.append(rl.vadd(_e(n - 2, n), _e(n - 1, n)))
        return roots, n, True
    if t == "E":
        if n not in (6, 7, 8):
            raise InvalidClassification("E requires rank in {6,7,8}")
        d = 8
        half = Fraction(1, 2)
        a1 = tuple([half, -half, -half, -half, -half, -half, -half, half])
        a2 = rl.vadd(_e(0, d), _e(1, d))
        rest = [rl.vsub(_e(i + 1, d), _e(i, d)) for i in range(1, 7)]
        roots = [a1, a2] + rest
        return roots[:n], d, True
    if t == "F":
        if n != 4:
            raise InvalidClassification("F requires rank 4")
        half = Fraction(1, 2)
        roots = [
            rl.vsub(_e(1, 4), _e(2, 4)),
            rl.vsub(_e(2, 4), _e(3, 4)),
            _e(3, 4),
            (half, -half, -half, -half),
        ]
        return roots, 4, True
    if t == "G":
        if n != 2:
            raise InvalidClassification("G requires rank 2")
        roots = [
            rl.vsub(_e(0, 3), _e(1, 3)),
            (Fraction(-2), Fraction(1), Fraction(1)),
        ]
        return roots, 3, True
    if t == "I2":
        if n < 2:
            raise InvalidClassification("I2(m) requires m >= 2")
        m = n
        if m == 2:
            return [_e(0, 2), _e(1, 2)], 2, True
        if m == 3:
            return _simple_root_data("A", 2)
        if m == 4:
            return _simple_root_data("B", 2)
        if m == 6:
            return _simple_root_data("G", 2)
        theta = math.pi - math.pi / m
        return [(1.0, 0.0), (math.cos(theta), math.sin(theta))], 2, False
    raise InvalidClassification(f"unknown type {type_label!r}")


def classified_order(type_label: str, rank: int) -> int:
    t, n = type_label, rank
    if t == "A":
        return math.factorial(n + 1)
    if t in ("B", "C"):
        return 2 ** n * math.factorial(n)
    if t == "D":
        return 2 ** (n - 1) * math.factorial(n)
    if t == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[n]
    if t == "F":
        return 1152
    if t == "G":
        return 12
    if t == "I2":
        return 2 * n
    raise InvalidClassification(f"unknown type {type_label!r}")


def classical_degrees(type_label: str, rank: int) -> list[int]:
    """Degrees of the basic polynomial invariants."""
    t, n = type_label, rank
    if t == "A":
        return list(range(2, n + 2))
    if t in ("B", "C"):
        return [2 * i for i in range(1, n + 1)]
    if t == "D":
        return sorted([2 * i for i in range(1, n)] + [n])
    if t == "E":
        return {6: [2, 5, 6, 8, 9, 12],
                7: [2, 6, 8, 10, 12, 14, 18],
                8: [2, 8, 12, 14, 18, 20, 24, 30]}[n]
    if t == "F":
        return [2, 6, 8, 12]
    if t == "G":
        return [2, 6]
    if t == "I2":
        return [2, n]
    raise InvalidClassification(f"unknown type {type_label!r}")


@dataclass(frozen=True)
class RootSystem:
    type_label: str
    rank: int
    ambient_dim: int
    simple_roots: tuple
    positive_roots: tuple
    cartan_matrix: tuple
    exact: bool = True

    @property
    def is_crystallographic(self) -> bool:
        if self.type_label == "I2":
            return self.rank in CRYSTALLOGRAPHIC_I2
        return True

    def require_crystallographic(self):
        if not self.is_crystallographic:
            raise NotCrystallographic(
                f"I2({self.rank}) has no weight/coroot lattice")

    @property
    def all_roots(self) -> list:
        return list(self.positive_roots) + [rl.vneg(r) for r in self.positive_roots]

    def to_json(self) -> str:
        def enc(v):
            if self.exact:
                return [[x.numerator, x.denominator] for x in v]
            return list(v)

        return json.dumps({
            "type": self.type_label,
            "rank": self.rank,
            "ambient_dim": self.ambient_dim,
            "exact": self.exact,
            "simple_roots": [enc(r) for r in self.simple_roots],
            "positive_roots": [enc(r) for r in self.positive_roots],
            "cartan_matrix": [[[c.numerator, c.denominator] if self.exact else c
                               for c in row] for row in self.cartan_matrix],
        }, sort_keys=True)

    @staticmethod
    def from_json(s: str) -> "RootSystem":
        d = json.loads(s)
        exact = d["exact"]

        def dec(v):
            if exact:
                return tuple(Fraction(num, den) for num, den in v)
            return tuple(float(x) for x in v)

        return RootSystem(
            type_label=d["type"],
            rank=d["rank"],
            ambient_dim=d["ambient_dim"],
            simple_roots=tuple(dec(r) for r in d["simple_roots"]),
            positive_roots=tuple(dec(r) for r in d["positive_roots"]),
            cartan_matrix=tuple(
                tuple(Fraction(c[0], c[1]) if exact else c for c in row)
                for row in d["cartan_matrix"]),
            exact=exact,
        )


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def coroot_of(root, metric=None):
    """alpha-check = 2*alpha / ||alpha||^2 (metric dual identification)."""
    if all(isinstance(x, (int, Fraction)) for x in root):
        root = tuple(Fraction(x) for x in root)
    sq = _dot(root, root)
    if sq == 0:
        raise ZeroVector("cannot take the coroot of the zero vector")
    return tuple(2 * x / sq for x in root)


def _reflect(root, v):
    cr = coroot_of(root)
    c = _dot(v, root)
    return tuple(x - c * y for x, y in zip(v, cr))


def _close_roots(simple_roots, exact):
    """All roots as the orbit of the simple roots under simple reflections."""
    def key(v):
        if exact:
            return v
        return tuple(round(float(x) * 1e9) for x in v)

    roots = {}
    frontier = list(simple_roots) + [rl.vneg(r) for r in simple_roots]
    for r in frontier:
        roots[key(r)] = r
    while frontier:
        nxt = []
        for beta in frontier:
            for alpha in simple_roots:
                img = _reflect(alpha, beta)
                k = key(img)
                if k not in roots:
                    roots[k] = img
                    nxt.append(img)
        frontier = nxt
    return list(roots.values())


def simple_coordinates(rs: RootSystem, v):
    """Coordinates of v (assumed in the span of the simple roots) over the
    simple-root basis, via the Gram system."""
    gram = [[_dot(a, b) for b in rs.simple_roots] for a in rs.simple_roots]
    rhs = [_dot(a, v) for a in rs.simple_roots]
    if rs.exact:
        return rl.solve(gram, rhs)
    import numpy as np
    return tuple(np.linalg.solve(np.array(gram, float), np.array(rhs, float)))


def build_root_system(type_label: str, rank: int) -> RootSystem:
    simple, dim, exact = _simple_root_data(type_label, rank)
    all_roots = _close_roots(simple, exact)

    positive = []
    for r in all_roots:
        if exact:
            coords = rl.solve([[_dot(a, b) for b in simple] for a in simple],
                              [_dot(a, r) for a in simple])
            if all(c >= 0 for c in coords):
                positive.append((tuple(coords), r))
        else:
            import numpy as np
            gram = np.array([[_dot(a, b) for b in simple] for a in simple], float)
            coords = np.linalg.solve(gram, np.array([_dot(a, r) for a in simple]))
            if all(c >= -1e-9 for c in coords):
                positive.append((tuple(coords), r))
    positive.sort(key=lambda cr: (sum(cr[0]), cr[0]))
    positive_roots = tuple(r for _, r in positive)

    cartan = tuple(
        tuple(2 * _dot(aj, ai) / _dot(ai, ai) for aj in simple)
        for ai in simple)

    return RootSystem(
        type_label=type_label,
        rank=rank,
        ambient_dim=dim,
        simple_roots=tuple(simple),
        positive_roots=positive_roots,
        cartan_matrix=cartan,
        exact=exact,
    )


def fundamental_weights(rs: RootSystem):
    """Weights gamma_i in span(simple roots) with <gamma_i, coroot_j> = delta_ij."""
    simple = rs.simple_roots
    n = rs.rank
    # gamma_i = sum_k c_k alpha_k with sum_k c_k <alpha_k, coroot_j> = delta_ij.
    # With B[k][j] = <alpha_k, coroot_j>, the coefficient vector of gamma_i
    # over the simple roots is the i-th row of B^{-1}.
    if rs.exact:
        b = tuple(tuple(2 * _dot(ak, aj) / _dot(aj, aj) for aj in simple)
                  for ak in simple)
        if rl.rank(b) < n:
            raise SingularGram("simple roots are linearly dependent")
        binv = rl.inverse(b)
        weights = []
        for i in range(n):
            w = tuple(Fraction(0) for _ in range(rs.ambient_dim))
            for k in range(n):
                w = rl.vadd(w, rl.vscale(binv[i][k], simple[k]))
            weights.append(w)
        return weights
    import numpy as np
    b = np.array([[2 * _dot(ak, aj) / _dot(aj, aj) for aj in simple]
                  for ak in simple], float)
    if np.linalg.matrix_rank(b) < n:
        raise SingularGram("simple roots are linearly dependent")
    binv = np.linalg.inv(b)
    sim = np.array([list(map(float, s)) for s in simple])
    return [tuple(binv[i, :] @ sim) for i in range(n)]


@dataclass(frozen=True)
class Lattice:
    basis: tuple
    kind: str  # "coroot" or "weight"


def lattices(rs: RootSystem):
    """(coroot lattice, weight lattice) for a crystallographic system."""
    rs.require_crystallographic()
    coroots = tuple(coroot_of(a) for a in rs.simple_roots)
    weights = tuple(fundamental_weights(rs))
    return Lattice(coroots, "coroot"), Lattice(weights, "weight")


def highest_root(rs: RootSystem):
    """Positive root with maximal height (unique for irreducible types)."""
    best = None
    best_h = None
    for r in rs.positive_roots:
        coords = simple_coordinates(rs, r)
        h = sum(coords)
        if best is None or h > best_h:
            best, best_h = r, h
    return best
