"""Finite Coxeter groups and affine Weyl groups as groups of isometries.

Elements are pairs (linear orthogonal part, translation part).  Finite groups
are enumerated by breadth-first closure of the simple reflections; affine
groups are handled through their semidirect structure W-bar x| Gamma with
Gamma the coroot lattice.  Points are folded to the dominant chamber (finite)
or the fundamental alcove (affine) by walking across violated walls.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import ratlinalg as rl
from .errors import (
    EnumerationCapExceeded,
    NotCrystallographic,
    NotFinite,
    NotReflections,
    ZeroVector,
)
from .root_systems import (
    RootSystem,
    build_root_system,
    classified_order,
    coroot_of,
    fundamental_weights,
    highest_root,
    lattices,
)

ENUMERATION_CAP = 51840  # E6 scale
_FOLD_MAX_STEPS = 100000


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class Isometry:
    """x |-> linear @ x + translation."""
    linear: tuple
    translation: tuple

    @property
    def dim(self) -> int:
        return len(self.translation)

    @property
    def is_exact(self) -> bool:
        return isinstance(self.translation[0], Fraction) if self.translation else True

    def apply(self, x):
        return tuple(_dot(row, x) + t for row, t in zip(self.linear, self.translation))

    def apply_linear(self, v):
        return tuple(_dot(row, v) for row in self.linear)

    def compose(self, other: "Isometry") -> "Isometry":
        """self after other: x |-> self(other(x))."""
        lin = tuple(tuple(_dot(row, col) for col in zip(*other.linear))
                    for row in self.linear)
        trans = tuple(a + b for a, b in
                      zip(self.apply_linear(other.translation), self.translation))
        return Isometry(lin, trans)

    def inverse(self) -> "Isometry":
        lin_t = tuple(zip(*self.linear))
        trans = tuple(-x for x in
                      (sum(r * t for r, t in zip(row, self.translation)) for row in lin_t))
        return Isometry(lin_t, trans)

    def key(self):
        if self.is_exact:
            return (self.linear, self.translation)
        return (tuple(tuple(round(float(x) * 1e9) for x in row) for row in self.linear),
                tuple(round(float(x) * 1e9) for x in self.translation))

    def is_identity(self, tol: float = 0.0) -> bool:
        n = self.dim
        for i in range(n):
            for j in range(n):
                target = 1 if i == j else 0
                if abs(float(self.linear[i][j]) - target) > tol:
                    return False
        return all(abs(float(t)) <= tol for t in self.translation)

    def to_json_dict(self):
        if self.is_exact:
            return {
                "linear": [[[c.numerator, c.denominator] for c in row]
                           for row in self.linear],
                "translation": [[c.numerator, c.denominator]
                                for c in self.translation],
            }
        return {"linear": [list(map(float, row)) for row in self.linear],
                "translation": list(map(float, self.translation))}

    @staticmethod
    def from_json_dict(d) -> "Isometry":
        def dec(x):
            return Fraction(x[0], x[1]) if isinstance(x, list) else float(x)

        return Isometry(
            tuple(tuple(dec(c) for c in row) for row in d["linear"]),
            tuple(dec(c) for c in d["translation"]),
        )


def identity_isometry(dim: int, exact: bool = True) -> Isometry:
    if exact:
        return Isometry(rl.identity(dim), tuple(Fraction(0) for _ in range(dim)))
    eye = tuple(tuple(float(i == j) for j in range(dim)) for i in range(dim))
    return Isometry(eye, tuple(0.0 for _ in range(dim)))


def reflection_in(root, offset=0) -> Isometry:
    """Affine reflection x |-> x - (<x, root> - offset) * coroot fixing the
    hyperplane {<x, root> = offset}."""
    if all(x == 0 for x in root):
        raise ZeroVector("reflection axis must be nonzero")
    exact = all(isinstance(x, (int, Fraction)) for x in root)
    if exact:
        root = tuple(Fraction(x) for x in root)
        offset = Fraction(offset)
    cr = coroot_of(root)
    n = len(root)
    if exact:
        lin = tuple(tuple((Fraction(int(i == j))) - cr[i] * root[j]
                          for j in range(n)) for i in range(n))
    else:
        lin = tuple(tuple(float(i == j) - cr[i] * root[j]
                          for j in range(n)) for i in range(n))
    trans = tuple(offset * c for c in cr)
    return Isometry(lin, trans)


class FiniteCoxeterGroup:
    """Finite reflection group generated by the simple reflections of a
    root system, acting on the system's ambient space."""

    def __init__(self, root_system: RootSystem):
        self.root_system = root_system
        self.generators = [reflection_in(a) for a in root_system.simple_roots]
        self._elements = None

    @property
    def is_affine(self) -> bool:
        return False

    @property
    def ambient_dim(self) -> int:
        return self.root_system.ambient_dim

    @property
    def rank(self) -> int:
        return self.root_system.rank

    @property
    def classified_order(self) -> int:
        return classified_order(self.root_system.type_label, self.root_system.rank)

    def elements(self) -> list[Isometry]:
        if self._elements is None:
            if self.classified_order > ENUMERATION_CAP:
                raise EnumerationCapExceeded(
                    f"order {self.classified_order} exceeds cap {ENUMERATION_CAP}")
            seen = {}
            e = identity_isometry(self.ambient_dim, self.root_system.exact)
            seen[e.key()] = e
            frontier = [e]
            while frontier:
                nxt = []
                for g in frontier:
                    for s in self.generators:
                        h = s.compose(g)
                        k = h.key()
                        if k not in seen:
                            seen[k] = h
                            nxt.append(h)
                frontier = nxt
            self._elements = list(seen.values())
        return self._elements

    def order(self) -> int:
        return len(self.elements())

    def fold(self, x):
        return fold_to_chamber(self, x)

    def interior_point(self):
        """A dominant-chamber interior point: the sum of the fundamental
        weights (exact when the system is)."""
        ws = fundamental_weights(self.root_system)
        p = ws[0]
        for w in ws[1:]:
            p = tuple(a + b for a, b in zip(p, w))
        return p

    def random_element(self, rng) -> Isometry:
        els = self.elements()
        return els[int(rng.integers(len(els)))]


class AffineWeylGroup:
    """Semidirect product of the finite Weyl group with its coroot lattice."""

    def __init__(self, root_system: RootSystem):
        root_system.require_crystallographic()
        self.root_system = root_system
        self.finite_part = FiniteCoxeterGroup(root_system)
        coroot_lat, weight_lat = lattices(root_system)
        self.translation_lattice = coroot_lat
        self.weight_lattice = weight_lat
        self.highest_root = highest_root(root_system)
        self.generators = (
            [reflection_in(a) for a in root_system.simple_roots]
            + [reflection_in(self.highest_root, 1)]
        )

    @property
    def is_affine(self) -> bool:
        return True

    @property
    def ambient_dim(self) -> int:
        return self.root_system.ambient_dim

    @property
    def rank(self) -> int:
        return self.root_system.rank

    def translation(self, coords) -> Isometry:
        """Translation by sum_i coords[i] * coroot_i, coords integral."""
        t = tuple(Fraction(0) for _ in range(self.ambient_dim))
        for c, v in zip(coords, self.translation_lattice.basis):
            t = rl.vadd(t, rl.vscale(Fraction(c), v))
        return Isometry(rl.identity(self.ambient_dim), t)

    def element(self, wbar: Isometry, coords) -> Isometry:
        """(w-bar, gamma) |-> translation(gamma) . w-bar."""
        return self.translation(coords).compose(wbar)

    def factor(self, g: Isometry):
        """Unique factorization g = translation(gamma) . w-bar.

        Raises ValueError if the linear part is not in W-bar or the
        translation is not a lattice vector."""
        wbar = Isometry(g.linear,
                        tuple(Fraction(0) for _ in range(self.ambient_dim)))
        keys = {h.key() for h in self.finite_part.elements()}
        if wbar.key() not in keys:
            raise ValueError("linear part not in the finite Weyl group")
        coords = []
        for w in self.weight_lattice.basis:
            c = _dot(w, g.translation)
            if isinstance(c, Fraction) and c.denominator != 1:
                raise ValueError("translation part not in the coroot lattice")
            coords.append(int(c) if isinstance(c, Fraction) else int(round(c)))
        return wbar, tuple(coords)

    def fold(self, x):
        return fold_to_alcove(self, x)

    def interior_point(self):
        """Alcove-interior point: the weight sum scaled into the open alcove."""
        p = self.finite_part.interior_point()
        h = _dot(p, self.highest_root)
        return tuple(c / (2 * h) for c in p)

    def random_element(self, rng, lattice_radius: int = 2) -> Isometry:
        wbar = self.finite_part.random_element(rng)
        coords = [int(rng.integers(-lattice_radius, lattice_radius + 1))
                  for _ in range(self.rank)]
        return self.element(wbar, coords)


def enumerate_elements(group) -> list[Isometry]:
    """Full element list of a finite group; rejects affine input."""
    if getattr(group, "is_affine", False):
        raise NotFinite("affine Weyl groups are infinite")
    return group.elements()


def fold_to_chamber(group: FiniteCoxeterGroup, x):
    """Reflect across the lowest-index violated simple wall until x lies in
    the closed dominant chamber.  Returns (folded point, word)."""
    simple = group.root_system.simple_roots
    word = []
    for _ in range(_FOLD_MAX_STEPS):
        violated = None
        for i, a in enumerate(simple):
            if _dot(a, x) < 0:
                violated = i
                break
        if violated is None:
            return x, word
        x = group.generators[violated].apply(x)
        word.append(violated)
    raise RuntimeError("folding did not terminate")


def fold_to_alcove(group: AffineWeylGroup, x):
    """Walk across violated alcove walls (simple walls and the affine wall
    <x, highest_root> = 1) until x lies in the closed fundamental alcove.
    Returns (folded point, word); index rank denotes the affine generator."""
    simple = group.root_system.simple_roots
    hr = group.highest_root
    r = group.rank
    word = []
    for _ in range(_FOLD_MAX_STEPS):
        violated = None
        for i, a in enumerate(simple):
            if _dot(a, x) < 0:
                violated = i
                break
        if violated is None and _dot(hr, x) > 1:
            violated = r
        if violated is None:
            return x, word
        x = group.generators[violated].apply(x)
        word.append(violated)
    raise RuntimeError("alcove folding did not terminate")


def orbit_equal(group, x, y, tol=0) -> bool:
    """True iff x and y fold to the same fundamental-domain representative."""
    fx, _ = group.fold(x)
    fy, _ = group.fold(y)
    if tol == 0:
        return tuple(fx) == tuple(fy)
    return max(abs(float(a) - float(b)) for a, b in zip(fx, fy)) <= tol


@dataclass
class OrthogonalDecomposition:
    """Common fixed space E0 plus irreducible orthogonal factors."""
    E0: list            # exact orthogonal basis (possibly empty)
    factors: list       # list of (subspace basis, generator index list)


def _reflection_root(g: Isometry):
    """Root direction of a linear reflection, or None if g is not one."""
    n = g.dim
    if any(x != 0 for x in g.translation):
        return None
    eye = rl.identity(n) if g.is_exact else tuple(
        tuple(float(i == j) for j in range(n)) for i in range(n))
    diff = tuple(tuple(e - l for e, l in zip(erow, lrow))
                 for erow, lrow in zip(eye, g.linear))
    # involutive reflection: (I - A) has rank 1
    if g.is_exact:
        if rl.rank(diff) != 1:
            return None
        if g.compose(g).key() != identity_isometry(n).key():
            return None
        col = next(c for c in zip(*diff) if any(x != 0 for x in c))
        root, _ = rl.primitive(col)
        return root
    m = np.array(diff, float)
    if np.linalg.matrix_rank(m, tol=1e-9) != 1:
        return None
    if not g.compose(g).is_identity(tol=1e-9):
        return None
    col = m[:, int(np.argmax(np.abs(m).sum(axis=0)))]
    return tuple(col / np.linalg.norm(col))


def decompose(generators: list[Isometry]) -> OrthogonalDecomposition:
    """Split the ambient space into the common fixed space E0 and the spans
    of the connected components of the Coxeter graph on the generators."""
    if not generators:
        return OrthogonalDecomposition(E0=[], factors=[])
    n = generators[0].dim
    roots = []
    for g in generators:
        root = _reflection_root(g)
        if root is None:
            raise NotReflections("generator is not an involutive linear reflection")
        roots.append(root)

    exact = generators[0].is_exact
    if exact:
        e0 = rl.nullspace(tuple(roots))
        e0 = rl.gram_schmidt(e0)
    else:
        m = np.array([list(map(float, r)) for r in roots], float)
        _, s, vt = np.linalg.svd(m, full_matrices=True)
        nz = (s > 1e-9).sum()
        e0 = [tuple(row) for row in vt[nz:]]

    # connected components of the graph: i ~ j iff roots not orthogonal
    k = len(roots)
    comp = list(range(k))

    def find(i):
        while comp[i] != i:
            comp[i] = comp[comp[i]]
            i = comp[i]
        return i

    for i in range(k):
        for j in range(i + 1, k):
            d = _dot(roots[i], roots[j])
            if (d != 0) if exact else (abs(float(d)) > 1e-9):
                comp[find(i)] = find(j)

    groups: dict[int, list[int]] = {}
    for i in range(k):
        groups.setdefault(find(i), []).append(i)

    factors = []
    for idxs in sorted(groups.values()):
        span = [roots[i] for i in idxs]
        if exact:
            basis = rl.gram_schmidt(span)
        else:
            m = np.array([list(map(float, r)) for r in span], float)
            _, s, vt = np.linalg.svd(m, full_matrices=False)
            basis = [tuple(row) for row in vt[: (s > 1e-9).sum()]]
        factors.append((basis, idxs))
    return OrthogonalDecomposition(E0=list(e0), factors=factors)


class ProductGroup:
    """Direct product of finite/affine factors acting block-diagonally, with
    optional trailing trivial dimensions."""

    def __init__(self, factors, trivial_dims: int = 0):
        self.factors = list(factors)
        self.trivial_dims = trivial_dims
        self.slices = []
        off = 0
        for f in self.factors:
            self.slices.append((off, off + f.ambient_dim))
            off += f.ambient_dim
        self.trivial_slice = (off, off + trivial_dims)
        self.ambient_dim = off + trivial_dims

    @property
    def is_affine(self) -> bool:
        return any(f.is_affine for f in self.factors)

    def embed(self, factor_index: int, g: Isometry) -> Isometry:
        """Block-diagonal extension of a factor isometry by the identity."""
        n = self.ambient_dim
        lo, hi = self.slices[factor_index]
        exact = g.is_exact
        zero = Fraction(0) if exact else 0.0
        one = Fraction(1) if exact else 1.0
        lin = [[zero] * n for _ in range(n)]
        trans = [zero] * n
        for i in range(n):
            lin[i][i] = one
        for i in range(lo, hi):
            for j in range(lo, hi):
                lin[i][j] = g.linear[i - lo][j - lo]
            trans[i] = g.translation[i - lo]
        return Isometry(tuple(map(tuple, lin)), tuple(trans))

    @property
    def generators(self) -> list[Isometry]:
        gens = []
        for i, f in enumerate(self.factors):
            gens.extend(self.embed(i, g) for g in f.generators)
        return gens

    def fold(self, x):
        out = list(x)
        word = []
        for i, (lo, hi) in enumerate(self.slices):
            fx, w = self.factors[i].fold(tuple(x[lo:hi]))
            out[lo:hi] = list(fx)
            word.append(w)
        return tuple(out), word

    def random_element(self, rng) -> Isometry:
        g = None
        for i, f in enumerate(self.factors):
            h = self.embed(i, f.random_element(rng))
            g = h if g is None else g.compose(h)
        if g is None:
            g = identity_isometry(self.ambient_dim)
        return g


def as_product(group) -> ProductGroup:
    if isinstance(group, ProductGroup):
        return group
    return ProductGroup([group], 0)
