"""Generator systems of invariant functions.

Finite factors get homogeneous polynomial generators produced by averaging
power seeds over the group (the Reynolds projection) and keeping each result
whose differential enlarges the Jacobian rank at a designated regular point.
Affine factors get real trigonometric generators: orbit-averaged exponential
sums over the fundamental weights, split into real and imaginary parts along
the index involution rho with -gamma_i in the orbit of gamma_rho(i).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import ratlinalg as rl
from .errors import (
    IndependenceFailure,
    InvolutionNotFound,
    NotFinite,
    WeightNotInLattice,
)
from .reflection_groups import AffineWeylGroup, FiniteCoxeterGroup, fold_to_chamber
from .root_systems import classical_degrees, fundamental_weights

RANK_TOL = 1e-8


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


class Polynomial:
    """Sparse multivariate polynomial: exponent multi-index -> coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c != 0:
                    self.terms[tuple(e)] = c

    @staticmethod
    def zero(nvars: int) -> "Polynomial":
        return Polynomial(nvars)

    @staticmethod
    def constant(nvars: int, c) -> "Polynomial":
        return Polynomial(nvars, {(0,) * nvars: c})

    @staticmethod
    def variable(nvars: int, i: int) -> "Polynomial":
        e = [0] * nvars
        e[i] = 1
        return Polynomial(nvars, {tuple(e): Fraction(1)})

    @staticmethod
    def linear_form(coeffs) -> "Polynomial":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c != 0:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return Polynomial(n, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
            if out[e] == 0:
                del out[e]
        return Polynomial(self.nvars, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "Polynomial":
        if c == 0:
            return Polynomial.zero(self.nvars)
        return Polynomial(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.nvars, {e: c for e, c in out.items() if c != 0})

    def pow(self, k: int) -> "Polynomial":
        result = Polynomial.constant(self.nvars, Fraction(1))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def compose_linear(self, matrix) -> "Polynomial":
        """p(M x): substitute variable i by the linear form sum_j M[i][j] x_j."""
        n = self.nvars
        lins = [Polynomial.linear_form(matrix[i]) for i in range(n)]
        max_exp = [0] * n
        for e in self.terms:
            for i, k in enumerate(e):
                max_exp[i] = max(max_exp[i], k)
        powers = []
        for i in range(n):
            ps = [Polynomial.constant(n, Fraction(1))]
            for _ in range(max_exp[i]):
                ps.append(ps[-1] * lins[i])
            powers.append(ps)
        out = Polynomial.zero(n)
        for e, c in self.terms.items():
            term = Polynomial.constant(n, c)
            for i, k in enumerate(e):
                if k:
                    term = term * powers[i][k]
            out = out + term
        return out

    def diff(self, i: int) -> "Polynomial":
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = list(e)
            e2[i] -= 1
            out[tuple(e2)] = c * e[i]
        return Polynomial(self.nvars, out)

    def normalized(self) -> "Polynomial":
        """Scale so the largest absolute coefficient is 1 (rational scaling)."""
        if not self.terms:
            return self
        m = max(abs(c) for c in self.terms.values())
        return self.scale(Fraction(1) / Fraction(m) if isinstance(m, Fraction)
                          else 1.0 / m)

    # -- float evaluation ---------------------------------------------------

    def eval(self, x) -> float:
        total = 0.0
        xf = [float(v) for v in x]
        for e, c in self.terms.items():
            t = float(c)
            for xi, k in zip(xf, e):
                if k:
                    t *= xi ** k
            total += t
        return total

    def gradient(self, x) -> np.ndarray:
        return np.array([self.diff(i).eval(x) for i in range(self.nvars)])

    def hessian(self, x) -> np.ndarray:
        n = self.nvars
        h = np.zeros((n, n))
        for i in range(n):
            di = self.diff(i)
            for j in range(i, n):
                v = di.diff(j).eval(x)
                h[i, j] = v
                h[j, i] = v
        return h

    def laplacian(self, x) -> float:
        return sum(self.diff(i).diff(i).eval(x) for i in range(self.nvars))

    def to_json_dict(self):
        def enc(c):
            if isinstance(c, Fraction):
                return [c.numerator, c.denominator]
            return c
        return {"kind": "polynomial", "nvars": self.nvars,
                "terms": [{"exp": list(e), "coef": enc(c)}
                          for e, c in sorted(self.terms.items())]}

    @staticmethod
    def from_json_dict(d) -> "Polynomial":
        terms = {}
        for t in d["terms"]:
            c = t["coef"]
            terms[tuple(t["exp"])] = Fraction(c[0], c[1]) if isinstance(c, list) else c
        return Polynomial(d["nvars"], terms)


class TrigInvariant:
    """Finite Fourier combination over weight-lattice vectors:
    x |-> sum_gamma c_gamma exp(2 pi i gamma(x))."""

    def __init__(self, weight_basis, terms, realness_flag=False):
        # weight_basis: ambient vectors of the fundamental weights (exact)
        # terms: dict[integer coords over the weight basis -> complex coeff]
        self.weight_basis = tuple(tuple(w) for w in weight_basis)
        self.terms = {tuple(k): complex(v) for k, v in terms.items()
                      if abs(complex(v)) > 0}
        self.realness_flag = realness_flag
        basis = np.array([[float(x) for x in w] for w in self.weight_basis])
        self._vecs = {k: np.array(k, float) @ basis for k in self.terms}

    @property
    def nvars(self) -> int:
        return len(self.weight_basis[0])

    def ambient_weight(self, coords):
        """Exact ambient vector of an integer weight coordinate tuple."""
        v = tuple(Fraction(0) for _ in range(self.nvars))
        for c, w in zip(coords, self.weight_basis):
            v = rl.vadd(v, rl.vscale(Fraction(c), w))
        return v

    def eval_complex(self, x) -> complex:
        xf = np.array([float(v) for v in x])
        return sum(c * cmath.exp(2j * math.pi * float(self._vecs[k] @ xf))
                   for k, c in self.terms.items())

    def eval(self, x) -> float:
        v = self.eval_complex(x)
        return v.real if self.realness_flag else v

    def gradient(self, x) -> np.ndarray:
        xf = np.array([float(v) for v in x])
        g = np.zeros(self.nvars, dtype=complex)
        for k, c in self.terms.items():
            gv = self._vecs[k]
            g += c * 2j * math.pi * cmath.exp(2j * math.pi * float(gv @ xf)) * gv
        return g.real if self.realness_flag else g

    def hessian(self, x) -> np.ndarray:
        xf = np.array([float(v) for v in x])
        h = np.zeros((self.nvars, self.nvars), dtype=complex)
        for k, c in self.terms.items():
            gv = self._vecs[k]
            h += (c * (2j * math.pi) ** 2
                  * cmath.exp(2j * math.pi * float(gv @ xf))
                  * np.outer(gv, gv))
        return h.real if self.realness_flag else h

    def laplacian(self, x) -> float:
        xf = np.array([float(v) for v in x])
        total = 0j
        for k, c in self.terms.items():
            gv = self._vecs[k]
            total += (c * (2j * math.pi) ** 2 * float(gv @ gv)
                      * cmath.exp(2j * math.pi * float(gv @ xf)))
        return total.real if self.realness_flag else total

    def conjugate(self) -> "TrigInvariant":
        return TrigInvariant(
            self.weight_basis,
            {tuple(-c for c in k): v.conjugate() for k, v in self.terms.items()},
            self.realness_flag)

    def real_part(self) -> "TrigInvariant":
        out = {}
        for k, v in self.terms.items():
            out[k] = out.get(k, 0) + v / 2
            mk = tuple(-c for c in k)
            out[mk] = out.get(mk, 0) + v.conjugate() / 2
        return TrigInvariant(self.weight_basis, out, realness_flag=True)

    def imag_part(self) -> "TrigInvariant":
        out = {}
        for k, v in self.terms.items():
            out[k] = out.get(k, 0) + v / 2j
            mk = tuple(-c for c in k)
            out[mk] = out.get(mk, 0) - v.conjugate() / 2j
        return TrigInvariant(self.weight_basis, out, realness_flag=True)

    def is_hermitian(self, tol: float = 1e-12) -> bool:
        for k, v in self.terms.items():
            mk = tuple(-c for c in k)
            if abs(self.terms.get(mk, 0) - v.conjugate()) > tol:
                return False
        return True

    def to_json_dict(self):
        return {"kind": "trig",
                "weight_basis": [[[c.numerator, c.denominator] for c in w]
                                 for w in self.weight_basis],
                "real": self.realness_flag,
                "fourier": [{"weight": list(k), "re": v.real, "im": v.imag}
                            for k, v in sorted(self.terms.items())]}

    @staticmethod
    def from_json_dict(d) -> "TrigInvariant":
        basis = [tuple(Fraction(c[0], c[1]) for c in w) for w in d["weight_basis"]]
        terms = {tuple(t["weight"]): complex(t["re"], t["im"])
                 for t in d["fourier"]}
        return TrigInvariant(basis, terms, d["real"])


@dataclass
class GeneratorSystem:
    group: object
    generators: list
    degrees_or_weights: list
    designated_point: np.ndarray
    jacobian_det: float
    kind: str                      # "polynomial" or "trig"
    meta: dict = field(default_factory=dict)


def reynolds(p: Polynomial, group: FiniteCoxeterGroup) -> Polynomial:
    """|W|^-1 sum_w p(w x): projection onto the invariant ring."""
    if getattr(group, "is_affine", False):
        raise NotFinite("Reynolds averaging needs a finite group")
    elements = group.elements()
    total = Polynomial.zero(p.nvars)
    for w in elements:
        total = total + p.compose_linear(w.linear)
    return total.scale(Fraction(1, len(elements)))


def _span_basis_float(rs) -> np.ndarray:
    roots = np.array([[float(x) for x in a] for a in rs.simple_roots])
    q, _ = np.linalg.qr(roots.T)
    return q.T[: rs.rank]          # orthonormal rows spanning the root span


def designated_regular_point(group) -> np.ndarray:
    """Normalized weight sum (finite) or the alcove-interior scaled weight
    sum (affine): canonical and always regular."""
    ws = fundamental_weights(group.root_system)
    p = np.sum([[float(x) for x in w] for w in ws], axis=0)
    if getattr(group, "is_affine", False):
        hr = np.array([float(x) for x in group.highest_root])
        return p / (2.0 * float(hr @ p))
    return p / np.linalg.norm(p)


def jacobian_in_span(system_gradients, span_rows) -> float:
    """Determinant of the gradient tuple expressed in an orthonormal basis
    of the factor's effective subspace."""
    m = np.array([span_rows @ g for g in system_gradients])
    return float(np.linalg.det(m))


def chevalley_generators(group: FiniteCoxeterGroup) -> GeneratorSystem:
    """Homogeneous invariant generators with a full-rank Jacobian
    certificate at the designated regular point."""
    if getattr(group, "is_affine", False):
        raise NotFinite("expected a finite Coxeter group")
    rs = group.root_system
    r = rs.rank
    point = designated_regular_point(group)
    span = _span_basis_float(rs)
    weights = fundamental_weights(rs)
    seeds = list(weights)
    generic = tuple(sum((i + 1) * w[j] for i, w in enumerate(weights))
                    for j in range(rs.ambient_dim))
    seeds.append(generic)

    bound = 2 * max(classical_degrees(rs.type_label, rs.rank))
    kept: list[Polynomial] = []
    degrees: list[int] = []
    grads: list[np.ndarray] = []

    def current_rank(extra=None) -> int:
        rows = [span @ g for g in grads]
        if extra is not None:
            rows = rows + [span @ extra]
        if not rows:
            return 0
        s = np.linalg.svd(np.array(rows), compute_uv=False)
        return int((s > RANK_TOL * max(1.0, s[0])).sum())

    for d in range(2, bound + 1):
        if len(kept) == r:
            break
        for v in seeds:
            if len(kept) == r:
                break
            seed_poly = Polynomial.linear_form(tuple(v)).pow(d)
            cand = reynolds(seed_poly, group).normalized()
            if cand.is_zero():
                continue
            g = cand.gradient(point)
            if current_rank(g) > current_rank():
                kept.append(cand)
                degrees.append(d)
                grads.append(g)
    if len(kept) < r:
        raise IndependenceFailure(
            f"degree search up to {bound} produced rank {len(kept)} < {r}")

    det = jacobian_in_span(grads, span)
    return GeneratorSystem(group=group, generators=kept,
                           degrees_or_weights=degrees,
                           designated_point=point, jacobian_det=det,
                           kind="polynomial")


def _weight_coords(group: AffineWeylGroup, gamma):
    """Integer coordinates of gamma over the weight basis (pairing with the
    simple coroots); raises if not integral."""
    coords = []
    for a in group.root_system.simple_roots:
        sq = _dot(a, a)
        c = 2 * _dot(gamma, a) / sq
        if not isinstance(c, Fraction) or c.denominator != 1:
            raise WeightNotInLattice("vector is not in the weight lattice")
        coords.append(int(c))
    return tuple(coords)


def averaging_operator(gamma, group: AffineWeylGroup) -> TrigInvariant:
    """S(e^{2 pi i gamma}) = |W-bar|^-1 sum_w e^{2 pi i (w gamma)}."""
    group.root_system.require_crystallographic()
    weights = tuple(group.weight_lattice.basis)
    gamma = tuple(Fraction(x) for x in gamma)
    _weight_coords(group, gamma)   # lattice membership gate
    orbit = {}
    for w in group.finite_part.elements():
        img = w.apply_linear(gamma)
        orbit[img] = None
    coeff = 1.0 / len(orbit)
    terms = {_weight_coords(group, v): coeff for v in orbit}
    ti = TrigInvariant(weights, terms)
    ti.realness_flag = ti.is_hermitian()
    return ti


def weight_involution(group: AffineWeylGroup):
    """Permutation rho with -gamma_i in the W-bar orbit of gamma_rho(i)."""
    weights = list(group.weight_lattice.basis)
    rho = []
    for i, gamma in enumerate(weights):
        neg = rl.vneg(gamma)
        folded, _ = fold_to_chamber(group.finite_part, neg)
        match = next((j for j, w in enumerate(weights) if tuple(w) == tuple(folded)),
                     None)
        if match is None:
            raise InvolutionNotFound(
                f"-gamma_{i} does not fold onto a fundamental weight")
        rho.append(match)
    for i, j in enumerate(rho):
        if rho[j] != i:
            raise InvolutionNotFound("folded matches do not form an involution")
    return tuple(rho)


def real_generators(group: AffineWeylGroup) -> GeneratorSystem:
    """Real trigonometric generators y_1..y_n: the real orbit averages for
    rho-fixed indices, then Re/Im pairs for the swapped indices."""
    group.root_system.require_crystallographic()
    rho = weight_involution(group)
    n = group.rank
    fixed = [i for i in range(n) if rho[i] == i]
    pairs = [(i, rho[i]) for i in range(n) if i < rho[i]]
    p, q = len(fixed), len(pairs)

    xs = {i: averaging_operator(group.weight_lattice.basis[i], group)
          for i in fixed + [a for a, _ in pairs]}

    gens: list[TrigInvariant] = []
    labels: list = []
    for i in fixed:
        xi = xs[i]
        if not xi.realness_flag:
            raise InvolutionNotFound(f"x_{i} expected real for rho-fixed index")
        gens.append(xi)
        labels.append(("re", i))
    for a, _ in pairs:
        gens.append(xs[a].real_part())
        labels.append(("re", a))
    for a, _ in pairs:
        gens.append(xs[a].imag_part())
        labels.append(("im", a))

    point = designated_regular_point(group)
    span = _span_basis_float(group.root_system)
    grads = [np.asarray(g.gradient(point), float) for g in gens]
    det = jacobian_in_span(grads, span)
    return GeneratorSystem(group=group, generators=gens,
                           degrees_or_weights=labels,
                           designated_point=point, jacobian_det=det,
                           kind="trig",
                           meta={"p": p, "q": q, "involution": rho})
