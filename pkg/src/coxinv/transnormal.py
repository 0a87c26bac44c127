"""Numerical verification of the transnormal-map conditions.

Condition (1) is certified as "the gradient Gram matrix is constant on
level-set samples": orbit pairs (x, g x) have equal F-values, so b_ij must
agree there.  Condition (2) checks that brackets of the gradient fields stay
inside the span of the gradients; brackets are formed from analytic Hessians,
[grad f_i, grad f_j] = Hess f_j grad f_i - Hess f_i grad f_j.
An optional isoparametric report compares analytic Laplacians on the same
orbit-pair surrogate.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .reflection_groups import as_product
from .sampling import make_rng, sample_ball_point

REGULARITY_GATE = 1e-4
RANK_CUTOFF = 1e-9
FD_STEP = 1e-5


def gradient(f, x) -> np.ndarray:
    """Analytic gradient of a polynomial or trigonometric invariant."""
    return np.real(np.asarray(f.gradient(x)))


def finite_difference_gradient(f, x, step: float = FD_STEP) -> np.ndarray:
    x = np.array([float(v) for v in x])
    g = np.zeros(len(x))
    for i in range(len(x)):
        e = np.zeros(len(x))
        e[i] = step
        g[i] = (np.real(f.eval(x + e)) - np.real(f.eval(x - e))) / (2 * step)
    return g


def gram_matrix(fmap, x) -> np.ndarray:
    """b_ij(x) = <grad f_i(x), grad f_j(x)>; PSD, definite at regular points."""
    rows = fmap.gradient_rows(x)
    return rows @ rows.T


def regular_rank(fmap, x) -> int:
    """Numerical rank of dF(x); singular values below 1e-9 of the largest
    count as zero."""
    rows = fmap.gradient_rows(x)
    s = np.linalg.svd(rows, compute_uv=False)
    if len(s) == 0 or s[0] == 0:
        return 0
    return int((s > RANK_CUTOFF * s[0]).sum())


def _brackets(fmap, x) -> list[np.ndarray]:
    rows = fmap.gradient_rows(x)
    hs = fmap.hessians(x)
    out = []
    n = len(rows)
    for i in range(n):
        for j in range(i + 1, n):
            out.append(hs[j] @ rows[i] - hs[i] @ rows[j])
    return out


@dataclass
class GramReport:
    gram_deviation: float
    tol: float
    n_pairs: int
    ranks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.gram_deviation < self.tol

    def to_json_dict(self):
        return {"gram_deviation": self.gram_deviation, "tol": self.tol,
                "n_pairs": self.n_pairs, "pass": self.passed}


@dataclass
class BracketReport:
    max_residual: float
    tol: float
    n_regular_samples: int

    @property
    def passed(self) -> bool:
        return self.max_residual < self.tol

    def to_json_dict(self):
        return {"bracket_residual": self.max_residual, "tol": self.tol,
                "n_regular_samples": self.n_regular_samples,
                "pass": self.passed}


@dataclass
class IsoparametricReport:
    laplacian_deviation: float
    tol: float
    n_pairs: int

    @property
    def passed(self) -> bool:
        return self.laplacian_deviation < self.tol

    def to_json_dict(self):
        return {"laplacian_deviation": self.laplacian_deviation,
                "tol": self.tol, "n_pairs": self.n_pairs, "pass": self.passed}


def check_transnormal(fmap, group=None, n_pairs: int = 300,
                      tol_gram: float = 1e-8, tol_bracket: float = 1e-8,
                      seed: int = 0, isoparametric: bool = False):
    """Certify the Gram and bracket conditions at desk scale on orbit
    pairs (x, g x).  Returns (GramReport, BracketReport) and, if requested,
    an IsoparametricReport as third element."""
    prod = as_product(group) if group is not None else fmap.group
    rng = make_rng(seed)
    gram_dev = 0.0
    lap_dev = 0.0
    bracket_res = 0.0
    n_regular = 0
    ranks = []
    for _ in range(n_pairs):
        x = sample_ball_point(fmap.input_dim, rng)
        g = prod.random_element(rng)
        y = np.array([float(v) for v in g.apply(tuple(x))])
        bx, by = gram_matrix(fmap, x), gram_matrix(fmap, y)
        gram_dev = max(gram_dev, float(np.max(np.abs(bx - by))))
        if isoparametric:
            lap_dev = max(lap_dev, float(np.max(np.abs(
                fmap.laplacians(x) - fmap.laplacians(y)))))
        ranks.append(regular_rank(fmap, x))
        rows = fmap.gradient_rows(x)
        s = np.linalg.svd(rows, compute_uv=False)
        if s[-1] <= REGULARITY_GATE:
            continue
        n_regular += 1
        for br in _brackets(fmap, x):
            coeffs, *_ = np.linalg.lstsq(rows.T, br, rcond=None)
            bracket_res = max(bracket_res,
                              float(np.linalg.norm(br - rows.T @ coeffs)))
    gram = GramReport(gram_dev, tol_gram, n_pairs, ranks)
    bracket = BracketReport(bracket_res, tol_bracket, n_regular)
    if isoparametric:
        return gram, bracket, IsoparametricReport(lap_dev, tol_gram, n_pairs)
    return gram, bracket
