"""Group-invariant differential forms in the generator basis.

A degree-k form is a sum of terms lambda(F(x)) dF_{i_1} ^ ... ^ dF_{i_k}
with lambda a polynomial in the output coordinates of the backing separating
map.  Evaluation at (x; v_1..v_k) is lambda(F(x)) * det[<dF_{i_a}(x), v_b>];
pullback invariance under the group elements is checked on sampled points
and frames.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadIndexTuple
from .invariants import Polynomial
from .sampling import make_rng


@dataclass
class InvariantForm:
    backing_map: object
    degree: int
    terms: list     # list of (index tuple over outputs, Polynomial lambda)

    def evaluate(self, x, vectors) -> float:
        if len(vectors) != self.degree:
            raise ValueError(f"expected {self.degree} vector arguments")
        fx = self.backing_map.evaluate(x)
        rows = self.backing_map.gradient_rows(x)
        total = 0.0
        for idx, lam in self.terms:
            if self.degree == 0:
                det = 1.0
            else:
                m = np.array([[float(rows[i] @ np.asarray(v, float))
                               for v in vectors] for i in idx])
                det = float(np.linalg.det(m))
            total += lam.eval(fx) * det
        return total


def build_form(fmap, degree: int, terms) -> InvariantForm:
    """Validate index tuples and wrap the term list."""
    n = fmap.output_dim
    checked = []
    for idx, lam in terms:
        idx = tuple(idx)
        if len(idx) != degree:
            raise BadIndexTuple(f"tuple {idx} has length != degree {degree}")
        if any(not 0 <= i < n for i in idx):
            raise BadIndexTuple(f"tuple {idx} out of range 0..{n - 1}")
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise BadIndexTuple(f"tuple {idx} is not strictly increasing")
        if not isinstance(lam, Polynomial) or lam.nvars != n:
            raise BadIndexTuple("coefficient must be a polynomial in the "
                                f"{n} output variables")
        checked.append((idx, lam))
    return InvariantForm(backing_map=fmap, degree=degree, terms=checked)


def jacobian_form(fmap) -> InvariantForm:
    """Top-degree form dF_1 ^ ... ^ dF_n with unit coefficient."""
    n = fmap.output_dim
    return build_form(fmap, n, [(tuple(range(n)),
                                 Polynomial.constant(n, 1))])


def pullback_deviation(form: InvariantForm, g, n_samples: int = 50,
                       n_frames: int = 3, seed: int = 0,
                       radius: float = 1.5) -> float:
    """max |omega(g x; g v_1..g v_k) - omega(x; v_1..v_k)| over seeded
    samples and frames."""
    rng = make_rng(seed)
    dim = form.backing_map.input_dim
    worst = 0.0
    for _ in range(n_samples):
        x = radius * rng.standard_normal(dim) / np.sqrt(dim)
        for _ in range(n_frames):
            vs = [rng.standard_normal(dim) for _ in range(form.degree)]
            gx = np.array([float(v) for v in g.apply(tuple(x))])
            gvs = [np.array([float(c) for c in g.apply_linear(tuple(v))])
                   for v in vs]
            worst = max(worst, abs(form.evaluate(gx, gvs) - form.evaluate(x, vs)))
    return worst


def form_descriptor(form: InvariantForm) -> dict:
    """JSON-ready descriptor referencing the backing map by content hash."""
    return {
        "backing_map": form.backing_map.content_hash(),
        "degree": form.degree,
        "terms": [{"indices": list(idx), "lambda": lam.to_json_dict()}
                  for idx, lam in form.terms],
    }
