import math

import numpy as np
import pytest

from coxinv.errors import BadIndexTuple
from coxinv.forms import (
    build_form,
    form_descriptor,
    jacobian_form,
    pullback_deviation,
)
from coxinv.invariants import Polynomial
from coxinv.reflection_groups import FiniteCoxeterGroup, Isometry
from coxinv.root_systems import build_root_system
from coxinv.sampling import make_rng
from coxinv.separator import build_separating_map


@pytest.fixture(scope="module")
def b2_map():
    return build_separating_map(FiniteCoxeterGroup(build_root_system("B", 2)))


def rotation(theta):
    c, s = math.cos(theta), math.sin(theta)
    return Isometry(((c, -s), (s, c)), (0.0, 0.0))


class TestBuild:
    def test_degree_zero_matches_composition(self, b2_map):
        lam = Polynomial.variable(2, 0) * Polynomial.variable(2, 1)
        form = build_form(b2_map, 0, [((), lam)])
        rng = make_rng(1)
        for _ in range(20):
            x = rng.standard_normal(2)
            fx = b2_map.evaluate(x)
            assert abs(form.evaluate(x, []) - lam.eval(fx)) <= 1e-12

    def test_alternation(self, b2_map):
        form = build_form(b2_map, 2,
                          [((0, 1), Polynomial.constant(2, 1))])
        x = np.array([0.8, 0.3])
        v1, v2 = np.array([1.0, 0.2]), np.array([-0.4, 1.1])
        assert abs(form.evaluate(x, [v1, v2])
                   + form.evaluate(x, [v2, v1])) < 1e-12
        assert abs(form.evaluate(x, [v1, v1])) < 1e-12

    def test_bad_index_tuples(self, b2_map):
        one = Polynomial.constant(2, 1)
        with pytest.raises(BadIndexTuple):
            build_form(b2_map, 2, [((1, 0), one)])     # not increasing
        with pytest.raises(BadIndexTuple):
            build_form(b2_map, 2, [((0, 5), one)])     # out of range
        with pytest.raises(BadIndexTuple):
            build_form(b2_map, 1, [((0, 1), one)])     # wrong length
        with pytest.raises(BadIndexTuple):
            build_form(b2_map, 1, [((0,), Polynomial.constant(3, 1))])

    def test_jacobian_form_is_top_degree(self, b2_map):
        form = jacobian_form(b2_map)
        assert form.degree == b2_map.output_dim
        assert form.terms[0][0] == tuple(range(b2_map.output_dim))


class TestPullback:
    @pytest.mark.parametrize("spec", [("A", 2), ("B", 2)])
    @pytest.mark.parametrize("degree", [0, 1, 2])
    def test_invariant_under_group(self, spec, degree):
        fmap = build_separating_map(
            FiniteCoxeterGroup(build_root_system(*spec)))
        n = fmap.output_dim
        lam = Polynomial.variable(n, 0)
        idx = tuple(range(degree))
        form = build_form(fmap, degree, [(idx, lam)])
        for g in fmap.group.generators:
            assert pullback_deviation(form, g, n_samples=20, seed=3) < 1e-10

    def test_rotation_control_detected(self, b2_map):
        form = jacobian_form(b2_map)
        dev_group = max(pullback_deviation(form, g, n_samples=20, seed=3)
                        for g in b2_map.group.generators)
        dev_rot = pullback_deviation(form, rotation(math.radians(10)),
                                     n_samples=20, seed=3)
        assert dev_group < 1e-10
        assert dev_rot > 1e-3

    def test_deviation_deterministic(self, b2_map):
        form = jacobian_form(b2_map)
        g = b2_map.group.generators[0]
        assert (pullback_deviation(form, g, seed=5)
                == pullback_deviation(form, g, seed=5))


class TestDescriptor:
    def test_references_backing_hash(self, b2_map):
        form = jacobian_form(b2_map)
        d = form_descriptor(form)
        assert d["backing_map"] == b2_map.content_hash()
        assert d["degree"] == 2
        assert d["terms"][0]["indices"] == [0, 1]
