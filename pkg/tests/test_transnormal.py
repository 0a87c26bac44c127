import math

import numpy as np
import pytest

from coxinv.invariants import real_generators
from coxinv.reflection_groups import AffineWeylGroup, FiniteCoxeterGroup
from coxinv.root_systems import build_root_system
from coxinv.sampling import make_rng, sample_ball_point
from coxinv.separator import build_separating_map
from coxinv.transnormal import (
    check_transnormal,
    finite_difference_gradient,
    gradient,
    gram_matrix,
    regular_rank,
)


@pytest.fixture(scope="module")
def b2_map():
    return build_separating_map(FiniteCoxeterGroup(build_root_system("B", 2)))


@pytest.fixture(scope="module")
def affine_a1_map():
    return build_separating_map(AffineWeylGroup(build_root_system("A", 1)))


class TestGradients:
    def test_fd_agreement_polynomial(self, b2_map):
        rng = make_rng(2)
        for _ in range(20):
            x = sample_ball_point(2, rng)
            for f in b2_map.factor_systems[0].generators:
                g = gradient(f, x)
                fd = finite_difference_gradient(f, x)
                scale = max(1.0, float(np.linalg.norm(g)))
                assert np.linalg.norm(g - fd) / scale < 1e-6

    def test_fd_agreement_trig(self, affine_a1_map):
        rng = make_rng(3)
        for _ in range(20):
            x = sample_ball_point(2, rng)
            for f in affine_a1_map.factor_systems[0].generators:
                g = gradient(f, x)
                fd = finite_difference_gradient(f, x)
                scale = max(1.0, float(np.linalg.norm(g)))
                assert np.linalg.norm(g - fd) / scale < 1e-6


class TestGramMatrix:
    def test_symmetric_psd(self, b2_map):
        x = np.array([0.7, 0.2])
        b = gram_matrix(b2_map, x)
        assert np.allclose(b, b.T)
        assert np.all(np.linalg.eigvalsh(b) > -1e-12)

    def test_affine_a1_closed_form(self, affine_a1_map):
        # single generator y1 = cos(2 pi <gamma_1, x>):
        # b_11 = 4 pi^2 ||gamma_1||^2 (1 - y1^2)
        y1 = affine_a1_map.factor_systems[0].generators[0]
        gamma_sq = 0.5  # gamma_1 = (1/2, -1/2)
        rng = make_rng(5)
        for _ in range(50):
            x = sample_ball_point(2, rng)
            b = gram_matrix(affine_a1_map, x)
            v = y1.eval(x)
            expected = 4 * math.pi ** 2 * gamma_sq * (1 - v ** 2)
            assert abs(b[-1, -1] - expected) < 1e-9

    def test_rank_drop_on_walls(self, b2_map):
        assert regular_rank(b2_map, np.zeros(2)) == 0
        assert regular_rank(b2_map, np.array([0.9, 0.4])) == 2
        # on the wall x2 = 0 the orbit is singular and dF drops rank
        assert regular_rank(b2_map, np.array([0.9, 0.0])) == 1


class TestCheckTransnormal:
    @pytest.mark.parametrize("label, rank", [("A", 2), ("B", 2)])
    def test_finite_groups_pass(self, label, rank):
        fmap = build_separating_map(
            FiniteCoxeterGroup(build_root_system(label, rank)))
        gram, bracket = check_transnormal(fmap, n_pairs=120, seed=11)
        assert gram.passed and gram.gram_deviation < 1e-8
        assert bracket.passed and bracket.max_residual < 1e-8
        assert bracket.n_regular_samples > 0

    def test_affine_passes_with_isoparametric(self, affine_a1_map):
        gram, bracket, iso = check_transnormal(
            affine_a1_map, n_pairs=120, seed=11, isoparametric=True)
        assert gram.passed and bracket.passed and iso.passed

    def test_deterministic_reports(self, b2_map):
        r1 = check_transnormal(b2_map, n_pairs=60, seed=4)
        r2 = check_transnormal(b2_map, n_pairs=60, seed=4)
        assert r1[0].to_json_dict() == r2[0].to_json_dict()
        assert r1[1].to_json_dict() == r2[1].to_json_dict()

    def test_corrupted_map_fails_gram(self, b2_map):
        from coxinv.invariants import Polynomial
        bad = build_separating_map(
            FiniteCoxeterGroup(build_root_system("B", 2)))
        bad.factor_systems[0].generators[1] = Polynomial.variable(2, 0)
        gram, _ = check_transnormal(bad, n_pairs=60, seed=4)
        assert not gram.passed
