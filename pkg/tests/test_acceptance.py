"""Acceptance criteria, one test per criterion.

Each test finishes by printing a single PASS line; any assertion failure
shows up as the corresponding FAIL through pytest.  Tolerances are pinned
to the values stated in the criteria and must not be loosened.
"""

import json
import math
import time
from fractions import Fraction as F

import numpy as np

from coxinv.arrangements import arrangement_of, count_chambers, is_invariant
from coxinv.cli import main as cli_main
from coxinv.invariants import chevalley_generators, real_generators
from coxinv.oracle import oracle_separation_audit
from coxinv.reflection_groups import (
    AffineWeylGroup,
    FiniteCoxeterGroup,
    Isometry,
    decompose,
    enumerate_elements,
    reflection_in,
)
from coxinv.root_systems import build_root_system, classified_order
from coxinv.sampling import make_rng
from coxinv.separator import (
    build_separating_map,
    check_invariance,
    check_separation,
)
from coxinv.transnormal import (
    check_transnormal,
    finite_difference_gradient,
    gradient,
    gram_matrix,
)
from coxinv.forms import build_form, jacobian_form, pullback_deviation
from coxinv.invariants import Polynomial


def report(n, text):
    print(f"[PASS] criterion {n}: {text}")


def test_criterion_01_group_orders():
    start = time.time()
    specs = ([("A", r) for r in (1, 2, 3, 4)] + [("B", 2), ("B", 3),
             ("C", 3), ("D", 4), ("G", 2)] + [("I2", m) for m in range(2, 9)])
    for label, rank in specs:
        g = FiniteCoxeterGroup(build_root_system(label, rank))
        assert len(enumerate_elements(g)) == classified_order(label, rank), \
            (label, rank)
    elapsed = time.time() - start
    assert elapsed < 10.0
    report(1, f"enumerated orders match classification ({elapsed:.2f} s)")


def test_criterion_02_decomposition():
    rng = make_rng(2024)
    pool = [
        (F(1), F(-1), F(0), F(0), F(0)),
        (F(0), F(1), F(-1), F(0), F(0)),
        (F(0), F(0), F(0), F(1), F(-1)),
        (F(0), F(0), F(0), F(1), F(1)),
        (F(0), F(0), F(0), F(0), F(1)),
    ]
    for trial in range(5):
        k = 2 + int(rng.integers(3))
        idxs = rng.permutation(len(pool))[:k]
        gens = [reflection_in(pool[i]) for i in idxs]
        d = decompose(gens)
        # factors pairwise orthogonal
        for a, (bi, _) in enumerate(d.factors):
            for bj, _ in d.factors[a + 1:]:
                for u in bi:
                    for v in bj:
                        assert sum(x * y for x, y in zip(u, v)) == 0
        # each generator preserves its factor subspace with residual exactly 0
        from coxinv.ratlinalg import solve
        for basis, gidx in d.factors:
            gram = [[sum(x * y for x, y in zip(a, b)) for b in basis]
                    for a in basis]
            for i in gidx:
                for v in basis:
                    img = gens[i].apply_linear(v)
                    coeffs = solve(gram, [sum(x * y for x, y in zip(a, img))
                                          for a in basis])
                    recon = tuple(sum(c * b[j] for c, b in zip(coeffs, basis))
                                  for j in range(len(v)))
                    assert recon == img
    report(2, "5 seeded reducible sets decompose with residual 0")


def test_criterion_03_chamber_counts():
    expected = {("A", 2): 6, ("B", 2): 8, ("G", 2): 12, ("A", 3): 24}
    for (label, rank), n in expected.items():
        g = FiniteCoxeterGroup(build_root_system(label, rank))
        assert count_chambers(arrangement_of(g)) == n, (label, rank)
    report(3, "chamber counts 6/8/12/24 exact")


def test_criterion_04_arrangement_invariance():
    finite = [("A", 2), ("B", 2), ("G", 2), ("A", 3)]
    affine = [("A", 1), ("A", 2), ("B", 2), ("G", 2)]
    for label, rank in finite:
        g = FiniteCoxeterGroup(build_root_system(label, rank))
        arr = arrangement_of(g)
        for s in g.generators:
            assert is_invariant(arr, s, 1) and is_invariant(arr, s, 10)
    for label, rank in affine:
        g = AffineWeylGroup(build_root_system(label, rank))
        arr = arrangement_of(g)
        for s in g.generators:
            assert is_invariant(arr, s, 1) and is_invariant(arr, s, 10)
    report(4, "arrangements invariant under all generators at radii 1 and 10")


def test_criterion_05_chevalley_systems():
    expected = {("A", 2): [2, 3], ("B", 2): [2, 4], ("G", 2): [2, 6]}
    for (label, rank), degrees in expected.items():
        g = FiniteCoxeterGroup(build_root_system(label, rank))
        system = chevalley_generators(g)
        assert system.degrees_or_weights == degrees
        assert abs(system.jacobian_det) > 1e-8
        rng = make_rng(500 + rank)
        worst = 0.0
        for _ in range(500):
            x = rng.standard_normal(g.ambient_dim)
            w = g.random_element(rng)
            wx = np.array([float(v) for v in w.apply(tuple(x))])
            for f in system.generators:
                worst = max(worst, abs(f.eval(wx) - f.eval(x)))
        assert worst < 1e-10, (label, rank, worst)
    report(5, "Chevalley degrees, Jacobian certificate, invariance < 1e-10")


def test_criterion_06_affine_generators():
    rho_expected = {("A", 1): (0,), ("A", 2): (1, 0),
                    ("B", 2): (0, 1), ("G", 2): (0, 1)}
    rng = make_rng(600)
    for (label, rank), rho in rho_expected.items():
        ag = AffineWeylGroup(build_root_system(label, rank))
        system = real_generators(ag)
        assert system.meta["involution"] == rho, (label, rank)
        assert abs(system.jacobian_det) > 1e-8
        worst_im = worst_inv = 0.0
        for _ in range(200):
            x = rng.standard_normal(ag.ambient_dim)
            g = ag.random_element(rng)
            gx = np.array([float(v) for v in g.apply(tuple(x))])
            for f in system.generators:
                worst_im = max(worst_im, abs(f.eval_complex(x).imag))
                worst_inv = max(worst_inv, abs(f.eval(gx) - f.eval(x)))
        assert worst_im < 1e-12
        assert worst_inv < 1e-10
    a2 = real_generators(AffineWeylGroup(build_root_system("A", 2)))
    assert a2.meta["p"] == 0 and a2.meta["q"] == 1
    assert a2.degrees_or_weights == [("re", 0), ("im", 0)]
    report(6, "affine real generators pass realness/invariance/rank; "
              "rho = (1 2) for affine A2, id for affine B2")


def test_criterion_07_separation():
    specs = [FiniteCoxeterGroup(build_root_system("A", 2)),
             FiniteCoxeterGroup(build_root_system("B", 2)),
             AffineWeylGroup(build_root_system("A", 1)),
             AffineWeylGroup(build_root_system("A", 2))]
    for g in specs:
        fmap = build_separating_map(g)
        rep = check_separation(fmap, n_pairs=1000, tol=1e-6, seed=7)
        assert rep.passed and rep.separation_min > 1e-6
        audit = oracle_separation_audit(fmap, fmap.group.factors[0],
                                        n=30, radius=3, seed=7)
        assert audit.passed and audit.constancy_deviation < 1e-9
    # negative control: a corrupted generator breaks orbit constancy
    bad = build_separating_map(FiniteCoxeterGroup(build_root_system("B", 2)))
    bad.factor_systems[0].generators[0] = Polynomial.variable(2, 0)
    audit = oracle_separation_audit(bad, bad.group.factors[0], n=10, seed=7)
    assert not audit.passed
    report(7, "separation margin > 1e-6 on 1000 pairs; oracle audit < 1e-9; "
              "negative control fails as required")


def test_criterion_08_transnormality():
    specs = [FiniteCoxeterGroup(build_root_system("A", 2)),
             FiniteCoxeterGroup(build_root_system("B", 2)),
             FiniteCoxeterGroup(build_root_system("G", 2)),
             AffineWeylGroup(build_root_system("A", 1)),
             AffineWeylGroup(build_root_system("A", 2))]
    rng = make_rng(800)
    for g in specs:
        fmap = build_separating_map(g)
        gram, bracket = check_transnormal(fmap, n_pairs=300, tol_gram=1e-8,
                                          tol_bracket=1e-8, seed=8)
        assert gram.passed and gram.gram_deviation < 1e-8
        assert bracket.passed and bracket.max_residual < 1e-8
        for _ in range(10):
            x = rng.standard_normal(fmap.input_dim)
            for system in fmap.factor_systems:
                for f in system.generators:
                    xs = x[: f.nvars]
                    a = gradient(f, xs)
                    fd = finite_difference_gradient(f, xs)
                    scale = max(1.0, float(np.linalg.norm(a)))
                    assert np.linalg.norm(a - fd) / scale < 1e-6
    # closed form for affine A1: b_11 = 4 pi^2 ||gamma_1||^2 (1 - y_1^2)
    fmap = build_separating_map(AffineWeylGroup(build_root_system("A", 1)))
    y1 = fmap.factor_systems[0].generators[0]
    for _ in range(100):
        x = rng.standard_normal(2)
        b = gram_matrix(fmap, x)
        v = y1.eval(x)
        assert abs(b[-1, -1] - 4 * math.pi ** 2 * 0.5 * (1 - v ** 2)) < 1e-9
    report(8, "gram < 1e-8, brackets < 1e-8, fd gradients 1e-6 rel, "
              "affine A1 closed form within 1e-9")


def test_criterion_09_forms():
    for label in ("A", "B"):
        fmap = build_separating_map(
            FiniteCoxeterGroup(build_root_system(label, 2)))
        n = fmap.output_dim
        for degree in (0, 1, 2):
            form = build_form(fmap, degree,
                              [(tuple(range(degree)),
                                Polynomial.variable(n, 0))])
            for g in fmap.group.generators:
                assert pullback_deviation(form, g, n_samples=20,
                                          seed=9) < 1e-10
    b2 = build_separating_map(FiniteCoxeterGroup(build_root_system("B", 2)))
    theta = math.radians(10)
    rot = Isometry(((math.cos(theta), -math.sin(theta)),
                    (math.sin(theta), math.cos(theta))), (0.0, 0.0))
    assert pullback_deviation(jacobian_form(b2), rot,
                              n_samples=20, seed=9) > 1e-3
    report(9, "pullback deviation < 1e-10 for degrees 0-2; 10-degree "
              "rotation control > 1e-3")


def test_criterion_10_determinism(capsys):
    start = time.time()
    invocations = [
        ["info", "--group", '{"type": "B", "rank": 2}', "--seed", "3"],
        ["invariants", "--group",
         '{"type": "A", "rank": 2, "affine": true}'],
        ["separate", "--group", '{"type": "A", "rank": 2}',
         "--pairs", "60", "--seed", "5"],
        ["transnormal", "--group",
         '{"type": "A", "rank": 1, "affine": true}', "--pairs", "60",
         "--seed", "5"],
        ["forms-check", "--group", '{"type": "B", "rank": 2}', "--seed", "5"],
        ["orbit", "--group", '{"type": "A", "rank": 2}',
         "--point", "[2, 1, 0]"],
        ["arrangement", "--group",
         '{"type": "G", "rank": 2, "affine": true}'],
    ]
    for argv in invocations:
        code1 = cli_main(argv)
        out1 = capsys.readouterr().out
        code2 = cli_main(argv)
        out2 = capsys.readouterr().out
        assert code1 == code2 == 0
        assert out1 == out2, argv
        json.loads(out1)
    report(10, f"all CLI reports byte-identical per seed "
               f"({time.time() - start:.2f} s)")
