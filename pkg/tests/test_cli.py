import json

import pytest

from coxinv.cli import main, parse_group_spec
from coxinv.reflection_groups import (
    AffineWeylGroup,
    FiniteCoxeterGroup,
    ProductGroup,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParseGroupSpec:
    def test_finite(self):
        g = parse_group_spec('{"type": "B", "rank": 2}')
        assert isinstance(g, FiniteCoxeterGroup)
        assert g.rank == 2

    def test_affine(self):
        g = parse_group_spec('{"type": "A", "rank": 1, "affine": true}')
        assert isinstance(g, AffineWeylGroup)

    def test_product_with_trivial_dims(self):
        g = parse_group_spec(json.dumps(
            {"product": [{"type": "A", "rank": 1},
                         {"type": "A", "rank": 1, "affine": True}],
             "trivial_dims": 2}))
        assert isinstance(g, ProductGroup)
        assert g.ambient_dim == 6


class TestExitCodes:
    def test_info_passes(self, capsys):
        code, out, _ = run(capsys, "info", "--group",
                           '{"type": "A", "rank": 2}')
        assert code == 0
        report = json.loads(out)
        assert report["order"] == 6 and report["chambers"] == 6

    def test_bad_group_spec_is_usage_error(self, capsys):
        code, _, err = run(capsys, "info", "--group", '{"type": "Z", "rank": 2}')
        assert code == 2
        assert "error" in json.loads(err)

    def test_missing_group_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "separate")
        assert code == 2

    def test_unknown_subcommand(self, capsys):
        code, _, _ = run(capsys, "frobnicate")
        assert code == 2

    def test_malformed_json(self, capsys):
        code, _, _ = run(capsys, "info", "--group", "{not json")
        assert code == 2

    def test_separate_passes(self, capsys):
        code, out, _ = run(capsys, "separate", "--group",
                           '{"type": "A", "rank": 2}', "--pairs", "50")
        assert code == 0
        assert json.loads(out)["pass"]

    def test_transnormal_passes(self, capsys):
        code, out, _ = run(capsys, "transnormal", "--group",
                           '{"type": "A", "rank": 1, "affine": true}',
                           "--pairs", "50", "--tol", "1e-8")
        assert code == 0
        report = json.loads(out)
        assert report["gram"]["pass"] and report["bracket"]["pass"]

    def test_forms_check_passes(self, capsys):
        code, out, _ = run(capsys, "forms-check", "--group",
                           '{"type": "B", "rank": 2}')
        assert code == 0
        assert json.loads(out)["pass"]

    def test_arrangement_passes(self, capsys):
        code, out, _ = run(capsys, "arrangement", "--group",
                           '{"type": "G", "rank": 2, "affine": true}')
        assert code == 0
        assert json.loads(out)["invariant_under_generators"]


class TestOrbit:
    def test_finite_orbit_size(self, capsys):
        code, out, _ = run(capsys, "orbit", "--group",
                           '{"type": "A", "rank": 2}', "--point", "[2, 1, 0]")
        assert code == 0
        assert json.loads(out)["size"] == 6

    def test_affine_orbit_radius(self, capsys):
        code, out, _ = run(capsys, "orbit", "--group",
                           '{"type": "A", "rank": 1, "affine": true}',
                           "--point", "[0, 0]", "--radius", "1")
        assert code == 0
        assert json.loads(out)["size"] == 3


class TestDeterminism:
    @pytest.mark.parametrize("argv", [
        ("invariants", "--group", '{"type": "B", "rank": 2}'),
        ("separate", "--group", '{"type": "A", "rank": 2}',
         "--pairs", "40", "--seed", "9"),
        ("transnormal", "--group",
         '{"type": "A", "rank": 1, "affine": true}', "--pairs", "40",
         "--seed", "9"),
        ("info", "--group", '{"type": "G", "rank": 2}', "--seed", "3"),
    ])
    def test_byte_identical_reports(self, capsys, argv):
        _, out1, _ = run(capsys, *argv)
        _, out2, _ = run(capsys, *argv)
        assert out1 == out2

    def test_out_file_matches_stdout(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        _, out, _ = run(capsys, "info", "--group", '{"type": "A", "rank": 2}',
                        "--out", str(target))
        assert target.read_text() == out
