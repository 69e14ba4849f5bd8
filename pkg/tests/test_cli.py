import json

import pytest

from avd import CanonicalConfig, GridSpec, build_edge
from avd.classify import DegreeOneAnomaly
from avd.cli import (
    EXIT_ANOMALY,
    EXIT_BAD_CONFIG,
    EXIT_IDENTICAL,
    EXIT_OK,
    ClassificationReport,
    build_report,
    load_scene,
    main,
)


@pytest.fixture
def pair_config(tmp_path):
    path = tmp_path / "pair.json"
    path.write_text(json.dumps({"segments": [[[-1, 0], [1, 0]], [[0, 1], [2, 1]]]}))
    return str(path)


@pytest.fixture
def canonical_config_file(tmp_path):
    path = tmp_path / "node.json"
    path.write_text(
        json.dumps(
            {
                "canonical": {
                    "a": 2.0,
                    "b": 4.0 / 3.0,
                    "l": 5.0 / 3.0,
                    "sin_alpha": -0.8,
                    "cos_alpha": 0.6,
                },
                "grid": {"xmin": -4, "xmax": 4, "ymin": -4, "ymax": 4,
                         "nx": 128, "ny": 128},
            }
        )
    )
    return str(path)


class TestSceneLoading:
    def test_segments_and_grid(self, canonical_config_file):
        scene = load_scene(canonical_config_file)
        assert scene.canonical is not None
        assert scene.grid == GridSpec(-4, 4, -4, 4, 128, 128)

    def test_rejects_garbage(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("not json at all")
        assert main(["edge", str(path)]) == EXIT_BAD_CONFIG

    def test_rejects_wrong_segment_count(self, tmp_path, capsys):
        path = tmp_path / "one.json"
        path.write_text(json.dumps({"segments": [[[0, 0], [1, 0]]]}))
        assert main(["edge", str(path)]) == EXIT_BAD_CONFIG


class TestEdgeCommand:
    def test_report_on_stdout(self, pair_config, capsys):
        assert main(["edge", pair_config]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["edge_class"]["tag"] in (
            "cubic_irreducible_regular",
            "cubic_irreducible_singular",
            "cubic_circle_times_line",
        )
        assert report["mirror_class"]["tag"] == "quad_irreducible_hyperbola"
        assert any(p["tag"] == "congruent_parallel" for p in report["predicates"])
        assert report["validation"]["passed"] is True

    def test_canonical_block_runs_node_case(self, canonical_config_file, capsys):
        assert main(["edge", canonical_config_file]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["edge_class"]["tag"] == "cubic_irreducible_singular"
        sing = report["edge_class"]["singularities"][0]
        assert sing["kind"] == "node"
        assert abs(sing["x"] + 1.0) <= 1e-6 and abs(sing["y"] - 2.0) <= 1e-6

    def test_concyclic_scene_reports_factorable_class(self, tmp_path, capsys):
        # chords of one circle with equal lengths: the curve splits, and the
        # concyclic predicate is reported alongside the shared endpoint
        path = tmp_path / "concyclic.json"
        path.write_text(
            json.dumps({"segments": [[[-1, 0], [1, 0]], [[1, 0], [1, 2]]]})
        )
        assert main(["edge", str(path)]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        tags = {report["edge_class"]["tag"], report["mirror_class"]["tag"]}
        assert "cubic_circle_times_line" in tags
        pred_tags = {p["tag"] for p in report["predicates"]}
        assert "concyclic_equal_length" in pred_tags

    def test_congruent_parallel_canonical_block(self, tmp_path, capsys):
        path = tmp_path / "parallel.json"
        path.write_text(
            json.dumps(
                {"canonical": {"a": 1.0, "b": 1.0, "l": 1.0,
                               "sin_alpha": 0.0, "cos_alpha": -1.0}}
            )
        )
        assert main(["edge", str(path)]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["edge_class"]["tag"] == "quad_irreducible_hyperbola"

    def test_identical_segments_exit_code(self, tmp_path):
        path = tmp_path / "ident.json"
        path.write_text(json.dumps({"segments": [[[0, 0], [1, 1]], [[1, 1], [0, 0]]]}))
        assert main(["edge", str(path)]) == EXIT_IDENTICAL

    def test_anomaly_exit_code(self, pair_config, monkeypatch):
        import avd.cli as cli_mod

        def boom(curve, grid, tol, angle_tol, containment_tol):
            raise DegreeOneAnomaly("forced")

        monkeypatch.setattr(cli_mod, "build_report", boom)
        assert main(["edge", pair_config]) == EXIT_ANOMALY

    def test_svg_deterministic(self, canonical_config_file, tmp_path, capsys):
        a = tmp_path / "a.svg"
        b = tmp_path / "b.svg"
        assert main(["edge", canonical_config_file, "--svg", str(a),
                     "--out", str(tmp_path / "r1.json")]) == EXIT_OK
        assert main(["edge", canonical_config_file, "--svg", str(b),
                     "--out", str(tmp_path / "r2.json")]) == EXIT_OK
        assert a.read_bytes() == b.read_bytes()
        assert (tmp_path / "r1.json").read_bytes() == (tmp_path / "r2.json").read_bytes()


class TestDiagramCommand:
    def test_three_sites(self, tmp_path, capsys):
        path = tmp_path / "three.json"
        path.write_text(
            json.dumps(
                {"segments": [[[-2, 0], [0, 0]], [[1, 1], [2, 2]], [[0, -2], [2, -2]]]}
            )
        )
        svg = tmp_path / "three.svg"
        assert main(["diagram", str(path), "--svg", str(svg)]) == EXIT_OK
        summary = json.loads(capsys.readouterr().out)
        assert summary["sites"] == 3
        assert len(summary["region_cells"]) == 3
        assert svg.exists() and svg.read_text().startswith("<?xml")

    def test_single_segment_rejected(self, tmp_path):
        path = tmp_path / "one.json"
        path.write_text(json.dumps({"segments": [[[0, 0], [1, 0]]]}))
        assert main(["diagram", str(path), "--svg", str(tmp_path / "x.svg")]) == EXIT_BAD_CONFIG


class TestVerifyCommand:
    def test_single_scenario(self, capsys):
        assert main(["verify", "--only", "node"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "PASS" in out

    def test_unknown_scenario_is_config_error(self, capsys):
        assert main(["verify", "--only", "nonsense"]) == EXIT_BAD_CONFIG


class TestReportRoundTrip:
    def test_json_round_trip(self, node_config):
        curve = build_edge(node_config)
        report = build_report(
            curve, GridSpec(-4, 4, -4, 4, 96, 96), 1e-8, 1e-6, 1e-5
        )
        again = ClassificationReport.from_json(report.to_json())
        assert again == report
        assert again.to_json() == report.to_json()
