"""Command-line subcommands: outputs, determinism, exit codes."""

import json
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from penrosenet.cli import main
from penrosenet.net import extract_net
from penrosenet.tiling import TileCensus, census, load_patch, substitution_counts


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGenerate:
    def test_two_rounds_eight_tiles(self, tmp_path, capsys):
        out = str(tmp_path / "p.txt")
        code, stdout, _ = run(capsys, "generate", "--seed", "half-kite",
                              "--rounds", "2", "--out", out)
        assert code == 0
        assert "5 half-kites + 3 half-darts = 8 tiles" in stdout
        patch = load_patch(out)
        assert census(patch) == TileCensus(5, 3)
        assert patch.scale_exp == 0

    def test_zero_rounds_single_tile(self, tmp_path, capsys):
        out = str(tmp_path / "p.txt")
        code, stdout, _ = run(capsys, "generate", "--rounds", "0", "--out", out)
        assert code == 0
        assert "= 1 tiles" in stdout
        assert len(load_patch(out)) == 1

    def test_census_line_matches_recursion(self, tmp_path, capsys):
        out = str(tmp_path / "p.txt")
        code, stdout, _ = run(capsys, "generate", "--seed", "half-dart",
                              "--rounds", "5", "--out", out)
        assert code == 0
        expected = substitution_counts(TileCensus(0, 1), 5)
        assert f"{expected.kites} half-kites + {expected.darts} half-darts" in stdout

    def test_cap_exceeded_exit_two(self, tmp_path, capsys):
        code, _, stderr = run(capsys, "generate", "--rounds", "30",
                              "--cap", "100", "--out", str(tmp_path / "x.txt"))
        assert code == 2
        assert "cap" in stderr

    def test_env_var_output_dir(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("PENROSENET_OUT", str(tmp_path))
        code, stdout, _ = run(capsys, "generate", "--rounds", "1")
        assert code == 0
        assert (tmp_path / "patch.txt").exists()


class TestAnalyze:
    def test_reruns_byte_identical(self, tmp_path, capsys):
        d1, d2 = str(tmp_path / "r1"), str(tmp_path / "r2")
        code1, _, _ = run(capsys, "analyze", "--i-min", "2", "--i-max", "3", "--out", d1)
        code2, _, _ = run(capsys, "analyze", "--i-min", "2", "--i-max", "3", "--out", d2)
        assert code1 == 0 and code2 == 0
        assert open(f"{d1}/report.csv", "rb").read() == open(f"{d2}/report.csv", "rb").read()
        assert open(f"{d1}/report.json", "rb").read() == open(f"{d2}/report.json", "rb").read()

    def test_report_contents(self, tmp_path, capsys):
        out = str(tmp_path / "rep")
        code, stdout, _ = run(capsys, "analyze", "--i-min", "2", "--i-max", "4", "--out", out)
        assert code == 0
        lines = open(f"{out}/report.csv").read().splitlines()
        assert lines[0] == "i,statistic,value"
        assert len(lines) == 1 + 3 * 17
        doc = json.load(open(f"{out}/report.json"))
        assert [row["i"] for row in doc["rows"]] == [2, 3, 4]
        assert all(row["E_rho"] >= 1.0 for row in doc["rows"])
        # prefix property of the log sum column
        sums = [row["partial_log_sum"] for row in doc["rows"]]
        increments = [row["E_rho"] - 1.0 for row in doc["rows"]]
        assert sums[1] == pytest.approx(sums[0] + increments[1], rel=1e-9)
        assert "exact:" in stdout and "FAIL" not in stdout

    def test_format_selects_single_file(self, tmp_path, capsys):
        out = str(tmp_path / "csvonly")
        code, _, _ = run(capsys, "analyze", "--i-min", "2", "--i-max", "2",
                         "--out", out, "--format", "csv")
        assert code == 0
        assert (tmp_path / "csvonly" / "report.csv").exists()
        assert not (tmp_path / "csvonly" / "report.json").exists()

    def test_saved_patch_with_window(self, tmp_path, capsys):
        patch_file = str(tmp_path / "p.txt")
        run(capsys, "generate", "--rounds", "6", "--out", patch_file)
        out = str(tmp_path / "rep")
        # window inside the seed wedge (apex at origin, spanning 0..36 deg)
        code, stdout, _ = run(capsys, "analyze", "--patch", patch_file,
                              "--window", "8", "1", "4",
                              "--i-min", "1", "--i-max", "2", "--out", out)
        assert code == 0
        assert (tmp_path / "rep" / "report.csv").exists()

    def test_empty_square_window_is_operational_error(self, tmp_path, capsys):
        patch_file = str(tmp_path / "p.txt")
        run(capsys, "generate", "--rounds", "6", "--out", patch_file)
        # [0,2)^2 pokes outside the seed wedge, so some unit square is empty
        code, _, stderr = run(capsys, "analyze", "--patch", patch_file,
                              "--window", "0", "0", "2",
                              "--i-min", "0", "--i-max", "1",
                              "--out", str(tmp_path / "rep"))
        assert code == 2
        assert "empty square" in stderr

    def test_patch_without_window_rejected(self, tmp_path, capsys):
        patch_file = str(tmp_path / "p.txt")
        run(capsys, "generate", "--rounds", "2", "--out", patch_file)
        code, _, stderr = run(capsys, "analyze", "--patch", patch_file,
                              "--out", str(tmp_path / "rep"))
        assert code == 2
        assert "--window" in stderr

    def test_bad_range_rejected(self, tmp_path, capsys):
        code, _, stderr = run(capsys, "analyze", "--i-min", "5", "--i-max", "3",
                              "--out", str(tmp_path / "rep"))
        assert code == 2
        assert "i-min" in stderr


class TestRender:
    def test_polygon_count_equals_tiles(self, tmp_path, capsys):
        patch_file = str(tmp_path / "p.txt")
        run(capsys, "generate", "--rounds", "3", "--out", patch_file)
        svg_file = str(tmp_path / "p.svg")
        code, stdout, _ = run(capsys, "render", "--patch", patch_file, "--out", svg_file)
        assert code == 0
        tree = ET.parse(svg_file)
        polygons = [e for e in tree.iter() if e.tag.endswith("polygon")]
        assert len(polygons) == len(load_patch(patch_file))

    def test_net_overlay_adds_markers(self, tmp_path, capsys):
        patch_file = str(tmp_path / "p.txt")
        run(capsys, "generate", "--rounds", "3", "--out", patch_file)
        svg_file = str(tmp_path / "n.svg")
        code, _, _ = run(capsys, "render", "--patch", patch_file,
                         "--overlay", "net", "--out", svg_file)
        assert code == 0
        tree = ET.parse(svg_file)
        polygons = [e for e in tree.iter() if e.tag.endswith("polygon")]
        circles = [e for e in tree.iter() if e.tag.endswith("circle")]
        patch = load_patch(patch_file)
        net = extract_net(patch)
        assert len(polygons) == len(patch)
        assert len(circles) == len(net)

    def test_grid_overlay_parses(self, tmp_path, capsys):
        patch_file = str(tmp_path / "p.txt")
        run(capsys, "generate", "--rounds", "2", "--out", patch_file)
        svg_file = str(tmp_path / "g.svg")
        code, _, _ = run(capsys, "render", "--patch", patch_file,
                         "--overlay", "grid", "--out", svg_file)
        assert code == 0
        tree = ET.parse(svg_file)
        lines = [e for e in tree.iter() if e.tag.endswith("line")]
        assert len(lines) >= 4

    def test_missing_patch_exit_two(self, tmp_path, capsys):
        code, _, stderr = run(capsys, "render", "--patch",
                              str(tmp_path / "nope.txt"), "--out", str(tmp_path / "x.svg"))
        assert code == 2
        assert "error" in stderr


class TestVerify:
    def test_passes_on_small_run(self, capsys):
        code, stdout, _ = run(capsys, "verify", "--i-min", "2", "--i-max", "3")
        assert code == 0
        assert "all exact checks passed" in stdout
        assert stdout.count("PASS") >= 8
        assert "empirical" in stdout
