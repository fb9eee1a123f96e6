import json

import pytest
from click.testing import CliRunner

from main import cli
from tools.constructions import construct_affine, construct_bg
from tools.ecg_format import read_colouring, write_colouring
from tools.graph_core import ColouredCompleteGraph


@pytest.fixture
def runner(monkeypatch):
    for name in ("MONOCLE_ORACLE_MAX_N", "MONOCLE_MAX_COMPONENT", "MONOCLE_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    return CliRunner()


def write_report(path, report):
    return str(write_colouring(path, report.colouring, report.metadata()))


def test_construct_writes_a_file(runner, tmp_path):
    target = tmp_path / "bg.ecg"
    result = runner.invoke(cli, ["construct", "bg", "--n", "13", "--k", "2", "-o", str(target)])
    assert result.exit_code == 0
    loaded = read_colouring(target)
    assert loaded.colouring == construct_bg(13, 2).colouring
    assert loaded.metadata["claimedBound"] == "11"


def test_construct_to_stdout(runner):
    result = runner.invoke(cli, ["construct", "hamzero", "--n", "8", "--r", "2", "--k", "3"])
    assert result.exit_code == 0
    assert "ECG 1\n8 2\n" in result.output


def test_construct_reports_missing_parameters(runner):
    result = runner.invoke(cli, ["construct", "affine", "--n", "16"])
    assert result.exit_code == 2
    assert "--r --k" in result.output


def test_construct_affine_needs_prime_power(runner):
    result = runner.invoke(cli, ["construct", "affine", "--n", "50", "--r", "7", "--k", "1"])
    assert result.exit_code == 2
    assert "not a prime power" in result.output


def test_extract_thm21k(runner, tmp_path):
    path = write_report(tmp_path / "bg.ecg", construct_bg(40, 4))
    result = runner.invoke(cli, ["extract", "thm21k", "--file", path, "--k", "4"])
    assert result.exit_code == 0, result.output
    lines = dict(line.split(" ", 1) for line in result.output.splitlines())
    assert lines["verified"] == "true"
    assert int(lines["witness.order"]) >= 34


def test_extract_json(runner, tmp_path):
    path = write_report(tmp_path / "affine.ecg", construct_affine(16, 3, 1))
    result = runner.invoke(cli, ["extract", "r11", "--file", path, "--json"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["verified"] is True
    assert report["witness"]["order"] == 8


def test_extract_reports_violated_hypothesis(runner, tmp_path):
    path = write_report(tmp_path / "affine.ecg", construct_affine(479, 3, 1))
    result = runner.invoke(cli, ["extract", "thm31k", "--file", path, "--k", "1"])
    assert result.exit_code == 2
    assert "n ⩾ 480k violated" in result.output


def test_extract_degs_names_the_vertex(runner, tmp_path):
    path = str(write_colouring(tmp_path / "blue.ecg", ColouredCompleteGraph.monochromatic(6, r=2, colour=2)))
    result = runner.invoke(cli, ["extract", "degs", "--file", path, "--k", "2"])
    assert result.exit_code == 2
    assert "vertex 0" in result.output


def test_extract_rejects_the_wrong_file_kind(runner, tmp_path):
    path = write_report(tmp_path / "bg.ecg", construct_bg(13, 2))
    result = runner.invoke(cli, ["extract", "r1kbip", "--file", path, "--ell", "1", "--q", "3"])
    assert result.exit_code == 2
    assert "bipartite" in result.output


def test_malformed_file_exits_with_one(runner, tmp_path):
    path = tmp_path / "broken.ecg"
    path.write_text("ECG 1\n3 2\n0 1 1\n")
    result = runner.invoke(cli, ["oracle", "--file", str(path), "--k", "1"])
    assert result.exit_code == 1
    assert "edges missing" in result.output


def test_oracle(runner, tmp_path):
    path = write_report(tmp_path / "bg.ecg", construct_bg(13, 2))
    result = runner.invoke(cli, ["oracle", "--file", path, "--k", "2"])
    assert result.exit_code == 0, result.output
    assert "M 11" in result.output.splitlines()


def test_oracle_refuses_large_colourings(runner, tmp_path):
    path = write_report(tmp_path / "bg.ecg", construct_bg(30, 2))
    result = runner.invoke(cli, ["oracle", "--file", path, "--k", "2"])
    assert result.exit_code == 4


def test_oracle_limit_from_environment(runner, tmp_path, monkeypatch):
    path = write_report(tmp_path / "bg.ecg", construct_bg(13, 2))
    monkeypatch.setenv("MONOCLE_ORACLE_MAX_N", "10")
    result = runner.invoke(cli, ["oracle", "--file", path, "--k", "2"])
    assert result.exit_code == 4


def test_bounds(runner):
    result = runner.invoke(cli, ["bounds", "--n", "100", "--r", "2", "--k", "5"])
    assert result.exit_code == 0
    assert "lower 92 upper 92" in result.output


def test_bounds_domain_error(runner):
    result = runner.invoke(cli, ["bounds", "--n", "1", "--r", "2", "--k", "1"])
    assert result.exit_code == 2


def test_search_json(runner, tmp_path):
    target = tmp_path / "best.ecg"
    result = runner.invoke(
        cli,
        ["search", "--n", "6", "--r", "2", "--k", "2", "--iterations", "20", "--seed", "1", "--json", "-o", str(target)],
    )
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["objective"] == "exact_M"
    assert report["exact"] is True
    assert read_colouring(target).metadata["construction"] == "search"
