import json

import pytest
from typer.testing import CliRunner

from depjsl.checks.suites import register_suite
from depjsl.cli.run_cli import app

runner = CliRunner()

EXAMPLE_REL = """\
source: x1 x2 x3
target: y1 y2 y3
pair: x1 y1
pair: x1 y2
pair: x2 y1
pair: x2 y2
pair: x3 y3
"""

M3_JSL = """\
elements: 0 a b c 1
leq: 0 a
leq: 0 b
leq: 0 c
leq: a 1
leq: b 1
leq: c 1
"""


@pytest.fixture
def files(tmp_path):
    paths = {
        "rel": tmp_path / "example.rel",
        "m3": tmp_path / "m3.jsl",
        "loop": tmp_path / "loop.ug",
        "broken": tmp_path / "broken.rel",
    }
    paths["rel"].write_text(EXAMPLE_REL, encoding="utf-8")
    paths["m3"].write_text(M3_JSL, encoding="utf-8")
    paths["loop"].write_text("vertices: v\nedge: v v\n", encoding="utf-8")
    paths["broken"].write_text("source: a\ntarget: b\npair: a c\n", encoding="utf-8")
    return paths


def test_open(files):
    result = runner.invoke(app, ["open", str(files["rel"])])
    assert result.exit_code == 0, result.output
    assert "{y1,y2}" in result.output
    assert "{y3}" in result.output


def test_open_json(files):
    result = runner.invoke(app, ["--format", "json", "open", str(files["rel"])])
    assert result.exit_code == 0, result.output
    data = json.loads(result.stdout)
    assert len(data["elements"]) == 4
    assert len(data["join_irreducibles"]) == 2


def test_hasse_is_dot(files):
    result = runner.invoke(app, ["--format", "dot", "hasse", str(files["m3"])])
    assert result.exit_code == 0, result.output
    assert result.stdout.startswith("digraph")


def test_missing_file(tmp_path):
    result = runner.invoke(app, ["open", str(tmp_path / "nope.rel")])
    assert result.exit_code == 2
    assert "File not found" in result.output


def test_malformed_file(files):
    result = runner.invoke(app, ["open", str(files["broken"])])
    assert result.exit_code == 2
    assert "error: line 3" in result.output


def test_wrong_kind_of_file(files):
    result = runner.invoke(app, ["open", str(files["m3"])])
    assert result.exit_code == 2
    assert "expected a Rel" in result.output


def test_check_passes_and_is_deterministic():
    args = ["check", "--suite", "rel-calculus", "--max-size", "3", "--cases", "2", "--seed", "0"]
    first = runner.invoke(app, args)
    second = runner.invoke(app, args)
    assert first.exit_code == 0, first.output
    assert "PASS" in first.stdout
    assert first.stdout == second.stdout


def test_check_json():
    args = ["--format", "json", "check", "--suite", "dm", "--max-size", "3", "--cases", "2", "--seed", "0"]
    result = runner.invoke(app, args)
    assert result.exit_code == 0, result.output
    data = json.loads(result.stdout)
    assert data["passed"] is True
    assert len(data["results"]) == 2


def test_check_unknown_suite():
    result = runner.invoke(app, ["check", "--suite", "no-such-suite"])
    assert result.exit_code == 2
    assert "unknown suite" in result.output


def test_check_failure_exits_one(scratch_suites):
    @register_suite("cli-fails", "Nothing holds")
    def _fails(rng, n):
        return "# size\n1\n", "broken"

    result = runner.invoke(app, ["check", "--suite", "cli-fails", "--cases", "3", "--seed", "0"])
    assert result.exit_code == 1
    assert "FAIL at case 0: broken" in result.output
    assert "error: suite cli-fails failed at case 0" in result.output


def test_output_option(files, tmp_path):
    out = tmp_path / "open.jsl"
    result = runner.invoke(app, ["--output", str(out), "open", str(files["rel"])])
    assert result.exit_code == 0, result.output
    assert result.stdout == ""
    assert out.read_text(encoding="utf-8").startswith("elements:")


def test_dep_check_identity(files):
    rel = str(files["rel"])
    result = runner.invoke(app, ["dep", "check", rel, "--dom", rel, "--cod", rel])
    assert result.exit_code == 0, result.output
    assert "# minus" in result.stdout
    assert "# plus" in result.stdout


def test_dep_reduce(files):
    result = runner.invoke(app, ["dep", "reduce", str(files["rel"])])
    assert result.exit_code == 0, result.output
    assert "# reduced" in result.stdout
    assert "# isomorphism" in result.stdout


def test_demorgan_to_algebra(files):
    result = runner.invoke(app, ["demorgan", "to-algebra", str(files["loop"])])
    assert result.exit_code == 0, result.output
    assert "kind: sai" in result.stdout


def test_free_ba_rejects_non_distributive(files):
    result = runner.invoke(app, ["free", "ba", str(files["m3"])])
    assert result.exit_code == 2
    assert "error:" in result.output


def test_free_jsl_on_m3(files):
    result = runner.invoke(app, ["free", "jsl", str(files["m3"])])
    assert result.exit_code == 0, result.output
    assert result.stdout.startswith("elements:")
    assert len(result.stdout.splitlines()[0].split()) == 11


def test_suites_lists_registry():
    result = runner.invoke(app, ["suites"])
    assert result.exit_code == 0
    assert "rep-red: Open/Pirr equivalence theorem:" in result.stdout
