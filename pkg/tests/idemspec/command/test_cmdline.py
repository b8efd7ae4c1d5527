import json

import pytest
from typer.testing import CliRunner

from idemspec.cmdline import app, g_sigma_exclusivity
from idemspec.config_manager import ConfigManager


@pytest.fixture(scope="function")
def runner():
    g_sigma_exclusivity.reset_for_testing()
    yield CliRunner()
    ConfigManager().clear_overrides()


@pytest.fixture
def corpus_file(fixture_path):
    return fixture_path("corpus.idem")


def test_version(runner):
    result = runner.invoke(app, ["-v"])
    assert result.exit_code == 0
    assert result.stdout.strip()


def test_no_command_prints_help(runner):
    result = runner.invoke(app, [])
    assert result.exit_code == 0
    assert "verify" in result.stdout


def test_env_lists_guards(runner):
    result = runner.invoke(app, ["env"])
    assert result.exit_code == 0
    assert "max carrier" in result.stdout


def test_check_corpus(runner, corpus_file):
    result = runner.invoke(app, ["check", corpus_file])
    assert result.exit_code == 0, result.stdout
    assert "4 objects valid" in result.stdout


def test_check_malformed_file_is_a_usage_error(runner, fixture_path):
    result = runner.invoke(app, ["check", fixture_path("malformed.idem")])
    assert result.exit_code == 2
    assert "expected 3" in result.stdout


def test_check_reports_law_violations(runner, fixture_path):
    result = runner.invoke(app, ["check", fixture_path("not_a_semiring.idem")])
    assert result.exit_code == 1
    assert "multiplicative associativity" in result.stdout


def test_missing_file(runner):
    result = runner.invoke(app, ["check", "no_such_file.idem"])
    assert result.exit_code == 2


def test_spec_needs_an_idealic_semiring(runner, fixture_path):
    result = runner.invoke(app, ["spec", fixture_path("non_idealic.idem")])
    assert result.exit_code == 2
    assert "idealic" in result.stdout


def test_spec_as_dot(runner, corpus_file):
    result = runner.invoke(app, ["spec", corpus_file, "--name", "C3", "--dot"])
    assert result.exit_code == 0, result.stdout
    assert result.stdout.startswith('digraph "Spec C3" {')
    assert '"m" -> "0";' in result.stdout


def test_spec_as_json(runner, corpus_file):
    result = runner.invoke(app, ["spec", corpus_file, "--name", "C3", "--format", "json"])
    assert result.exit_code == 0, result.stdout
    assert json.loads(result.stdout)["points"] == ["0", "m"]


def test_dual_of_a_space(runner, fixture_path):
    result = runner.invoke(app, ["dual", fixture_path("spaces.idem"), "--name", "Sierpinski"])
    assert result.exit_code == 0, result.stdout
    assert result.stdout.startswith("semiring C_Sierpinski {")


def test_unknown_object_name(runner, corpus_file):
    result = runner.invoke(app, ["spec", corpus_file, "--name", "Z7"])
    assert result.exit_code == 2


def test_radical(runner, corpus_file):
    result = runner.invoke(app, ["radical", corpus_file, "--name", "Neps", "--of", "0"])
    assert result.exit_code == 0, result.stdout
    assert result.stdout.splitlines() == ["rad(0) = e", "V(0) = {e}"]


def test_localize_at_an_element(runner, corpus_file):
    result = runner.invoke(app, ["localize", corpus_file, "--name", "C3", "--at", "m"])
    assert result.exit_code == 0, result.stdout
    assert "semiring C3_m {" in result.stdout
    assert "projection" in result.stdout


def test_localize_options_are_exclusive(runner, corpus_file):
    result = runner.invoke(app, ["localize", corpus_file, "--name", "C3", "--at", "m", "--prime", "m"])
    assert result.exit_code == 2


def test_localize_at_a_non_prime(runner, corpus_file):
    result = runner.invoke(app, ["localize", corpus_file, "--name", "B4", "--prime", "0"])
    assert result.exit_code == 2


def test_quotient(runner, corpus_file):
    result = runner.invoke(app, ["quotient", corpus_file, "--name", "C3", "--pairs", "(m,1)"])
    assert result.exit_code == 0, result.stdout
    assert "semiring C3_q {" in result.stdout
    assert '"classes"' in result.stdout


def test_quotient_without_pairs(runner, corpus_file):
    result = runner.invoke(app, ["quotient", corpus_file, "--pairs", "m,1"])
    assert result.exit_code == 2


def test_glue(runner, corpus_file):
    args = ["glue", corpus_file, "--name", "B4", "--s", "1", "--part", "a:1", "--part", "b:0"]
    result = runner.invoke(app, args)
    assert result.exit_code == 0, result.stdout
    assert result.stdout.strip() == "a"


def test_glue_rejects_a_bad_cover(runner, corpus_file):
    args = ["glue", corpus_file, "--name", "B4", "--s", "1", "--part", "a:1"]
    result = runner.invoke(app, args)
    assert result.exit_code == 1
    assert "cover sums to s" in result.stdout


def test_tensor_with_the_unit(runner, fixture_path):
    result = runner.invoke(app, ["tensor", fixture_path("modules.idem"), "C2", "C3"])
    assert result.exit_code == 0, result.stdout
    assert result.stdout.startswith("module C2_x_C3 over F1 {")


def test_scheme_with_checks(runner, corpus_file):
    result = runner.invoke(app, ["scheme", corpus_file, "--name", "C3", "--verify"])
    assert result.exit_code == 0, result.stdout
    data = json.loads(result.stdout)
    assert len(data["points"]) == 2
    assert data["checks"]["scheme"]["ok"] is True


def test_scheme_type_must_match_the_block(runner, corpus_file):
    result = runner.invoke(app, ["scheme", corpus_file, "--name", "C3", "--type", "ring"])
    assert result.exit_code == 2


def test_enumerate_posets(runner):
    result = runner.invoke(app, ["enumerate", "posets", "--n", "2"])
    assert result.exit_code == 0, result.stdout
    assert "top P0 {" in result.stdout and "top P1 {" in result.stdout
    assert "P2" not in result.stdout


def test_enumerate_semirings_as_json(runner):
    result = runner.invoke(app, ["enumerate", "semirings", "--n", "3", "--format", "json"])
    assert result.exit_code == 0, result.stdout
    assert len(json.loads(result.stdout)) == 2


def test_guard_flag_is_reported(runner):
    result = runner.invoke(app, ["--max-enumeration", "1", "enumerate", "posets", "--n", "2"])
    assert result.exit_code == 2
    assert "--max-enumeration" in result.stdout


def test_unknown_suite(runner):
    result = runner.invoke(app, ["verify", "homotopy"])
    assert result.exit_code == 2
    assert "unknown suite" in result.stdout


def test_verify_duality(runner):
    result = runner.invoke(app, ["verify", "duality", "--bound", "2", "--format", "json"])
    assert result.exit_code == 0, result.stdout
    data = json.loads(result.stdout)
    assert data["suite"] == "duality"
    assert data["counts"]["fail"] == 0
