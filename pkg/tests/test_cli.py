"""
Unit tests for the command-line interface.
"""
import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from cli import cli, main


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    """Run the CLI in an empty directory so no config.yaml is picked up."""
    with runner.isolated_filesystem():
        return runner.invoke(cli, list(args))


class TestQueries:
    """Tests for the exact query commands."""

    def test_field_info(self, runner):
        """Test field-info reports the discriminant and unit count."""
        result = invoke(runner, "field-info", "--d", "-3")
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["D_F"] == -3
        assert data["units"] == 6

    def test_chambers(self, runner):
        """Test chambers of index -6."""
        result = invoke(runner, "chambers", "--m", "-6")
        data = json.loads(result.output)
        assert len(data["chambers"]) == 5
        assert data["chambers"][-1]["t_hi"] is None

    def test_weyl_vector(self, runner):
        """Test rho(j_1; W(0,1)) = -e3."""
        result = invoke(runner, "weyl-vector", "--n", "1", "--chamber", "0,1")
        assert result.exit_code == 0
        assert json.loads(result.output) == {
            "rho1": {"num": "-1", "den": "1"},
            "rho2": {"num": "0", "den": "1"},
        }

    def test_jn_coeffs(self, runner):
        """Test the first coefficients of j_1."""
        result = invoke(runner, "jn-coeffs", "--n", "1", "--upto", "1")
        assert json.loads(result.output) == [[-1, 1], [0, 0], [1, 196884]]

    def test_heegner(self, runner):
        """Test tau = i appears among the Heegner points of norm -1 for d = -1."""
        result = invoke(runner, "heegner", "--m", "-1", "--d", "-1", "--bound", "1")
        assert result.exit_code == 0
        points = json.loads(result.output)
        assert any(p["lambda"] == [0, 1, -1, 0] for p in points)
        assert any(float(p["tau"][0]) == 0 and float(p["tau"][1]) == 1 for p in points)

    def test_numeric_fields_carry_precision(self, runner):
        """Test heegner and phi-k report the precision of their numeric fields."""
        points = json.loads(invoke(runner, "--prec", "96", "heegner", "--m", "-1", "--d", "-1", "--bound", "1").output)
        assert points and all(p["precision"]["bits"] == 96 for p in points)
        data = json.loads(invoke(runner, "--prec", "96", "phi-k", "--m", "-6", "--Y", "2,3").output)
        assert data["on_wall"] is True
        assert data["precision"] == {"bits": 96, "digits": 26}

    def test_heegner_divisor(self, runner):
        """Test the divisor of norm -2 for d = -1 has two classes."""
        result = invoke(runner, "heegner", "--m", "-2", "--d", "-1", "--bound", "2", "--divisor")
        classes = json.loads(result.output)
        assert len(classes) == 2
        assert all(c["raw_count"] == 2 * c["identified_count"] for c in classes)


class TestEvaluation:
    """Tests for eval-xi and zero-order."""

    def test_eval_xi(self, runner):
        """Test eval-xi returns the value with its metadata."""
        result = invoke(runner, "eval-xi", "--d", "-1", "--n", "1", "--tau", "0,3", "--chamber", "1,inf")
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["weight"] == {"num": "0", "den": "1"}
        assert data["outside_chamber"] is False
        assert len(data["value"]) == 2

    def test_deterministic(self, runner):
        """Test identical invocations give identical output."""
        args = ("eval-xi", "--d", "-2", "--n", "1", "--tau", "1/3,3", "--chamber", "1,inf")
        assert invoke(runner, *args).output == invoke(runner, *args).output

    def test_grid_csv(self, runner):
        """Test the grid is written as CSV."""
        result = invoke(runner, "eval-xi", "--d", "-1", "--n", "1", "--chamber", "1,inf",
                        "--grid", "0,1/2,3,7/2,2,2")
        lines = result.output.strip().splitlines()
        assert lines[0] == "re,im,log_abs"
        assert len(lines) == 5

    def test_eval_xi_prec(self, runner):
        """Test eval-xi takes its own --prec, overriding the global one."""
        result = invoke(runner, "eval-xi", "--d", "-1", "--n", "1", "--tau", "0,3", "--chamber", "1,inf",
                        "--max-kl", "40", "--prec", "128")
        assert result.exit_code == 0
        assert json.loads(result.output)["precision"]["bits"] == 128
        result = invoke(runner, "--prec", "256", "eval-xi", "--d", "-1", "--n", "1", "--tau", "0,3",
                        "--chamber", "1,inf", "--prec", "96")
        assert json.loads(result.output)["precision"]["bits"] == 96

    def test_eval_xi_low_prec(self, runner):
        """Test a subcommand --prec below 64 bits is an input error object."""
        result = invoke(runner, "eval-xi", "--d", "-1", "--n", "1", "--tau", "0,3", "--chamber", "1,inf",
                        "--prec", "32")
        assert result.exit_code == 2
        assert json.loads(result.output)["error"] == "invalid_input"

    def test_const(self, runner):
        """Test the constant lift has weight 1/2."""
        result = invoke(runner, "eval-xi", "--d", "-1", "--tau", "0,1", "--const")
        assert json.loads(result.output)["weight"] == {"num": "1", "den": "2"}


class TestErrors:
    """Tests for error objects and exit codes."""

    def test_invalid_input(self, runner):
        """Test a non-negative d exits with code 2."""
        result = invoke(runner, "field-info", "--d", "3")
        assert result.exit_code == 2
        assert json.loads(result.output)["error"] == "invalid_input"

    def test_convergence(self, runner):
        """Test tau below the convergence region exits with code 3."""
        result = invoke(runner, "eval-xi", "--d", "-1", "--n", "1", "--tau", "0,1.5", "--chamber", "1,inf")
        assert result.exit_code == 3
        assert json.loads(result.output)["error"] == "convergence"

    def test_wall(self, runner):
        """Test Y on a wall exits with code 4."""
        with runner.isolated_filesystem():
            Path("f.yaml").write_text("principal:\n  -1: 1\nc0: 24\n")
            result = runner.invoke(cli, ["weyl-vector", "--f", "f.yaml", "--Y", "1,1"])
        assert result.exit_code == 4
        data = json.loads(result.output)
        assert data["error"] == "wall"
        assert data["t"] == 1

    def test_bad_chamber(self, runner):
        """Test an unknown chamber is an input error."""
        result = invoke(runner, "weyl-vector", "--n", "6", "--chamber", "1,3")
        assert result.exit_code == 2

    def test_low_precision(self, runner):
        """Test --prec below 64 bits is refused."""
        result = invoke(runner, "--prec", "32", "field-info", "--d", "-1")
        assert result.exit_code == 2


class TestUsageErrors:
    """Tests for usage errors reported through main()."""

    @pytest.fixture(autouse=True)
    def empty_dir(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)

    @pytest.mark.parametrize("args, option", [
        (["heegner", "--m", "-1"], "--d"),
        (["field-info", "--d", "abc"], "--d"),
        (["eval-xi", "--d", "-1", "--bogus"], "--bogus"),
    ])
    def test_usage_error_is_json(self, capsys, args, option):
        """Test missing, malformed and unknown options give an error object and exit 2."""
        assert main(args) == 2
        data = json.loads(capsys.readouterr().out)
        assert data["error"] == "invalid_input"
        assert option in data["message"]

    def test_success_exit_code(self, capsys):
        """Test main() returns 0 and prints the JSON result."""
        assert main(["chambers", "--m", "-2"]) == 0
        assert json.loads(capsys.readouterr().out)["m"] == -2

    def test_job_exit_code(self, capsys):
        """Test main() passes through the exit code of a failed job."""
        assert main(["field-info", "--d", "3"]) == 2
        assert json.loads(capsys.readouterr().out)["error"] == "invalid_input"


class TestOutputAndJournal:
    """Tests for --out, --journal and check."""

    def test_out_file(self, runner):
        """Test --out writes the JSON to a file instead of stdout."""
        with runner.isolated_filesystem():
            result = runner.invoke(cli, ["--out", "chambers.json", "chambers", "--m", "-2"])
            assert result.exit_code == 0
            assert result.output == ""
            data = json.loads(Path("chambers.json").read_text())
        assert data["m"] == -2

    def test_journal(self, runner):
        """Test every job is appended to the journal."""
        with runner.isolated_filesystem():
            runner.invoke(cli, ["--journal", "logs", "chambers", "--m", "-2"])
            runner.invoke(cli, ["--journal", "logs", "field-info", "--d", "3"])
            files = list(Path("logs").glob("jobs_*.jsonl"))
            entries = [json.loads(line) for f in files for line in f.read_text().splitlines()]
        assert sorted(e["command"] for e in entries) == ["chambers", "field-info"]
        assert sorted(e["exit_code"] for e in entries) == [0, 2]

    def test_check_suite(self, runner):
        """Test the chamber suite passes."""
        result = invoke(runner, "check", "--suite", "chambers")
        assert result.exit_code == 0
        lines = [json.loads(line) for line in result.output.splitlines()]
        assert len(lines) == 12
        assert all(line["passed"] for line in lines)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
