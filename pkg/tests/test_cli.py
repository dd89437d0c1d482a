"""Tests for the weyl-gradings command line."""

import json

import pytest

from weyl_gradings.cli import EXIT_BOUND, EXIT_FAILURE, EXIT_OK, main


@pytest.fixture
def run(tmp_path, capsys):
    """Run the CLI against a temporary workspace; returns (code, stdout, stderr)."""
    workspace = tmp_path / "ws"

    def invoke(*argv):
        code = main(["--workspace", str(workspace), *argv])
        out, err = capsys.readouterr()
        return code, out, err

    invoke.workspace = workspace
    return invoke


def _error(stderr):
    return json.loads(stderr.strip().splitlines()[-1])


class TestBuild:
    def test_algebra(self, run):
        code, out, _ = run("build", "algebra", "cayley")
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["dim"] == 8
        assert (run.workspace / "algebras" / "cayley.json").exists()

    def test_pauli_algebra(self, run):
        code, out, _ = run("build", "algebra", "pauli", "--l", "2,2")
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["algebra"] == "pauli_2x2"
        assert data["dim"] == 16

    def test_grading(self, run):
        code, out, _ = run("build", "grading", "albert_z25")
        assert code == EXIT_OK
        assert json.loads(out)["grading"] == "albert_z25"
        assert (run.workspace / "gradings" / "albert_z25.json").exists()
        assert (run.workspace / "algebras" / "albert_cayley_cd.json").exists()

    def test_gamma_m(self, run):
        code, out, _ = run("build", "grading", "gamma_M", "--l", "2", "--k", "2")
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["grading"] == "gamma_M_2_k2"
        assert data["group"] == "Z x Z_2^2"

    def test_unknown_grading(self, run):
        code, _, err = run("build", "grading", "nonexistent")
        assert code == EXIT_FAILURE
        assert _error(err)["error"] == "UnknownObjectError"

    def test_bad_moduli_rejected_by_parser(self, run):
        with pytest.raises(SystemExit):
            run("build", "algebra", "pauli", "--l", "two")


class TestWeyl:
    def test_cartan_cayley(self, run):
        code, out, _ = run("weyl", "cartan_cayley")
        assert code == EXIT_OK
        summary = json.loads(out)
        assert summary["lower_order"] == summary["upper_order"] == 12
        assert summary["matched"]
        assert summary["failed_checks"] == []
        assert (run.workspace / "reports" / "cartan_cayley.json").exists()

    def test_after_build(self, run):
        run("build", "grading", "cartan_cayley")
        code, out, _ = run("weyl", "cartan_cayley")
        assert code == EXIT_OK
        assert json.loads(out)["lower_order"] == 12

    def test_out_file(self, run, tmp_path):
        target = tmp_path / "reports" / "w.json"
        code, _, _ = run("weyl", "cd_cayley", "--out", str(target))
        assert code == EXIT_OK
        report = json.loads(target.read_text())
        assert report["lower_order"] == 168
        assert report["strategy"] == "closure+upper-bound"

    def test_matrix_algebra(self, run):
        code, out, _ = run("weyl", "gamma_M", "--l", "2", "--k", "2")
        assert code == EXIT_OK
        assert json.loads(out)["lower_order"] == 48

    def test_unknown_grading(self, run):
        code, out, err = run("weyl", "nonexistent")
        assert code == EXIT_FAILURE
        assert out == ""
        error = _error(err)
        assert error["error"] == "UnknownObjectError"
        assert error["exit_code"] == EXIT_FAILURE

    def test_bad_mode(self, run):
        code, _, err = run("weyl", "cartan_cayley", "--mode", "partial")
        assert code == EXIT_FAILURE
        assert _error(err)["error"] == "ConfigurationError"

    def test_bound_exceeded(self, run, tmp_path):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"bounds": {"closure_elements": 5}}))
        code, _, err = run("--config", str(config), "weyl", "cartan_cayley")
        assert code == EXIT_BOUND
        error = _error(err)
        assert error["bound_name"] == "closure_elements"
        assert error["bound"] == 5

    def test_workspace_config_is_picked_up(self, run):
        run.workspace.mkdir(parents=True)
        (run.workspace / "config.json").write_text(
            json.dumps({"bounds": {"closure_elements": 5}})
        )
        code, _, _ = run("weyl", "cartan_cayley")
        assert code == EXIT_BOUND


class TestVerify:
    def test_algebras_suite(self, run):
        code, out, _ = run("verify", "--suite", "algebras")
        assert code == EXIT_OK
        assert "cayley-table-matches-figure-1" in out
        assert "okubo-table-matches-figure-2: pass" in out.splitlines()
        assert out.strip().endswith("checks passed")

    def test_tsv(self, run):
        code, out, _ = run("verify", "--suite", "algebras", "--tsv")
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0] == "suite\tcheck\tresult\tdetail"
        assert all(line.split("\t")[2] == "pass" for line in lines[1:])

    def test_unknown_suite(self, run):
        with pytest.raises(SystemExit):
            run("verify", "--suite", "everything")


class TestExportImportShow:
    def test_export_and_import(self, run, tmp_path):
        target = tmp_path / "g.json"
        code, _, _ = run("export", "grading", "cd_cayley", "--out", str(target))
        assert code == EXIT_OK
        assert json.loads(target.read_text())["kind"] == "grading"

        code, out, _ = run("import", str(target))
        assert code == EXIT_OK
        assert (run.workspace / "gradings" / "cd_cayley.json").exists()

    def test_import_invalid(self, run, tmp_path):
        source = tmp_path / "bad.json"
        source.write_text("{")
        code, _, err = run("import", str(source))
        assert code == EXIT_FAILURE
        assert _error(err)["error"] == "SerializationError"

    def test_export_missing_report(self, run, tmp_path):
        code, _, err = run("export", "report", "nothing", "--out", str(tmp_path / "r.json"))
        assert code == EXIT_FAILURE
        assert _error(err)["error"] == "UnknownObjectError"

    def test_show_grading(self, run):
        code, out, _ = run("show", "grading", "cartan_cayley")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "group\tZ^2"

    def test_show_algebra(self, run):
        code, out, _ = run("show", "algebra", "okubo")
        assert code == EXIT_OK
        assert out.startswith("okubo\tdim 8")

    def test_show_report(self, run):
        run("weyl", "cartan_cayley")
        code, out, _ = run("show", "report", "cartan_cayley")
        assert code == EXIT_OK
        assert json.loads(out)["lower_order"] == 12
