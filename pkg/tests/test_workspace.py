"""Tests for the on-disk workspace and the builtin algebra registry."""

import json

import pytest

from weyl_gradings.exceptions import SerializationError, UnknownObjectError
from weyl_gradings.morphisms import builtin_automorphism
from weyl_gradings.weyl import WeylReport
from weyl_gradings.workspace import ALGEBRA_NAMES, Workspace, builtin_algebra


@pytest.fixture
def workspace(tmp_path):
    return Workspace(tmp_path / "ws")


def _report():
    return WeylReport(
        grading="cartan_cayley",
        strategy="closure+upper-bound",
        lower_order=12,
        upper_order=12,
        matched=True,
    )


class TestBuiltinAlgebra:
    @pytest.mark.parametrize(
        "name, dim",
        [("cayley", 8), ("cayley_cd", 8), ("okubo", 8), ("albert", 27), ("albert_nu", 27)],
    )
    def test_dimensions(self, name, dim):
        assert builtin_algebra(name).dim == dim

    def test_pauli_parameters(self):
        assert builtin_algebra("pauli", l=(2, 2)).dim == 16

    def test_pauli_by_name(self):
        algebra = builtin_algebra("pauli_2x2")
        assert algebra.dim == 16
        assert algebra.name == "pauli_2x2"

    def test_matrix_by_name(self):
        assert builtin_algebra("pauli_2_k2").dim == 16

    def test_trivial_pauli(self):
        assert builtin_algebra("pauli_trivial").dim == 1

    def test_unknown(self):
        with pytest.raises(UnknownObjectError, match="Unknown algebra"):
            builtin_algebra("sedenions")

    def test_malformed_pauli_name(self):
        with pytest.raises(UnknownObjectError):
            builtin_algebra("pauli_twoxtwo")

    def test_bad_parameters(self):
        with pytest.raises(UnknownObjectError, match="Bad parameters"):
            builtin_algebra("cayley", k=3)

    def test_registry(self):
        assert "albert_z33_basis" in ALGEBRA_NAMES


class TestWorkspaceStore:
    def test_empty(self, workspace):
        assert workspace.names("gradings") == []

    def test_unknown_kind(self, workspace):
        with pytest.raises(UnknownObjectError, match="kind"):
            workspace.path("sketches", "x")

    def test_algebra_round_trip(self, workspace, cayley):
        path = workspace.save_algebra(cayley)
        assert path == workspace.path("algebra", "cayley")
        assert workspace.load_algebra("cayley").to_json() == cayley.to_json()

    def test_grading_saves_its_algebra(self, workspace, cartan_cayley):
        workspace.save_grading(cartan_cayley)
        assert workspace.names("algebras") == ["cayley"]
        assert workspace.load_grading("cartan_cayley").to_json() == cartan_cayley.to_json()

    def test_builtin_grading_without_file(self, workspace, cd_cayley):
        assert workspace.load_grading("cd_cayley") is cd_cayley

    def test_unknown_grading(self, workspace):
        with pytest.raises(UnknownObjectError):
            workspace.load_grading("nonexistent")

    def test_automorphism_round_trip(self, workspace):
        tau = builtin_automorphism("tau")
        workspace.save_automorphism(tau)
        back = workspace.load_automorphism("tau")
        assert back.to_json() == tau.to_json()
        assert back.certified

    def test_missing_automorphism(self, workspace):
        with pytest.raises(UnknownObjectError, match="No automorphism"):
            workspace.load_automorphism("tau")

    def test_report_round_trip(self, workspace):
        workspace.save_report(_report())
        assert workspace.names("reports") == ["cartan_cayley"]
        assert workspace.load_report("cartan_cayley") == _report()

    def test_corrupt_file(self, workspace):
        path = workspace.path("report", "broken")
        path.parent.mkdir(parents=True)
        path.write_text("{not json")
        with pytest.raises(SerializationError, match="Invalid JSON"):
            workspace.load_report("broken")


class TestImportExport:
    def test_export_builtin_grading(self, workspace, tmp_path, cartan_cayley):
        out = workspace.export("grading", "cartan_cayley", tmp_path / "out" / "g.json")
        data = json.loads(out.read_text())
        assert data["kind"] == "grading"
        assert data["name"] == "cartan_cayley"

    def test_export_then_import(self, workspace, tmp_path):
        out = workspace.export("algebra", "okubo", tmp_path / "okubo.json")
        other = Workspace(tmp_path / "other")
        other.import_file(out)
        assert other.names("algebras") == ["okubo"]

    def test_import_grading_resolves_builtin_algebra(self, workspace, tmp_path, cd_cayley):
        source = tmp_path / "cd.json"
        source.write_text(cd_cayley.to_json())
        workspace.import_file(source)
        assert workspace.exists("grading", "cd_cayley")
        assert workspace.exists("algebra", "cayley_cd")

    def test_import_report(self, workspace, tmp_path):
        source = tmp_path / "r.json"
        source.write_text(_report().model_dump_json())
        workspace.import_file(source)
        assert workspace.load_report("cartan_cayley").lower_order == 12

    def test_import_unknown_kind(self, workspace, tmp_path):
        source = tmp_path / "x.json"
        source.write_text(json.dumps({"kind": "sketch"}))
        with pytest.raises(SerializationError, match="unknown kind"):
            workspace.import_file(source)

    def test_import_not_an_object(self, workspace, tmp_path):
        source = tmp_path / "x.json"
        source.write_text("[1, 2]")
        with pytest.raises(SerializationError):
            workspace.import_file(source)

    def test_import_missing_file(self, workspace, tmp_path):
        with pytest.raises(SerializationError, match="Cannot read"):
            workspace.import_file(tmp_path / "absent.json")

    def test_import_malformed_algebra(self, workspace, tmp_path):
        source = tmp_path / "a.json"
        source.write_text(json.dumps({"kind": "algebra", "name": "broken"}))
        with pytest.raises(SerializationError, match="Malformed"):
            workspace.import_file(source)

    def test_export_unknown_kind(self, workspace, tmp_path):
        with pytest.raises(UnknownObjectError):
            workspace.export("sketch", "x", tmp_path / "x.json")
