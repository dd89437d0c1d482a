"""Tests for the named-check registry behind ``verify``."""

import pytest

import weyl_gradings.checks as checks
from weyl_gradings.checks import (
    CheckRow,
    first_failure,
    format_rows,
    register,
    registered,
    run_checks,
)
from weyl_gradings.exceptions import GroupError


@pytest.fixture
def empty_registry(monkeypatch):
    monkeypatch.setattr(checks, "_REGISTRY", {})


class TestRegistry:
    def test_suites_cover_every_check(self):
        assert {c.suite for c in registered()} == set(checks.SUITES)

    def test_names_unique_and_kebab_case(self):
        names = [c.name for c in registered()]
        assert len(names) == len(set(names))
        assert all(n == n.lower() and " " not in n for n in names)

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            registered("everything")

    def test_register_rejects_unknown_suite(self):
        with pytest.raises(ValueError):
            register("x", "misc")


class TestRunChecks:
    def test_error_becomes_failure(self, empty_registry):
        @register("ok", "algebras")
        def _ok():
            return True, ""

        @register("broken", "algebras")
        def _broken():
            raise GroupError("no group")

        rows = run_checks("algebras")
        assert [r.passed for r in rows] == [True, False]
        assert rows[1].detail == "GroupError: no group"
        assert first_failure(rows).name == "broken"

    def test_stop_on_failure(self, empty_registry):
        @register("first", "weyl")
        def _first():
            return False, "nope"

        @register("second", "weyl")
        def _second():
            return True, ""

        rows = run_checks("weyl", stop_on_failure=True)
        assert [r.name for r in rows] == ["first"]

    def test_suite_filter(self, empty_registry):
        register("a", "algebras")(lambda: (True, ""))
        register("g", "gradings")(lambda: (True, ""))
        assert [r.name for r in run_checks("gradings")] == ["g"]


class TestFormatRows:
    ROWS = [
        CheckRow("algebras", "short", True, "", 0.1),
        CheckRow("weyl", "a-longer-name", False, "12 vs 24", 0.2),
    ]

    def test_text(self):
        text = format_rows(self.ROWS)
        lines = text.splitlines()
        assert lines[0] == "short: pass"
        assert lines[1] == "a-longer-name: FAIL  (12 vs 24)"
        assert lines[-1] == "1/2 checks passed"

    def test_tsv(self):
        lines = format_rows(self.ROWS, tsv=True).splitlines()
        assert lines[1] == "algebras\tshort\tpass\t"
        assert lines[2] == "weyl\ta-longer-name\tfail\t12 vs 24"

    def test_no_failure(self):
        assert first_failure(self.ROWS[:1]) is None
