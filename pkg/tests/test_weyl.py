"""Tests for support-permutation groups, upper bounds, root systems and the Weyl pipeline."""

import json

import pytest

from weyl_gradings.exceptions import (
    BoundExceededError,
    ConfigurationError,
    GroupError,
    UnknownObjectError,
)
from weyl_gradings.groups import AbGroup, AbHom
from weyl_gradings.morphisms import SupportPerm, builtin_automorphism, graded_automorphism_check
from weyl_gradings.weyl import (
    CheckResult,
    Mode,
    PermGroup,
    RootSystem,
    WeylReport,
    closure,
    elementary_transvections,
    pair_signatures,
    parse_mode,
    perm_from_degree_map,
    phi_root_system,
    structured_z25_count,
    support_preserving_upper_bound,
    symmetric_subsets,
    weyl_group,
    weyl_matrix_theorem_check,
)


@pytest.fixture
def cayley_generators(cartan_cayley):
    return [
        graded_automorphism_check(cartan_cayley, builtin_automorphism(name))
        for name in ("tau", "phi1_cayley", "phi2_cayley")
    ]


# ── Closure ──────────────────────────────────────────────────────────


class TestClosure:
    def test_no_generators(self, cartan_cayley):
        group = closure(cartan_cayley, [])
        assert group.order == 1
        assert group.is_closed()

    def test_single_generator(self, cartan_cayley, cayley_generators):
        assert closure(cartan_cayley, cayley_generators[:1]).order == 3

    def test_cayley_generators_give_dihedral_12(self, cartan_cayley, cayley_generators):
        group = closure(cartan_cayley, cayley_generators)
        assert group.order == 12
        assert group.is_closed()
        assert sorted(group.orbit_sizes()) == [1, 6]

    def test_identity_generators_ignored(self, cartan_cayley):
        identity = SupportPerm.identity(cartan_cayley)
        group = closure(cartan_cayley, [identity, identity])
        assert group.generators == []

    def test_bound(self, cartan_cayley, cayley_generators):
        with pytest.raises(BoundExceededError) as excinfo:
            closure(cartan_cayley, cayley_generators, bound=5)
        assert excinfo.value.bound_name == "closure_elements"

    def test_foreign_generator(self, cartan_cayley, cd_cayley):
        with pytest.raises(GroupError, match="does not act"):
            closure(cartan_cayley, [SupportPerm.identity(cd_cayley)])

    def test_membership(self, cartan_cayley, cayley_generators):
        group = closure(cartan_cayley, cayley_generators)
        assert cayley_generators[0].perm in group
        assert "not a perm" not in group


class TestPermGroup:
    def test_non_group_detected(self, cartan_cayley, cayley_generators):
        p = cayley_generators[0].perm
        identity = tuple(range(len(p)))
        assert not PermGroup(cartan_cayley, [identity, p]).is_closed()

    def test_missing_identity(self, cartan_cayley, cayley_generators):
        assert not PermGroup(cartan_cayley, [cayley_generators[0].perm]).is_closed()

    def test_equality_ignores_generators(self, cartan_cayley, cayley_generators):
        group = closure(cartan_cayley, cayley_generators)
        assert PermGroup(cartan_cayley, list(group)) == group


class TestDegreeMaps:
    def test_transvection_count(self):
        transvections = elementary_transvections(AbGroup(0, (2, 2, 2)))
        assert len(transvections) == 6
        assert all(mu.is_bijective() for mu in transvections)

    def test_identity_gives_identity(self, cd_cayley):
        perm = perm_from_degree_map(cd_cayley, AbHom.identity(cd_cayley.group))
        assert perm == tuple(range(8))

    def test_doubling_leaves_support(self, cartan_cayley):
        group = cartan_cayley.group
        doubling = AbHom.from_images(group, group, [(2, 0), (0, 2)])
        with pytest.raises(GroupError, match="out of the support"):
            perm_from_degree_map(cartan_cayley, doubling)


# ── Root systems ─────────────────────────────────────────────────────


class TestRootSystems:
    def test_g2(self, cartan_cayley):
        roots = phi_root_system(cartan_cayley)
        assert len(roots) == 12
        assert len(roots.short) == 6
        assert roots.is_closed_under_negation()

    def test_g2_short_roots_are_support(self, cartan_cayley):
        roots = phi_root_system(cartan_cayley)
        support = {d for d in cartan_cayley.support().degrees if d != (0, 0)}
        assert set(roots.short) == support

    def test_f4(self, albert_cartan):
        roots = phi_root_system(albert_cartan)
        assert len(roots) == 48
        assert len(roots.short) == 24
        assert len(roots.long) == 24

    def test_f4_symmetric_subsets(self, albert_cartan):
        found = symmetric_subsets(phi_root_system(albert_cartan))
        assert len(found) == 3
        assert all(len(s) == 8 for s in found)

    def test_no_roots_for_other_gradings(self, cd_cayley):
        with pytest.raises(UnknownObjectError):
            phi_root_system(cd_cayley)

    def test_empty(self):
        with pytest.raises(UnknownObjectError):
            RootSystem([])


# ── Upper bounds ─────────────────────────────────────────────────────


class TestUpperBound:
    def test_cartan_cayley(self, cartan_cayley):
        assert support_preserving_upper_bound(cartan_cayley).order == 12

    def test_cd_cayley(self, cd_cayley):
        assert support_preserving_upper_bound(cd_cayley).order == 168

    def test_refined_is_a_subgroup(self, cd_cayley):
        raw = support_preserving_upper_bound(cd_cayley)
        refined = support_preserving_upper_bound(cd_cayley, refine=True)
        assert all(p in raw for p in refined)
        assert refined.order == 168

    def test_bound(self, cd_cayley):
        with pytest.raises(BoundExceededError) as excinfo:
            support_preserving_upper_bound(cd_cayley, bound=3)
        assert excinfo.value.bound_name == "upper_bound_candidates"

    def test_pair_signatures_square(self, cartan_cayley):
        sig = pair_signatures(cartan_cayley)
        assert len(sig) == 7
        assert all(len(row) == 7 for row in sig)

    def test_structured_z25_count(self):
        assert structured_z25_count() == {"gl2": 6, "gl3": 168, "corner": 64, "order": 64512}


# ── Report model and modes ───────────────────────────────────────────


class TestParseMode:
    def test_full(self):
        assert parse_mode("full") == Mode("full")

    def test_sampled(self):
        assert parse_mode("sampled:200") == Mode("sampled", 200)

    def test_default_from_settings(self):
        assert parse_mode() == Mode("full")

    @pytest.mark.parametrize("text", ["sampled:0", "sampled:x", "partial"])
    def test_malformed(self, text):
        with pytest.raises(ConfigurationError):
            parse_mode(text)


class TestWeylReport:
    def _report(self, **overrides):
        fields = dict(grading="g", strategy="s", lower_order=4, upper_order=4, matched=True)
        fields.update(overrides)
        return WeylReport(**fields)

    def test_matched_requires_equal_orders(self):
        with pytest.raises(ValueError):
            self._report(upper_order=8)

    def test_passed_needs_all_checks(self):
        report = self._report(structure_checks=[CheckResult(name="c", passed=False)])
        assert not report.passed
        assert report.failed_checks() == ["c"]

    def test_canonical_json_drops_metadata(self):
        report = self._report(metadata={"seconds": 1.5})
        assert "metadata" not in json.loads(report.canonical_json())


# ── Pipeline ─────────────────────────────────────────────────────────


class TestWeylGroup:
    def test_cartan_cayley(self):
        report = weyl_group("cartan_cayley")
        assert report.lower_order == report.upper_order == 12
        assert report.matched
        assert report.passed, report.failed_checks()
        assert report.generators

    def test_cd_cayley(self):
        report = weyl_group("cd_cayley")
        assert report.lower_order == 168
        assert report.passed, report.failed_checks()

    def test_deterministic(self):
        assert weyl_group("cartan_cayley").canonical_json() == weyl_group(
            "cartan_cayley"
        ).canonical_json()

    def test_no_strategy(self):
        with pytest.raises(UnknownObjectError, match="No Weyl group strategy"):
            weyl_group("okubo_z32")

    def test_gamma_m_dispatches_to_matrix_theorem(self):
        report = weyl_group("gamma_M", moduli=(2,), k=2)
        assert report.strategy == "matrix-theorem"
        assert report.lower_order == 48

    @pytest.mark.slow
    def test_albert_cartan(self):
        report = weyl_group("albert_cartan")
        assert report.lower_order == report.upper_order == 1152
        assert report.passed, report.failed_checks()

    @pytest.mark.slow
    def test_albert_z25(self):
        report = weyl_group("albert_z25")
        assert report.lower_order == report.upper_order == 64512
        assert report.strategy == "closure+structured-count"
        assert report.passed, report.failed_checks()

    @pytest.mark.slow
    def test_albert_zz23(self):
        report = weyl_group("albert_zz23")
        assert report.lower_order == report.upper_order == 2688
        assert report.passed, report.failed_checks()
        names = {c.name for c in report.structure_checks}
        assert {"psi0-negates-z-coordinate", "beta-shifts-odd-degrees-by-h"} <= names

    @pytest.mark.slow
    def test_albert_z33_full(self):
        report = weyl_group("albert_z33", mode="full")
        assert report.lower_order == report.upper_order == 5616
        assert report.raw_upper_order == 11232
        assert report.passed, report.failed_checks()

    @pytest.mark.slow
    def test_albert_z33_sampled(self):
        report = weyl_group("albert_z33", mode="sampled:12")
        assert report.lower_order == 5616
        assert report.metadata["samples"] == 12
        assert report.passed, report.failed_checks()


class TestMatrixTheorem:
    @pytest.mark.parametrize("moduli, k, expected", [((2,), 2, 48), ((3,), 1, 24)])
    def test_orders(self, moduli, k, expected):
        report = weyl_matrix_theorem_check(moduli, k)
        assert report.lower_order == expected
        assert report.matched
        assert report.passed, report.failed_checks()

    def test_without_division_part(self):
        report = weyl_matrix_theorem_check((), 3)
        assert report.lower_order == 6

    @pytest.mark.slow
    def test_k3_over_quaternions(self):
        report = weyl_matrix_theorem_check((2,), 3)
        assert report.lower_order == 576
        assert report.passed, report.failed_checks()
