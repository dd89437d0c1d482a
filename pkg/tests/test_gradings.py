"""Tests for gradings, supports, universal groups and the builtin fine gradings."""

import numpy as np
import pytest

from weyl_gradings.algebras import jordan_power
from weyl_gradings.exceptions import (
    GroupError,
    HomogeneityError,
    SerializationError,
    UnknownObjectError,
)
from weyl_gradings.gradings import (
    GRADING_NAMES,
    Grading,
    builtin_grading,
    declared_universal,
    grading_make,
    induce,
    support,
    universal_abelian_group,
)
from weyl_gradings.groups import AbGroup, AbHom


def _trace_pairs_vanish(grading):
    """T(A_g A_h) = 0 unless g + h = 0, on all homogeneous basis pairs."""
    A = grading.algebra
    group = grading.group

    def trace(vec):
        if A.trace is not None:
            return A.trace_vec(vec)
        return A.polar_vec(vec, A.unit)

    for i, x in enumerate(A.basis_elements()):
        for j, y in enumerate(A.basis_elements()):
            if any(group.add(grading.degrees[i], grading.degrees[j])):
                if not trace(A.product_vec(x.vec, y.vec)).is_zero:
                    return False
    return True


# ── Construction ─────────────────────────────────────────────────────


class TestGradingMake:
    def test_trivial_grading(self, cayley):
        grading = Grading(cayley, AbGroup(0), [()] * 8, name="trivial")
        assert len(grading.support()) == 1
        assert grading.support()[0].dim == 8

    def test_cartan_degrees_valid(self, cayley):
        degree = {"e1": (0, 0), "e2": (0, 0), "u1": (1, 0), "u2": (0, 1), "u3": (-1, -1)}
        degree.update({"v1": (-1, 0), "v2": (0, -1), "v3": (1, 1)})
        grading = grading_make(cayley, AbGroup(2), degree, name="cartan")
        assert grading.degree("u3").coords == (-1, -1)

    def test_flipped_degree_reports_triple(self, cayley):
        degree = {"e1": (0, 0), "e2": (0, 0), "u1": (-1, 0), "u2": (0, 1), "u3": (-1, -1)}
        degree.update({"v1": (-1, 0), "v2": (0, -1), "v3": (1, 1)})
        with pytest.raises(HomogeneityError) as excinfo:
            grading_make(cayley, AbGroup(2), degree)
        assert excinfo.value.triple == ("u1", "u2", "v3")

    def test_missing_degree_raises(self, cayley):
        with pytest.raises(HomogeneityError, match="No degree"):
            grading_make(cayley, AbGroup(2), {"e1": (0, 0)})

    def test_wrong_number_of_degrees(self, cayley):
        with pytest.raises(HomogeneityError):
            Grading(cayley, AbGroup(2), [(0, 0)] * 3)


# ── Support ──────────────────────────────────────────────────────────


class TestSupport:
    def test_cartan_cayley(self, cartan_cayley):
        table = support(cartan_cayley)
        assert len(table) == 7
        assert table[table.position((0, 0))].dim == 2
        assert sorted(table.dims) == [1, 1, 1, 1, 1, 1, 2]

    def test_cd_cayley(self, cd_cayley):
        table = support(cd_cayley)
        assert len(table) == 8
        assert set(table.dims) == {1}

    def test_albert_cartan(self, albert_cartan):
        table = support(albert_cartan)
        assert len(table) == 25
        assert table[table.position((0, 0, 0, 0))].dim == 3
        assert sum(table.dims) == 27

    def test_entries_sorted(self, cartan_cayley):
        degrees = cartan_cayley.support().degrees
        assert degrees == sorted(degrees)

    def test_component(self, cartan_cayley):
        assert cartan_cayley.component((0, 0)) == (0, 1)
        assert cartan_cayley.component((5, 5)) == ()

    def test_text_form(self, cartan_cayley):
        text = cartan_cayley.support().to_text(cartan_cayley.algebra.labels)
        lines = text.splitlines()
        assert lines[0] == "group\tZ^2"
        assert "[0, 0]\t2\te1 e2" in lines
        assert len(lines) == 8


# ── Universal groups ─────────────────────────────────────────────────


class TestUniversalGroup:
    def test_cartan_cayley_is_z2(self, cartan_cayley):
        group, embedding = universal_abelian_group(cartan_cayley)
        assert group.normal_form() == (2, ())
        assert len(embedding) == 7

    def test_gamma_m_is_z_times_t(self):
        grading = builtin_grading("gamma_M", moduli=(2,), k=2)
        group, _ = universal_abelian_group(grading)
        assert group.normal_form() == (1, (2, 2))

    @pytest.mark.parametrize("name", [n for n in GRADING_NAMES if n != "gamma_M"])
    def test_matches_declared(self, name):
        grading = builtin_grading(name)
        group, _ = universal_abelian_group(grading)
        assert group.normal_form() == declared_universal(grading)

    def test_universal_regrading_is_valid(self, cd_cayley):
        regraded = cd_cayley.universal_grading()
        assert regraded.group.normal_form() == (0, (2, 2, 2))
        assert len(regraded.support()) == 8

    def test_generating_subset(self, cartan_cayley):
        data = cartan_cayley.universal()
        assert len(data.basis) == 2
        assert len(data.generator_words) == data.group.rank

    def test_declared_unknown(self, cayley):
        grading = Grading(cayley, AbGroup(0), [()] * 8, name="custom")
        with pytest.raises(UnknownObjectError):
            declared_universal(grading)


# ── Coarsening ───────────────────────────────────────────────────────


class TestInduce:
    def test_identity(self, cartan_cayley):
        alpha = AbHom.identity(cartan_cayley.group)
        assert induce(cartan_cayley, alpha).degrees == cartan_cayley.degrees

    def test_to_trivial_group(self, cartan_cayley):
        alpha = AbHom(cartan_cayley.group, AbGroup(0), np.zeros((0, 2), dtype=np.int64))
        coarse = induce(cartan_cayley, alpha)
        assert len(coarse.support()) == 1

    def test_reduction_mod_2(self, cartan_cayley):
        target = AbGroup(0, (2, 2))
        alpha = AbHom(cartan_cayley.group, target, np.eye(2, dtype=np.int64))
        coarse = induce(cartan_cayley, alpha)
        assert coarse.group == target
        assert len(coarse.support()) == 4

    def test_coarsening_does_not_grow_universal_group(self, cartan_cayley):
        alpha = AbHom(cartan_cayley.group, AbGroup(0, (2, 2)), np.eye(2, dtype=np.int64))
        coarse = induce(cartan_cayley, alpha)
        assert coarse.universal().group.rank <= cartan_cayley.universal().group.rank

    def test_wrong_source_raises(self, cartan_cayley):
        alpha = AbHom.identity(AbGroup(3))
        with pytest.raises(GroupError):
            induce(cartan_cayley, alpha)


# ── Builtins ─────────────────────────────────────────────────────────


class TestBuiltinGradings:
    def test_names(self):
        assert set(GRADING_NAMES) == {
            "cartan_cayley",
            "cd_cayley",
            "okubo_z32",
            "gamma_M",
            "albert_cartan",
            "albert_z25",
            "albert_zz23",
            "albert_z33",
            "albert_z33_minus",
        }

    def test_unknown_name(self):
        with pytest.raises(UnknownObjectError, match="Unknown grading"):
            builtin_grading("nonexistent")

    def test_missing_params(self):
        with pytest.raises(UnknownObjectError, match="Bad parameters"):
            builtin_grading("gamma_M")

    def test_cached(self):
        assert builtin_grading("cartan_cayley") is builtin_grading("cartan_cayley")

    def test_cd_product_degree(self, cd_cayley):
        assert cd_cayley.degree("w1w2").coords == (1, 1, 0)

    def test_z25_degree(self, albert_z25):
        assert albert_z25.degree("i3(w1)").coords == (1, 1, 1, 0, 0)
        assert albert_z25.degree("i1(1)").coords == (1, 0, 0, 0, 0)

    def test_zz23_degrees(self, albert_zz23):
        assert albert_zz23.degree("S+").coords == (2, 0, 0, 0)
        assert albert_zz23.degree("nu-(w1)").coords == (-1, 1, 0, 0)

    def test_gamma_m_name_and_group(self):
        grading = builtin_grading("gamma_M", moduli=(2,), k=2)
        assert grading.name == "gamma_M_2_k2"
        assert str(grading.group) == "Z x Z_2^2"

    def test_z33_components_one_dimensional(self, albert_z33):
        table = albert_z33.support()
        assert len(table) == 27
        assert set(table.dims) == {1}

    def test_z33_homogeneous_cubes_are_nonzero_scalars(self, albert_z33):
        A = albert_z33.algebra
        one = A.one()
        for x in A.basis_elements():
            scalar = jordan_power(x, 3).is_multiple_of(one)
            assert scalar is not None
            assert not scalar.is_zero

    def test_okubo_division_grading(self):
        grading = builtin_grading("okubo_z32")
        assert len(grading.support()) == 8
        assert not grading.support().contains((0, 0))


class TestTraceOrthogonality:
    @pytest.mark.parametrize("name", ["cartan_cayley", "cd_cayley"])
    def test_cayley(self, name):
        assert _trace_pairs_vanish(builtin_grading(name))

    @pytest.mark.parametrize("name", ["albert_cartan", "albert_z25", "albert_zz23", "albert_z33"])
    def test_albert(self, name):
        assert _trace_pairs_vanish(builtin_grading(name))


# ── Serialization ────────────────────────────────────────────────────


class TestGradingJson:
    def test_round_trip(self, cartan_cayley):
        back = Grading.from_json(cartan_cayley.to_json(), algebra=cartan_cayley.algebra)
        assert back == cartan_cayley

    def test_needs_algebra(self, cartan_cayley):
        with pytest.raises(SerializationError, match="needs algebra"):
            Grading.from_json(cartan_cayley.to_json())

    def test_wrong_kind(self, cartan_cayley):
        with pytest.raises(SerializationError):
            Grading.from_dict({"kind": "algebra"}, algebra=cartan_cayley.algebra)
