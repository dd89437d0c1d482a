"""Tests for exceptions, the Artifact base, sparse linear algebra and the worker pool."""

import json
from unittest.mock import patch

import pytest

from weyl_gradings.core.base import Artifact, canonical_json
from weyl_gradings.core.linalg import EchelonBasis, express, invert_columns, rank, vec_add, vec_sub
from weyl_gradings.core.parallel import parallel_map
from weyl_gradings.core.scalars import CycScalar
from weyl_gradings.exceptions import (
    AlgebraConstructionError,
    BoundExceededError,
    CertificationError,
    ConfigurationError,
    DegenerateBicharacterError,
    GroupError,
    HomogeneityError,
    SerializationError,
    SpinConventionError,
    SymplecticFormError,
    UnknownObjectError,
    WeylGradingsError,
)
from weyl_gradings.groups.abelian import AbGroup


# ── Helpers ──────────────────────────────────────────────────────────


def q(value, conductor=1):
    return CycScalar.from_rational(value, conductor)


def square(x):
    return x * x


class Labelled(Artifact):
    """Minimal concrete Artifact for testing."""

    kind = "labelled"

    def __init__(self, name, values):
        self.name = name
        self.values = values

    def to_dict(self):
        return {"kind": self.kind, "name": self.name, "values": self.values}

    @classmethod
    def from_dict(cls, data, **context):
        return cls(data["name"], list(data["values"]))


# ── Exceptions ───────────────────────────────────────────────────────


class TestExceptions:
    """Test the custom exception hierarchy."""

    @pytest.mark.parametrize(
        "exc",
        [
            ConfigurationError,
            GroupError,
            AlgebraConstructionError,
            HomogeneityError,
            CertificationError,
            UnknownObjectError,
            SerializationError,
        ],
    )
    def test_all_derive_from_base(self, exc):
        assert issubclass(exc, WeylGradingsError)

    def test_group_error_subclasses(self):
        assert issubclass(DegenerateBicharacterError, GroupError)
        assert issubclass(SymplecticFormError, GroupError)

    def test_spin_convention_is_certification_error(self):
        assert issubclass(SpinConventionError, CertificationError)

    def test_bound_exceeded_carries_fields(self):
        err = BoundExceededError(
            "too big", bound_name="closure_elements", bound=10, partial_count=7
        )
        assert str(err) == "too big"
        assert err.bound_name == "closure_elements"
        assert err.bound == 10
        assert err.partial_count == 7

    def test_bound_exceeded_defaults(self):
        err = BoundExceededError("too big")
        assert err.partial_count is None

    def test_homogeneity_error_carries_triple(self):
        err = HomogeneityError("bad", triple=("u1", "u2", "v3"))
        assert err.triple == ("u1", "u2", "v3")

    def test_degenerate_bicharacter_carries_radical(self):
        err = DegenerateBicharacterError("degenerate", radical=(1, 0))
        assert err.radical == (1, 0)

    def test_certification_error_carries_witness(self):
        err = CertificationError("not multiplicative", witness=("e1", "u1"))
        assert err.witness == ("e1", "u1")

    def test_wrapping_preserves_cause(self):
        try:
            try:
                raise ValueError("inner")
            except ValueError as e:
                raise SerializationError(f"outer: {str(e)}") from e
        except SerializationError as outer:
            assert isinstance(outer.__cause__, ValueError)


# ── Artifact ─────────────────────────────────────────────────────────


class TestCanonicalJson:
    def test_sorted_and_compact(self):
        assert canonical_json({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'

    def test_key_order_does_not_matter(self):
        assert canonical_json({"x": 1, "y": 2}) == canonical_json({"y": 2, "x": 1})


class TestArtifact:
    """Shared JSON plumbing of Artifact subclasses."""

    def test_cannot_instantiate_abstract(self):
        with pytest.raises(TypeError):
            Artifact()

    def test_to_json_is_canonical(self):
        obj = Labelled("a", [3, 1])
        assert obj.to_json() == '{"kind":"labelled","name":"a","values":[3,1]}'

    def test_json_round_trip(self):
        obj = Labelled("a", [3, 1])
        back = Labelled.from_json(obj.to_json())
        assert back.to_json() == obj.to_json()

    def test_invalid_json_raises(self):
        with pytest.raises(SerializationError, match="Invalid JSON"):
            Labelled.from_json("{oops")

    def test_missing_field_raises(self):
        with pytest.raises(SerializationError, match="Malformed"):
            Labelled.from_json(json.dumps({"name": "a"}))

    def test_save_and_load(self, tmp_path):
        obj = Labelled("a", [1])
        path = obj.save(tmp_path / "nested" / "a.json")
        assert path.read_text() == obj.to_json() + "\n"
        assert Labelled.load(path).values == [1]

    def test_load_missing_file_raises(self, tmp_path):
        with pytest.raises(SerializationError, match="Cannot read"):
            Labelled.load(tmp_path / "absent.json")

    def test_repr_uses_name(self):
        assert repr(Labelled("a", [])) == "<Labelled name=a>"

    def test_group_round_trip(self):
        group = AbGroup(1, (2, 2))
        assert AbGroup.from_json(group.to_json()) == group


# ── Sparse linear algebra ────────────────────────────────────────────


class TestLinalg:
    """Exact echelon forms over cyclotomic scalars."""

    def test_vec_add_cancels(self):
        assert vec_add({0: q(1)}, {0: q(-1), 1: q(2)}) == {1: q(2)}

    def test_vec_sub_negates(self):
        assert vec_sub({}, {2: q(3)}) == {2: q(-3)}

    def test_rank_of_dependent_family(self):
        vectors = [{0: q(1), 1: q(1)}, {0: q(2), 1: q(2)}, {1: q(1)}]
        assert rank(vectors, 2) == 2

    def test_rank_of_empty_family(self):
        assert rank([], 3) == 0

    def test_insert_reports_growth(self):
        basis = EchelonBasis(2)
        assert basis.insert({0: q(1)}) is True
        assert basis.insert({0: q(5)}) is False
        assert basis.rank == 1

    def test_solve_requires_full_rank(self):
        basis = EchelonBasis(2)
        basis.insert({0: q(1)})
        with pytest.raises(ValueError):
            basis.solve()

    def test_express_finds_coefficients(self):
        vectors = [{0: q(1)}, {1: q(1)}]
        coeffs = express(vectors, {0: q(3), 1: q(-2)}, 2)
        assert coeffs == {0: q(3), 1: q(-2)}

    def test_express_outside_span(self):
        assert express([{0: q(1)}], {1: q(1)}, 2) is None

    def test_invert_columns(self):
        columns = [{0: q(1), 1: q(1)}, {1: q(1)}]
        inverse = invert_columns(columns, q(1))
        assert inverse == [{0: q(1), 1: q(-1)}, {1: q(1)}]


# ── Worker pool ──────────────────────────────────────────────────────


class TestParallelMap:
    def test_inline_when_one_job(self):
        with patch("weyl_gradings.core.parallel.Pool") as mock_pool:
            assert parallel_map(square, [1, 2, 3], jobs=1) == [1, 4, 9]
            mock_pool.assert_not_called()

    def test_default_jobs_from_settings(self):
        with patch("weyl_gradings.core.parallel.Pool") as mock_pool:
            parallel_map(square, [1, 2], jobs=None)
            mock_pool.assert_not_called()

    def test_pool_used_for_several_jobs(self):
        with patch("weyl_gradings.core.parallel.Pool") as mock_pool:
            pool = mock_pool.return_value.__enter__.return_value
            pool.map.return_value = [1, 4]
            assert parallel_map(square, [1, 2], jobs=2) == [1, 4]
            mock_pool.assert_called_once_with(processes=2)
            pool.map.assert_called_once()

    def test_order_is_preserved(self):
        assert parallel_map(square, list(range(10)), jobs=1) == [x * x for x in range(10)]
