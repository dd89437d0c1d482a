"""Tests for exact cyclotomic arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weyl_gradings.core.scalars import (
    CycScalar,
    as_scalar,
    cyclotomic_polynomial,
    imaginary_unit,
    omega,
    root_of_unity,
    sqrt2,
)
from weyl_gradings.exceptions import ScalarError


def scalars(conductor: int, degree: int):
    """Scalars of Q(zeta_N) with small rational coordinates."""
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.lists(coeff, min_size=degree, max_size=degree).map(
        lambda cs: CycScalar(conductor, cs)
    )


Q12 = scalars(12, 4)


# ── Cyclotomic polynomials ───────────────────────────────────────────


class TestCyclotomicPolynomial:
    @pytest.mark.parametrize(
        "n, expected",
        [
            (1, (-1, 1)),
            (2, (1, 1)),
            (3, (1, 1, 1)),
            (4, (1, 0, 1)),
            (8, (1, 0, 0, 0, 1)),
            (12, (1, 0, -1, 0, 1)),
        ],
    )
    def test_known_values(self, n, expected):
        assert cyclotomic_polynomial(n) == expected

    @pytest.mark.parametrize("n", [5, 6, 9, 24])
    def test_degree_is_totient(self, n):
        totient = {5: 4, 6: 2, 9: 6, 24: 8}[n]
        assert len(cyclotomic_polynomial(n)) - 1 == totient

    def test_rejects_zero(self):
        with pytest.raises(ScalarError):
            cyclotomic_polynomial(0)


# ── Field operations ─────────────────────────────────────────────────


class TestFieldOps:
    def test_i_squared(self):
        assert root_of_unity(4, 1) ** 2 == -1

    def test_sqrt2_squared(self):
        assert (root_of_unity(8, 1) + root_of_unity(8, 7)) ** 2 == 2
        assert sqrt2() ** 2 == 2

    def test_invert_two(self):
        assert CycScalar.from_rational(2).inverse() == Fraction(1, 2)

    def test_invert_zero_raises(self):
        with pytest.raises(ScalarError, match="invert zero"):
            CycScalar.zero(24).inverse()

    def test_divide_by_zero_int_raises(self):
        with pytest.raises(ScalarError):
            CycScalar.one(24) / 0

    def test_omega_is_primitive_cube_root(self):
        w = omega()
        assert w ** 3 == 1
        assert w != 1
        assert 1 + w + w * w == 0

    def test_imaginary_unit_needs_four_dividing(self):
        with pytest.raises(ScalarError):
            imaginary_unit(6)

    @pytest.mark.parametrize("n", range(2, 25))
    def test_roots_of_unity_pair_to_one(self, n):
        for k in range(1, n):
            assert root_of_unity(n, k) * root_of_unity(n, n - k) == 1

    @pytest.mark.parametrize("n", [3, 4, 8, 12])
    def test_primitive_order(self, n):
        z = root_of_unity(n, 1)
        assert z ** n == 1
        assert all(z ** k != 1 for k in range(1, n))

    def test_cube_root_of_rational(self):
        assert CycScalar.from_rational(8, 24).cube_root() ** 3 == 8

    def test_cube_root_of_non_cube_raises(self):
        with pytest.raises(ScalarError):
            CycScalar.from_rational(2, 24).cube_root()


class TestFieldAxioms:
    """Hypothesis checks of the field laws in Q(zeta_12)."""

    @settings(max_examples=40, deadline=None)
    @given(Q12, Q12, Q12)
    def test_addition_associative(self, a, b, c):
        assert (a + b) + c == a + (b + c)

    @settings(max_examples=40, deadline=None)
    @given(Q12, Q12, Q12)
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @settings(max_examples=40, deadline=None)
    @given(Q12, Q12)
    def test_multiplication_commutative(self, a, b):
        assert a * b == b * a

    @settings(max_examples=40, deadline=None)
    @given(Q12)
    def test_inverse(self, a):
        if a.is_zero:
            return
        assert a * a.inverse() == 1


# ── Embedding ────────────────────────────────────────────────────────


class TestEmbedding:
    def test_omega_embeds_into_12(self):
        w3 = root_of_unity(3, 1)
        assert w3.embed(12) == root_of_unity(12, 4)

    def test_mixed_conductors_unify(self):
        assert root_of_unity(3, 1) * root_of_unity(4, 1) == root_of_unity(12, 7)

    @settings(max_examples=30, deadline=None)
    @given(scalars(3, 2), scalars(3, 2))
    def test_embedding_preserves_operations(self, a, b):
        assert (a * b).embed(12) == a.embed(12) * b.embed(12)
        assert (a + b).embed(12) == a.embed(12) + b.embed(12)
        assert (a == b) == (a.embed(12) == b.embed(12))

    def test_embedding_into_non_multiple_raises(self):
        with pytest.raises(ScalarError):
            root_of_unity(3, 1).embed(8)

    def test_equal_scalars_hash_equal_across_conductors(self):
        assert hash(root_of_unity(3, 1)) == hash(root_of_unity(3, 1).embed(24))


# ── Text form ────────────────────────────────────────────────────────


class TestStringForm:
    def test_rational(self):
        assert CycScalar.from_rational(Fraction(1, 2), 4).to_string() == "1/2 @4"

    def test_zero(self):
        assert CycScalar.zero(8).to_string() == "0 @8"

    def test_parse(self):
        z = CycScalar.from_string("1 + -2/3*z^2 @12")
        assert z == 1 - Fraction(2, 3) * root_of_unity(12, 2)

    def test_malformed_raises(self):
        with pytest.raises(ScalarError, match="Malformed"):
            CycScalar.from_string("one @x")

    def test_as_scalar_accepts_strings(self):
        assert as_scalar("1/2 @4", 24) == Fraction(1, 2)
