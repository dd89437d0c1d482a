"""Tests for the structure-constant algebras."""

import random

import pytest

from weyl_gradings.algebras import (
    AlgebraOptions,
    CubicFit,
    DegenerateFlag,
    StructAlgebra,
    albert_algebra,
    albert_nu_basis,
    algebra_from_table,
    cayley_cd_correspondence,
    cd_double,
    conjugate,
    cubic_fit,
    derive_okubo_degrees,
    iota,
    jordan_power,
    matrix_algebra_MDk,
    nu_block_failures,
    okubo_norm_identity,
    pauli_matrix_algebra,
)
from weyl_gradings.algebras.albert import NuBasis
from weyl_gradings.algebras.cayley import (
    CAYLEY_TABLE,
    GOOD_LABELS,
    OKUBO_LABELS,
    OKUBO_TABLE,
    ground_field,
    quadratic_relation_holds,
    symmetric_composition_witness,
    table_mismatches,
)
from weyl_gradings.algebras.pauli import pauli_conductor, pauli_index
from weyl_gradings.core.scalars import omega, root_of_unity
from weyl_gradings.exceptions import (
    AlgebraConstructionError,
    BoundExceededError,
    MissingStructureError,
)


# ── Tables ───────────────────────────────────────────────────────────


class TestAlgebraFromTable:
    def test_one_dimensional_unital(self):
        F = algebra_from_table(["1"], {("1", "1"): {"1": 1}}, AlgebraOptions(unit={"1": 1}))
        assert F.dim == 1
        assert F.one() * F.one() == F.one()

    def test_bad_unit_raises(self):
        with pytest.raises(AlgebraConstructionError, match="unit"):
            algebra_from_table(
                ["e1", "e2"], {("e1", "e1"): {"e2": 1}}, AlgebraOptions(unit={"e1": 1})
            )

    def test_broken_composition_raises(self):
        options = AlgebraOptions(norm={("1", "1"): 2}, composition=True)
        with pytest.raises(AlgebraConstructionError):
            algebra_from_table(["1"], {("1", "1"): {"1": 2}}, options, name="bad")

    def test_composition_without_norm_raises(self):
        options = AlgebraOptions(unit={"1": 1}, composition=True)
        with pytest.raises(MissingStructureError):
            algebra_from_table(["1"], {("1", "1"): {"1": 1}}, options)

    def test_unknown_label_raises(self):
        with pytest.raises(AlgebraConstructionError, match="Unknown basis label"):
            algebra_from_table(["1"], {("1", "x"): {"1": 1}})

    def test_duplicate_labels_raise(self):
        with pytest.raises(AlgebraConstructionError, match="Duplicate"):
            algebra_from_table(["a", "a"], {})

    def test_commutativity_flag_checked(self):
        options = AlgebraOptions(commutative=True)
        with pytest.raises(AlgebraConstructionError, match="not commutative"):
            algebra_from_table(["a", "b"], {("a", "b"): {"a": 1}}, options)

    def test_json_round_trip(self, cayley):
        back = StructAlgebra.from_json(cayley.to_json())
        assert back == cayley
        assert back.basis("u1") * back.basis("u2") == back.basis("v3")


# ── Cayley algebra ───────────────────────────────────────────────────


class TestCayleyGoodBasis:
    def test_labels(self, cayley):
        assert cayley.labels == GOOD_LABELS

    def test_table_matches_reference(self, cayley):
        assert table_mismatches(cayley, CAYLEY_TABLE, GOOD_LABELS) == []

    def test_u1_u2(self, cayley):
        assert cayley.basis("u1") * cayley.basis("u2") == cayley.basis("v3")

    def test_e1_idempotent(self, cayley):
        assert cayley.basis("e1") * cayley.basis("e1") == cayley.basis("e1")

    def test_isotropic_pairing(self, cayley):
        assert cayley.basis("u1").polar(cayley.basis("v1")) == 1
        assert cayley.basis("e1").polar(cayley.basis("e2")) == 1
        assert cayley.basis("u1").norm() == 0

    def test_unit(self, cayley):
        assert cayley.one() == cayley.element({"e1": 1, "e2": 1})

    def test_composition_on_basis_and_samples(self, cayley):
        assert cayley.composition_witness(samples=50, seed=3) is None

    def test_quadratic_relation_on_random_elements(self, cayley):
        rng = random.Random(11)
        assert all(quadratic_relation_holds(cayley.random_element(rng)) for _ in range(100))


class TestConjugate:
    def test_one(self, cayley):
        assert conjugate(cayley.one()) == cayley.one()

    def test_e1(self, cayley):
        assert conjugate(cayley.basis("e1")) == cayley.basis("e2")

    def test_u1(self, cayley):
        assert conjugate(cayley.basis("u1")) == -cayley.basis("u1")

    def test_involution_and_norm(self, cayley):
        rng = random.Random(5)
        for _ in range(20):
            x = cayley.random_element(rng)
            assert conjugate(conjugate(x)) == x
            assert x * conjugate(x) == cayley.one() * x.norm()

    def test_adjoint_identity(self, cayley):
        rng = random.Random(7)
        for _ in range(20):
            x, y, z = (cayley.random_element(rng) for _ in range(3))
            assert (x * y).polar(z) == y.polar(conjugate(x) * z)

    def test_needs_unit(self, okubo):
        with pytest.raises(MissingStructureError):
            conjugate(okubo.basis("e1"))


# ── Cayley-Dickson doubling ──────────────────────────────────────────


class TestCdDouble:
    def test_generator_square(self):
        alpha = 3
        Q = cd_double(ground_field(), alpha, "w")
        u = Q.basis("w")
        assert u * u == Q.one() * -alpha

    def test_bu_times_c(self):
        K = cd_double(ground_field(), -1, "w1")
        Q = cd_double(K, -1, "w2")
        b, c = Q.basis("1"), Q.basis("w1")
        bu = Q.basis("w2")
        # (b u) c = (b conj(c)) u with conj(w1) = -w1
        assert bu * c == -Q.basis("w1w2")
        assert (b * bu) == bu

    def test_unit_preserved(self):
        Q = cd_double(ground_field(), -1, "w")
        assert Q.one() * Q.basis("w") == Q.basis("w")

    def test_z2_degrees_recorded(self):
        Q = cd_double(cd_double(ground_field(), -1, "w1"), -1, "w2")
        assert Q.metadata["cd_degrees"] == [[0, 0], [1, 0], [0, 1], [1, 1]]
        assert Q.metadata["cd_generators"] == ["w1", "w2"]

    def test_zero_alpha_raises(self):
        with pytest.raises(AlgebraConstructionError, match="alpha"):
            cd_double(ground_field(), 0)

    def test_no_doubling_past_octonions(self, cayley_cd):
        with pytest.raises(AlgebraConstructionError, match="not supported"):
            cd_double(cayley_cd, -1)


class TestCayleyCdBasis:
    def test_labels(self, cayley_cd):
        assert cayley_cd.labels == ("1", "w1", "w2", "w1w2", "w3", "w1w3", "w2w3", "w1w2w3")

    @pytest.mark.parametrize("generator", ["w1", "w2", "w3"])
    def test_generators_square_to_one(self, cayley_cd, generator):
        w = cayley_cd.basis(generator)
        assert w * w == cayley_cd.one()

    def test_correspondence_images(self, cayley):
        iso = cayley_cd_correspondence()
        cd = iso.source
        assert iso(cd.basis("w1")) == cayley.element({"e1": 1, "e2": -1})
        assert iso(cd.basis("w2")) == cayley.element({"u1": 1, "v1": -1})
        assert iso(cd.basis("w3")) == cayley.element({"u2": 1, "v2": -1})

    def test_correspondence_is_isomorphism(self):
        iso = cayley_cd_correspondence()
        assert iso.multiplicativity_witness() is None
        assert iso.is_invertible()

    def test_w2_square_in_good_basis(self, cayley):
        w2 = cayley.element({"u1": 1, "v1": -1})
        assert w2 * w2 == cayley.one()


# ── Okubo algebra ────────────────────────────────────────────────────


class TestOkubo:
    def test_matches_reference_table(self, okubo):
        assert table_mismatches(okubo, OKUBO_TABLE, OKUBO_LABELS) == []

    def test_e1_star_e1(self, okubo):
        assert okubo.basis("e1") * okubo.basis("e1") == okubo.basis("e2")

    def test_u1_star_u1(self, okubo):
        assert okubo.basis("u1") * okubo.basis("u1") == okubo.basis("v1")

    def test_norm_of_e1_with_square(self, okubo):
        e1 = okubo.basis("e1")
        assert e1.polar(e1 * e1) == 1

    def test_norm_associative(self, okubo):
        assert symmetric_composition_witness(okubo) is None

    def test_composition(self, okubo):
        assert okubo.composition_witness() is None

    def test_no_unit(self, okubo):
        assert not okubo.has_unit

    def test_derived_degrees(self, okubo):
        degrees = derive_okubo_degrees(okubo)
        assert degrees["e1"] == (1, 0)
        assert degrees["u1"] == (0, 1)
        assert degrees["e2"] == (2, 0)
        assert len(set(degrees.values())) == 8
        assert (0, 0) not in degrees.values()


# ── Albert algebra ───────────────────────────────────────────────────


class TestAlbert:
    def test_dimension_and_unit(self, albert):
        assert albert.dim == 27
        assert albert.one() == albert.basis("E1") + albert.basis("E2") + albert.basis("E3")

    def test_commutative(self, albert):
        assert albert.commutativity_witness() is None

    def test_frame_is_orthogonal_idempotents(self, albert):
        frame = [albert.basis(f"E{i}") for i in (1, 2, 3)]
        for i, a in enumerate(frame):
            for j, b in enumerate(frame):
                assert a * b == (a if i == j else albert.zero())

    def test_frame_kills_own_block(self, albert, cayley):
        for label in GOOD_LABELS:
            assert (albert.basis("E1") * iota(albert, 1, cayley.basis(label))).is_zero

    def test_frame_halves_other_blocks(self, albert):
        x = albert.basis("i1(u2)")
        assert albert.basis("E2") * x == x / 2
        assert albert.basis("E3") * x == x / 2

    def test_cross_block_product(self, albert):
        assert albert.basis("i1(e1)") * albert.basis("i2(e1)") == albert.basis("i3(e2)")

    def test_same_block_product(self, albert):
        product = albert.basis("i1(u1)") * albert.basis("i1(v1)")
        assert product == (albert.basis("E2") + albert.basis("E3")) * 2

    def test_trace(self, albert):
        assert albert.one().trace() == 3
        assert albert.basis("i2(u1)").trace() == 0

    def test_too_small_octonions_raise(self):
        with pytest.raises(AlgebraConstructionError):
            albert_algebra(ground_field())


class TestCubicFit:
    def test_omega_frame_element(self, albert):
        w = omega()
        X = albert.basis("E1") * w**2 + albert.basis("E2") * w + albert.basis("E3")
        assert jordan_power(X, 3) == albert.one()
        fit = cubic_fit(X)
        assert isinstance(fit, CubicFit)
        assert (fit.t, fit.s, fit.n) == (0, 0, 1)

    def test_idempotent_is_degenerate(self, albert):
        fit = cubic_fit(albert.basis("E1"))
        assert isinstance(fit, DegenerateFlag)
        assert fit.relation["X2"] == 1
        assert fit.relation["X"] == -1

    def test_scalar_is_degenerate(self, albert):
        fit = cubic_fit(albert.one() * 2)
        assert isinstance(fit, DegenerateFlag)
        assert fit.relation["1"] == -2

    def test_degree_five_element_has_no_cubic_relation(self):
        D, _, _ = pauli_matrix_algebra((5,))
        with pytest.raises(AlgebraConstructionError, match="no cubic relation"):
            cubic_fit(D.basis("X[1,0]"))

    def test_okubo_norm_identity_at_e1(self, cayley):
        lhs, rhs = okubo_norm_identity(cayley.basis("e1"))
        assert lhs == rhs == 8

    def test_jordan_power_range(self, albert):
        assert jordan_power(albert.basis("E2"), 0) == albert.one()
        with pytest.raises(ValueError):
            jordan_power(albert.basis("E2"), 4)


class TestNuBasis:
    def test_all_product_identities_hold(self):
        assert nu_block_failures() == []

    def test_rebased_algebra(self):
        B = albert_nu_basis()
        assert B.dim == 27
        assert B.parent is not None
        assert B.labels[:4] == ("E", "Et", "S+", "S-")

    def test_s_plus_s_minus(self, cayley_cd):
        nu = NuBasis(albert_algebra(cayley_cd), cayley_cd)
        assert nu.S(1) * nu.S(-1) == nu.Et() * 2

    def test_nu_plus_products(self, cayley_cd):
        nu = NuBasis(albert_algebra(cayley_cd), cayley_cd)
        x = cayley_cd.basis("w1")
        half = nu.nu_pm(1, x) / 2
        assert nu.E() * nu.nu_pm(1, x) == half
        assert nu.nu_pm(1, x) * nu.nu_pm(1, x) == nu.S(1) * (x.polar(x) * 2)


# ── Pauli and matrix algebras ────────────────────────────────────────


class TestPauli:
    def test_anticommuting_generators(self):
        D, _, _ = pauli_matrix_algebra((2,))
        a, b = D.basis("X[1,0]"), D.basis("X[0,1]")
        assert a * b == -(b * a)

    def test_generator_squares_to_one(self):
        D, _, _ = pauli_matrix_algebra((2,))
        a = D.basis("X[1,0]")
        assert a * a == D.one()

    @pytest.mark.parametrize(
        "moduli, expected",
        [((), 24), ((2,), 24), ((3, 3), 24), ((5,), 120), ((8,), 48), ((2, 16), 96)],
    )
    def test_conductor_holds_2l_th_roots(self, moduli, expected):
        assert pauli_conductor(moduli) == expected

    @pytest.mark.parametrize("moduli, dim", [((2,), 4), ((3,), 9), ((2, 2), 16), ((4,), 16)])
    def test_dimension(self, moduli, dim):
        assert pauli_matrix_algebra(moduli)[0].dim == dim

    @pytest.mark.parametrize("moduli", [(2,), (3,), (2, 2)])
    def test_commutation_relation(self, moduli):
        D, T, beta = pauli_matrix_algebra(moduli)
        for u in T.element_coords():
            for v in T.element_coords():
                xu = D.basis(pauli_index(T, u))
                xv = D.basis(pauli_index(T, v))
                assert xu * xv == xv * xu * beta.value(u, v, D.conductor)

    @pytest.mark.parametrize("moduli", [(2,), (3,), (2, 2)])
    def test_basis_elements_invertible(self, moduli):
        D, T, _ = pauli_matrix_algebra(moduli)
        for t in T.element_coords():
            inverse = D.basis(pauli_index(T, T.scale(-1, t)))
            scalar = (D.basis(pauli_index(T, t)) * inverse).is_multiple_of(D.one())
            assert scalar is not None and not scalar.is_zero

    def test_pauli_index(self):
        _, T, _ = pauli_matrix_algebra((2,))
        assert pauli_index(T, (1, 0)) == 2

    def test_degree_bound(self):
        with pytest.raises(BoundExceededError) as excinfo:
            pauli_matrix_algebra((13,))
        assert excinfo.value.bound_name == "pauli_degree"

    def test_trace_is_matrix_trace(self):
        D, _, _ = pauli_matrix_algebra((3,))
        assert D.one().trace() == 3
        assert D.basis("X[1,0]").trace() == 0


class TestMatrixAlgebra:
    def test_matrix_units(self):
        M = matrix_algebra_MDk((2,), 2)
        assert M.basis("E12*X[0,0]") * M.basis("E21*X[0,0]") == M.basis("E11*X[0,0]")

    def test_kronecker_product(self):
        M = matrix_algebra_MDk((2,), 2)
        assert M.basis("E11*X[1,0]") * M.basis("E11*X[0,1]") == M.basis("E11*X[1,1]")

    def test_mismatched_inner_indices(self):
        M = matrix_algebra_MDk((2,), 3)
        assert (M.basis("E12*X[0,0]") * M.basis("E13*X[0,0]")).is_zero

    def test_dimension(self):
        assert matrix_algebra_MDk((2,), 2).dim == 16
        assert matrix_algebra_MDk((3,), 1).dim == 9

    def test_matrix_degree_bound(self):
        with pytest.raises(BoundExceededError) as excinfo:
            matrix_algebra_MDk((2,), 5)
        assert excinfo.value.bound_name == "matrix_degree"

    def test_rejects_nonpositive_k(self):
        with pytest.raises(ValueError):
            matrix_algebra_MDk((2,), 0)

    def test_unit_is_identity_matrix(self):
        M = matrix_algebra_MDk((2,), 2)
        x = M.basis("E21*X[1,1]")
        assert M.one() * x == x == x * M.one()
        assert root_of_unity(2, 1) * x == -x
