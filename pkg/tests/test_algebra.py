"""Tests for Lie algebras, pairs, representations and their constructors.

Covers: validators (which report, never raise), the worked example and its
perturbations, the Rota-Baxter constructor, induced and semidirect
structures, basis changes and the scale/reflect transforms.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from mrbld_cohomology.algebra import (
    LieAlgebra,
    MRBLieDerPair,
    PairMorphism,
    Representation,
    change_basis,
    direct_sum,
    from_rota_baxter,
    induced_pair,
    induced_representation,
    search_rota_baxter,
    semidirect_product,
    transform_representation,
    validate_lie,
    validate_morphism,
    validate_pair,
    validate_representation,
)
from mrbld_cohomology.constants import Identity, TransformMode
from mrbld_cohomology.exceptions import DimensionMismatch, InvalidPair, InvalidRepresentation, NotRotaBaxter
from mrbld_cohomology.linalg import RationalMatrix
from mrbld_cohomology.samples import FAMILIES, InstanceSampler, projection_rota_baxter, two_dim_pair


def _non_commuting_trivial(p: MRBLieDerPair) -> Representation:
    return Representation.trivial(p, RationalMatrix.from_rows([[0, 1], [0, 0]]), RationalMatrix.diagonal([1, 0]))


# ---------------------------------------------------------------------------
# Lie algebras
# ---------------------------------------------------------------------------

class TestLieAlgebra:
    """Structure constants, brackets and the Jacobi check."""

    def test_bracket_is_bilinear(self) -> None:
        """``[e₁ + e₂, e₂] = e₂`` on the two-dimensional algebra."""
        alg = two_dim_pair().algebra
        assert alg.bracket((Fraction(1), Fraction(1)), (Fraction(0), Fraction(1))) == (0, 1)

    def test_antisymmetry_from_table(self) -> None:
        """``from_brackets`` fills ``[e_j, e_i] = −[e_i, e_j]``."""
        alg = two_dim_pair().algebra
        assert alg.bracket_basis(1, 0) == (0, -1)

    def test_antisymmetry_violation_reported(self) -> None:
        """Raw constants with ``[e₁,e₂] = [e₂,e₁] = e₂`` fail antisymmetry at ``(0, 1, 1)``."""
        zero = (Fraction(0), Fraction(0))
        e2 = (Fraction(0), Fraction(1))
        alg = LieAlgebra(2, ((zero, e2), (e2, zero)))
        report = validate_lie(alg)
        assert report.violated_identities() == {Identity.ANTISYMMETRY.value}
        assert [v.indices for v in report.violations] == [[0, 1, 1]]

    def test_jacobi_violation_reported(self) -> None:
        """A bracket breaking Jacobi yields a report naming the triple, not an exception."""
        alg = LieAlgebra.from_brackets(3, {(0, 1): (0, 1, 0), (1, 2): (1, 0, 0)})
        report = validate_lie(alg)
        assert not report.valid
        assert report.violated_identities() == {Identity.JACOBI.value}
        assert report.violations[0].indices == [0, 1, 2]

    def test_bad_index_pair_raises(self) -> None:
        """Bracket keys must satisfy ``i < j < dim``."""
        with pytest.raises(DimensionMismatch):
            LieAlgebra.from_brackets(2, {(1, 0): (1, 0)})


# ---------------------------------------------------------------------------
# Pairs
# ---------------------------------------------------------------------------

class TestValidatePair:
    """The worked example and what breaks it."""

    def test_example_is_valid(self, example: MRBLieDerPair) -> None:
        """``[e₁,e₂] = e₂``, weight −1, ``R = diag(2,1)``, ``d = diag(0,3)`` validates."""
        report = validate_pair(example)
        assert report.valid
        assert Identity.MODIFIED_ROTA_BAXTER.value in report.checked

    def test_non_diagonal_operator_fails(self, example: MRBLieDerPair) -> None:
        """``R = [[2,1],[0,1]]`` breaks the operator identity and the commutation with ``d``."""
        broken = MRBLieDerPair(example.algebra, example.weight, RationalMatrix.from_rows([[2, 1], [0, 1]]), example.d)
        violated = validate_pair(broken).violated_identities()
        assert Identity.MODIFIED_ROTA_BAXTER.value in violated
        assert Identity.OPERATOR_COMMUTATION.value in violated

    def test_weight_perturbation_fails(self, example: MRBLieDerPair) -> None:
        """Weight 0 instead of −1 is rejected at the pair ``(e₁, e₂)``."""
        broken = MRBLieDerPair(example.algebra, Fraction(0), example.R, example.d)
        report = validate_pair(broken)
        assert [v.indices for v in report.violations] == [[0, 1]]

    def test_zero_dimensional_pair_is_valid(self) -> None:
        """Every identity holds vacuously on the zero algebra."""
        empty = MRBLieDerPair(LieAlgebra.abelian(0), Fraction(-1), RationalMatrix.zeros(0, 0), RationalMatrix.zeros(0, 0))
        report = validate_pair(empty)
        assert report.valid
        assert not report.violations

    def test_non_derivation_fails(self, example: MRBLieDerPair) -> None:
        """``d = diag(1, 0)`` is not a derivation of ``[e₁,e₂] = e₂``."""
        broken = MRBLieDerPair(example.algebra, example.weight, example.R, RationalMatrix.diagonal([1, 0]))
        assert Identity.DERIVATION.value in validate_pair(broken).violated_identities()

    @pytest.mark.parametrize("family", FAMILIES)
    def test_sampled_families_are_valid(self, family: str) -> None:
        """Every sampler family produces valid pairs, conjugated or not."""
        sampler = InstanceSampler(7)
        for conjugate in (False, True):
            assert validate_pair(sampler.pair(family, conjugate=conjugate)).valid


# ---------------------------------------------------------------------------
# Representations
# ---------------------------------------------------------------------------

class TestRepresentation:
    """Adjoint, trivial and direct-sum representations."""

    def test_adjoint_is_valid(self, example_adjoint: Representation) -> None:
        """The adjoint representation of a valid pair validates."""
        assert validate_representation(example_adjoint).valid

    def test_non_commuting_maps_reported(self, example: MRBLieDerPair) -> None:
        """``R_V∘d_V ≠ d_V∘R_V`` is the only violation of this trivial representation."""
        report = validate_representation(_non_commuting_trivial(example))
        assert report.violated_identities() == {Identity.REP_COMMUTATION.value}

    def test_invalid_pair_raises(self, example: MRBLieDerPair) -> None:
        """Validating a representation of an invalid pair raises InvalidPair with its report."""
        broken = MRBLieDerPair(example.algebra, Fraction(0), example.R, example.d)
        with pytest.raises(InvalidPair) as excinfo:
            validate_representation(Representation.adjoint(broken))
        assert not excinfo.value.report.valid

    def test_direct_sum_is_valid(self, example: MRBLieDerPair, example_adjoint: Representation) -> None:
        """Adjoint ⊕ zero module stays a representation."""
        total = direct_sum(example_adjoint, Representation.zero(example, 1))
        assert total.dimV == 3
        assert validate_representation(total).valid


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

class TestRotaBaxter:
    """``T ↦ 2T + λId`` sends Rota-Baxter triples to modified pairs of weight ``−λ²``."""

    def test_projection_operator(self) -> None:
        """``T = −P₁`` of weight 1 on the two-dimensional algebra gives ``R = diag(−1, 1)``."""
        alg, T, d = projection_rota_baxter(1)[0]
        pair = from_rota_baxter(alg, T, d, 1)
        assert pair.weight == -1
        assert pair.R == RationalMatrix.diagonal([-1, 1])

    def test_identity_is_not_rota_baxter(self) -> None:
        """``T = Id`` at weight 0 fails the Rota-Baxter identity."""
        alg = two_dim_pair().algebra
        with pytest.raises(NotRotaBaxter) as excinfo:
            from_rota_baxter(alg, RationalMatrix.identity(2), RationalMatrix.zeros(2, 2), 0)
        assert excinfo.value.identity == Identity.ROTA_BAXTER.value

    def test_non_lie_base_names_rota_baxter(self) -> None:
        """A base breaking Jacobi fails the Rota-Baxter hypothesis and carries the Lie report."""
        alg = LieAlgebra.from_brackets(3, {(0, 1): (0, 1, 0), (1, 2): (1, 0, 0)})
        with pytest.raises(NotRotaBaxter) as excinfo:
            from_rota_baxter(alg, RationalMatrix.zeros(3, 3), RationalMatrix.zeros(3, 3), 1)
        assert excinfo.value.identity == Identity.ROTA_BAXTER.value
        assert excinfo.value.report.violated_identities() == {Identity.JACOBI.value}
        assert "not Lie" in str(excinfo.value)

    @pytest.mark.parametrize("weight", [0, 1, -1, 2, -2])
    def test_every_grid_operator_maps_to_valid_pair(self, weight: int) -> None:
        """Each operator found by the grid search yields a valid modified pair."""
        alg = two_dim_pair().algebra
        found = search_rota_baxter(alg, weight)
        assert found
        for T in found:
            assert from_rota_baxter(alg, T, RationalMatrix.zeros(2, 2), weight).weight == -Fraction(weight) ** 2


class TestInducedAndSemidirect:
    """Induced bracket, induced action and semidirect products."""

    def test_induced_bracket_of_example(self, example: MRBLieDerPair) -> None:
        """``[e₁,e₂]_R = [2e₁,e₂] + [e₁,e₂] = 3e₂``."""
        assert induced_pair(example).algebra.bracket_basis(0, 1) == (0, 3)

    def test_induced_action_of_example(self, example_adjoint: Representation) -> None:
        """``ρ_R(e₁) = ad(2e₁) − R∘ad(e₁)`` and the result validates."""
        induced = induced_representation(example_adjoint)
        assert induced.rho[0] == RationalMatrix.from_rows([[0, 0], [0, 1]])
        assert validate_representation(induced).valid

    def test_semidirect_product(self, example: MRBLieDerPair, example_adjoint: Representation) -> None:
        """``A ⋉ A`` has dimension 4 and ``[e₁, f₂] = ρ(e₁)f₂ = f₂``."""
        total = semidirect_product(example, example_adjoint)
        assert total.dim == 4
        assert total.algebra.bracket_basis(0, 3) == (0, 0, 0, 1)
        assert validate_pair(total).valid

    def test_semidirect_rejects_invalid_representation(self, example: MRBLieDerPair) -> None:
        """An invalid representation raises InvalidRepresentation carrying its report."""
        with pytest.raises(InvalidRepresentation) as excinfo:
            semidirect_product(example, _non_commuting_trivial(example))
        assert Identity.REP_COMMUTATION.value in excinfo.value.report.violated_identities()


class TestBasisAndTransforms:
    """Basis changes are morphisms; transforms report which weight validates."""

    def test_change_basis_is_a_morphism(self, example: MRBLieDerPair) -> None:
        """``g`` maps the conjugated pair back onto the original."""
        g = RationalMatrix.from_rows([[1, 1], [1, 2]])
        moved = change_basis(example, g)
        assert validate_pair(moved).valid
        assert validate_morphism(PairMorphism(moved, example, g)).valid

    def test_identity_and_zero_maps_are_morphisms(self, example: MRBLieDerPair) -> None:
        """``Id`` and the zero map preserve every structure."""
        assert validate_morphism(PairMorphism(example, example, RationalMatrix.identity(2))).valid
        assert validate_morphism(PairMorphism(example, example, RationalMatrix.zeros(2, 2))).valid

    def test_swap_breaks_bracket(self, example: MRBLieDerPair) -> None:
        """``e₁ ↔ e₂`` sends ``[e₁,e₂] = e₂`` to ``e₁`` but ``[e₂,e₁] = −e₂``."""
        swap = RationalMatrix.from_rows([[0, 1], [1, 0]])
        report = validate_morphism(PairMorphism(example, example, swap))
        assert not report.valid
        assert Identity.MORPHISM_BRACKET.value in report.violated_identities()
        bracket = [v for v in report.violations if v.identity == Identity.MORPHISM_BRACKET.value]
        assert [v.indices for v in bracket] == [[0, 1]]

    def test_scale_validates_at_squared_weight(self, example_adjoint: Representation) -> None:
        """``2R`` fails at weight ``2λ`` and validates at ``4λ``."""
        _, report = transform_representation(example_adjoint, TransformMode.SCALE, 2)
        assert report.claimed_weight == "-2"
        assert not report.claimed_valid
        assert report.alternative_weight == "-4"
        assert report.alternative_valid

    def test_reflect_validates_as_negation(self, example_adjoint: Representation) -> None:
        """``−λId − R`` fails; ``−R`` validates at the same weight."""
        _, report = transform_representation(example_adjoint, TransformMode.REFLECT)
        assert not report.claimed_valid
        assert report.alternative_valid
