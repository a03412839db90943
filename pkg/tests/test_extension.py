"""Tests for abelian extensions and their classification.

Covers: build/extract, section shifts, structural checks on presentations,
the induced representation and classification witnesses.
"""

from __future__ import annotations

import pytest

from mrbld_cohomology.algebra import MRBLieDerPair, Representation, semidirect_product, validate_pair
from mrbld_cohomology.cochains import Cochain, unit_cochain
from mrbld_cohomology.cohomology import is_cocycle
from mrbld_cohomology.constants import ComplexKind, Identity
from mrbld_cohomology.exceptions import InvalidExtension, InvalidRepresentation, NotCocycle
from mrbld_cohomology.extension import (
    CocycleTriple,
    CoefficientSpace,
    ExtensionPresentation,
    build_extension,
    canonical_section,
    classify,
    coboundary_triple,
    extract_cocycle,
    force_build,
    induced_rep_from_section,
)
from mrbld_cohomology.linalg import RationalMatrix, parse_rational
from mrbld_cohomology.samples import InstanceSampler


def _operator_only_triple() -> CocycleTriple:
    """``Θ = 0``, ``ξ(e₂) = u``, ``χ = 0`` on the example: the operator component is ``±3u``."""
    return CocycleTriple(Cochain.zero(2, 2, 1), Cochain.from_matrix(RationalMatrix.from_rows([[0, 1]])), Cochain.zero(1, 2, 1))


def _adjoint_presentation(example: MRBLieDerPair, example_adjoint: Representation) -> ExtensionPresentation:
    return ExtensionPresentation(example, semidirect_product(example, example_adjoint), canonical_section(2, 2))


# ---------------------------------------------------------------------------
# Build and extract
# ---------------------------------------------------------------------------

class TestBuildExtract:
    """Cocycles build valid extensions and are read back unchanged."""

    @pytest.mark.parametrize("fiber", [1, 2])
    def test_roundtrip(self, example: MRBLieDerPair, sampler: InstanceSampler, fiber: int) -> None:
        """``extract_cocycle(build_extension(t)) = t`` and the presentation checks out."""
        V = sampler.coefficient_space(fiber)
        t = sampler.cocycle_triple(example, V)
        x = build_extension(example, V, t)
        assert x.check().valid
        assert x.fiber_space() == V
        assert extract_cocycle(x) == t

    def test_section_shift_adds_coboundary(self, example: MRBLieDerPair, sampler: InstanceSampler) -> None:
        """Replacing ``s`` by ``s + 𝔥`` changes the extracted triple by ``𝔇¹(𝔥)``."""
        V = sampler.coefficient_space(1)
        t = sampler.cocycle_triple(example, V)
        h = sampler.matrix(1, 2)
        shifted = build_extension(example, V, t).with_section_shift(h)
        assert extract_cocycle(shifted) == t + coboundary_triple(example, V, h)

    def test_non_cocycle_rejected(self, example: MRBLieDerPair) -> None:
        """A triple with a nonzero coboundary raises NotCocycle with the defect."""
        with pytest.raises(NotCocycle) as excinfo:
            build_extension(example, CoefficientSpace.zero(1), _operator_only_triple())
        assert excinfo.value.defect is not None

    def test_forced_non_cocycle_is_invalid(self, example: MRBLieDerPair) -> None:
        """Assembling the same triple anyway gives a pair breaking the operator identity."""
        x = force_build(example, CoefficientSpace.zero(1), _operator_only_triple())
        assert Identity.MODIFIED_ROTA_BAXTER.value in validate_pair(x.total).violated_identities()

    def test_validity_iff_cocycle(self, example: MRBLieDerPair, sampler: InstanceSampler) -> None:
        """Twenty cocycles force-build valid pairs and twenty non-cocycles build invalid ones."""
        cocycles = non_cocycles = 0
        for _ in range(20):
            V = sampler.coefficient_space()
            rep = V.trivial_representation(example)
            t = sampler.cocycle_triple(example, V)
            assert is_cocycle(rep, ComplexKind.MRBLD, t.as_quad()).is_cocycle
            assert validate_pair(force_build(example, V, t).total).valid
            cocycles += 1
            bad = sampler.non_cocycle_triple(example, V)
            assert bad is not None
            assert not validate_pair(force_build(example, V, bad).total).valid
            non_cocycles += 1
        assert (cocycles, non_cocycles) == (20, 20)

    def test_cocycle_sampling_gives_up(self, abelian_zero: MRBLieDerPair, sampler: InstanceSampler) -> None:
        """With every coboundary zero no non-cocycle exists, so sampling returns None."""
        assert sampler.non_cocycle_triple(abelian_zero, CoefficientSpace.zero(1)) is None

    def test_non_commuting_coefficients_rejected(self, example: MRBLieDerPair) -> None:
        """``R_V`` and ``d_V`` must commute."""
        V = CoefficientSpace(2, RationalMatrix.from_rows([[0, 1], [0, 0]]), RationalMatrix.diagonal([1, 0]))
        with pytest.raises(InvalidRepresentation):
            build_extension(example, V, CocycleTriple.zero(2, 2))


# ---------------------------------------------------------------------------
# Presentations
# ---------------------------------------------------------------------------

class TestPresentation:
    """Structural checks, centrality and the induced representation."""

    def test_broken_section_reported(self, example: MRBLieDerPair) -> None:
        """A section with ``p∘s ≠ Id`` is a violation, not an exception."""
        x = build_extension(example, CoefficientSpace.zero(1), CocycleTriple.zero(2, 1))
        broken = ExtensionPresentation(x.base, x.total, RationalMatrix.zeros(3, 2))
        assert Identity.SECTION.value in broken.check().violated_identities()

    def test_semidirect_product_is_not_central(self, example: MRBLieDerPair, example_adjoint: Representation) -> None:
        """``A ⋉ A`` is a valid extension whose kernel is not central, so no cocycle is extracted."""
        x = _adjoint_presentation(example, example_adjoint)
        assert x.check().valid
        assert x.central_violations()
        with pytest.raises(InvalidExtension) as excinfo:
            extract_cocycle(x)
        assert Identity.KERNEL_CENTRAL.value in excinfo.value.report.violated_identities()

    def test_induced_representation_recovers_adjoint(self, example: MRBLieDerPair, example_adjoint: Representation) -> None:
        """``ρ(a)u = [s(a), u]`` on ``A ⋉ A`` is the adjoint action."""
        rep, report = induced_rep_from_section(_adjoint_presentation(example, example_adjoint))
        assert report.valid
        assert rep.rho == example_adjoint.rho
        assert (rep.RV, rep.dV) == (example.R, example.d)


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

class TestClassify:
    """Equivalent extensions come with a witness and a verified morphism."""

    def test_cohomologous_triples_are_equivalent(self, example: MRBLieDerPair, sampler: InstanceSampler) -> None:
        """``t + 𝔇¹(𝔥)`` and ``t``: the witness reproduces the difference and ``γ`` is a morphism."""
        V = sampler.coefficient_space(1)
        t = sampler.cocycle_triple(example, V)
        t1 = t + coboundary_triple(example, V, sampler.matrix(1, 2))
        verdict = classify(example, V, t1, t)
        assert verdict.equivalent
        assert verdict.morphism_report is not None and verdict.morphism_report.valid
        witness = RationalMatrix.from_rows([[parse_rational(x) for x in row] for row in verdict.witness or []])
        assert coboundary_triple(example, V, witness) == t1 - t

    def test_nonzero_class_on_abelian_zero(self, abelian_zero: MRBLieDerPair) -> None:
        """With all data zero ``B² = 0``, so a nonzero ``Θ`` is never equivalent to zero."""
        V = CoefficientSpace.zero(2)
        t = CocycleTriple(unit_cochain(2, 2, 2, 0), Cochain.zero(1, 2, 2), Cochain.zero(1, 2, 2))
        verdict = classify(abelian_zero, V, t, CocycleTriple.zero(2, 2))
        assert not verdict.equivalent
        assert verdict.witness is None

    def test_non_cocycle_rejected(self, example: MRBLieDerPair) -> None:
        """Both inputs must be cocycles."""
        with pytest.raises(NotCocycle):
            classify(example, CoefficientSpace.zero(1), _operator_only_triple(), CocycleTriple.zero(2, 1))
