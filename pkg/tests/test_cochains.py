"""Tests for alternating cochains and the coboundary operators.

Covers: storage and alternating evaluation, δ_CE against a term-by-term
recomputation, δ_mRBO against the induced route, φ against a naive
subset enumeration, Δ, the combined complexes, the chain-map checker and
φ calibration.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from mrbld_cohomology.algebra import MRBLieDerPair, Representation, direct_sum
from mrbld_cohomology.cochains import (
    Cochain,
    D_mRBLD,
    Delta,
    PairCochain,
    PhiTable,
    QuadCochain,
    calibrate_phi,
    delta_CE,
    delta_mRBO,
    delta_mRBO_induced,
    partial_mRBLA,
    phi,
    sort_with_sign,
    verify_chain_maps,
)
from mrbld_cohomology.constants import PhiConvention
from mrbld_cohomology.exceptions import DegreeOutOfRange, DimensionMismatch
from mrbld_cohomology.linalg import RationalMatrix, add_vectors, scale_vector, zero_vector
from mrbld_cohomology.samples import FAMILIES, InstanceSampler, heisenberg_pair, sl2_pair


def _identity_cochain(n: int) -> Cochain:
    return Cochain.from_matrix(RationalMatrix.identity(n))


def _naive_phi(r: Representation, f: Cochain, table: PhiTable) -> Cochain:
    """φ by enumerating every subset of bare positions at every argument tuple."""
    n = f.degree
    R, RV = r.pair.R, r.RV
    alg = r.algebra

    def value(I: tuple[int, ...]) -> tuple[Fraction, ...]:
        acc = zero_vector(r.dimV)
        for bare in itertools.product((False, True), repeat=n):
            args = [alg.basis(i) if b else R.column(i) for i, b in zip(I, bare)]
            v = f.evaluate(args)
            k = sum(bare)
            if k == 0:
                acc = add_vectors(acc, v)
                continue
            rv, plain = table.coefficient(n, k)
            acc = add_vectors(acc, add_vectors(scale_vector(rv, RV.apply(v)), scale_vector(plain, v)))
        return acc

    return Cochain.tabulate(n, f.source_dim, f.target_dim, value)


def _naive_delta(r: Representation, f: Cochain) -> Cochain:
    """Δ straight from its definition at every argument tuple."""
    d = r.pair.d
    alg = r.algebra

    def value(I: tuple[int, ...]) -> tuple[Fraction, ...]:
        acc = scale_vector(-1, r.dV.apply(f.value_at(I)))
        for k in range(len(I)):
            args = [d.column(i) if pos == k else alg.basis(i) for pos, i in enumerate(I)]
            acc = add_vectors(acc, f.evaluate(args))
        return acc

    return Cochain.tabulate(f.degree, f.source_dim, f.target_dim, value)


# ---------------------------------------------------------------------------
# Storage
# ---------------------------------------------------------------------------

class TestCochain:
    """Alternating storage over increasing index tuples."""

    def test_sort_with_sign(self) -> None:
        """Transpositions flip the sign; repeated indices give 0."""
        assert sort_with_sign([2, 0, 1]) == (1, (0, 1, 2))
        assert sort_with_sign([1, 0]) == (-1, (0, 1))
        assert sort_with_sign([1, 1]) == (0, ())

    def test_evaluation_is_alternating(self, sampler: InstanceSampler) -> None:
        """Swapping two arguments negates; repeating one gives zero."""
        f = sampler.cochain(2, 3, 2)
        assert f.value_at((2, 0)) == scale_vector(-1, f.value_at((0, 2)))
        assert f.value_at((1, 1)) == (0, 0)

    def test_evaluate_expands_multilinearly(self, sampler: InstanceSampler) -> None:
        """``f(e₁ + e₂, e₃) = f(e₁, e₃) + f(e₂, e₃)``."""
        f = sampler.cochain(2, 3, 1)
        one = Fraction(1)
        zero = Fraction(0)
        lhs = f.evaluate([(one, one, zero), (zero, zero, one)])
        assert lhs == add_vectors(f.value_at((0, 2)), f.value_at((1, 2)))

    def test_wrong_value_count_raises(self) -> None:
        """A degree-2 cochain on dim 3 needs exactly three values."""
        with pytest.raises(DimensionMismatch):
            Cochain(2, 3, 1, ((Fraction(0),),))

    def test_document_omits_zero_values(self) -> None:
        """Only nonzero values appear, keyed by comma-joined indices."""
        f = Cochain.from_coordinates(2, 3, 1, (Fraction(0), Fraction(1, 2), Fraction(0)))
        assert f.to_document() == {"degree": 2, "sourceDim": 3, "targetDim": 1, "values": {"0,2": ["1/2"]}}

    def test_quad_slot_degrees_checked(self) -> None:
        """A degree-2 quad needs slots of degrees (2, 1, 1, 0)."""
        with pytest.raises(DimensionMismatch):
            QuadCochain((Cochain.zero(2, 2, 1), Cochain.zero(1, 2, 1), Cochain.zero(1, 2, 1), Cochain.zero(1, 2, 1)))


# ---------------------------------------------------------------------------
# Coboundaries
# ---------------------------------------------------------------------------

class TestDeltaCE:
    """Chevalley-Eilenberg coboundary."""

    def test_identity_on_example(self, example_adjoint: Representation) -> None:
        """``δ Id(e₁,e₂) = [e₁,e₂] − [e₂,e₁] − [e₁,e₂] = e₂``."""
        assert delta_CE(example_adjoint, _identity_cochain(2)).value_at((0, 1)) == (0, 1)

    def test_zero_data_kills_everything(self, zero_adjoint: Representation, sampler: InstanceSampler) -> None:
        """Abelian algebra with ρ = 0: every term carries ρ or a bracket."""
        for n in range(3):
            assert delta_CE(zero_adjoint, sampler.cochain(n, 2, 2)).is_zero()

    def test_squares_to_zero(self, sampler: InstanceSampler) -> None:
        """``δ_CE∘δ_CE = 0`` on sampled representations, degrees 0 to 3."""
        for _ in range(3):
            r = sampler.representation()
            for n in range(4):
                f = sampler.cochain(n, r.pair.dim, r.dimV)
                assert delta_CE(r, delta_CE(r, f)).is_zero()

    def test_mismatched_cochain_raises(self, example_adjoint: Representation) -> None:
        """A cochain on the wrong source dimension is rejected."""
        with pytest.raises(DimensionMismatch):
            delta_CE(example_adjoint, Cochain.zero(1, 3, 2))


class TestDeltaMRBO:
    """Operator coboundary and its induced route."""

    def test_matches_induced_route(self, sampler: InstanceSampler) -> None:
        """The term-by-term formula equals δ_CE over the induced bracket and action."""
        for _ in range(3):
            r = sampler.representation()
            for n in range(4):
                f = sampler.cochain(n, r.pair.dim, r.dimV)
                assert delta_mRBO(r, f) == delta_mRBO_induced(r, f)

    def test_squares_to_zero(self, example_adjoint: Representation, sampler: InstanceSampler) -> None:
        """``δ_mRBO∘δ_mRBO = 0`` on the example, degrees 0 to 2."""
        for n in range(3):
            f = sampler.cochain(n, 2, 2)
            assert delta_mRBO(example_adjoint, delta_mRBO(example_adjoint, f)).is_zero()

    def test_zero_operators(self, abelian_zero: MRBLieDerPair, sampler: InstanceSampler) -> None:
        """``R = R_V = 0`` forces ``δ_mRBO = 0``."""
        r = Representation.trivial(abelian_zero, RationalMatrix.zeros(1, 1), RationalMatrix.zeros(1, 1))
        assert delta_mRBO(r, sampler.cochain(1, 2, 1)).is_zero()


@pytest.mark.slow
class TestCoboundariesAcrossFamilies:
    """δ_CE² = 0, δ_mRBO² = 0 and the induced route over every pair family.

    Each family contributes a conjugated pair with its adjoint representation
    and an adjoint ⊕ trivial sum; 50 cochains per degree, degrees 0 to 3.
    """

    COCHAINS = 50

    @pytest.fixture(params=FAMILIES)
    def representations(self, request: pytest.FixtureRequest) -> list[Representation]:
        sampler = InstanceSampler(FAMILIES.index(request.param) + 11)
        p = sampler.pair(request.param)
        adjoint = Representation.adjoint(p)
        return [adjoint, direct_sum(adjoint, sampler.coefficient_space().trivial_representation(p))]

    @pytest.mark.parametrize("degree", [0, 1, 2, 3])
    def test_coboundaries_square_to_zero(self, representations: list[Representation], degree: int) -> None:
        """Both coboundaries square to zero and δ_mRBO agrees with δ_CE on the induced data."""
        sampler = InstanceSampler(degree)
        checked = 0
        for r in representations:
            for _ in range(self.COCHAINS):
                f = sampler.cochain(degree, r.pair.dim, r.dimV)
                assert delta_CE(r, delta_CE(r, f)).is_zero()
                assert delta_mRBO(r, delta_mRBO(r, f)).is_zero()
                assert delta_mRBO(r, f) == delta_mRBO_induced(r, f)
                checked += 1
        assert checked == 2 * self.COCHAINS


class TestPhi:
    """φ and its coefficient tables."""

    def test_degree_one_is_f_R_minus_RV_f(self, example_adjoint: Representation) -> None:
        """``φ¹(Id) = R − R_V = 0`` on the adjoint representation."""
        assert phi(example_adjoint, _identity_cochain(2)).is_zero()

    def test_degree_zero_is_identity(self, example_adjoint: Representation) -> None:
        """``φ⁰`` leaves a vector of ``V`` unchanged."""
        f = Cochain.constant(2, (Fraction(1), Fraction(2)))
        assert phi(example_adjoint, f) == f

    @pytest.mark.parametrize("convention", list(PhiConvention))
    def test_matches_subset_enumeration(self, example_adjoint: Representation, convention: PhiConvention) -> None:
        """φ² and φ³ agree with a naive enumeration of bare-argument subsets."""
        rng = random.Random(3)
        for rep in (example_adjoint, Representation.adjoint(heisenberg_pair())):
            table = PhiTable(rep.weight, convention)
            for n in range(2, rep.pair.dim + 1):
                f = Cochain.random(rng, n, rep.pair.dim, rep.dimV)
                assert phi(rep, f, table) == _naive_phi(rep, f, table)

    def test_conventions_differ_on_even_counts(self) -> None:
        """At λ = −1 and two bare arguments: verbatim ``(−1, 0)``, corrected ``(0, 1)``."""
        assert PhiTable.verbatim(-1).coefficient(2, 2) == (-1, 0)
        assert PhiTable.corrected(-1).coefficient(2, 2) == (0, 1)

    def test_calibrated_table_needs_entries(self) -> None:
        """A table with no convention only answers for solved entries."""
        table = PhiTable(Fraction(-1), None, {(1, 1): (Fraction(-1), Fraction(0))})
        assert table.name == "calibrated"
        with pytest.raises(DegreeOutOfRange):
            table.coefficient(2, 1)


class TestDelta:
    """The derivation part Δ."""

    def test_identity_gives_d_minus_dV(self, example_adjoint: Representation) -> None:
        """``Δ(Id) = d − d_V = 0`` on the adjoint representation."""
        assert Delta(example_adjoint, _identity_cochain(2)).is_zero()

    def test_degree_zero(self, example_adjoint: Representation) -> None:
        """``Δ⁰(u) = −d_V u``."""
        u = Cochain.constant(2, (Fraction(1), Fraction(1)))
        assert Delta(example_adjoint, u).values[0] == (0, -3)

    def test_matches_definition(self, sampler: InstanceSampler) -> None:
        """Random degree-2 cochains agree with the definition evaluated directly."""
        r = Representation.adjoint(sl2_pair(1, 2))
        f = sampler.cochain(2, 3, 3)
        assert Delta(r, f) == _naive_delta(r, f)


# ---------------------------------------------------------------------------
# Combined complexes
# ---------------------------------------------------------------------------

class TestComplexes:
    """∂_mRBLA and 𝔇_mRBLD are assembled from their parts and square to zero."""

    def test_partial_components(self, example_adjoint: Representation, sampler: InstanceSampler) -> None:
        """``∂(f, g) = (δ_CE f, −δ_mRBO g − φ f)``."""
        f, g = sampler.cochain(2, 2, 2), sampler.cochain(1, 2, 2)
        out = partial_mRBLA(example_adjoint, PairCochain(f, g))
        assert out.f == delta_CE(example_adjoint, f)
        assert out.g == -delta_mRBO(example_adjoint, g) - phi(example_adjoint, f)

    def test_pair_needs_consecutive_degrees(self) -> None:
        """A pair cochain holds slots of degrees ``n`` and ``n − 1``."""
        with pytest.raises(DimensionMismatch):
            PairCochain(Cochain.zero(0, 2, 2), Cochain.zero(0, 2, 2))

    def test_degree_one_quad(self, example_adjoint: Representation) -> None:
        """``𝔇¹(Id) = (δ_CE Id, 0, 0, 0)`` on the example."""
        out = D_mRBLD(example_adjoint, QuadCochain((_identity_cochain(2),)))
        assert out.f == delta_CE(example_adjoint, _identity_cochain(2))
        assert all(slot.is_zero() for slot in out.slots[1:])

    def test_degree_two_quad_formula(self, example_adjoint: Representation, sampler: InstanceSampler) -> None:
        """At degree 2 the bottom pair gets ``+Δ`` of the top pair."""
        q = QuadCochain((
            sampler.cochain(2, 2, 2),
            sampler.cochain(1, 2, 2),
            sampler.cochain(1, 2, 2),
            sampler.cochain(0, 2, 2),
        ))
        out = D_mRBLD(example_adjoint, q)
        top = partial_mRBLA(example_adjoint, q.fg)
        bottom = partial_mRBLA(example_adjoint, q.hs)
        assert out.fg == top
        assert out.slots[2] == bottom.f + Delta(example_adjoint, q.slots[0])
        assert out.slots[3] == bottom.g + Delta(example_adjoint, q.slots[1])

    @pytest.mark.parametrize("kind", ["adjoint", "trivial", "sum"])
    @pytest.mark.parametrize("family", FAMILIES)
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_squares_to_zero(self, sampler: InstanceSampler, family: str, kind: str, n: int) -> None:
        """``∂² = 0`` and ``𝔇² = 0`` with the default φ on adjoint, trivial and summed coefficients."""
        p = sampler.pair(family)
        trivial = sampler.coefficient_space().trivial_representation(p)
        r = {
            "adjoint": Representation.adjoint(p),
            "trivial": trivial,
            "sum": direct_sum(Representation.adjoint(p), trivial),
        }[kind]
        n_a, m = r.pair.dim, r.dimV
        pc = PairCochain(sampler.cochain(n, n_a, m), sampler.cochain(n - 1, n_a, m))
        assert partial_mRBLA(r, partial_mRBLA(r, pc)).is_zero()
        if n == 1:
            q = QuadCochain((sampler.cochain(1, n_a, m),))
        else:
            q = QuadCochain((
                sampler.cochain(n, n_a, m),
                sampler.cochain(n - 1, n_a, m),
                sampler.cochain(n - 1, n_a, m),
                sampler.cochain(n - 2, n_a, m),
            ))
        assert D_mRBLD(r, D_mRBLD(r, q)).is_zero()


# ---------------------------------------------------------------------------
# Identity checks and calibration
# ---------------------------------------------------------------------------

class TestChainMaps:
    """verify_chain_maps and calibrate_phi."""

    @pytest.mark.parametrize("degree", [0, 1, 2])
    def test_all_identities_hold_on_example(self, example_adjoint: Representation, degree: int) -> None:
        """φ intertwines the coboundaries and Δ commutes with every operator."""
        report = verify_chain_maps(example_adjoint, degree, trials=3, seed=1)
        assert report.all_hold
        assert report.phi == "corrected"

    def test_verbatim_table_breaks_intertwining(self) -> None:
        """With verbatim coefficients φ²∘δ_CE ≠ δ_mRBO∘φ¹ on sl₂."""
        r = Representation.adjoint(sl2_pair())
        report = verify_chain_maps(r, 1, trials=5, seed=0, table=PhiConvention.VERBATIM)
        checks = {c.identity: c for c in report.checks}
        assert not checks["phi_intertwines_coboundaries"].holds
        assert checks["phi_intertwines_coboundaries"].counterexample is not None

    def test_negative_degree_raises(self, example_adjoint: Representation) -> None:
        """Degrees start at 0."""
        with pytest.raises(DegreeOutOfRange):
            verify_chain_maps(example_adjoint, -1)

    @pytest.mark.slow
    def test_calibration_solves_corrected_table(self, example_adjoint: Representation) -> None:
        """Weight −1 instances pin the corrected coefficients and reject the verbatim ones."""
        extra = [Representation.adjoint(sl2_pair()), Representation.adjoint(heisenberg_pair())]
        table, report = calibrate_phi(example_adjoint, 3, extra=extra, seed=0)
        assert table is not None
        corrected = PhiTable.corrected(-1)
        for n in range(1, 4):
            for k in range(1, n + 1):
                assert table.coefficient(n, k) == corrected.coefficient(n, k)
        assert report.consistent
        assert not report.verbatim_consistent
        mismatched = {(row.degree, row.bare_count) for row in report.rows if not row.matches_verbatim}
        assert mismatched == {(2, 2), (3, 2)}

    def test_calibration_rejects_mixed_weights(self, example_adjoint: Representation, zero_adjoint: Representation) -> None:
        """All calibration instances must share one weight."""
        with pytest.raises(DimensionMismatch):
            calibrate_phi(example_adjoint, 2, extra=[zero_adjoint])
