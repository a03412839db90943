"""Tests for the pydantic input documents and the run configuration.

Covers: exact rationals, forbidden extra fields, bracket index rules,
pair/representation conversion, cochain keys, jets and RunConfig bounds.
"""

from __future__ import annotations

from fractions import Fraction

import pytest
from pydantic import ValidationError

from mrbld_cohomology.algebra import MRBLieDerPair, Representation
from mrbld_cohomology.cochains import Cochain
from mrbld_cohomology.commands._helpers import read_json
from mrbld_cohomology.constants import ComplexKind, PhiConvention
from mrbld_cohomology.exceptions import DocumentError
from mrbld_cohomology.models import (
    CochainDocument,
    JetDocument,
    ModuleDocument,
    PairDocument,
    RepresentationDocument,
    RunConfig,
    load_pair_or_representation,
)
from mrbld_cohomology.samples import InstanceSampler


def _pair_data(**overrides: object) -> dict[str, object]:
    data: dict[str, object] = {
        "weight": "-1",
        "algebra": {"dim": 2, "brackets": [{"i": 0, "j": 1, "out": [["1", 1]]}]},
        "R": [["2", "0"], ["0", "1"]],
        "d": [["0", "0"], ["0", "3"]],
    }
    data.update(overrides)
    return data


# ---------------------------------------------------------------------------
# Pairs and representations
# ---------------------------------------------------------------------------

class TestPairDocument:
    """Parsing and conversion of pair documents."""

    def test_parses_example(self, example: MRBLieDerPair) -> None:
        """The literal example document is the example pair."""
        assert PairDocument.model_validate(_pair_data()).to_domain() == example

    def test_round_trip_through_domain(self, example: MRBLieDerPair) -> None:
        """``from_domain`` then ``to_domain`` returns the same pair."""
        assert PairDocument.from_domain(example).to_domain() == example

    def test_rationals_serialise_as_strings(self, example: MRBLieDerPair) -> None:
        """Dumped documents hold rational strings, never floats."""
        dumped = PairDocument.from_domain(example).model_dump(mode="json")
        assert dumped["weight"] == "-1"
        assert dumped["R"] == [["2", "0"], ["0", "1"]]

    def test_fractional_weight(self) -> None:
        """``"p/q"`` literals parse exactly."""
        doc = PairDocument.model_validate(_pair_data(weight="-3/6"))
        assert doc.weight == Fraction(-1, 2)

    def test_float_rejected(self) -> None:
        """A float weight is a validation error naming the field."""
        with pytest.raises(ValidationError) as excinfo:
            PairDocument.model_validate(_pair_data(weight=-1.0))
        assert excinfo.value.errors()[0]["loc"] == ("weight",)

    def test_extra_field_forbidden(self) -> None:
        """Unknown keys are rejected."""
        with pytest.raises(ValidationError):
            PairDocument.model_validate(_pair_data(comment="hi"))

    def test_bracket_indices_must_increase(self) -> None:
        """``[e_j, e_i]`` with ``i > j`` is not a valid table entry."""
        with pytest.raises(ValidationError):
            PairDocument.model_validate(_pair_data(algebra={"dim": 2, "brackets": [{"i": 1, "j": 0, "out": []}]}))

    def test_bracket_index_in_range(self) -> None:
        """Output indices must be basis indices."""
        with pytest.raises(ValidationError):
            PairDocument.model_validate(_pair_data(algebra={"dim": 2, "brackets": [{"i": 0, "j": 1, "out": [["1", 2]]}]}))

    def test_wrong_matrix_shape(self) -> None:
        """A 1×2 operator on a 2-dim algebra raises DocumentError naming ``R``."""
        doc = PairDocument.model_validate(_pair_data(R=[["1", "0"]]))
        with pytest.raises(DocumentError, match="invalid R"):
            doc.to_domain()


class TestLoadPairOrRepresentation:
    """The presence of ``dimV`` decides the document kind."""

    def test_pair_document(self, example: MRBLieDerPair) -> None:
        """No ``dimV``: a pair."""
        assert load_pair_or_representation(_pair_data()) == example

    def test_shipped_adjoint_document(self, example_adjoint: Representation) -> None:
        """The shipped adjoint document is the adjoint of the example."""
        assert load_pair_or_representation(read_json("data:example_adjoint")) == example_adjoint

    def test_representation_round_trip(self, example_adjoint: Representation) -> None:
        """``from_representation`` then ``to_representation`` is the identity."""
        doc = RepresentationDocument.from_representation(example_adjoint)
        assert doc.to_representation() == example_adjoint

    def test_rho_count_checked(self) -> None:
        """One action matrix per basis vector."""
        data = _pair_data(dimV=1, rho=[[["0"]]], RV=[["0"]], dV=[["0"]])
        with pytest.raises(DocumentError, match="rho"):
            load_pair_or_representation(data)


# ---------------------------------------------------------------------------
# Cochains, jets and modules
# ---------------------------------------------------------------------------

class TestCochainDocument:
    """Comma-joined keys name increasing index tuples."""

    def test_missing_keys_are_zero(self) -> None:
        """Omitted tuples evaluate to zero."""
        f = CochainDocument.model_validate({"degree": 1, "sourceDim": 2, "targetDim": 1, "values": {"1": ["5"]}}).to_domain()
        assert f.values == ((0,), (5,))

    def test_round_trip(self, sampler: InstanceSampler) -> None:
        """``from_domain`` keeps every nonzero value."""
        f = sampler.cochain(2, 3, 2)
        assert CochainDocument.from_domain(f).to_domain() == f

    def test_zero_cochain_document(self) -> None:
        """A zero cochain serialises with no values."""
        assert CochainDocument.from_domain(Cochain.zero(2, 2, 2)).values == {}

    @pytest.mark.parametrize("key", ["1,0", "0,0", "0", "0,5", "a,b"])
    def test_bad_keys(self, key: str) -> None:
        """Keys must be ``degree`` strictly increasing indices inside the algebra."""
        doc = CochainDocument.model_validate({"degree": 2, "sourceDim": 3, "targetDim": 1, "values": {key: ["1"]}})
        with pytest.raises(DocumentError):
            doc.to_domain()


class TestJetAndModule:
    """Jets, equivalences and coefficient modules."""

    def test_shipped_zero_jet(self, example: MRBLieDerPair) -> None:
        """The shipped order-one jet is zero."""
        jet = JetDocument.model_validate(read_json("data:zero_jet")).to_domain(example)
        assert jet.order == 1
        assert jet.mu[0].is_zero()

    def test_jet_term_count_matches_order(self) -> None:
        """``order`` must equal the number of terms."""
        data = read_json("data:zero_jet")
        data["order"] = 2
        with pytest.raises(ValidationError):
            JetDocument.model_validate(data)

    def test_module(self) -> None:
        """The shipped module is the 1-dim zero module."""
        V = ModuleDocument.model_validate(read_json("data:trivial_module")).to_domain()
        assert V.dim == 1
        assert V.RV.is_zero() and V.dV.is_zero()


# ---------------------------------------------------------------------------
# Run configuration
# ---------------------------------------------------------------------------

class TestRunConfig:
    """Bounds on shared command-line options."""

    def test_defaults(self) -> None:
        """Seed 0, five trials, text output and the corrected φ."""
        cfg = RunConfig(command="verify")
        assert (cfg.seed, cfg.trials, cfg.phi) == (0, 5, PhiConvention.CORRECTED)

    @pytest.mark.parametrize("field, value", [("seed", -1), ("trials", 0), ("order", 0), ("degree", -1)])
    def test_out_of_range(self, field: str, value: int) -> None:
        """Negative seeds, zero trials and similar are rejected."""
        with pytest.raises(ValidationError):
            RunConfig(command="verify", **{field: value})

    def test_complex_coerced(self) -> None:
        """Complex names become ComplexKind members."""
        assert RunConfig(command="cohomology", complex="ce").complex is ComplexKind.CE

    def test_missing_document_raises(self) -> None:
        """An unknown shipped document is a DocumentError."""
        with pytest.raises(DocumentError):
            read_json("data:no_such_document")
