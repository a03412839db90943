"""Pydantic models for input documents and the run configuration.

Documents reject unknown fields.  Rationals are exact: strings ``"p/q"`` or
``"p"`` and plain integers are accepted, floats are not.  Each document
converts to and from its domain object with ``to_domain`` / ``from_domain``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Annotated, Any, Sequence

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer, PlainValidator, model_validator

from .algebra import LieAlgebra, MRBLieDerPair, Representation
from .cochains import Cochain
from .constants import DEFAULT_PHI_CONVENTION, ComplexKind, OutputFormat, PhiConvention
from .deformation import DeformationJet, EquivalenceJet
from .exceptions import DocumentError
from .extension import CocycleTriple, CoefficientSpace
from .linalg import RationalMatrix, format_rational, parse_rational


def _rational(value: Any) -> Fraction:
    try:
        return parse_rational(value)
    except DocumentError as exc:
        # pydantic attaches the field location to ValueErrors
        raise ValueError(exc.detail) from exc


Rational = Annotated[Fraction, PlainValidator(_rational), PlainSerializer(format_rational, return_type=str)]
Matrix = list[list[Rational]]


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid")


def _matrix(rows: Matrix, shape: tuple[int, int], field: str) -> RationalMatrix:
    if len(rows) != shape[0] or any(len(row) != shape[1] for row in rows):
        raise DocumentError(field, f"expected a {shape[0]}x{shape[1]} matrix")
    return RationalMatrix.from_rows(rows, cols=shape[1])


def _rows(m: RationalMatrix) -> Matrix:
    return [list(m.row(i)) for i in range(m.rows)]


# ---------------------------------------------------------------------------
# Algebras and pairs
# ---------------------------------------------------------------------------

class BracketDocument(_Document):
    """``[e_i, e_j]`` for ``i < j`` as ``[coefficient, basis index]`` terms."""

    i: int = Field(ge=0)
    j: int = Field(ge=0)
    out: list[tuple[Rational, int]] = Field(default_factory=list)

    @model_validator(mode="after")
    def indices_increase(self) -> BracketDocument:
        if self.i >= self.j:
            raise ValueError(f"bracket ({self.i}, {self.j}) must have i < j")
        return self


class AlgebraDocument(_Document):
    dim: int = Field(ge=1)
    brackets: list[BracketDocument] = Field(default_factory=list)

    @model_validator(mode="after")
    def indices_in_range(self) -> AlgebraDocument:
        seen = set()
        for b in self.brackets:
            if b.j >= self.dim or any(not 0 <= k < self.dim for _, k in b.out):
                raise ValueError(f"bracket ({b.i}, {b.j}) refers to an index outside 0..{self.dim - 1}")
            if (b.i, b.j) in seen:
                raise ValueError(f"bracket ({b.i}, {b.j}) is given twice")
            seen.add((b.i, b.j))
        return self

    def to_domain(self) -> LieAlgebra:
        table = {}
        for b in self.brackets:
            vec = [Fraction(0)] * self.dim
            for coeff, k in b.out:
                vec[k] += coeff
            table[(b.i, b.j)] = vec
        return LieAlgebra.from_brackets(self.dim, table)

    @classmethod
    def from_domain(cls, alg: LieAlgebra) -> AlgebraDocument:
        brackets = []
        for i in range(alg.dim):
            for j in range(i + 1, alg.dim):
                out = [(c, k) for k, c in enumerate(alg.bracket_basis(i, j)) if c != 0]
                if out:
                    brackets.append(BracketDocument(i=i, j=j, out=out))
        return cls(dim=alg.dim, brackets=brackets)


class PairDocument(_Document):
    weight: Rational
    algebra: AlgebraDocument
    R: Matrix
    d: Matrix

    def to_domain(self) -> MRBLieDerPair:
        n = self.algebra.dim
        return MRBLieDerPair(self.algebra.to_domain(), self.weight, _matrix(self.R, (n, n), "R"), _matrix(self.d, (n, n), "d"))

    @classmethod
    def from_domain(cls, p: MRBLieDerPair) -> PairDocument:
        return cls(weight=p.weight, algebra=AlgebraDocument.from_domain(p.algebra), R=_rows(p.R), d=_rows(p.d))


class RepresentationDocument(PairDocument):
    dimV: int = Field(ge=1)
    rho: list[Matrix]
    RV: Matrix
    dV: Matrix

    def to_representation(self) -> Representation:
        p = self.to_domain()
        m = self.dimV
        if len(self.rho) != p.dim:
            raise DocumentError("rho", f"{len(self.rho)} matrices for an algebra of dim {p.dim}")
        rho = tuple(_matrix(r, (m, m), f"rho[{i}]") for i, r in enumerate(self.rho))
        return Representation(p, m, rho, _matrix(self.RV, (m, m), "RV"), _matrix(self.dV, (m, m), "dV"))

    @classmethod
    def from_representation(cls, r: Representation) -> RepresentationDocument:
        pair = PairDocument.from_domain(r.pair)
        return cls(
            **pair.model_dump(),
            dimV=r.dimV,
            rho=[_rows(m) for m in r.rho],
            RV=_rows(r.RV),
            dV=_rows(r.dV),
        )


def load_pair_or_representation(data: Any) -> MRBLieDerPair | Representation:
    """A representation document when it carries ``dimV``, otherwise a pair document."""
    if isinstance(data, dict) and "dimV" in data:
        return RepresentationDocument.model_validate(data).to_representation()
    return PairDocument.model_validate(data).to_domain()


# ---------------------------------------------------------------------------
# Cochains, jets, equivalences, extension data
# ---------------------------------------------------------------------------

class CochainDocument(_Document):
    degree: int = Field(ge=0)
    sourceDim: int = Field(ge=1)
    targetDim: int = Field(ge=1)
    values: dict[str, list[Rational]] = Field(default_factory=dict)

    def to_domain(self) -> Cochain:
        zero = [Fraction(0)] * self.targetDim
        known: dict[tuple[int, ...], Sequence[Fraction]] = {}
        for key, value in self.values.items():
            try:
                indices = tuple(int(k) for k in key.split(",")) if key else ()
            except ValueError as exc:
                raise DocumentError(f"values[{key!r}]", "keys are comma-joined basis indices") from exc
            if len(indices) != self.degree or list(indices) != sorted(set(indices)):
                raise DocumentError(f"values[{key!r}]", f"expected {self.degree} strictly increasing indices")
            if any(not 0 <= k < self.sourceDim for k in indices):
                raise DocumentError(f"values[{key!r}]", f"index outside 0..{self.sourceDim - 1}")
            if len(value) != self.targetDim:
                raise DocumentError(f"values[{key!r}]", f"expected {self.targetDim} coordinates")
            known[indices] = value
        return Cochain.tabulate(self.degree, self.sourceDim, self.targetDim, lambda I: tuple(known.get(I, zero)))

    @classmethod
    def from_domain(cls, f: Cochain) -> CochainDocument:
        return cls.model_validate(f.to_document())


class JetDocument(_Document):
    order: int = Field(ge=1)
    mu: list[CochainDocument]
    R: list[Matrix]
    d: list[Matrix]

    @model_validator(mode="after")
    def lengths_match_order(self) -> JetDocument:
        if not len(self.mu) == len(self.R) == len(self.d) == self.order:
            raise ValueError(f"mu, R and d must each have {self.order} terms")
        return self

    def to_domain(self, base: MRBLieDerPair) -> DeformationJet:
        n = base.dim
        return DeformationJet(
            base,
            tuple(m.to_domain() for m in self.mu),
            tuple(_matrix(m, (n, n), f"R[{k}]") for k, m in enumerate(self.R)),
            tuple(_matrix(m, (n, n), f"d[{k}]") for k, m in enumerate(self.d)),
        )

    @classmethod
    def from_domain(cls, j: DeformationJet) -> JetDocument:
        return cls(
            order=j.order,
            mu=[CochainDocument.from_domain(m) for m in j.mu],
            R=[_rows(m) for m in j.R],
            d=[_rows(m) for m in j.d],
        )


class EquivalenceDocument(_Document):
    psi: list[Matrix] = Field(min_length=1)

    def to_domain(self, dim: int) -> EquivalenceJet:
        return EquivalenceJet(tuple(_matrix(m, (dim, dim), f"psi[{k}]") for k, m in enumerate(self.psi)))


class CocycleTripleDocument(_Document):
    Theta: CochainDocument
    xi: CochainDocument
    chi: CochainDocument

    def to_domain(self) -> CocycleTriple:
        return CocycleTriple(self.Theta.to_domain(), self.xi.to_domain(), self.chi.to_domain())


class ModuleDocument(_Document):
    """Coefficient data ``(V, R_V, d_V)`` for an abelian extension."""

    dimV: int = Field(ge=1)
    RV: Matrix
    dV: Matrix

    def to_domain(self) -> CoefficientSpace:
        m = self.dimV
        return CoefficientSpace(m, _matrix(self.RV, (m, m), "RV"), _matrix(self.dV, (m, m), "dV"))


# ---------------------------------------------------------------------------
# Run configuration
# ---------------------------------------------------------------------------

class RunConfig(BaseModel):
    """Validated command-line options shared by every subcommand."""

    model_config = ConfigDict(extra="forbid")

    command: str
    inputs: list[str] = Field(default_factory=list)
    seed: int = Field(default=0, ge=0)
    trials: int = Field(default=5, ge=1)
    degree: int | None = Field(default=None, ge=0)
    order: int | None = Field(default=None, ge=1)
    complex: ComplexKind | None = None
    output_format: OutputFormat = OutputFormat.TEXT
    phi: PhiConvention = DEFAULT_PHI_CONVENTION
