"""Abelian extensions of a modified Rota-Baxter LieDer pair.

An extension of ``A`` by ``(V, R_V, d_V)`` is presented on ``A ⊕ V`` with
the ``A`` indices first.  Cocycle triples ``(Θ, ξ, χ)`` live in the
LieDer complex with coefficients in the trivial representation: ``ρ = 0``
while ``R_V`` and ``d_V`` are kept.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Any

from .algebra import (
    LieAlgebra,
    MRBLieDerPair,
    PairMorphism,
    Representation,
    validate_morphism,
    validate_pair,
    validate_representation,
)
from .cochains import Cochain, D_mRBLD, PhiLike, QuadCochain
from .cohomology import in_coboundaries, is_cocycle
from .constants import ComplexKind, Identity
from .exceptions import (
    DimensionMismatch,
    InvalidExtension,
    InvalidPair,
    InvalidRepresentation,
    NotCocycle,
)
from .linalg import RationalMatrix, Vector, is_zero_vector, sub_vectors, unit_vector, zero_vector
from .reports import ClassificationReport, ValidationReport, Violation, matrix_rows

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Cocycle triples and coefficient data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CocycleTriple:
    """``Θ: Λ²A → V``, ``ξ: A → V`` (operator part), ``χ: A → V`` (derivation part)."""

    Theta: Cochain
    xi: Cochain
    chi: Cochain

    def __post_init__(self) -> None:
        if (self.Theta.degree, self.xi.degree, self.chi.degree) != (2, 1, 1):
            raise DimensionMismatch("CocycleTriple", "expected degrees (2, 1, 1)")
        dims = {(c.source_dim, c.target_dim) for c in (self.Theta, self.xi, self.chi)}
        if len(dims) != 1:
            raise DimensionMismatch("CocycleTriple", f"source/target dims differ: {sorted(dims)}")

    @classmethod
    def zero(cls, n: int, m: int) -> CocycleTriple:
        return cls(Cochain.zero(2, n, m), Cochain.zero(1, n, m), Cochain.zero(1, n, m))

    @classmethod
    def from_quad(cls, q: QuadCochain) -> CocycleTriple:
        if q.degree != 2:
            raise DimensionMismatch("CocycleTriple.from_quad", f"degree {q.degree} quad, expected 2")
        theta, xi, chi, s = q.slots
        if not s.is_zero():
            raise DimensionMismatch("CocycleTriple.from_quad", "the last slot must vanish")
        return cls(theta, xi, chi)

    @property
    def source_dim(self) -> int:
        return self.Theta.source_dim

    @property
    def target_dim(self) -> int:
        return self.Theta.target_dim

    def as_quad(self) -> QuadCochain:
        return QuadCochain((self.Theta, self.xi, self.chi, Cochain.zero(0, self.source_dim, self.target_dim)))

    def __add__(self, other: CocycleTriple) -> CocycleTriple:
        return CocycleTriple(self.Theta + other.Theta, self.xi + other.xi, self.chi + other.chi)

    def __sub__(self, other: CocycleTriple) -> CocycleTriple:
        return CocycleTriple(self.Theta - other.Theta, self.xi - other.xi, self.chi - other.chi)

    def __neg__(self) -> CocycleTriple:
        return CocycleTriple(-self.Theta, -self.xi, -self.chi)

    def is_zero(self) -> bool:
        return self.Theta.is_zero() and self.xi.is_zero() and self.chi.is_zero()

    def to_document(self) -> dict[str, Any]:
        return {"Theta": self.Theta.to_document(), "xi": self.xi.to_document(), "chi": self.chi.to_document()}


@dataclass(frozen=True)
class CoefficientSpace:
    """``(V, R_V, d_V)`` with zero bracket."""

    dim: int
    RV: RationalMatrix
    dV: RationalMatrix

    def __post_init__(self) -> None:
        for name, m in (("RV", self.RV), ("dV", self.dV)):
            if m.shape != (self.dim, self.dim):
                raise DimensionMismatch("CoefficientSpace", f"{name} has shape {m.shape}, expected ({self.dim}, {self.dim})")

    @classmethod
    def zero(cls, m: int) -> CoefficientSpace:
        return cls(m, RationalMatrix.zeros(m, m), RationalMatrix.zeros(m, m))

    def trivial_representation(self, p: MRBLieDerPair) -> Representation:
        return Representation.trivial(p, self.RV, self.dV)


def _trivial_coefficients(p: MRBLieDerPair, V: CoefficientSpace, operation: str) -> Representation:
    rep = V.trivial_representation(p)
    try:
        report = validate_representation(rep)
    except InvalidPair as exc:
        raise InvalidRepresentation(operation, exc.report) from exc
    if not report.valid:
        raise InvalidRepresentation(operation, report)
    return rep


def coboundary_triple(p: MRBLieDerPair, V: CoefficientSpace, h: RationalMatrix, table: PhiLike = None) -> CocycleTriple:
    """``𝔇¹(𝔥)`` for ``𝔥: A → V`` given as an ``m × n`` matrix."""
    rep = V.trivial_representation(p)
    return CocycleTriple.from_quad(D_mRBLD(rep, QuadCochain((Cochain.from_matrix(h),)), table))


# ---------------------------------------------------------------------------
# Presentations
# ---------------------------------------------------------------------------

def canonical_section(n: int, m: int) -> RationalMatrix:
    """``s(a) = a + 0``."""
    return RationalMatrix.identity(n).vstack(RationalMatrix.zeros(m, n))


@dataclass(frozen=True)
class ExtensionPresentation:
    """A pair on ``A ⊕ V`` projecting onto ``base``, with a chosen section."""

    base: MRBLieDerPair
    total: MRBLieDerPair
    section: RationalMatrix

    def __post_init__(self) -> None:
        if self.total.dim < self.base.dim:
            raise DimensionMismatch("ExtensionPresentation", "total pair is smaller than the base")
        if self.total.weight != self.base.weight:
            raise DimensionMismatch("ExtensionPresentation", "total and base pairs have different weights")
        if self.section.shape != (self.total.dim, self.base.dim):
            raise DimensionMismatch(
                "ExtensionPresentation",
                f"section has shape {self.section.shape}, expected ({self.total.dim}, {self.base.dim})",
            )

    @property
    def base_dim(self) -> int:
        return self.base.dim

    @property
    def fiber_dim(self) -> int:
        return self.total.dim - self.base.dim

    @property
    def projection(self) -> RationalMatrix:
        n, m = self.base_dim, self.fiber_dim
        return RationalMatrix.identity(n).hstack(RationalMatrix.zeros(n, m))

    @property
    def inclusion(self) -> RationalMatrix:
        n, m = self.base_dim, self.fiber_dim
        return RationalMatrix.zeros(n, m).vstack(RationalMatrix.identity(m))

    def fiber_vector(self, k: int) -> Vector:
        return unit_vector(self.total.dim, self.base_dim + k)

    def fiber_part(self, x: Vector) -> Vector:
        return tuple(x[self.base_dim:])

    def fiber_space(self) -> CoefficientSpace:
        """``R_V`` and ``d_V`` read off the ``V`` blocks of the total operators."""
        n, m = self.base_dim, self.fiber_dim
        def block(M: RationalMatrix) -> RationalMatrix:
            return RationalMatrix.from_rows([M.row(n + i)[n:] for i in range(m)], m)

        return CoefficientSpace(m, block(self.total.R), block(self.total.d))

    def with_section_shift(self, h: RationalMatrix) -> ExtensionPresentation:
        """The same extension with section ``s + 𝔥``, ``𝔥: A → V`` as an ``m × n`` matrix."""
        if h.shape != (self.fiber_dim, self.base_dim):
            raise DimensionMismatch("with_section_shift", f"shift has shape {h.shape}, expected {(self.fiber_dim, self.base_dim)}")
        return ExtensionPresentation(self.base, self.total, self.section + self.inclusion @ h)

    def check(self) -> ValidationReport:
        """Structural invariants: total pair valid, ``V`` an abelian ideal stable under ``R̂, d̂``,
        projection a pair morphism and ``p∘s = Id``."""
        total = self.total
        report = validate_pair(total)
        report = ValidationReport(subject="extension", checked=report.checked, violations=report.violations)
        violations: list[Violation] = []
        n, m = self.base_dim, self.fiber_dim
        zero_base = zero_vector(n)
        for i in range(total.dim):
            for k in range(m):
                u = self.fiber_vector(k)
                value = total.bracket(total.algebra.basis(i), u)
                if i >= n and not is_zero_vector(value):
                    violations.append(Violation.of(Identity.KERNEL_ABELIAN, (i, n + k), value, zero_vector(total.dim)))
                elif i < n and tuple(value[:n]) != zero_base:
                    violations.append(Violation.of(Identity.KERNEL_IDEAL, (i, n + k), value[:n], zero_base))
        for identity, M in ((Identity.KERNEL_OPERATOR, total.R), (Identity.KERNEL_DERIVATION, total.d)):
            for k in range(m):
                head = tuple(M.column(n + k)[:n])
                if head != zero_base:
                    violations.append(Violation.of(identity, (n + k,), head, zero_base))
        ps = self.projection @ self.section
        identity_n = RationalMatrix.identity(n)
        for j in range(n):
            if ps.column(j) != identity_n.column(j):
                violations.append(Violation.of(Identity.SECTION, (j,), ps.column(j), identity_n.column(j)))
        checked = [
            Identity.KERNEL_IDEAL.value,
            Identity.KERNEL_ABELIAN.value,
            Identity.KERNEL_OPERATOR.value,
            Identity.KERNEL_DERIVATION.value,
            Identity.SECTION.value,
        ]
        report = report.merged(ValidationReport(subject="extension", checked=checked, violations=violations))
        if report.valid:
            base_report = validate_pair(self.base)
            if base_report.valid:
                report = report.merged(validate_morphism(PairMorphism(total, self.base, self.projection)))
            else:
                report = report.merged(base_report)
        return report

    def central_violations(self) -> list[Violation]:
        """Brackets ``[e_i, u]`` with a nonzero ``V`` component, i.e. a nontrivial induced action."""
        total, n = self.total, self.base_dim
        violations = []
        for i in range(n):
            for k in range(self.fiber_dim):
                value = self.fiber_part(total.bracket(total.algebra.basis(i), self.fiber_vector(k)))
                if not is_zero_vector(value):
                    violations.append(Violation.of(Identity.KERNEL_CENTRAL, (i, n + k), value, zero_vector(len(value))))
        return violations


# ---------------------------------------------------------------------------
# Build and extract
# ---------------------------------------------------------------------------

def force_build(p: MRBLieDerPair, V: CoefficientSpace, t: CocycleTriple) -> ExtensionPresentation:
    """Assemble ``([−,−]_Θ, R_ξ, d_χ)`` on ``A ⊕ V`` without checking anything."""
    n, m = p.dim, V.dim
    if (t.source_dim, t.target_dim) != (n, m):
        raise DimensionMismatch("force_build", f"triple maps dim {t.source_dim} to {t.target_dim}, expected {n} to {m}")
    total_dim = n + m
    brackets = {
        (i, j): p.algebra.bracket_basis(i, j) + t.Theta.value_at((i, j))
        for i, j in itertools.combinations(range(n), 2)
    }
    alg = LieAlgebra.from_brackets(total_dim, brackets)
    R = p.R.hstack(RationalMatrix.zeros(n, m)).vstack(t.xi.to_matrix().hstack(V.RV))
    d = p.d.hstack(RationalMatrix.zeros(n, m)).vstack(t.chi.to_matrix().hstack(V.dV))
    total = MRBLieDerPair(alg, p.weight, R, d)
    return ExtensionPresentation(p, total, canonical_section(n, m))


def build_extension(p: MRBLieDerPair, V: CoefficientSpace, t: CocycleTriple, table: PhiLike = None) -> ExtensionPresentation:
    """The extension defined by a 2-cocycle triple, with the canonical section.

    Raises:
        InvalidRepresentation: If ``p`` is invalid or ``R_V`` and ``d_V`` do not commute.
        NotCocycle: If ``t`` is not a cocycle; ``.defect`` holds its coboundary.
    """
    rep = _trivial_coefficients(p, V, "build_extension")
    verdict = is_cocycle(rep, ComplexKind.MRBLD, t.as_quad(), table)
    if not verdict.is_cocycle:
        raise NotCocycle("build_extension", verdict.defect)
    x = force_build(p, V, t)
    report = validate_pair(x.total)
    if not report.valid:
        raise InvalidPair("build_extension", report)
    logger.debug("built extension of dim %d + %d", p.dim, V.dim)
    return x


def _require_extension(x: ExtensionPresentation, operation: str, central: bool) -> None:
    report = x.check()
    if not report.valid:
        raise InvalidExtension(operation, report)
    if central:
        violations = x.central_violations()
        if violations:
            raise InvalidExtension(operation, ValidationReport(
                subject="extension",
                checked=[Identity.KERNEL_CENTRAL.value],
                violations=violations,
            ))


def extract_cocycle(x: ExtensionPresentation) -> CocycleTriple:
    """``Θ = [sa,sb] − s[a,b]``, ``ξ = R̂s − sR``, ``χ = d̂s − sd``, read in ``V``.

    Raises:
        InvalidExtension: If the presentation is invalid or ``V`` is not central.
    """
    _require_extension(x, "extract_cocycle", central=True)
    base, total, s = x.base, x.total, x.section
    n, m = x.base_dim, x.fiber_dim

    def theta(I: tuple[int, ...]) -> Vector:
        a, b = I
        lifted = total.bracket(s.column(a), s.column(b))
        return x.fiber_part(sub_vectors(lifted, s.apply(base.algebra.bracket_basis(a, b))))

    def defect(M: RationalMatrix, N: RationalMatrix) -> Cochain:
        diff = M @ s - s @ N
        return Cochain(1, n, m, tuple(x.fiber_part(diff.column(j)) for j in range(n)))

    return CocycleTriple(Cochain.tabulate(2, n, m, theta), defect(total.R, base.R), defect(total.d, base.d))


def induced_rep_from_section(x: ExtensionPresentation) -> tuple[Representation, ValidationReport]:
    """``ρ(a)u = [s(a), u]`` with ``R_V``, ``d_V`` restricted from the total operators, and its validation.

    Raises:
        InvalidExtension: If the presentation is invalid.
    """
    _require_extension(x, "induced_rep_from_section", central=False)
    total, s = x.total, x.section
    m = x.fiber_dim
    rho = tuple(
        RationalMatrix.from_columns(
            [x.fiber_part(total.bracket(s.column(i), x.fiber_vector(k))) for k in range(m)],
            m,
        )
        for i in range(x.base_dim)
    )
    V = x.fiber_space()
    rep = Representation(x.base, m, rho, V.RV, V.dV)
    return rep, validate_representation(rep)


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

def classify(
    p: MRBLieDerPair,
    V: CoefficientSpace,
    t1: CocycleTriple,
    t2: CocycleTriple,
    table: PhiLike = None,
) -> ClassificationReport:
    """Decide whether the extensions of ``t1`` and ``t2`` are equivalent.

    On success the witness ``𝔥`` satisfies ``t1 − t2 = 𝔇¹(𝔥)`` and
    ``γ(a + u) = a + 𝔥(a) + u`` is verified as a pair morphism from the
    first extension to the second.

    Raises:
        NotCocycle: If either triple is not a cocycle.
    """
    rep = _trivial_coefficients(p, V, "classify")
    for t in (t1, t2):
        verdict = is_cocycle(rep, ComplexKind.MRBLD, t.as_quad(), table)
        if not verdict.is_cocycle:
            raise NotCocycle("classify", verdict.defect)
    witness = in_coboundaries(rep, ComplexKind.MRBLD, (t1 - t2).as_quad(), table)
    if witness is None:
        return ClassificationReport(equivalent=False)
    n, m = p.dim, V.dim
    h = Cochain.from_coordinates(1, n, m, witness).to_matrix()
    gamma = RationalMatrix.identity(n).hstack(RationalMatrix.zeros(n, m)).vstack(h.hstack(RationalMatrix.identity(m)))
    source = force_build(p, V, t1).total
    target = force_build(p, V, t2).total
    return ClassificationReport(
        equivalent=True,
        witness=matrix_rows(h),
        morphism=matrix_rows(gamma),
        morphism_report=validate_morphism(PairMorphism(source, target, gamma)),
    )
