"""Lie algebras, modified Rota-Baxter LieDer pairs, representations and morphisms.

All objects are immutable value types over exact rationals.  Validators
never raise on invalid data: they return a ``ValidationReport`` listing the
identity, the basis indices and both sides of every failed instance.
Constructors that need valid input raise ``InvalidPair`` /
``InvalidRepresentation`` carrying that report.

Conventions: basis indices are 0-based; a matrix acts on column vectors,
so column ``j`` of ``R`` is ``R(e_j)``.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .constants import Identity, TransformMode
from .exceptions import DimensionMismatch, InvalidPair, InvalidRepresentation, NotRotaBaxter
from .linalg import (
    ZERO,
    RationalMatrix,
    Vector,
    add_vectors,
    block_diagonal,
    commutator,
    format_rational,
    inverse,
    is_zero_vector,
    scale_vector,
    unit_vector,
    zero_vector,
)
from .reports import TransformReport, ValidationReport, Violation

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Lie algebra
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LieAlgebra:
    """Structure constants ``c[i][j]`` = coordinates of ``[e_i, e_j]``."""

    dim: int
    constants: tuple[tuple[Vector, ...], ...]

    def __post_init__(self) -> None:
        if len(self.constants) != self.dim or any(len(row) != self.dim for row in self.constants):
            raise DimensionMismatch("LieAlgebra", f"structure constants are not {self.dim}x{self.dim}")
        if any(len(vec) != self.dim for row in self.constants for vec in row):
            raise DimensionMismatch("LieAlgebra", f"bracket vectors must have length {self.dim}")

    @classmethod
    def from_brackets(cls, dim: int, brackets: Mapping[tuple[int, int], Sequence[Fraction | int]]) -> LieAlgebra:
        """Build from ``{(i, j): [e_i, e_j]}`` for ``i < j``; the rest follows by antisymmetry."""
        table = [[zero_vector(dim) for _ in range(dim)] for _ in range(dim)]
        for (i, j), value in brackets.items():
            if not 0 <= i < j < dim:
                raise DimensionMismatch("LieAlgebra.from_brackets", f"bracket index pair ({i}, {j}) must satisfy 0 <= i < j < {dim}")
            vec = tuple(Fraction(x) for x in value)
            if len(vec) != dim:
                raise DimensionMismatch("LieAlgebra.from_brackets", f"bracket ({i}, {j}) has length {len(vec)}")
            table[i][j] = vec
            table[j][i] = scale_vector(-1, vec)
        return cls(dim, tuple(tuple(row) for row in table))

    @classmethod
    def abelian(cls, dim: int) -> LieAlgebra:
        return cls.from_brackets(dim, {})

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self.constants[i][j]

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        """``[x, y]`` for coordinate vectors, expanded bilinearly."""
        out = [ZERO] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                coeff = xi * yj
                for k, c in enumerate(self.constants[i][j]):
                    if c != 0:
                        out[k] += coeff * c
        return tuple(out)

    def ad(self, x: Sequence[Fraction]) -> RationalMatrix:
        """Matrix of ``ad_x = [x, -]``."""
        return RationalMatrix.from_columns([self.bracket(x, unit_vector(self.dim, j)) for j in range(self.dim)], self.dim)

    def basis(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    def is_abelian(self) -> bool:
        return all(is_zero_vector(v) for row in self.constants for v in row)

    def transport(self, g: RationalMatrix) -> LieAlgebra:
        """Structure constants in the basis ``e'_i = g(e_i)``."""
        g_inv = inverse(g)
        cols = g.columns()
        table = [[g_inv.apply(self.bracket(cols[i], cols[j])) for j in range(self.dim)] for i in range(self.dim)]
        return LieAlgebra(self.dim, tuple(tuple(row) for row in table))


def validate_lie(alg: LieAlgebra) -> ValidationReport:
    """Check antisymmetry and the Jacobi identity directly on structure constants."""
    violations: list[Violation] = []
    n = alg.dim
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                lhs = alg.constants[i][j][k]
                rhs = -alg.constants[j][i][k]
                if lhs != rhs:
                    violations.append(Violation.of(Identity.ANTISYMMETRY, (i, j, k), (lhs,), (rhs,)))
    for i, j, k in itertools.combinations(range(n), 3):
        e_i, e_j, e_k = alg.basis(i), alg.basis(j), alg.basis(k)
        total = add_vectors(
            add_vectors(alg.bracket(alg.bracket(e_i, e_j), e_k), alg.bracket(alg.bracket(e_j, e_k), e_i)),
            alg.bracket(alg.bracket(e_k, e_i), e_j),
        )
        if not is_zero_vector(total):
            violations.append(Violation.of(Identity.JACOBI, (i, j, k), total, zero_vector(n)))
    return ValidationReport(
        subject="lie_algebra",
        checked=[Identity.ANTISYMMETRY.value, Identity.JACOBI.value],
        violations=violations,
    )


# ---------------------------------------------------------------------------
# Pairs
# ---------------------------------------------------------------------------

def _require_square(name: str, m: RationalMatrix, n: int, operation: str) -> None:
    if m.shape != (n, n):
        raise DimensionMismatch(operation, f"{name} has shape {m.shape}, expected ({n}, {n})")


@dataclass(frozen=True)
class MRBLieDerPair:
    """A Lie algebra with a modified Rota-Baxter operator ``R`` of weight ``weight`` and a derivation ``d``."""

    algebra: LieAlgebra
    weight: Fraction
    R: RationalMatrix
    d: RationalMatrix

    def __post_init__(self) -> None:
        _require_square("R", self.R, self.algebra.dim, "MRBLieDerPair")
        _require_square("d", self.d, self.algebra.dim, "MRBLieDerPair")
        object.__setattr__(self, "weight", Fraction(self.weight))

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        return self.algebra.bracket(x, y)


def _derivation_violations(alg: LieAlgebra, d: RationalMatrix) -> list[Violation]:
    violations = []
    for i, j in itertools.combinations(range(alg.dim), 2):
        e_i, e_j = alg.basis(i), alg.basis(j)
        lhs = d.apply(alg.bracket(e_i, e_j))
        rhs = add_vectors(alg.bracket(d.apply(e_i), e_j), alg.bracket(e_i, d.apply(e_j)))
        if lhs != rhs:
            violations.append(Violation.of(Identity.DERIVATION, (i, j), lhs, rhs))
    return violations


def _commutation_violations(identity: Identity, a: RationalMatrix, b: RationalMatrix) -> list[Violation]:
    """Column-wise check of ``a∘b = b∘a``."""
    ab, ba = a @ b, b @ a
    return [
        Violation.of(identity, (j,), ab.column(j), ba.column(j))
        for j in range(a.cols)
        if ab.column(j) != ba.column(j)
    ]


def modified_rota_baxter_residual(alg: LieAlgebra, R: RationalMatrix, weight: Fraction, x: Vector, y: Vector) -> tuple[Vector, Vector]:
    """Both sides of ``[Rx, Ry] = R([Rx, y] + [x, Ry]) + λ[x, y]``."""
    Rx, Ry = R.apply(x), R.apply(y)
    lhs = alg.bracket(Rx, Ry)
    rhs = add_vectors(
        R.apply(add_vectors(alg.bracket(Rx, y), alg.bracket(x, Ry))),
        scale_vector(weight, alg.bracket(x, y)),
    )
    return lhs, rhs


def validate_pair(p: MRBLieDerPair) -> ValidationReport:
    """Check the Lie axioms, the modified Rota-Baxter identity, the derivation law and ``R∘d = d∘R``."""
    report = validate_lie(p.algebra)
    violations = list(report.violations)
    for i, j in itertools.combinations(range(p.dim), 2):
        lhs, rhs = modified_rota_baxter_residual(p.algebra, p.R, p.weight, p.algebra.basis(i), p.algebra.basis(j))
        if lhs != rhs:
            violations.append(Violation.of(Identity.MODIFIED_ROTA_BAXTER, (i, j), lhs, rhs))
    violations += _derivation_violations(p.algebra, p.d)
    violations += _commutation_violations(Identity.OPERATOR_COMMUTATION, p.R, p.d)
    return ValidationReport(
        subject="pair",
        checked=report.checked + [
            Identity.MODIFIED_ROTA_BAXTER.value,
            Identity.DERIVATION.value,
            Identity.OPERATOR_COMMUTATION.value,
        ],
        violations=violations,
    )


# ---------------------------------------------------------------------------
# Representations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Representation:
    """Module ``V`` of a pair: ``rho[i]`` is the action of ``e_i``, with ``RV`` and ``dV`` on ``V``."""

    pair: MRBLieDerPair
    dimV: int
    rho: tuple[RationalMatrix, ...]
    RV: RationalMatrix
    dV: RationalMatrix

    def __post_init__(self) -> None:
        if len(self.rho) != self.pair.dim:
            raise DimensionMismatch("Representation", f"{len(self.rho)} action matrices for an algebra of dim {self.pair.dim}")
        for i, m in enumerate(self.rho):
            _require_square(f"rho[{i}]", m, self.dimV, "Representation")
        _require_square("RV", self.RV, self.dimV, "Representation")
        _require_square("dV", self.dV, self.dimV, "Representation")

    @classmethod
    def adjoint(cls, p: MRBLieDerPair) -> Representation:
        """``ρ(e_i) = ad_{e_i}``, ``R_V = R``, ``d_V = d``."""
        alg = p.algebra
        return cls(p, alg.dim, tuple(alg.ad(alg.basis(i)) for i in range(alg.dim)), p.R, p.d)

    @classmethod
    def trivial(cls, p: MRBLieDerPair, RV: RationalMatrix, dV: RationalMatrix) -> Representation:
        """``ρ = 0`` with the given maps on ``V``."""
        m = RV.rows
        return cls(p, m, tuple(RationalMatrix.zeros(m, m) for _ in range(p.dim)), RV, dV)

    @classmethod
    def zero(cls, p: MRBLieDerPair, m: int) -> Representation:
        return cls.trivial(p, RationalMatrix.zeros(m, m), RationalMatrix.zeros(m, m))

    @property
    def weight(self) -> Fraction:
        return self.pair.weight

    @property
    def algebra(self) -> LieAlgebra:
        return self.pair.algebra

    def action(self, x: Sequence[Fraction]) -> RationalMatrix:
        """``ρ(x)`` for a coordinate vector ``x``."""
        out = RationalMatrix.zeros(self.dimV, self.dimV)
        for xi, m in zip(x, self.rho):
            if xi != 0:
                out = out + m.scale(xi)
        return out

    def act(self, x: Sequence[Fraction], u: Sequence[Fraction]) -> Vector:
        """``ρ(x)u``."""
        out = zero_vector(self.dimV)
        for xi, m in zip(x, self.rho):
            if xi != 0:
                out = add_vectors(out, scale_vector(xi, m.apply(u)))
        return out


def validate_representation(r: Representation) -> ValidationReport:
    """Check the bracket, operator, derivation and commutation identities of ``r``.

    Raises:
        InvalidPair: If the underlying pair is not valid.
    """
    pair_report = validate_pair(r.pair)
    if not pair_report.valid:
        raise InvalidPair("validate_representation", pair_report)
    return _representation_report(r)


def _representation_report(r: Representation) -> ValidationReport:
    alg, p = r.algebra, r.pair
    m = r.dimV
    violations: list[Violation] = []
    for i, j in itertools.combinations(range(alg.dim), 2):
        lhs = r.action(alg.bracket_basis(i, j))
        rhs = commutator(r.rho[i], r.rho[j])
        for k in range(m):
            if lhs.column(k) != rhs.column(k):
                violations.append(Violation.of(Identity.REP_BRACKET, (i, j, k), lhs.column(k), rhs.column(k)))
    for i in range(alg.dim):
        e_i = alg.basis(i)
        rho_Ra = r.action(p.R.apply(e_i))
        rho_a = r.rho[i]
        rho_da = r.action(p.d.apply(e_i))
        for k in range(m):
            u = unit_vector(m, k)
            # ρ(Ra)(R_V u) = R_V(ρ(Ra)u + ρ(a)(R_V u)) + λρ(a)u
            lhs = rho_Ra.apply(r.RV.apply(u))
            rhs = add_vectors(
                r.RV.apply(add_vectors(rho_Ra.apply(u), rho_a.apply(r.RV.apply(u)))),
                scale_vector(p.weight, rho_a.apply(u)),
            )
            if lhs != rhs:
                violations.append(Violation.of(Identity.REP_OPERATOR, (i, k), lhs, rhs))
            # d_V(ρ(a)u) = ρ(da)u + ρ(a)(d_V u)
            lhs = r.dV.apply(rho_a.apply(u))
            rhs = add_vectors(rho_da.apply(u), rho_a.apply(r.dV.apply(u)))
            if lhs != rhs:
                violations.append(Violation.of(Identity.REP_DERIVATION, (i, k), lhs, rhs))
    violations += _commutation_violations(Identity.REP_COMMUTATION, r.RV, r.dV)
    return ValidationReport(
        subject="representation",
        checked=[
            Identity.REP_BRACKET.value,
            Identity.REP_OPERATOR.value,
            Identity.REP_DERIVATION.value,
            Identity.REP_COMMUTATION.value,
        ],
        violations=violations,
    )


def direct_sum(r1: Representation, r2: Representation) -> Representation:
    """``V₁ ⊕ V₂`` over the same pair."""
    if r1.pair != r2.pair:
        raise DimensionMismatch("direct_sum", "representations of different pairs")
    return Representation(
        r1.pair,
        r1.dimV + r2.dimV,
        tuple(block_diagonal(a, b) for a, b in zip(r1.rho, r2.rho)),
        block_diagonal(r1.RV, r2.RV),
        block_diagonal(r1.dV, r2.dV),
    )


# ---------------------------------------------------------------------------
# Morphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PairMorphism:
    source: MRBLieDerPair
    target: MRBLieDerPair
    map: RationalMatrix

    def __post_init__(self) -> None:
        if self.map.shape != (self.target.dim, self.source.dim):
            raise DimensionMismatch(
                "PairMorphism",
                f"map has shape {self.map.shape}, expected ({self.target.dim}, {self.source.dim})",
            )


def validate_morphism(m: PairMorphism) -> ValidationReport:
    """Check bracket preservation, ``φ∘d₁ = d₂∘φ`` and ``φ∘R₁ = R₂∘φ``.

    Raises:
        InvalidPair: If either end is not a valid pair.
    """
    for end in (m.source, m.target):
        report = validate_pair(end)
        if not report.valid:
            raise InvalidPair("validate_morphism", report)
    src, phi = m.source, m.map
    violations: list[Violation] = []
    for i, j in itertools.combinations(range(src.dim), 2):
        e_i, e_j = src.algebra.basis(i), src.algebra.basis(j)
        lhs = phi.apply(src.bracket(e_i, e_j))
        rhs = m.target.bracket(phi.apply(e_i), phi.apply(e_j))
        if lhs != rhs:
            violations.append(Violation.of(Identity.MORPHISM_BRACKET, (i, j), lhs, rhs))
    for identity, left, right in (
        (Identity.MORPHISM_DERIVATION, phi @ src.d, m.target.d @ phi),
        (Identity.MORPHISM_OPERATOR, phi @ src.R, m.target.R @ phi),
    ):
        for j in range(src.dim):
            if left.column(j) != right.column(j):
                violations.append(Violation.of(identity, (j,), left.column(j), right.column(j)))
    return ValidationReport(
        subject="morphism",
        checked=[
            Identity.MORPHISM_BRACKET.value,
            Identity.MORPHISM_DERIVATION.value,
            Identity.MORPHISM_OPERATOR.value,
        ],
        violations=violations,
    )


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def rota_baxter_violations(alg: LieAlgebra, T: RationalMatrix, d: RationalMatrix, weight: Fraction) -> list[Violation]:
    """Failures of ``[Ta,Tb] = T([Ta,b]+[a,Tb]+λ[a,b])``, the derivation law and ``T∘d = d∘T``."""
    violations = []
    for i, j in itertools.combinations(range(alg.dim), 2):
        a, b = alg.basis(i), alg.basis(j)
        Ta, Tb = T.apply(a), T.apply(b)
        lhs = alg.bracket(Ta, Tb)
        rhs = T.apply(add_vectors(add_vectors(alg.bracket(Ta, b), alg.bracket(a, Tb)), scale_vector(weight, alg.bracket(a, b))))
        if lhs != rhs:
            violations.append(Violation.of(Identity.ROTA_BAXTER, (i, j), lhs, rhs))
    violations += _derivation_violations(alg, d)
    violations += _commutation_violations(Identity.OPERATOR_COMMUTATION, T, d)
    return violations


def from_rota_baxter(alg: LieAlgebra, T: RationalMatrix, d: RationalMatrix, weight: Fraction | int) -> MRBLieDerPair:
    """Return ``(A, 2T + λId, d)``, a modified pair of weight ``−λ²``.

    Raises:
        NotRotaBaxter: If ``(alg, T, d, λ)`` is not a Rota-Baxter LieDer triple.
    """
    weight = Fraction(weight)
    _require_square("T", T, alg.dim, "from_rota_baxter")
    _require_square("d", d, alg.dim, "from_rota_baxter")
    lie = validate_lie(alg)
    if not lie.valid:
        first = lie.violations[0]
        raise NotRotaBaxter(Identity.ROTA_BAXTER.value, tuple(first.indices), report=lie)
    violations = rota_baxter_violations(alg, T, d, weight)
    if violations:
        raise NotRotaBaxter(violations[0].identity, tuple(violations[0].indices))
    R = T.scale(2) + RationalMatrix.identity(alg.dim).scale(weight)
    pair = MRBLieDerPair(alg, -weight * weight, R, d)
    return _checked_pair(pair, "from_rota_baxter")


def search_rota_baxter(
    alg: LieAlgebra,
    weight: Fraction | int,
    d: RationalMatrix | None = None,
    grid: Sequence[int] = (-1, 0, 1),
) -> list[RationalMatrix]:
    """Every matrix with entries in *grid* that is a weight-λ Rota-Baxter operator commuting with *d*.

    Exhaustive, so only sensible for ``dim ≤ 2`` with the default grid.
    """
    weight = Fraction(weight)
    d = d if d is not None else RationalMatrix.zeros(alg.dim, alg.dim)
    found = []
    for entries in itertools.product(grid, repeat=alg.dim * alg.dim):
        T = RationalMatrix(alg.dim, alg.dim, tuple(Fraction(x) for x in entries))
        if not rota_baxter_violations(alg, T, d, weight):
            found.append(T)
    logger.debug("grid search found %d Rota-Baxter operators of weight %s", len(found), weight)
    return found


def _checked_pair(pair: MRBLieDerPair, operation: str) -> MRBLieDerPair:
    report = validate_pair(pair)
    if not report.valid:
        raise InvalidPair(operation, report)
    return pair


def _require_representation(r: Representation, operation: str) -> None:
    try:
        report = validate_representation(r)
    except InvalidPair as exc:
        raise InvalidRepresentation(operation, exc.report) from exc
    if not report.valid:
        raise InvalidRepresentation(operation, report)


def semidirect_product(p: MRBLieDerPair, r: Representation) -> MRBLieDerPair:
    """The pair on ``A ⊕ V`` with ``[a+u, b+v] = [a,b] + ρ(a)v − ρ(b)u``, ``R ⊕ R_V`` and ``d ⊕ d_V``.

    Raises:
        InvalidRepresentation: If ``r`` does not validate.
    """
    if r.pair != p:
        raise DimensionMismatch("semidirect_product", "representation belongs to another pair")
    _require_representation(r, "semidirect_product")
    n, m = p.dim, r.dimV
    total = n + m
    brackets: dict[tuple[int, int], Vector] = {}
    for i, j in itertools.combinations(range(n), 2):
        brackets[(i, j)] = p.algebra.bracket_basis(i, j) + zero_vector(m)
    for i in range(n):
        for k in range(m):
            # [e_i, f_k] = ρ(e_i) f_k
            brackets[(i, n + k)] = zero_vector(n) + r.rho[i].column(k)
    alg = LieAlgebra.from_brackets(total, brackets)
    pair = MRBLieDerPair(alg, p.weight, block_diagonal(p.R, r.RV), block_diagonal(p.d, r.dV))
    return _checked_pair(pair, "semidirect_product")


def induced_bracket_algebra(p: MRBLieDerPair) -> LieAlgebra:
    """The algebra with ``[a,b]_R = [Ra,b] + [a,Rb]``."""
    alg, R = p.algebra, p.R
    brackets = {
        (i, j): add_vectors(alg.bracket(R.column(i), alg.basis(j)), alg.bracket(alg.basis(i), R.column(j)))
        for i, j in itertools.combinations(range(alg.dim), 2)
    }
    return LieAlgebra.from_brackets(alg.dim, brackets)


def induced_pair(p: MRBLieDerPair) -> MRBLieDerPair:
    """``(A, [−,−]_R, R, d)`` at the same weight.

    Raises:
        InvalidPair: If ``p`` is not valid.
    """
    _checked_pair(p, "induced_pair")
    return _checked_pair(MRBLieDerPair(induced_bracket_algebra(p), p.weight, p.R, p.d), "induced_pair")


def induced_action(r: Representation) -> tuple[RationalMatrix, ...]:
    """``ρ_R(e_i) = ρ(R e_i) − R_V∘ρ(e_i)`` without any validation."""
    return tuple(r.action(r.pair.R.column(i)) - r.RV @ r.rho[i] for i in range(r.pair.dim))


def induced_representation(r: Representation) -> Representation:
    """The representation ``(V, ρ_R, R_V, d_V)`` of ``induced_pair(r.pair)``.

    Raises:
        InvalidRepresentation: If ``r`` does not validate.
    """
    _require_representation(r, "induced_representation")
    out = Representation(induced_pair(r.pair), r.dimV, induced_action(r), r.RV, r.dV)
    _require_representation(out, "induced_representation")
    return out


def induced_data(r: Representation) -> Representation:
    """Induced pair and action assembled without validation; operators use this route."""
    p = r.pair
    pair = MRBLieDerPair(induced_bracket_algebra(p), p.weight, p.R, p.d)
    return Representation(pair, r.dimV, induced_action(r), r.RV, r.dV)


def change_basis(p: MRBLieDerPair, g: RationalMatrix) -> MRBLieDerPair:
    """The isomorphic pair in the basis ``e'_i = g(e_i)``; ``g`` is then a morphism from it to ``p``."""
    _require_square("g", g, p.dim, "change_basis")
    g_inv = inverse(g)
    return MRBLieDerPair(p.algebra.transport(g), p.weight, g_inv @ p.R @ g, g_inv @ p.d @ g)


def change_basis_representation(r: Representation, g: RationalMatrix, h: RationalMatrix) -> Representation:
    """Move ``r`` along ``change_basis(r.pair, g)`` and the basis ``f'_k = h(f_k)`` of ``V``."""
    h_inv = inverse(h)
    pair = change_basis(r.pair, g)
    rho = tuple(h_inv @ r.action(g.column(i)) @ h for i in range(r.pair.dim))
    return Representation(pair, r.dimV, rho, h_inv @ r.RV @ h, h_inv @ r.dV @ h)


def transform_representation(
    r: Representation,
    mode: TransformMode,
    kappa: Fraction | int = 1,
) -> tuple[Representation, TransformReport]:
    """Build a scaled or reflected representation and report which weight actually validates.

    ``scale``: operator ``κR``, ``κR_V`` at the claimed weight ``κλ``; the
    alternative checked is the same data at ``κ²λ``.

    ``reflect``: operator ``−λId − R``, ``−λId_V − R_V`` at the unchanged
    weight; the alternative checked is ``−R``, ``−R_V``.

    Returns the claimed representation and the verdict for both candidates.
    """
    _require_representation(r, "transform_representation")
    p = r.pair
    kappa = Fraction(kappa)
    n, m = p.dim, r.dimV

    def build(R: RationalMatrix, RV: RationalMatrix, weight: Fraction) -> tuple[Representation, ValidationReport, ValidationReport | None]:
        pair = MRBLieDerPair(p.algebra, weight, R, p.d)
        rep = Representation(pair, m, r.rho, RV, r.dV)
        pair_report = validate_pair(pair)
        rep_report = _representation_report(rep) if pair_report.valid else None
        return rep, pair_report, rep_report

    if mode is TransformMode.SCALE:
        claimed_weight = kappa * p.weight
        alternative_weight = kappa * kappa * p.weight
        R, RV = p.R.scale(kappa), r.RV.scale(kappa)
        claimed, claimed_pair, claimed_rep = build(R, RV, claimed_weight)
        _, alt_pair, alt_rep = build(R, RV, alternative_weight)
        description = "same operators at weight κ²λ"
    else:
        claimed_weight = alternative_weight = p.weight
        claimed, claimed_pair, claimed_rep = build(
            RationalMatrix.identity(n).scale(-p.weight) - p.R,
            RationalMatrix.identity(m).scale(-p.weight) - r.RV,
            claimed_weight,
        )
        _, alt_pair, alt_rep = build(-p.R, -r.RV, alternative_weight)
        description = "operators −R and −R_V at the same weight"
    report = TransformReport(
        mode=mode.value,
        parameter=format_rational(kappa) if mode is TransformMode.SCALE else None,
        claimed_weight=format_rational(claimed_weight),
        claimed_pair=claimed_pair,
        claimed_representation=claimed_rep,
        alternative_description=description,
        alternative_weight=format_rational(alternative_weight),
        alternative_pair=alt_pair,
        alternative_representation=alt_rep,
    )
    logger.debug("transform %s: claimed valid=%s alternative valid=%s", mode.value, report.claimed_valid, report.alternative_valid)
    return claimed, report


def linear_map_from(fn: Callable[[Vector], Vector], source_dim: int, target_dim: int) -> RationalMatrix:
    """Matrix of a linear function given on coordinate vectors."""
    return RationalMatrix.from_columns([fn(unit_vector(source_dim, j)) for j in range(source_dim)], target_dim)


__all__ = [
    "LieAlgebra",
    "MRBLieDerPair",
    "PairMorphism",
    "Representation",
    "change_basis",
    "change_basis_representation",
    "direct_sum",
    "from_rota_baxter",
    "induced_data",
    "induced_pair",
    "induced_representation",
    "search_rota_baxter",
    "semidirect_product",
    "transform_representation",
    "validate_lie",
    "validate_morphism",
    "validate_pair",
    "validate_representation",
]
