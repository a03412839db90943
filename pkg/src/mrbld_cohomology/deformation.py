"""Truncated formal deformations of a modified Rota-Baxter LieDer pair.

A jet of order ``N`` stores ``(μ_k, R_k, d_k)`` for ``k = 1..N``; the
order-0 terms are the base pair.  Equivalences ``ψ_t = Id + Σ ψ_k t^k``
act by ``μ' = ψ⁻¹∘μ∘(ψ⊗ψ)``, ``R' = ψ⁻¹Rψ``, ``d' = ψ⁻¹dψ``, all computed
modulo ``t^{N+1}``.
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any, Iterator

from .algebra import MRBLieDerPair, Representation
from .cochains import Cochain, D_mRBLD, PhiLike, QuadCochain
from .cohomology import cohomology, in_coboundaries, is_cocycle, operator_matrix
from .constants import ComplexKind, Identity, RANDOM_ENTRY_RANGE
from .exceptions import DegreeOutOfRange, DimensionMismatch, NotCocycle, OrderOneFails
from .linalg import (
    RationalMatrix,
    Vector,
    add_vectors,
    nullspace_basis,
    rank,
    scale_vector,
    unit_vector,
    zero_vector,
)
from .reports import CohomologousReport, OrderReport, RigidityReport, Violation, matrix_rows

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Jets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DeformationJet:
    base: MRBLieDerPair
    mu: tuple[Cochain, ...]
    R: tuple[RationalMatrix, ...]
    d: tuple[RationalMatrix, ...]

    def __post_init__(self) -> None:
        if not (len(self.mu) == len(self.R) == len(self.d)) or not self.mu:
            raise DimensionMismatch("DeformationJet", "mu, R and d must have the same positive length")
        n = self.base.dim
        for k, mu in enumerate(self.mu, start=1):
            if (mu.degree, mu.source_dim, mu.target_dim) != (2, n, n):
                raise DimensionMismatch("DeformationJet", f"mu_{k} must be a degree-2 cochain on dim {n}")
        for name, terms in (("R", self.R), ("d", self.d)):
            for k, m in enumerate(terms, start=1):
                if m.shape != (n, n):
                    raise DimensionMismatch("DeformationJet", f"{name}_{k} has shape {m.shape}, expected ({n}, {n})")

    @classmethod
    def zero(cls, base: MRBLieDerPair, order: int) -> DeformationJet:
        n = base.dim
        return cls(
            base,
            tuple(Cochain.zero(2, n, n) for _ in range(order)),
            tuple(RationalMatrix.zeros(n, n) for _ in range(order)),
            tuple(RationalMatrix.zeros(n, n) for _ in range(order)),
        )

    @property
    def order(self) -> int:
        return len(self.mu)

    def mu_at(self, k: int) -> Cochain:
        n = self.base.dim
        if k == 0:
            alg = self.base.algebra
            return Cochain.tabulate(2, n, n, lambda I: alg.bracket_basis(*I))
        return self.mu[k - 1] if k <= self.order else Cochain.zero(2, n, n)

    def R_at(self, k: int) -> RationalMatrix:
        if k == 0:
            return self.base.R
        return self.R[k - 1] if k <= self.order else RationalMatrix.zeros(self.base.dim, self.base.dim)

    def d_at(self, k: int) -> RationalMatrix:
        if k == 0:
            return self.base.d
        return self.d[k - 1] if k <= self.order else RationalMatrix.zeros(self.base.dim, self.base.dim)


@dataclass(frozen=True)
class EquivalenceJet:
    """``ψ_1 … ψ_N``; ``ψ_0`` is the identity."""

    psi: tuple[RationalMatrix, ...]

    def __post_init__(self) -> None:
        shapes = {m.shape for m in self.psi}
        if len(shapes) > 1 or any(r != c for r, c in shapes):
            raise DimensionMismatch("EquivalenceJet", f"psi terms must be square of one size, got {sorted(shapes)}")

    @property
    def order(self) -> int:
        return len(self.psi)

    def psi_at(self, k: int, dim: int) -> RationalMatrix:
        if k == 0:
            return RationalMatrix.identity(dim)
        return self.psi[k - 1] if k <= self.order else RationalMatrix.zeros(dim, dim)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of ``parts`` non-negative integers summing to ``total``."""
    for cut in itertools.combinations(range(total + parts - 1), parts - 1):
        bounds = (-1,) + cut + (total + parts - 1,)
        yield tuple(bounds[i + 1] - bounds[i] - 1 for i in range(parts))


# ---------------------------------------------------------------------------
# Order-n equations
# ---------------------------------------------------------------------------

def _order_residuals(j: DeformationJet, n: int) -> list[tuple[Identity, tuple[int, ...], Vector]]:
    """Every residual of the four coefficient equations at ``t^n``, zeros included."""
    base = j.base
    dim = base.dim
    alg = base.algebra
    basis = [alg.basis(i) for i in range(dim)]
    mu = [j.mu_at(k) for k in range(n + 1)]
    R = [j.R_at(k) for k in range(n + 1)]
    d = [j.d_at(k) for k in range(n + 1)]
    out: list[tuple[Identity, tuple[int, ...], Vector]] = []

    for a, b, c in itertools.combinations(range(dim), 3):
        acc = zero_vector(dim)
        for p, q in _compositions(n, 2):
            for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                acc = add_vectors(acc, mu[p].evaluate([mu[q].value_at((x, y)), basis[z]]))
        out.append((Identity.JACOBI, (a, b, c), acc))

    for a, b in itertools.combinations(range(dim), 2):
        acc = scale_vector(-base.weight, mu[n].value_at((a, b)))
        for p, q, s in _compositions(n, 3):
            acc = add_vectors(acc, mu[p].evaluate([R[q].column(a), R[s].column(b)]))
            inner = add_vectors(
                mu[q].evaluate([R[s].column(a), basis[b]]),
                mu[q].evaluate([basis[a], R[s].column(b)]),
            )
            acc = add_vectors(acc, scale_vector(-1, R[p].apply(inner)))
        out.append((Identity.MODIFIED_ROTA_BAXTER, (a, b), acc))

    for a, b in itertools.combinations(range(dim), 2):
        acc = zero_vector(dim)
        for p, q in _compositions(n, 2):
            acc = add_vectors(acc, d[p].apply(mu[q].value_at((a, b))))
            acc = add_vectors(acc, scale_vector(-1, mu[q].evaluate([d[p].column(a), basis[b]])))
            acc = add_vectors(acc, scale_vector(-1, mu[q].evaluate([basis[a], d[p].column(b)])))
        out.append((Identity.DERIVATION, (a, b), acc))

    commutation = RationalMatrix.zeros(dim, dim)
    for p, q in _compositions(n, 2):
        commutation = commutation + R[p] @ d[q] - d[p] @ R[q]
    for col in range(dim):
        out.append((Identity.OPERATOR_COMMUTATION, (col,), commutation.column(col)))
    return out


def check_order(j: DeformationJet, n: int) -> OrderReport:
    """Residuals of the Jacobi, modified Rota-Baxter, derivation and commutation equations at ``t^n``."""
    if not 1 <= n <= j.order:
        raise DegreeOutOfRange("check_order", f"order {n} outside 1..{j.order}")
    violations = [
        Violation.of(identity, indices, residual, zero_vector(len(residual)))
        for identity, indices, residual in _order_residuals(j, n)
        if any(x != 0 for x in residual)
    ]
    return OrderReport(
        order=n,
        checked=[
            Identity.JACOBI.value,
            Identity.MODIFIED_ROTA_BAXTER.value,
            Identity.DERIVATION.value,
            Identity.OPERATOR_COMMUTATION.value,
        ],
        violations=violations,
    )


def check_all_orders(j: DeformationJet) -> list[OrderReport]:
    return [check_order(j, n) for n in range(1, j.order + 1)]


# ---------------------------------------------------------------------------
# Order one
# ---------------------------------------------------------------------------

def _first_order_jet(base: MRBLieDerPair, coords: Vector) -> DeformationJet:
    """Order-1 jet whose ``(μ₁, R₁, d₁)`` has the given quad-slot coordinates."""
    n = base.dim
    mu_len = comb(n, 2) * n
    mu1 = Cochain.from_coordinates(2, n, n, coords[:mu_len])
    R1 = Cochain.from_coordinates(1, n, n, coords[mu_len:mu_len + n * n]).to_matrix()
    d1 = Cochain.from_coordinates(1, n, n, coords[mu_len + n * n:]).to_matrix()
    return DeformationJet(base, (mu1,), (R1,), (d1,))


def order_one_system(base: MRBLieDerPair) -> RationalMatrix:
    """The order-one equations as one matrix acting on ``(μ₁, R₁, d₁)`` coordinates."""
    n = base.dim
    unknowns = comb(n, 2) * n + 2 * n * n
    zero = DeformationJet.zero(base, 1)
    rows = sum(len(res) for _, _, res in _order_residuals(zero, 1))
    columns = []
    for k in range(unknowns):
        jet = _first_order_jet(base, unit_vector(unknowns, k))
        columns.append(tuple(x for _, _, res in _order_residuals(jet, 1) for x in res))
    logger.debug("order-one system: %d equations in %d unknowns", rows, unknowns)
    return RationalMatrix.from_columns(columns, rows)


def order_one_solutions(base: MRBLieDerPair) -> list[DeformationJet]:
    """A basis of the order-one jets, from the nullspace of :func:`order_one_system`."""
    return [_first_order_jet(base, v) for v in nullspace_basis(order_one_system(base))]


def sample_order_one_jet(base: MRBLieDerPair, rng: random.Random, basis: list[DeformationJet] | None = None) -> DeformationJet:
    """Random integer combination of the order-one solution basis."""
    basis = basis if basis is not None else order_one_solutions(base)
    jet = DeformationJet.zero(base, 1)
    lo, hi = RANDOM_ENTRY_RANGE
    for member in basis:
        c = rng.randint(lo, hi)
        jet = DeformationJet(
            base,
            (jet.mu[0] + member.mu[0].scale(c),),
            (jet.R[0] + member.R[0].scale(c),),
            (jet.d[0] + member.d[0].scale(c),),
        )
    return jet


def order_one_cocycle_dimension(base: MRBLieDerPair, table: PhiLike = None) -> int:
    """Dimension of the degree-2 LieDer cocycles with zero last slot, adjoint coefficients."""
    adjoint = Representation.adjoint(base)
    m = operator_matrix(adjoint, ComplexKind.MRBLD, 2, table)
    kept = m.cols - base.dim
    restricted = RationalMatrix.from_columns(m.columns()[:kept], m.rows)
    return kept - rank(restricted)


# ---------------------------------------------------------------------------
# Infinitesimals
# ---------------------------------------------------------------------------

def _require_order_one(j: DeformationJet, operation: str) -> None:
    report = check_order(j, 1)
    if not report.passes:
        raise OrderOneFails(operation, report)


def infinitesimal(j: DeformationJet, table: PhiLike = None) -> QuadCochain:
    """``(μ₁, R₁, d₁, 0)`` as a degree-2 cochain of the LieDer complex with adjoint coefficients.

    Raises:
        OrderOneFails: If the jet does not satisfy its order-one equations.
        NotCocycle: If the quad is not a cocycle under the chosen φ table.
    """
    _require_order_one(j, "infinitesimal")
    n = j.base.dim
    quad = QuadCochain((j.mu[0], Cochain.from_matrix(j.R[0]), Cochain.from_matrix(j.d[0]), Cochain.zero(0, n, n)))
    verdict = is_cocycle(Representation.adjoint(j.base), ComplexKind.MRBLD, quad, table)
    if not verdict.is_cocycle:
        raise NotCocycle("infinitesimal", verdict.defect)
    return quad


# ---------------------------------------------------------------------------
# Equivalences
# ---------------------------------------------------------------------------

def inverse_series(e: EquivalenceJet, dim: int, order: int) -> list[RationalMatrix]:
    """``χ_0..χ_order`` with ``(Σψ_k t^k)(Σχ_k t^k) = Id`` modulo ``t^{order+1}``."""
    chi = [RationalMatrix.identity(dim)]
    for n in range(1, order + 1):
        acc = RationalMatrix.zeros(dim, dim)
        for k in range(1, n + 1):
            acc = acc + e.psi_at(k, dim) @ chi[n - k]
        chi.append(-acc)
    return chi


def apply_equivalence(j: DeformationJet, e: EquivalenceJet) -> DeformationJet:
    """Transport ``j`` along ``ψ_t``: ``ψ∘μ' = μ∘(ψ⊗ψ)``, ``ψ∘R' = R∘ψ``, ``ψ∘d' = d∘ψ``."""
    dim, order = j.base.dim, j.order
    if e.psi and e.psi[0].rows != dim:
        raise DimensionMismatch("apply_equivalence", f"psi acts on dim {e.psi[0].rows}, jet on dim {dim}")
    psi = [e.psi_at(k, dim) for k in range(order + 1)]
    chi = inverse_series(e, dim, order)
    mu = [j.mu_at(k) for k in range(order + 1)]

    new_mu, new_R, new_d = [], [], []
    for n in range(1, order + 1):
        def value(I: tuple[int, ...], n: int = n) -> Vector:
            a, b = I
            acc = zero_vector(dim)
            for p, q, s, t in _compositions(n, 4):
                inner = mu[q].evaluate([psi[s].column(a), psi[t].column(b)])
                acc = add_vectors(acc, chi[p].apply(inner))
            return acc

        new_mu.append(Cochain.tabulate(2, dim, dim, value))
        R_n = RationalMatrix.zeros(dim, dim)
        d_n = RationalMatrix.zeros(dim, dim)
        for p, q, s in _compositions(n, 3):
            R_n = R_n + chi[p] @ j.R_at(q) @ psi[s]
            d_n = d_n + chi[p] @ j.d_at(q) @ psi[s]
        new_R.append(R_n)
        new_d.append(d_n)
    return DeformationJet(j.base, tuple(new_mu), tuple(new_R), tuple(new_d))


def compose(e1: EquivalenceJet, e2: EquivalenceJet) -> EquivalenceJet:
    """Truncated product ``ψ¹_t ψ²_t``; transporting by it equals transporting by ``e1`` then ``e2``."""
    order = max(e1.order, e2.order)
    if order == 0:
        return EquivalenceJet(())
    dim = (e1.psi or e2.psi)[0].rows
    terms = []
    for n in range(1, order + 1):
        acc = RationalMatrix.zeros(dim, dim)
        for k in range(n + 1):
            acc = acc + e1.psi_at(k, dim) @ e2.psi_at(n - k, dim)
        terms.append(acc)
    return EquivalenceJet(tuple(terms))


def infinitesimals_cohomologous(
    j1: DeformationJet,
    j2: DeformationJet,
    e: EquivalenceJet,
    table: PhiLike = None,
) -> CohomologousReport:
    """Compare the infinitesimals of ``j1`` and its transport ``j2`` along ``e``.

    ``matches_coboundary`` is ``infinitesimal(j2) − infinitesimal(j1) = 𝔇¹(ψ₁)``;
    ``same_class`` reports whether the difference lies in ``B²`` at all.

    Raises:
        OrderOneFails: If either jet fails its order-one equations.
    """
    _require_order_one(j1, "infinitesimals_cohomologous")
    _require_order_one(j2, "infinitesimals_cohomologous")
    dim = j1.base.dim
    adjoint = Representation.adjoint(j1.base)
    difference = infinitesimal(j2, table) - infinitesimal(j1, table)
    psi1 = e.psi_at(1, dim)
    image = D_mRBLD(adjoint, QuadCochain((Cochain.from_matrix(psi1),)), table)
    same_class = in_coboundaries(adjoint, ComplexKind.MRBLD, difference, table) is not None
    return CohomologousReport(
        matches_coboundary=difference == image,
        same_class=same_class,
        difference=difference.to_document(),
    )


# ---------------------------------------------------------------------------
# Rigidity
# ---------------------------------------------------------------------------

RIGID_STATEMENT = "rigid (sufficient criterion met: H² vanishes)"
NOT_SHOWN_STATEMENT = "rigidity not established: H² is nonzero, the listed cocycles are candidate nontrivial infinitesimals"


def rigidity_report(target: MRBLieDerPair | Representation, table: PhiLike = None) -> RigidityReport:
    """Dimension of ``H²`` of the LieDer complex with adjoint coefficients and what it implies."""
    adjoint = target if isinstance(target, Representation) else Representation.adjoint(target)
    result = cohomology(adjoint, ComplexKind.MRBLD, 2, table)
    return RigidityReport(
        dim_h2=result.dim_h,
        rigid=result.dim_h == 0,
        statement=RIGID_STATEMENT if result.dim_h == 0 else NOT_SHOWN_STATEMENT,
        candidates=[x.to_document() for x in result.representatives],
    )


def jet_to_document(j: DeformationJet) -> dict[str, Any]:
    return {
        "order": j.order,
        "mu": [m.to_document() for m in j.mu],
        "R": [matrix_rows(m) for m in j.R],
        "d": [matrix_rows(m) for m in j.d],
    }


def random_equivalence(rng: random.Random, dim: int, order: int) -> EquivalenceJet:
    lo, hi = RANDOM_ENTRY_RANGE
    return EquivalenceJet(tuple(
        RationalMatrix(dim, dim, tuple(Fraction(rng.randint(lo, hi)) for _ in range(dim * dim)))
        for _ in range(order)
    ))
