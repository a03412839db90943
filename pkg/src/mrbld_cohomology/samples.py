"""Named instances and the seeded sampler behind every randomized check.

The families below are valid by construction:

- ``two_dim``: ``[e₁,e₂] = e₂``, ``R = diag(a, s)``, weight ``−s²``, ``d = diag(0, q)``.
- ``sl2`` and ``heisenberg``: ``R = κ(P₂ − P₁)`` for a splitting into two
  subalgebras, weight ``−κ²``, with a diagonal derivation.
- ``complexified``: the complexified two-dimensional algebra, ``R = μJ``,
  weight ``μ²``.
- ``abelian``: any ``R`` with ``d = αId + βR``.
"""

from __future__ import annotations

import logging
import random
from fractions import Fraction
from typing import Callable

from .algebra import (
    LieAlgebra,
    MRBLieDerPair,
    Representation,
    change_basis,
    direct_sum,
    search_rota_baxter,
)
from .cochains import Cochain
from .cohomology import from_coordinates, is_cocycle, operator_matrix
from .constants import ComplexKind, RANDOM_ENTRY_RANGE
from .deformation import (
    DeformationJet,
    EquivalenceJet,
    order_one_solutions,
    random_equivalence,
    sample_order_one_jet,
)
from .extension import CocycleTriple, CoefficientSpace
from .linalg import RationalMatrix, nullspace_basis, rank

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Named instances
# ---------------------------------------------------------------------------

def two_dim_pair(a: int | Fraction = 2, s: int | Fraction = 1, q: int | Fraction = 3) -> MRBLieDerPair:
    """``[e₁,e₂] = e₂`` with ``R = diag(a, s)`` of weight ``−s²`` and ``d = diag(0, q)``."""
    alg = LieAlgebra.from_brackets(2, {(0, 1): (0, 1)})
    s = Fraction(s)
    return MRBLieDerPair(alg, -s * s, RationalMatrix.diagonal([a, s]), RationalMatrix.diagonal([0, q]))


def example_pair() -> MRBLieDerPair:
    """``[e₁,e₂] = e₂``, weight −1, ``R = diag(2, 1)``, ``d = diag(0, 3)``."""
    return two_dim_pair(2, 1, 3)


def abelian_zero_pair(dim: int = 2) -> MRBLieDerPair:
    """The abelian algebra of dimension *dim* with weight 0 and ``R = d = 0``."""
    return MRBLieDerPair(
        LieAlgebra.abelian(dim),
        Fraction(0),
        RationalMatrix.zeros(dim, dim),
        RationalMatrix.zeros(dim, dim),
    )


def sl2_pair(kappa: int | Fraction = 1, t: int | Fraction = 1) -> MRBLieDerPair:
    """Basis ``h, e, f``; ``R`` is ``−κ`` on the Borel ``⟨h, e⟩`` and ``κ`` on ``⟨f⟩``; ``d = t·ad_h``."""
    alg = LieAlgebra.from_brackets(3, {(0, 1): (0, 2, 0), (0, 2): (0, 0, -2), (1, 2): (1, 0, 0)})
    kappa = Fraction(kappa)
    d = alg.ad(alg.basis(0)).scale(t)
    return MRBLieDerPair(alg, -kappa * kappa, RationalMatrix.diagonal([-kappa, -kappa, kappa]), d)


def heisenberg_pair(kappa: int | Fraction = 1, alpha: int | Fraction = 1, beta: int | Fraction = 2) -> MRBLieDerPair:
    """``[e₁,e₂] = e₃``; ``R = diag(−κ, κ, κ)``; ``d = diag(α, β, α+β)``."""
    alg = LieAlgebra.from_brackets(3, {(0, 1): (0, 0, 1)})
    kappa = Fraction(kappa)
    d = RationalMatrix.diagonal([alpha, beta, Fraction(alpha) + Fraction(beta)])
    return MRBLieDerPair(alg, -kappa * kappa, RationalMatrix.diagonal([-kappa, kappa, kappa]), d)


def complexified_pair(mu: int | Fraction = 1, p: int | Fraction = 1, q: int | Fraction = 0) -> MRBLieDerPair:
    """Basis ``x₁, x₂, y₁, y₂`` with ``y = i·x``; ``R = μJ`` of weight ``μ²``."""
    alg = LieAlgebra.from_brackets(4, {
        (0, 1): (0, 1, 0, 0),
        (0, 3): (0, 0, 0, 1),
        (1, 2): (0, 0, 0, -1),
        (2, 3): (0, -1, 0, 0),
    })
    mu = Fraction(mu)
    # J: x_k -> y_k, y_k -> -x_k
    J = RationalMatrix.from_rows([
        [0, 0, -1, 0],
        [0, 0, 0, -1],
        [1, 0, 0, 0],
        [0, 1, 0, 0],
    ])
    d = RationalMatrix.from_rows([
        [0, 0, 0, 0],
        [p, q, 0, 0],
        [0, 0, 0, 0],
        [0, 0, p, q],
    ])
    return MRBLieDerPair(alg, mu * mu, J.scale(mu), d)


def abelian_pair(R: RationalMatrix, weight: int | Fraction = 0, alpha: int | Fraction = 0, beta: int | Fraction = 0) -> MRBLieDerPair:
    """The abelian algebra carrying *R* at *weight*, with ``d = α·Id + β·R`` so ``R∘d = d∘R``."""
    n = R.rows
    d = RationalMatrix.identity(n).scale(alpha) + R.scale(beta)
    return MRBLieDerPair(LieAlgebra.abelian(n), Fraction(weight), R, d)


CATALOGUE: dict[str, Callable[[], MRBLieDerPair]] = {
    "example": example_pair,
    "abelian_zero": abelian_zero_pair,
    "sl2": sl2_pair,
    "heisenberg": heisenberg_pair,
    "complexified": complexified_pair,
}


def projection_rota_baxter(weight: int | Fraction) -> list[tuple[LieAlgebra, RationalMatrix, RationalMatrix]]:
    """``T = −λP₁`` for splittings into two subalgebras, with diagonal derivations commuting with ``T``."""
    weight = Fraction(weight)
    out = []
    for pair, projector in (
        (two_dim_pair(), RationalMatrix.diagonal([1, 0])),
        (sl2_pair(), RationalMatrix.diagonal([1, 1, 0])),
        (heisenberg_pair(), RationalMatrix.diagonal([1, 0, 0])),
    ):
        out.append((pair.algebra, projector.scale(-weight), pair.d))
    return out


# ---------------------------------------------------------------------------
# Sampler
# ---------------------------------------------------------------------------

FAMILIES = ("two_dim", "sl2", "heisenberg", "complexified", "abelian")


class InstanceSampler:
    """Every random instance in the test suites and the claim checker comes from one of these."""

    def __init__(self, seed: int = 0):
        self.seed = seed
        self.rng = random.Random(seed)

    # -- scalars and matrices -------------------------------------------------

    def integer(self, lo: int = RANDOM_ENTRY_RANGE[0], hi: int = RANDOM_ENTRY_RANGE[1]) -> int:
        return self.rng.randint(lo, hi)

    def nonzero(self, lo: int = -3, hi: int = 3) -> int:
        return self.rng.choice([x for x in range(lo, hi + 1) if x != 0])

    def matrix(self, rows: int, cols: int) -> RationalMatrix:
        return RationalMatrix(rows, cols, tuple(Fraction(self.integer()) for _ in range(rows * cols)))

    def invertible_matrix(self, n: int) -> RationalMatrix:
        """Random integer matrix with entries in ``[-2, 2]`` and full rank."""
        while True:
            g = RationalMatrix(n, n, tuple(Fraction(self.rng.randint(-2, 2)) for _ in range(n * n)))
            if rank(g) == n:
                return g

    # -- pairs and representations -------------------------------------------

    def pair(self, family: str | None = None, conjugate: bool = True) -> MRBLieDerPair:
        family = family or self.rng.choice(FAMILIES)
        if family == "two_dim":
            p = two_dim_pair(self.integer(-3, 3), self.nonzero(), self.integer(-3, 3))
        elif family == "sl2":
            p = sl2_pair(self.nonzero(-2, 2), self.integer(-2, 2))
        elif family == "heisenberg":
            p = heisenberg_pair(self.nonzero(-2, 2), self.integer(-2, 2), self.integer(-2, 2))
        elif family == "complexified":
            p = complexified_pair(self.nonzero(-2, 2), self.integer(-2, 2), self.integer(-2, 2))
        elif family == "abelian":
            n = self.rng.choice((1, 2, 3))
            p = abelian_pair(self.matrix(n, n), self.integer(-2, 2), self.integer(-2, 2), self.integer(-2, 2))
        else:
            raise ValueError(f"unknown family {family!r}")
        if conjugate:
            p = change_basis(p, self.invertible_matrix(p.dim))
        logger.debug("sampled %s pair of dim %d, weight %s", family, p.dim, p.weight)
        return p

    def coefficient_space(self, m: int | None = None) -> CoefficientSpace:
        """``(V, R_V, d_V)`` with ``d_V = αId + βR_V`` so the two commute."""
        m = m if m is not None else self.rng.choice((1, 2))
        RV = self.matrix(m, m)
        dV = RationalMatrix.identity(m).scale(self.integer(-2, 2)) + RV.scale(self.integer(-2, 2))
        return CoefficientSpace(m, RV, dV)

    def representation(self, p: MRBLieDerPair | None = None) -> Representation:
        p = p if p is not None else self.pair()
        kind = self.rng.choice(("adjoint", "trivial", "sum"))
        if kind == "adjoint":
            return Representation.adjoint(p)
        trivial = self.coefficient_space().trivial_representation(p)
        if kind == "trivial":
            return trivial
        return direct_sum(Representation.adjoint(p), trivial)

    def rota_baxter_triples(self, weight: int | Fraction) -> list[tuple[LieAlgebra, RationalMatrix, RationalMatrix]]:
        """Projection-type triples plus a grid search on the two-dimensional algebra."""
        triples = projection_rota_baxter(weight)
        alg = two_dim_pair().algebra
        triples += [(alg, T, RationalMatrix.zeros(2, 2)) for T in search_rota_baxter(alg, weight)]
        return triples

    # -- cochains, jets and triples -------------------------------------------

    def cochain(self, degree: int, source_dim: int, target_dim: int) -> Cochain:
        return Cochain.random(self.rng, degree, source_dim, target_dim)

    def order_one_jet(self, p: MRBLieDerPair) -> DeformationJet:
        return sample_order_one_jet(p, self.rng, order_one_solutions(p))

    def equivalence(self, dim: int, order: int = 1) -> EquivalenceJet:
        return random_equivalence(self.rng, dim, order)

    def cocycle_triple(self, p: MRBLieDerPair, V: CoefficientSpace) -> CocycleTriple:
        """Random integer combination of a basis of the degree-2 cocycles with zero last slot."""
        rep = V.trivial_representation(p)
        m = operator_matrix(rep, ComplexKind.MRBLD, 2)
        kept = m.cols - V.dim
        restricted = RationalMatrix.from_columns(m.columns()[:kept], m.rows)
        coords = [Fraction(0)] * m.cols
        for v in nullspace_basis(restricted):
            c = self.integer(-2, 2)
            coords[:kept] = [x + c * y for x, y in zip(coords[:kept], v)]
        return CocycleTriple.from_quad(from_coordinates(rep, ComplexKind.MRBLD, 2, coords))

    def triple(self, p: MRBLieDerPair, V: CoefficientSpace) -> CocycleTriple:
        n, m = p.dim, V.dim
        return CocycleTriple(self.cochain(2, n, m), self.cochain(1, n, m), self.cochain(1, n, m))

    def non_cocycle_triple(self, p: MRBLieDerPair, V: CoefficientSpace) -> CocycleTriple | None:
        """A random triple that is not a cocycle, or None if ten draws were all cocycles."""
        rep = V.trivial_representation(p)
        for _ in range(10):
            t = self.triple(p, V)
            if not is_cocycle(rep, ComplexKind.MRBLD, t.as_quad()).is_cocycle:
                return t
        return None
