"""Coboundaries as exact matrices, and cohomology by rank-nullity.

Coordinates follow the cochain storage order (increasing index tuples,
then target coordinate) with pair and quad spaces concatenating their
slots in the order ``f, g, h, s``.  ``B¹`` is zero for every complex.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence, Union

from .algebra import Representation
from .cochains import (
    Cochain,
    D_mRBLD,
    PairCochain,
    PhiLike,
    QuadCochain,
    delta_CE,
    delta_mRBO,
    partial_mRBLA,
    resolve_phi,
)
from .constants import ComplexKind
from .exceptions import DegreeOutOfRange, DimensionMismatch
from .linalg import RationalMatrix, Vector, extend_to_basis, nullspace_basis, quotient_dim, rref, solve, unit_vector
from .reports import CocycleReport, CohomologyReport

logger = logging.getLogger(__name__)

Element = Union[Cochain, PairCochain, QuadCochain]


# ---------------------------------------------------------------------------
# Spaces
# ---------------------------------------------------------------------------

def first_degree(kind: ComplexKind) -> int:
    return 0 if kind in (ComplexKind.CE, ComplexKind.MRBO) else 1


def slot_degrees(kind: ComplexKind, n: int) -> tuple[int, ...]:
    """Degrees of the cochain slots making up the degree-``n`` space."""
    if n < first_degree(kind):
        raise DegreeOutOfRange("slot_degrees", f"degree {n} is below the start of the {kind.value} complex")
    if kind is ComplexKind.MRBLA:
        return (n, n - 1)
    if kind is ComplexKind.MRBLD:
        return (1,) if n == 1 else (n, n - 1, n - 1, n - 2)
    return (n,)


def space_dimension(r: Representation, kind: ComplexKind, n: int) -> int:
    return sum(comb(r.pair.dim, k) * r.dimV for k in slot_degrees(kind, n))


def from_coordinates(r: Representation, kind: ComplexKind, n: int, coords: Sequence[Fraction]) -> Element:
    """Rebuild the element of the degree-``n`` space with the given coordinates."""
    if len(coords) != space_dimension(r, kind, n):
        raise DimensionMismatch("from_coordinates", f"{len(coords)} coordinates for a space of dim {space_dimension(r, kind, n)}")
    slots = []
    offset = 0
    for k in slot_degrees(kind, n):
        size = comb(r.pair.dim, k) * r.dimV
        slots.append(Cochain.from_coordinates(k, r.pair.dim, r.dimV, coords[offset:offset + size]))
        offset += size
    if kind is ComplexKind.MRBLA:
        return PairCochain(*slots)
    if kind is ComplexKind.MRBLD:
        return QuadCochain(tuple(slots))
    return slots[0]


def element_degree(kind: ComplexKind, x: Element) -> int:
    expected = {
        ComplexKind.CE: Cochain,
        ComplexKind.MRBO: Cochain,
        ComplexKind.MRBLA: PairCochain,
        ComplexKind.MRBLD: QuadCochain,
    }[kind]
    if not isinstance(x, expected):
        raise DimensionMismatch("element_degree", f"{type(x).__name__} is not an element of the {kind.value} complex")
    return x.degree


def apply_coboundary(r: Representation, kind: ComplexKind, x: Element, table: PhiLike = None) -> Element:
    """The next coboundary of ``x`` in the chosen complex."""
    n = element_degree(kind, x)
    if n < first_degree(kind):
        raise DegreeOutOfRange("apply_coboundary", f"degree {n} is below the start of the {kind.value} complex")
    if kind is ComplexKind.CE:
        return delta_CE(r, x)  # type: ignore[arg-type]
    if kind is ComplexKind.MRBO:
        return delta_mRBO(r, x)  # type: ignore[arg-type]
    if kind is ComplexKind.MRBLA:
        return partial_mRBLA(r, x, table)  # type: ignore[arg-type]
    return D_mRBLD(r, x, table)  # type: ignore[arg-type]


def operator_matrix(r: Representation, kind: ComplexKind, n: int, table: PhiLike = None) -> RationalMatrix:
    """Matrix of the degree-``n`` coboundary in the coordinate bases.

    Raises:
        DegreeOutOfRange: If ``n`` is below the complex's first degree.
    """
    if n < first_degree(kind):
        raise DegreeOutOfRange("operator_matrix", f"degree {n} is below the start of the {kind.value} complex")
    table = resolve_phi(r, table)
    source = space_dimension(r, kind, n)
    target = space_dimension(r, kind, n + 1)
    columns = [
        apply_coboundary(r, kind, from_coordinates(r, kind, n, unit_vector(source, j)), table).coordinates()
        for j in range(source)
    ]
    logger.debug("assembled %s coboundary at degree %d: %dx%d", kind.value, n, target, source)
    return RationalMatrix.from_columns(columns, target)


# ---------------------------------------------------------------------------
# Cohomology
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CohomologyResult:
    kind: ComplexKind
    degree: int
    dim_space: int
    cocycle_basis: list[Element] = field(default_factory=list)
    coboundary_basis: list[Element] = field(default_factory=list)
    # coboundary_basis[i] is the coboundary of coboundary_preimages[i]
    coboundary_preimages: list[Element] = field(default_factory=list)
    representatives: list[Element] = field(default_factory=list)

    @property
    def dim_z(self) -> int:
        return len(self.cocycle_basis)

    @property
    def dim_b(self) -> int:
        return len(self.coboundary_basis)

    @property
    def dim_h(self) -> int:
        return self.dim_z - self.dim_b

    def to_report(self) -> CohomologyReport:
        return CohomologyReport(
            kind=self.kind.value,
            degree=self.degree,
            dim_space=self.dim_space,
            dim_z=self.dim_z,
            dim_b=self.dim_b,
            dim_h=self.dim_h,
            representatives=[x.to_document() for x in self.representatives],
        )


def cohomology(r: Representation, kind: ComplexKind, n: int, table: PhiLike = None) -> CohomologyResult:
    """Cocycles, coboundaries and representatives of ``Hⁿ`` of the chosen complex.

    Raises:
        DegreeOutOfRange: If ``n < 1``.
        SubspaceViolation: If coboundaries are not cocycles (the φ table in
            use does not make the complex square to zero).
    """
    if n < 1:
        raise DegreeOutOfRange("cohomology", f"degree {n} < 1")
    table = resolve_phi(r, table)
    length = space_dimension(r, kind, n)
    m_n = operator_matrix(r, kind, n, table)
    z_coords = nullspace_basis(m_n)

    b_coords: list[Vector] = []
    preimages: list[Element] = []
    if n > 1:
        m_prev = operator_matrix(r, kind, n - 1, table)
        _, pivots = rref(m_prev)
        lower = space_dimension(r, kind, n - 1)
        b_coords = [m_prev.column(j) for j in pivots]
        preimages = [from_coordinates(r, kind, n - 1, unit_vector(lower, j)) for j in pivots]
        if b_coords:
            quotient_dim(
                RationalMatrix.from_columns(z_coords, length) if z_coords else RationalMatrix.zeros(length, 0),
                RationalMatrix.from_columns(b_coords, length),
            )

    reps = extend_to_basis(b_coords, z_coords, length)
    result = CohomologyResult(
        kind=kind,
        degree=n,
        dim_space=length,
        cocycle_basis=[from_coordinates(r, kind, n, v) for v in z_coords],
        coboundary_basis=[from_coordinates(r, kind, n, v) for v in b_coords],
        coboundary_preimages=preimages,
        representatives=[from_coordinates(r, kind, n, v) for v in reps],
    )
    logger.debug("H^%d(%s): dim Z=%d dim B=%d dim H=%d", n, kind.value, result.dim_z, result.dim_b, result.dim_h)
    return result


def in_coboundaries(r: Representation, kind: ComplexKind, x: Element, table: PhiLike = None) -> Vector | None:
    """Coordinates of some ``y`` with ``coboundary(y) = x``, or None when ``x ∉ B``.

    Below degree 2 ``B`` is zero, so only ``x = 0`` qualifies (witness ``()``).
    """
    n = element_degree(kind, x)
    if n <= 1:
        return () if x.is_zero() else None
    return solve(operator_matrix(r, kind, n - 1, table), x.coordinates())


@dataclass(frozen=True)
class CocycleVerdict:
    kind: ComplexKind
    degree: int
    is_cocycle: bool
    defect: Element | None = None

    def to_report(self) -> CocycleReport:
        return CocycleReport(
            kind=self.kind.value,
            degree=self.degree,
            is_cocycle=self.is_cocycle,
            defect=self.defect.to_document() if self.defect is not None else None,
        )


def is_cocycle(r: Representation, kind: ComplexKind, x: Element, table: PhiLike = None) -> CocycleVerdict:
    """True iff the next coboundary of ``x`` is exactly zero; otherwise carries that defect."""
    image = apply_coboundary(r, kind, x, table)
    n = element_degree(kind, x)
    if image.is_zero():
        return CocycleVerdict(kind, n, True)
    return CocycleVerdict(kind, n, False, image)
