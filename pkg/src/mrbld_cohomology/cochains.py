"""Alternating cochains and the coboundary operators built from them.

A degree-``n`` cochain ``Λⁿ A → V`` is stored as one vector per strictly
increasing ``n``-tuple of basis indices, tuples in lexicographic order.
Evaluating at any other tuple sorts it with the permutation sign and is
zero on repeated indices.

Operators take a :class:`~mrbld_cohomology.algebra.Representation` and
never validate it; the signs are ``(−1)^{i+n}`` on the action terms and
``(−1)^{i+j+n+1}`` on the bracket terms, positions counted from 1.
"""

from __future__ import annotations

import functools
import itertools
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any, Callable, Iterable, Mapping, Sequence

from .algebra import Representation, induced_data
from .constants import DEFAULT_PHI_CONVENTION, RANDOM_ENTRY_RANGE, PhiConvention
from .exceptions import DegreeOutOfRange, DimensionMismatch, Underdetermined
from .linalg import (
    ZERO,
    RationalMatrix,
    Vector,
    add_vectors,
    format_rational,
    is_zero_vector,
    rref,
    scale_vector,
    solve,
    unit_vector,
    zero_vector,
)
from .reports import CalibrationReport, ChainMapReport, CoefficientRow, IdentityCheck

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Basis tuples
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def basis_tuples(dim: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """Strictly increasing ``degree``-tuples over ``range(dim)``, lexicographic."""
    return tuple(itertools.combinations(range(dim), degree))


@functools.lru_cache(maxsize=None)
def _tuple_positions(dim: int, degree: int) -> dict[tuple[int, ...], int]:
    return {t: pos for pos, t in enumerate(basis_tuples(dim, degree))}


def sort_with_sign(indices: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Return ``(sign, sorted)``; sign is 0 when an index repeats."""
    items = list(indices)
    if len(set(items)) != len(items):
        return 0, ()
    sign = 1
    # Insertion sort, flipping the sign on every transposition
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(items)


def _without(items: tuple[int, ...], *positions: int) -> tuple[int, ...]:
    drop = set(positions)
    return tuple(x for k, x in enumerate(items) if k not in drop)


# ---------------------------------------------------------------------------
# Cochain
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Cochain:
    """Alternating multilinear map of ``degree`` arguments from a ``source_dim`` algebra to a ``target_dim`` space."""

    degree: int
    source_dim: int
    target_dim: int
    values: tuple[Vector, ...]

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise DegreeOutOfRange("Cochain", f"degree {self.degree} is negative")
        expected = comb(self.source_dim, self.degree)
        if len(self.values) != expected:
            raise DimensionMismatch("Cochain", f"{len(self.values)} values, expected {expected}")
        if any(len(v) != self.target_dim for v in self.values):
            raise DimensionMismatch("Cochain", f"values must have length {self.target_dim}")

    # -- construction -------------------------------------------------------

    @classmethod
    def zero(cls, degree: int, source_dim: int, target_dim: int) -> Cochain:
        return cls(degree, source_dim, target_dim, (zero_vector(target_dim),) * comb(source_dim, degree))

    @classmethod
    def tabulate(cls, degree: int, source_dim: int, target_dim: int, fn: Callable[[tuple[int, ...]], Vector]) -> Cochain:
        """Evaluate *fn* on every increasing basis tuple."""
        return cls(degree, source_dim, target_dim, tuple(tuple(fn(t)) for t in basis_tuples(source_dim, degree)))

    @classmethod
    def from_coordinates(cls, degree: int, source_dim: int, target_dim: int, coords: Sequence[Fraction]) -> Cochain:
        count = comb(source_dim, degree)
        if len(coords) != count * target_dim:
            raise DimensionMismatch("Cochain.from_coordinates", f"{len(coords)} coordinates, expected {count * target_dim}")
        return cls(
            degree,
            source_dim,
            target_dim,
            tuple(tuple(coords[k * target_dim:(k + 1) * target_dim]) for k in range(count)),
        )

    @classmethod
    def from_matrix(cls, m: RationalMatrix) -> Cochain:
        """Degree-1 cochain whose value at ``e_j`` is column ``j``."""
        return cls(1, m.cols, m.rows, tuple(m.column(j) for j in range(m.cols)))

    @classmethod
    def constant(cls, source_dim: int, v: Sequence[Fraction]) -> Cochain:
        """Degree-0 cochain, i.e. a vector of ``V``."""
        return cls(0, source_dim, len(v), (tuple(Fraction(x) for x in v),))

    @classmethod
    def random(cls, rng: random.Random, degree: int, source_dim: int, target_dim: int) -> Cochain:
        """Entries drawn uniformly from the integers in ``RANDOM_ENTRY_RANGE``."""
        lo, hi = RANDOM_ENTRY_RANGE
        count = comb(source_dim, degree)
        return cls(
            degree,
            source_dim,
            target_dim,
            tuple(tuple(Fraction(rng.randint(lo, hi)) for _ in range(target_dim)) for _ in range(count)),
        )

    # -- access -------------------------------------------------------------

    def coordinates(self) -> Vector:
        return tuple(x for v in self.values for x in v)

    def to_matrix(self) -> RationalMatrix:
        if self.degree != 1:
            raise DegreeOutOfRange("Cochain.to_matrix", f"degree {self.degree} cochain is not a linear map")
        return RationalMatrix.from_columns(list(self.values), self.target_dim)

    def value_at(self, indices: Sequence[int]) -> Vector:
        """Value at basis vectors ``e_{indices}``, in any order."""
        if len(indices) != self.degree:
            raise DimensionMismatch("Cochain.value_at", f"{len(indices)} arguments for degree {self.degree}")
        sign, ordered = sort_with_sign(indices)
        if sign == 0:
            return zero_vector(self.target_dim)
        value = self.values[_tuple_positions(self.source_dim, self.degree)[ordered]]
        return value if sign == 1 else scale_vector(-1, value)

    def evaluate(self, args: Sequence[Sequence[Fraction]]) -> Vector:
        """Value at arbitrary coordinate vectors, expanded multilinearly."""
        if len(args) != self.degree:
            raise DimensionMismatch("Cochain.evaluate", f"{len(args)} arguments for degree {self.degree}")
        if self.degree == 0:
            return self.values[0]
        supports = [[(k, x) for k, x in enumerate(arg) if x != 0] for arg in args]
        out = [ZERO] * self.target_dim
        for combo in itertools.product(*supports):
            indices = [k for k, _ in combo]
            sign, ordered = sort_with_sign(indices)
            if sign == 0:
                continue
            coeff = Fraction(sign)
            for _, x in combo:
                coeff *= x
            value = self.values[_tuple_positions(self.source_dim, self.degree)[ordered]]
            for t, y in enumerate(value):
                if y != 0:
                    out[t] += coeff * y
        return tuple(out)

    def is_zero(self) -> bool:
        return all(is_zero_vector(v) for v in self.values)

    def map_target(self, m: RationalMatrix) -> Cochain:
        """``m ∘ self``."""
        if m.cols != self.target_dim:
            raise DimensionMismatch("Cochain.map_target", f"matrix {m.shape} after target of dim {self.target_dim}")
        return Cochain(self.degree, self.source_dim, m.rows, tuple(m.apply(v) for v in self.values))

    # -- arithmetic ---------------------------------------------------------

    def _check_same_space(self, other: Cochain, operation: str) -> None:
        if (self.degree, self.source_dim, self.target_dim) != (other.degree, other.source_dim, other.target_dim):
            raise DimensionMismatch(
                operation,
                f"cochain spaces differ: {(self.degree, self.source_dim, self.target_dim)} vs "
                f"{(other.degree, other.source_dim, other.target_dim)}",
            )

    def __add__(self, other: Cochain) -> Cochain:
        self._check_same_space(other, "Cochain.__add__")
        return Cochain(self.degree, self.source_dim, self.target_dim, tuple(add_vectors(a, b) for a, b in zip(self.values, other.values)))

    def __sub__(self, other: Cochain) -> Cochain:
        return self + (-other)

    def __neg__(self) -> Cochain:
        return self.scale(-1)

    def scale(self, c: Fraction | int) -> Cochain:
        return Cochain(self.degree, self.source_dim, self.target_dim, tuple(scale_vector(c, v) for v in self.values))

    # -- serialization ------------------------------------------------------

    def to_document(self) -> dict[str, Any]:
        """JSON form with comma-joined tuple keys; zero values are omitted."""
        values = {
            ",".join(map(str, t)): [format_rational(x) for x in v]
            for t, v in zip(basis_tuples(self.source_dim, self.degree), self.values)
            if not is_zero_vector(v)
        }
        return {"degree": self.degree, "sourceDim": self.source_dim, "targetDim": self.target_dim, "values": values}


@dataclass(frozen=True)
class PairCochain:
    """``(f, g)`` with ``f`` of degree ``n`` and ``g`` of degree ``n − 1``."""

    f: Cochain
    g: Cochain

    def __post_init__(self) -> None:
        if self.g.degree != self.f.degree - 1:
            raise DimensionMismatch("PairCochain", f"degrees {self.f.degree} and {self.g.degree}")
        if (self.f.source_dim, self.f.target_dim) != (self.g.source_dim, self.g.target_dim):
            raise DimensionMismatch("PairCochain", "slots disagree on source or target")

    @property
    def degree(self) -> int:
        return self.f.degree

    def __add__(self, other: PairCochain) -> PairCochain:
        return PairCochain(self.f + other.f, self.g + other.g)

    def __sub__(self, other: PairCochain) -> PairCochain:
        return PairCochain(self.f - other.f, self.g - other.g)

    def __neg__(self) -> PairCochain:
        return PairCochain(-self.f, -self.g)

    def is_zero(self) -> bool:
        return self.f.is_zero() and self.g.is_zero()

    def coordinates(self) -> Vector:
        return self.f.coordinates() + self.g.coordinates()

    def to_document(self) -> dict[str, Any]:
        return {"f": self.f.to_document(), "g": self.g.to_document()}


@dataclass(frozen=True)
class QuadCochain:
    """Cochain of the LieDer complex: ``(f, g, h, s)`` of degrees ``(n, n−1, n−1, n−2)``, or a single ``f`` at ``n = 1``."""

    slots: tuple[Cochain, ...]

    def __post_init__(self) -> None:
        if not self.slots:
            raise DimensionMismatch("QuadCochain", "no slots")
        n = self.slots[0].degree
        expected = (1,) if n == 1 and len(self.slots) == 1 else (n, n - 1, n - 1, n - 2)
        if tuple(s.degree for s in self.slots) != expected:
            raise DimensionMismatch("QuadCochain", f"slot degrees {tuple(s.degree for s in self.slots)}, expected {expected}")
        spaces = {(s.source_dim, s.target_dim) for s in self.slots}
        if len(spaces) != 1:
            raise DimensionMismatch("QuadCochain", "slots disagree on source or target")

    @classmethod
    def of(cls, f: Cochain, g: Cochain | None = None, h: Cochain | None = None, s: Cochain | None = None) -> QuadCochain:
        if g is None and h is None and s is None:
            return cls((f,))
        return cls((f, g, h, s))  # type: ignore[arg-type]

    @classmethod
    def from_pairs(cls, fg: PairCochain, hs: PairCochain) -> QuadCochain:
        return cls((fg.f, fg.g, hs.f, hs.g))

    @property
    def degree(self) -> int:
        return self.slots[0].degree

    @property
    def f(self) -> Cochain:
        return self.slots[0]

    @property
    def fg(self) -> PairCochain:
        return PairCochain(self.slots[0], self.slots[1])

    @property
    def hs(self) -> PairCochain:
        return PairCochain(self.slots[2], self.slots[3])

    def __add__(self, other: QuadCochain) -> QuadCochain:
        return QuadCochain(tuple(a + b for a, b in zip(self.slots, other.slots, strict=True)))

    def __sub__(self, other: QuadCochain) -> QuadCochain:
        return QuadCochain(tuple(a - b for a, b in zip(self.slots, other.slots, strict=True)))

    def __neg__(self) -> QuadCochain:
        return QuadCochain(tuple(-a for a in self.slots))

    def is_zero(self) -> bool:
        return all(s.is_zero() for s in self.slots)

    def coordinates(self) -> Vector:
        return tuple(x for s in self.slots for x in s.coordinates())

    def to_document(self) -> dict[str, Any]:
        if len(self.slots) == 1:
            return {"f": self.f.to_document()}
        return {name: slot.to_document() for name, slot in zip("fghs", self.slots)}


# ---------------------------------------------------------------------------
# Shape checks
# ---------------------------------------------------------------------------

def _check_cochain(r: Representation, f: Cochain, operation: str) -> None:
    if f.source_dim != r.pair.dim or f.target_dim != r.dimV:
        raise DimensionMismatch(
            operation,
            f"cochain {f.source_dim}->{f.target_dim} does not match representation {r.pair.dim}->{r.dimV}",
        )


# ---------------------------------------------------------------------------
# Chevalley-Eilenberg and operator coboundaries
# ---------------------------------------------------------------------------

def _bracket_slot_value(f: Cochain, bracket: Vector, rest: tuple[int, ...]) -> Vector:
    """``f(bracket, e_rest...)`` expanded over the bracket's coordinates."""
    out = zero_vector(f.target_dim)
    for t, c in enumerate(bracket):
        if c != 0:
            out = add_vectors(out, scale_vector(c, f.value_at((t,) + rest)))
    return out


def delta_CE(r: Representation, f: Cochain) -> Cochain:
    """Chevalley-Eilenberg coboundary of ``f`` with coefficients in ``r``."""
    _check_cochain(r, f, "delta_CE")
    n = f.degree
    alg = r.algebra

    def value(I: tuple[int, ...]) -> Vector:
        acc = zero_vector(r.dimV)
        for k in range(n + 1):
            sign = (-1) ** ((k + 1) + n)
            acc = add_vectors(acc, scale_vector(sign, r.rho[I[k]].apply(f.value_at(_without(I, k)))))
        for k, l in itertools.combinations(range(n + 1), 2):
            sign = (-1) ** ((k + 1) + (l + 1) + n + 1)
            term = _bracket_slot_value(f, alg.bracket_basis(I[k], I[l]), _without(I, k, l))
            acc = add_vectors(acc, scale_vector(sign, term))
        return acc

    return Cochain.tabulate(n + 1, f.source_dim, f.target_dim, value)


def delta_mRBO(r: Representation, f: Cochain) -> Cochain:
    """Coboundary of the operator complex, written out term by term.

    Agrees with ``delta_CE`` over the induced bracket ``[a,b]_R`` and
    action ``ρ_R``; :func:`delta_mRBO_induced` computes that route.
    """
    _check_cochain(r, f, "delta_mRBO")
    n = f.degree
    p = r.pair
    alg, R = p.algebra, p.R

    def value(I: tuple[int, ...]) -> Vector:
        acc = zero_vector(r.dimV)
        for k in range(n + 1):
            sign = (-1) ** ((k + 1) + n)
            inner = f.value_at(_without(I, k))
            term = add_vectors(r.act(R.column(I[k]), inner), scale_vector(-1, r.RV.apply(r.rho[I[k]].apply(inner))))
            acc = add_vectors(acc, scale_vector(sign, term))
        for k, l in itertools.combinations(range(n + 1), 2):
            sign = (-1) ** ((k + 1) + (l + 1) + n + 1)
            a, b = alg.basis(I[k]), alg.basis(I[l])
            bracket = add_vectors(alg.bracket(R.column(I[k]), b), alg.bracket(a, R.column(I[l])))
            term = _bracket_slot_value(f, bracket, _without(I, k, l))
            acc = add_vectors(acc, scale_vector(sign, term))
        return acc

    return Cochain.tabulate(n + 1, f.source_dim, f.target_dim, value)


def delta_mRBO_induced(r: Representation, f: Cochain) -> Cochain:
    """``delta_CE`` taken over the induced pair and action."""
    return delta_CE(induced_data(r), f)


# ---------------------------------------------------------------------------
# φ: the map from the CE complex into the operator complex
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PhiTable:
    """Coefficients of ``φⁿ``, per degree ``n`` and number ``r`` of arguments left without ``R``.

    Each ``(n, r)`` carries a pair ``(rv, bare)``: the subset terms with ``r``
    bare arguments enter as ``rv·R_V∘f(...) + bare·f(...)``.  The ``r = 0``
    term ``f(Ra₁, …, Ra_n)`` always has coefficient 1 and ``φ⁰`` is the
    identity.  ``solved`` entries override the convention formula; a table
    with ``convention=None`` has only solved entries.
    """

    weight: Fraction
    convention: PhiConvention | None = DEFAULT_PHI_CONVENTION
    solved: Mapping[tuple[int, int], tuple[Fraction, Fraction]] = field(default_factory=dict)

    @classmethod
    def verbatim(cls, weight: Fraction | int) -> PhiTable:
        return cls(Fraction(weight), PhiConvention.VERBATIM)

    @classmethod
    def corrected(cls, weight: Fraction | int) -> PhiTable:
        return cls(Fraction(weight), PhiConvention.CORRECTED)

    @property
    def name(self) -> str:
        return self.convention.value if self.convention is not None else "calibrated"

    def coefficient(self, degree: int, bare_count: int) -> tuple[Fraction, Fraction]:
        if (degree, bare_count) in self.solved:
            return self.solved[(degree, bare_count)]
        if self.convention is None:
            raise DegreeOutOfRange("PhiTable.coefficient", f"no solved coefficient for degree {degree}, r={bare_count}")
        base = -self.weight
        if bare_count % 2 == 1:
            return -(base ** ((bare_count - 1) // 2)), ZERO
        if self.convention is PhiConvention.VERBATIM:
            return -(base ** (bare_count // 2 + 1)), ZERO
        return ZERO, base ** (bare_count // 2)


PhiLike = PhiTable | PhiConvention | None


def resolve_phi(r: Representation, phi: PhiLike) -> PhiTable:
    """Turn a convention name (or None, the default) into a table at ``r``'s weight."""
    if isinstance(phi, PhiTable):
        return phi
    return PhiTable(r.weight, phi or DEFAULT_PHI_CONVENTION)


def subset_terms(r: Representation, f: Cochain) -> list[Cochain]:
    """``T_k(f) = Σ_{|S|=k} f(args)`` where positions in ``S`` take ``a_i`` and the rest ``R(a_i)``.

    Returns ``[T_0, …, T_n]``; ``T_0`` is ``f(Ra₁, …, Ra_n)``.
    """
    _check_cochain(r, f, "subset_terms")
    n = f.degree
    R = r.pair.R
    alg = r.algebra
    if n == 0:
        return [f]
    by_size: list[dict[tuple[int, ...], Vector]] = [dict() for _ in range(n + 1)]
    for I in basis_tuples(f.source_dim, n):
        bare = [alg.basis(i) for i in I]
        with_r = [R.column(i) for i in I]
        sums = [zero_vector(r.dimV) for _ in range(n + 1)]
        for mask in range(1 << n):
            args = [bare[k] if mask >> k & 1 else with_r[k] for k in range(n)]
            size = bin(mask).count("1")
            sums[size] = add_vectors(sums[size], f.evaluate(args))
        for size in range(n + 1):
            by_size[size][I] = sums[size]
    return [Cochain.tabulate(n, f.source_dim, f.target_dim, lambda I, k=k: by_size[k][I]) for k in range(n + 1)]


def phi(r: Representation, f: Cochain, table: PhiLike = None) -> Cochain:
    """``φⁿ(f)``; identity in degree 0."""
    _check_cochain(r, f, "phi")
    if f.degree == 0:
        return f
    table = resolve_phi(r, table)
    terms = subset_terms(r, f)
    out = terms[0]
    for k in range(1, f.degree + 1):
        rv, bare = table.coefficient(f.degree, k)
        if rv != 0:
            out = out + terms[k].map_target(r.RV).scale(rv)
        if bare != 0:
            out = out + terms[k].scale(bare)
    return out


# ---------------------------------------------------------------------------
# Δ: the derivation part
# ---------------------------------------------------------------------------

def Delta(r: Representation, f: Cochain) -> Cochain:
    """``Δⁿ(f) = Σ_i f(…, d(a_i), …) − d_V∘f``; in degree 0 this is ``−d_V f``."""
    _check_cochain(r, f, "Delta")
    n = f.degree
    alg, d = r.algebra, r.pair.d

    def value(I: tuple[int, ...]) -> Vector:
        acc = scale_vector(-1, r.dV.apply(f.value_at(I)))
        for k in range(n):
            args = [d.column(i) if pos == k else alg.basis(i) for pos, i in enumerate(I)]
            acc = add_vectors(acc, f.evaluate(args))
        return acc

    return Cochain.tabulate(n, f.source_dim, f.target_dim, value)


def Delta_pair(r: Representation, p: PairCochain) -> PairCochain:
    return PairCochain(Delta(r, p.f), Delta(r, p.g))


# ---------------------------------------------------------------------------
# Combined complexes
# ---------------------------------------------------------------------------

def partial_mRBLA(r: Representation, p: PairCochain, table: PhiLike = None) -> PairCochain:
    """``∂(f, g) = (δ_CE f, −δ_mRBO g − φ f)``."""
    if p.degree < 1:
        raise DegreeOutOfRange("partial_mRBLA", f"degree {p.degree} < 1")
    table = resolve_phi(r, table)
    return PairCochain(delta_CE(r, p.f), -delta_mRBO(r, p.g) - phi(r, p.f, table))


def D_mRBLD(r: Representation, q: QuadCochain, table: PhiLike = None) -> QuadCochain:
    """Coboundary of the LieDer complex.

    Degree 1 sends ``f`` to ``(δ_CE f, −φ f, −Δ f, 0)``; from degree 2 on,
    ``((f,g),(h,s)) ↦ (∂(f,g), ∂(h,s) + (−1)ⁿ(Δf, Δg))``.
    """
    table = resolve_phi(r, table)
    n = q.degree
    if len(q.slots) == 1:
        f = q.f
        _check_cochain(r, f, "D_mRBLD")
        return QuadCochain((
            delta_CE(r, f),
            -phi(r, f, table),
            -Delta(r, f),
            Cochain.zero(0, f.source_dim, f.target_dim),
        ))
    for slot in q.slots:
        _check_cochain(r, slot, "D_mRBLD")
    top = partial_mRBLA(r, q.fg, table)
    bottom = partial_mRBLA(r, q.hs, table)
    correction = Delta_pair(r, q.fg)
    if n % 2 == 1:
        correction = -correction
    return QuadCochain.from_pairs(top, bottom + correction)


# ---------------------------------------------------------------------------
# Identity checks
# ---------------------------------------------------------------------------

def verify_chain_maps(
    r: Representation,
    degree: int,
    trials: int = 5,
    seed: int = 0,
    table: PhiLike = None,
) -> ChainMapReport:
    """Evaluate the chain-map identities on ``trials`` random cochains of ``degree``.

    Checks that φ intertwines ``δ_CE`` with ``δ_mRBO``, and that ``Δ``
    commutes with φ, ``δ_CE``, ``δ_mRBO`` and (from degree 1) ``∂_mRBLA``.
    The first failing cochain of each identity is reported.
    """
    if degree < 0:
        raise DegreeOutOfRange("verify_chain_maps", f"degree {degree} is negative")
    table = resolve_phi(r, table)
    rng = random.Random(seed)
    n_a, m = r.pair.dim, r.dimV

    identities: list[tuple[str, Callable[[random.Random], tuple[bool, dict[str, Any]]]]] = []

    def single(lhs: Callable[[Cochain], Cochain], rhs: Callable[[Cochain], Cochain]) -> Callable[[random.Random], tuple[bool, dict[str, Any]]]:
        def run(source: random.Random) -> tuple[bool, dict[str, Any]]:
            f = Cochain.random(source, degree, n_a, m)
            return lhs(f) == rhs(f), {"f": f.to_document()}
        return run

    identities.append(("phi_intertwines_coboundaries", single(
        lambda f: phi(r, delta_CE(r, f), table), lambda f: delta_mRBO(r, phi(r, f, table)))))
    identities.append(("phi_commutes_with_delta", single(
        lambda f: phi(r, Delta(r, f), table), lambda f: Delta(r, phi(r, f, table)))))
    identities.append(("ce_commutes_with_delta", single(
        lambda f: delta_CE(r, Delta(r, f)), lambda f: Delta(r, delta_CE(r, f)))))
    identities.append(("mrbo_commutes_with_delta", single(
        lambda f: delta_mRBO(r, Delta(r, f)), lambda f: Delta(r, delta_mRBO(r, f)))))
    if degree >= 1:
        def pair_check(source: random.Random) -> tuple[bool, dict[str, Any]]:
            p = PairCochain(Cochain.random(source, degree, n_a, m), Cochain.random(source, degree - 1, n_a, m))
            holds = partial_mRBLA(r, Delta_pair(r, p), table) == Delta_pair(r, partial_mRBLA(r, p, table))
            return holds, p.to_document()
        identities.append(("mrbla_commutes_with_delta", pair_check))

    checks = []
    for name, run in identities:
        counterexample = None
        for _ in range(trials):
            holds, witness = run(rng)
            if not holds:
                counterexample = witness
                break
        checks.append(IdentityCheck(identity=name, degree=degree, trials=trials, holds=counterexample is None, counterexample=counterexample))
        logger.debug("identity %s at degree %d holds=%s", name, degree, counterexample is None)
    return ChainMapReport(degree=degree, seed=seed, phi=table.name, checks=checks)


# ---------------------------------------------------------------------------
# Calibration
# ---------------------------------------------------------------------------

def calibrate_phi(
    r: Representation,
    max_degree: int,
    extra: Iterable[Representation] = (),
    trials: int = 4,
    seed: int = 0,
) -> tuple[PhiTable | None, CalibrationReport]:
    """Solve for the φ coefficients that make φ intertwine the two coboundaries.

    Every ``(rv, bare)`` coefficient for degrees ``1..max_degree`` is an
    unknown.  For each representation (all must share ``r``'s weight) and
    each degree ``n < max_degree``, random cochains ``f`` contribute the
    exact linear equations ``φ^{n+1}(δ_CE f) = δ_mRBO(φⁿ f)``.

    Returns the solved table (None when no scalar table exists) and a
    report comparing it with the verbatim coefficients.

    Raises:
        Underdetermined: If the sampled equations leave some unknown free.
    """
    if max_degree < 1:
        raise DegreeOutOfRange("calibrate_phi", f"max degree {max_degree} < 1")
    reps = [r, *extra]
    if any(rep.weight != r.weight for rep in reps):
        raise DimensionMismatch("calibrate_phi", "all representations must share one weight")
    rng = random.Random(seed)
    unknowns = [(n, k, kind) for n in range(1, max_degree + 1) for k in range(1, n + 1) for kind in ("rv", "bare")]
    position = {u: i for i, u in enumerate(unknowns)}

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for rep in reps:
        n_a, m = rep.pair.dim, rep.dimV
        for n in range(max_degree):
            if comb(n_a, n) == 0 or comb(n_a, n + 1) == 0:
                continue
            for _ in range(trials):
                f = Cochain.random(rng, n, n_a, m)
                columns: dict[int, Vector] = {}
                g_terms = subset_terms(rep, delta_CE(rep, f))
                for k in range(1, n + 2):
                    columns[position[(n + 1, k, "rv")]] = g_terms[k].map_target(rep.RV).coordinates()
                    columns[position[(n + 1, k, "bare")]] = g_terms[k].coordinates()
                if n == 0:
                    constant = g_terms[0].coordinates()
                    constant = tuple(a - b for a, b in zip(constant, delta_mRBO(rep, f).coordinates()))
                else:
                    f_terms = subset_terms(rep, f)
                    for k in range(1, n + 1):
                        columns[position[(n, k, "rv")]] = scale_vector(-1, delta_mRBO(rep, f_terms[k].map_target(rep.RV)).coordinates())
                        columns[position[(n, k, "bare")]] = scale_vector(-1, delta_mRBO(rep, f_terms[k]).coordinates())
                    constant = tuple(a - b for a, b in zip(g_terms[0].coordinates(), delta_mRBO(rep, f_terms[0]).coordinates()))
                for row in range(len(constant)):
                    rows.append([columns[u][row] if u in columns else ZERO for u in range(len(unknowns))])
                    rhs.append(-constant[row])

    system = RationalMatrix.from_rows(rows, cols=len(unknowns))
    logger.debug("calibration system: %d equations in %d unknowns", system.rows, system.cols)
    _, pivots = rref(system)
    if len(pivots) < len(unknowns):
        free = [f"degree {n}, r={k}, {kind}" for i, (n, k, kind) in enumerate(unknowns) if i not in set(pivots)]
        raise Underdetermined("calibrate_phi", free)

    verbatim = PhiTable.verbatim(r.weight)
    solution = solve(system, rhs)
    report_rows = []
    table = None
    if solution is not None:
        solved = {
            (n, k): (solution[position[(n, k, "rv")]], solution[position[(n, k, "bare")]])
            for n in range(1, max_degree + 1)
            for k in range(1, n + 1)
        }
        table = PhiTable(r.weight, None, solved)
        for (n, k), (rv, bare) in solved.items():
            v_rv, v_bare = verbatim.coefficient(n, k)
            report_rows.append(CoefficientRow(
                degree=n,
                bare_count=k,
                solved_rv=format_rational(rv),
                solved_bare=format_rational(bare),
                verbatim_rv=format_rational(v_rv),
                verbatim_bare=format_rational(v_bare),
            ))
    report = CalibrationReport(
        weight=format_rational(r.weight),
        max_degree=max_degree,
        seed=seed,
        equations=system.rows,
        unknowns=system.cols,
        consistent=solution is not None,
        rows=report_rows,
    )
    logger.debug("calibration consistent=%s verbatim_consistent=%s", report.consistent, report.verbatim_consistent)
    return table, report


def unit_cochain(degree: int, source_dim: int, target_dim: int, position: int) -> Cochain:
    """The cochain whose coordinate vector is the ``position``-th unit vector."""
    return Cochain.from_coordinates(degree, source_dim, target_dim, unit_vector(comb(source_dim, degree) * target_dim, position))
