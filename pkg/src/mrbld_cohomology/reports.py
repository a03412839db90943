"""Pydantic models for structured outputs, plus the stable text renderer.

Every report serializes to JSON with rationals as ``"p/q"`` strings, so
identical inputs produce byte-identical output.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence

from pydantic import BaseModel, ConfigDict, Field, computed_field

from .constants import Verdict
from .linalg import format_rational


def rational_list(values: Sequence[Fraction]) -> list[str]:
    return [format_rational(v) for v in values]


def matrix_rows(m: Any) -> list[list[str]]:
    """Serialize a RationalMatrix as rows of rational strings."""
    return [rational_list(m.row(i)) for i in range(m.rows)]


class _Report(BaseModel):
    model_config = ConfigDict(extra="forbid")


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

class Violation(_Report):
    """One failed identity instance: which identity, where, and both sides."""

    identity: str
    indices: list[int]
    lhs: list[str]
    rhs: list[str]

    @classmethod
    def of(cls, identity: Any, indices: Sequence[int], lhs: Sequence[Fraction], rhs: Sequence[Fraction]) -> Violation:
        return cls(
            identity=getattr(identity, "value", str(identity)),
            indices=list(indices),
            lhs=rational_list(lhs),
            rhs=rational_list(rhs),
        )


class ValidationReport(_Report):
    """Outcome of a validator: the identities checked and every violation found."""

    subject: str
    checked: list[str] = Field(default_factory=list)
    violations: list[Violation] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def valid(self) -> bool:
        return not self.violations

    def violated_identities(self) -> set[str]:
        return {v.identity for v in self.violations}

    def merged(self, other: ValidationReport) -> ValidationReport:
        return ValidationReport(
            subject=self.subject,
            checked=self.checked + [c for c in other.checked if c not in self.checked],
            violations=self.violations + other.violations,
        )


class TransformReport(_Report):
    """Verdict on a transformed representation at its claimed and alternative weights."""

    mode: str
    parameter: str | None = None
    claimed_weight: str
    claimed_pair: ValidationReport
    claimed_representation: ValidationReport | None = None
    alternative_description: str
    alternative_weight: str
    alternative_pair: ValidationReport
    alternative_representation: ValidationReport | None = None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def claimed_valid(self) -> bool:
        return self.claimed_pair.valid and (self.claimed_representation is None or self.claimed_representation.valid)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def alternative_valid(self) -> bool:
        return self.alternative_pair.valid and (
            self.alternative_representation is None or self.alternative_representation.valid
        )


# ---------------------------------------------------------------------------
# Cochain identities and calibration
# ---------------------------------------------------------------------------

class IdentityCheck(_Report):
    """Pass/fail of one operator identity over sampled cochains."""

    identity: str
    degree: int
    trials: int
    holds: bool
    counterexample: dict[str, Any] | None = None


class ChainMapReport(_Report):
    degree: int
    seed: int
    phi: str
    checks: list[IdentityCheck]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)


class CoefficientRow(_Report):
    degree: int
    bare_count: int
    solved_rv: str
    solved_bare: str
    verbatim_rv: str
    verbatim_bare: str

    @computed_field  # type: ignore[prop-decorator]
    @property
    def matches_verbatim(self) -> bool:
        return self.solved_rv == self.verbatim_rv and self.solved_bare == self.verbatim_bare


class CalibrationReport(_Report):
    weight: str
    max_degree: int
    seed: int
    equations: int
    unknowns: int
    consistent: bool
    rows: list[CoefficientRow] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def verbatim_consistent(self) -> bool:
        return self.consistent and all(r.matches_verbatim for r in self.rows)


# ---------------------------------------------------------------------------
# Cohomology, deformation, extension
# ---------------------------------------------------------------------------

class CohomologyReport(_Report):
    kind: str
    degree: int
    dim_space: int
    dim_z: int
    dim_b: int
    dim_h: int
    representatives: list[dict[str, Any]] = Field(default_factory=list)


class CocycleReport(_Report):
    kind: str
    degree: int
    is_cocycle: bool
    defect: dict[str, Any] | None = None


class OrderReport(_Report):
    """Residuals of the order-n deformation equations."""

    order: int
    checked: list[str] = Field(default_factory=list)
    violations: list[Violation] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passes(self) -> bool:
        return not self.violations

    # Lets exceptions summarise this report like a ValidationReport
    @property
    def valid(self) -> bool:
        return self.passes


class CohomologousReport(_Report):
    matches_coboundary: bool
    same_class: bool
    difference: dict[str, Any]


class RigidityReport(_Report):
    dim_h2: int
    rigid: bool
    statement: str
    candidates: list[dict[str, Any]] = Field(default_factory=list)


class ClassificationReport(_Report):
    equivalent: bool
    witness: list[list[str]] | None = None
    morphism: list[list[str]] | None = None
    morphism_report: ValidationReport | None = None


# ---------------------------------------------------------------------------
# Claim checker
# ---------------------------------------------------------------------------

class ClaimResult(_Report):
    name: str
    verdict: Verdict
    detail: str


class ClaimsReport(_Report):
    seed: int
    trials: int
    results: list[ClaimResult]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def failed(self) -> bool:
        return any(r.verdict is Verdict.FAIL for r in self.results)


# ---------------------------------------------------------------------------
# Text rendering
# ---------------------------------------------------------------------------

def render_text(report: BaseModel) -> str:
    """Stable plain-text rendering: one ``key: value`` line per field.

    Claim reports render one ``VERDICT name — detail`` line per claim and
    validation reports one line per violation, so golden files stay readable.
    """
    if isinstance(report, ClaimsReport):
        lines = [f"seed: {report.seed}", f"trials: {report.trials}"]
        lines += [f"{r.verdict.value} {r.name} — {r.detail}" for r in report.results]
        return "\n".join(lines) + "\n"
    if isinstance(report, ValidationReport):
        lines = [f"subject: {report.subject}", f"valid: {str(report.valid).lower()}"]
        lines += [
            f"violation: {v.identity} at ({', '.join(map(str, v.indices))}) lhs=[{', '.join(v.lhs)}] rhs=[{', '.join(v.rhs)}]"
            for v in report.violations
        ]
        return "\n".join(lines) + "\n"
    data = report.model_dump(mode="json")
    return "".join(_text_lines(data, prefix=""))


def _text_lines(data: Any, prefix: str) -> list[str]:
    lines: list[str] = []
    if isinstance(data, dict):
        for key, value in data.items():
            path = f"{prefix}{key}"
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                lines += _text_lines(value, prefix=f"{path}.")
            else:
                lines.append(f"{path}: {_flat(value)}\n")
    elif isinstance(data, list):
        for i, value in enumerate(data):
            lines += _text_lines(value, prefix=f"{prefix}{i}.") if isinstance(value, (dict, list)) else [f"{prefix}{i}: {_flat(value)}\n"]
    return lines


def _is_flat(value: Any) -> bool:
    return isinstance(value, list) and all(not isinstance(v, (dict, list)) for v in value)


def _flat(value: Any) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if value is None:
        return "null"
    if isinstance(value, list):
        return "[" + ", ".join(_flat(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{}"
    return str(value)
