"""Custom exceptions for modified Rota-Baxter LieDer computations.

Hierarchy::

    MRBLDError (base — catch any library issue)
    ├── DocumentError (malformed input document or flag)
    └── OperationFailed (an operation's precondition or shape check failed)
        ├── DimensionMismatch
        ├── DegreeOutOfRange
        ├── SubspaceViolation
        ├── Underdetermined
        ├── NotRotaBaxter
        ├── InvalidPair
        ├── InvalidRepresentation
        ├── InvalidExtension
        ├── NotCocycle
        └── OrderOneFails

Validators never raise for invalid data; they return reports.  The
exceptions that wrap a report keep it on ``.report`` so callers (and the
CLI) can print the counterexamples.
"""

from __future__ import annotations

from typing import Any


class MRBLDError(Exception):
    """Base exception for all mrbld-cohomology errors."""


class DocumentError(MRBLDError):
    """Raised when an input document or command-line value cannot be parsed."""

    def __init__(self, field: str, detail: str):
        # The field path is always part of the message so exit-2 output names it
        self.field = field
        self.detail = detail
        super().__init__(f"invalid {field}: {detail}")


class OperationFailed(MRBLDError):
    """Raised when an operation cannot produce a result for its inputs."""

    def __init__(self, operation: str, detail: str = ""):
        self.operation = operation
        msg = f"operation failed: {operation}"
        if detail:
            msg += f" — {detail}"
        super().__init__(msg)


class DimensionMismatch(OperationFailed):
    """Raised when matrices, cochains or representations disagree in shape."""


class DegreeOutOfRange(OperationFailed):
    """Raised for a degree outside a complex's valid range."""


class SubspaceViolation(OperationFailed):
    """Raised when a spanning set is not contained in the claimed superspace."""

    def __init__(self, operation: str, column: int):
        self.column = column
        super().__init__(operation, f"column {column} lies outside the larger span")


class Underdetermined(OperationFailed):
    """Raised when a linear system does not pin every unknown."""

    def __init__(self, operation: str, free: list[str]):
        self.free = free
        super().__init__(operation, f"unknowns not pinned: {', '.join(free)}")


class NotRotaBaxter(OperationFailed):
    """Raised when (algebra, T, d, λ) is not a Rota-Baxter LieDer triple.

    ``identity`` names the failed hypothesis.  When the algebra itself is not
    a Lie algebra, ``identity`` is the Rota-Baxter identity and ``report``
    carries the failing Lie report.
    """

    def __init__(self, identity: str, indices: tuple[int, ...], report: Any = None):
        self.identity = identity
        self.indices = indices
        self.report = report
        detail = f"{identity} violated at {indices}"
        if report is not None:
            detail = f"{identity} undefined, base algebra is not Lie: {_summarise(report)}"
        super().__init__("from_rota_baxter", detail)


class _ReportError(OperationFailed):
    """Shared base for errors that carry a failing validation report."""

    def __init__(self, operation: str, report: Any, detail: str = ""):
        self.report = report
        super().__init__(operation, detail or _summarise(report))


class InvalidPair(_ReportError):
    """Raised when a pair fails validate_pair where validity is required."""


class InvalidRepresentation(_ReportError):
    """Raised when a representation fails validation where it is required."""


class InvalidExtension(_ReportError):
    """Raised when an extension presentation breaks its structural invariants."""


class NotCocycle(OperationFailed):
    """Raised when a cochain is not killed by the next coboundary."""

    def __init__(self, operation: str, defect: Any):
        self.defect = defect
        super().__init__(operation, "coboundary of the input is nonzero")


class OrderOneFails(_ReportError):
    """Raised when a deformation jet does not satisfy its order-one equations."""


def _summarise(report: Any) -> str:
    violations = getattr(report, "violations", None)
    if not violations:
        return ""
    first = violations[0]
    return f"{len(violations)} violation(s), first: {first.identity} at {tuple(first.indices)}"
