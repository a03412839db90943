"""Command-line entry point: registers every command module, then dispatches.

Entry point: ``mrbld`` (see pyproject.toml [project.scripts]).

Exit codes: 0 success, 1 an identity or cocycle condition is violated
(the report says which), 2 malformed input or flags (the message names
the field or flag).
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Sequence

from pydantic import ValidationError

from .commands import (
    calibrate,
    check_claims,
    cohomology,
    deform,
    extend,
    induce,
    semidirect,
    verify,
)
from .constants import EXIT_MALFORMED, EXIT_VIOLATED
from .exceptions import (
    InvalidExtension,
    InvalidPair,
    InvalidRepresentation,
    MRBLDError,
    NotCocycle,
    NotRotaBaxter,
    OrderOneFails,
    SubspaceViolation,
    Underdetermined,
)
from .reports import render_text

logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# Register every command module; each adds its own subparser
# ---------------------------------------------------------------------------
_COMMAND_MODULES = [
    verify,
    cohomology,
    deform,
    extend,
    induce,
    semidirect,
    calibrate,
    check_claims,
]

# Errors that mean "the mathematics said no" rather than "the input is broken"
_VIOLATIONS = (
    InvalidPair,
    InvalidRepresentation,
    InvalidExtension,
    OrderOneFails,
    NotCocycle,
    NotRotaBaxter,
    SubspaceViolation,
    Underdetermined,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mrbld",
        description="Exact cohomology, deformations and extensions of modified Rota-Baxter LieDer pairs.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for mod in _COMMAND_MODULES:
        mod.register(subparsers)
    return parser


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def _describe_validation_error(exc: ValidationError) -> str:
    first = exc.errors()[0]
    location = ".".join(str(part) for part in first["loc"]) or "document"
    return f"invalid {location}: {first['msg']}"


def run(argv: Sequence[str] | None = None) -> int:
    """Parse *argv*, run the chosen command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_MALFORMED
    _configure_logging(args.verbose)
    logger.debug("running %s", args.command)
    try:
        return args.handler(args)
    except _VIOLATIONS as exc:
        print(f"error: {exc}", file=sys.stderr)
        report = getattr(exc, "report", None)
        if report is not None:
            print(render_text(report), end="")
        return EXIT_VIOLATED
    except ValidationError as exc:
        print(f"error: {_describe_validation_error(exc)}", file=sys.stderr)
        return EXIT_MALFORMED
    except MRBLDError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


def main() -> None:
    """Console entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
