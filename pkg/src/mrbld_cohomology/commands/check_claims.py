"""``mrbld paper-check`` — run every structural claim against the seeded sampler."""

from __future__ import annotations

import argparse
from typing import Any

from ..claims import run_claims
from ._helpers import add_format, add_sampling, config, emit, exit_code


def _run(args: argparse.Namespace) -> int:
    cfg = config(args)
    report = run_claims(cfg.seed, cfg.trials)
    emit(report, cfg.output_format)
    return exit_code(not report.failed)


def register(subparsers: Any) -> None:
    """Register ``paper-check`` (alias ``check-claims``) on *subparsers*."""
    parser = subparsers.add_parser(
        "paper-check",
        aliases=["check-claims"],
        help="one PASS/FAIL/FINDING line per claim",
    )
    add_sampling(parser)
    add_format(parser)
    parser.set_defaults(handler=_run)
