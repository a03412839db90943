"""``mrbld cohomology`` — dimensions and representatives of one cohomology space."""

from __future__ import annotations

import argparse
from typing import Any

from ..algebra import validate_representation
from ..cohomology import cohomology
from ..constants import ComplexKind
from ..exceptions import InvalidRepresentation
from ._helpers import ADJOINT, add_format, add_phi, config, emit, load_pair, load_representation


def _run(args: argparse.Namespace) -> int:
    cfg = config(args, args.pair, args.rep)
    pair = load_pair(args.pair)
    rep = load_representation(args.rep, pair)
    report = validate_representation(rep)
    if not report.valid:
        raise InvalidRepresentation("cohomology", report)
    result = cohomology(rep, cfg.complex or ComplexKind.MRBLD, cfg.degree if cfg.degree is not None else 2, cfg.phi)
    emit(result.to_report(), cfg.output_format)
    return 0


def register(subparsers: Any) -> None:
    """Register ``cohomology`` on *subparsers*."""
    parser = subparsers.add_parser("cohomology", help="compute dim Z, dim B, dim H and representatives")
    parser.add_argument("pair", help="pair JSON (path or data:<name>)")
    parser.add_argument("--rep", default=ADJOINT, help="representation JSON, or 'adjoint' (default)")
    parser.add_argument("--complex", choices=[k.value for k in ComplexKind], default=ComplexKind.MRBLD.value)
    parser.add_argument("--degree", type=int, default=2, help="cohomological degree (default: 2)")
    add_phi(parser)
    add_format(parser)
    parser.set_defaults(handler=_run)
