"""``mrbld verify`` — validate a pair or representation document.

With ``--transform`` the representation is scaled or reflected first and
the report says which weight (claimed or alternative) actually validates.
"""

from __future__ import annotations

import argparse
from typing import Any

from ..algebra import Representation, transform_representation, validate_pair, validate_representation
from ..constants import TransformMode
from ..exceptions import DocumentError
from ..linalg import parse_rational
from ..models import load_pair_or_representation
from ._helpers import add_format, config, emit, exit_code, read_json


def _run(args: argparse.Namespace) -> int:
    cfg = config(args, args.document)
    loaded = load_pair_or_representation(read_json(args.document))
    if args.transform is not None:
        if not isinstance(loaded, Representation):
            raise DocumentError("--transform", "needs a representation document")
        kappa = parse_rational(args.kappa, "--kappa")
        _, transformed = transform_representation(loaded, TransformMode(args.transform), kappa)
        emit(transformed, cfg.output_format)
        return exit_code(transformed.claimed_valid)
    if isinstance(loaded, Representation):
        result = validate_representation(loaded)
    else:
        result = validate_pair(loaded)
    emit(result, cfg.output_format)
    return exit_code(result.valid)


def register(subparsers: Any) -> None:
    """Register ``verify`` on *subparsers*."""
    parser = subparsers.add_parser("verify", help="check every identity of a pair or representation")
    parser.add_argument("document", help="pair or representation JSON (path or data:<name>)")
    parser.add_argument("--transform", choices=[m.value for m in TransformMode], help="scale or reflect the operators first")
    parser.add_argument("--kappa", default="1", help="scale factor for --transform scale (default: 1)")
    add_format(parser)
    parser.set_defaults(handler=_run)
