"""``mrbld semidirect`` — the semidirect product pair on ``A ⊕ V``."""

from __future__ import annotations

import argparse
from typing import Any

from ..algebra import semidirect_product
from ..models import RepresentationDocument
from ._helpers import config, emit_pair, read_json


def _run(args: argparse.Namespace) -> int:
    config(args, args.representation)
    rep = RepresentationDocument.model_validate(read_json(args.representation)).to_representation()
    emit_pair(semidirect_product(rep.pair, rep))
    return 0


def register(subparsers: Any) -> None:
    """Register ``semidirect`` on *subparsers*."""
    parser = subparsers.add_parser("semidirect", help="emit the semidirect product pair document")
    parser.add_argument("representation", help="representation JSON (path or data:<name>)")
    parser.set_defaults(handler=_run)
