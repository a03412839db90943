"""``mrbld induce`` — the induced pair ``[a,b]_R = [Ra,b] + [a,Rb]`` (and induced representation)."""

from __future__ import annotations

import argparse
from typing import Any

from ..algebra import Representation, induced_pair, induced_representation
from ..models import load_pair_or_representation
from ._helpers import config, emit_pair, emit_representation, read_json


def _run(args: argparse.Namespace) -> int:
    config(args, args.document)
    loaded = load_pair_or_representation(read_json(args.document))
    if isinstance(loaded, Representation):
        emit_representation(induced_representation(loaded))
    else:
        emit_pair(induced_pair(loaded))
    return 0


def register(subparsers: Any) -> None:
    """Register ``induce`` on *subparsers*."""
    parser = subparsers.add_parser("induce", help="emit the induced pair or representation document")
    parser.add_argument("document", help="pair or representation JSON (path or data:<name>)")
    parser.set_defaults(handler=_run)
