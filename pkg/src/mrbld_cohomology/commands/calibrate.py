"""``mrbld calibrate`` — solve the φ coefficients and compare them with the verbatim table."""

from __future__ import annotations

import argparse
from typing import Any

from ..algebra import Representation
from ..cochains import calibrate_phi
from ..models import load_pair_or_representation
from ..samples import example_pair, heisenberg_pair, sl2_pair
from ._helpers import add_format, config, emit, exit_code, read_json


def _run(args: argparse.Namespace) -> int:
    cfg = config(args, *args.documents)
    reps = []
    for source in args.documents:
        loaded = load_pair_or_representation(read_json(source))
        reps.append(loaded if isinstance(loaded, Representation) else Representation.adjoint(loaded))
    if not reps:
        reps = [Representation.adjoint(p) for p in (example_pair(), sl2_pair(), heisenberg_pair())]
    _, report = calibrate_phi(reps[0], args.max_degree, extra=reps[1:], trials=cfg.trials, seed=cfg.seed)
    emit(report, cfg.output_format)
    return exit_code(report.consistent)


def register(subparsers: Any) -> None:
    """Register ``calibrate`` on *subparsers*."""
    parser = subparsers.add_parser("calibrate", help="solve the φ coefficient table over sampled cochains")
    parser.add_argument(
        "documents",
        nargs="*",
        help="pairs (adjoint coefficients) or representations of one weight; default: three weight −1 instances",
    )
    parser.add_argument("--max-degree", type=int, default=3, help="highest degree of φ to solve (default: 3)")
    parser.add_argument("--seed", type=int, default=0, help="seed for the sampled cochains (default: 0)")
    parser.add_argument("--trials", type=int, default=4, help="cochains per degree and representation (default: 4)")
    add_format(parser)
    parser.set_defaults(handler=_run)
