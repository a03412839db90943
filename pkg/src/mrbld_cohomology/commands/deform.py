"""``mrbld deform`` — order-n equations, infinitesimals, transport and rigidity for jets."""

from __future__ import annotations

import argparse
from typing import Any

from ..algebra import MRBLieDerPair
from ..deformation import (
    DeformationJet,
    apply_equivalence,
    check_order,
    infinitesimal,
    infinitesimals_cohomologous,
    rigidity_report,
)
from ..models import EquivalenceDocument, JetDocument
from ._helpers import add_format, add_phi, config, emit, emit_document, exit_code, load_pair, read_json


def _jet(source: str, base: MRBLieDerPair) -> DeformationJet:
    return JetDocument.model_validate(read_json(source)).to_domain(base)


def _check(args: argparse.Namespace) -> int:
    cfg = config(args, args.pair, args.jet)
    jet = _jet(args.jet, load_pair(args.pair))
    report = check_order(jet, cfg.order or 1)
    emit(report, cfg.output_format)
    return exit_code(report.passes)


def _infinitesimal(args: argparse.Namespace) -> int:
    cfg = config(args, args.pair, args.jet)
    jet = _jet(args.jet, load_pair(args.pair))
    emit_document(infinitesimal(jet, cfg.phi).to_document())
    return 0


def _transport(args: argparse.Namespace) -> int:
    config(args, args.pair, args.jet, args.equivalence)
    base = load_pair(args.pair)
    jet = _jet(args.jet, base)
    e = EquivalenceDocument.model_validate(read_json(args.equivalence)).to_domain(base.dim)
    emit_document(JetDocument.from_domain(apply_equivalence(jet, e)))
    return 0


def _cohomologous(args: argparse.Namespace) -> int:
    cfg = config(args, args.pair, args.jet, args.equivalence)
    base = load_pair(args.pair)
    jet = _jet(args.jet, base)
    e = EquivalenceDocument.model_validate(read_json(args.equivalence)).to_domain(base.dim)
    report = infinitesimals_cohomologous(jet, apply_equivalence(jet, e), e, cfg.phi)
    emit(report, cfg.output_format)
    return exit_code(report.matches_coboundary)


def _rigidity(args: argparse.Namespace) -> int:
    cfg = config(args, args.pair)
    emit(rigidity_report(load_pair(args.pair), cfg.phi), cfg.output_format)
    return 0


def register(subparsers: Any) -> None:
    """Register ``deform`` and its actions on *subparsers*."""
    parser = subparsers.add_parser("deform", help="formal deformation jets")
    actions = parser.add_subparsers(dest="action", required=True)

    check = actions.add_parser("check", help="residuals of the order-n equations")
    check.add_argument("pair")
    check.add_argument("jet")
    check.add_argument("--order", type=int, default=1, help="coefficient of t to check (default: 1)")
    add_format(check)
    check.set_defaults(handler=_check)

    inf = actions.add_parser("infinitesimal", help="emit (μ₁, R₁, d₁, 0) after checking it is a cocycle")
    inf.add_argument("pair")
    inf.add_argument("jet")
    add_phi(inf)
    inf.set_defaults(handler=_infinitesimal)

    transport = actions.add_parser("transport", help="emit the jet transported along an equivalence")
    transport.add_argument("pair")
    transport.add_argument("jet")
    transport.add_argument("equivalence")
    transport.set_defaults(handler=_transport)

    cohomologous = actions.add_parser("cohomologous", help="compare infinitesimals before and after transport")
    cohomologous.add_argument("pair")
    cohomologous.add_argument("jet")
    cohomologous.add_argument("equivalence")
    add_phi(cohomologous)
    add_format(cohomologous)
    cohomologous.set_defaults(handler=_cohomologous)

    rigidity = actions.add_parser("rigidity", help="dim H² with adjoint coefficients and its verdict")
    rigidity.add_argument("pair")
    add_phi(rigidity)
    add_format(rigidity)
    rigidity.set_defaults(handler=_rigidity)
