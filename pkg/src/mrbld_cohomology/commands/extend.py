"""``mrbld extend`` — build, read back and classify abelian extensions."""

from __future__ import annotations

import argparse
from typing import Any

from ..extension import (
    ExtensionPresentation,
    build_extension,
    canonical_section,
    classify,
    extract_cocycle,
    induced_rep_from_section,
)
from ..models import CocycleTripleDocument, ModuleDocument
from ._helpers import (
    add_format,
    add_phi,
    config,
    emit,
    emit_document,
    emit_pair,
    emit_representation,
    exit_code,
    load_pair,
    read_json,
)


def _presentation(base_source: str, total_source: str) -> ExtensionPresentation:
    base = load_pair(base_source)
    total = load_pair(total_source)
    return ExtensionPresentation(base, total, canonical_section(base.dim, total.dim - base.dim))


def _build(args: argparse.Namespace) -> int:
    cfg = config(args, args.pair, args.module, args.cocycle)
    V = ModuleDocument.model_validate(read_json(args.module)).to_domain()
    t = CocycleTripleDocument.model_validate(read_json(args.cocycle)).to_domain()
    emit_pair(build_extension(load_pair(args.pair), V, t, cfg.phi).total)
    return 0


def _extract(args: argparse.Namespace) -> int:
    config(args, args.pair, args.total)
    emit_document(extract_cocycle(_presentation(args.pair, args.total)).to_document())
    return 0


def _induced(args: argparse.Namespace) -> int:
    config(args, args.pair, args.total)
    rep, report = induced_rep_from_section(_presentation(args.pair, args.total))
    emit_representation(rep)
    return exit_code(report.valid)


def _classify(args: argparse.Namespace) -> int:
    cfg = config(args, args.pair, args.module, args.first, args.second)
    V = ModuleDocument.model_validate(read_json(args.module)).to_domain()
    t1 = CocycleTripleDocument.model_validate(read_json(args.first)).to_domain()
    t2 = CocycleTripleDocument.model_validate(read_json(args.second)).to_domain()
    emit(classify(load_pair(args.pair), V, t1, t2, cfg.phi), cfg.output_format)
    return 0


def register(subparsers: Any) -> None:
    """Register ``extend`` and its actions on *subparsers*."""
    parser = subparsers.add_parser("extend", help="abelian extensions by (V, R_V, d_V)")
    actions = parser.add_subparsers(dest="action", required=True)

    build = actions.add_parser("build", help="emit the extension pair of a cocycle triple")
    build.add_argument("pair")
    build.add_argument("module")
    build.add_argument("cocycle")
    add_phi(build)
    build.set_defaults(handler=_build)

    extract = actions.add_parser("extract", help="emit the cocycle triple of an extension (canonical section)")
    extract.add_argument("pair")
    extract.add_argument("total")
    extract.set_defaults(handler=_extract)

    induced = actions.add_parser("induced-rep", help="emit ρ(a)u = [s(a), u] with R_V, d_V")
    induced.add_argument("pair")
    induced.add_argument("total")
    induced.set_defaults(handler=_induced)

    cls = actions.add_parser("classify", help="decide equivalence of two extensions and give the witness")
    cls.add_argument("pair")
    cls.add_argument("module")
    cls.add_argument("first")
    cls.add_argument("second")
    add_phi(cls)
    add_format(cls)
    cls.set_defaults(handler=_classify)
