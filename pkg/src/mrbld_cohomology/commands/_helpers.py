"""Shared helpers used by multiple command modules.

Document loading (files or shipped ``data:<name>`` documents), option
validation through ``RunConfig``, and report emission all live here so
each command module only wires arguments to library calls.
"""

from __future__ import annotations

import argparse
import json
from importlib import resources
from pathlib import Path
from typing import Any

from pydantic import BaseModel

from ..algebra import MRBLieDerPair, Representation
from ..constants import EXIT_OK, EXIT_VIOLATED, ComplexKind, OutputFormat, PhiConvention
from ..exceptions import DocumentError
from ..models import PairDocument, RepresentationDocument, RunConfig, load_pair_or_representation
from ..reports import render_text

DATA_PREFIX = "data:"
ADJOINT = "adjoint"


def read_json(source: str) -> Any:
    """Parse a JSON document from a path or a shipped ``data:<name>`` document.

    Raises:
        DocumentError: If the source is missing or is not valid JSON.
    """
    try:
        if source.startswith(DATA_PREFIX):
            name = source[len(DATA_PREFIX):]
            text = resources.files("mrbld_cohomology.data").joinpath(f"{name}.json").read_text(encoding="utf-8")
        else:
            text = Path(source).read_text(encoding="utf-8")
    except (FileNotFoundError, IsADirectoryError) as exc:
        raise DocumentError(source, "no such document") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(source, f"malformed JSON at line {exc.lineno}: {exc.msg}") from exc


def load_pair(source: str) -> MRBLieDerPair:
    """The pair of a pair document, or the underlying pair of a representation document."""
    loaded = load_pair_or_representation(read_json(source))
    return loaded.pair if isinstance(loaded, Representation) else loaded


def load_representation(source: str | None, pair: MRBLieDerPair) -> Representation:
    """``adjoint`` (or no source) gives the adjoint representation of *pair*."""
    if source is None or source == ADJOINT:
        return Representation.adjoint(pair)
    rep = RepresentationDocument.model_validate(read_json(source)).to_representation()
    if rep.pair != pair:
        raise DocumentError(source, "representation belongs to a different pair")
    return rep


# ---------------------------------------------------------------------------
# Options
# ---------------------------------------------------------------------------

def add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        dest="output_format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.TEXT.value,
        help="report format (default: text)",
    )


def add_phi(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--phi",
        choices=[p.value for p in PhiConvention],
        default=PhiConvention.CORRECTED.value,
        help="coefficient table for φ (default: corrected)",
    )


def add_sampling(parser: argparse.ArgumentParser, trials: int = 5) -> None:
    parser.add_argument("--seed", type=int, default=0, help="seed of the instance sampler (default: 0)")
    parser.add_argument("--trials", type=int, default=trials, help=f"random trials per check (default: {trials})")


def config(args: argparse.Namespace, *inputs: str | None) -> RunConfig:
    """Validate the parsed options; a bad value raises pydantic's ValidationError naming the flag."""
    return RunConfig(
        command=args.command,
        inputs=[i for i in inputs if i is not None],
        seed=getattr(args, "seed", 0),
        trials=getattr(args, "trials", 5),
        degree=getattr(args, "degree", None),
        order=getattr(args, "order", None),
        complex=ComplexKind(args.complex) if getattr(args, "complex", None) else None,
        output_format=OutputFormat(getattr(args, "output_format", OutputFormat.TEXT.value)),
        phi=PhiConvention(getattr(args, "phi", PhiConvention.CORRECTED.value)),
    )


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------

def emit(report: BaseModel, fmt: OutputFormat) -> None:
    """Print a report to stdout; JSON output is indented and key order is fixed by the model."""
    if fmt is OutputFormat.JSON:
        print(report.model_dump_json(indent=2))
    else:
        print(render_text(report), end="")


def emit_document(document: BaseModel | dict[str, Any]) -> None:
    """Documents are always JSON so they can be fed back into other commands."""
    if isinstance(document, BaseModel):
        print(document.model_dump_json(indent=2))
    else:
        print(json.dumps(document, indent=2, ensure_ascii=False))


def emit_pair(p: MRBLieDerPair) -> None:
    emit_document(PairDocument.from_domain(p))


def emit_representation(r: Representation) -> None:
    emit_document(RepresentationDocument.from_representation(r))


def exit_code(valid: bool) -> int:
    return EXIT_OK if valid else EXIT_VIOLATED
