"""Shared test fixtures: named pairs, their adjoint representations and a seeded sampler.

Every fixture is built fresh per test; the value types are immutable, so
tests may share them freely once built.

* ``example``        — ``[e₁,e₂] = e₂``, weight −1, ``R = diag(2, 1)``, ``d = diag(0, 3)``.
* ``example_adjoint`` — adjoint representation of ``example``.
* ``abelian_zero``   — two-dimensional abelian pair with every operator zero.
* ``zero_adjoint``   — adjoint representation of ``abelian_zero`` (all data zero).
* ``sampler``        — ``InstanceSampler(0)``; every random instance comes from here.

``write_json`` writes a document into ``tmp_path`` for the CLI tests.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Callable

import pytest

from mrbld_cohomology.algebra import MRBLieDerPair, Representation
from mrbld_cohomology.samples import InstanceSampler, abelian_zero_pair, example_pair


@pytest.fixture
def example() -> MRBLieDerPair:
    """The worked two-dimensional pair."""
    return example_pair()


@pytest.fixture
def example_adjoint(example: MRBLieDerPair) -> Representation:
    return Representation.adjoint(example)


@pytest.fixture
def abelian_zero() -> MRBLieDerPair:
    """Abelian, weight 0, ``R = d = 0``: every coboundary vanishes."""
    return abelian_zero_pair(2)


@pytest.fixture
def zero_adjoint(abelian_zero: MRBLieDerPair) -> Representation:
    return Representation.adjoint(abelian_zero)


@pytest.fixture
def sampler() -> InstanceSampler:
    return InstanceSampler(0)


@pytest.fixture
def write_json(tmp_path: Path) -> Callable[[str, Any], str]:
    """Write a JSON document (or raw text) to ``tmp_path`` and return its path."""

    def write(name: str, document: Any) -> str:
        path = tmp_path / name
        text = document if isinstance(document, str) else json.dumps(document)
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write
