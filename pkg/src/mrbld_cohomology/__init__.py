"""Exact cohomology, deformation and extension toolkit for modified Rota-Baxter LieDer pairs."""

from .algebra import (
    LieAlgebra,
    MRBLieDerPair,
    PairMorphism,
    Representation,
    validate_morphism,
    validate_pair,
    validate_representation,
)
from .cochains import Cochain, PairCochain, PhiTable, QuadCochain
from .cohomology import cohomology, in_coboundaries, is_cocycle
from .constants import ComplexKind, PhiConvention
from .deformation import DeformationJet, EquivalenceJet
from .exceptions import MRBLDError
from .extension import CocycleTriple, CoefficientSpace, ExtensionPresentation

__version__ = "0.1.0"

__all__ = [
    "Cochain",
    "CocycleTriple",
    "CoefficientSpace",
    "ComplexKind",
    "DeformationJet",
    "EquivalenceJet",
    "ExtensionPresentation",
    "LieAlgebra",
    "MRBLDError",
    "MRBLieDerPair",
    "PairCochain",
    "PairMorphism",
    "PhiConvention",
    "PhiTable",
    "QuadCochain",
    "Representation",
    "cohomology",
    "in_coboundaries",
    "is_cocycle",
    "validate_morphism",
    "validate_pair",
    "validate_representation",
]
