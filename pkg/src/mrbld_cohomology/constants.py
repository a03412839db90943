"""Enums and constants shared across the library and the command line."""

from enum import Enum


class ComplexKind(str, Enum):
    """The four cochain complexes of a representation."""

    CE = "ce"
    MRBO = "mrbo"
    MRBLA = "mrbla"
    MRBLD = "mrbld"


class Identity(str, Enum):
    """Names of the identities checked by validators and residual reports."""

    ANTISYMMETRY = "antisymmetry"
    JACOBI = "jacobi"
    MODIFIED_ROTA_BAXTER = "modified_rota_baxter"
    DERIVATION = "derivation"
    OPERATOR_COMMUTATION = "operator_commutation"
    ROTA_BAXTER = "rota_baxter"
    REP_BRACKET = "representation_bracket"
    REP_OPERATOR = "representation_operator"
    REP_DERIVATION = "representation_derivation"
    REP_COMMUTATION = "representation_commutation"
    MORPHISM_BRACKET = "morphism_bracket"
    MORPHISM_DERIVATION = "morphism_derivation"
    MORPHISM_OPERATOR = "morphism_operator"
    KERNEL_IDEAL = "kernel_ideal"
    KERNEL_ABELIAN = "kernel_abelian"
    KERNEL_CENTRAL = "kernel_central"
    KERNEL_OPERATOR = "kernel_operator_invariant"
    KERNEL_DERIVATION = "kernel_derivation_invariant"
    SECTION = "section_right_inverse"


class TransformMode(str, Enum):
    """Representation transforms whose validity is reported, not assumed."""

    SCALE = "scale"
    REFLECT = "reflect"


class PhiConvention(str, Enum):
    """Coefficient tables for the map from the CE complex to the operator complex.

    VERBATIM uses −(−λ)^{r/2+1}·R_V∘f for an even number r of bare arguments.
    CORRECTED uses +(−λ)^{r/2}·f there, which is what calibration solves for.
    """

    VERBATIM = "verbatim"
    CORRECTED = "corrected"


class OutputFormat(str, Enum):
    """Report formats accepted by --format."""

    TEXT = "text"
    JSON = "json"


class Verdict(str, Enum):
    """Outcome of one claim in the claim checker."""

    PASS = "PASS"
    FAIL = "FAIL"
    FINDING = "FINDING"


DEFAULT_PHI_CONVENTION = PhiConvention.CORRECTED

# Cochain entries are drawn uniformly from this closed integer range
RANDOM_ENTRY_RANGE = (-5, 5)

# Exit codes of every subcommand
EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_MALFORMED = 2
