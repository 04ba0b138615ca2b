"""
Pattern-triggered stack sorting maps, preimage enumeration, witness
families, and a claim verification harness.
"""

from .constructions import (
    FAMILIES,
    ConstructionFamily,
    construct,
    construct_preimages,
    expected_fertility,
    min_n,
    small_witness,
)
from .fertility import (
    MAX_ENUM_N,
    EnumerationLimitError,
    FertilityReport,
    SpectrumTable,
    fertility,
    preimages,
    spectrum,
)
from .perm_core import (
    PATTERNS,
    Perm,
    as_pattern,
    as_perm,
    complement,
    format_perm,
    index_of,
    parse_perm,
    reverse,
    standardize,
)
from .sc_machine import (
    EventKind,
    MachineEvent,
    MachineTrace,
    combination_view,
    cro,
    format_trace,
    sc_map,
    sc_trace,
)
from .verify import CLAIM_IDS, ClaimResult, format_report, results_json, run_claims

__version__ = "0.1.0"

__all__ = [
    "CLAIM_IDS",
    "ClaimResult",
    "ConstructionFamily",
    "EnumerationLimitError",
    "EventKind",
    "FAMILIES",
    "FertilityReport",
    "MachineEvent",
    "MachineTrace",
    "MAX_ENUM_N",
    "PATTERNS",
    "Perm",
    "SpectrumTable",
    "as_pattern",
    "as_perm",
    "combination_view",
    "complement",
    "construct",
    "construct_preimages",
    "cro",
    "expected_fertility",
    "fertility",
    "format_perm",
    "format_report",
    "format_trace",
    "index_of",
    "min_n",
    "parse_perm",
    "preimages",
    "results_json",
    "reverse",
    "run_claims",
    "sc_map",
    "sc_trace",
    "small_witness",
    "spectrum",
    "standardize",
    "__version__",
]
