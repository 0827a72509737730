"""Burling graphs: triangle-free graphs of unbounded chromatic number,
built two ways and certified clean.

The package constructs the graph family level by level, either through
the stable-set pair procedure (`burling_pair`, `next_pair`) or through
graft operations (`pendent`, `clone`, `join`; `build_graft`), certifies
the clean-graft conditions with extractable witnesses (`is_clean` and
the individual detectors), cross-checks the two constructions by
isomorphism (`check_equivalence`), and bounds chromatic numbers
(`chromatic_number`, `find_non_rainbow_coloring`).
"""

from .errors import (
    BurlingError, InvalidVertexError, InvalidArgumentError, FormatError,
    TipViolationError, ArityError, HomogeneityError, CapError,
    BudgetRequiredError, SearchBudgetExceeded,
)
from .graph import Graph, Graft
from .witness import Witness, WITNESS_KINDS, validate_witness
from .ops import OpRecord, pendent, clone, join
from .patterns import (
    SearchBudget, UNBUDGETED_MAX,
    find_triangle, find_hole, find_wheel, find_theta,
    find_fan, find_guarded_fan, find_mountable_path,
    Verdict, CleanReport, is_clean,
)
from .oracle import ORACLE_MAX, oracle_contains, oracle_scan
from .build import (
    PAIR_CAP, GRAFT_CAP, EQUIV_CAP,
    StablePair, next_pair, burling_pair, graft_from_pair,
    LevelTrace, ConstructionTrace, build_graft, replay_trace,
    check_equivalence,
)
from .coloring import (
    CHROMA_CAP, RAINBOW_CAP,
    Coloring, ChromaticCertificate, is_proper,
    chromatic_number, bounds_only, find_non_rainbow_coloring,
)
from .iso import graph_isomorphic, graft_isomorphic
from . import io

__version__ = "0.1.0"

__all__ = [
    "BurlingError", "InvalidVertexError", "InvalidArgumentError",
    "FormatError", "TipViolationError", "ArityError", "HomogeneityError",
    "CapError", "BudgetRequiredError", "SearchBudgetExceeded",
    "Graph", "Graft",
    "Witness", "WITNESS_KINDS", "validate_witness",
    "OpRecord", "pendent", "clone", "join",
    "SearchBudget", "UNBUDGETED_MAX",
    "find_triangle", "find_hole", "find_wheel", "find_theta",
    "find_fan", "find_guarded_fan", "find_mountable_path",
    "Verdict", "CleanReport", "is_clean",
    "ORACLE_MAX", "oracle_contains", "oracle_scan",
    "PAIR_CAP", "GRAFT_CAP", "EQUIV_CAP",
    "StablePair", "next_pair", "burling_pair", "graft_from_pair",
    "LevelTrace", "ConstructionTrace", "build_graft", "replay_trace",
    "check_equivalence",
    "CHROMA_CAP", "RAINBOW_CAP",
    "Coloring", "ChromaticCertificate", "is_proper",
    "chromatic_number", "bounds_only", "find_non_rainbow_coloring",
    "graph_isomorphic", "graft_isomorphic",
    "io",
]
