"""pictosem: semantic analysis of unordered icon sequences.

Interprets short, agrammatical sequences of vocabulary symbols by
case-filling unification over a feature-based lexicon, producing a typed
semantic network and, through template realisation, a French sentence.
Designed as the language engine behind icon-board communication aids.
"""

from .analyzer import (
    AnalyzerConfig,
    CaseAssignment,
    DEFAULT_CONFIG,
    SCORE_TOLERANCE,
    UnificationCandidate,
    analyze,
    best_assignment,
    best_assignment_matching,
    compatibility,
    enumerate_assignments,
    scan_candidates,
    unification_value,
)
from .bench import BenchReport, GoldItem, categorize, load_corpus, run_benchmark
from .lexicon import (
    CaseFrame,
    CaseSlot,
    Domain,
    FeatureSet,
    Lexicon,
    SymbolEntry,
    Taxeme,
    ValidationReport,
    lexicon_from_dict,
    lexicon_from_json,
    lexicon_to_dict,
    lexicon_to_json,
    load_lexicon,
    validate_lexicon,
)
from .network import (
    Arc,
    SemanticNetwork,
    Vertex,
    network_from_json,
    serialize_network,
    to_canonical_json,
    to_dot,
)
from .realizer import (
    LemmaEntry,
    RealizationTemplate,
    lexical_choice,
    load_dictionary,
    load_templates,
    realize,
    transfer,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyzerConfig",
    "Arc",
    "BenchReport",
    "CaseAssignment",
    "CaseFrame",
    "CaseSlot",
    "DEFAULT_CONFIG",
    "Domain",
    "FeatureSet",
    "GoldItem",
    "LemmaEntry",
    "Lexicon",
    "RealizationTemplate",
    "SCORE_TOLERANCE",
    "SemanticNetwork",
    "SymbolEntry",
    "Taxeme",
    "UnificationCandidate",
    "ValidationReport",
    "Vertex",
    "analyze",
    "best_assignment",
    "best_assignment_matching",
    "categorize",
    "compatibility",
    "enumerate_assignments",
    "lexical_choice",
    "lexicon_from_dict",
    "lexicon_from_json",
    "lexicon_to_dict",
    "lexicon_to_json",
    "load_corpus",
    "load_dictionary",
    "load_lexicon",
    "load_templates",
    "network_from_json",
    "realize",
    "run_benchmark",
    "scan_candidates",
    "serialize_network",
    "to_canonical_json",
    "to_dot",
    "transfer",
    "unification_value",
    "validate_lexicon",
]
