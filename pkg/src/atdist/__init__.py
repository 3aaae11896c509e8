"""atdist: distance measures between attack trees.

Four measures over ADTool-style attack trees - semantic label distance,
refinement-aware tree edit distance, radical distance and multiset
(attack suite) distance - plus their weighted sum, edit scripts,
operation accounting and similarity-threshold sweeps.
"""

from .adtool import AdtoolParseError, load_file, parse_adtool_xml, serialize_adtool_xml
from .corpus import COUNTEREXAMPLE_NAMES, CORPUS_NAMES, build_counterexample, corpus
from .labeldist import label_distance
from .mapping import NodeMapping, greedy_map, sibling_reorder
from .multiset import SuiteExplosionError, multiset_distance, suites, suites_json
from .radical import Radical, decompose, radical_distance
from .report import (
    DEFAULT_ALPHA,
    DistanceReport,
    compare_all,
    epsilon_sweep,
    pairwise_matrix,
    run_counterexamples,
    wsd,
)
from .report_types import MeasureResult, OpCounts
from .similarity import (
    ConfigError,
    EmbeddingLookupError,
    EmbeddingSimilarity,
    EmbeddingTable,
    ExactSimilarity,
    LevenshteinSimilarity,
    equivalent,
    levenshtein,
    make_provider,
    sim_embedding,
    sim_exact,
    sim_levenshtein_norm,
    similarity_matrix,
)
from .ted import CostConfig, EditOp, TedResult, brute_force_ted, ted_with_reorder, zs_distance
from .tree import AtNode, AttackTree, Refinement, TreeError, postorder, validate

__version__ = "0.1.0"

__all__ = [
    "AdtoolParseError",
    "AtNode",
    "AttackTree",
    "ConfigError",
    "CostConfig",
    "COUNTEREXAMPLE_NAMES",
    "CORPUS_NAMES",
    "DEFAULT_ALPHA",
    "DistanceReport",
    "EditOp",
    "EmbeddingLookupError",
    "EmbeddingSimilarity",
    "EmbeddingTable",
    "ExactSimilarity",
    "LevenshteinSimilarity",
    "MeasureResult",
    "NodeMapping",
    "OpCounts",
    "Radical",
    "Refinement",
    "SuiteExplosionError",
    "TedResult",
    "TreeError",
    "brute_force_ted",
    "build_counterexample",
    "compare_all",
    "corpus",
    "decompose",
    "epsilon_sweep",
    "equivalent",
    "greedy_map",
    "label_distance",
    "levenshtein",
    "load_file",
    "make_provider",
    "multiset_distance",
    "pairwise_matrix",
    "parse_adtool_xml",
    "postorder",
    "radical_distance",
    "run_counterexamples",
    "serialize_adtool_xml",
    "sibling_reorder",
    "sim_embedding",
    "sim_exact",
    "sim_levenshtein_norm",
    "similarity_matrix",
    "suites",
    "suites_json",
    "ted_with_reorder",
    "validate",
    "wsd",
    "zs_distance",
]
