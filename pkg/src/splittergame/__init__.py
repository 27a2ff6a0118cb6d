"""splittergame: exact solver, verifier, and playground for the splitter game.

The radius-r splitter game is played on a graph between a connector and a
splitter: the connector picks a vertex, the arena shrinks to that vertex's
closed radius-r ball, the splitter deletes one vertex, and the splitter wins
when the arena is empty. This package computes exact splitter ranks and
optimal moves, enumerates progressing moves, extracts small rank-preserving
witness subgraphs with certificates, certifies the associated bounds over
graph corpora, and serves an interactive play API.
"""

__version__ = "0.1.0"

from .engine import (
    ConnectorAnalysis,
    EngineConfig,
    EngineLimitError,
    NAIVE_LIMIT,
    RankAnalysis,
    RankEngine,
    analyze,
    connector_value,
    naive_rank,
    progressing_moves,
    splitter_rank,
)
from .generators import (
    FAMILIES,
    FamilySpec,
    GeneratorError,
    SplitMix64,
    all_labeled_graphs,
    generate,
    parse_family_spec,
)
from .graphs import (
    Arena,
    EdgeListError,
    Graph,
    GraphError,
    ball_mask,
    bits,
    graph_from_json,
    graph_from_obj,
    graph_to_edge_list,
    graph_to_json,
    mask_of,
    parse_edge_list,
)
from .verify import (
    CHECK_NAMES,
    CheckReport,
    CorpusSpec,
    check_containment,
    check_progressing_bound,
    check_rank_invariants,
    check_witness,
    corpus_all_labeled,
    corpus_families,
    corpus_gnp,
    corpus_standard,
    run_corpus,
)
from .witness import (
    Witness,
    WitnessInvariantError,
    WitnessLevel,
    bound_table,
    check_certificate,
    extract_witness,
    find_center,
    minimal_rank_subgraph,
    progressing_move_bound,
    witness_size_bound,
)

__all__ = [
    "__version__",
    "Arena",
    "CHECK_NAMES",
    "CheckReport",
    "ConnectorAnalysis",
    "CorpusSpec",
    "EdgeListError",
    "EngineConfig",
    "EngineLimitError",
    "FAMILIES",
    "FamilySpec",
    "GeneratorError",
    "Graph",
    "GraphError",
    "NAIVE_LIMIT",
    "RankAnalysis",
    "RankEngine",
    "SplitMix64",
    "Witness",
    "WitnessInvariantError",
    "WitnessLevel",
    "all_labeled_graphs",
    "analyze",
    "ball_mask",
    "bits",
    "bound_table",
    "check_certificate",
    "check_containment",
    "check_progressing_bound",
    "check_rank_invariants",
    "check_witness",
    "connector_value",
    "corpus_all_labeled",
    "corpus_families",
    "corpus_gnp",
    "corpus_standard",
    "extract_witness",
    "find_center",
    "generate",
    "graph_from_json",
    "graph_from_obj",
    "graph_to_edge_list",
    "graph_to_json",
    "mask_of",
    "minimal_rank_subgraph",
    "naive_rank",
    "parse_edge_list",
    "parse_family_spec",
    "progressing_move_bound",
    "progressing_moves",
    "run_corpus",
    "splitter_rank",
    "witness_size_bound",
]
