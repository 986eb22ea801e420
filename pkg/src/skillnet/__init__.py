"""Keyword importance in a document corpus via bipartite-network centrality.

Pipeline: load a plain-text corpus with stratification metadata, find
keyword-in-context matches against a skill lexicon, deduplicate them
into a binary document-skill incidence structure, build the bipartite
graph and its projections, compute and rescale four centrality
measures, and compare them across document strata.
"""

from .centrality import (
    CentralityVector,
    betweenness_centrality,
    closeness_centrality,
    compute_centralities,
    degree_centrality,
    eigenvector_centrality,
    rescale,
)
from .corpus import (
    Accreditation,
    Corpus,
    Document,
    DocumentMeta,
    ProgramLevel,
    Sector,
    load_corpus,
)
from .graph import BipartiteGraph, Side, UnipartiteGraph, from_edge_list, project
from .incidence import (
    EdgeList,
    IncidenceMatrix,
    build_incidence,
    incidence_from_edge_list,
    to_edge_list,
)
from .kwic import KwicMatch, kwic_search, matched_pattern_report
from .lexicon import (
    KeywordPattern,
    Lexicon,
    PatternKind,
    default_lexicon,
    load_lexicon,
)
from .stats import (
    AnovaResult,
    CorrelationMatrix,
    correlation_matrix,
    one_way_anova,
)
from .stratify import (
    StratifiedCentrality,
    stratify_and_score,
    top_k_ranking,
    transversal_skills,
)
from .textnorm import NormalizationConfig, make_config, normalize_text

__version__ = "0.1.0"

__all__ = [
    "Accreditation",
    "AnovaResult",
    "BipartiteGraph",
    "CentralityVector",
    "CorrelationMatrix",
    "Corpus",
    "Document",
    "DocumentMeta",
    "EdgeList",
    "IncidenceMatrix",
    "KeywordPattern",
    "KwicMatch",
    "Lexicon",
    "NormalizationConfig",
    "PatternKind",
    "ProgramLevel",
    "Sector",
    "Side",
    "StratifiedCentrality",
    "UnipartiteGraph",
    "betweenness_centrality",
    "build_incidence",
    "closeness_centrality",
    "compute_centralities",
    "correlation_matrix",
    "default_lexicon",
    "degree_centrality",
    "eigenvector_centrality",
    "from_edge_list",
    "incidence_from_edge_list",
    "kwic_search",
    "load_corpus",
    "load_lexicon",
    "make_config",
    "matched_pattern_report",
    "normalize_text",
    "one_way_anova",
    "project",
    "rescale",
    "stratify_and_score",
    "to_edge_list",
    "top_k_ranking",
    "transversal_skills",
    "__version__",
]
