"""Per-stratum pipeline reruns, rankings, and transversal skills.

Each stratum gets its own incidence matrix, graph, and centrality pass
over the stratum subcorpus; nothing is filtered from a global graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .centrality import (
    betweenness_centrality,
    closeness_centrality,
    degree_centrality,
    eigenvector_centrality,
    rescale,
)
from .corpus import Corpus
from .errors import DegenerateInput, EmptyStratum, InvalidEnumValue
from .graph import Side, from_edge_list, project
from .incidence import build_incidence, to_edge_list
from .kwic import DEFAULT_WINDOW, kwic_search
from .lexicon import Lexicon

STRATA_FIELDS = ("program_level", "accreditation")

MEASURES = ("degree", "closeness", "betweenness", "eigenvector")

MEASURE_LABELS = {
    "degree": "Degree",
    "closeness": "Closeness",
    "betweenness": "Betweenness",
    "eigenvector": "Eigen.vector",
}


@dataclass(frozen=True)
class StratumRow:
    skill_id: str
    stratum: str
    degree: int
    closeness: float
    betweenness: float
    eigenvector: float
    degree_rescaled: float
    closeness_rescaled: float
    betweenness_rescaled: float
    eigenvector_rescaled: float

    def value(self, measure: str) -> float:
        if measure not in MEASURES:
            raise ValueError(f"unknown measure {measure!r}")
        return getattr(self, measure)


@dataclass(frozen=True)
class StratifiedCentrality:
    strata: tuple[str, ...]
    rows: tuple[StratumRow, ...]

    def rows_for(self, stratum: str) -> list[StratumRow]:
        return [r for r in self.rows if r.stratum == stratum]

    def skills_in(self, stratum: str) -> set[str]:
        return {r.skill_id for r in self.rows if r.stratum == stratum}

    def values_by_stratum(self, measure: str) -> dict[str, list[float]]:
        return {
            s: [r.value(measure) for r in self.rows_for(s)] for s in self.strata
        }


def skill_rows_for_subcorpus(
    corpus: Corpus,
    lexicon: Lexicon,
    stratum: str,
    window: int = DEFAULT_WINDOW,
    basis: str = "bipartite",
) -> list[StratumRow]:
    """Centrality rows for the skill nodes of one subcorpus.

    ``basis`` picks the scored graph: the bipartite graph itself or its
    skill-side projection. Rescaling runs across the stratum's skill
    nodes only.
    """
    if basis not in ("bipartite", "projection"):
        raise ValueError(f"unknown graph basis {basis!r}")
    matches = kwic_search(corpus, lexicon, window)
    if not matches:
        return []
    edges = to_edge_list(build_incidence(matches))
    bipartite = from_edge_list(edges)
    g = bipartite if basis == "bipartite" else project(bipartite, Side.SKILLS)
    skills = sorted(bipartite.right_nodes)

    deg = degree_centrality(g)
    clo = closeness_centrality(g)
    bet = betweenness_centrality(g)
    eig = eigenvector_centrality(g)
    deg_v = [deg[s] for s in skills]
    clo_v = [clo[s] for s in skills]
    bet_v = [bet[s] for s in skills]
    eig_v = [eig[s] for s in skills]
    deg_r = rescale(deg_v)
    clo_r = rescale(clo_v)
    bet_r = rescale(bet_v)
    eig_r = rescale(eig_v)
    return [
        StratumRow(
            skill_id=s,
            stratum=stratum,
            degree=deg_v[i],
            closeness=clo_v[i],
            betweenness=bet_v[i],
            eigenvector=eig_v[i],
            degree_rescaled=deg_r[i],
            closeness_rescaled=clo_r[i],
            betweenness_rescaled=bet_r[i],
            eigenvector_rescaled=eig_r[i],
        )
        for i, s in enumerate(skills)
    ]


def stratify_and_score(
    corpus: Corpus,
    lexicon: Lexicon,
    strata: str,
    window: int = DEFAULT_WINDOW,
    basis: str = "bipartite",
    expected_strata=None,
) -> StratifiedCentrality:
    """Rebuild the full pipeline once per stratum and tag the rows.

    Strata are the distinct values present in the corpus metadata unless
    ``expected_strata`` names them explicitly, in which case a value with
    no documents raises EmptyStratum.
    """
    if strata not in STRATA_FIELDS:
        raise InvalidEnumValue("strata", strata)
    present: dict[str, list[str]] = {}
    for doc in corpus.documents:
        present.setdefault(doc.metadata.stratum(strata), []).append(doc.doc_id)
    labels = sorted(expected_strata) if expected_strata is not None else sorted(present)

    rows: list[StratumRow] = []
    for label in labels:
        doc_ids = present.get(label, [])
        if not doc_ids:
            raise EmptyStratum(label)
        rows.extend(
            skill_rows_for_subcorpus(
                corpus.subset(doc_ids), lexicon, label, window, basis
            )
        )
    return StratifiedCentrality(strata=tuple(labels), rows=tuple(rows))


def top_k_ranking(
    sc: StratifiedCentrality, stratum: str, measure: str, k: int
) -> list[tuple[int, str, float]]:
    """Top-k (rank, skill, value) rows; ties break on skill id ascending.

    Values keep full precision; rounding to 2 decimals happens only in
    :func:`ranking_table_csv`.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    rows = sorted(
        sc.rows_for(stratum), key=lambda r: (-r.value(measure), r.skill_id)
    )
    return [(i + 1, r.skill_id, r.value(measure)) for i, r in enumerate(rows[:k])]


def ranking_table_csv(ranking, measure: str) -> str:
    """Presentation table: Rank, Soft Skill, measure label, 2 decimals."""
    lines = [f"Rank,Soft Skill,{MEASURE_LABELS[measure]}"]
    for rank, skill, value in ranking:
        skill_field = f'"{skill}"' if "," in skill else skill
        lines.append(f"{rank},{skill_field},{value:.2f}")
    return "\n".join(lines) + "\n"


def transversal_skills(sc: StratifiedCentrality) -> list[str]:
    """Skills matched in every stratum (sorted intersection)."""
    if len(sc.strata) < 2:
        raise DegenerateInput("transversal skills need at least 2 strata")
    skill_sets = [sc.skills_in(s) for s in sc.strata]
    common = set.intersection(*skill_sets)
    return sorted(common)
