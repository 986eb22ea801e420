"""Command-line pipeline: ingest, kwic, graph, centrality, rank, compare,
export, and the all-in-one run.

Each stage writes a versioned JSON envelope and accepts either raw
inputs or the previous stage's file, so chained invocations produce the
same artifacts as a single ``run``. Exit codes: 0 success, 2 input
error, 3 computation error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import centrality as centrality_mod
from . import graphio
from .corpus import Corpus, load_corpus
from .errors import ComputationError, InputDataError, SkillnetError, UnreadableFile
from .graph import Side, from_edge_list, project
from .incidence import (
    build_incidence,
    edge_list_to_csv,
    incidence_to_csv,
    match_counts,
    to_edge_list,
)
from .kwic import DEFAULT_WINDOW, KwicMatch, kwic_search, matched_pattern_report
from .lexicon import (
    Lexicon,
    LexiconSource,
    default_lexicon,
    load_lexicon,
    parse_pattern_line,
)
from .reporting import (
    anova_csv,
    centrality_report_csv,
    centrality_rows,
    correlation_csv,
    corpus_from_payload,
    corpus_payload,
    dump_json,
    envelope,
    graph_from_payload,
    graph_payload,
    matches_from_payload,
    matches_payload,
    read_envelope,
    rescaled_bars_csv,
    stratified_rows_csv,
    write_json,
    write_text,
)
from .stats import correlation_matrix, one_way_anova
from .stratify import (
    MEASURES,
    STRATA_FIELDS,
    ranking_table_csv,
    stratify_and_score,
    top_k_ranking,
    transversal_skills,
)
from .textnorm import make_config

EXPORT_FORMATS = ("csv", "json", "graphml", "dot")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skillnet",
        description="Document-skill bipartite network analysis over a text corpus",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_corpus_args(p):
        p.add_argument("--corpus", help="directory of plain-text .txt documents")
        p.add_argument("--metadata", help="CSV metadata file keyed by doc_id")
        p.add_argument("--stopwords", help="stopword override file (one token per line)")
        p.add_argument("--exclusions", help="extra exclusion-word file, default empty")
        p.add_argument(
            "--numeric-ids",
            action="store_true",
            help="derive doc ids from digits and hyphens in file names",
        )

    def add_common(p):
        p.add_argument("--out", required=True, help="output directory")
        p.add_argument(
            "--no-timestamp",
            action="store_true",
            help="omit generated_at so outputs are byte-reproducible",
        )

    def add_kwic_args(p):
        p.add_argument("--lexicon", help="pattern file; default is the embedded 50-pattern list")
        p.add_argument("--window", type=int, default=DEFAULT_WINDOW, help="context window size")

    p_ingest = sub.add_parser("ingest", help="load and normalize the corpus")
    add_corpus_args(p_ingest)
    add_common(p_ingest)

    p_kwic = sub.add_parser("kwic", help="find keyword-in-context matches")
    p_kwic.add_argument("--input", help="corpus.json from ingest")
    add_corpus_args(p_kwic)
    add_kwic_args(p_kwic)
    p_kwic.add_argument("--pattern", help="search a single ad-hoc pattern and print the listing")
    add_common(p_kwic)

    p_graph = sub.add_parser("graph", help="build incidence, edge list, and bipartite graph")
    p_graph.add_argument("--input", help="kwic.json from the kwic stage")
    add_corpus_args(p_graph)
    add_kwic_args(p_graph)
    p_graph.add_argument(
        "--edge-counts",
        action="store_true",
        help="add an informational match_count column to edges.csv",
    )
    add_common(p_graph)

    p_cent = sub.add_parser("centrality", help="compute the four centrality measures")
    p_cent.add_argument("--input", help="graph.json from the graph stage")
    add_corpus_args(p_cent)
    add_kwic_args(p_cent)
    add_common(p_cent)

    p_rank = sub.add_parser("rank", help="top-k skills by a centrality measure")
    p_rank.add_argument("--input", help="centrality.json from the centrality stage")
    add_corpus_args(p_rank)
    add_kwic_args(p_rank)
    p_rank.add_argument("--measure", choices=MEASURES, default="eigenvector")
    p_rank.add_argument("--top-k", type=int, default=10)
    add_common(p_rank)

    p_cmp = sub.add_parser("compare", help="stratified centrality, ANOVA, correlations")
    p_cmp.add_argument("--input", help="corpus.json from ingest")
    add_corpus_args(p_cmp)
    add_kwic_args(p_cmp)
    p_cmp.add_argument("--strata", choices=STRATA_FIELDS, required=True)
    p_cmp.add_argument("--measure", choices=MEASURES, default="eigenvector")
    p_cmp.add_argument("--top-k", type=int, default=10)
    add_common(p_cmp)

    p_exp = sub.add_parser("export", help="write GraphML/DOT for the graph and projections")
    p_exp.add_argument("--input", help="graph.json from the graph stage")
    add_corpus_args(p_exp)
    add_kwic_args(p_exp)
    p_exp.add_argument(
        "--export",
        default="graphml,dot",
        help="comma-separated formats: graphml,dot",
    )
    add_common(p_exp)

    p_run = sub.add_parser("run", help="full pipeline in one invocation")
    add_corpus_args(p_run)
    add_kwic_args(p_run)
    p_run.add_argument("--strata", choices=STRATA_FIELDS)
    p_run.add_argument("--measure", choices=MEASURES, default="eigenvector")
    p_run.add_argument("--top-k", type=int, default=10)
    p_run.add_argument(
        "--export",
        default="csv,json",
        help=f"comma-separated formats from {{{','.join(EXPORT_FORMATS)}}}",
    )
    add_common(p_run)

    return parser


def _norm_config(args):
    return make_config(
        stopword_file=args.stopwords,
        exclusion_file=args.exclusions,
    )


def _corpus_config_echo(args, config) -> dict:
    return {
        "corpus_dir": args.corpus,
        "metadata_file": args.metadata,
        "numeric_ids": bool(args.numeric_ids),
        "normalization": config.describe(),
    }


def _require(args, *names) -> None:
    missing = [n for n in names if getattr(args, n.replace("-", "_"), None) is None]
    if missing:
        flags = ", ".join(f"--{n}" for n in missing)
        raise InputDataError(f"missing required input: {flags}")


def _lexicon_from_args(args) -> Lexicon:
    if getattr(args, "lexicon", None):
        return load_lexicon(args.lexicon)
    return default_lexicon()


def _lexicon_echo(args) -> dict:
    return {"lexicon": args.lexicon or "embedded-50", "window": args.window}


def get_corpus(args) -> tuple[Corpus, dict]:
    """Corpus plus its config echo, from --input or raw flags."""
    if getattr(args, "input", None):
        doc = read_envelope(args.input)
        if doc.get("stage") != "corpus":
            raise UnreadableFile(args.input, "expected a corpus.json envelope")
        config = _norm_config(args)
        return corpus_from_payload(doc["payload"], config), doc["config"]
    _require(args, "corpus", "metadata")
    config = _norm_config(args)
    corpus = load_corpus(args.corpus, args.metadata, config, args.numeric_ids)
    return corpus, _corpus_config_echo(args, config)


def stage_ingest(args, out: Path) -> Corpus:
    corpus, echo = get_corpus(args)
    doc = envelope(corpus_payload(corpus), echo, timestamp=not args.no_timestamp)
    doc["stage"] = "corpus"
    write_json(out / "corpus.json", doc)
    return corpus


def get_matches(args, corpus: Corpus | None = None) -> tuple[list[KwicMatch], dict, dict]:
    """Matches, the pattern report, and the config echo."""
    if corpus is None and getattr(args, "input", None):
        doc = read_envelope(args.input)
        if doc.get("stage") == "kwic":
            payload = doc["payload"]
            return matches_from_payload(payload), payload["pattern_report"], doc["config"]
    if corpus is None:
        corpus, _ = get_corpus(args)
    lexicon = _lexicon_from_args(args)
    matches = kwic_search(corpus, lexicon, args.window)
    report = matched_pattern_report(matches, lexicon)
    return matches, report, _lexicon_echo(args)


def stage_kwic(args, out: Path, corpus: Corpus | None = None) -> list[KwicMatch]:
    if getattr(args, "pattern", None):
        if corpus is None:
            corpus, _ = get_corpus(args)
        lexicon = Lexicon(
            patterns=(parse_pattern_line(args.pattern, corpus.normalization_config),),
            source=LexiconSource.USER_FILE,
        )
        matches = kwic_search(corpus, lexicon, args.window)
        report = matched_pattern_report(matches, lexicon)
        echo = {"pattern": args.pattern, "window": args.window}
        for m in matches:
            pre = " ".join(m.pre_context)
            post = " ".join(m.post_context)
            print(f"{m.doc_id}:{m.position}  {pre} [{m.matched_text}] {post}")
    else:
        matches, report, echo = get_matches(args, corpus)
    doc = envelope(
        matches_payload(matches, report, args.window),
        echo,
        timestamp=not args.no_timestamp,
    )
    doc["stage"] = "kwic"
    write_json(out / "kwic.json", doc)
    return matches


def get_graph(args):
    if getattr(args, "input", None):
        doc = read_envelope(args.input)
        if doc.get("stage") == "graph":
            return graph_from_payload(doc["payload"]), doc["config"]
    matches, _, echo = get_matches(args)
    incidence = build_incidence(matches)
    return from_edge_list(to_edge_list(incidence)), echo


def stage_graph(args, out: Path, matches: list[KwicMatch] | None = None):
    if matches is None:
        matches, _, echo = get_matches(args)
    else:
        echo = _lexicon_echo(args)
    incidence = build_incidence(matches)
    edges = to_edge_list(incidence)
    graph = from_edge_list(edges)
    doc = envelope(graph_payload(graph), echo, timestamp=not args.no_timestamp)
    doc["stage"] = "graph"
    write_json(out / "graph.json", doc)
    write_text(out / "incidence.csv", incidence_to_csv(incidence))
    write_text(out / "edges.csv", edge_list_to_csv(edges, match_counts(matches)))
    return graph


def stage_centrality(args, out: Path, graph=None):
    if graph is None:
        graph, echo = get_graph(args)
    else:
        echo = _lexicon_echo(args)
    vector = centrality_mod.compute_centralities(graph)
    left = set(graph.left_nodes)
    rows = centrality_rows(
        vector, lambda n: "document" if n in left else "skill"
    )
    doc = envelope(
        {
            "tolerance": centrality_mod.EIGENVECTOR_TOL,
            "max_iterations": centrality_mod.EIGENVECTOR_MAX_ITERS,
            "nodes": rows,
        },
        echo,
        timestamp=not args.no_timestamp,
    )
    doc["stage"] = "centrality"
    write_json(out / "centrality.json", doc)
    write_text(out / "centrality.csv", centrality_report_csv(rows))
    write_text(out / "plot_rescaled_bars.csv", rescaled_bars_csv(rows))
    return rows


def stage_rank(args, out: Path, rows: list[dict] | None = None) -> None:
    if rows is None:
        if getattr(args, "input", None):
            doc = read_envelope(args.input)
            if doc.get("stage") != "centrality":
                raise UnreadableFile(args.input, "expected a centrality.json envelope")
            rows = doc["payload"]["nodes"]
        else:
            rows = stage_centrality_rows_from_raw(args)
    skill_rows = [r for r in rows if r["side"] == "skill"]
    skill_rows.sort(key=lambda r: (-float(r[args.measure]), r["node_id"]))
    ranking = [
        (i + 1, r["node_id"], float(r[args.measure]))
        for i, r in enumerate(skill_rows[: args.top_k])
    ]
    write_text(out / "ranking.csv", ranking_table_csv(ranking, args.measure))
    doc = envelope(
        {
            "measure": args.measure,
            "top_k": args.top_k,
            "ranking": [
                {"rank": rank, "skill_id": skill, "value": value}
                for rank, skill, value in ranking
            ],
        },
        {"measure": args.measure, "top_k": args.top_k},
        timestamp=not args.no_timestamp,
    )
    doc["stage"] = "ranking"
    write_json(out / "ranking.json", doc)


def stage_centrality_rows_from_raw(args) -> list[dict]:
    graph, _ = get_graph(args)
    vector = centrality_mod.compute_centralities(graph)
    left = set(graph.left_nodes)
    return centrality_rows(vector, lambda n: "document" if n in left else "skill")


def stage_compare(args, out: Path, corpus: Corpus | None = None) -> None:
    if corpus is None:
        corpus, _ = get_corpus(args)
    lexicon = _lexicon_from_args(args)
    sc = stratify_and_score(corpus, lexicon, args.strata, args.window)

    anova_results = {}
    for measure in MEASURES:
        groups = [v for v in sc.values_by_stratum(measure).values() if v]
        total = sum(len(g) for g in groups)
        if len(groups) >= 2 and total > len(groups):
            anova_results[measure] = one_way_anova(groups)
        else:
            anova_results[measure] = None  # too few strata or observations

    # correlations between the four measures across (skill, stratum) rows
    vectors = [[r.value(m) for r in sc.rows] for m in MEASURES]
    labels = list(MEASURES)
    correlations = {}
    if len(sc.rows) >= 3:
        for method in ("spearman", "pearson"):
            correlations[method] = correlation_matrix(vectors, labels, method)

    rankings = {}
    for stratum in sc.strata:
        ranking = top_k_ranking(sc, stratum, args.measure, args.top_k)
        rankings[stratum] = ranking
        write_text(
            out / f"ranking_{stratum}.csv", ranking_table_csv(ranking, args.measure)
        )

    transversal = transversal_skills(sc) if len(sc.strata) >= 2 else []

    payload = {
        "strata_field": args.strata,
        "strata": list(sc.strata),
        "measure": args.measure,
        "top_k": args.top_k,
        "anova": {
            m: (res.as_dict() if res is not None else None)
            for m, res in anova_results.items()
        },
        "correlations": {
            method: matrix.as_dict() for method, matrix in correlations.items()
        },
        "rankings": {
            stratum: [
                {"rank": rank, "skill_id": skill, "value": value}
                for rank, skill, value in ranking
            ]
            for stratum, ranking in rankings.items()
        },
        "transversal_skills": transversal,
        "rows": [
            {
                "stratum": r.stratum,
                "skill_id": r.skill_id,
                "degree": r.degree,
                "closeness": r.closeness,
                "betweenness": r.betweenness,
                "eigenvector": r.eigenvector,
            }
            for r in sc.rows
        ],
    }
    echo = {
        "strata": args.strata,
        "measure": args.measure,
        "top_k": args.top_k,
        **_lexicon_echo(args),
    }
    doc = envelope(payload, echo, timestamp=not args.no_timestamp)
    doc["stage"] = "compare"
    write_json(out / "compare.json", doc)
    write_text(out / "anova.csv", anova_csv(anova_results))
    for method, matrix in correlations.items():
        write_text(out / f"correlations_{method}.csv", correlation_csv(matrix))
    write_text(
        out / "transversal.csv",
        "skill_id\n" + "".join(f"{s}\n" for s in transversal),
    )
    write_text(out / "plot_stratum_distributions.csv", stratified_rows_csv(sc.rows))


def stage_export(args, out: Path, graph=None) -> None:
    if graph is None:
        graph, _ = get_graph(args)
    formats = [f.strip() for f in args.export.split(",") if f.strip()]
    unknown = set(formats) - set(EXPORT_FORMATS)
    if unknown:
        raise InputDataError(f"unknown export format(s): {sorted(unknown)}")
    doc_proj = project(graph, Side.DOCUMENTS)
    skill_proj = project(graph, Side.SKILLS)
    if "graphml" in formats:
        write_text(out / "graph.graphml", graphio.bipartite_to_graphml(graph))
        write_text(
            out / "projection_documents.graphml", graphio.unipartite_to_graphml(doc_proj)
        )
        write_text(
            out / "projection_skills.graphml", graphio.unipartite_to_graphml(skill_proj)
        )
    if "dot" in formats:
        write_text(out / "graph.dot", graphio.bipartite_to_dot(graph))
        write_text(out / "projection_documents.dot", graphio.unipartite_to_dot(doc_proj))
        write_text(out / "projection_skills.dot", graphio.unipartite_to_dot(skill_proj))


def cmd_run(args, out: Path) -> None:
    corpus = stage_ingest(args, out)
    matches = stage_kwic(args, out, corpus=corpus)
    graph = stage_graph(args, out, matches=matches)
    rows = stage_centrality(args, out, graph=graph)
    stage_rank(args, out, rows=rows)
    if args.strata:
        stage_compare(args, out, corpus=corpus)
    stage_export(args, out, graph=graph)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    try:
        if args.command == "ingest":
            stage_ingest(args, out)
        elif args.command == "kwic":
            stage_kwic(args, out)
        elif args.command == "graph":
            stage_graph(args, out)
        elif args.command == "centrality":
            stage_centrality(args, out)
        elif args.command == "rank":
            stage_rank(args, out)
        elif args.command == "compare":
            stage_compare(args, out)
        elif args.command == "export":
            stage_export(args, out)
        elif args.command == "run":
            cmd_run(args, out)
    except InputDataError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ComputationError as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return 3
    except SkillnetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
