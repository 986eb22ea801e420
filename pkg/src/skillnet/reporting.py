"""Self-describing output files: JSON envelopes and CSV reports.

Every stage writes ``{schema_version, config, generated_at, payload}``;
``generated_at`` is omitted when timestamps are suppressed so that
repeated runs over identical inputs are byte-identical. Non-finite
floats are encoded as strings to keep the JSON strictly valid.
"""

from __future__ import annotations

import csv
import io
import json
import math
from datetime import datetime, timezone
from pathlib import Path

from .centrality import CentralityVector
from .corpus import Corpus
from .graph import BipartiteGraph
from .kwic import KwicMatch

SCHEMA_VERSION = "1"


def _sanitize(obj):
    if isinstance(obj, float):
        if math.isnan(obj):
            return "NaN"
        if math.isinf(obj):
            return "Infinity" if obj > 0 else "-Infinity"
        return obj
    if isinstance(obj, dict):
        return {k: _sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(v) for v in obj]
    return obj


def envelope(payload: dict, config: dict, timestamp: bool = True) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "config": _sanitize(config),
        "payload": _sanitize(payload),
    }
    if timestamp:
        doc["generated_at"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return doc


def dump_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_json(path: str | Path, doc: dict) -> None:
    Path(path).write_text(dump_json(doc), encoding="utf-8")


def read_envelope(path: str | Path) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def corpus_payload(corpus: Corpus) -> dict:
    """Normalized corpus in wire form (tokens, not raw text)."""
    return {
        "stopword_list_id": corpus.stopword_list_id,
        "document_count": len(corpus.documents),
        "documents": [
            {
                "doc_id": d.doc_id,
                "tokens": list(d.tokens),
                "decode_warnings": d.decode_warnings,
                "metadata": {
                    "program_name": d.metadata.program_name,
                    "institution": d.metadata.institution,
                    "program_level": d.metadata.program_level.value,
                    "accreditation": d.metadata.accreditation.value,
                    "sector": d.metadata.sector.value,
                },
            }
            for d in corpus.documents
        ],
    }


def corpus_from_payload(payload: dict, config) -> Corpus:
    """Rebuild a corpus from its wire form for stage chaining."""
    from .corpus import Accreditation, Document, DocumentMeta, ProgramLevel, Sector

    documents = []
    for d in payload["documents"]:
        meta = d["metadata"]
        documents.append(
            Document(
                doc_id=d["doc_id"],
                raw_text=" ".join(d["tokens"]),
                tokens=tuple(d["tokens"]),
                metadata=DocumentMeta(
                    program_name=meta["program_name"],
                    institution=meta["institution"],
                    program_level=ProgramLevel(meta["program_level"]),
                    accreditation=Accreditation(meta["accreditation"]),
                    sector=Sector(meta["sector"]),
                ),
                decode_warnings=d.get("decode_warnings", 0),
            )
        )
    return Corpus(
        documents=tuple(documents),
        stopword_list_id=payload.get("stopword_list_id", "none"),
        normalization_config=config,
    )


def matches_payload(matches: list[KwicMatch], report: dict, window: int) -> dict:
    return {
        "window": window,
        "match_count": len(matches),
        "pattern_report": report,
        "matches": [
            {
                "doc_id": m.doc_id,
                "pattern_id": m.pattern_id,
                "position": m.position,
                "matched_text": m.matched_text,
                "pre_context": list(m.pre_context),
                "post_context": list(m.post_context),
            }
            for m in matches
        ],
    }


def matches_from_payload(payload: dict) -> list[KwicMatch]:
    return [
        KwicMatch(
            doc_id=m["doc_id"],
            pattern_id=m["pattern_id"],
            position=m["position"],
            matched_text=m["matched_text"],
            pre_context=tuple(m["pre_context"]),
            post_context=tuple(m["post_context"]),
        )
        for m in payload["matches"]
    ]


def graph_payload(g: BipartiteGraph) -> dict:
    return {
        "documents": list(g.left_nodes),
        "skills": list(g.right_nodes),
        "edges": [list(e) for e in sorted(g.edges)],
        "node_count": len(g.left_nodes) + len(g.right_nodes),
        "edge_count": len(g.edges),
    }


def graph_from_payload(payload: dict) -> BipartiteGraph:
    return BipartiteGraph(
        left_nodes=tuple(payload["documents"]),
        right_nodes=tuple(payload["skills"]),
        edges=frozenset(tuple(e) for e in payload["edges"]),
    )


CENTRALITY_CSV_HEADER = (
    "node_id",
    "side",
    "degree",
    "closeness",
    "betweenness",
    "eigenvector",
    "degree_rescaled",
    "closeness_rescaled",
    "betweenness_rescaled",
    "eigenvector_rescaled",
)


def centrality_rows(cv: CentralityVector, side_of) -> list[dict]:
    """Aligned per-node rows; ``side_of`` maps node id -> side label."""
    rows = []
    for i, node_id in enumerate(cv.node_ids):
        rows.append(
            {
                "node_id": node_id,
                "side": side_of(node_id),
                "degree": cv.degree[i],
                "closeness": cv.closeness[i],
                "betweenness": cv.betweenness[i],
                "eigenvector": cv.eigenvector[i],
                "degree_rescaled": cv.degree_rescaled[i],
                "closeness_rescaled": cv.closeness_rescaled[i],
                "betweenness_rescaled": cv.betweenness_rescaled[i],
                "eigenvector_rescaled": cv.eigenvector_rescaled[i],
            }
        )
    return rows


def centrality_report_csv(rows: list[dict]) -> str:
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=CENTRALITY_CSV_HEADER, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return out.getvalue()


def stratified_rows_csv(rows) -> str:
    """Raw per-stratum centrality rows (distribution plot data)."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(
        [
            "stratum",
            "skill_id",
            "degree",
            "closeness",
            "betweenness",
            "eigenvector",
            "degree_rescaled",
            "closeness_rescaled",
            "betweenness_rescaled",
            "eigenvector_rescaled",
        ]
    )
    for r in rows:
        writer.writerow(
            [
                r.stratum,
                r.skill_id,
                r.degree,
                r.closeness,
                r.betweenness,
                r.eigenvector,
                r.degree_rescaled,
                r.closeness_rescaled,
                r.betweenness_rescaled,
                r.eigenvector_rescaled,
            ]
        )
    return out.getvalue()


def rescaled_bars_csv(rows: list[dict]) -> str:
    """Long-form rescaled values per node and measure (bar plot data)."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["node_id", "measure", "rescaled_value"])
    for row in rows:
        for measure in ("degree", "closeness", "betweenness", "eigenvector"):
            writer.writerow([row["node_id"], measure, row[f"{measure}_rescaled"]])
    return out.getvalue()


def correlation_csv(matrix) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["measure", *matrix.labels])
    for label, coeffs, stars in zip(matrix.labels, matrix.coefficients, matrix.stars):
        cells = []
        for r, starred in zip(coeffs, stars):
            if r is None:
                cells.append("")
            else:
                cells.append(f"{r:.6f}{'***' if starred else ''}")
        writer.writerow([label, *cells])
    return out.getvalue()


def anova_csv(results: dict) -> str:
    """One row per measure: measure,f_statistic,df_between,df_within,p_value."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["measure", "f_statistic", "df_between", "df_within", "p_value"])
    for measure in sorted(results):
        res = results[measure]
        if res is None:
            writer.writerow([measure, "", "", "", ""])
        else:
            writer.writerow(
                [
                    measure,
                    res.f_statistic,
                    res.df_between,
                    res.df_within,
                    res.p_value,
                ]
            )
    return out.getvalue()
