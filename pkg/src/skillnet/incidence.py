"""Binary document-skill incidence structure and its edge-list form.

Repeated matches of one pattern in one document collapse to a single
1-cell; the edge list is the set of 1-cells, sorted. Patterns that never
matched are pruned by default, mirroring the search-then-filter step
that narrows the lexicon to the observed skills.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .kwic import KwicMatch


@dataclass(frozen=True)
class IncidenceMatrix:
    doc_ids: tuple[str, ...]
    pattern_ids: tuple[str, ...]
    cells: tuple[tuple[int, ...], ...]  # row per doc, column per pattern

    def cell(self, doc_id: str, pattern_id: str) -> int:
        return self.cells[self.doc_ids.index(doc_id)][self.pattern_ids.index(pattern_id)]

    @property
    def ones_count(self) -> int:
        return sum(sum(row) for row in self.cells)


@dataclass(frozen=True)
class EdgeList:
    edges: tuple[tuple[str, str], ...]  # unique (doc_id, pattern_id), sorted

    def __len__(self) -> int:
        return len(self.edges)


def build_incidence(
    matches: list[KwicMatch],
    prune_empty: bool = True,
    all_doc_ids=None,
    all_pattern_ids=None,
) -> IncidenceMatrix:
    """Deduplicated presence matrix from raw matches.

    With ``prune_empty`` (the default) only documents and patterns that
    occur in ``matches`` appear. Passing ``all_doc_ids``/``all_pattern_ids``
    with ``prune_empty=False`` retains all-zero rows or columns.
    """
    pairs = {(m.doc_id, m.pattern_id) for m in matches}
    if prune_empty or all_doc_ids is None:
        doc_ids = sorted({d for d, _ in pairs})
    else:
        doc_ids = sorted(set(all_doc_ids) | {d for d, _ in pairs})
    if prune_empty or all_pattern_ids is None:
        pattern_ids = sorted({p for _, p in pairs})
    else:
        pattern_ids = sorted(set(all_pattern_ids) | {p for _, p in pairs})
    cells = tuple(
        tuple(1 if (d, p) in pairs else 0 for p in pattern_ids) for d in doc_ids
    )
    return IncidenceMatrix(tuple(doc_ids), tuple(pattern_ids), cells)


def to_edge_list(m: IncidenceMatrix) -> EdgeList:
    """One edge per 1-cell; inverse of :func:`incidence_from_edge_list`."""
    edges = sorted(
        (d, p)
        for i, d in enumerate(m.doc_ids)
        for j, p in enumerate(m.pattern_ids)
        if m.cells[i][j]
    )
    return EdgeList(tuple(edges))


def incidence_from_edge_list(e: EdgeList) -> IncidenceMatrix:
    doc_ids = sorted({d for d, _ in e.edges})
    pattern_ids = sorted({p for _, p in e.edges})
    pairs = set(e.edges)
    cells = tuple(
        tuple(1 if (d, p) in pairs else 0 for p in pattern_ids) for d in doc_ids
    )
    return IncidenceMatrix(tuple(doc_ids), tuple(pattern_ids), cells)


def incidence_to_csv(m: IncidenceMatrix) -> str:
    """Docs as rows, pattern ids as the header row."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["doc_id", *m.pattern_ids])
    for doc_id, row in zip(m.doc_ids, m.cells):
        writer.writerow([doc_id, *row])
    return out.getvalue()


def match_counts(matches: list[KwicMatch]) -> dict[tuple[str, str], int]:
    counts: dict[tuple[str, str], int] = {}
    for m in matches:
        key = (m.doc_id, m.pattern_id)
        counts[key] = counts.get(key, 0) + 1
    return counts


def edge_list_to_csv(e: EdgeList, counts: dict[tuple[str, str], int] | None = None) -> str:
    """Edge pairs as CSV; ``counts`` adds an informational match_count column."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if counts is None:
        writer.writerow(["doc_id", "pattern_id"])
        writer.writerows(e.edges)
    else:
        writer.writerow(["doc_id", "pattern_id", "match_count"])
        for doc_id, pattern_id in e.edges:
            writer.writerow([doc_id, pattern_id, counts.get((doc_id, pattern_id), 0)])
    return out.getvalue()
