"""Access to the bundled toy fixtures used by tests, docs, and the CLI.

``fig1`` is a ready-made bipartite edge list; ``fig3`` is a three-file
text corpus with metadata and a two-pattern lexicon.
"""

from __future__ import annotations

import csv
from importlib import resources
from pathlib import Path

from .incidence import EdgeList


def fixture_path(name: str) -> Path:
    base = resources.files("skillnet.data").joinpath("fixtures").joinpath(name)
    return Path(str(base))


def fig1_edge_list() -> EdgeList:
    path = fixture_path("fig1") / "edges.csv"
    with path.open(encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        edges = sorted((row["doc_id"], row["pattern_id"]) for row in reader)
    return EdgeList(tuple(edges))


def fig3_corpus_dir() -> Path:
    return fixture_path("fig3") / "texts"


def fig3_metadata_file() -> Path:
    return fixture_path("fig3") / "metadata.csv"


def fig3_lexicon_file() -> Path:
    return fixture_path("fig3") / "lexicon.txt"
