from __future__ import annotations

import pytest

from skillnet.corpus import (
    Accreditation,
    Corpus,
    Document,
    DocumentMeta,
    ProgramLevel,
    Sector,
    load_corpus,
)
from skillnet.fixtures import (
    fig1_edge_list,
    fig3_corpus_dir,
    fig3_lexicon_file,
    fig3_metadata_file,
)
from skillnet.graph import from_edge_list
from skillnet.lexicon import load_lexicon
from skillnet.textnorm import NormalizationConfig, make_config

PLACEHOLDER_META = DocumentMeta(
    program_name="Program",
    institution="Institution",
    program_level=ProgramLevel.MASTERS,
    accreditation=Accreditation.QUALIFIED,
    sector=Sector.PUBLIC,
)


def make_corpus(token_lists: dict[str, list[str]]) -> Corpus:
    """In-memory corpus straight from token lists, bypassing file IO."""
    docs = tuple(
        Document(
            doc_id=doc_id,
            raw_text=" ".join(tokens),
            tokens=tuple(tokens),
            metadata=PLACEHOLDER_META,
        )
        for doc_id, tokens in sorted(token_lists.items())
    )
    return Corpus(
        documents=docs,
        stopword_list_id="none",
        normalization_config=NormalizationConfig(remove_stopwords=False),
    )


@pytest.fixture(scope="session")
def default_config():
    return make_config()


@pytest.fixture(scope="session")
def fig1_graph():
    return from_edge_list(fig1_edge_list())


@pytest.fixture(scope="session")
def fig3_corpus(default_config):
    return load_corpus(fig3_corpus_dir(), fig3_metadata_file(), default_config)


@pytest.fixture(scope="session")
def fig3_lexicon():
    return load_lexicon(fig3_lexicon_file())


SPANISH_DOCS = {
    "d1": (
        "El programa busca crear y liderar equipos con creatividad "
        "para solucionar problemas complejos.",
        ("Especializacion en Gestion", "Universidad A", "Specialization", "Qualified", "Public"),
    ),
    "d2": (
        "Formamos profesionales capaces de analizar, evaluar y tomar "
        "decisiones con pensamiento crítico.",
        ("Especializacion en Finanzas", "Universidad B", "Specialization", "Qualified", "Private"),
    ),
    "d3": (
        "El magíster podrá gestionar proyectos, crear soluciones e "
        "innovar con gran capacidad de persuasión.",
        ("Maestria en Innovacion", "Universidad C", "Masters", "Qualified", "Public"),
    ),
    "d4": (
        "Nuestros egresados saben comunicar, negociar y resolver "
        "conflictos en equipos de alto desempeño.",
        ("Maestria en Direccion", "Universidad D", "Masters", "HighQuality", "Private"),
    ),
    "d5": (
        "El doctorado forma investigadores para crear conocimiento, "
        "liderar grupos y generar ideas con ética.",
        ("Doctorado en Ciencias", "Universidad E", "Doctorate", "HighQuality", "Public"),
    ),
    "d6": (
        "Se espera del egresado la capacidad de evaluar, innovar y "
        "comprometerse con equipos interdisciplinarios para tomar "
        "decisiones éticas.",
        ("Doctorado en Educacion", "Universidad F", "Doctorate", "Qualified", "Private"),
    ),
}


def write_spanish_corpus(root):
    """Six-document Spanish corpus across all strata; returns (dir, csv)."""
    text_dir = root / "docs"
    text_dir.mkdir(parents=True, exist_ok=True)
    rows = ["doc_id,program_name,institution,program_level,accreditation,sector"]
    for doc_id, (text, meta) in sorted(SPANISH_DOCS.items()):
        (text_dir / f"{doc_id}.txt").write_text(text, encoding="utf-8")
        rows.append(",".join([doc_id, *meta]))
    metadata = root / "metadata.csv"
    metadata.write_text("\n".join(rows) + "\n", encoding="utf-8")
    return text_dir, metadata


@pytest.fixture(scope="session")
def spanish_corpus_files(tmp_path_factory):
    return write_spanish_corpus(tmp_path_factory.mktemp("spanish"))


@pytest.fixture(scope="session")
def spanish_corpus(spanish_corpus_files, default_config):
    text_dir, metadata = spanish_corpus_files
    return load_corpus(text_dir, metadata, default_config)
