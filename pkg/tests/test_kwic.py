from __future__ import annotations

import random

import pytest

from conftest import make_corpus
from oracles import brute_kwic_pairs
from skillnet.corpus import Corpus
from skillnet.kwic import kwic_search, matched_pattern_report
from skillnet.lexicon import KeywordPattern, Lexicon, LexiconSource, PatternKind
from skillnet.textnorm import NormalizationConfig


def lexicon_of(*patterns):
    return Lexicon(patterns=tuple(patterns), source=LexiconSource.USER_FILE)


UNIGRAM_LEAD = KeywordPattern("lead", PatternKind.UNIGRAM, ("lead",))
WILDCARD_PERSUA = KeywordPattern("persua*", PatternKind.PREFIX_WILDCARD, ("persua",))


def test_single_unigram_occurrence():
    corpus = make_corpus(
        {
            "Program A": (
                "the graduate will be able to lead teams to achieve "
                "common institutional goals".split()
            )
        }
    )
    matches = kwic_search(corpus, lexicon_of(UNIGRAM_LEAD))
    assert len(matches) == 1
    m = matches[0]
    assert (m.doc_id, m.pattern_id, m.matched_text) == ("Program A", "lead", "lead")


def test_empty_corpus_gives_empty_result():
    empty = Corpus(
        documents=(),
        stopword_list_id="none",
        normalization_config=NormalizationConfig(remove_stopwords=False),
    )
    assert kwic_search(empty, lexicon_of(UNIGRAM_LEAD)) == []


def test_prefix_wildcard_contexts():
    corpus = make_corpus({"doc": ["gran", "persuasion", "efectiva"]})
    matches = kwic_search(corpus, lexicon_of(WILDCARD_PERSUA))
    assert len(matches) == 1
    m = matches[0]
    assert m.matched_text == "persuasion"
    assert m.pre_context == ("gran",)
    assert m.post_context == ("efectiva",)
    assert m.position == 1


def test_window_clipping_near_document_start():
    corpus = make_corpus({"doc": ["lead", "a", "b", "c", "d", "e", "f", "lead"]})
    matches = kwic_search(corpus, lexicon_of(UNIGRAM_LEAD), window=5)
    first, last = matches
    assert first.pre_context == ()
    assert first.post_context == ("a", "b", "c", "d", "e")
    assert last.pre_context == ("b", "c", "d", "e", "f")
    assert last.post_context == ()
    assert all(len(m.pre_context) <= 5 and len(m.post_context) <= 5 for m in matches)


def test_exact_equality_not_prefix_for_unigrams():
    corpus = make_corpus({"doc": ["comprometerse"]})
    shorter = KeywordPattern("comprometer", PatternKind.UNIGRAM, ("comprometer",))
    longer = KeywordPattern("comprometerse", PatternKind.UNIGRAM, ("comprometerse",))
    matches = kwic_search(corpus, lexicon_of(shorter, longer))
    assert [m.pattern_id for m in matches] == ["comprometerse"]


def test_phrase_matches_across_removed_stopword(default_config):
    from skillnet.textnorm import normalize_text

    tokens = normalize_text("capaz de tomar las decisiones correctas", default_config)
    corpus = make_corpus({"doc": tokens})
    phrase = KeywordPattern("tomar decisiones", PatternKind.PHRASE, ("tomar", "decisiones"))
    matches = kwic_search(corpus, lexicon_of(phrase))
    assert len(matches) == 1
    assert matches[0].matched_text == "tomar decisiones"


def test_overlapping_patterns_all_reported():
    corpus = make_corpus({"doc": ["tomar", "decisiones"]})
    phrase = KeywordPattern("tomar decisiones", PatternKind.PHRASE, ("tomar", "decisiones"))
    unigram = KeywordPattern("decisiones", PatternKind.UNIGRAM, ("decisiones",))
    matches = kwic_search(corpus, lexicon_of(phrase, unigram))
    assert [(m.pattern_id, m.position) for m in matches] == [
        ("tomar decisiones", 0),
        ("decisiones", 1),
    ]


def test_matches_ordered_by_doc_position_pattern():
    corpus = make_corpus({"b": ["lead", "lead"], "a": ["lead"]})
    matches = kwic_search(corpus, lexicon_of(UNIGRAM_LEAD))
    assert [(m.doc_id, m.position) for m in matches] == [("a", 0), ("b", 0), ("b", 1)]


def test_soundness_matches_reverify(spanish_corpus):
    from skillnet.lexicon import default_lexicon

    lexicon = default_lexicon()
    by_id = {p.pattern_id: p for p in lexicon.patterns}
    docs = {d.doc_id: d.tokens for d in spanish_corpus.documents}
    matches = kwic_search(spanish_corpus, lexicon)
    assert matches
    for m in matches:
        tokens = docs[m.doc_id]
        pattern = by_id[m.pattern_id]
        span = m.matched_text.split()
        assert tokens[m.position : m.position + len(span)] == tuple(span)
        if pattern.kind is PatternKind.UNIGRAM:
            assert span == [pattern.terms[0]]
        elif pattern.kind is PatternKind.PHRASE:
            assert tuple(span) == pattern.terms
        else:
            assert span[0].startswith(pattern.terms[0])


def _random_corpus_and_lexicon(rng: random.Random):
    vocabulary = ["so", "sol", "solve", "te", "team", "go", "gol", "x"]
    docs = {
        f"doc{i}": [rng.choice(vocabulary) for _ in range(rng.randint(0, 50))]
        for i in range(rng.randint(1, 4))
    }
    patterns = [
        KeywordPattern("so", PatternKind.UNIGRAM, ("so",)),
        KeywordPattern("team", PatternKind.UNIGRAM, ("team",)),
        KeywordPattern("so*", PatternKind.PREFIX_WILDCARD, ("so",)),
        KeywordPattern("te go", PatternKind.PHRASE, ("te", "go")),
        KeywordPattern("go gol x", PatternKind.PHRASE, ("go", "gol", "x")),
    ]
    return make_corpus(docs), lexicon_of(*patterns)


def test_completeness_against_brute_force_scan():
    rng = random.Random(7)
    for _ in range(100):
        corpus, lexicon = _random_corpus_and_lexicon(rng)
        matches = kwic_search(corpus, lexicon, window=3)
        got = sorted((m.doc_id, m.position, m.pattern_id) for m in matches)
        assert got == brute_kwic_pairs(corpus, lexicon)


def test_matched_pattern_report_partitions(fig3_corpus, fig3_lexicon):
    matches = kwic_search(fig3_corpus, fig3_lexicon)
    report = matched_pattern_report(matches, fig3_lexicon)
    assert report["matched"] == ["innovators", "leaders"]
    assert report["unmatched"] == []
    report_empty = matched_pattern_report([], fig3_lexicon)
    assert report_empty["matched"] == []
    assert report_empty["unmatched_count"] == 2


def test_single_match_partition():
    from skillnet.lexicon import default_lexicon

    corpus = make_corpus({"doc": ["crear"]})
    lexicon = default_lexicon()
    report = matched_pattern_report(kwic_search(corpus, lexicon), lexicon)
    assert report["matched"] == ["crear"]
    assert report["unmatched_count"] == 49


def test_window_must_be_positive(fig3_corpus, fig3_lexicon):
    with pytest.raises(ValueError):
        kwic_search(fig3_corpus, fig3_lexicon, window=0)
