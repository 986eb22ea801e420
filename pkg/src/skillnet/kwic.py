"""Keyword-in-context search over a normalized corpus.

Matching runs on the post-normalization token stream: unigrams compare
for equality, phrases for consecutive equality, prefix wildcards with
``startswith``. Every occurrence is reported, including overlapping
matches of different patterns.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import Corpus, Document
from .lexicon import KeywordPattern, Lexicon, PatternKind

DEFAULT_WINDOW = 5


@dataclass(frozen=True)
class KwicMatch:
    doc_id: str
    pattern_id: str
    position: int
    matched_text: str
    pre_context: tuple[str, ...]
    post_context: tuple[str, ...]


def _match_at(tokens, i: int, pattern: KeywordPattern) -> int:
    """Length of the pattern match starting at token i, or 0."""
    if pattern.kind is PatternKind.UNIGRAM:
        return 1 if tokens[i] == pattern.terms[0] else 0
    if pattern.kind is PatternKind.PREFIX_WILDCARD:
        return 1 if tokens[i].startswith(pattern.terms[0]) else 0
    span = len(pattern.terms)
    if i + span > len(tokens):
        return 0
    return span if tuple(tokens[i : i + span]) == pattern.terms else 0


def search_document(doc: Document, lexicon: Lexicon, window: int) -> list[KwicMatch]:
    tokens = doc.tokens
    matches = []
    for pattern in lexicon.patterns:
        for i in range(len(tokens)):
            span = _match_at(tokens, i, pattern)
            if not span:
                continue
            matches.append(
                KwicMatch(
                    doc_id=doc.doc_id,
                    pattern_id=pattern.pattern_id,
                    position=i,
                    matched_text=" ".join(tokens[i : i + span]),
                    pre_context=tuple(tokens[max(0, i - window) : i]),
                    post_context=tuple(tokens[i + span : i + span + window]),
                )
            )
    return matches


def kwic_search(
    corpus: Corpus, lexicon: Lexicon, window: int = DEFAULT_WINDOW
) -> list[KwicMatch]:
    """All pattern occurrences, ordered by (doc_id, position, pattern_id)."""
    if window < 1:
        raise ValueError("window must be a positive integer")
    matches: list[KwicMatch] = []
    for doc in corpus.documents:
        matches.extend(search_document(doc, lexicon, window))
    matches.sort(key=lambda m: (m.doc_id, m.position, m.pattern_id))
    return matches


def matched_pattern_report(
    matches: list[KwicMatch], lexicon: Lexicon
) -> dict[str, object]:
    """Partition lexicon patterns into matched and unmatched sets."""
    matched = sorted({m.pattern_id for m in matches})
    unmatched = sorted(set(lexicon.pattern_ids) - set(matched))
    return {
        "matched": matched,
        "unmatched": unmatched,
        "matched_count": len(matched),
        "unmatched_count": len(unmatched),
    }
