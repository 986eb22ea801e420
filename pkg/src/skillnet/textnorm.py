"""Tokenization and normalization of raw corpus text.

The pipeline is fixed: lowercase, fold diacritics to base letters
(n-tilde survives by default), delete every character outside the token
alphabet, split on whitespace, then drop stopwords. Under the default
config every emitted token matches ``[a-zñ]+``, which is what the
pattern matcher assumes on both the corpus and the lexicon side.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import UnreadableFile

EMBEDDED_STOPWORDS_ID = "embedded-es-v1"

_ENYE_SENTINEL = "\x00"


def fold_diacritics(text: str, preserve_enye: bool = True) -> str:
    """Strip combining marks so accented letters collapse to their base."""
    if preserve_enye:
        text = text.replace("ñ", _ENYE_SENTINEL)
    decomposed = unicodedata.normalize("NFD", text)
    stripped = "".join(c for c in decomposed if not unicodedata.combining(c))
    folded = unicodedata.normalize("NFC", stripped)
    if preserve_enye:
        folded = folded.replace(_ENYE_SENTINEL, "ñ")
    return folded


@dataclass(frozen=True)
class NormalizationConfig:
    """Settings that define the token stream; treat instances as immutable.

    ``stopwords`` and ``exclusions`` must already be normalized (folded,
    lowercase); use :func:`make_config` rather than building by hand.
    """

    fold_diacritics: bool = True
    preserve_enye: bool = True
    remove_stopwords: bool = True
    stopwords: frozenset[str] = field(default_factory=frozenset)
    stopword_list_id: str = "none"
    exclusions: frozenset[str] = field(default_factory=frozenset)

    def describe(self) -> dict:
        """Compact summary for config echoes (omits the word inventories)."""
        return {
            "fold_diacritics": self.fold_diacritics,
            "preserve_enye": self.preserve_enye,
            "remove_stopwords": self.remove_stopwords,
            "stopword_list_id": self.stopword_list_id,
            "stopword_count": len(self.stopwords),
            "exclusion_count": len(self.exclusions),
        }


def _is_alphabet_char(c: str, config: NormalizationConfig) -> bool:
    if config.fold_diacritics:
        return ("a" <= c <= "z") or (config.preserve_enye and c == "ñ")
    return c.isalpha()


def normalize_text(raw: str, config: NormalizationConfig) -> list[str]:
    """Turn raw text into the canonical token list.

    Deterministic and idempotent: re-normalizing the space-joined output
    reproduces it. Characters outside the alphabet (punctuation, digits,
    replacement characters from bad byte sequences) are deleted in place,
    so only whitespace separates tokens.
    """
    lowered = raw.lower()
    if config.fold_diacritics:
        lowered = fold_diacritics(lowered, config.preserve_enye)
    chars = [
        c if (_is_alphabet_char(c, config) or c.isspace()) else ""
        for c in lowered
    ]
    tokens = "".join(chars).split()
    if config.remove_stopwords:
        drop = config.stopwords | config.exclusions
        tokens = [t for t in tokens if t not in drop]
    return tokens


def _normalize_wordlist(words, fold: bool, preserve_enye: bool) -> frozenset[str]:
    cleaned = set()
    for w in words:
        w = w.strip().lower()
        if not w or w.startswith("#"):
            continue
        if fold:
            w = fold_diacritics(w, preserve_enye)
        cleaned.add(w)
    return frozenset(cleaned)


def load_wordlist(path: str | Path) -> list[str]:
    """Read a one-token-per-line UTF-8 file; ``#`` starts a comment line."""
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise UnreadableFile(path, str(exc)) from exc
    return [ln.strip() for ln in lines if ln.strip() and not ln.strip().startswith("#")]


def embedded_stopwords() -> list[str]:
    text = (
        resources.files("skillnet.data")
        .joinpath("stopwords_es.txt")
        .read_text(encoding="utf-8")
    )
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]


def make_config(
    fold_diacritics: bool = True,
    preserve_enye: bool = True,
    remove_stopwords: bool = True,
    stopword_file: str | Path | None = None,
    exclusion_file: str | Path | None = None,
) -> NormalizationConfig:
    """Build a config, folding the stopword and exclusion inventories.

    With no ``stopword_file`` the embedded Spanish list ships with the
    package; a file overrides it entirely.
    """
    if stopword_file is not None:
        words = load_wordlist(stopword_file)
        list_id = f"file:{Path(stopword_file).name}"
    elif remove_stopwords:
        words = embedded_stopwords()
        list_id = EMBEDDED_STOPWORDS_ID
    else:
        words = []
        list_id = "none"
    exclusions = load_wordlist(exclusion_file) if exclusion_file is not None else []
    return NormalizationConfig(
        fold_diacritics=fold_diacritics,
        preserve_enye=preserve_enye,
        remove_stopwords=remove_stopwords,
        stopwords=_normalize_wordlist(words, fold_diacritics, preserve_enye),
        stopword_list_id=list_id,
        exclusions=_normalize_wordlist(exclusions, fold_diacritics, preserve_enye),
    )
