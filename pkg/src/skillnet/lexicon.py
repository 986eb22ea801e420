"""The skill-pattern lexicon: unigrams, phrases, and prefix wildcards."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from pathlib import Path

from .errors import DuplicatePatternId, EmptyLexicon, InvalidPatternLine, UnreadableFile
from .textnorm import NormalizationConfig, normalize_text


class PatternKind(enum.Enum):
    UNIGRAM = "unigram"
    PHRASE = "phrase"
    PREFIX_WILDCARD = "prefix_wildcard"


class LexiconSource(enum.Enum):
    EMBEDDED = "embedded"
    USER_FILE = "user_file"


@dataclass(frozen=True)
class KeywordPattern:
    pattern_id: str
    kind: PatternKind
    terms: tuple[str, ...]

    def __post_init__(self):
        if not self.terms:
            raise InvalidPatternLine(self.pattern_id, "pattern has no terms")
        if self.kind is PatternKind.PHRASE and len(self.terms) < 2:
            raise InvalidPatternLine(self.pattern_id, "phrase needs at least 2 terms")


@dataclass(frozen=True)
class Lexicon:
    patterns: tuple[KeywordPattern, ...]
    source: LexiconSource

    @property
    def pattern_ids(self) -> list[str]:
        return [p.pattern_id for p in self.patterns]


# The shipped default: 3 phrases, 1 prefix wildcard, 46 unigrams (50 total).
DEFAULT_PATTERN_LINES = (
    "pensamiento critico",
    "solucionar problemas",
    "tomar decisiones",
    "persua*",
    "comunicar",
    "creatividad",
    "paciencia",
    "crear",
    "liderar",
    "resolver",
    "comprometer",
    "comprometerse",
    "gestionar",
    "reflexionar",
    "controlar",
    "etico",
    "tolerar",
    "argumentar",
    "conflictos",
    "negociar",
    "comprender",
    "equipos",
    "planificar",
    "generar",
    "empatia",
    "compartir",
    "analizar",
    "reconocer",
    "orientar",
    "respetar",
    "motivar",
    "cooperar",
    "fortalecer",
    "impulsar",
    "acercar",
    "ayudar",
    "cambiar",
    "apreciar",
    "dirigir",
    "fomentar",
    "interactuar",
    "identificar",
    "competir",
    "manifestar",
    "responsable",
    "evaluar",
    "innovar",
    "decidir",
    "flexibilidad",
    "convencer",
)


def parse_pattern_line(line: str, config: NormalizationConfig) -> KeywordPattern:
    """One lexicon line -> pattern.

    Space-separated tokens form a phrase, a trailing ``*`` a prefix
    wildcard, anything else a unigram. Terms are normalized with the same
    config as the corpus so matching compares like with like.
    """
    label = line.strip()
    wildcard = label.endswith("*")
    body = label[:-1] if wildcard else label
    terms = tuple(normalize_text(body, config))
    if not terms:
        raise InvalidPatternLine(line, "normalizes to nothing (stopword or empty)")
    if wildcard:
        if len(terms) != 1:
            raise InvalidPatternLine(line, "wildcard must be a single prefix")
        return KeywordPattern(terms[0] + "*", PatternKind.PREFIX_WILDCARD, terms)
    if len(terms) >= 2:
        return KeywordPattern(" ".join(terms), PatternKind.PHRASE, terms)
    return KeywordPattern(terms[0], PatternKind.UNIGRAM, terms)


def _build(lines, source: LexiconSource, origin: str, config=None) -> Lexicon:
    # Stopword removal stays off for pattern terms: a pattern is a literal
    # search target, never filtered out of its own definition.
    if config is None:
        config = NormalizationConfig(remove_stopwords=False)
    patterns = []
    seen: set[str] = set()
    for line in lines:
        pattern = parse_pattern_line(line, config)
        if pattern.pattern_id in seen:
            raise DuplicatePatternId(pattern.pattern_id)
        seen.add(pattern.pattern_id)
        patterns.append(pattern)
    if not patterns:
        raise EmptyLexicon(origin)
    return Lexicon(patterns=tuple(patterns), source=source)


def default_lexicon(config: NormalizationConfig | None = None) -> Lexicon:
    return _build(DEFAULT_PATTERN_LINES, LexiconSource.EMBEDDED, "<embedded>", config)


def load_lexicon(file: str | Path, config: NormalizationConfig | None = None) -> Lexicon:
    """Parse a user lexicon file: one pattern per line, ``#`` comments."""
    path = Path(file)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UnreadableFile(path, str(exc)) from exc
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    return _build(lines, LexiconSource.USER_FILE, str(path), config)
