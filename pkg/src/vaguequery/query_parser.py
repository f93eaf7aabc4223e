"""Utterance tokenization, deterministic POS tagging, and modifier extraction.

The tagger is lexicon-driven with suffix fallbacks, so identical input
always yields identical tags. Adjectives split four ways: superlative
(JJS), comparative (JJR), numeric-graded (a fixed word list: "high",
"cheap", ...), and the complex subjective adjectives this engine
actually interprets ("safe", "struggling", ...).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path
from typing import Iterable

from .data_manager import Dataset
from .errors import ConfigError, ParseError, UnintelligibleQuery


class PennTag(str, Enum):
    NN = "NN"
    NNS = "NNS"
    JJ = "JJ"
    JJR = "JJR"
    JJS = "JJS"
    RB = "RB"
    VB = "VB"
    DT = "DT"
    IN = "IN"
    WP = "WP"
    WRB = "WRB"
    CD = "CD"
    OTHER = "OTHER"


class ModifierClass(str, Enum):
    COMPLEX_GRADABLE = "complex_gradable"
    NUMERIC_GRADABLE = "numeric_gradable"
    SUPERLATIVE = "superlative"
    COMPARATIVE = "comparative"


ADJECTIVE_TAGS = (PennTag.JJ, PennTag.JJR, PennTag.JJS)
NEGATION_PARTICLES = frozenset({"not", "n't", "never", "no"})


@dataclass(frozen=True)
class Token:
    text: str
    lemma: str
    span: tuple[int, int]
    pos: PennTag | None = None


@dataclass(frozen=True)
class ModifierPhrase:
    token: Token
    classification: ModifierClass
    negated: bool


@dataclass(frozen=True)
class ParsedQuery:
    utterance: str
    tokens: tuple[Token, ...]
    modifier: ModifierPhrase | None
    explicit_attributes: tuple[str, ...]


class PosLexicon:
    """word -> PennTag table, loaded from `word<TAB>tag` lines."""

    def __init__(self, entries: dict[str, PennTag]):
        self._entries = dict(entries)
        self.adjectives = frozenset(w for w, t in entries.items() if t is PennTag.JJ)

    def lookup(self, word: str) -> PennTag | None:
        return self._entries.get(word)

    def __len__(self) -> int:
        return len(self._entries)

    @classmethod
    def load(cls, path: str | Path) -> "PosLexicon":
        entries: dict[str, PennTag] = {}
        for line_no, line in enumerate(Path(path).read_text("utf-8").splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ConfigError(f"{path}:{line_no}: expected 'word<TAB>tag'")
            word, tag = parts
            try:
                entries[word.lower()] = PennTag(tag)
            except ValueError as exc:
                raise ConfigError(f"{path}:{line_no}: unknown tag '{tag}'") from exc
        if not entries:
            raise ConfigError(f"{path}: POS lexicon is empty")
        return cls(entries)


def load_wordlist(path: str | Path) -> frozenset[str]:
    """One word per line; blank lines and # comments ignored."""
    words = set()
    for line in Path(path).read_text("utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    if not words:
        raise ConfigError(f"{path}: word list is empty")
    return frozenset(words)


_WORD = re.compile(r"\d+\.\d+|[A-Za-z0-9]+(?:'[A-Za-z]+)*")
_NUMBER = re.compile(r"^\d+(\.\d+)?$")


def _lemma(text: str) -> str:
    w = text.lower()
    if w.endswith("ies") and len(w) > 4:
        return w[:-3] + "y"
    if w.endswith(("ches", "shes", "sses", "xes", "zes")):
        return w[:-2]
    if w.endswith("s") and len(w) > 3 and not w.endswith(("ss", "us", "is")):
        return w[:-1]
    return w


def tokenize(utterance: str) -> list[Token]:
    """Split on whitespace/punctuation, dropping punctuation.

    "n't" contractions come off as their own token so negation scoping
    sees them ("isn't" -> "is", "n't").
    """
    if not utterance or not utterance.strip():
        raise ParseError("utterance is empty")
    tokens: list[Token] = []
    for m in _WORD.finditer(utterance):
        text, start = m.group(0), m.start()
        if text.lower().endswith("n't") and len(text) > 3:
            stem = text[:-3]
            tokens.append(Token(stem, _lemma(stem), (start, start + len(stem))))
            tokens.append(Token("n't", "n't", (start + len(stem), m.end())))
        else:
            tokens.append(Token(text, _lemma(text), (start, m.end())))
    if not tokens:
        raise ParseError("utterance contains no words")
    return tokens


def pos_tag(tokens: Iterable[Token], lexicon: PosLexicon) -> list[Token]:
    """Assign one PennTag per token: lexicon first, then suffix rules."""
    tokens = list(tokens)
    if not tokens:
        raise ParseError("no tokens to tag")
    return [replace(t, pos=_tag_one(t, lexicon)) for t in tokens]


def _tag_one(token: Token, lexicon: PosLexicon) -> PennTag:
    word = token.text.lower()
    hit = lexicon.lookup(word)
    if hit is not None:
        return hit
    plural_stripped = token.lemma != word
    if plural_stripped:
        base = lexicon.lookup(token.lemma)
        if base is PennTag.NN:
            return PennTag.NNS
        if base is not None:
            return base
    if _NUMBER.match(word):
        return PennTag.CD
    if word.endswith("est") and len(word) > 4:
        return PennTag.JJS
    if word.endswith("er") and len(word) > 3 and _has_adjective_stem(word, lexicon):
        return PennTag.JJR
    if word.endswith(("ing", "ed")) and len(word) > 4:
        # adjective readings were already caught by the lexicon lookup
        return PennTag.VB
    return PennTag.NNS if plural_stripped else PennTag.NN


def _has_adjective_stem(word: str, lexicon: PosLexicon) -> bool:
    stems = {word[:-1], word[:-2]}
    base = word[:-2]
    if len(base) >= 2 and base[-1] == base[-2]:
        stems.add(base[:-1])  # bigger -> big
    return any(s in lexicon.adjectives for s in stems)


def adjective_candidates(
    tokens: Iterable[Token], dataset: Dataset, numeric_gradable: frozenset[str]
) -> list[ModifierPhrase]:
    """All adjective tokens that could act as the vague modifier, in order.

    Tokens matching a single-word attribute n-gram are excluded: they name
    data, they do not grade it.
    """
    tokens = list(tokens)
    attr_words = {
        g
        for attr in dataset.attributes
        for g in attr.ngrams
        if " " not in g
    }
    phrases = []
    for i, tok in enumerate(tokens):
        if tok.pos not in ADJECTIVE_TAGS:
            continue
        if tok.lemma in attr_words or tok.text.lower() in attr_words:
            continue
        phrases.append(
            ModifierPhrase(
                token=tok,
                classification=_classify(tok, numeric_gradable),
                negated=_negated(tokens, i),
            )
        )
    return phrases


def _classify(token: Token, numeric_gradable: frozenset[str]) -> ModifierClass:
    if token.pos is PennTag.JJS:
        return ModifierClass.SUPERLATIVE
    if token.pos is PennTag.JJR:
        return ModifierClass.COMPARATIVE
    if token.lemma in numeric_gradable or token.text.lower() in numeric_gradable:
        return ModifierClass.NUMERIC_GRADABLE
    return ModifierClass.COMPLEX_GRADABLE


def _negated(tokens: list[Token], index: int) -> bool:
    window = tokens[max(0, index - 2) : index]
    hits = sum(
        1
        for t in window
        if t.text.lower() in NEGATION_PARTICLES or t.lemma in NEGATION_PARTICLES
    )
    return hits % 2 == 1


def extract_modifier(
    utterance: str,
    tokens: Iterable[Token],
    dataset: Dataset,
    numeric_gradable: frozenset[str],
) -> ParsedQuery:
    """Pick the vague modifier and resolve explicit attribute mentions.

    The first complex gradable adjective wins; with none present, the
    first adjective of any flavor is kept so the caller can route it
    (superlatives and numeric-graded forms are handled elsewhere).
    """
    tokens = list(tokens)
    candidates = adjective_candidates(tokens, dataset, numeric_gradable)
    modifier = next(
        (p for p in candidates if p.classification is ModifierClass.COMPLEX_GRADABLE),
        candidates[0] if candidates else None,
    )
    explicit = _explicit_attributes(tokens, dataset)
    if modifier is None and not explicit:
        raise UnintelligibleQuery(
            "No vague modifier or data attribute was recognized in the query.",
            detail=f"utterance: {utterance!r}",
        )
    return ParsedQuery(
        utterance=utterance,
        tokens=tuple(tokens),
        modifier=modifier,
        explicit_attributes=explicit,
    )


def _explicit_attributes(tokens: list[Token], dataset: Dataset) -> tuple[str, ...]:
    lemma_seq = [t.lemma for t in tokens]
    text_seq = [t.text.lower() for t in tokens]
    found = []
    for attr in dataset.attributes:
        for gram in attr.ngrams:
            words = gram.split()
            if _contains(lemma_seq, words) or _contains(text_seq, words):
                found.append(attr.display_name)
                break
    return tuple(found)


def _contains(seq: list[str], sub: list[str]) -> bool:
    n = len(sub)
    return any(seq[i : i + n] == sub for i in range(len(seq) - n + 1))
