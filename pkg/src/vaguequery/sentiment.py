"""Five-class sentiment classification and polarity combination.

Word-level lexicon classifier: a phrase takes the class of its strongest
word (largest absolute normalized score, earliest word on ties), neutral
when nothing matches. Negation mirrors the class around neutral. Polarity
combination ignores strength entirely and treats neutral as positive:
matching polarities call for the top of an attribute's range, diverging
polarities for the bottom.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .errors import ConfigError


class SentimentClass(str, Enum):
    VERY_NEGATIVE = "very_negative"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"
    POSITIVE = "positive"
    VERY_POSITIVE = "very_positive"


SCORES = {
    SentimentClass.VERY_NEGATIVE: -1.0,
    SentimentClass.NEGATIVE: -0.5,
    SentimentClass.NEUTRAL: 0.0,
    SentimentClass.POSITIVE: 0.5,
    SentimentClass.VERY_POSITIVE: 1.0,
}

MIRROR = {
    SentimentClass.VERY_NEGATIVE: SentimentClass.VERY_POSITIVE,
    SentimentClass.NEGATIVE: SentimentClass.POSITIVE,
    SentimentClass.NEUTRAL: SentimentClass.NEUTRAL,
    SentimentClass.POSITIVE: SentimentClass.NEGATIVE,
    SentimentClass.VERY_POSITIVE: SentimentClass.VERY_NEGATIVE,
}

_FILE_CLASSES = {
    "vneg": SentimentClass.VERY_NEGATIVE,
    "neg": SentimentClass.NEGATIVE,
    "neu": SentimentClass.NEUTRAL,
    "pos": SentimentClass.POSITIVE,
    "vpos": SentimentClass.VERY_POSITIVE,
}

NEGATIVE_CLASSES = frozenset({SentimentClass.NEGATIVE, SentimentClass.VERY_NEGATIVE})


class DirectiveKind(str, Enum):
    TOP_N = "top_n"
    BOTTOM_N = "bottom_n"


@dataclass(frozen=True)
class SentimentVerdict:
    phrase: str
    klass: SentimentClass
    score: float


@dataclass(frozen=True)
class RangeDirective:
    kind: DirectiveKind
    modifier_verdict: SentimentVerdict
    attribute_verdict: SentimentVerdict


class SentimentLexicon:
    """word -> SentimentClass table, loaded from `word<TAB>class` lines."""

    def __init__(self, entries: dict[str, SentimentClass]):
        self._entries = dict(entries)

    def lookup(self, word: str) -> SentimentClass:
        return self._entries.get(word, SentimentClass.NEUTRAL)

    def __contains__(self, word: str) -> bool:
        return word in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    @classmethod
    def load(cls, path: str | Path) -> "SentimentLexicon":
        entries: dict[str, SentimentClass] = {}
        for line_no, line in enumerate(Path(path).read_text("utf-8").splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2 or parts[1] not in _FILE_CLASSES:
                raise ConfigError(f"{path}:{line_no}: expected 'word<TAB>vneg|neg|neu|pos|vpos'")
            entries[parts[0].lower()] = _FILE_CLASSES[parts[1]]
        if not entries:
            raise ConfigError(f"{path}: sentiment lexicon is empty")
        return cls(entries)


def classify(phrase: str, negated: bool, lexicon: SentimentLexicon) -> SentimentVerdict:
    """Sentiment of a phrase: strongest word wins, neutral by default."""
    best = SentimentClass.NEUTRAL
    best_abs = 0.0
    for word in phrase.lower().split():
        klass = lexicon.lookup(word)
        strength = abs(SCORES[klass])
        if strength > best_abs:
            best, best_abs = klass, strength
    if negated:
        best = MIRROR[best]
    return SentimentVerdict(phrase=phrase, klass=best, score=SCORES[best])


def polarity_sign(klass: SentimentClass) -> int:
    """Collapsed polarity with neutral grouped alongside positive."""
    return -1 if klass in NEGATIVE_CLASSES else 1


def combine(modifier: SentimentVerdict, attribute: SentimentVerdict) -> RangeDirective:
    """Matching polarities -> top of the range, diverging -> bottom."""
    same = polarity_sign(modifier.klass) == polarity_sign(attribute.klass)
    return RangeDirective(
        kind=DirectiveKind.TOP_N if same else DirectiveKind.BOTTOM_N,
        modifier_verdict=modifier,
        attribute_verdict=attribute,
    )
