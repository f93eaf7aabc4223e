"""Modifier-to-attribute relatedness via PMI over an n-gram count corpus.

The corpus is a desk-scale count file: term counts plus unordered pair
counts, each with its own total. PMI compares the observed pair
probability with the product of the term probabilities; a missing pair
count means no co-occurrence at all, not a zero score.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from .data_manager import AttributeProfile, Dataset
from .errors import CorpusError, NoCooccurrence
from .query_parser import ModifierPhrase


@dataclass(frozen=True)
class NgramCorpus:
    unigram_counts: Mapping[str, int]
    pair_counts: Mapping[tuple[str, str], int]
    total_terms: int
    total_pairs: int

    def unigram(self, term: str) -> int:
        return self.unigram_counts.get(term, 0)

    def pair(self, a: str, b: str) -> int:
        return self.pair_counts.get((a, b) if a <= b else (b, a), 0)


@dataclass(frozen=True)
class CooccurrenceScore:
    attribute: str
    pmi: float | None
    modifier_ngram: str
    attribute_ngram: str
    cooccurring: bool


def load_corpus(source: bytes | str | io.IOBase | Path) -> NgramCorpus:
    """Parse `U<TAB>term<TAB>count` / `P<TAB>a<TAB>b<TAB>count` lines."""
    text = _read_text(source)
    unigrams: dict[str, int] = {}
    pairs: dict[tuple[str, str], int] = {}
    for line_no, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if parts[0] == "U" and len(parts) == 3:
            term, count = parts[1], _parse_count(parts[2], line_no)
            if term in unigrams:
                raise CorpusError(f"duplicate unigram '{term}'", line_no)
            unigrams[term] = count
        elif parts[0] == "P" and len(parts) == 4:
            a, b, count = parts[1], parts[2], _parse_count(parts[3], line_no)
            if not a < b:
                raise CorpusError(f"pair terms not in lexicographic order: '{a}', '{b}'", line_no)
            if (a, b) in pairs:
                raise CorpusError(f"duplicate pair '{a}'/'{b}'", line_no)
            pairs[(a, b)] = count
        else:
            raise CorpusError(f"unrecognized line: {line!r}", line_no)
    if not unigrams:
        raise CorpusError("corpus has no entries")
    for (a, b) in pairs:
        for term in (a, b):
            if term not in unigrams:
                raise CorpusError(f"pair term '{term}' missing from unigram counts")
    return NgramCorpus(
        unigram_counts=unigrams,
        pair_counts=pairs,
        total_terms=sum(unigrams.values()),
        total_pairs=sum(pairs.values()),
    )


def _parse_count(text: str, line_no: int) -> int:
    try:
        count = int(text)
    except ValueError:
        raise CorpusError(f"count is not an integer: {text!r}", line_no) from None
    if count < 1:
        raise CorpusError(f"count must be >= 1, got {count}", line_no)
    return count


def pmi(t_m: str, t_attr: str, corpus: NgramCorpus) -> float | None:
    """Natural-log PMI of two terms, or None when they never co-occur."""
    u_m = corpus.unigram(t_m)
    u_a = corpus.unigram(t_attr)
    joint = corpus.pair(t_m, t_attr)
    if u_m == 0 or u_a == 0 or joint == 0:
        return None
    p_joint = joint / corpus.total_pairs
    p_m = u_m / corpus.total_terms
    p_a = u_a / corpus.total_terms
    return math.log(p_joint / (p_m * p_a))


def score_attribute(
    modifier: ModifierPhrase, attr: AttributeProfile, corpus: NgramCorpus
) -> CooccurrenceScore:
    """Max PMI over the modifier term crossed with every attribute n-gram.

    The winning pair is recorded so provenance can cite it; the n-gram
    list is walked in its canonical order (longest first), so ties keep
    the longest gram.
    """
    term = modifier.token.lemma
    best_pmi: float | None = None
    best_gram = ""
    for gram in attr.ngrams:
        value = pmi(term, gram, corpus)
        if value is not None and (best_pmi is None or value > best_pmi):
            best_pmi, best_gram = value, gram
    return CooccurrenceScore(
        attribute=attr.display_name,
        pmi=best_pmi,
        modifier_ngram=term,
        attribute_ngram=best_gram,
        cooccurring=best_pmi is not None,
    )


def rank_attributes(
    modifier: ModifierPhrase, dataset: Dataset, corpus: NgramCorpus
) -> list[CooccurrenceScore]:
    """Co-occurring numeric attributes, strongest PMI first."""
    numeric = dataset.numeric_attributes()
    scores = [score_attribute(modifier, attr, corpus) for attr in numeric]
    kept = [s for s in scores if s.cooccurring]
    if not kept:
        raise NoCooccurrence(
            f"'{modifier.token.text}' does not co-occur with any numeric attribute "
            f"of dataset '{dataset.name}'."
        )
    kept.sort(key=lambda s: (-s.pmi, s.attribute))
    return kept


def _read_text(source: bytes | str | io.IOBase | Path) -> str:
    if isinstance(source, Path):
        return source.read_text("utf-8")
    if isinstance(source, bytes):
        return source.decode("utf-8")
    if isinstance(source, str):
        return source
    data = source.read()
    return data.decode("utf-8") if isinstance(data, bytes) else data
