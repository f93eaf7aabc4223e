"""Engine configuration: where the lexicons, corpus, and registry live.

Defaults point at the resource files shipped inside the package; every
path can be overridden so deployments can swap in their own corpora.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources as importlib_resources
from pathlib import Path

from .cooccurrence import NgramCorpus, load_corpus
from .query_parser import PosLexicon, load_wordlist
from .range_resolver import DomainScale, load_registry
from .sentiment import SentimentLexicon


def _resource_path(name: str) -> Path:
    return Path(str(importlib_resources.files("vaguequery") / "resources" / name))


def default_dataset_path(name: str) -> Path:
    """Path of a fixture dataset shipped with the package."""
    return _resource_path(f"datasets/{name}.csv")


@dataclass(frozen=True)
class EngineConfig:
    corpus_path: Path
    sentiment_lexicon_path: Path
    pos_lexicon_path: Path
    numeric_gradable_path: Path
    domain_registry_path: Path

    @classmethod
    def default(cls) -> "EngineConfig":
        return cls(
            corpus_path=_resource_path("corpus.tsv"),
            sentiment_lexicon_path=_resource_path("sentiment_lexicon.tsv"),
            pos_lexicon_path=_resource_path("pos_lexicon.tsv"),
            numeric_gradable_path=_resource_path("numeric_gradable.txt"),
            domain_registry_path=_resource_path("domain_registry.tsv"),
        )


@dataclass(frozen=True)
class Resources:
    """Loaded, immutable engine inputs; safe to share across threads."""

    corpus: NgramCorpus
    sentiment_lexicon: SentimentLexicon
    pos_lexicon: PosLexicon
    numeric_gradable: frozenset[str]
    registry: tuple[DomainScale, ...]


def load_resources(config: EngineConfig | None = None) -> Resources:
    config = config or EngineConfig.default()
    return Resources(
        corpus=load_corpus(Path(config.corpus_path)),
        sentiment_lexicon=SentimentLexicon.load(config.sentiment_lexicon_path),
        pos_lexicon=PosLexicon.load(config.pos_lexicon_path),
        numeric_gradable=load_wordlist(config.numeric_gradable_path),
        registry=load_registry(Path(config.domain_registry_path)),
    )
