"""vaguequery: resolve vague modifiers in data questions into concrete
numeric filters, charts, and repairable provenance.

Typical embedded use:

    from vaguequery import Interpreter, load_resources, new_session
    from vaguequery.data_manager import load_dataset

    resources = load_resources()
    engine = Interpreter(resources)
    session = new_session(load_dataset(open("cities.csv").read(), "cities"))
    result = engine.interpret("which cities are affordable?", session)
"""

from .config import EngineConfig, Resources, default_dataset_path, load_resources
from .cooccurrence import CooccurrenceScore, NgramCorpus, load_corpus, pmi
from .data_manager import (
    AttributeKind,
    AttributeProfile,
    Dataset,
    NumericStats,
    compute_stats,
    load_dataset,
    normalize_name,
)
from .errors import (
    ConfigError,
    CorpusError,
    DegenerateRange,
    EngineError,
    IngestError,
    NoCooccurrence,
    NotSupported,
    ParseError,
    RefineError,
    SchemaError,
    StatsError,
    UnintelligibleQuery,
)
from .interpreter import (
    AddAttribute,
    Interpretation,
    Interpreter,
    RemoveAttribute,
    Session,
    SetRange,
    fold_events,
    new_session,
)
from .query_parser import ModifierClass, ParsedQuery, PennTag, PosLexicon, tokenize
from .range_resolver import (
    DomainScale,
    FilterRange,
    RangeProvenance,
    load_registry,
    resolve,
    resolve_with_fallback,
)
from .sentiment import (
    DirectiveKind,
    RangeDirective,
    SentimentClass,
    SentimentLexicon,
    SentimentVerdict,
    classify,
    combine,
)
from .visspec import (
    ChartSpec,
    MarkType,
    ProvenanceText,
    Segment,
    WidgetKind,
    WidgetSpec,
    build_provenance,
    choose_chart,
)

__version__ = "0.1.0"

__all__ = [
    "AddAttribute",
    "AttributeKind",
    "AttributeProfile",
    "ChartSpec",
    "ConfigError",
    "CooccurrenceScore",
    "CorpusError",
    "Dataset",
    "DegenerateRange",
    "DirectiveKind",
    "DomainScale",
    "EngineConfig",
    "EngineError",
    "FilterRange",
    "IngestError",
    "Interpretation",
    "Interpreter",
    "MarkType",
    "ModifierClass",
    "NgramCorpus",
    "NoCooccurrence",
    "NotSupported",
    "NumericStats",
    "ParseError",
    "ParsedQuery",
    "PennTag",
    "PosLexicon",
    "ProvenanceText",
    "RangeDirective",
    "RangeProvenance",
    "RefineError",
    "RemoveAttribute",
    "Resources",
    "SchemaError",
    "Segment",
    "SentimentClass",
    "SentimentLexicon",
    "SentimentVerdict",
    "Session",
    "SetRange",
    "StatsError",
    "UnintelligibleQuery",
    "WidgetKind",
    "WidgetSpec",
    "choose_chart",
    "build_provenance",
    "classify",
    "combine",
    "compute_stats",
    "default_dataset_path",
    "fold_events",
    "load_corpus",
    "load_dataset",
    "load_registry",
    "load_resources",
    "new_session",
    "normalize_name",
    "pmi",
    "resolve",
    "resolve_with_fallback",
    "tokenize",
]
