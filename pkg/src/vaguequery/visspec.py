"""Chart specifications and interactive provenance text.

Both outputs are plain declarative structures: the chart spec carries
its own filtered rows (so a renderer needs no second round-trip) and
the provenance text is an ordered list of segments, some of which carry
a sentiment tag, an embedded range widget, or a source link.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

from .data_manager import AttributeKind, Dataset, NumericStats
from .range_resolver import FilterRange, RangeProvenance
from .sentiment import NEGATIVE_CLASSES, SentimentClass, SentimentVerdict

if TYPE_CHECKING:  # pragma: no cover - typing only
    from .interpreter import Interpretation

MAX_INLINE_ROWS = 10_000

# At most this many filters are surfaced as interactive widgets; the
# rest are still applied and appear as plain text in the provenance.
MAX_WIDGETS = 2


class MarkType(str, Enum):
    POINT_MAP = "point_map"
    SCATTER = "scatter"
    HISTOGRAM = "histogram"


class WidgetKind(str, Enum):
    RANGE_SLIDER = "range_slider"
    ATTRIBUTE_PICKER = "attribute_picker"


class SegmentSentiment(str, Enum):
    """Sentiment tag on a text segment (UI renders blue/red/yellow)."""

    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"


@dataclass(frozen=True)
class WidgetSpec:
    attribute: str
    kind: WidgetKind
    current: FilterRange
    bounds: tuple[float, float]


@dataclass(frozen=True)
class ChartSpec:
    mark: MarkType
    encodings: dict[str, str]
    data_filter: tuple[FilterRange, ...]
    title: str
    rows: tuple[dict, ...]
    sampled: bool = False


@dataclass(frozen=True)
class Segment:
    text: str
    sentiment: SegmentSentiment | None = None
    widget: WidgetSpec | None = None
    link: str | None = None


@dataclass(frozen=True)
class ProvenanceText:
    segments: tuple[Segment, ...]


def make_widget(current: FilterRange, stats: NumericStats) -> WidgetSpec:
    """Range slider for a filter, with the handle positions clamped to
    the data bounds (a domain range may extend past the data)."""
    lo = min(max(current.lo, stats.min), stats.max)
    hi = max(min(current.hi, stats.max), stats.min)
    clamped = FilterRange(
        attribute=current.attribute,
        lo=lo,
        hi=hi,
        provenance=current.provenance,
        source_label=current.source_label,
        source_url=current.source_url,
    )
    return WidgetSpec(
        attribute=current.attribute,
        kind=WidgetKind.RANGE_SLIDER,
        current=clamped,
        bounds=(stats.min, stats.max),
    )


def row_passes(row: dict, filters: tuple[FilterRange, ...]) -> bool:
    """Conjunction of inclusive range checks; a null value fails."""
    for f in filters:
        value = row.get(f.attribute)
        if not isinstance(value, (int, float)) or not (f.lo <= value <= f.hi):
            return False
    return True


def _sample(rows: list[dict], limit: int) -> list[dict]:
    """Deterministic evenly spaced subset of `limit` rows."""
    n = len(rows)
    return [rows[(i * n) // limit] for i in range(limit)]


def choose_chart(interpretation: "Interpretation", dataset: Dataset) -> ChartSpec:
    """Pick a mark for the interpretation.

    Cascade: latitude+longitude columns -> dot map; two active numeric
    attributes -> scatter (x = strongest co-occurrence); one -> its
    histogram; none -> histogram of the first numeric column, flagged
    in the title.
    """
    filters = tuple(interpretation.filters)
    active = [f.attribute for f in filters]
    title = interpretation.query.utterance
    warnings: list[str] = []

    geo_names = {
        a.display_name for a in dataset.attributes if a.kind is AttributeKind.GEOGRAPHIC
    }
    encodings: dict[str, str] = {}
    if {"latitude", "longitude"} <= geo_names:
        mark = MarkType.POINT_MAP
        encodings["geo"] = "latitude,longitude"
        if active:
            encodings["tooltip"] = active[0]
    elif len(active) >= 2:
        mark = MarkType.SCATTER
        encodings["x"] = active[0]
        encodings["y"] = active[1]
        categorical = next(
            (a for a in dataset.attributes if a.kind is not AttributeKind.NUMERIC), None
        )
        if categorical is not None:
            encodings["tooltip"] = categorical.display_name
    elif len(active) == 1:
        mark = MarkType.HISTOGRAM
        encodings["x"] = active[0]
    else:
        mark = MarkType.HISTOGRAM
        numeric = dataset.numeric_attributes()
        if numeric:
            encodings["x"] = numeric[0].display_name
        title = f"{title} (no filters applied)"

    rows = [r for r in dataset.rows if row_passes(r, filters)]
    sampled = len(rows) > MAX_INLINE_ROWS
    if sampled:
        total = len(rows)
        rows = _sample(rows, MAX_INLINE_ROWS)
        title = f"{title} (showing {MAX_INLINE_ROWS} of {total} rows)"

    return ChartSpec(
        mark=mark,
        encodings=encodings,
        data_filter=filters,
        title=title,
        rows=tuple(rows),
        sampled=sampled,
    )


def _segment_sentiment(verdict: SentimentVerdict) -> SegmentSentiment:
    if verdict.klass in NEGATIVE_CLASSES:
        return SegmentSentiment.NEGATIVE
    if verdict.klass is SentimentClass.NEUTRAL:
        return SegmentSentiment.NEUTRAL
    return SegmentSentiment.POSITIVE


def _fmt(x: float) -> str:
    if x == int(x) and abs(x) < 1e15:
        return str(int(x))
    return str(float(x))


def build_provenance(interpretation: "Interpretation") -> ProvenanceText:
    """Render the interpretation as tagged text segments.

    The modifier and each attribute name carry their sentiment; the
    first two attributes embed range sliders, further ones state their
    range in plain text; domain-backed ranges link to their source.
    """
    from .sentiment import DirectiveKind  # local to avoid a wide import list

    segments: list[Segment] = []
    modifier = interpretation.query.modifier
    if modifier is None or interpretation.modifier_verdict is None:
        segments.append(Segment(text="No vague modifier was recognized."))
    else:
        word = modifier.token.text
        if modifier.negated:
            word = f"not {word}"
        segments.append(
            Segment(text=word, sentiment=_segment_sentiment(interpretation.modifier_verdict))
        )
        segments.append(Segment(text=" was read as: "))

        widget_by_attr = {w.attribute: w for w in interpretation.widgets}
        cooccurring = {s.attribute for s in interpretation.scored if s.cooccurring}
        for i, f in enumerate(interpretation.filters):
            if i:
                segments.append(Segment(text="; "))
            directive = interpretation.verdicts[f.attribute]
            segments.append(
                Segment(text="high " if directive.kind is DirectiveKind.TOP_N else "low ")
            )
            segments.append(
                Segment(
                    text=f.attribute,
                    sentiment=_segment_sentiment(directive.attribute_verdict),
                    widget=widget_by_attr.get(f.attribute),
                )
            )
            if f.attribute not in widget_by_attr:
                segments.append(Segment(text=f" in [{_fmt(f.lo)}, {_fmt(f.hi)}]"))
            if f.provenance is RangeProvenance.DOMAIN_KNOWLEDGE and f.source_url:
                segments.append(
                    Segment(text=f" per {f.source_label or 'a domain scale'}", link=f.source_url)
                )
            if f.attribute not in cooccurring:
                segments.append(Segment(text=" (added; no co-occurrence evidence)"))
        if not interpretation.filters:
            segments.append(Segment(text="no active attributes."))

    for note in interpretation.warnings:
        segments.append(Segment(text=f" Note: {note}"))
    return ProvenanceText(segments=tuple(segments))
