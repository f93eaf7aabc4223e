"""Turn a top/bottom directive into a concrete numeric filter range.

Domain knowledge, when registered for an attribute concept, fully
overrides the statistical defaults. Otherwise the top of a range is
[median + MAD, max] and the bottom is [min, |median - MAD|], intersected
with the attribute's observed bounds; an empty intersection falls back
to median-anchored bounds.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .data_manager import AttributeProfile, NumericStats, normalize_name
from .errors import ConfigError, DegenerateRange
from .sentiment import DirectiveKind, RangeDirective


class RangeProvenance(str, Enum):
    STATISTICAL = "statistical"
    DOMAIN_KNOWLEDGE = "domain_knowledge"
    USER_OVERRIDE = "user_override"


@dataclass(frozen=True)
class FilterRange:
    attribute: str
    lo: float
    hi: float
    provenance: RangeProvenance
    source_label: str = ""
    source_url: str = ""


@dataclass(frozen=True)
class DomainScale:
    concept: str
    bottom_range: tuple[float, float]
    top_range: tuple[float, float]
    source_url: str
    label: str


def load_registry(source: bytes | str | io.IOBase | Path) -> tuple[DomainScale, ...]:
    """Parse `concept<TAB>b_lo<TAB>b_hi<TAB>t_lo<TAB>t_hi<TAB>label<TAB>url` lines."""
    text = _read_text(source)
    scales: list[DomainScale] = []
    seen: set[str] = set()
    for line_no, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 7:
            raise ConfigError(f"registry line {line_no}: expected 7 tab-separated fields")
        concept = normalize_name(parts[0])
        if concept in seen:
            raise ConfigError(f"registry line {line_no}: duplicate concept '{concept}'")
        seen.add(concept)
        try:
            b_lo, b_hi, t_lo, t_hi = (float(p) for p in parts[1:5])
        except ValueError:
            raise ConfigError(f"registry line {line_no}: range bounds must be numbers") from None
        if b_lo > b_hi or t_lo > t_hi:
            raise ConfigError(f"registry line {line_no}: ranges must be well-ordered")
        scales.append(
            DomainScale(
                concept=concept,
                bottom_range=(b_lo, b_hi),
                top_range=(t_lo, t_hi),
                label=parts[5],
                source_url=parts[6],
            )
        )
    return tuple(scales)


def lookup_scale(
    attribute: AttributeProfile, registry: tuple[DomainScale, ...]
) -> DomainScale | None:
    """Exact concept match first, then the longest n-gram submatch."""
    for scale in registry:
        if scale.concept == attribute.display_name:
            return scale
    matches = [s for s in registry if s.concept in attribute.ngrams]
    if not matches:
        return None
    matches.sort(key=lambda s: (-len(s.concept.split()), s.concept))
    return matches[0]


def resolve(
    directive: RangeDirective,
    stats: NumericStats,
    scale: DomainScale | None = None,
    attribute: str = "",
) -> FilterRange:
    """Resolve a directive into a filter range.

    Raises DegenerateRange when the statistical formula lands entirely
    outside [min, max]; callers wanting the median fallback should use
    resolve_with_fallback.
    """
    if scale is not None:
        lo, hi = scale.top_range if directive.kind is DirectiveKind.TOP_N else scale.bottom_range
        return FilterRange(
            attribute=attribute,
            lo=lo,
            hi=hi,
            provenance=RangeProvenance.DOMAIN_KNOWLEDGE,
            source_label=scale.label,
            source_url=scale.source_url,
        )
    if directive.kind is DirectiveKind.TOP_N:
        raw_lo, raw_hi = stats.median + stats.mad, stats.max
    else:
        raw_lo, raw_hi = stats.min, abs(stats.median - stats.mad)
    lo, hi = max(raw_lo, stats.min), min(raw_hi, stats.max)
    if lo > hi:
        raise DegenerateRange(attribute)
    return FilterRange(attribute=attribute, lo=lo, hi=hi, provenance=RangeProvenance.STATISTICAL)


def resolve_with_fallback(
    directive: RangeDirective,
    stats: NumericStats,
    scale: DomainScale | None = None,
    attribute: str = "",
) -> tuple[FilterRange, bool]:
    """resolve(), falling back to [median, max] / [min, median] on a
    degenerate result. Returns (range, fell_back)."""
    try:
        return resolve(directive, stats, scale, attribute), False
    except DegenerateRange:
        if directive.kind is DirectiveKind.TOP_N:
            lo, hi = stats.median, stats.max
        else:
            lo, hi = stats.min, stats.median
        return (
            FilterRange(attribute=attribute, lo=lo, hi=hi, provenance=RangeProvenance.STATISTICAL),
            True,
        )


def _read_text(source: bytes | str | io.IOBase | Path) -> str:
    if isinstance(source, Path):
        return source.read_text("utf-8")
    if isinstance(source, bytes):
        return source.decode("utf-8")
    if isinstance(source, str):
        return source
    data = source.read()
    return data.decode("utf-8") if isinstance(data, bytes) else data
