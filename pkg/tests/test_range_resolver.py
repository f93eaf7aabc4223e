import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vaguequery.data_manager import (
    AttributeKind,
    AttributeProfile,
    NumericStats,
    attribute_ngrams,
)
from vaguequery.errors import ConfigError, DegenerateRange
from vaguequery.range_resolver import (
    DomainScale,
    FilterRange,
    RangeProvenance,
    load_registry,
    lookup_scale,
    resolve,
    resolve_with_fallback,
)
from vaguequery.sentiment import (
    DirectiveKind,
    RangeDirective,
    SentimentClass,
    SentimentVerdict,
)


def _stats(lo, hi, median, mad):
    return NumericStats(min=lo, max=hi, median=median, mad=mad, count=10, null_count=0)


def _directive(kind):
    neutral = SentimentVerdict(phrase="x", klass=SentimentClass.NEUTRAL, score=0.0)
    return RangeDirective(kind=kind, modifier_verdict=neutral, attribute_verdict=neutral)


TOP = _directive(DirectiveKind.TOP_N)
BOTTOM = _directive(DirectiveKind.BOTTOM_N)


def _profile(display_name):
    return AttributeProfile(
        raw_name=display_name,
        display_name=display_name,
        kind=AttributeKind.NUMERIC,
        stats=None,
        ngrams=attribute_ngrams(display_name),
    )


# --- statistical resolution ---------------------------------------------


def test_top_range_is_median_plus_mad_to_max():
    r = resolve(TOP, _stats(0, 100, 50, 10), attribute="a")
    assert (r.lo, r.hi) == (60, 100)
    assert r.provenance is RangeProvenance.STATISTICAL


def test_bottom_range_is_min_to_abs_median_minus_mad():
    r = resolve(BOTTOM, _stats(2, 9, 5, 1), attribute="a")
    assert (r.lo, r.hi) == (2, 4)


def test_zero_mad_top_collapses_to_median_to_max():
    r = resolve(TOP, _stats(1, 7, 3, 0), attribute="a")
    assert (r.lo, r.hi) == (3, 7)


def test_degenerate_top_raises():
    # median + MAD exceeds max -> empty clamped intersection
    with pytest.raises(DegenerateRange):
        resolve(TOP, _stats(0, 10, 9, 5), attribute="a")


def test_fallback_top_is_median_to_max():
    r, fell_back = resolve_with_fallback(TOP, _stats(0, 10, 9, 5), attribute="a")
    assert fell_back is True
    assert (r.lo, r.hi) == (9, 10)


def test_degenerate_bottom_falls_back_to_min_to_median():
    # |median - MAD| = |5 - 4| = 1 < min = 2 -> empty intersection
    stats = _stats(2, 9, 5, 4)
    with pytest.raises(DegenerateRange):
        resolve(BOTTOM, stats, attribute="a")
    r, fell_back = resolve_with_fallback(BOTTOM, stats, attribute="a")
    assert fell_back is True
    assert (r.lo, r.hi) == (2, 5)


def test_non_degenerate_does_not_fall_back():
    r, fell_back = resolve_with_fallback(TOP, _stats(0, 100, 50, 10), attribute="a")
    assert fell_back is False
    assert (r.lo, r.hi) == (60, 100)


# --- domain knowledge ----------------------------------------------------


def test_registry_scale_overrides_stats(resources):
    scale = lookup_scale(_profile("earthquake magnitude"), resources.registry)
    assert scale is not None
    r = resolve(BOTTOM, _stats(2, 8, 5, 1.5), scale, attribute="earthquake magnitude")
    assert (r.lo, r.hi) == (0.0, 4.9)
    assert r.provenance is RangeProvenance.DOMAIN_KNOWLEDGE
    assert r.source_label == "Richter scale"
    assert r.source_url.startswith("https://")


def test_registry_top_range(resources):
    scale = lookup_scale(_profile("magnitude"), resources.registry)
    r = resolve(TOP, _stats(2, 8, 5, 1.5), scale, attribute="magnitude")
    assert (r.lo, r.hi) == (5.0, 10.0)


def test_scale_ignores_degenerate_stats(resources):
    # domain knowledge wins even where the statistical formula would blow up
    scale = lookup_scale(_profile("magnitude"), resources.registry)
    r, fell_back = resolve_with_fallback(TOP, _stats(0, 1, 1, 5), scale, attribute="m")
    assert fell_back is False
    assert (r.lo, r.hi) == (5.0, 10.0)


def test_lookup_scale_absent_for_unregistered():
    registry = load_registry("magnitude\t0\t4.9\t5\t10\tRichter\thttps://x\n")
    assert lookup_scale(_profile("population"), registry) is None


def test_lookup_scale_matches_ngram_of_longer_name():
    registry = load_registry("magnitude\t0\t4.9\t5\t10\tRichter\thttps://x\n")
    scale = lookup_scale(_profile("earthquake magnitude"), registry)
    assert scale is not None and scale.concept == "magnitude"


def test_lookup_scale_exact_beats_submatch():
    registry = load_registry(
        "magnitude\t0\t4.9\t5\t10\tRichter\thttps://x\n"
        "earthquake magnitude\t0\t3\t3\t10\tLocal\thttps://y\n"
    )
    scale = lookup_scale(_profile("earthquake magnitude"), registry)
    assert scale.concept == "earthquake magnitude"
    assert scale.label == "Local"


def test_lookup_scale_prefers_longer_submatch():
    registry = load_registry(
        "capita\t0\t1\t1\t2\tA\thttps://a\n"
        "per capita\t0\t3\t3\t6\tB\thttps://b\n"
    )
    scale = lookup_scale(_profile("income per capita"), registry)
    assert scale.concept == "per capita"


# --- registry parsing ----------------------------------------------------


def test_load_registry_rejects_wrong_field_count():
    with pytest.raises(ConfigError):
        load_registry("magnitude\t0\t4.9\t5\t10\tRichter\n")


def test_load_registry_rejects_duplicate_concept():
    line = "magnitude\t0\t4.9\t5\t10\tRichter\thttps://x\n"
    with pytest.raises(ConfigError):
        load_registry(line + line)


def test_load_registry_rejects_inverted_range():
    with pytest.raises(ConfigError):
        load_registry("magnitude\t4.9\t0\t5\t10\tRichter\thttps://x\n")


def test_load_registry_rejects_non_numeric_bound():
    with pytest.raises(ConfigError):
        load_registry("magnitude\tzero\t4.9\t5\t10\tRichter\thttps://x\n")


def test_load_registry_normalizes_concept_names():
    registry = load_registry("earthquakeMagnitude\t0\t4.9\t5\t10\tR\thttps://x\n")
    assert registry[0].concept == "earthquake magnitude"


def test_shipped_registry_has_richter(resources):
    concepts = {s.concept for s in resources.registry}
    assert "magnitude" in concepts


# --- properties ----------------------------------------------------------


finite = st.floats(
    min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False
)


@st.composite
def stats_strategy(draw):
    a = draw(finite)
    b = draw(finite)
    lo, hi = min(a, b), max(a, b)
    median = draw(st.floats(min_value=lo, max_value=hi, allow_nan=False))
    mad = draw(st.floats(min_value=0, max_value=1e6, allow_nan=False))
    return _stats(lo, hi, median, mad)


@given(stats_strategy(), st.sampled_from([DirectiveKind.TOP_N, DirectiveKind.BOTTOM_N]))
def test_resolved_range_is_ordered_and_clamped(stats, kind):
    r, _ = resolve_with_fallback(_directive(kind), stats, attribute="a")
    assert r.lo <= r.hi
    assert stats.min <= r.lo and r.hi <= stats.max


@given(stats_strategy())
def test_fallback_fires_exactly_when_intersection_empty(stats):
    for kind in (DirectiveKind.TOP_N, DirectiveKind.BOTTOM_N):
        if kind is DirectiveKind.TOP_N:
            raw = (stats.median + stats.mad, stats.max)
        else:
            raw = (stats.min, abs(stats.median - stats.mad))
        clamped = (max(raw[0], stats.min), min(raw[1], stats.max))
        _, fell_back = resolve_with_fallback(_directive(kind), stats, attribute="a")
        assert fell_back == (clamped[0] > clamped[1])


@given(stats_strategy())
def test_top_formula_exact_when_inside_bounds(stats):
    try:
        r = resolve(TOP, stats, attribute="a")
    except DegenerateRange:
        return
    assert r.lo == max(stats.median + stats.mad, stats.min)
    assert r.hi == stats.max


@given(finite)
def test_top_range_translates_with_the_data(shift):
    base = _stats(0, 100, 50, 10)
    moved = _stats(0 + shift, 100 + shift, 50 + shift, 10)
    r0 = resolve(TOP, base, attribute="a")
    r1 = resolve(TOP, moved, attribute="a")
    assert math.isclose(r1.lo, r0.lo + shift, rel_tol=1e-9, abs_tol=1e-6)
    assert math.isclose(r1.hi, r0.hi + shift, rel_tol=1e-9, abs_tol=1e-6)


def test_filter_range_equality_is_structural():
    a = FilterRange("x", 1.0, 2.0, RangeProvenance.STATISTICAL)
    b = FilterRange("x", 1.0, 2.0, RangeProvenance.STATISTICAL)
    assert a == b
