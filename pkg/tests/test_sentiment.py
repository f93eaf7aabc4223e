import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vaguequery.errors import ConfigError
from vaguequery.sentiment import (
    MIRROR,
    SCORES,
    DirectiveKind,
    SentimentClass,
    SentimentLexicon,
    SentimentVerdict,
    classify,
    combine,
    polarity_sign,
)

ALL_CLASSES = list(SentimentClass)


def _verdict(klass):
    return SentimentVerdict(phrase="x", klass=klass, score=SCORES[klass])


# --- classify ----------------------------------------------------------


def test_classify_safe_positive(resources):
    v = classify("safe", False, resources.sentiment_lexicon)
    assert v.klass is SentimentClass.POSITIVE
    assert v.score == 0.5


def test_classify_attribute_phrase_negative(resources):
    # "magnitude" alone is neutral; "earthquake" pulls the phrase negative
    assert (
        classify("earthquake magnitude", False, resources.sentiment_lexicon).klass
        is SentimentClass.NEGATIVE
    )
    assert (
        classify("magnitude", False, resources.sentiment_lexicon).klass
        is SentimentClass.NEUTRAL
    )


def test_classify_unknown_word_neutral(resources):
    v = classify("population", False, resources.sentiment_lexicon)
    assert v.klass is SentimentClass.NEUTRAL
    assert v.score == 0.0


def test_classify_negation_mirrors(resources):
    v = classify("unsafe", True, resources.sentiment_lexicon)
    assert v.klass is SentimentClass.POSITIVE


def test_classify_strongest_word_wins():
    lexicon = SentimentLexicon(
        {"awful": SentimentClass.VERY_NEGATIVE, "nice": SentimentClass.POSITIVE}
    )
    v = classify("nice awful day", False, lexicon)
    assert v.klass is SentimentClass.VERY_NEGATIVE


def test_classify_tie_keeps_earlier_word():
    lexicon = SentimentLexicon(
        {"good": SentimentClass.POSITIVE, "bad": SentimentClass.NEGATIVE}
    )
    assert classify("good bad", False, lexicon).klass is SentimentClass.POSITIVE
    assert classify("bad good", False, lexicon).klass is SentimentClass.NEGATIVE


def test_required_exemplar_classes(resources):
    lexicon = resources.sentiment_lexicon
    positive = ["safe", "booming", "good", "prosperous", "flourishing", "income", "expectancy"]
    negative = ["unsafe", "struggling", "bad", "severe", "poor", "scary", "earthquake"]
    for word in positive:
        assert classify(word, False, lexicon).score > 0, word
    for word in negative:
        assert classify(word, False, lexicon).score < 0, word
    for word in ["population", "magnitude", "capita"]:
        assert classify(word, False, lexicon).score == 0, word


def test_lexicon_load_rejects_bad_class(tmp_path):
    p = tmp_path / "lex.tsv"
    p.write_text("happy\tsuperpositive\n")
    with pytest.raises(ConfigError):
        SentimentLexicon.load(p)


# --- combine -----------------------------------------------------------


def test_combine_booming_income_top(resources):
    m = classify("booming", False, resources.sentiment_lexicon)
    a = classify("income per capita", False, resources.sentiment_lexicon)
    assert combine(m, a).kind is DirectiveKind.TOP_N


def test_combine_safe_magnitude_bottom(resources):
    m = classify("safe", False, resources.sentiment_lexicon)
    a = classify("earthquake magnitude", False, resources.sentiment_lexicon)
    assert combine(m, a).kind is DirectiveKind.BOTTOM_N


def test_combine_both_negative_top():
    d = combine(_verdict(SentimentClass.NEGATIVE), _verdict(SentimentClass.NEGATIVE))
    assert d.kind is DirectiveKind.TOP_N


def test_combine_neutral_pair_top():
    d = combine(_verdict(SentimentClass.NEUTRAL), _verdict(SentimentClass.NEUTRAL))
    assert d.kind is DirectiveKind.TOP_N


def test_combine_full_truth_table():
    # same collapsed sign (neutral counts as positive) -> top_n
    for m, a in itertools.product(ALL_CLASSES, ALL_CLASSES):
        expected = (
            DirectiveKind.TOP_N
            if polarity_sign(m) == polarity_sign(a)
            else DirectiveKind.BOTTOM_N
        )
        assert combine(_verdict(m), _verdict(a)).kind is expected


def test_combine_ignores_strength():
    weak = combine(_verdict(SentimentClass.POSITIVE), _verdict(SentimentClass.NEGATIVE))
    strong = combine(
        _verdict(SentimentClass.VERY_POSITIVE), _verdict(SentimentClass.VERY_NEGATIVE)
    )
    assert weak.kind is strong.kind


@given(st.sampled_from(ALL_CLASSES), st.sampled_from(ALL_CLASSES))
def test_combine_symmetric_under_polarity_flip(m, a):
    flip = {
        SentimentClass.VERY_NEGATIVE: SentimentClass.VERY_POSITIVE,
        SentimentClass.NEGATIVE: SentimentClass.POSITIVE,
        SentimentClass.NEUTRAL: SentimentClass.NEUTRAL,
        SentimentClass.POSITIVE: SentimentClass.NEGATIVE,
        SentimentClass.VERY_POSITIVE: SentimentClass.VERY_NEGATIVE,
    }
    base = combine(_verdict(m), _verdict(a)).kind
    flipped = combine(_verdict(flip[m]), _verdict(flip[a])).kind
    if m is not SentimentClass.NEUTRAL and a is not SentimentClass.NEUTRAL:
        assert base is flipped


# --- class machinery ---------------------------------------------------


def test_scores_are_the_five_normalized_values():
    assert sorted(SCORES.values()) == [-1.0, -0.5, 0.0, 0.5, 1.0]


@given(st.sampled_from(ALL_CLASSES))
def test_mirror_is_involution(klass):
    assert MIRROR[MIRROR[klass]] is klass


@given(st.sampled_from(ALL_CLASSES))
def test_double_negation_is_identity(klass):
    lexicon = SentimentLexicon({"word": klass})
    once = classify("word", True, lexicon)
    # negating the already-negated reading restores the original class
    assert MIRROR[once.klass] is klass
