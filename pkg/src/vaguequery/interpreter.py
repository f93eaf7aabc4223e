"""End-to-end query interpretation with session-scoped repairs.

A session accumulates refinement events (range overrides, attribute
adds/removes) in an append-only log; interpretation folds that log into
state and applies it on top of the engine defaults, so replaying the
same events on a fresh session reproduces the same result.
"""

from __future__ import annotations

import time
import uuid
from dataclasses import dataclass, field
from typing import Callable, Union

from .config import Resources
from .cooccurrence import CooccurrenceScore, rank_attributes, score_attribute
from .data_manager import AttributeKind, AttributeProfile, Dataset
from .errors import NoCooccurrence, NotSupported, RefineError
from .query_parser import (
    ModifierClass,
    ParsedQuery,
    adjective_candidates,
    extract_modifier,
    pos_tag,
    tokenize,
)
from .range_resolver import (
    FilterRange,
    RangeProvenance,
    lookup_scale,
    resolve_with_fallback,
)
from .sentiment import RangeDirective, SentimentVerdict, classify, combine
from .visspec import MAX_WIDGETS, WidgetSpec, make_widget


# --- refinement events -------------------------------------------------


@dataclass(frozen=True)
class SetRange:
    attribute: str
    lo: float
    hi: float


@dataclass(frozen=True)
class AddAttribute:
    attribute: str


@dataclass(frozen=True)
class RemoveAttribute:
    attribute: str


RefinementEvent = Union[SetRange, AddAttribute, RemoveAttribute]


@dataclass(frozen=True)
class SessionState:
    """The fold of a session's event log."""

    overrides: dict[str, tuple[float, float]]
    added: tuple[str, ...]
    removed: frozenset[str]


def fold_events(events: list[RefinementEvent]) -> SessionState:
    """Pure left fold of the event log; keeps added and removed disjoint
    (the most recent add/remove of an attribute wins)."""
    overrides: dict[str, tuple[float, float]] = {}
    added: list[str] = []
    removed: list[str] = []
    for event in events:
        if isinstance(event, SetRange):
            overrides[event.attribute] = (event.lo, event.hi)
        elif isinstance(event, AddAttribute):
            if event.attribute not in added:
                added.append(event.attribute)
            removed = [a for a in removed if a != event.attribute]
        elif isinstance(event, RemoveAttribute):
            added = [a for a in added if a != event.attribute]
            if event.attribute not in removed:
                removed.append(event.attribute)
    return SessionState(overrides=overrides, added=tuple(added), removed=frozenset(removed))


@dataclass
class Session:
    id: str
    dataset: Dataset
    events: list[RefinementEvent] = field(default_factory=list)
    created_at: float = 0.0
    last_active: float = 0.0
    last_utterance: str | None = None
    last_interpretation: "Interpretation | None" = None

    @property
    def state(self) -> SessionState:
        return fold_events(self.events)


def new_session(dataset: Dataset, clock: Callable[[], float] = time.time) -> Session:
    now = clock()
    return Session(id=uuid.uuid4().hex, dataset=dataset, created_at=now, last_active=now)


# --- interpretation ----------------------------------------------------


@dataclass(frozen=True)
class Interpretation:
    query: ParsedQuery
    scored: tuple[CooccurrenceScore, ...]
    verdicts: dict[str, RangeDirective]
    filters: tuple[FilterRange, ...]
    widgets: tuple[WidgetSpec, ...]
    warnings: tuple[str, ...]
    modifier_verdict: SentimentVerdict | None

    @property
    def active(self) -> tuple[str, ...]:
        return tuple(f.attribute for f in self.filters)


_UNSUPPORTED_KIND = {
    ModifierClass.SUPERLATIVE: "a superlative",
    ModifierClass.COMPARATIVE: "a comparative",
    ModifierClass.NUMERIC_GRADABLE: "a directly numeric-gradable adjective",
}


class Interpreter:
    """Runs the full pipeline against one set of loaded resources."""

    def __init__(self, resources: Resources):
        self.resources = resources

    # -- public operations ----------------------------------------

    def interpret(self, utterance: str, session: Session) -> Interpretation:
        tokens = pos_tag(tokenize(utterance), self.resources.pos_lexicon)
        parsed = extract_modifier(
            utterance, tokens, session.dataset, self.resources.numeric_gradable
        )
        interpretation = self._render(parsed, session)
        session.last_utterance = utterance
        session.last_interpretation = interpretation
        return interpretation

    def refine_range(
        self, session: Session, attribute: str, lo: float, hi: float
    ) -> Interpretation:
        self._require_interpretation(session)
        if lo > hi:
            raise RefineError(f"Range start {lo} is greater than its end {hi}.")
        self._require_active(session, attribute)
        session.events.append(SetRange(attribute=attribute, lo=float(lo), hi=float(hi)))
        return self._reinterpret(session)

    def add_attribute(self, session: Session, attribute: str) -> Interpretation:
        self._require_interpretation(session)
        profile = self._require_attribute(session, attribute)
        if profile.kind is not AttributeKind.NUMERIC:
            raise RefineError(f"'{attribute}' is not a numeric attribute.")
        if attribute in session.last_interpretation.active:
            raise RefineError(f"'{attribute}' is already part of the result.")
        session.events.append(AddAttribute(attribute=attribute))
        return self._reinterpret(session)

    def remove_attribute(self, session: Session, attribute: str) -> Interpretation:
        self._require_interpretation(session)
        self._require_active(session, attribute)
        session.events.append(RemoveAttribute(attribute=attribute))
        return self._reinterpret(session)

    # -- internals -------------------------------------------------

    def _require_interpretation(self, session: Session) -> None:
        if session.last_utterance is None:
            raise RefineError("Interpret a query before refining its result.")

    def _require_attribute(self, session: Session, attribute: str) -> AttributeProfile:
        try:
            return session.dataset.attribute(attribute)
        except KeyError:
            raise RefineError(
                f"'{attribute}' is not an attribute of dataset '{session.dataset.name}'."
            ) from None

    def _require_active(self, session: Session, attribute: str) -> None:
        self._require_attribute(session, attribute)
        if attribute not in session.last_interpretation.active:
            raise RefineError(f"'{attribute}' is not part of the active attribute set.")

    def _reinterpret(self, session: Session) -> Interpretation:
        return self.interpret(session.last_utterance, session)

    def _render(self, parsed: ParsedQuery, session: Session) -> Interpretation:
        dataset = session.dataset
        state = session.state
        warnings: list[str] = []

        modifier = parsed.modifier
        if modifier is None:
            return Interpretation(
                query=parsed,
                scored=(),
                verdicts={},
                filters=(),
                widgets=(),
                warnings=(
                    "No vague modifier was recognized; nothing is filtered.",
                ),
                modifier_verdict=None,
            )

        if modifier.classification is not ModifierClass.COMPLEX_GRADABLE:
            kind = _UNSUPPORTED_KIND[modifier.classification]
            raise NotSupported(
                f"'{modifier.token.text}' is {kind}; it maps to a direct numeric "
                "filter rather than a sentiment reading. Try a qualitative "
                "modifier such as 'unsafe' or 'booming'.",
                detail=f"classification: {modifier.classification.value}",
            )

        for other in adjective_candidates(
            list(parsed.tokens), dataset, self.resources.numeric_gradable
        ):
            if other.token.span != modifier.token.span:
                warnings.append(
                    f"Ignored additional modifier '{other.token.text}'; "
                    f"only '{modifier.token.text}' was interpreted."
                )

        try:
            ranked = rank_attributes(modifier, dataset, self.resources.corpus)
        except NoCooccurrence:
            if not state.added:
                raise
            ranked = []
            warnings.append(
                f"'{modifier.token.text}' has no co-occurrence evidence; "
                "showing only the attributes you added."
            )

        defaults = [s.attribute for s in ranked if s.attribute not in state.removed][
            :MAX_WIDGETS
        ]
        active = list(defaults)
        for name in state.added:
            if name not in active:
                active.append(name)

        scored = list(ranked)
        scored_names = {s.attribute for s in scored}
        for name in active:
            if name not in scored_names:
                scored.append(
                    score_attribute(modifier, dataset.attribute(name), self.resources.corpus)
                )
                scored_names.add(name)

        lexicon = self.resources.sentiment_lexicon
        modifier_verdict = classify(modifier.token.text.lower(), modifier.negated, lexicon)

        verdicts: dict[str, RangeDirective] = {}
        filters: list[FilterRange] = []
        for name in active:
            attr = dataset.attribute(name)
            attribute_verdict = classify(attr.display_name, False, lexicon)
            directive = combine(modifier_verdict, attribute_verdict)
            scale = lookup_scale(attr, self.resources.registry)
            rng, fell_back = resolve_with_fallback(
                directive, attr.stats, scale, attribute=name
            )
            if fell_back:
                warnings.append(
                    f"The statistical range for '{name}' was degenerate; "
                    "fell back to a median-anchored range."
                )
            if name in state.overrides:
                lo, hi = state.overrides[name]
                rng = FilterRange(
                    attribute=name, lo=lo, hi=hi, provenance=RangeProvenance.USER_OVERRIDE
                )
            verdicts[name] = directive
            filters.append(rng)

        if not active:
            warnings.append("No attributes are active for this query; nothing is filtered.")

        widgets = tuple(
            make_widget(f, dataset.attribute(f.attribute).stats)
            for f in filters[:MAX_WIDGETS]
        )

        return Interpretation(
            query=parsed,
            scored=tuple(scored),
            verdicts=verdicts,
            filters=tuple(filters),
            widgets=widgets,
            warnings=tuple(warnings),
            modifier_verdict=modifier_verdict,
        )
