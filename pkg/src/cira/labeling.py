"""Role labeling: event spans, junctors, negation, and variable/condition sub-labels.

Two label levels. Level one says which event a token belongs to (CAUSE_1..9,
EFFECT_1..9) or how events relate (CONJUNCTION, DISJUNCTION, NEGATION,
KEYWORD). Level two splits each event into its VARIABLE and its CONDITION.

The rule labeler is deliberately replaceable: anything satisfying
``LabelerPort`` (and passing ``validate_labels``) can drive the rest of the
pipeline, e.g. a learned sequence labeler.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Protocol

from .errors import LabelError, NoCauseError, NoEffectError, NotCausalError
from .lexicon import CueLexicon, CueMatch, find_cue_matches
from .text import Sentence, Token

MAX_EVENTS_PER_FAMILY = 9


class LabelKind(str, Enum):
    CAUSE_1 = "CAUSE_1"
    CAUSE_2 = "CAUSE_2"
    CAUSE_3 = "CAUSE_3"
    CAUSE_4 = "CAUSE_4"
    CAUSE_5 = "CAUSE_5"
    CAUSE_6 = "CAUSE_6"
    CAUSE_7 = "CAUSE_7"
    CAUSE_8 = "CAUSE_8"
    CAUSE_9 = "CAUSE_9"
    EFFECT_1 = "EFFECT_1"
    EFFECT_2 = "EFFECT_2"
    EFFECT_3 = "EFFECT_3"
    EFFECT_4 = "EFFECT_4"
    EFFECT_5 = "EFFECT_5"
    EFFECT_6 = "EFFECT_6"
    EFFECT_7 = "EFFECT_7"
    EFFECT_8 = "EFFECT_8"
    EFFECT_9 = "EFFECT_9"
    CONJUNCTION = "CONJUNCTION"
    DISJUNCTION = "DISJUNCTION"
    NEGATION = "NEGATION"
    VARIABLE = "VARIABLE"
    CONDITION = "CONDITION"
    KEYWORD = "KEYWORD"


def cause_kind(number: int) -> LabelKind:
    return LabelKind[f"CAUSE_{number}"]


def effect_kind(number: int) -> LabelKind:
    return LabelKind[f"EFFECT_{number}"]


def event_family(kind: LabelKind) -> str | None:
    """"cause" or "effect" for event labels, None for everything else."""
    name = kind.value
    if name.startswith("CAUSE_"):
        return "cause"
    if name.startswith("EFFECT_"):
        return "effect"
    return None


def event_number(kind: LabelKind) -> int | None:
    family = event_family(kind)
    if family is None:
        return None
    return int(kind.value.rsplit("_", 1)[1])


@dataclass(frozen=True)
class LabelSpan:
    """A label over the half-open token range [token_begin, token_end)."""

    kind: LabelKind
    token_begin: int
    token_end: int


@dataclass(frozen=True)
class LabeledSentence:
    sentence: Sentence
    spans: tuple[LabelSpan, ...]

    def spans_of(self, kind: LabelKind) -> list[LabelSpan]:
        return [s for s in self.spans if s.kind is kind]

    def span_text(self, span: LabelSpan) -> str:
        return self.sentence.token_text(span.token_begin, span.token_end)

    def char_span(self, span: LabelSpan) -> tuple[int, int]:
        """Character offsets of a token span, for UI highlighting."""
        tokens = self.sentence.tokens
        return tokens[span.token_begin].begin, tokens[span.token_end - 1].end


class LabelerPort(Protocol):
    """Seam for pluggable labelers; output must pass ``validate_labels``."""

    def label(self, sentence: Sentence) -> LabeledSentence: ...


# Closed auxiliary list for the condition-start heuristic, plus the stems the
# tokenizer leaves behind when it splits contractions ("doesn't" -> "doesn").
AUXILIARIES = frozenset(
    "is are was were has have had can shall will must does do did".split()
) | frozenset(
    "isn aren wasn weren hasn haven hadn doesn don didn won wouldn shouldn "
    "couldn mustn shan needn".split()
)

DETERMINERS = frozenset(
    "the a an this that these those each every all some any no "
    "its his her their our my your".split()
)


def _is_punct(token: Token) -> bool:
    return not any(ch.isalnum() for ch in token.text)


def _verb_like(texts: list[str], i: int) -> bool:
    """First token of the CONDITION: an auxiliary, or an s/ed/ing form not
    preceded by a determiner."""
    t = texts[i].lower()
    if t in AUXILIARIES:
        return True
    if t in DETERMINERS or t == "as":
        return False
    if i > 0 and texts[i - 1].lower() in DETERMINERS:
        return False
    return t.endswith("ed") or t.endswith("ing") or (len(t) >= 3 and t.endswith("s"))


class RuleLabeler:
    """Deterministic cue-driven labeler implementing ``LabelerPort``."""

    def __init__(self, lexicon: CueLexicon | None = None):
        self.lexicon = lexicon or CueLexicon.default()

    def label(self, sentence: Sentence) -> LabeledSentence:
        toks = sentence.tokens
        conditional = find_cue_matches(toks, self.lexicon.conditional)
        if not conditional:
            raise NotCausalError("no conditional cue found")
        primary = conditional[0]

        limit = len(toks)
        while limit > 0 and _is_punct(toks[limit - 1]):
            limit -= 1

        spans: list[LabelSpan] = [LabelSpan(LabelKind.KEYWORD, primary.begin, primary.end)]

        consequence = [
            m
            for m in find_cue_matches(toks, self.lexicon.consequence)
            if m.begin >= primary.end and m.end <= limit
        ]
        if consequence:
            boundary = consequence[0]
            spans.append(LabelSpan(LabelKind.KEYWORD, boundary.begin, boundary.end))
            cause_range = (primary.end, boundary.begin)
            effect_range = (boundary.end, limit)
        elif primary.begin > 0:
            # Suffix conditional: "The system shuts down when the power fails."
            cause_range = (primary.end, limit)
            effect_range = (0, primary.begin)
        else:
            # "Unless X, Y": the first comma separates cause from effect.
            comma = next(
                (i for i in range(primary.end, limit) if toks[i].text == ","), None
            )
            if comma is None:
                raise NoEffectError("no consequence region identifiable")
            cause_range = (primary.end, comma)
            effect_range = (comma + 1, limit)

        # "unless" doubles as a negation marker for the first cause event.
        if primary.cue.text == "unless":
            spans.append(LabelSpan(LabelKind.NEGATION, primary.begin, primary.end))

        n_causes = self._label_region(sentence, cause_range, "cause", spans)
        if n_causes == 0:
            raise NoCauseError("no cause event identifiable")
        n_effects = self._label_region(sentence, effect_range, "effect", spans)
        if n_effects == 0:
            raise NoEffectError("no effect event identifiable")

        ordered = tuple(
            sorted(spans, key=lambda s: (s.token_begin, s.token_end, s.kind.value))
        )
        return LabeledSentence(sentence, ordered)

    def _label_region(
        self,
        sentence: Sentence,
        rng: tuple[int, int],
        family: str,
        spans: list[LabelSpan],
    ) -> int:
        """Segment [rng) at junctors into numbered events; returns the event count."""
        toks = sentence.tokens
        begin, end = rng
        if begin >= end:
            return 0
        window = toks[begin:end]
        junctors = sorted(
            [
                (_offset(m, begin), LabelKind.CONJUNCTION)
                for m in find_cue_matches(window, self.lexicon.conjunction)
            ]
            + [
                (_offset(m, begin), LabelKind.DISJUNCTION)
                for m in find_cue_matches(window, self.lexicon.disjunction)
            ],
            key=lambda item: item[0].begin,
        )

        segments: list[tuple[int, int]] = []
        cursor = begin
        for match, _ in junctors:
            segments.append((cursor, match.begin))
            cursor = match.end
        segments.append((cursor, end))

        # Per segment: negation matches plus the token positions left for the
        # event itself. A segment may be negation-only or empty; it then
        # yields no event and its neighboring junctors stay unlabeled.
        payloads: list[tuple[list[CueMatch], list[int]]] = []
        for s, t in (_trim(toks, s, t) for s, t in segments):
            negations = [
                _offset(m, s) for m in find_cue_matches(toks[s:t], self.lexicon.negation)
            ]
            excluded = {i for m in negations for i in range(m.begin, m.end)}
            positions = [i for i in range(s, t) if i not in excluded]
            payloads.append((negations, positions))

        number = 0
        for i, (negations, positions) in enumerate(payloads):
            for m in negations:
                spans.append(LabelSpan(LabelKind.NEGATION, m.begin, m.end))
            if not positions:
                continue
            number += 1
            if number > MAX_EVENTS_PER_FAMILY:
                raise LabelError(f"more than {MAX_EVENTS_PER_FAMILY} {family} events")
            if i > 0 and payloads[i - 1][1]:
                jmatch, jkind = junctors[i - 1]
                spans.append(LabelSpan(jkind, jmatch.begin, jmatch.end))
            kind = cause_kind(number) if family == "cause" else effect_kind(number)
            self._label_event(sentence, positions, kind, spans)
        return number

    def _label_event(
        self,
        sentence: Sentence,
        positions: list[int],
        kind: LabelKind,
        spans: list[LabelSpan],
    ) -> None:
        """Emit the event span(s) plus VARIABLE/CONDITION sub-spans.

        ``positions`` excludes negation tokens, so a mid-event negation splits
        the event into two contiguous parts; sub-labels follow the same parts.
        """
        toks = sentence.tokens
        for pb, pe in _contiguous_runs(positions):
            spans.append(LabelSpan(kind, pb, pe))

        texts = [toks[i].text for i in positions]
        verb_at = next((i for i in range(len(texts)) if _verb_like(texts, i)), None)
        if verb_at is None:
            sub = [(LabelKind.VARIABLE, positions)]
        elif verb_at == 0:
            sub = [(LabelKind.CONDITION, positions)]
        else:
            sub = [
                (LabelKind.VARIABLE, positions[:verb_at]),
                (LabelKind.CONDITION, positions[verb_at:]),
            ]
        for sub_kind, sub_positions in sub:
            for pb, pe in _contiguous_runs(sub_positions):
                spans.append(LabelSpan(sub_kind, pb, pe))


def _offset(match: CueMatch, base: int) -> CueMatch:
    return CueMatch(match.cue, match.begin + base, match.end + base)


def _trim(toks: tuple[Token, ...], s: int, t: int) -> tuple[int, int]:
    while s < t and _is_punct(toks[s]):
        s += 1
    while t > s and _is_punct(toks[t - 1]):
        t -= 1
    return s, t


def _contiguous_runs(positions: list[int]) -> list[tuple[int, int]]:
    runs: list[tuple[int, int]] = []
    for p in positions:
        if runs and runs[-1][1] == p:
            runs[-1] = (runs[-1][0], p + 1)
        else:
            runs.append((p, p + 1))
    return runs


def label(sentence: Sentence, lexicon: CueLexicon | None = None) -> LabeledSentence:
    """Label ``sentence`` with the rule labeler; raises for non-causal input."""
    return RuleLabeler(lexicon).label(sentence)


def validate_labels(labeled: LabeledSentence) -> list[str]:
    """Check every LabeledSentence invariant; one entry per violation, empty when valid."""
    violations: list[str] = []
    n = len(labeled.sentence.tokens)

    for span in labeled.spans:
        if not (0 <= span.token_begin < span.token_end <= n):
            violations.append(
                f"{span.kind.value} span ({span.token_begin},{span.token_end}) "
                f"out of bounds for {n} tokens"
            )

    events = sorted(
        (s for s in labeled.spans if event_family(s.kind) is not None),
        key=lambda s: (s.token_begin, s.token_end),
    )
    for prev, cur in zip(events, events[1:]):
        if cur.token_begin < prev.token_end:
            violations.append(
                f"event spans overlap: {prev.kind.value} "
                f"({prev.token_begin},{prev.token_end}) and {cur.kind.value} "
                f"({cur.token_begin},{cur.token_end})"
            )

    for span in labeled.spans:
        if span.kind in (LabelKind.VARIABLE, LabelKind.CONDITION):
            containers = [
                e
                for e in events
                if e.token_begin <= span.token_begin and span.token_end <= e.token_end
            ]
            if len(containers) != 1:
                violations.append(
                    f"{span.kind.value} span ({span.token_begin},{span.token_end}) "
                    f"contained in {len(containers)} event spans, expected exactly 1"
                )

    for event in events:
        for sub_kind in (LabelKind.VARIABLE, LabelKind.CONDITION):
            count = sum(
                1
                for s in labeled.spans
                if s.kind is sub_kind
                and event.token_begin <= s.token_begin
                and s.token_end <= event.token_end
            )
            if count > 1:
                violations.append(
                    f"{event.kind.value} span ({event.token_begin},{event.token_end}) "
                    f"contains {count} {sub_kind.value} spans"
                )

    for span in labeled.spans:
        if span.kind in (LabelKind.CONJUNCTION, LabelKind.DISJUNCTION):
            if not _between_same_family(span, events):
                violations.append(
                    f"{span.kind.value} span ({span.token_begin},{span.token_end}) "
                    f"not strictly between two event spans of the same family"
                )

    for family in ("cause", "effect"):
        family_spans = [e for e in events if event_family(e.kind) == family]
        numbers = sorted({event_number(e.kind) for e in family_spans})
        if numbers and numbers != list(range(1, numbers[-1] + 1)):
            violations.append(f"{family} event numbers not contiguous from 1: {numbers}")
        firsts = {}
        for e in family_spans:
            k = event_number(e.kind)
            firsts.setdefault(k, e.token_begin)
        ordered = sorted(firsts)
        for a, b in zip(ordered, ordered[1:]):
            if firsts[a] >= firsts[b]:
                violations.append(
                    f"{family} event {b} does not begin after event {a}"
                )

    if events:
        kinds = {e.kind for e in events}
        if LabelKind.CAUSE_1 not in kinds:
            violations.append("causal labeling has no CAUSE_1 span")
        if LabelKind.EFFECT_1 not in kinds:
            violations.append("causal labeling has no EFFECT_1 span")

    return violations


def _between_same_family(span: LabelSpan, events: list[LabelSpan]) -> bool:
    for family in ("cause", "effect"):
        family_spans = [e for e in events if event_family(e.kind) == family]
        for prev, cur in zip(family_spans, family_spans[1:]):
            if prev.token_end <= span.token_begin and span.token_end <= cur.token_begin:
                return True
    return False


def labels_to_wire(labeled: LabeledSentence) -> list[dict]:
    """Wire form with character offsets (not token indices), for highlighting."""
    out = []
    for span in labeled.spans:
        begin, end = labeled.char_span(span)
        out.append({"label": span.kind.value, "begin": begin, "end": end})
    out.sort(key=lambda d: (d["begin"], d["end"], d["label"]))
    return out
