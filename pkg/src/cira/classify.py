"""Causal/non-causal classification with a deterministic cue-lexicon matcher.

The verdict carries a confidence so a learned classifier can plug in behind
the same interface. For the rule-based matcher the confidence is a noisy-OR
over the matched cue weights: ``1 - prod(1 - w_i)`` across matched conditional
and consequence cues. Non-causal verdicts carry the fixed confidence
``NONCAUSAL_CONFIDENCE``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lexicon import CueLexicon, find_cue_matches
from .text import Sentence

NONCAUSAL_CONFIDENCE = 0.95


@dataclass(frozen=True)
class MatchedCue:
    """A matched cue and its token index range [begin, end)."""

    cue: str
    begin: int
    end: int

    def to_wire(self) -> dict:
        return {"cue": self.cue, "begin": self.begin, "end": self.end}


@dataclass(frozen=True)
class Classification:
    causal: bool
    confidence: float
    matched_cues: tuple[MatchedCue, ...]

    def to_wire(self) -> dict:
        return {
            "causal": self.causal,
            "confidence": round(self.confidence, 6),
            "cues": [m.to_wire() for m in self.matched_cues],
        }


def classify(sentence: Sentence, lexicon: CueLexicon | None = None) -> Classification:
    """Causal iff at least one conditional cue matches.

    A consequence cue alone ("then" with no conditional cue) is weak evidence
    and classifies non-causal; its match is still reported.
    """
    lex = lexicon or CueLexicon.default()
    conditional = find_cue_matches(sentence.tokens, lex.conditional)
    consequence = find_cue_matches(sentence.tokens, lex.consequence)
    matches = sorted(conditional + consequence, key=lambda m: (m.begin, m.end))
    causal = bool(conditional)
    if causal:
        miss = 1.0
        for m in matches:
            miss *= 1.0 - m.cue.weight
        confidence = 1.0 - miss
    else:
        confidence = NONCAUSAL_CONFIDENCE
    return Classification(
        causal=causal,
        confidence=confidence,
        matched_cues=tuple(MatchedCue(m.cue.text, m.begin, m.end) for m in matches),
    )
