"""Cue lexicon: the word lists that drive classification and role labeling.

The lexicon is loadable from a plain-text file (one cue per line, format
``<kind>;<cue text>;<weight>``); a default is embedded so the package works
with no configuration.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import CorpusParseError
from .text import Token

KINDS = ("conditional", "consequence", "conjunction", "disjunction", "negation")

# Multi-token cues are space-separated. "' t" is the contraction tail left by
# the tokenizer ("doesn't" -> "doesn", "'", "t"). "unless" is deliberately
# both a conditional cue and a negation marker.
DEFAULT_LEXICON_TEXT = """\
conditional;if;0.9
conditional;when;0.9
conditional;whenever;0.9
conditional;once;0.9
conditional;as soon as;0.9
conditional;in case;0.9
conditional;unless;0.9
conditional;upon;0.9
conditional;after;0.9
consequence;then;0.6
conjunction;and;1.0
disjunction;or;1.0
negation;not;1.0
negation;no;1.0
negation;never;1.0
negation;unless;1.0
negation;' t;1.0
"""


@dataclass(frozen=True)
class Cue:
    """A lowercase token sequence with a match weight in (0, 1]."""

    tokens: tuple[str, ...]
    weight: float

    def __post_init__(self):
        if not self.tokens or any(not t for t in self.tokens):
            raise ValueError("cue token sequence must be non-empty")
        if any(t != t.lower() for t in self.tokens):
            raise ValueError(f"cue must be lowercase: {self.text!r}")
        if not 0.0 < self.weight <= 1.0:
            raise ValueError(f"cue weight must be in (0, 1]: {self.weight}")

    @property
    def text(self) -> str:
        return " ".join(self.tokens)


@dataclass(frozen=True)
class CueMatch:
    """A cue matched against a token range [begin, end) of a sentence."""

    cue: Cue
    begin: int
    end: int


@dataclass(frozen=True)
class CueLexicon:
    conditional: tuple[Cue, ...]
    consequence: tuple[Cue, ...]
    conjunction: tuple[Cue, ...]
    disjunction: tuple[Cue, ...]
    negation: tuple[Cue, ...]

    @property
    def junctor(self) -> tuple[Cue, ...]:
        return self.conjunction + self.disjunction

    @staticmethod
    def default() -> "CueLexicon":
        return _DEFAULT

    @classmethod
    def from_text(cls, text: str) -> "CueLexicon":
        groups: dict[str, list[Cue]] = {k: [] for k in KINDS}
        for lineno, line in enumerate(text.splitlines(), 1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            parts = stripped.split(";")
            if len(parts) != 3:
                raise CorpusParseError("expected <kind>;<cue text>;<weight>", lineno)
            kind, cue_text, weight_text = (p.strip() for p in parts)
            if kind not in groups:
                raise CorpusParseError(f"unknown cue kind {kind!r}", lineno)
            try:
                weight = float(weight_text)
            except ValueError:
                raise CorpusParseError(f"bad weight {weight_text!r}", lineno) from None
            try:
                cue = Cue(tuple(cue_text.lower().split()), weight)
            except ValueError as exc:
                raise CorpusParseError(str(exc), lineno) from None
            groups[kind].append(cue)
        return cls(**{k: tuple(v) for k, v in groups.items()})

    @classmethod
    def from_file(cls, path: str | Path) -> "CueLexicon":
        return cls.from_text(Path(path).read_text(encoding="utf-8"))


def find_cue_matches(tokens: Sequence[Token], cues: Sequence[Cue]) -> list[CueMatch]:
    """Left-to-right greedy matching: longest cue wins, matched tokens are consumed.

    Comparison is case-insensitive on token texts; returned indices are
    positions within ``tokens``.
    """
    ordered = sorted(cues, key=lambda c: -len(c.tokens))
    matches: list[CueMatch] = []
    i = 0
    while i < len(tokens):
        for cue in ordered:
            k = len(cue.tokens)
            if i + k <= len(tokens) and all(
                tokens[i + j].text.lower() == cue.tokens[j] for j in range(k)
            ):
                matches.append(CueMatch(cue, i, i + k))
                i += k
                break
        else:
            i += 1
    return matches


_DEFAULT = CueLexicon.from_text(DEFAULT_LEXICON_TEXT)
