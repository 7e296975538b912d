"""Tokenization and the sentence representation shared by every pipeline stage."""

from __future__ import annotations

import re
from dataclasses import dataclass

# Alphanumeric runs, or any single non-space character (punctuation, symbols,
# apostrophes). Underscore counts as punctuation, not as a word character.
_TOKEN_RE = re.compile(r"[^\W_]+|\S")


@dataclass(frozen=True)
class Token:
    """One token with its half-open character span in the raw sentence."""

    text: str
    begin: int
    end: int
    index: int

    def to_wire(self) -> dict:
        return {"text": self.text, "begin": self.begin, "end": self.end, "index": self.index}


@dataclass(frozen=True)
class Sentence:
    raw: str
    tokens: tuple[Token, ...]

    def token_text(self, token_begin: int, token_end: int) -> str:
        """Raw substring covering tokens [token_begin, token_end)."""
        if token_begin >= token_end:
            return ""
        return self.raw[self.tokens[token_begin].begin : self.tokens[token_end - 1].end]


def tokenize(raw: str) -> Sentence:
    """Split ``raw`` into alphanumeric runs plus single-character punctuation tokens.

    Whitespace separates tokens and is never part of one; character offsets
    always index the original string, so ``raw[t.begin:t.end] == t.text`` for
    every token. Contractions split at the apostrophe ("doesn't" becomes
    "doesn", "'", "t"); the cue lexicon carries the matching sequence variant.
    """
    tokens = tuple(
        Token(m.group(), m.start(), m.end(), i)
        for i, m in enumerate(_TOKEN_RE.finditer(raw))
    )
    return Sentence(raw, tokens)
