"""Text normalization: canonical decomposition, diacritic and punctuation
stripping, lowercasing, whitespace collapse.

Both supported languages are written with combining marks (tonal and
under-dot diacritics in particular), so matching happens on a normalized
form while original orthography is kept for display and rewriting.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field

# Unicode general categories treated as punctuation. Replaced with a space
# rather than deleted so "word1.word2" yields two tokens.
_PUNCT_CATEGORIES = frozenset({"Pc", "Pd", "Ps", "Pe", "Pi", "Pf", "Po"})


@dataclass(frozen=True)
class NormalizedSentence:
    """A sentence after normalization: lowercase, no combining marks, no
    punctuation, tokens separated by single spaces."""

    text: str
    tokens: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.tokens and self.text:
            object.__setattr__(self, "tokens", tuple(self.text.split(" ")))


def normalize(raw: str) -> NormalizedSentence:
    """Normalize a raw sentence for matching and feature extraction.

    Steps, in order: Unicode canonical decomposition (NFD), removal of all
    combining marks (category Mn), replacement of punctuation (categories
    Pc/Pd/Ps/Pe/Pi/Pf/Po) with spaces, lowercasing, whitespace collapse,
    trim. Empty input yields an empty sentence with zero tokens.
    """
    decomposed = unicodedata.normalize("NFD", raw)
    kept = []
    for ch in decomposed:
        cat = unicodedata.category(ch)
        if cat == "Mn":
            continue
        if cat in _PUNCT_CATEGORIES:
            kept.append(" ")
            continue
        kept.append(ch)
    lowered = "".join(kept).lower()
    # Lowercasing a handful of code points (e.g. U+0130) can reintroduce a
    # combining mark; strip again so the no-Mn invariant always holds.
    if any(unicodedata.category(ch) == "Mn" for ch in lowered):
        lowered = "".join(
            ch
            for ch in unicodedata.normalize("NFD", lowered)
            if unicodedata.category(ch) != "Mn"
        )
    tokens = tuple(lowered.split())
    return NormalizedSentence(text=" ".join(tokens), tokens=tokens)


def tokenize(ns: NormalizedSentence) -> tuple[str, ...]:
    """Tokens of a normalized sentence; no empty tokens, order kept."""
    return ns.tokens


def normalize_token(raw_token: str) -> str:
    """Normalized matching key for a single token (used by lexicon lookup)."""
    return normalize(raw_token).text
