"""Core domain types shared across the pipeline."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigError, LexiconError
from .normalize import normalize

# Supported language codes and their default decision thresholds.
LANGUAGES = ("xh", "yo")
DEFAULT_THRESHOLDS = {"xh": 0.45, "yo": 0.50}


def check_language(code: str) -> str:
    if code not in LANGUAGES:
        raise ConfigError(f"unsupported language {code!r}; expected one of {LANGUAGES}")
    return code


@dataclass(frozen=True)
class ParallelPair:
    """One toxic sentence aligned with its detoxified counterpart."""

    toxic_text: str
    detox_text: str
    language: str

    def __post_init__(self):
        check_language(self.language)
        if not self.toxic_text.strip() or not self.detox_text.strip():
            raise ConfigError("parallel pair sides must be non-empty after trimming")
        if self.toxic_text == self.detox_text:
            raise ConfigError("toxic and detoxified sides of a pair must differ")


@dataclass(frozen=True)
class LabeledExample:
    """A sentence with its binary toxicity label (1 = toxic, 0 = non-toxic)."""

    text: str
    label: int
    language: str

    def __post_init__(self):
        check_language(self.language)
        if self.label not in (0, 1):
            raise ConfigError(f"label must be 0 or 1, got {self.label!r}")


class Lexicon:
    """Per-language map from normalized toxic token(s) to a neutral replacement.

    Keys are stored in normalized form (1 or 2 tokens); replacements keep their
    intended diacritics. Entries whose replacement would itself re-form a key
    are rejected, so single substitution passes cannot chain or cycle.
    """

    def __init__(self, language: str, entries: dict[str, str]):
        check_language(language)
        self.language = language
        self.entries = dict(entries)
        self._validate()
        # Longest keys match first; precompute the split for the rewriter.
        self.bigram_keys = frozenset(k for k in self.entries if " " in k)
        self.unigram_keys = frozenset(k for k in self.entries if " " not in k)

    def _validate(self) -> None:
        for key, replacement in self.entries.items():
            if not key:
                raise LexiconError("empty lexicon key")
            if not replacement or not replacement.strip():
                raise LexiconError(f"empty replacement for key {key!r}")
            norm_key = normalize(key).text
            if norm_key != key:
                raise LexiconError(
                    f"lexicon key {key!r} is not in normalized form (expected {norm_key!r})"
                )
            if len(key.split(" ")) > 2:
                raise LexiconError(
                    f"lexicon key {key!r} has more than two tokens; matching supports "
                    "unigram and bigram keys only"
                )
            replacement_norm = normalize(replacement)
            if replacement_norm.text == key:
                raise LexiconError(f"lexicon key {key!r} maps to itself")
            if replacement_norm.text in self.entries:
                raise LexiconError(
                    f"replacement {replacement!r} for key {key!r} is itself a lexicon key"
                )
            for token in replacement_norm.tokens:
                if token in self.entries:
                    raise LexiconError(
                        f"replacement {replacement!r} for key {key!r} contains the "
                        f"lexicon key {token!r}"
                    )
            for left, right in zip(replacement_norm.tokens, replacement_norm.tokens[1:]):
                if f"{left} {right}" in self.entries:
                    raise LexiconError(
                        f"replacement {replacement!r} for key {key!r} re-forms the "
                        f"lexicon key {left!r} {right!r}"
                    )

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, key: str) -> bool:
        return key in self.entries

    def get(self, key: str) -> str | None:
        return self.entries.get(key)
