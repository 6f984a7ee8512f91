"""Meaning-preserving rewriting of toxic-classified sentences.

Two-stage strategy: a sentence classified toxic is first looked up, in
normalized form, against the parallel corpus; an exact hit returns the
curated detoxified counterpart verbatim. Otherwise offensive tokens are
replaced in place using the per-language lexicon, with bigram keys tried
before unigram keys, left to right. Sentences classified non-toxic pass
through byte-identical.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass

from .classify import TrainedModel, predict
from .errors import ConfigError, DuplicateEntryError
from .normalize import _PUNCT_CATEGORIES, normalize, normalize_token
from .types import Lexicon, ParallelPair, check_language

# Substitution can create fresh bigram-key adjacencies at replacement
# boundaries; rescanning resolves them. Validated lexicons settle in one
# or two passes, the cap only guards against pathological chains.
_MAX_PASSES = 10

PASSTHROUGH = "passthrough"
CORPUS_LOOKUP = "corpus_lookup"
TOKEN_SUBSTITUTION = "token_substitution"


@dataclass(frozen=True)
class DetoxResult:
    input_text: str
    label: int
    probability: float
    output_text: str
    method: str
    replaced_tokens: tuple[tuple[str, str], ...] = ()


class CorpusIndex:
    """Sentence-level lookup table from toxic text to its detoxified form.

    Keys are normalized toxic sentences; the raw originals are kept too so
    strict (byte-exact) lookup stays available.
    """

    def __init__(self, language: str, normalized: dict[str, str], raw: dict[str, str]):
        check_language(language)
        self.language = language
        self._normalized = normalized
        self._raw = raw

    def __len__(self) -> int:
        return len(self._normalized)

    def lookup(self, text: str, strict: bool = False) -> str | None:
        if strict:
            return self._raw.get(text)
        return self._normalized.get(normalize(text).text)


def build_corpus_index(
    pairs: list[ParallelPair], language: str | None = None
) -> CorpusIndex:
    """Index parallel pairs by normalized toxic sentence.

    Two pairs whose toxic sides collide after normalization (for example,
    differing only in case or diacritics) are ambiguous and rejected.
    """
    if language is None:
        if not pairs:
            raise ConfigError("cannot infer the language of an empty pair list")
        language = pairs[0].language
    check_language(language)
    normalized: dict[str, str] = {}
    raw: dict[str, str] = {}
    seen_rows: dict[str, int] = {}
    for row, pair in enumerate(pairs, start=1):
        if pair.language != language:
            raise ConfigError(
                f"pair {row} is {pair.language!r}, index is {language!r}"
            )
        key = normalize(pair.toxic_text).text
        if key in seen_rows:
            raise DuplicateEntryError(
                f"pairs {seen_rows[key]} and {row} share the normalized "
                f"toxic sentence {key!r}"
            )
        seen_rows[key] = row
        normalized[key] = pair.detox_text
        raw[pair.toxic_text] = pair.detox_text
    return CorpusIndex(language, normalized, raw)


def _split_affixes(token: str) -> tuple[str, str, str]:
    """Split a token into leading punctuation, core, trailing punctuation."""
    start, end = 0, len(token)
    while start < end and unicodedata.category(token[start]) in _PUNCT_CATEGORIES:
        start += 1
    while end > start and unicodedata.category(token[end - 1]) in _PUNCT_CATEGORIES:
        end -= 1
    return token[:start], token[start:end], token[end:]


def _substitute_once(
    tokens: list[str], lexicon: Lexicon
) -> tuple[list[str], list[tuple[str, str]]]:
    """One left-to-right pass; longest (two-key) matches win at each spot."""
    norms = [normalize_token(t) for t in tokens]
    # Adjacency for bigram keys skips tokens that normalize away entirely.
    next_live = [-1] * len(tokens)
    nxt = -1
    for i in range(len(tokens) - 1, -1, -1):
        next_live[i] = nxt
        if norms[i]:
            nxt = i
    out: list[str] = []
    replaced: list[tuple[str, str]] = []
    i = 0
    while i < len(tokens):
        if not norms[i]:
            out.append(tokens[i])
            i += 1
            continue
        j = next_live[i]
        span_end = None
        if j != -1 and f"{norms[i]} {norms[j]}" in lexicon:
            span_end = j
            replacement = lexicon.get(f"{norms[i]} {norms[j]}")
        elif norms[i] in lexicon:
            span_end = i
            replacement = lexicon.get(norms[i])
        if span_end is None:
            out.append(tokens[i])
            i += 1
            continue
        lead, _, _ = _split_affixes(tokens[i])
        _, _, trail = _split_affixes(tokens[span_end])
        matched = " ".join(tokens[i : span_end + 1])
        core = matched[len(lead) : len(matched) - len(trail)]
        replaced.append((core, replacement))
        out.append(f"{lead}{replacement}{trail}")
        i = span_end + 1
    return out, replaced


def substitute_tokens(text: str, lexicon: Lexicon) -> tuple[str, tuple[tuple[str, str], ...]]:
    """Replace lexicon-listed tokens in a sentence, keeping other tokens as
    written. Returns the rewritten sentence and every substitution made; a
    sentence without matches comes back byte-identical."""
    tokens = text.split()
    replaced_all: list[tuple[str, str]] = []
    for _ in range(_MAX_PASSES):
        tokens, replaced = _substitute_once(tokens, lexicon)
        if not replaced:
            break
        replaced_all.extend(replaced)
        tokens = " ".join(tokens).split()
    if not replaced_all:
        return text, ()
    return " ".join(tokens), tuple(replaced_all)


def detoxify(
    text: str,
    model: TrainedModel,
    corpus_index: CorpusIndex,
    lexicon: Lexicon,
    strict_lookup: bool = False,
) -> DetoxResult:
    """Classify a sentence and rewrite it when toxic.

    Non-toxic sentences are returned byte-identical. Toxic sentences found
    in the parallel corpus return the curated counterpart verbatim; the
    rest go through lexicon substitution (which may change nothing when no
    offensive token is listed).
    """
    if not (model.language == corpus_index.language == lexicon.language):
        raise ConfigError(
            "model, corpus index, and lexicon must share one language, got "
            f"{model.language!r}/{corpus_index.language!r}/{lexicon.language!r}"
        )
    prediction = predict(model, text)
    if prediction.label == 0:
        return DetoxResult(
            input_text=text,
            label=0,
            probability=prediction.probability,
            output_text=text,
            method=PASSTHROUGH,
        )
    counterpart = corpus_index.lookup(text, strict=strict_lookup)
    if counterpart is not None:
        return DetoxResult(
            input_text=text,
            label=1,
            probability=prediction.probability,
            output_text=counterpart,
            method=CORPUS_LOOKUP,
        )
    output, replaced = substitute_tokens(text, lexicon)
    return DetoxResult(
        input_text=text,
        label=1,
        probability=prediction.probability,
        output_text=output,
        method=TOKEN_SUBSTITUTION,
        replaced_tokens=replaced,
    )
