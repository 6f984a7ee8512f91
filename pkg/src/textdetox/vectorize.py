"""Vocabulary construction and TF-IDF feature extraction.

Features are unigrams plus adjacent-token bigrams over normalized sentences,
weighted tf * ln(N / df) with raw in-sentence counts, no smoothing and no
vector normalization. The natural log base and the absence of damping are
frozen into the model file so alternate implementations cannot silently
diverge.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyVocabularyError, SingleClassError
from .normalize import NormalizedSentence, normalize
from .types import LabeledExample


def sentence_terms(tokens: tuple[str, ...] | list[str]) -> list[str]:
    """All unigrams and adjacent bigrams of a token stream, in order."""
    terms = list(tokens)
    terms += [f"{tokens[i]} {tokens[i + 1]}" for i in range(len(tokens) - 1)]
    return terms


@dataclass(frozen=True)
class Vocabulary:
    """Ordered n-gram inventory with document frequencies.

    Term order is lexicographic, so identical corpora always produce an
    identical feature space; a term's index is stable for a model's lifetime.
    """

    terms: tuple[str, ...]
    doc_freq: tuple[int, ...]
    corpus_size: int
    ngram_range: tuple[int, int] = (1, 2)
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.terms) != len(self.doc_freq):
            raise ValueError("terms and doc_freq length mismatch")
        if len(set(self.terms)) != len(self.terms):
            raise ValueError("vocabulary terms must be unique")
        if self.ngram_range != (1, 2):
            raise ValueError(f"unsupported ngram_range {self.ngram_range}")
        for term, df in zip(self.terms, self.doc_freq):
            if not 1 <= df <= self.corpus_size:
                raise ValueError(
                    f"doc_freq out of range for {term!r}: {df} (corpus size "
                    f"{self.corpus_size})"
                )
        object.__setattr__(self, "_index", {t: i for i, t in enumerate(self.terms)})

    def __len__(self) -> int:
        return len(self.terms)

    def index_of(self, term: str) -> int | None:
        return self._index.get(term)


@dataclass(frozen=True)
class FeatureVector:
    """Sparse TF-IDF vector: term index -> weight, absent entries are zero."""

    weights: dict[int, float]
    dimension: int


def derive_stopwords(
    examples: list[LabeledExample],
    df_fraction: float = 0.2,
    balance_band: tuple[float, float] = (0.35, 0.65),
) -> set[str]:
    """Auto-generate stopwords: frequent tokens that carry no class signal.

    A token qualifies when it appears in at least ``df_fraction`` of all
    sentences and the fraction of its containing sentences that are toxic
    lies inside ``balance_band`` (inclusive).
    """
    if not examples:
        raise SingleClassError("cannot derive stopwords from zero examples")
    labels = {e.label for e in examples}
    if labels != {0, 1}:
        raise SingleClassError("stopword derivation needs both classes present")
    doc_freq: Counter[str] = Counter()
    toxic_freq: Counter[str] = Counter()
    for example in examples:
        tokens = set(normalize(example.text).tokens)
        doc_freq.update(tokens)
        if example.label == 1:
            toxic_freq.update(tokens)
    total = len(examples)
    low, high = balance_band
    stopwords = set()
    for token, df in doc_freq.items():
        if df < df_fraction * total:
            continue
        balance = toxic_freq[token] / df
        if low <= balance <= high:
            stopwords.add(token)
    return stopwords


def build_vocabulary(
    examples: list[LabeledExample], stopwords: set[str] | frozenset[str] = frozenset()
) -> Vocabulary:
    """Build the unigram+bigram vocabulary of a training corpus.

    Stopword unigrams and bigrams containing a stopword component are
    excluded; document frequency counts distinct sentences containing the
    term. Order-insensitive: permuting the examples changes nothing.
    """
    if not examples:
        raise EmptyVocabularyError("cannot build a vocabulary from zero examples")
    doc_freq: Counter[str] = Counter()
    for example in examples:
        doc_freq.update(set(sentence_terms(normalize(example.text).tokens)))

    def keep(term: str) -> bool:
        parts = term.split(" ")
        return not any(part in stopwords for part in parts)

    terms = sorted(t for t in doc_freq if keep(t))
    if not terms:
        raise EmptyVocabularyError("vocabulary is empty after stopword filtering")
    return Vocabulary(
        terms=tuple(terms),
        doc_freq=tuple(doc_freq[t] for t in terms),
        corpus_size=len(examples),
    )


def compute_tfidf(ns: NormalizedSentence, vocab: Vocabulary) -> FeatureVector:
    """TF-IDF vector of a normalized sentence over a fixed vocabulary.

    weight(t) = count(t in sentence) * ln(N / df(t)); out-of-vocabulary terms
    are ignored and zero weights (df == N) are not stored.
    """
    counts = Counter(sentence_terms(ns.tokens))
    weights: dict[int, float] = {}
    for term, count in counts.items():
        idx = vocab.index_of(term)
        if idx is None:
            continue
        weight = count * math.log(vocab.corpus_size / vocab.doc_freq[idx])
        if weight != 0.0:
            weights[idx] = weight
    return FeatureVector(weights={i: weights[i] for i in sorted(weights)}, dimension=len(vocab))


def to_matrix(sentences: list[NormalizedSentence], vocab: Vocabulary) -> np.ndarray:
    """Stack sentences into a dense (n, d) float64 design matrix."""
    matrix = np.zeros((len(sentences), len(vocab)), dtype=np.float64)
    for row, ns in enumerate(sentences):
        for idx, weight in compute_tfidf(ns, vocab).weights.items():
            matrix[row, idx] = weight
    return matrix
