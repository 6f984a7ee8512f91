"""Vocabulary, stopwords, and TF-IDF against a brute-force counting oracle."""

import math

import numpy as np
import pytest

from textdetox import (
    EmptyVocabularyError,
    LabeledExample,
    SingleClassError,
    Vocabulary,
    build_vocabulary,
    compute_tfidf,
    derive_stopwords,
    normalize,
    sentence_terms,
    to_matrix,
)


def _ex(text: str, label: int = 0) -> LabeledExample:
    return LabeledExample(text=text, label=label, language="xh")


def _oracle_vector(sentence: list[str], corpus: list[list[str]]) -> dict[str, float]:
    """Independent nested-loop TF-IDF: enumerate n-grams, count, weight."""
    n = len(corpus)
    terms = set()
    for tokens in corpus:
        for size in (1, 2):
            for i in range(len(tokens) - size + 1):
                terms.add(" ".join(tokens[i : i + size]))
    vector = {}
    for term in sorted(terms):
        parts = term.split(" ")
        width = len(parts)
        tf = sum(
            1
            for i in range(len(sentence) - width + 1)
            if sentence[i : i + width] == parts
        )
        df = sum(
            1
            for tokens in corpus
            if any(
                tokens[i : i + width] == parts
                for i in range(len(tokens) - width + 1)
            )
        )
        if tf:
            vector[term] = tf * math.log(n / df)
    return vector


class TestOracleEquivalence:
    def test_hundred_random_corpora(self):
        rng = np.random.default_rng(2024)
        alphabet = list("abcdefgh")
        for _ in range(100):
            corpus = [
                [alphabet[int(c)] for c in rng.integers(0, len(alphabet), int(rng.integers(1, 7)))]
                for _ in range(int(rng.integers(1, 11)))
            ]
            examples = [_ex(" ".join(tokens)) for tokens in corpus]
            vocab = build_vocabulary(examples, stopwords=set())
            for tokens in corpus:
                expected = _oracle_vector(tokens, corpus)
                got = compute_tfidf(normalize(" ".join(tokens)), vocab)
                for term, value in expected.items():
                    idx = vocab.index_of(term)
                    assert idx is not None
                    assert abs(got.weights.get(idx, 0.0) - value) <= 1e-12
                for idx, value in got.weights.items():
                    assert abs(expected.get(vocab.terms[idx], 0.0) - value) <= 1e-12


class TestWorkedExample:
    # Corpus: "a b", "a c". N=2, df(a)=2, everything else 1.
    @pytest.fixture()
    def vocab(self):
        return build_vocabulary([_ex("a b"), _ex("a c")], stopwords=set())

    def test_terms_and_df(self, vocab):
        assert vocab.terms == ("a", "a b", "a c", "b", "c")
        as_map = dict(zip(vocab.terms, vocab.doc_freq))
        assert as_map == {"a": 2, "a b": 1, "a c": 1, "b": 1, "c": 1}
        assert vocab.corpus_size == 2

    def test_weights(self, vocab):
        vec = compute_tfidf(normalize("a b"), vocab)
        by_term = {vocab.terms[i]: w for i, w in vec.weights.items()}
        # df = N makes the weight exactly zero, so "a" is not stored.
        assert "a" not in by_term
        assert by_term["b"] == pytest.approx(math.log(2), abs=1e-15)
        assert by_term["a b"] == pytest.approx(math.log(2), abs=1e-15)

    def test_empty_sentence_is_zero_vector(self, vocab):
        vec = compute_tfidf(normalize(""), vocab)
        assert vec.weights == {}
        assert vec.dimension == len(vocab)

    def test_oov_terms_ignored(self, vocab):
        vec = compute_tfidf(normalize("z z z b"), vocab)
        by_term = {vocab.terms[i]: w for i, w in vec.weights.items()}
        assert set(by_term) == {"b"}


class TestVocabularyBuild:
    def test_single_sentence(self):
        vocab = build_vocabulary([_ex("x")], stopwords=set())
        assert vocab.terms == ("x",)
        assert vocab.doc_freq == (1,)
        assert vocab.corpus_size == 1

    def test_stopword_removes_token_and_its_bigrams(self):
        vocab = build_vocabulary([_ex("a b")], stopwords={"a"})
        assert vocab.terms == ("b",)

    def test_everything_filtered_is_an_error(self):
        with pytest.raises(EmptyVocabularyError):
            build_vocabulary([_ex("a a a")], stopwords={"a"})

    def test_order_insensitive(self):
        sentences = ["c d", "a b", "b c", "a d e"]
        forward = build_vocabulary([_ex(s) for s in sentences], stopwords=set())
        backward = build_vocabulary([_ex(s) for s in reversed(sentences)], stopwords=set())
        assert forward == backward

    def test_df_counts_distinct_sentences(self):
        vocab = build_vocabulary([_ex("a a a"), _ex("a b")], stopwords=set())
        as_map = dict(zip(vocab.terms, vocab.doc_freq))
        assert as_map["a"] == 2
        assert as_map["a a"] == 1

    def test_invalid_doc_freq_rejected(self):
        with pytest.raises(ValueError):
            Vocabulary(terms=("a",), doc_freq=(0,), corpus_size=3)
        with pytest.raises(ValueError):
            Vocabulary(terms=("a",), doc_freq=(4,), corpus_size=3)
        with pytest.raises(ValueError):
            Vocabulary(terms=("a", "a"), doc_freq=(1, 1), corpus_size=3)


class TestStopwords:
    def test_frequent_balanced_token_included(self):
        examples = []
        for i in range(10):
            label = i % 2
            text = f"the u{i}" if i < 5 else f"u{i} filler"
            examples.append(_ex(text, label))
        # "the" sits in 5 of 10 sentences; containing labels are 0,1,0,1,0.
        stopwords = derive_stopwords(examples)
        assert "the" in stopwords

    def test_rare_token_excluded(self):
        examples = [_ex(f"u{i} v{i}", i % 2) for i in range(20)]
        examples.append(_ex("rare one", 1))
        examples.append(_ex("rare two", 0))
        assert "rare" not in derive_stopwords(examples)

    def test_class_skewed_token_excluded(self):
        examples = [_ex(f"slur u{i}", 1) for i in range(8)]
        examples += [_ex(f"v{i} w{i}", 0) for i in range(12)]
        # 40% document frequency but only ever in toxic sentences.
        assert "slur" not in derive_stopwords(examples)

    def test_single_class_is_an_error(self):
        with pytest.raises(SingleClassError):
            derive_stopwords([_ex("a b", 1), _ex("c d", 1)])

    def test_df_uses_set_semantics(self):
        # "x" shows up 4 times but in only 2 of 10 sentences; multiset
        # counting would push it over the 0.3 cutoff, set counting must not.
        examples = [_ex("x x x", 1), _ex("x", 0)]
        examples += [_ex(f"u{i} v{i}", i % 2) for i in range(8)]
        assert "x" not in derive_stopwords(examples, df_fraction=0.3)
        assert "x" in derive_stopwords(examples, df_fraction=0.2)

    def test_band_is_inclusive(self):
        # Token in 20 sentences, 7 toxic: balance of exactly 0.35.
        examples = [_ex(f"tok u{i}", 1 if i < 7 else 0) for i in range(20)]
        examples += [_ex(f"v{i} y{i}", 1) for i in range(8)]
        stopwords = derive_stopwords(examples, df_fraction=0.2)
        assert "tok" in stopwords


def test_sentence_terms_order():
    assert sentence_terms(["a", "b", "c"]) == ["a", "b", "c", "a b", "b c"]


def test_to_matrix_matches_sparse():
    examples = [_ex("a b"), _ex("b c d"), _ex("a d")]
    vocab = build_vocabulary(examples, stopwords=set())
    sentences = [normalize(e.text) for e in examples]
    matrix = to_matrix(sentences, vocab)
    assert matrix.shape == (3, len(vocab))
    for row, ns in zip(matrix, sentences):
        sparse = compute_tfidf(ns, vocab)
        dense = np.zeros(len(vocab))
        for idx, w in sparse.weights.items():
            dense[idx] = w
        np.testing.assert_array_equal(row, dense)
