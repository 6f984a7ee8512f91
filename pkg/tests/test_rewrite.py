"""Two-stage rewriting: passthrough, corpus lookup, lexicon substitution."""

import numpy as np
import pytest

from textdetox import (
    ConfigError,
    CorpusIndex,
    DetoxResult,
    DuplicateEntryError,
    Lexicon,
    LexiconError,
    ParallelPair,
    TrainedModel,
    Vocabulary,
    build_corpus_index,
    detoxify,
    normalize,
    substitute_tokens,
)
from textdetox.rewrite import CORPUS_LOOKUP, PASSTHROUGH, TOKEN_SUBSTITUTION

from synth import random_unicode_strings


def _constant_model(language, toxic):
    """A classifier with an empty feature signal whose bias forces one label."""
    vocab = Vocabulary(terms=("unused",), doc_freq=(1,), corpus_size=1)
    return TrainedModel(
        language=language,
        vocabulary=vocab,
        weights=np.zeros(1),
        bias=50.0 if toxic else -50.0,
        threshold=0.5,
        stopwords=frozenset(),
        trained_at="1970-01-01T00:00:00Z",
        config_fingerprint="0" * 64,
        training_info={},
    )


XH_LEXICON = Lexicon(
    "xh",
    {
        "yinyoka": "umntu",
        "omo ale": "umntwana",
        "asiwere": "umhlobo",
    },
)


@pytest.fixture(scope="module")
def xh_index(xh_pairs):
    return build_corpus_index(xh_pairs)


class TestCorpusIndex:
    def test_lookup_is_normalization_insensitive(self, xh_pairs, xh_index):
        pair = xh_pairs[0]
        assert xh_index.lookup(pair.toxic_text) == pair.detox_text
        shouted = pair.toxic_text.upper()
        assert xh_index.lookup(shouted) == pair.detox_text

    def test_strict_lookup_requires_exact_bytes(self, xh_pairs, xh_index):
        pair = xh_pairs[0]
        assert xh_index.lookup(pair.toxic_text, strict=True) == pair.detox_text
        assert xh_index.lookup(pair.toxic_text.upper(), strict=True) is None

    def test_miss_returns_none(self, xh_index):
        assert xh_index.lookup("hleli apha nje") is None

    def test_normalized_collision_names_both_rows(self):
        pairs = [
            ParallelPair("Yinyoka", "umntu olungileyo", "xh"),
            ParallelPair("yinyoka!", "omnye umntu", "xh"),
        ]
        with pytest.raises(DuplicateEntryError, match="pairs 1 and 2"):
            build_corpus_index(pairs)

    def test_empty_without_language_rejected(self):
        with pytest.raises(ConfigError):
            build_corpus_index([])

    def test_empty_with_language_is_usable(self):
        index = build_corpus_index([], language="yo")
        assert len(index) == 0
        assert index.lookup("nkan kan") is None

    def test_mixed_language_pairs_rejected(self, xh_pairs):
        mixed = list(xh_pairs) + [ParallelPair("buburu pupo", "dara pupo", "yo")]
        with pytest.raises(ConfigError, match="pair 6"):
            build_corpus_index(mixed)


class TestTokenSubstitution:
    def test_unigram_key_matched_in_any_surface_form(self):
        for surface in ("yinyoka", "Yinyoka", "YINYOKA", "yìnyókà"):
            out, replaced = substitute_tokens(f"wena {surface} apha", XH_LEXICON)
            assert out == "wena umntu apha"
            assert replaced == ((surface, "umntu"),)

    def test_punctuation_affixes_survive(self):
        out, replaced = substitute_tokens('wathi "Yinyoka!" kum', XH_LEXICON)
        assert out == 'wathi "umntu!" kum'
        assert replaced == (("Yinyoka", "umntu"),)

    def test_bigram_key_beats_unigram_key(self):
        lexicon = Lexicon("xh", {"omo": "abantwana", "omo ale": "umntwana"})
        out, replaced = substitute_tokens("wena omo ale apha", lexicon)
        assert out == "wena umntwana apha"
        assert replaced == (("omo ale", "umntwana"),)

    def test_bigram_spans_a_token_that_normalizes_away(self):
        out, _ = substitute_tokens("Ọmọ -- àlè wena", XH_LEXICON)
        assert out == "umntwana wena"

    def test_no_match_returns_input_byte_identical(self):
        weird = "akukho \t nto  apha konke"
        out, replaced = substitute_tokens(weird, XH_LEXICON)
        assert out == weird
        assert replaced == ()

    def test_matches_collapse_whitespace_between_tokens(self):
        out, _ = substitute_tokens("Yinyoka!\tkanye", XH_LEXICON)
        assert out == "umntu! kanye"

    def test_multiple_keys_replaced_left_to_right(self):
        out, replaced = substitute_tokens("yinyoka kunye asiwere", XH_LEXICON)
        assert out == "umntu kunye umhlobo"
        assert replaced == (("yinyoka", "umntu"), ("asiwere", "umhlobo"))

    def test_boundary_adjacency_resolved_by_rescan(self):
        lexicon = Lexicon("xh", {"bad": "calm", "calm dog": "cat"})
        out, replaced = substitute_tokens("bad dog", lexicon)
        assert out == "cat"
        assert replaced == (("bad", "calm"), ("calm dog", "cat"))

    def test_empty_string_untouched(self):
        assert substitute_tokens("", XH_LEXICON) == ("", ())

    def test_output_contains_no_lexicon_key(self):
        rng = np.random.default_rng(19)
        surfaces = [
            "yinyoka", "Yinyoka!", "YINYOKA", "yìnyókà,", "ọmọ àlè", "Omo ale.",
            "asiwere", "«Asìwèré»",
        ]
        fillers = ["wena", "apha", "kanye", "lo", "into", "(nje)"]
        for _ in range(300):
            length = int(rng.integers(1, 9))
            words = []
            for _ in range(length):
                pick = int(rng.integers(0, len(surfaces) + len(fillers)))
                pool = surfaces + fillers
                words.append(pool[pick])
            out, _ = substitute_tokens(" ".join(words), XH_LEXICON)
            tokens = normalize(out).tokens
            grams = set(tokens) | {
                f"{a} {b}" for a, b in zip(tokens, tokens[1:])
            }
            hit = grams & set(XH_LEXICON.entries)
            assert not hit, (out, hit)


class TestLexiconValidation:
    def test_replacement_must_not_reintroduce_a_key(self):
        with pytest.raises(LexiconError):
            Lexicon("xh", {"a": "b", "b": "c"})

    def test_replacement_interior_bigram_must_not_be_a_key(self):
        with pytest.raises(LexiconError):
            Lexicon("xh", {"k": "x omo ale y", "omo ale": "umntwana"})

    def test_self_map_rejected(self):
        with pytest.raises(LexiconError):
            Lexicon("xh", {"a": "a"})

    def test_key_longer_than_two_tokens_rejected(self):
        with pytest.raises(LexiconError):
            Lexicon("xh", {"a b c": "x"})

    def test_key_must_be_normalized(self):
        with pytest.raises(LexiconError):
            Lexicon("xh", {"Yinyoka": "umntu"})


class TestDetoxify:
    def test_non_toxic_input_passes_through_byte_identical(self, xh_index):
        model = _constant_model("xh", toxic=False)
        for text in ["Yinyoka apha", "", "  odd \t spacing ", "☃ snow"]:
            result = detoxify(text, model, xh_index, XH_LEXICON)
            assert result.method == PASSTHROUGH
            assert result.label == 0
            assert result.output_text == text
            assert result.replaced_tokens == ()

    def test_corpus_hit_returns_counterpart_verbatim(self, xh_pairs, xh_index):
        model = _constant_model("xh", toxic=True)
        for pair in xh_pairs:
            result = detoxify(pair.toxic_text, model, xh_index, XH_LEXICON)
            assert result.method == CORPUS_LOOKUP
            assert result.label == 1
            assert result.output_text == pair.detox_text
            assert result.replaced_tokens == ()

    def test_corpus_hit_through_surface_variation(self, xh_pairs, xh_index):
        model = _constant_model("xh", toxic=True)
        variant = xh_pairs[0].toxic_text.upper()
        result = detoxify(variant, model, xh_index, XH_LEXICON)
        assert result.method == CORPUS_LOOKUP
        assert result.output_text == xh_pairs[0].detox_text

    def test_strict_lookup_sends_variants_to_substitution(self, xh_pairs, xh_index):
        model = _constant_model("xh", toxic=True)
        variant = xh_pairs[0].toxic_text.upper()
        result = detoxify(variant, model, xh_index, XH_LEXICON, strict_lookup=True)
        assert result.method == TOKEN_SUBSTITUTION

    def test_miss_goes_through_substitution(self, xh_index):
        model = _constant_model("xh", toxic=True)
        result = detoxify("wena yinyoka apha", model, xh_index, XH_LEXICON)
        assert result.method == TOKEN_SUBSTITUTION
        assert result.output_text == "wena umntu apha"
        assert result.replaced_tokens == (("yinyoka", "umntu"),)

    def test_toxic_without_matches_comes_back_unchanged(self, xh_index):
        model = _constant_model("xh", toxic=True)
        text = "akukho nto imbi apha"
        result = detoxify(text, model, xh_index, XH_LEXICON)
        assert result.method == TOKEN_SUBSTITUTION
        assert result.output_text == text
        assert result.replaced_tokens == ()

    def test_language_mismatch_rejected(self, xh_index):
        model = _constant_model("yo", toxic=True)
        with pytest.raises(ConfigError):
            detoxify("nkan kan", model, xh_index, XH_LEXICON)

    def test_result_invariants_hold_on_random_inputs(self, xh_index):
        models = [_constant_model("xh", True), _constant_model("xh", False)]
        for text in random_unicode_strings(200, seed=31):
            for model in models:
                result = detoxify(text, model, xh_index, XH_LEXICON)
                assert isinstance(result, DetoxResult)
                if result.method == PASSTHROUGH:
                    assert result.label == 0
                    assert result.output_text == text
                else:
                    assert result.label == 1
                if result.method == CORPUS_LOOKUP:
                    assert result.replaced_tokens == ()
                if result.method == TOKEN_SUBSTITUTION and not result.replaced_tokens:
                    assert result.output_text == text
