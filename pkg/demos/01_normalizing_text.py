"""
Normalizing isiXhosa and Yoruba text
====================================

Every component in this package (vocabulary building, classification,
corpus lookup, token substitution) compares sentences in one canonical
form: decomposed Unicode with combining marks removed, punctuation turned
into spaces, everything lowercased, whitespace collapsed. This script
walks through what that does to real sentences.
"""

import unicodedata

from textdetox import normalize, normalize_token, tokenize

# Yoruba orthography carries tone and vowel-quality marks. They are
# meaningful to readers but hostile to exact string matching: the same
# word can arrive precomposed, decomposed, or typed without marks at all.
sentence = "O jẹ́ aláìmọ̀kan"
ns = normalize(sentence)
print(f"raw:        {sentence!r}")
print(f"normalized: {ns.text!r}")
print(f"tokens:     {list(ns.tokens)}")

# The composed and decomposed encodings of the same sentence normalize
# identically, so a lookup table built from one encoding matches the other.
composed = unicodedata.normalize("NFC", sentence)
decomposed = unicodedata.normalize("NFD", sentence)
assert normalize(composed).text == normalize(decomposed).text == ns.text
print("NFC and NFD inputs agree after normalization")

# Punctuation becomes a space rather than vanishing, so glued words
# separate instead of fusing into a token nobody ever wrote.
print(f"{'word1.word2'!r} -> {normalize('word1.word2').text!r}")
print(f"{'Ndiza kukwenzakalisa.'!r} -> {normalize('Ndiza kukwenzakalisa.').text!r}")

# Normalizing twice changes nothing; downstream code relies on this to
# treat normalized strings as canonical keys.
once = normalize("«Máa fọ́ ojú ẹ!»").text
assert normalize(once).text == once
print(f"idempotent: {once!r}")

# normalize_token is the single-token shortcut used during lexicon
# matching; a hyphenated slur normalizes to the same form as the spaced
# two-word spelling, so one lexicon entry covers both.
print(f"{'omo-ale'!r} -> {normalize_token('omo-ale')!r}")
print(f"tokenize -> {tokenize(normalize('Kò sí ìrètí fún ọ.'))}")
