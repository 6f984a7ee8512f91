"""Deterministic synthetic corpora and fuzz inputs for the test suite."""

from __future__ import annotations

import numpy as np

from textdetox import ParallelPair

# Code-point pools for Unicode fuzzing: ASCII, Latin-1, precomposed letters
# with diacritics, combining marks, punctuation, whitespace, symbols, and a
# few astral-plane characters.
_FUZZ_RANGES = (
    (0x0020, 0x007E),
    (0x00A1, 0x00FF),
    (0x0100, 0x017F),
    (0x0300, 0x036F),
    (0x1E00, 0x1EFF),
    (0x2000, 0x206F),
    (0x20A0, 0x20BF),
    (0x1F300, 0x1F320),
)


def random_unicode_strings(count: int, seed: int = 0, max_len: int = 24) -> list[str]:
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        length = int(rng.integers(0, max_len + 1))
        chars = []
        for _ in range(length):
            lo, hi = _FUZZ_RANGES[int(rng.integers(0, len(_FUZZ_RANGES)))]
            chars.append(chr(int(rng.integers(lo, hi + 1))))
        out.append("".join(chars))
    return out

SHARED_POOL = [f"w{i}" for i in range(30)]
TOXIC_MARKERS = [f"bad{i}" for i in range(8)]
CLEAN_MARKERS = [f"calm{i}" for i in range(8)]


def synthetic_pairs(language: str, n: int = 40, seed: int = 0) -> list[ParallelPair]:
    """Aligned pairs over a shared vocabulary; each toxic side carries one
    marker token from a small toxic pool, each detox side one from a clean
    pool. Learnable, with heavy vocabulary overlap between classes."""
    rng = np.random.default_rng(seed)
    pairs = []
    for i in range(n):
        length = int(rng.integers(3, 7))
        base = [SHARED_POOL[int(j)] for j in rng.integers(0, len(SHARED_POOL), length)]
        slot = int(rng.integers(0, length + 1))
        toxic = list(base)
        toxic.insert(slot, TOXIC_MARKERS[int(rng.integers(0, len(TOXIC_MARKERS)))])
        detox = list(base)
        detox.insert(slot, CLEAN_MARKERS[int(rng.integers(0, len(CLEAN_MARKERS)))])
        # Distinct per-sentence counters keep duplicate sentences impossible
        # without tying the two halves of a pair together: a token shared by
        # a toxic/detox pair would leak label signal whenever a fold split
        # separates the halves.
        toxic.append(f"t{i}")
        detox.append(f"d{i}")
        pairs.append(ParallelPair(" ".join(toxic), " ".join(detox), language))
    return pairs
