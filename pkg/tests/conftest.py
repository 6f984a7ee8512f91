"""Shared fixtures: seed corpora, models trained on them, a service assets
directory."""

from __future__ import annotations

import shutil
from pathlib import Path

import pytest

from textdetox import (
    default_config,
    derive_labeled_set,
    load_parallel_corpus,
    predict,
    save_model,
    train_fold,
)

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def xh_pairs():
    return load_parallel_corpus(DATA_DIR / "parallel_xh.tsv", "xh")


@pytest.fixture(scope="session")
def yo_pairs():
    return load_parallel_corpus(DATA_DIR / "parallel_yo.tsv", "yo")


def _train_on_pairs(pairs, language, seed=0):
    examples = derive_labeled_set(pairs)
    cfg = default_config(language, seed=seed)
    model = train_fold(examples, list(range(len(examples))), cfg)
    # The rewriting and CLI tests build on these models labeling the seed
    # sentences correctly; fail loudly here if that ever stops holding.
    for example in examples:
        assert predict(model, example.text).label == example.label
    return model


@pytest.fixture(scope="session")
def xh_model(xh_pairs):
    return _train_on_pairs(xh_pairs, "xh")


@pytest.fixture(scope="session")
def yo_model(yo_pairs):
    return _train_on_pairs(yo_pairs, "yo")


@pytest.fixture(scope="session")
def assets_dir(tmp_path_factory, xh_model, yo_model):
    """Service asset layout: models plus the seed corpora and lexicons."""
    root = tmp_path_factory.mktemp("assets")
    save_model(xh_model, root / "xh.detoxmodel")
    save_model(yo_model, root / "yo.detoxmodel")
    for name in ("parallel_xh.tsv", "parallel_yo.tsv", "lexicon_xh.tsv", "lexicon_yo.tsv"):
        shutil.copy(DATA_DIR / name, root / name)
    return root
