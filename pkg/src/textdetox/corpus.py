"""Load, validate, and persist parallel corpora, lexicons, and trained models.

File formats (all UTF-8, LF line endings):
  - parallel corpus: TSV with header ``toxic<TAB>detox``, one pair per line
  - lexicon: TSV with header ``toxic_token<TAB>replacement``
  - model: schema-versioned JSON document, extension ``.detoxmodel``

Model files use canonical serialization (sorted keys, shortest round-trip
decimal floats), so save -> load -> save is byte-identical.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

import numpy as np

from .classify import TrainedModel
from .errors import (
    CorpusFormatError,
    DuplicateEntryError,
    EmptyCorpusError,
    LexiconError,
    ModelFormatError,
    ModelIntegrityError,
)
from .types import LabeledExample, Lexicon, ParallelPair, check_language
from .vectorize import Vocabulary

MODEL_FORMAT = "detoxmodel/1"

_CORPUS_HEADER = "toxic\tdetox"
_LEXICON_HEADER = "toxic_token\treplacement"


def _read_utf8_lines(path: str | Path) -> list[str]:
    data = Path(path).read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise CorpusFormatError(f"{path}: not valid UTF-8 ({exc})") from exc
    return text.split("\n")


def load_parallel_corpus(path: str | Path, language: str) -> list[ParallelPair]:
    """Load a parallel corpus TSV; row order is preserved.

    Raises CorpusFormatError for a bad header or malformed row (naming the
    line number), DuplicateEntryError when two rows share a toxic side, and
    EmptyCorpusError for a file with no data rows.
    """
    check_language(language)
    lines = _read_utf8_lines(path)
    if not lines or lines[0].rstrip("\r") != _CORPUS_HEADER:
        raise CorpusFormatError(
            f"{path}:1: expected header {_CORPUS_HEADER!r}, got {lines[0][:60]!r}"
        )
    pairs: list[ParallelPair] = []
    seen: dict[str, int] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        line = line.rstrip("\r")
        if not line:
            continue
        columns = line.split("\t")
        if len(columns) != 2:
            raise CorpusFormatError(
                f"{path}:{lineno}: expected 2 tab-separated columns, got {len(columns)}"
            )
        toxic, detox = (c.strip() for c in columns)
        if not toxic or not detox:
            raise CorpusFormatError(f"{path}:{lineno}: empty sentence column")
        if toxic == detox:
            raise CorpusFormatError(
                f"{path}:{lineno}: toxic and detoxified sides are identical"
            )
        if toxic in seen:
            raise DuplicateEntryError(
                f"{path}:{lineno}: duplicate toxic side (first seen on line {seen[toxic]})"
            )
        seen[toxic] = lineno
        pairs.append(ParallelPair(toxic_text=toxic, detox_text=detox, language=language))
    if not pairs:
        raise EmptyCorpusError(f"{path}: corpus has no data rows")
    return pairs


def save_parallel_corpus(pairs: list[ParallelPair], path: str | Path) -> None:
    """Write pairs as corpus TSV (whole-file atomic)."""
    lines = [_CORPUS_HEADER]
    lines += [f"{p.toxic_text}\t{p.detox_text}" for p in pairs]
    _atomic_write_text(path, "\n".join(lines) + "\n")


def load_lexicon(path: str | Path, language: str) -> Lexicon:
    """Load a lexicon TSV; keys must already be in normalized form."""
    check_language(language)
    lines = _read_utf8_lines(path)
    if not lines or lines[0].rstrip("\r") != _LEXICON_HEADER:
        raise CorpusFormatError(
            f"{path}:1: expected header {_LEXICON_HEADER!r}, got {lines[0][:60]!r}"
        )
    entries: dict[str, str] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        line = line.rstrip("\r")
        if not line:
            continue
        columns = line.split("\t")
        if len(columns) != 2:
            raise CorpusFormatError(
                f"{path}:{lineno}: expected 2 tab-separated columns, got {len(columns)}"
            )
        key, replacement = columns[0].strip(), columns[1].strip()
        if key in entries:
            raise LexiconError(f"{path}:{lineno}: duplicate lexicon key {key!r}")
        entries[key] = replacement
    return Lexicon(language, entries)


def derive_labeled_set(pairs: list[ParallelPair]) -> list[LabeledExample]:
    """Derive the balanced labeled training set: toxic side 1, detox side 0.

    Returns 2*len(pairs) examples, interleaved (toxic, detox) per pair in
    corpus order, so both class counts equal len(pairs).
    """
    if not pairs:
        raise EmptyCorpusError("cannot derive a labeled set from zero pairs")
    examples: list[LabeledExample] = []
    for pair in pairs:
        examples.append(LabeledExample(pair.toxic_text, 1, pair.language))
        examples.append(LabeledExample(pair.detox_text, 0, pair.language))
    return examples


def _atomic_write_text(path: str | Path, content: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(content)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def model_to_document(model: TrainedModel) -> dict:
    """Plain-dict form of a trained model, ready for canonical JSON."""
    return {
        "format": MODEL_FORMAT,
        "language": model.language,
        "threshold": model.threshold,
        "bias": model.bias,
        "weights": [float(w) for w in model.weights],
        "stopwords": sorted(model.stopwords),
        "vocabulary": {
            "terms": list(model.vocabulary.terms),
            "doc_freq": list(model.vocabulary.doc_freq),
            "corpus_size": model.vocabulary.corpus_size,
            "ngram_range": list(model.vocabulary.ngram_range),
        },
        "idf_log_base": "e",
        "normalization": "nfd/strip-mn/punct-to-space/lower",
        "training": dict(model.training_info),
        "config_fingerprint": model.config_fingerprint,
        "trained_at": model.trained_at,
    }


def save_model(model: TrainedModel, path: str | Path) -> None:
    """Persist a trained model as a canonical, diffable text document."""
    document = model_to_document(model)
    content = json.dumps(
        document, sort_keys=True, ensure_ascii=False, indent=2, allow_nan=False
    )
    _atomic_write_text(path, content + "\n")


def load_model(path: str | Path) -> TrainedModel:
    """Load a model file; raises ModelFormatError / ModelIntegrityError."""
    try:
        document = json.loads(Path(path).read_text(encoding="utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ModelFormatError(f"{path}: cannot parse model document ({exc})") from exc
    if not isinstance(document, dict) or document.get("format") != MODEL_FORMAT:
        raise ModelFormatError(
            f"{path}: unknown model format {document.get('format')!r}; "
            f"expected {MODEL_FORMAT!r}"
        )
    try:
        vocab_doc = document["vocabulary"]
        vocabulary = Vocabulary(
            terms=tuple(vocab_doc["terms"]),
            doc_freq=tuple(int(df) for df in vocab_doc["doc_freq"]),
            corpus_size=int(vocab_doc["corpus_size"]),
            ngram_range=tuple(vocab_doc["ngram_range"]),
        )
        weights = np.asarray(document["weights"], dtype=np.float64)
        model = TrainedModel(
            language=document["language"],
            vocabulary=vocabulary,
            weights=weights,
            bias=float(document["bias"]),
            threshold=float(document["threshold"]),
            stopwords=frozenset(document["stopwords"]),
            trained_at=document["trained_at"],
            config_fingerprint=document["config_fingerprint"],
            training_info=dict(document["training"]),
        )
    except ModelIntegrityError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelIntegrityError(f"{path}: inconsistent model document ({exc})") from exc
    return model
