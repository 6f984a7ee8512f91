"""Exception types raised across the pipeline."""

from __future__ import annotations


class DetoxError(Exception):
    """Base class for all errors raised by this package."""


class CorpusFormatError(DetoxError):
    """A corpus or lexicon file is malformed (bad header, wrong column count, bad row)."""


class EmptyCorpusError(DetoxError):
    """A corpus file contained a header but no data rows."""


class DuplicateEntryError(DetoxError):
    """Two corpus rows share the same toxic side, or two index keys collide."""


class LexiconError(DetoxError):
    """A lexicon entry violates the lexicon invariants."""


class ModelFormatError(DetoxError):
    """A model file has an unknown schema version or cannot be parsed."""


class ModelIntegrityError(DetoxError):
    """A model file parsed but its contents are inconsistent (e.g. weight/vocab size mismatch)."""


class EmptyVocabularyError(DetoxError):
    """Vocabulary construction produced no terms (empty input or over-filtering)."""


class SingleClassError(DetoxError):
    """An operation that needs both classes received examples of only one."""


class ConfigError(DetoxError):
    """Mismatched or invalid configuration (language mismatch, bad threshold, ...)."""
