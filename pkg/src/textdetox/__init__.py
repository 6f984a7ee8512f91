"""Toxicity detection and meaning-preserving rewriting for isiXhosa and Yoruba."""

from .classify import (
    Prediction,
    TrainConfig,
    TrainedModel,
    default_config,
    feature_weights,
    predict,
    train,
)
from .corpus import (
    derive_labeled_set,
    load_lexicon,
    load_model,
    load_parallel_corpus,
    save_model,
    save_parallel_corpus,
)
from .errors import (
    ConfigError,
    CorpusFormatError,
    DetoxError,
    DuplicateEntryError,
    EmptyCorpusError,
    EmptyVocabularyError,
    LexiconError,
    ModelFormatError,
    ModelIntegrityError,
    SingleClassError,
)
from .evaluate import (
    ConfusionMatrix,
    EvalReport,
    FoldMetrics,
    compute_roc_auc,
    evaluate_holdout,
    evaluate_kfold,
    format_report_table,
    save_report,
    stratified_kfold_split,
    train_fold,
)
from .normalize import NormalizedSentence, normalize, normalize_token, tokenize
from .rewrite import (
    CorpusIndex,
    DetoxResult,
    build_corpus_index,
    detoxify,
    substitute_tokens,
)
from .types import (
    DEFAULT_THRESHOLDS,
    LANGUAGES,
    LabeledExample,
    Lexicon,
    ParallelPair,
)
from .vectorize import (
    FeatureVector,
    Vocabulary,
    build_vocabulary,
    compute_tfidf,
    derive_stopwords,
    sentence_terms,
    to_matrix,
)

__version__ = "1.0.0"

__all__ = [
    "ConfigError",
    "ConfusionMatrix",
    "CorpusFormatError",
    "CorpusIndex",
    "DEFAULT_THRESHOLDS",
    "DetoxError",
    "DetoxResult",
    "DuplicateEntryError",
    "EmptyCorpusError",
    "EmptyVocabularyError",
    "EvalReport",
    "FeatureVector",
    "FoldMetrics",
    "LANGUAGES",
    "LabeledExample",
    "Lexicon",
    "LexiconError",
    "ModelFormatError",
    "ModelIntegrityError",
    "NormalizedSentence",
    "ParallelPair",
    "Prediction",
    "SingleClassError",
    "TrainConfig",
    "TrainedModel",
    "Vocabulary",
    "build_corpus_index",
    "build_vocabulary",
    "compute_roc_auc",
    "compute_tfidf",
    "default_config",
    "derive_labeled_set",
    "derive_stopwords",
    "detoxify",
    "evaluate_holdout",
    "evaluate_kfold",
    "feature_weights",
    "format_report_table",
    "load_lexicon",
    "load_model",
    "load_parallel_corpus",
    "normalize",
    "normalize_token",
    "predict",
    "save_model",
    "save_parallel_corpus",
    "save_report",
    "sentence_terms",
    "stratified_kfold_split",
    "substitute_tokens",
    "to_matrix",
    "tokenize",
    "train",
    "train_fold",
]
