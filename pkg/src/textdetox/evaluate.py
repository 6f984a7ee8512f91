"""Stratified K-fold evaluation of the detection pipeline.

Each fold derives its stopword list and vocabulary from the training folds
only, trains a fresh model, and scores the held-out fold at the language
threshold. The report carries per-fold confusion matrices, accuracy,
precision, recall, F1, ROC curves with AUC, and top feature weights, plus
unweighted-mean aggregates.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .classify import (
    TrainConfig,
    TrainedModel,
    config_fingerprint,
    default_config,
    feature_weights,
    predict,
    train,
)
from .errors import ConfigError, SingleClassError
from .folds import stratified_kfold_split
from .corpus import _atomic_write_text, derive_labeled_set
from .types import LabeledExample, ParallelPair
from .vectorize import build_vocabulary, derive_stopwords

__all__ = [
    "ConfusionMatrix",
    "FoldMetrics",
    "EvalReport",
    "stratified_kfold_split",
    "compute_roc_auc",
    "train_fold",
    "evaluate_kfold",
    "evaluate_holdout",
    "report_to_document",
    "save_report",
    "format_report_table",
]

TOP_TERMS_PER_FOLD = 20


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    fp: int
    tn: int
    fn: int

    def __post_init__(self):
        if min(self.tp, self.fp, self.tn, self.fn) < 0:
            raise ConfigError("confusion counts must be non-negative")

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn

    @property
    def accuracy(self) -> float:
        return (self.tp + self.tn) / self.total if self.total else 0.0

    @property
    def precision(self) -> float:
        denom = self.tp + self.fp
        return self.tp / denom if denom else 0.0

    @property
    def recall(self) -> float:
        denom = self.tp + self.fn
        return self.tp / denom if denom else 0.0

    @property
    def f1(self) -> float:
        p, r = self.precision, self.recall
        return 2.0 * p * r / (p + r) if p + r else 0.0


@dataclass(frozen=True)
class FoldMetrics:
    fold_index: int
    confusion: ConfusionMatrix
    accuracy: float
    precision: float
    recall: float
    f1: float
    roc_auc: float
    roc_points: tuple[tuple[float, float], ...]
    toxic_terms: tuple[tuple[str, float], ...] = ()
    neutral_terms: tuple[tuple[str, float], ...] = ()
    l2_strength: float | None = None
    converged: bool = True
    warnings: tuple[str, ...] = ()


@dataclass(frozen=True)
class EvalReport:
    language: str
    k: int
    seed: int
    threshold: float
    config_fingerprint: str
    folds: tuple[FoldMetrics, ...]
    aggregate: dict
    pooled_confusion: ConfusionMatrix


def compute_roc_auc(
    scores: list[tuple[float, int]],
) -> tuple[float, tuple[tuple[float, float], ...]]:
    """AUC with the rank-sum tie convention, plus the ROC step curve.

    Scores are sorted by descending probability; tied probabilities move
    diagonally in one step, which the trapezoid credits as one half.
    """
    pairs = [(float(p), int(y)) for p, y in scores]
    pos = sum(y for _, y in pairs)
    neg = len(pairs) - pos
    if pos == 0 or neg == 0:
        raise SingleClassError("ROC-AUC is undefined when only one label is present")
    pairs.sort(key=lambda py: -py[0])
    points = [(0.0, 0.0)]
    auc = 0.0
    tp = fp = 0
    i = 0
    while i < len(pairs):
        group_prob = pairs[i][0]
        group_tp = group_fp = 0
        while i < len(pairs) and pairs[i][0] == group_prob:
            if pairs[i][1] == 1:
                group_tp += 1
            else:
                group_fp += 1
            i += 1
        prev_tpr, prev_fpr = tp / pos, fp / neg
        tp += group_tp
        fp += group_fp
        tpr, fpr = tp / pos, fp / neg
        auc += (prev_tpr + tpr) / 2.0 * (fpr - prev_fpr)
        points.append((fpr, tpr))
    return auc, tuple(points)


def train_fold(
    examples: list[LabeledExample],
    train_indices: list[int],
    cfg: TrainConfig,
    stopword_df: float = 0.2,
    stopword_balance: tuple[float, float] = (0.35, 0.65),
) -> TrainedModel:
    """Train on the indexed subset, deriving stopwords and vocabulary from
    that subset alone so held-out text never leaks into the features."""
    subset = [examples[i] for i in train_indices]
    stopwords = derive_stopwords(
        subset, df_fraction=stopword_df, balance_band=stopword_balance
    )
    vocab = build_vocabulary(subset, stopwords)
    return train(subset, vocab, stopwords, cfg)


def _score_fold(
    fold_index: int,
    model: TrainedModel,
    held_out: list[LabeledExample],
) -> FoldMetrics:
    tp = fp = tn = fn = 0
    scores = []
    for example in held_out:
        prediction = predict(model, example.text)
        scores.append((prediction.probability, example.label))
        if prediction.label == 1:
            if example.label == 1:
                tp += 1
            else:
                fp += 1
        else:
            if example.label == 1:
                fn += 1
            else:
                tn += 1
    confusion = ConfusionMatrix(tp=tp, fp=fp, tn=tn, fn=fn)
    auc, roc_points = compute_roc_auc(scores)
    top = min(TOP_TERMS_PER_FOLD, len(model.vocabulary))
    toxic_terms, neutral_terms = feature_weights(model, top)
    info = model.training_info
    return FoldMetrics(
        fold_index=fold_index,
        confusion=confusion,
        accuracy=confusion.accuracy,
        precision=confusion.precision,
        recall=confusion.recall,
        f1=confusion.f1,
        roc_auc=auc,
        roc_points=roc_points,
        toxic_terms=tuple(toxic_terms),
        neutral_terms=tuple(neutral_terms),
        l2_strength=info.get("l2_strength"),
        converged=info.get("converged", True),
        warnings=tuple(info.get("warnings", ())),
    )


def _check_pairs(pairs: list[ParallelPair]) -> str:
    if not pairs:
        raise ConfigError("cannot evaluate an empty corpus")
    languages = {p.language for p in pairs}
    if len(languages) != 1:
        raise ConfigError(f"corpus mixes languages: {sorted(languages)}")
    return pairs[0].language


def _assemble(
    language: str,
    k: int,
    seed: int,
    cfg: TrainConfig,
    folds: list[FoldMetrics],
) -> EvalReport:
    aggregate = {
        name: sum(getattr(f, name) for f in folds) / len(folds)
        for name in ("accuracy", "precision", "recall", "f1", "roc_auc")
    }
    pooled = ConfusionMatrix(
        tp=sum(f.confusion.tp for f in folds),
        fp=sum(f.confusion.fp for f in folds),
        tn=sum(f.confusion.tn for f in folds),
        fn=sum(f.confusion.fn for f in folds),
    )
    return EvalReport(
        language=language,
        k=k,
        seed=seed,
        threshold=cfg.threshold,
        config_fingerprint=config_fingerprint(cfg, language),
        folds=tuple(folds),
        aggregate=aggregate,
        pooled_confusion=pooled,
    )


def evaluate_kfold(
    pairs: list[ParallelPair],
    cfg: TrainConfig | None = None,
    k: int = 5,
    seed: int = 0,
    stopword_df: float = 0.2,
    stopword_balance: tuple[float, float] = (0.35, 0.65),
) -> EvalReport:
    """Run stratified K-fold evaluation over a parallel corpus.

    Toxic sides are the positive class, detoxified sides the negative one.
    Folds are evaluated independently and assembled in fold order, so the
    result is identical however they are scheduled.
    """
    language = _check_pairs(pairs)
    if cfg is None:
        cfg = default_config(language, seed=seed)
    examples = derive_labeled_set(pairs)
    fold_indices = stratified_kfold_split(examples, k, seed)
    folds = []
    for fold_index, held_out in enumerate(fold_indices):
        held = set(held_out)
        train_indices = [i for i in range(len(examples)) if i not in held]
        model = train_fold(examples, train_indices, cfg, stopword_df, stopword_balance)
        folds.append(_score_fold(fold_index, model, [examples[i] for i in held_out]))
    return _assemble(language, k, seed, cfg, folds)


def evaluate_holdout(
    pairs: list[ParallelPair],
    cfg: TrainConfig | None = None,
    holdout_fraction: float = 0.2,
    seed: int = 0,
    stopword_df: float = 0.2,
    stopword_balance: tuple[float, float] = (0.35, 0.65),
) -> EvalReport:
    """Single stratified train/test split (default 80/20), scored once.

    The split reuses the K-fold machinery with k = round(1/fraction) and
    holds out fold 0, so it inherits the same stratification guarantees.
    """
    if not 0.0 < holdout_fraction < 0.5:
        raise ConfigError("holdout fraction must lie in (0, 0.5)")
    language = _check_pairs(pairs)
    if cfg is None:
        cfg = default_config(language, seed=seed)
    k = round(1.0 / holdout_fraction)
    examples = derive_labeled_set(pairs)
    held_out = stratified_kfold_split(examples, k, seed)[0]
    held = set(held_out)
    train_indices = [i for i in range(len(examples)) if i not in held]
    model = train_fold(examples, train_indices, cfg, stopword_df, stopword_balance)
    fold = _score_fold(0, model, [examples[i] for i in held_out])
    return _assemble(language, k, seed, cfg, [fold])


def report_to_document(report: EvalReport) -> dict:
    """JSON-ready view of a report, stable key order for byte-stable files."""

    def confusion(c: ConfusionMatrix) -> dict:
        return {"tp": c.tp, "fp": c.fp, "tn": c.tn, "fn": c.fn}

    return {
        "format": "detoxreport/1",
        "language": report.language,
        "k": report.k,
        "seed": report.seed,
        "threshold": report.threshold,
        "config_fingerprint": report.config_fingerprint,
        "aggregate": dict(sorted(report.aggregate.items())),
        "pooled_confusion": confusion(report.pooled_confusion),
        "folds": [
            {
                "fold_index": f.fold_index,
                "confusion": confusion(f.confusion),
                "accuracy": f.accuracy,
                "precision": f.precision,
                "recall": f.recall,
                "f1": f.f1,
                "roc_auc": f.roc_auc,
                "roc_points": [list(point) for point in f.roc_points],
                "toxic_terms": [[t, w] for t, w in f.toxic_terms],
                "neutral_terms": [[t, w] for t, w in f.neutral_terms],
                "l2_strength": f.l2_strength,
                "converged": f.converged,
                "warnings": list(f.warnings),
            }
            for f in report.folds
        ],
    }


def save_report(report: EvalReport, path: str | Path) -> None:
    """Write the structured report with canonical formatting, atomically."""
    content = json.dumps(
        report_to_document(report),
        sort_keys=True,
        ensure_ascii=False,
        indent=2,
        allow_nan=False,
    )
    _atomic_write_text(path, content + "\n")


def format_report_table(report: EvalReport) -> str:
    """Plain-text metrics table, one row per fold plus the aggregate row."""
    header = ("Fold", "Accuracy", "Precision", "Recall", "F1", "ROC-AUC")
    rows = [header]
    for f in report.folds:
        rows.append(
            (
                str(f.fold_index + 1),
                f"{f.accuracy:.4f}",
                f"{f.precision:.4f}",
                f"{f.recall:.4f}",
                f"{f.f1:.4f}",
                f"{f.roc_auc:.4f}",
            )
        )
    agg = report.aggregate
    rows.append(
        (
            "mean",
            f"{agg['accuracy']:.4f}",
            f"{agg['precision']:.4f}",
            f"{agg['recall']:.4f}",
            f"{agg['f1']:.4f}",
            f"{agg['roc_auc']:.4f}",
        )
    )
    widths = [max(len(row[col]) for row in rows) for col in range(len(header))]
    lines = []
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[col]) for col, cell in enumerate(row)).rstrip())
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"
