"""Class-weighted, L2-regularized logistic regression.

Training minimizes

    sum_i s_i * logloss(y_i, sigmoid(w.x_i + b)) + (l2 / 2) * ||w||^2

by deterministic full-batch gradient descent with Armijo backtracking line
search, starting from zeros (the objective is convex, so the start only
affects iteration count). s_i is the balanced class weight N / (2 * N_class),
the bias is unregularized, and the L2 strength is picked from a grid by
inner stratified 3-fold cross-validated F1 on the toxic class. Everything is
deterministic: identical inputs and config produce bit-identical models.
"""

from __future__ import annotations

import datetime
import hashlib
import json
import os
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, ModelIntegrityError, SingleClassError
from .folds import stratified_kfold_split
from .normalize import normalize
from .types import DEFAULT_THRESHOLDS, LabeledExample, check_language
from .vectorize import Vocabulary, compute_tfidf, to_matrix

_ARMIJO_C = 1e-4
_MIN_STEP = 1e-20
EPOCH_ORIGIN = "1970-01-01T00:00:00Z"


@dataclass(frozen=True)
class TrainConfig:
    l2_strength_grid: tuple[float, ...] = (0.001, 0.01, 0.1, 1.0)
    max_iterations: int = 1000
    convergence_tolerance: float = 1e-8
    class_weighting: str = "balanced"
    seed: int = 0
    threshold: float = 0.5

    def __post_init__(self):
        if not self.l2_strength_grid or any(l2 <= 0 for l2 in self.l2_strength_grid):
            raise ConfigError("l2_strength_grid must be non-empty and positive")
        if self.max_iterations < 1:
            raise ConfigError("max_iterations must be positive")
        if self.convergence_tolerance <= 0:
            raise ConfigError("convergence_tolerance must be positive")
        if self.class_weighting != "balanced":
            raise ConfigError("only 'balanced' class weighting is supported")
        if not 0.0 < self.threshold < 1.0:
            raise ConfigError("threshold must lie strictly between 0 and 1")


def default_config(language: str, **overrides) -> TrainConfig:
    """TrainConfig with the language's published decision threshold."""
    check_language(language)
    overrides.setdefault("threshold", DEFAULT_THRESHOLDS[language])
    return TrainConfig(**overrides)


@dataclass(frozen=True)
class Prediction:
    probability: float
    label: int
    score: float


@dataclass(frozen=True, eq=False)
class TrainedModel:
    language: str
    vocabulary: Vocabulary
    weights: np.ndarray
    bias: float
    threshold: float
    stopwords: frozenset[str]
    trained_at: str
    config_fingerprint: str
    training_info: dict = field(default_factory=dict)

    def __post_init__(self):
        check_language(self.language)
        if len(self.weights) != len(self.vocabulary):
            raise ModelIntegrityError(
                f"weight vector length {len(self.weights)} does not match "
                f"vocabulary size {len(self.vocabulary)}"
            )
        if not 0.0 < self.threshold < 1.0:
            raise ModelIntegrityError(
                f"threshold must lie strictly in (0, 1), got {self.threshold}"
            )


def sigmoid(z):
    """Numerically stable logistic function, scalar or ndarray."""
    z = np.asarray(z, dtype=np.float64)
    out = np.empty_like(z)
    positive = z >= 0
    out[positive] = 1.0 / (1.0 + np.exp(-z[positive]))
    expz = np.exp(z[~positive])
    out[~positive] = expz / (1.0 + expz)
    return out if out.ndim else float(out)


def balanced_sample_weights(y: np.ndarray) -> np.ndarray:
    """Per-example weight N / (2 * N_class); both classes must be present."""
    n = len(y)
    n_toxic = int(y.sum())
    if n_toxic == 0 or n_toxic == n:
        raise SingleClassError("balanced weighting needs both classes present")
    weight_toxic = n / (2.0 * n_toxic)
    weight_clean = n / (2.0 * (n - n_toxic))
    return np.where(y == 1, weight_toxic, weight_clean)


def loss_and_gradient(
    weights: np.ndarray,
    bias: float,
    X: np.ndarray,
    y: np.ndarray,
    sample_weight: np.ndarray,
    l2: float,
) -> tuple[float, np.ndarray, float]:
    """Weighted log-loss with L2 penalty on weights; returns (loss, grad_w, grad_b).

    Uses log(1 + e^z) = logaddexp(0, z), so the loss is stable for any logit.
    """
    z = X @ weights + bias
    loss = float(
        sample_weight @ (np.logaddexp(0.0, z) - y * z)
        + 0.5 * l2 * float(weights @ weights)
    )
    residual = sample_weight * (sigmoid(z) - y)
    grad_w = X.T @ residual + l2 * weights
    grad_b = float(residual.sum())
    return loss, grad_w, grad_b


def _weighted_loss(z: np.ndarray, y: np.ndarray, sample_weight: np.ndarray) -> float:
    return float(sample_weight @ (np.logaddexp(0.0, z) - y * z))


def _fit(
    X: np.ndarray, y: np.ndarray, l2: float, cfg: TrainConfig
) -> tuple[np.ndarray, float, dict]:
    """Gradient descent with backtracking line search from w = 0, b = 0."""
    n, d = X.shape
    sample_weight = balanced_sample_weights(y)
    weights = np.zeros(d)
    bias = 0.0
    z = np.zeros(n)
    loss = _weighted_loss(z, y, sample_weight)
    step = 1.0
    converged = False
    grad_inf = np.inf
    iterations = 0
    for iterations in range(1, cfg.max_iterations + 1):
        residual = sample_weight * (sigmoid(z) - y)
        grad_w = X.T @ residual + l2 * weights
        grad_b = float(residual.sum())
        grad_inf = max(float(np.max(np.abs(grad_w))) if d else 0.0, abs(grad_b))
        if grad_inf <= cfg.convergence_tolerance:
            converged = True
            iterations -= 1
            break
        descent = float(grad_w @ grad_w) + grad_b * grad_b
        z_direction = X @ grad_w + grad_b
        step = min(step * 2.0, 1.0)
        while True:
            z_try = z - step * z_direction
            w_try = weights - step * grad_w
            loss_try = _weighted_loss(z_try, y, sample_weight) + 0.5 * l2 * float(
                w_try @ w_try
            )
            if loss_try <= loss - _ARMIJO_C * step * descent or step < _MIN_STEP:
                break
            step *= 0.5
        if step < _MIN_STEP:
            break
        weights = w_try
        bias -= step * grad_b
        loss = loss_try
        z = z_try
        if iterations % 64 == 0:
            # Refresh the incrementally tracked logits to cancel drift.
            z = X @ weights + bias
            loss = _weighted_loss(z, y, sample_weight) + 0.5 * l2 * float(
                weights @ weights
            )
    info = {
        "l2_strength": l2,
        "iterations": iterations,
        "converged": converged,
        "grad_inf_norm": grad_inf,
        "warnings": []
        if converged
        else [f"did not reach tolerance {cfg.convergence_tolerance} "
              f"within {cfg.max_iterations} iterations"],
    }
    return weights, bias, info


def _toxic_f1(y_true: np.ndarray, y_pred: np.ndarray) -> float:
    tp = int(np.sum((y_pred == 1) & (y_true == 1)))
    fp = int(np.sum((y_pred == 1) & (y_true == 0)))
    fn = int(np.sum((y_pred == 0) & (y_true == 1)))
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    if precision + recall == 0.0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def _select_l2(
    X: np.ndarray, y: np.ndarray, examples: list[LabeledExample], cfg: TrainConfig
) -> tuple[float, list[str]]:
    """Grid-search the L2 strength by inner stratified CV on toxic-class F1.

    Ties go to the earliest grid entry. With fewer than 2 members per class
    per inner fold the search degrades gracefully (smaller k, or the first
    grid value with a warning).
    """
    if len(cfg.l2_strength_grid) == 1:
        return cfg.l2_strength_grid[0], []
    min_class = min(int(y.sum()), int(len(y) - y.sum()))
    k_inner = min(3, min_class)
    if k_inner < 2:
        return cfg.l2_strength_grid[0], [
            "class too small for inner cross-validation; "
            "using the first grid value"
        ]
    inner_folds = stratified_kfold_split(examples, k_inner, cfg.seed)
    best_l2, best_f1 = cfg.l2_strength_grid[0], -1.0
    for l2 in cfg.l2_strength_grid:
        scores = []
        for held_out in inner_folds:
            mask = np.zeros(len(y), dtype=bool)
            mask[held_out] = True
            weights, bias, _ = _fit(X[~mask], y[~mask], l2, cfg)
            probs = sigmoid(X[mask] @ weights + bias)
            predicted = (probs >= cfg.threshold).astype(np.int64)
            scores.append(_toxic_f1(y[mask], predicted))
        mean_f1 = float(np.mean(scores))
        if mean_f1 > best_f1:
            best_l2, best_f1 = l2, mean_f1
    return best_l2, []


def config_fingerprint(cfg: TrainConfig, language: str) -> str:
    """Content hash of the full training configuration."""
    payload = {
        "class_weighting": cfg.class_weighting,
        "convergence_tolerance": cfg.convergence_tolerance,
        "idf_log_base": "e",
        "l2_strength_grid": list(cfg.l2_strength_grid),
        "language": language,
        "max_iterations": cfg.max_iterations,
        "ngram_range": [1, 2],
        "normalization": "nfd/strip-mn/punct-to-space/lower",
        "seed": cfg.seed,
        "threshold": cfg.threshold,
    }
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def resolve_trained_at(explicit: str | None = None) -> str:
    """Model timestamp: explicit value, else SOURCE_DATE_EPOCH, else a fixed
    origin so that identical invocations produce identical artifacts."""
    if explicit is not None:
        return explicit
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    if epoch is not None:
        moment = datetime.datetime.fromtimestamp(int(epoch), tz=datetime.timezone.utc)
        return moment.strftime("%Y-%m-%dT%H:%M:%SZ")
    return EPOCH_ORIGIN


def train(
    examples: list[LabeledExample],
    vocab: Vocabulary,
    stopwords: set[str] | frozenset[str],
    cfg: TrainConfig,
    trained_at: str | None = None,
) -> TrainedModel:
    """Train on labeled examples over a fixed vocabulary.

    The vocabulary and stopwords must come from these examples' training
    split only (the caller owns leakage discipline); both are embedded in
    the returned model together with the decision threshold.
    """
    if not examples:
        raise SingleClassError("cannot train on zero examples")
    languages = {e.language for e in examples}
    if len(languages) != 1:
        raise ConfigError(f"training set mixes languages: {sorted(languages)}")
    language = examples[0].language
    y = np.asarray([e.label for e in examples], dtype=np.float64)
    if len(set(y.tolist())) < 2:
        raise SingleClassError("training needs both classes present")
    X = to_matrix([normalize(e.text) for e in examples], vocab)
    l2, selection_warnings = _select_l2(X, y, examples, cfg)
    weights, bias, info = _fit(X, y, l2, cfg)
    info["warnings"] = selection_warnings + info["warnings"]
    return TrainedModel(
        language=language,
        vocabulary=vocab,
        weights=weights,
        bias=bias,
        threshold=cfg.threshold,
        stopwords=frozenset(stopwords),
        trained_at=resolve_trained_at(trained_at),
        config_fingerprint=config_fingerprint(cfg, language),
        training_info=info,
    )


def decision_score(model: TrainedModel, text: str) -> tuple[float, dict[int, float]]:
    """Pre-sigmoid logit of a raw sentence plus its sparse feature vector."""
    features = compute_tfidf(normalize(text), model.vocabulary)
    score = model.bias
    for idx in sorted(features.weights):
        score += float(model.weights[idx]) * features.weights[idx]
    return score, features.weights


def predict(model: TrainedModel, text: str) -> Prediction:
    """Classify a raw sentence with the model's embedded pipeline.

    Sentences made entirely of out-of-vocabulary terms are legal and score
    sigmoid(bias). The threshold comparison is inclusive: p >= threshold
    labels toxic.
    """
    score, _ = decision_score(model, text)
    probability = float(sigmoid(score))
    label = 1 if probability >= model.threshold else 0
    return Prediction(probability=probability, label=label, score=score)


def feature_weights(
    model: TrainedModel, k: int
) -> tuple[list[tuple[str, float]], list[tuple[str, float]]]:
    """Top-k toxic-indicative and top-k neutral-indicative terms.

    Only strictly positive / strictly negative weights participate; ties
    break lexicographically by term.
    """
    if k < 1 or k > len(model.vocabulary):
        raise ConfigError(f"k must be in [1, {len(model.vocabulary)}], got {k}")
    weighted = list(zip(model.vocabulary.terms, (float(w) for w in model.weights)))
    positive = sorted(
        ((t, w) for t, w in weighted if w > 0), key=lambda tw: (-tw[1], tw[0])
    )
    negative = sorted(
        ((t, w) for t, w in weighted if w < 0), key=lambda tw: (tw[1], tw[0])
    )
    return positive[:k], negative[:k]
