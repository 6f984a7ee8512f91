"""Seed-deterministic stratified K-fold splitting.

Each class is shuffled and sliced so per-fold class counts differ from exact
proportionality by at most one. Remainder assignment is staggered across
classes (the extra members of class c start where the previous class's
extras stopped), which also keeps fold *sizes* within one of each other.
"""

from __future__ import annotations

import numpy as np

from .errors import SingleClassError
from .types import LabeledExample


def stratified_kfold_split(
    examples: list[LabeledExample], k: int, seed: int
) -> list[list[int]]:
    """Partition example indices into k stratified folds.

    Returns k disjoint, sorted index lists covering every example. Raises
    SingleClassError when any class has fewer than k members; k must be >= 2.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    by_label: dict[int, list[int]] = {}
    for i, example in enumerate(examples):
        by_label.setdefault(example.label, []).append(i)
    for label, members in sorted(by_label.items()):
        if len(members) < k:
            raise SingleClassError(
                f"class {label} has {len(members)} members, fewer than k={k}"
            )
    rng = np.random.default_rng(seed)
    folds: list[list[int]] = [[] for _ in range(k)]
    extra_start = 0
    for label in sorted(by_label):
        members = np.asarray(by_label[label])
        rng.shuffle(members)
        base, extra = divmod(len(members), k)
        counts = [base + (1 if (f - extra_start) % k < extra else 0) for f in range(k)]
        position = 0
        for fold, count in zip(folds, counts):
            fold.extend(int(i) for i in members[position : position + count])
            position += count
        extra_start += extra
    return [sorted(fold) for fold in folds]
