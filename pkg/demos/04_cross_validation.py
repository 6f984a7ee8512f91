"""
Stratified cross-validation without leakage
===========================================

Model quality is measured with stratified K-fold evaluation: folds keep
the toxic/non-toxic ratio of the whole corpus, and every per-fold model
derives its stopwords and vocabulary from its own training sentences
only, so nothing about held-out text leaks into the features. This script
runs the evaluation on the bundled Yoruba seed corpus and pulls the
report apart.
"""

from pathlib import Path

from textdetox import (
    evaluate_kfold,
    format_report_table,
    load_parallel_corpus,
    save_report,
    stratified_kfold_split,
    derive_labeled_set,
)

DATA = Path(__file__).resolve().parent.parent / "data"

pairs = load_parallel_corpus(DATA / "parallel_yo.tsv", "yo")
examples = derive_labeled_set(pairs)

# The splitter works on label multisets: with 5 toxic and 5 non-toxic
# sentences and k=2, each fold gets a balanced 2+3 / 3+2 share.
folds = stratified_kfold_split(examples, k=2, seed=0)
for i, fold in enumerate(folds):
    toxic = sum(1 for idx in fold if examples[idx].label == 1)
    print(f"fold {i}: {len(fold)} sentences, {toxic} toxic")

# The ten seed sentences are nowhere near enough data for stable scores;
# the point here is the mechanics of the report, not the numbers.
report = evaluate_kfold(pairs, k=2, seed=0)
print()
print(format_report_table(report))

# Aggregates are plain unweighted means over folds.
print(f"aggregate: { {k: round(v, 3) for k, v in sorted(report.aggregate.items())} }")

# Every fold records its confusion matrix, the regularization strength the
# inner grid search picked, and the strongest features of its model.
fold = report.folds[0]
print(f"fold 0 confusion: {fold.confusion}")
print(f"fold 0 l2 strength: {fold.l2_strength}")
print(f"fold 0 toxic terms: {[t for t, _ in fold.toxic_terms[:3]]}")

# Reports serialize to a canonical JSON document; identical runs produce
# byte-identical files, which makes regressions diffable.
out = Path(__file__).resolve().parent / "yo_report.json"
save_report(report, out)
print(f"wrote {out.name} ({out.stat().st_size} bytes)")
out.unlink()
