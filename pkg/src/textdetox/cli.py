"""Command-line entry point: train, eval, detox, batch, serve.

Batch output is tab-separated; tabs inside sentence fields are flattened to
single spaces so column structure survives arbitrary input text.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from .classify import TrainConfig
from .corpus import (
    load_lexicon,
    load_parallel_corpus,
    derive_labeled_set,
    load_model,
    save_model,
)
from .errors import DetoxError, ConfigError
from .evaluate import (
    evaluate_holdout,
    evaluate_kfold,
    format_report_table,
    save_report,
    train_fold,
)
from .rewrite import build_corpus_index, detoxify
from .types import DEFAULT_THRESHOLDS, LANGUAGES, Lexicon

TOXIC_TAG = "[TOXIC]"
NON_TOXIC_TAG = "[NON-TOXIC]"
BATCH_COLUMNS = ("input", "label", "probability", "method", "output")


def _parse_grid(text: str) -> tuple[float, ...]:
    try:
        grid = tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}; expected floats like 0.01,0.1")
    if not grid:
        raise argparse.ArgumentTypeError("grid must list at least one value")
    return grid


def _parse_balance(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(
            f"bad balance band {text!r}; expected LOW,HIGH like 0.35,0.65"
        )
    try:
        low, high = float(parts[0]), float(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad balance band {text!r}; values must be floats")
    return low, high


def _add_training_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--seed", type=int, default=0, help="seed for every random choice")
    sub.add_argument(
        "--threshold",
        type=float,
        default=None,
        help="decision threshold (default: per-language published value)",
    )
    sub.add_argument(
        "--stopword-df",
        type=float,
        default=0.2,
        dest="stopword_df",
        help="document-frequency fraction above which a token may be a stopword",
    )
    sub.add_argument(
        "--stopword-balance",
        type=_parse_balance,
        default=(0.35, 0.65),
        dest="stopword_balance",
        metavar="LOW,HIGH",
        help="toxic-share band a frequent token must fall in to be a stopword",
    )
    sub.add_argument(
        "--grid",
        type=_parse_grid,
        default=(0.001, 0.01, 0.1, 1.0),
        help="comma-separated L2 strengths to grid-search",
    )


def _make_config(args: argparse.Namespace) -> TrainConfig:
    threshold = args.threshold
    if threshold is None:
        threshold = DEFAULT_THRESHOLDS[args.lang]
    return TrainConfig(l2_strength_grid=args.grid, seed=args.seed, threshold=threshold)


def _load_rewrite_parts(args: argparse.Namespace):
    model = load_model(args.model)
    if model.language != args.lang:
        raise ConfigError(
            f"model at {args.model} is for {model.language!r}, not {args.lang!r}"
        )
    if args.threshold is not None:
        model = dataclasses.replace(model, threshold=args.threshold)
    pairs = load_parallel_corpus(args.data, args.lang) if args.data else []
    index = build_corpus_index(pairs, args.lang)
    lexicon = (
        load_lexicon(args.lexicon, args.lang) if args.lexicon else Lexicon(args.lang, {})
    )
    return model, index, lexicon


def _cmd_train(args: argparse.Namespace) -> int:
    pairs = load_parallel_corpus(args.data, args.lang)
    examples = derive_labeled_set(pairs)
    cfg = _make_config(args)
    model = train_fold(
        examples,
        list(range(len(examples))),
        cfg,
        stopword_df=args.stopword_df,
        stopword_balance=args.stopword_balance,
    )
    save_model(model, args.out)
    info = model.training_info
    print(
        f"trained {args.lang} model on {len(examples)} sentences "
        f"(l2={info['l2_strength']}, {info['iterations']} iterations) -> {args.out}"
    )
    for warning in info.get("warnings", ()):
        print(f"warning: {warning}", file=sys.stderr)
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    pairs = load_parallel_corpus(args.data, args.lang)
    cfg = _make_config(args)
    if args.holdout is not None:
        report = evaluate_holdout(
            pairs,
            cfg,
            holdout_fraction=args.holdout,
            seed=args.seed,
            stopword_df=args.stopword_df,
            stopword_balance=args.stopword_balance,
        )
    else:
        report = evaluate_kfold(
            pairs,
            cfg,
            k=args.k,
            seed=args.seed,
            stopword_df=args.stopword_df,
            stopword_balance=args.stopword_balance,
        )
    sys.stdout.write(format_report_table(report))
    if args.out:
        save_report(report, args.out)
        print(f"report -> {args.out}")
    return 0


def _cmd_detox(args: argparse.Namespace) -> int:
    model, index, lexicon = _load_rewrite_parts(args)
    result = detoxify(
        args.text, model, index, lexicon, strict_lookup=args.strict_lookup
    )
    tag = TOXIC_TAG if result.label == 1 else NON_TOXIC_TAG
    print(f"{tag} {result.output_text}")
    return 0


def _tsv_field(text: str) -> str:
    return text.replace("\t", " ")


def _cmd_batch(args: argparse.Namespace) -> int:
    model, index, lexicon = _load_rewrite_parts(args)
    try:
        content = Path(args.input).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ConfigError(f"{args.input} is not valid UTF-8: {exc}") from exc
    sentences = content.splitlines()
    rows = ["\t".join(BATCH_COLUMNS)]
    for sentence in sentences:
        result = detoxify(
            sentence, model, index, lexicon, strict_lookup=args.strict_lookup
        )
        rows.append(
            "\t".join(
                (
                    _tsv_field(result.input_text),
                    str(result.label),
                    f"{result.probability:.6f}",
                    result.method,
                    _tsv_field(result.output_text),
                )
            )
        )
    Path(args.out).write_text("\n".join(rows) + "\n", encoding="utf-8")
    print(f"processed {len(sentences)} sentences -> {args.out}")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    from .service import run_server

    run_server(
        assets_dir=args.model,
        port=args.port,
        feedback_path=args.out,
        strict_lookup=args.strict_lookup,
        host=args.host,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="textdetox",
        description="Detect and rewrite toxic isiXhosa and Yoruba sentences.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    train = commands.add_parser("train", help="train a model and write a .detoxmodel file")
    train.add_argument("--lang", required=True, choices=LANGUAGES)
    train.add_argument("--data", required=True, help="parallel corpus TSV")
    train.add_argument("--out", required=True, help="model file to write")
    _add_training_flags(train)
    train.set_defaults(handler=_cmd_train)

    evaluate = commands.add_parser("eval", help="stratified k-fold evaluation report")
    evaluate.add_argument("--lang", required=True, choices=LANGUAGES)
    evaluate.add_argument("--data", required=True, help="parallel corpus TSV")
    evaluate.add_argument("--out", default=None, help="structured report file to write")
    evaluate.add_argument("--k", type=int, default=5, help="number of folds")
    evaluate.add_argument(
        "--holdout",
        type=float,
        default=None,
        metavar="FRACTION",
        help="score a single stratified holdout split instead of k folds",
    )
    _add_training_flags(evaluate)
    evaluate.set_defaults(handler=_cmd_eval)

    detox = commands.add_parser("detox", help="classify and rewrite one sentence")
    detox.add_argument("text", help="sentence to process")
    detox.add_argument("--lang", required=True, choices=LANGUAGES)
    detox.add_argument("--model", required=True, help=".detoxmodel file")
    detox.add_argument("--data", default=None, help="parallel corpus TSV for sentence lookup")
    detox.add_argument("--lexicon", default=None, help="lexicon TSV for token substitution")
    detox.add_argument("--threshold", type=float, default=None)
    detox.add_argument(
        "--strict-lookup",
        action="store_true",
        dest="strict_lookup",
        help="corpus lookup requires byte-exact toxic sentences",
    )
    detox.set_defaults(handler=_cmd_detox)

    batch = commands.add_parser("batch", help="process a file of sentences into a TSV")
    batch.add_argument("input", help="UTF-8 text file, one sentence per line")
    batch.add_argument("--lang", required=True, choices=LANGUAGES)
    batch.add_argument("--model", required=True, help=".detoxmodel file")
    batch.add_argument("--out", required=True, help="TSV file to write")
    batch.add_argument("--data", default=None, help="parallel corpus TSV for sentence lookup")
    batch.add_argument("--lexicon", default=None, help="lexicon TSV for token substitution")
    batch.add_argument("--threshold", type=float, default=None)
    batch.add_argument("--strict-lookup", action="store_true", dest="strict_lookup")
    batch.set_defaults(handler=_cmd_batch)

    serve = commands.add_parser("serve", help="start the HTTP validation service")
    serve.add_argument(
        "--model",
        required=True,
        help="assets directory holding <lang>.detoxmodel, parallel_<lang>.tsv, lexicon_<lang>.tsv",
    )
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument(
        "--out",
        default=None,
        help="feedback log path (default: feedback.jsonl inside the assets directory)",
    )
    serve.add_argument("--strict-lookup", action="store_true", dest="strict_lookup")
    serve.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except DetoxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
