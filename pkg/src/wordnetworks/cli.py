"""Command-line interface for the word-network authorship toolkit.

Subcommands: build-networks, extract, wordset, cv, ova, traintest, rank,
export. Experiment subcommands accept an optional --config JSON file;
flags override config values. Exit code 0 on success, nonzero with a
stage-attributed message on stderr otherwise.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .experiments import (ExperimentConfig, PipelineError, export_features,
                          export_networks, rank_features, run_experiment)
from .ingest import load_corpus
from .wordsets import load_word_list, top_k_frequent


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON config file; flags override its values")
    parser.add_argument("--corpus", help="author-per-directory corpus root")
    parser.add_argument("--train", help="training corpus root (traintest)")
    parser.add_argument("--test", help="flat test document directory (traintest)")
    parser.add_argument("--truth", help="doc_id<TAB>author truth file (traintest)")
    parser.add_argument("--family", action="append", dest="families",
                        help="feature family ('summary' or a local family, e.g. "
                             "degree, coreness:in); repeat for a mixture")
    parser.add_argument("--wordset", help="representative word-list file")
    parser.add_argument("--topk", type=int, dest="top_k",
                        help="use the corpus top-k most frequent words")
    parser.add_argument("--classifier", help="1nn | naive-bayes | majority | random")
    parser.add_argument("--folds", type=int, help="number of CV folds")
    parser.add_argument("--seed", type=int, help="random seed")
    parser.add_argument("--out", help="output path (extension-less report base)")
    parser.add_argument("--no-cache", action="store_true",
                        help="disable per-run network caching")
    parser.add_argument("--topk-include-test", action="store_true",
                        help="include test documents in top-k frequency counts")


def _build_config(args: argparse.Namespace, scheme: str) -> ExperimentConfig:
    values: dict = {}
    if args.config:
        try:
            values = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise PipelineError("config", f"cannot load {args.config}: {exc}") from exc
    for key in ("corpus", "train", "test", "truth", "families", "wordset",
                "top_k", "classifier", "folds", "seed", "out"):
        v = getattr(args, key, None)
        if v is not None:
            values[key] = v
    if args.no_cache:
        values["cache"] = False
    if args.topk_include_test:
        values["topk_include_test"] = True
    values["scheme"] = scheme
    try:
        return ExperimentConfig.from_dict(values)
    except (TypeError, ValueError) as exc:
        raise PipelineError("config", str(exc)) from exc


def _cmd_experiment(args, scheme: str) -> int:
    config = _build_config(args, scheme)
    report = run_experiment(config)
    sys.stdout.write(report.to_text())
    return 0


def _cmd_extract(args) -> int:
    scheme = "cv"  # extraction itself is scheme-agnostic; cv validates corpus configs
    if args.what == "summary":
        args.families = ["summary"]
    elif not args.families:
        raise PipelineError("config", "extract local needs at least one --family")
    config = _build_config(args, scheme)
    if not args.out:
        raise PipelineError("config", "extract needs --out CSV path")
    path = export_features(config, args.out)
    print(f"wrote {path}")
    return 0


def _cmd_wordset(args) -> int:
    if args.what == "topk":
        if not (args.corpus and args.top_k):
            raise PipelineError("config", "wordset topk needs --corpus and --topk")
        ws = top_k_frequent(load_corpus(args.corpus), args.top_k)
    else:
        if not args.wordset:
            raise PipelineError("config", "wordset list needs --wordset FILE")
        ws = load_word_list(args.wordset)
    text = "\n".join(ws.words) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out} ({len(ws)} words)")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_rank(args) -> int:
    config = _build_config(args, "cv")
    ranking = rank_features(config, args.out)
    if args.out:
        print(f"wrote {args.out} ({len(ranking)} features)")
    else:
        for rank, (name, gain) in enumerate(ranking[:20], start=1):
            print(f"{rank}\t{name}\t{gain:.6f}")
    return 0


def _cmd_build_networks(args) -> int:
    if not (args.corpus and args.out):
        raise PipelineError("config", "build-networks needs --corpus and --out DIR")
    written = export_networks(args.corpus, args.out)
    print(f"wrote {len(written)} files under {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordnetworks",
        description="Word-network features for authorship attribution",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-networks", help="export per-document edge lists")
    _add_common(p)
    p.set_defaults(func=_cmd_build_networks)

    p = sub.add_parser("extract", help="extract features to CSV")
    p.add_argument("what", choices=["summary", "local"])
    _add_common(p)
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("wordset", help="build or normalize a word set")
    p.add_argument("what", choices=["topk", "list"])
    _add_common(p)
    p.set_defaults(func=_cmd_wordset)

    p = sub.add_parser("cv", help="multiclass stratified k-fold cross-validation")
    _add_common(p)
    p.set_defaults(func=lambda a: _cmd_experiment(a, "cv"))

    p = sub.add_parser("ova", help="one-vs-all cross-validation")
    _add_common(p)
    p.set_defaults(func=lambda a: _cmd_experiment(a, "ova"))

    p = sub.add_parser("traintest", help="train/test problem evaluation")
    _add_common(p)
    p.set_defaults(func=lambda a: _cmd_experiment(a, "traintest"))

    p = sub.add_parser("rank", help="information-gain feature ranking")
    _add_common(p)
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("export", help="export a feature matrix CSV (config-driven)")
    _add_common(p)
    p.set_defaults(func=lambda a: _cmd_extract_export(a))

    return parser


def _cmd_extract_export(args) -> int:
    config = _build_config(args, "cv")
    if not args.out:
        raise PipelineError("config", "export needs --out CSV path")
    path = export_features(config, args.out)
    print(f"wrote {path}")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PipelineError as exc:
        print(f"error {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error [input] {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
