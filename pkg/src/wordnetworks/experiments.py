"""End-to-end experiment runner: ingestion -> networks -> features -> learning.

Experiments are described by an ExperimentConfig (declarative, JSON-
serializable); every report embeds the fully resolved config so outputs
are self-describing. All artifacts are byte-identical for a fixed config
and seed.
"""

from __future__ import annotations

import csv
import hashlib
import json
from collections import Counter
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import features as ft
from .ingest import AttributionProblem, Corpus, Document, load_corpus, load_problem
from .learn import (ClassifierKind, Dataset, EvaluationReport, cross_validate,
                    evaluate_train_test, information_gain, one_vs_all)
from .network import WordNetwork, build_word_network, export_edge_list
from .wordsets import WordSet, load_word_list, top_k_from_counts

SCHEMES = ("cv", "ova", "traintest")


class PipelineError(Exception):
    """Error attributed to a pipeline stage."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage


@dataclass
class ExperimentConfig:
    corpus: Optional[str] = None
    train: Optional[str] = None
    test: Optional[str] = None
    truth: Optional[str] = None
    families: list[str] = field(default_factory=lambda: ["summary"])
    wordset: Optional[str] = None  # word-list file path
    top_k: Optional[int] = None
    classifier: str = "1nn"
    scheme: str = "cv"
    folds: int = 10
    seed: int = 0
    out: Optional[str] = None
    cache: bool = True
    topk_include_test: bool = False

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise ValueError(f"scheme must be one of {SCHEMES}, got {self.scheme!r}")
        if not self.families:
            raise ValueError("at least one feature family is required")
        if "summary" in self.families and len(self.families) > 1:
            raise ValueError("'summary' cannot be mixed with local families")
        if self.scheme == "traintest":
            if not (self.train and self.test and self.truth):
                raise ValueError("traintest scheme needs --train, --test and --truth")
        elif not self.corpus:
            raise ValueError(f"scheme {self.scheme!r} needs --corpus")
        if not self.is_summary and not (self.wordset or self.top_k):
            raise ValueError("local feature families need --wordset or --topk")

    @property
    def is_summary(self) -> bool:
        return self.families == ["summary"]

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentConfig":
        unknown = set(d) - {f for f in cls.__dataclass_fields__}
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**d)

    def to_dict(self) -> dict:
        return asdict(self)


class NetworkCache:
    """Per-run cache of word networks keyed by doc_id + token content hash."""

    def __init__(self, enabled: bool = True):
        self.enabled = enabled
        self._store: dict[tuple[str, str], WordNetwork] = {}
        self.hits = 0

    def get(self, doc: Document) -> WordNetwork:
        if not self.enabled:
            return build_word_network(doc.tokens)
        digest = hashlib.sha256("\x00".join(doc.tokens).encode("utf-8")).hexdigest()
        key = (doc.doc_id, digest)
        net = self._store.get(key)
        if net is None:
            net = build_word_network(doc.tokens)
            self._store[key] = net
        else:
            self.hits += 1
        return net


def _resolve_wordset(config: ExperimentConfig, docs: Sequence[Document]) -> Optional[WordSet]:
    if config.is_summary:
        return None
    if config.wordset:
        return load_word_list(config.wordset)
    counts: Counter[str] = Counter()
    for d in docs:
        counts.update(d.tokens)
    if not counts:
        raise ValueError("cannot build a top-k word set from empty documents")
    return top_k_from_counts(counts, config.top_k)


def _feature_names(config: ExperimentConfig, wordset: Optional[WordSet]) -> tuple[str, ...]:
    if config.is_summary:
        return ft.SUMMARY_FEATURE_NAMES
    names = []
    for spec in config.families:
        family, mode = ft.parse_family(spec)
        prefix = family if mode is ft.DegreeMode.ALL else f"{family}_{mode.value}"
        names.extend(f"{prefix}[{w}]" for w in wordset.words)
    return tuple(names)


def _feature_rows(config: ExperimentConfig, docs: Sequence[Document],
                  wordset: Optional[WordSet], cache: NetworkCache) -> np.ndarray:
    rows = []
    parsed = None if config.is_summary else [ft.parse_family(s) for s in config.families]
    for doc in docs:
        net = cache.get(doc)
        if config.is_summary:
            rows.append(ft.summary_features(net))
        else:
            rows.append(ft.concat_features([
                ft.local_features(net, wordset.words, family, mode)
                for family, mode in parsed
            ]))
    if not rows:
        n_cols = ft.N_SUMMARY_FEATURES if config.is_summary else (
            len(config.families) * len(wordset.words))
        return np.zeros((0, n_cols))
    return np.vstack(rows)


def build_dataset(config: ExperimentConfig, docs: Sequence[Document],
                  wordset: Optional[WordSet], cache: NetworkCache) -> Dataset:
    X = _feature_rows(config, docs, wordset, cache)
    y = tuple(d.author or "" for d in docs)
    return Dataset(X, y, _feature_names(config, wordset))


def run_experiment(config: ExperimentConfig) -> EvaluationReport:
    """Run the configured scheme end to end; write report JSON + text if
    an output path is configured."""
    cache = NetworkCache(config.cache)
    try:
        kind = ClassifierKind.from_string(config.classifier)
    except ValueError as exc:
        raise PipelineError("config", str(exc)) from exc
    echo = config.to_dict()
    if config.scheme == "traintest":
        try:
            problem = load_problem(config.train, config.test, config.truth)
        except ValueError as exc:
            raise PipelineError("ingest", str(exc)) from exc
        try:
            topk_docs = list(problem.train.documents)
            if config.topk_include_test:
                topk_docs += list(problem.test)
            wordset = _resolve_wordset(config, topk_docs)
            train_data = build_dataset(config, problem.train.documents, wordset, cache)
            test_X = _feature_rows(config, problem.test, wordset, cache)
        except ValueError as exc:
            raise PipelineError("features", str(exc)) from exc
        try:
            report = evaluate_train_test(
                kind, train_data, test_X, [d.doc_id for d in problem.test],
                problem.truth, config.seed, echo,
            )
        except ValueError as exc:
            raise PipelineError("learn", str(exc)) from exc
    else:
        try:
            corpus = load_corpus(config.corpus)
            if len(corpus.authors) < 2:
                raise ValueError("classification needs at least 2 authors")
        except ValueError as exc:
            raise PipelineError("ingest", str(exc)) from exc
        try:
            wordset = _resolve_wordset(config, corpus.documents)
            data = build_dataset(config, corpus.documents, wordset, cache)
        except ValueError as exc:
            raise PipelineError("features", str(exc)) from exc
        try:
            if config.scheme == "cv":
                report = cross_validate(kind, data, config.folds, config.seed, echo)
            else:
                report = one_vs_all(kind, data, config.folds, config.seed, echo)
        except ValueError as exc:
            raise PipelineError("learn", str(exc)) from exc
    if config.out:
        try:
            out = Path(config.out)
            out.parent.mkdir(parents=True, exist_ok=True)
            out.with_suffix(".json").write_text(report.to_json(), encoding="utf-8")
            out.with_suffix(".txt").write_text(report.to_text(), encoding="utf-8")
        except OSError as exc:
            raise PipelineError("output", str(exc)) from exc
    return report


def _format_value(v: float) -> str:
    return repr(float(v))  # shortest round-trip decimal


def export_features(config: ExperimentConfig, out_path) -> Path:
    """Write a feature matrix CSV: doc_id, author, then one feature column
    per name; author is empty for unlabeled documents."""
    cache = NetworkCache(config.cache)
    try:
        corpus = load_corpus(config.corpus)
    except ValueError as exc:
        raise PipelineError("ingest", str(exc)) from exc
    try:
        wordset = _resolve_wordset(config, corpus.documents)
        names = _feature_names(config, wordset)
        X = _feature_rows(config, corpus.documents, wordset, cache)
    except ValueError as exc:
        raise PipelineError("features", str(exc)) from exc
    out = Path(out_path)
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        with out.open("w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["doc_id", "author", *names])
            for doc, row in zip(corpus.documents, X):
                writer.writerow([doc.doc_id, doc.author or "",
                                 *(_format_value(v) for v in row)])
    except OSError as exc:
        raise PipelineError("output", str(exc)) from exc
    return out


def import_feature_csv(path) -> tuple[list[str], list[str], Dataset]:
    """Read a feature CSV back into (doc_ids, authors, Dataset)."""
    with Path(path).open(encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header[:2] != ["doc_id", "author"]:
            raise ValueError(f"{path}: not a feature CSV (header {header[:2]})")
        names = tuple(header[2:])
        ids, authors, rows = [], [], []
        for rec in reader:
            ids.append(rec[0])
            authors.append(rec[1])
            rows.append([float(v) for v in rec[2:]])
    X = np.array(rows, dtype=float) if rows else np.zeros((0, len(names)))
    return ids, authors, Dataset(X, tuple(authors), names)


def rank_features(config: ExperimentConfig, out_path=None) -> list[tuple[str, float]]:
    """Information-gain ranking of the assembled feature matrix."""
    cache = NetworkCache(config.cache)
    try:
        corpus = load_corpus(config.corpus)
    except ValueError as exc:
        raise PipelineError("ingest", str(exc)) from exc
    try:
        wordset = _resolve_wordset(config, corpus.documents)
        data = build_dataset(config, corpus.documents, wordset, cache)
    except ValueError as exc:
        raise PipelineError("features", str(exc)) from exc
    try:
        ranking = information_gain(data)
    except ValueError as exc:
        raise PipelineError("learn", str(exc)) from exc
    if out_path is not None:
        try:
            out = Path(out_path)
            out.parent.mkdir(parents=True, exist_ok=True)
            lines = [
                f"{rank}\t{name}\t{_format_value(gain)}"
                for rank, (name, gain) in enumerate(ranking, start=1)
            ]
            out.write_text("\n".join(lines) + "\n", encoding="utf-8")
        except OSError as exc:
            raise PipelineError("output", str(exc)) from exc
    return ranking


def export_networks(corpus_dir, out_dir) -> list[Path]:
    """Write per-document edge-list and vertex files for a corpus."""
    try:
        corpus = load_corpus(corpus_dir)
    except ValueError as exc:
        raise PipelineError("ingest", str(exc)) from exc
    out_root = Path(out_dir)
    written = []
    for doc in corpus.documents:
        net = build_word_network(doc.tokens)
        base = out_root / doc.doc_id
        base.parent.mkdir(parents=True, exist_ok=True)
        edges = base.with_suffix(".edges.tsv")
        vertices = base.with_suffix(".vertices.tsv")
        export_edge_list(net, edges, vertices)
        written.extend([edges, vertices])
    return written


def fixture_corpus_path() -> Path:
    """Location of the bundled 4-author demonstration corpus."""
    return Path(resources.files("wordnetworks") / "data" / "fixture")


def demo_wordlist_path() -> Path:
    return Path(resources.files("wordnetworks") / "data" / "wordlists" / "demo_stopwords.txt")
