"""Corpus ingestion: tokenization, directory corpora, train/test problems.

Directory layout for a corpus: one subdirectory per author, one UTF-8
plain-text file per document. Train/test problems add a flat test
directory and a tab-separated truth file (doc_id<TAB>author).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

# A token is a maximal run of Unicode letters/digits, with apostrophes
# allowed strictly inside the run. Everything else separates.
_TOKEN_RE = re.compile(r"[^\W_]+(?:['’][^\W_]+)*", re.UNICODE)


def tokenize(text: str) -> list[str]:
    """Lowercase and split text into word tokens.

    Sentence punctuation carries no boundary semantics; no stemming or
    stopword removal is applied. Empty text yields an empty list.
    """
    return _TOKEN_RE.findall(text.lower())


@dataclass(frozen=True)
class Document:
    doc_id: str
    author: Optional[str]
    tokens: tuple[str, ...]

    def __post_init__(self):
        if any(not t for t in self.tokens):
            raise ValueError(f"document {self.doc_id!r} contains an empty token")


@dataclass(frozen=True)
class Corpus:
    documents: tuple[Document, ...]

    def __post_init__(self):
        ids = [d.doc_id for d in self.documents]
        if len(set(ids)) != len(ids):
            dup = sorted({i for i in ids if ids.count(i) > 1})
            raise ValueError(f"duplicate doc_ids in corpus: {dup}")

    @property
    def authors(self) -> frozenset[str]:
        return frozenset(d.author for d in self.documents if d.author is not None)

    def __len__(self) -> int:
        return len(self.documents)


@dataclass(frozen=True)
class AttributionProblem:
    """Closed-class train/test split with ground truth for scoring."""

    train: Corpus
    test: tuple[Document, ...]
    truth: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        test_ids = {d.doc_id for d in self.test}
        if set(self.truth) != test_ids:
            missing = sorted(test_ids - set(self.truth))
            extra = sorted(set(self.truth) - test_ids)
            raise ValueError(
                f"truth does not cover test docs exactly (missing={missing}, extra={extra})"
            )
        unknown = sorted(set(self.truth.values()) - set(self.train.authors))
        if unknown:
            raise ValueError(
                f"truth labels not among training authors (closed-class): {unknown}"
            )


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc


def load_corpus(root_dir) -> Corpus:
    """Load an author-per-directory corpus.

    doc_id is the file path relative to root_dir (POSIX separators);
    author label is the subdirectory name. Documents are sorted by doc_id
    for determinism.
    """
    root = Path(root_dir)
    if not root.is_dir():
        raise ValueError(f"corpus directory not found: {root}")
    docs = []
    for author_dir in sorted(p for p in root.iterdir() if p.is_dir()):
        for f in sorted(p for p in author_dir.iterdir() if p.is_file()):
            rel = f.relative_to(root).as_posix()
            docs.append(Document(rel, author_dir.name, tuple(tokenize(_read_text(f)))))
    if not docs:
        raise ValueError(f"empty corpus: no author/document files under {root}")
    docs.sort(key=lambda d: d.doc_id)
    return Corpus(tuple(docs))


def load_truth(truth_file) -> dict[str, str]:
    """Parse a doc_id<TAB>author truth file (UTF-8, one row per line)."""
    path = Path(truth_file)
    truth: dict[str, str] = {}
    for lineno, line in enumerate(_read_text(path).splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected 'doc_id<TAB>author', got {line!r}")
        doc_id, author = parts[0].strip(), parts[1].strip()
        if doc_id in truth:
            raise ValueError(f"{path}:{lineno}: duplicate truth row for {doc_id!r}")
        truth[doc_id] = author
    return truth


def load_problem(train_dir, test_dir, truth_file) -> AttributionProblem:
    """Load a closed-class attribution problem from disk."""
    train = load_corpus(train_dir)
    test_root = Path(test_dir)
    if not test_root.is_dir():
        raise ValueError(f"test directory not found: {test_root}")
    test_docs = []
    for f in sorted(p for p in test_root.iterdir() if p.is_file()):
        test_docs.append(Document(f.name, None, tuple(tokenize(_read_text(f)))))
    if not test_docs:
        raise ValueError(f"no test documents under {test_root}")
    truth = load_truth(truth_file)
    return AttributionProblem(train, tuple(test_docs), truth)
