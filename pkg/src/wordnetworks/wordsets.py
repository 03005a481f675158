"""Representative word sets: corpus top-k lists and word-list files."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .ingest import Corpus


@dataclass(frozen=True)
class WordSet:
    name: str
    words: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.words)) != len(self.words):
            raise ValueError(f"word set {self.name!r} contains duplicates")

    def __len__(self) -> int:
        return len(self.words)


def top_k_from_counts(counts: Counter, k: int, name: str | None = None) -> WordSet:
    """Top-k words by count, descending, ties lexicographic ascending."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    ranked = sorted(counts, key=lambda w: (-counts[w], w))
    return WordSet(name or f"top{k}", tuple(ranked[:k]))


def top_k_frequent(corpus: Corpus, k: int) -> WordSet:
    """The k most frequent words by total raw count across the corpus.

    Ordered by descending frequency, ties broken lexicographically. If the
    vocabulary is smaller than k, the whole vocabulary is returned.
    """
    if len(corpus) == 0:
        raise ValueError("cannot rank words of an empty corpus")
    counts: Counter[str] = Counter()
    for doc in corpus.documents:
        counts.update(doc.tokens)
    return top_k_from_counts(counts, k)


def load_word_list(path) -> WordSet:
    """Load a one-word-per-line UTF-8 list.

    Lines are lowercased and deduplicated preserving first occurrence;
    blank lines and '#'-prefixed comment lines are skipped. An empty
    result is an error (an empty representative set is unusable).
    """
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ValueError(f"cannot read word list {p}: {exc}") from exc
    seen: dict[str, None] = {}
    for line in text.splitlines():
        word = line.strip().lower()
        if not word or word.startswith("#"):
            continue
        seen.setdefault(word)
    if not seen:
        raise ValueError(f"word list {p} contains no words")
    return WordSet(p.stem, tuple(seen))
