#!/usr/bin/env python3
"""Regenerate the bundled demonstration corpus.

The corpus is synthetic: four "authors", each a seeded bigram-style
generator with its own function-word habits, vocabulary breadth, and
repetition profile, so that word-network features separate them. Output
is committed under src/wordnetworks/data/fixture/; rerunning this script
reproduces it byte for byte.
"""

from __future__ import annotations

import zlib
from pathlib import Path

import numpy as np

OUT = Path(__file__).resolve().parent.parent / "src" / "wordnetworks" / "data" / "fixture"

FUNCTION_WORDS = (
    "the of and a to in is was he for it with as his on be at by i this had "
    "not are but from or have an they which one you were her all she there "
    "would their we him been has when who will more no if out so said what "
    "up its about into than them can only other".split()
)

_ONSETS = ["b", "br", "c", "cl", "d", "dr", "f", "fl", "g", "gr", "h", "j",
           "k", "l", "m", "n", "p", "pr", "r", "s", "st", "t", "tr", "v", "w"]
_VOWELS = ["a", "e", "i", "o", "u", "ai", "ea", "ou"]
_CODAS = ["", "n", "r", "s", "t", "l", "nd", "st", "m", "ck"]


def pseudo_words(count: int, seed: int) -> list[str]:
    rng = np.random.default_rng(seed)
    words: list[str] = []
    seen = set(FUNCTION_WORDS)
    while len(words) < count:
        syllables = rng.integers(2, 4)
        w = "".join(
            _ONSETS[rng.integers(len(_ONSETS))]
            + _VOWELS[rng.integers(len(_VOWELS))]
            + (_CODAS[rng.integers(len(_CODAS))] if s == syllables - 1 else "")
            for s in range(syllables)
        )
        if w not in seen:
            seen.add(w)
            words.append(w)
    return words


SHARED_CONTENT = pseudo_words(450, seed=12345)

AUTHORS = {
    # name: (function-word zipf skew, function-word rate, private vocab seed,
    #        content zipf exponent, mean sentence length)
    "ashford": (1.05, 0.58, 101, 1.30, 14),
    "blake": (1.60, 0.46, 202, 1.05, 9),
    "carver": (1.25, 0.52, 303, 1.75, 22),
    "dunmore": (1.90, 0.40, 404, 1.50, 6),
}

DOCS_PER_AUTHOR = 4
TOKENS_PER_DOC = 2400


def zipf_weights(n: int, s: float) -> np.ndarray:
    w = 1.0 / np.arange(1, n + 1) ** s
    return w / w.sum()


def generate_doc(author: str, doc_index: int) -> str:
    fn_skew, fn_rate, vocab_seed, content_s, sent_len = AUTHORS[author]
    author_key = zlib.crc32(author.encode("utf-8"))
    rng = np.random.default_rng([author_key, vocab_seed, doc_index])
    private = pseudo_words(120, seed=vocab_seed)
    # author-specific orderings of the shared pools
    perm = np.random.default_rng(vocab_seed).permutation(len(SHARED_CONTENT))
    content = [SHARED_CONTENT[i] for i in perm] + private
    fn_order = np.random.default_rng(vocab_seed + 7).permutation(len(FUNCTION_WORDS))
    fn_words = [FUNCTION_WORDS[i] for i in fn_order]
    fn_w = zipf_weights(len(fn_words), fn_skew)
    content_w = zipf_weights(len(content), content_s)

    words = []
    since_period = 0
    target = max(3, int(rng.normal(sent_len, 2)))
    while len(words) < TOKENS_PER_DOC:
        if rng.random() < fn_rate:
            w = fn_words[rng.choice(len(fn_words), p=fn_w)]
        else:
            w = content[rng.choice(len(content), p=content_w)]
        words.append(w)
        since_period += 1
        if since_period >= target:
            words[-1] = words[-1] + "."
            since_period = 0
            target = max(3, int(rng.normal(sent_len, 2)))
        elif rng.random() < 0.08:
            words[-1] = words[-1] + ","
    # sentence-case after periods, wrap lines
    text_words = []
    capitalize = True
    for w in words:
        text_words.append(w.capitalize() if capitalize else w)
        capitalize = w.endswith(".")
    lines = []
    for i in range(0, len(text_words), 14):
        lines.append(" ".join(text_words[i:i + 14]))
    return "\n".join(lines) + "\n"


def main() -> None:
    for author in AUTHORS:
        adir = OUT / author
        adir.mkdir(parents=True, exist_ok=True)
        for d in range(DOCS_PER_AUTHOR):
            (adir / f"doc{d + 1:02d}.txt").write_text(
                generate_doc(author, d), encoding="utf-8"
            )
    print(f"wrote {len(AUTHORS) * DOCS_PER_AUTHOR} documents under {OUT}")


if __name__ == "__main__":
    main()
