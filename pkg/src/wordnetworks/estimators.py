"""sklearn-compatible transformers turning documents into feature matrices.

Both transformers accept raw text strings, token sequences, or Document
objects and compose with sklearn pipelines (fit/transform, get_params).
"""

from __future__ import annotations

from collections import Counter

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from . import features as ft
from .ingest import Document, tokenize
from .network import build_word_network
from .wordsets import top_k_from_counts


def _doc_tokens(x) -> tuple[str, ...]:
    if isinstance(x, Document):
        return x.tokens
    if isinstance(x, str):
        return tuple(tokenize(x))
    return tuple(x)


class SummaryNetworkFeatures(BaseEstimator, TransformerMixin):
    """Transform documents into their 127-entry summary feature vectors."""

    def fit(self, X, y=None):
        return self

    def transform(self, X) -> np.ndarray:
        rows = [
            ft.summary_features(build_word_network(_doc_tokens(x))) for x in X
        ]
        if not rows:
            return np.zeros((0, ft.N_SUMMARY_FEATURES))
        return np.vstack(rows)

    def get_feature_names_out(self, input_features=None):
        return np.array(ft.SUMMARY_FEATURE_NAMES, dtype=object)


class LocalNetworkFeatures(BaseEstimator, TransformerMixin):
    """Per-word local features on a representative word set.

    Either pass an explicit ``words`` list, or set ``top_k`` to learn the
    k most frequent words from the fit documents. Multiple families are
    concatenated in order (the mixture representation).
    """

    def __init__(self, families=("degree",), words=None, top_k=None):
        self.families = families
        self.words = words
        self.top_k = top_k

    def fit(self, X, y=None):
        parsed = [ft.parse_family(f) for f in self.families]
        if not parsed:
            raise ValueError("at least one feature family is required")
        self.families_ = parsed
        if self.words is not None:
            self.words_ = tuple(self.words)
            if not self.words_:
                raise ValueError("explicit word list must be non-empty")
        elif self.top_k is not None:
            counts: Counter[str] = Counter()
            for x in X:
                counts.update(_doc_tokens(x))
            if not counts:
                raise ValueError("cannot learn a top-k word set from empty documents")
            self.words_ = top_k_from_counts(counts, self.top_k).words
        else:
            raise ValueError("either words or top_k must be given")
        return self

    def _check_fitted(self):
        if not hasattr(self, "words_"):
            raise NotFittedError("LocalNetworkFeatures is not fitted")

    def transform(self, X) -> np.ndarray:
        self._check_fitted()
        rows = []
        for x in X:
            net = build_word_network(_doc_tokens(x))
            rows.append(ft.concat_features([
                ft.local_features(net, self.words_, family, mode)
                for family, mode in self.families_
            ]))
        if not rows:
            return np.zeros((0, len(self.families_) * len(self.words_)))
        return np.vstack(rows)

    def get_feature_names_out(self, input_features=None):
        self._check_fitted()
        names = []
        for family, mode in self.families_:
            prefix = family if mode is ft.DegreeMode.ALL else f"{family}_{mode.value}"
            names.extend(f"{prefix}[{w}]" for w in self.words_)
        return np.array(names, dtype=object)
