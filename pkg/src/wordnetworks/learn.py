"""Classifiers, baselines, cross-validation, one-vs-all, and feature ranking.

Classifiers follow the sklearn estimator API (fit/predict, get_params) and
additionally expose ``predict_one`` returning a (label, score) Prediction.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin


class ClassifierKind(Enum):
    ONE_NN = "1nn"
    GAUSSIAN_NB = "naive-bayes"
    MAJORITY = "majority"
    RANDOM = "random"

    @classmethod
    def from_string(cls, name: str) -> "ClassifierKind":
        key = name.strip().lower()
        aliases = {
            "1nn": cls.ONE_NN,
            "nn": cls.ONE_NN,
            "naive-bayes": cls.GAUSSIAN_NB,
            "nb": cls.GAUSSIAN_NB,
            "majority": cls.MAJORITY,
            "random": cls.RANDOM,
        }
        if key not in aliases:
            supported = sorted(set(aliases))
            raise ValueError(f"unsupported classifier {name!r}; supported: {supported}")
        return aliases[key]


@dataclass(frozen=True)
class Prediction:
    label: str
    score: float

    def __post_init__(self):
        if not math.isfinite(self.score):
            raise ValueError(f"prediction score must be finite, got {self.score}")


@dataclass(frozen=True)
class Dataset:
    X: np.ndarray
    y: tuple[str, ...]
    feature_names: tuple[str, ...]

    def __post_init__(self):
        X = np.asarray(self.X, dtype=float)
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "y", tuple(self.y))
        object.__setattr__(self, "feature_names", tuple(self.feature_names))
        if X.ndim != 2:
            raise ValueError(f"X must be 2-dimensional, got shape {X.shape}")
        if len(self.y) != X.shape[0]:
            raise ValueError(f"{len(self.y)} labels for {X.shape[0]} instances")
        if len(self.feature_names) != X.shape[1]:
            raise ValueError(
                f"{len(self.feature_names)} feature names for {X.shape[1]} columns"
            )

    @property
    def n(self) -> int:
        return self.X.shape[0]

    @property
    def classes(self) -> tuple[str, ...]:
        return tuple(sorted(set(self.y)))


def _check_vector(model, x) -> np.ndarray:
    x = np.asarray(x, dtype=float).ravel()
    if x.size != model.n_features_in_:
        raise ValueError(f"expected {model.n_features_in_} features, got {x.size}")
    return x


class OneNearestNeighbor(BaseEstimator, ClassifierMixin):
    """1NN with per-feature min-max normalization fitted on training data.

    Zero-range features map to 0; distance is Euclidean on normalized
    features; nearest-neighbor ties break toward the lowest training index.
    """

    def fit(self, X, y):
        X = np.asarray(X, dtype=float)
        if X.size == 0:
            raise ValueError("cannot train on an empty dataset")
        self.n_features_in_ = X.shape[1]
        self.classes_ = np.array(sorted(set(y)), dtype=object)
        self._lo = X.min(axis=0)
        self._span = X.max(axis=0) - self._lo
        self._Xn = self._normalize(X)
        self._y = np.asarray(list(y), dtype=object)
        return self

    def _normalize(self, X):
        out = np.zeros_like(X, dtype=float)
        nz = self._span > 0
        out[:, nz] = (X[:, nz] - self._lo[nz]) / self._span[nz]
        return out

    def _distances(self, X):
        Xn = self._normalize(np.asarray(X, dtype=float))
        return np.sqrt(((Xn[:, None, :] - self._Xn[None, :, :]) ** 2).sum(axis=2))

    def predict(self, X):
        d = self._distances(X)
        return self._y[d.argmin(axis=1)]  # argmin takes the lowest index on ties

    def predict_one(self, x) -> Prediction:
        x = _check_vector(self, x)
        d = self._distances(x[None, :])[0]
        i = int(d.argmin())
        return Prediction(str(self._y[i]), -float(d[i]))


class GaussianNaiveBayes(BaseEstimator, ClassifierMixin):
    """Gaussian naive Bayes with a 1e-9 variance floor and count priors."""

    VAR_FLOOR = 1e-9

    def fit(self, X, y):
        X = np.asarray(X, dtype=float)
        if X.size == 0:
            raise ValueError("cannot train on an empty dataset")
        self.n_features_in_ = X.shape[1]
        y = np.asarray(list(y), dtype=object)
        self.classes_ = np.array(sorted(set(y)), dtype=object)
        self._means = []
        self._vars = []
        self._log_priors = []
        for c in self.classes_:
            rows = X[y == c]
            self._means.append(rows.mean(axis=0))
            self._vars.append(np.maximum(rows.var(axis=0), self.VAR_FLOOR))
            self._log_priors.append(math.log(len(rows) / len(y)))
        self._means = np.array(self._means)
        self._vars = np.array(self._vars)
        self._log_priors = np.array(self._log_priors)
        return self

    def _log_posteriors(self, X):
        X = np.asarray(X, dtype=float)
        # log N(x; mu, var) summed over features, plus log prior
        ll = -0.5 * (
            np.log(2 * np.pi * self._vars[None, :, :])
            + (X[:, None, :] - self._means[None, :, :]) ** 2 / self._vars[None, :, :]
        ).sum(axis=2)
        return ll + self._log_priors[None, :]

    def predict(self, X):
        return self.classes_[self._log_posteriors(X).argmax(axis=1)]

    def predict_one(self, x) -> Prediction:
        x = _check_vector(self, x)
        lp = self._log_posteriors(x[None, :])[0]
        i = int(lp.argmax())
        return Prediction(str(self.classes_[i]), float(lp[i]))


class MajorityClass(BaseEstimator, ClassifierMixin):
    """Always predicts the modal training label (ties -> lexicographic)."""

    def fit(self, X, y):
        X = np.asarray(X, dtype=float)
        y = list(y)
        if not y:
            raise ValueError("cannot train on an empty dataset")
        self.n_features_in_ = X.shape[1]
        counts = Counter(y)
        self.classes_ = np.array(sorted(counts), dtype=object)
        self.majority_ = min(counts, key=lambda c: (-counts[c], c))
        self.majority_fraction_ = counts[self.majority_] / len(y)
        return self

    def predict(self, X):
        return np.array([self.majority_] * len(np.asarray(X)), dtype=object)

    def predict_one(self, x) -> Prediction:
        _check_vector(self, x)
        return Prediction(self.majority_, self.majority_fraction_)


class RandomGuess(BaseEstimator, ClassifierMixin):
    """Uniformly random predictions from a seeded stream."""

    def __init__(self, seed: int = 0):
        self.seed = seed

    def fit(self, X, y):
        X = np.asarray(X, dtype=float)
        y = list(y)
        if not y:
            raise ValueError("cannot train on an empty dataset")
        self.n_features_in_ = X.shape[1]
        self.classes_ = np.array(sorted(set(y)), dtype=object)
        self._rng = np.random.default_rng(self.seed)
        return self

    def predict(self, X):
        m = len(np.asarray(X))
        return self.classes_[self._rng.integers(0, len(self.classes_), size=m)]

    def predict_one(self, x) -> Prediction:
        _check_vector(self, x)
        label = self.classes_[int(self._rng.integers(0, len(self.classes_)))]
        return Prediction(str(label), 1.0 / len(self.classes_))


def make_classifier(kind: ClassifierKind, seed: int = 0):
    if kind is ClassifierKind.ONE_NN:
        return OneNearestNeighbor()
    if kind is ClassifierKind.GAUSSIAN_NB:
        return GaussianNaiveBayes()
    if kind is ClassifierKind.MAJORITY:
        return MajorityClass()
    return RandomGuess(seed=seed)


def train(kind: ClassifierKind, data: Dataset, seed: int = 0):
    if data.n == 0:
        raise ValueError("cannot train on an empty dataset")
    return make_classifier(kind, seed).fit(data.X, data.y)


def predict(model, vector) -> Prediction:
    return model.predict_one(vector)


@dataclass(frozen=True)
class EvaluationReport:
    accuracy: float  # percent
    per_class_accuracy: dict[str, float]
    labels: tuple[str, ...]
    confusion: tuple[tuple[int, ...], ...]
    config: dict
    seed: int
    warnings: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "accuracy": self.accuracy,
            "per_class_accuracy": dict(self.per_class_accuracy),
            "labels": list(self.labels),
            "confusion": [list(row) for row in self.confusion],
            "config": self.config,
            "seed": self.seed,
            "warnings": list(self.warnings),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"accuracy: {self.accuracy:.2f}%", ""]
        lines.append("per-class accuracy:")
        for label in self.labels:
            lines.append(f"  {label}: {self.per_class_accuracy.get(label, 0.0):.2f}%")
        lines.append("")
        width = max([len(l) for l in self.labels] + [5])
        header = " " * (width + 1) + " ".join(f"{l:>{width}}" for l in self.labels)
        lines.append("confusion (rows = truth):")
        lines.append(header)
        for label, row in zip(self.labels, self.confusion):
            lines.append(
                f"{label:>{width}} " + " ".join(f"{c:>{width}d}" for c in row)
            )
        if self.warnings:
            lines.append("")
            lines.append("warnings:")
            lines.extend(f"  {w}" for w in self.warnings)
        lines.append("")
        lines.append(f"seed: {self.seed}")
        lines.append("config: " + json.dumps(self.config, sort_keys=True))
        return "\n".join(lines) + "\n"


def _build_report(pairs, labels, config, seed, warnings=()) -> EvaluationReport:
    """pairs: sequence of (true_label, predicted_label)."""
    labels = tuple(labels)
    index = {l: i for i, l in enumerate(labels)}
    conf = np.zeros((len(labels), len(labels)), dtype=int)
    for true, pred in pairs:
        conf[index[true], index[pred]] += 1
    total = int(conf.sum())
    accuracy = 100.0 * conf.trace() / total if total else 0.0
    per_class = {}
    for l in labels:
        row = conf[index[l]]
        row_total = int(row.sum())
        per_class[l] = 100.0 * row[index[l]] / row_total if row_total else 0.0
    return EvaluationReport(
        accuracy=float(accuracy),
        per_class_accuracy=per_class,
        labels=labels,
        confusion=tuple(tuple(int(c) for c in row) for row in conf),
        config=dict(config or {}),
        seed=seed,
        warnings=tuple(warnings),
    )


def stratified_kfold(data: Dataset, k: int, seed: int = 0) -> np.ndarray:
    """Fold index per instance; each class round-robins over folds after a
    seeded shuffle, so per-fold class counts differ by at most 1."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if k > data.n:
        raise ValueError(f"k={k} exceeds the {data.n} available instances")
    rng = np.random.default_rng(seed)
    y = np.asarray(list(data.y), dtype=object)
    folds = np.empty(data.n, dtype=int)
    for label in sorted(set(data.y)):
        idx = np.flatnonzero(y == label)
        rng.shuffle(idx)
        folds[idx] = np.arange(len(idx)) % k
    return folds


def cross_validate(kind: ClassifierKind, data: Dataset, k: int, seed: int = 0,
                   config: Optional[dict] = None) -> EvaluationReport:
    """Stratified k-fold CV aggregating one confusion matrix over folds."""
    folds = stratified_kfold(data, k, seed)
    labels = data.classes
    pairs = []
    warnings = []
    for f in range(k):
        test_mask = folds == f
        if not test_mask.any():
            continue
        train_mask = ~test_mask
        y_train = [data.y[i] for i in np.flatnonzero(train_mask)]
        missing = sorted(set(labels) - set(y_train))
        if missing:
            warnings.append(f"fold {f}: classes missing from training split: {missing}")
        model = train(
            kind,
            Dataset(data.X[train_mask], tuple(y_train), data.feature_names),
            seed,
        )
        preds = model.predict(data.X[test_mask])
        for i, pred in zip(np.flatnonzero(test_mask), preds):
            pairs.append((data.y[i], str(pred)))
    return _build_report(pairs, labels, config, seed, warnings)


def _ova_scores(kind: ClassifierKind, X_train, y_binary, X_test, seed: int) -> np.ndarray:
    """Positive-class confidence for each test row of one binary problem.

    ONE_NN uses the nearest-neighbor margin d_rest - d_pos on min-max
    normalized features; NB the log-posterior margin; MAJORITY the positive
    training fraction; RANDOM a seeded uniform draw.
    """
    pos = np.asarray(y_binary, dtype=bool)
    if kind is ClassifierKind.ONE_NN:
        model = OneNearestNeighbor().fit(X_train, ["p" if b else "r" for b in pos])
        d = model._distances(X_test)
        d_pos = d[:, pos].min(axis=1)
        d_rest = d[:, ~pos].min(axis=1)
        return d_rest - d_pos
    if kind is ClassifierKind.GAUSSIAN_NB:
        model = GaussianNaiveBayes().fit(X_train, ["p" if b else "r" for b in pos])
        lp = model._log_posteriors(X_test)
        i_pos = int(np.flatnonzero(model.classes_ == "p")[0])
        return lp[:, i_pos] - lp[:, 1 - i_pos]
    if kind is ClassifierKind.MAJORITY:
        return np.full(len(np.asarray(X_test)), pos.mean())
    rng = np.random.default_rng(seed)
    return rng.uniform(size=len(np.asarray(X_test)))


def one_vs_all(kind: ClassifierKind, data: Dataset, k: int, seed: int = 0,
               config: Optional[dict] = None) -> EvaluationReport:
    """One binary model per class under shared stratified folds; the
    prediction is the class with the highest positive score (ties ->
    lexicographic class order)."""
    folds = stratified_kfold(data, k, seed)
    labels = data.classes
    if len(labels) < 2:
        raise ValueError("one-vs-all requires at least 2 classes")
    pairs = []
    for f in range(k):
        test_mask = folds == f
        if not test_mask.any():
            continue
        train_mask = ~test_mask
        y_train = [data.y[i] for i in np.flatnonzero(train_mask)]
        degenerate = [
            c for c in labels
            if c not in y_train or all(t == c for t in y_train)
        ]
        if degenerate:
            raise ValueError(
                f"fold {f}: degenerate one-vs-all split for classes {degenerate}"
            )
        X_train = data.X[train_mask]
        X_test = data.X[test_mask]
        scores = np.column_stack([
            _ova_scores(
                kind, X_train, [t == c for t in y_train], X_test,
                seed=(seed * 1000003 + f * 1009 + ci),
            )
            for ci, c in enumerate(labels)
        ])
        best = scores.argmax(axis=1)  # first (lexicographically lowest) on ties
        for row, i in zip(best, np.flatnonzero(test_mask)):
            pairs.append((data.y[i], labels[int(row)]))
    return _build_report(pairs, labels, config, seed)


def _entropy(labels) -> float:
    counts = Counter(labels)
    n = sum(counts.values())
    return -sum((c / n) * math.log2(c / n) for c in counts.values() if c)


def _mdlp_cuts(values: np.ndarray, labels: list, cuts: list) -> None:
    """Fayyad-Irani recursive binary MDL splitting; appends accepted cuts."""
    n = len(labels)
    if n < 2:
        return
    order = np.argsort(values, kind="stable")
    v = values[order]
    lab = [labels[i] for i in order]
    h = _entropy(lab)
    best = None
    for i in range(1, n):
        if v[i] == v[i - 1]:
            continue
        left, right = lab[:i], lab[i:]
        cond = (i / n) * _entropy(left) + ((n - i) / n) * _entropy(right)
        gain = h - cond
        if best is None or gain > best[0]:
            best = (gain, (v[i - 1] + v[i]) / 2.0, i)
    if best is None:
        return
    gain, cut, i = best
    left, right = lab[:i], lab[i:]
    k = len(set(lab))
    k1, k2 = len(set(left)), len(set(right))
    delta = math.log2(3**k - 2) - (k * h - k1 * _entropy(left) - k2 * _entropy(right))
    if gain <= (math.log2(n - 1) + delta) / n:
        return
    cuts.append(cut)
    _mdlp_cuts(v[:i], left, cuts)
    _mdlp_cuts(v[i:], right, cuts)


def information_gain(data: Dataset) -> list[tuple[str, float]]:
    """Features ranked by information gain after MDL discretization.

    Gain is H(class) - H(class | binned feature), base 2. Features with no
    accepted split score 0. Constant class column -> error.
    """
    classes = set(data.y)
    if len(classes) < 2:
        raise ValueError("information gain needs at least 2 classes")
    labels = list(data.y)
    h_class = _entropy(labels)
    n = data.n
    results = []
    for j, name in enumerate(data.feature_names):
        col = data.X[:, j]
        cuts: list[float] = []
        _mdlp_cuts(col, labels, cuts)
        if not cuts:
            results.append((name, 0.0))
            continue
        bins = np.digitize(col, sorted(cuts))
        cond = 0.0
        for b in set(bins.tolist()):
            members = [labels[i] for i in np.flatnonzero(bins == b)]
            cond += (len(members) / n) * _entropy(members)
        results.append((name, h_class - cond))
    results.sort(key=lambda t: (-t[1], t[0]))
    return results


def evaluate_train_test(kind: ClassifierKind, train_data: Dataset,
                        test_X, test_ids: Sequence[str], truth: dict[str, str],
                        seed: int = 0, config: Optional[dict] = None) -> EvaluationReport:
    """Fit on the training set, predict each test row, score against truth."""
    model = train(kind, train_data, seed)
    preds = model.predict(np.asarray(test_X, dtype=float))
    labels = train_data.classes
    pairs = [(truth[doc_id], str(pred)) for doc_id, pred in zip(test_ids, preds)]
    return _build_report(pairs, labels, config, seed)
