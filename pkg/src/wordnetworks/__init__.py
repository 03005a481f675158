"""Word-network features for authorship attribution."""

from .estimators import LocalNetworkFeatures, SummaryNetworkFeatures
from .experiments import (ExperimentConfig, NetworkCache, PipelineError,
                          export_features, fixture_corpus_path, rank_features,
                          run_experiment)
from .features import (DistributionStats, N_SUMMARY_FEATURES,
                       SUMMARY_FEATURE_NAMES, concat_features,
                       distribution_stats, fit_power_law, local_features,
                       summary_features)
from .graphmetrics import DegreeMode
from .ingest import (AttributionProblem, Corpus, Document, load_corpus,
                     load_problem, tokenize)
from .learn import (ClassifierKind, Dataset, EvaluationReport, Prediction,
                    cross_validate, evaluate_train_test, information_gain,
                    one_vs_all, predict, stratified_kfold, train)
from .network import WordNetwork, build_word_network, term_frequency_vector
from .wordsets import WordSet, load_word_list, top_k_frequent

__version__ = "0.1.0"

__all__ = [
    "AttributionProblem",
    "ClassifierKind",
    "Corpus",
    "Dataset",
    "DegreeMode",
    "DistributionStats",
    "Document",
    "EvaluationReport",
    "ExperimentConfig",
    "LocalNetworkFeatures",
    "N_SUMMARY_FEATURES",
    "NetworkCache",
    "PipelineError",
    "Prediction",
    "SUMMARY_FEATURE_NAMES",
    "SummaryNetworkFeatures",
    "WordNetwork",
    "WordSet",
    "build_word_network",
    "concat_features",
    "cross_validate",
    "distribution_stats",
    "evaluate_train_test",
    "export_features",
    "fit_power_law",
    "fixture_corpus_path",
    "information_gain",
    "load_corpus",
    "load_problem",
    "load_word_list",
    "local_features",
    "one_vs_all",
    "predict",
    "rank_features",
    "run_experiment",
    "stratified_kfold",
    "summary_features",
    "term_frequency_vector",
    "tokenize",
    "top_k_frequent",
    "train",
]
