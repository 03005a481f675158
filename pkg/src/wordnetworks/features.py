"""Feature assembly: the 127-entry summary vector and per-word local features.

The summary vector is 13 scalars + 4 reciprocity variants + 11 statistics
for each of 10 per-vertex distributions (13 + 4 + 110 = 127). Entry order
is frozen in SUMMARY_FEATURE_NAMES so exports stay stable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from typing import Sequence

import numpy as np

from . import graphmetrics as gm
from .graphmetrics import DegreeMode
from .network import WordNetwork

STAT_NAMES = (
    "min", "max", "mean", "median", "p25", "p75",
    "variance", "std_dev", "skewness", "kurtosis", "alpha",
)

SCALAR_NAMES = (
    "num_vertices",
    "num_edges",
    "is_strongly_connected",
    "num_strongly_connected_components",
    "num_articulation_points",
    "global_clustering",
    "adhesion",
    "cohesion",
    "assortativity",
    "density_with_loops",
    "density_without_loops",
    "shrinking_exponent",
    "girth",
)

RECIPROCITY_NAMES = (
    "reciprocity_default_with_loops",
    "reciprocity_default_without_loops",
    "reciprocity_ratio_with_loops",
    "reciprocity_ratio_without_loops",
)

DISTRIBUTION_NAMES = (
    "in_degree",
    "out_degree",
    "degree",
    "local_clustering",
    "in_coreness",
    "out_coreness",
    "coreness",
    "in_neighborhood_size",
    "out_neighborhood_size",
    "neighborhood_size",
)

SUMMARY_FEATURE_NAMES: tuple[str, ...] = (
    SCALAR_NAMES
    + RECIPROCITY_NAMES
    + tuple(f"{d}_{s}" for d in DISTRIBUTION_NAMES for s in STAT_NAMES)
)

N_SUMMARY_FEATURES = len(SUMMARY_FEATURE_NAMES)  # 127

LOCAL_FAMILIES = (
    "term_frequency",
    "clustering_coefficient",
    "degree",
    "coreness",
    "neighborhood_size",
)


@dataclass(frozen=True)
class DistributionStats:
    min: float
    max: float
    mean: float
    median: float
    p25: float
    p75: float
    variance: float
    std_dev: float
    skewness: float
    kurtosis: float
    alpha: float

    def as_tuple(self) -> tuple[float, ...]:
        return tuple(getattr(self, f.name) for f in fields(self))


def fit_power_law(values) -> float:
    """Discrete power-law MLE with x_min = 1 (continuous approximation).

    alpha = 1 + n / sum(ln(x / 0.5)) over values >= 1; fewer than 2 usable
    values -> 0 sentinel.
    """
    usable = [float(x) for x in values if x >= 1.0]
    if len(usable) < 2:
        return 0.0
    return 1.0 + len(usable) / sum(math.log(x / 0.5) for x in usable)


def distribution_stats(values) -> DistributionStats:
    """Summary statistics of a numeric sequence.

    Sample variance (n-1), population-moment skewness g1 and excess
    kurtosis g2, quantiles by linear interpolation. Empty input -> all
    zeros; singleton -> variance/std/skewness/kurtosis 0.
    """
    # sort so results are bitwise identical under permutation of the input
    arr = np.sort(np.asarray(list(values), dtype=float))
    n = arr.size
    if n == 0:
        return DistributionStats(*([0.0] * 11))
    mean = float(arr.mean())
    p25, median, p75 = (float(q) for q in np.percentile(arr, [25, 50, 75]))
    if n > 1:
        variance = float(arr.var(ddof=1))
    else:
        variance = 0.0
    std_dev = math.sqrt(variance)
    centered = arr - mean
    m2 = float(np.mean(centered**2))
    if m2 > 0.0:
        skewness = float(np.mean(centered**3)) / m2**1.5
        kurtosis = float(np.mean(centered**4)) / m2**2 - 3.0
    else:
        skewness = 0.0
        kurtosis = 0.0
    return DistributionStats(
        min=float(arr.min()),
        max=float(arr.max()),
        mean=mean,
        median=median,
        p25=p25,
        p75=p75,
        variance=variance,
        std_dev=std_dev,
        skewness=skewness,
        kurtosis=kurtosis,
        alpha=fit_power_law(arr),
    )


def _distributions(network) -> dict[str, np.ndarray]:
    return {
        "in_degree": gm.degree(network, DegreeMode.IN),
        "out_degree": gm.degree(network, DegreeMode.OUT),
        "degree": gm.degree(network, DegreeMode.ALL),
        "local_clustering": gm.clustering_local(network),
        "in_coreness": gm.coreness(network, DegreeMode.IN),
        "out_coreness": gm.coreness(network, DegreeMode.OUT),
        "coreness": gm.coreness(network, DegreeMode.ALL),
        "in_neighborhood_size": gm.neighborhood_size(network, DegreeMode.IN),
        "out_neighborhood_size": gm.neighborhood_size(network, DegreeMode.OUT),
        "neighborhood_size": gm.neighborhood_size(network, DegreeMode.ALL),
    }


def summary_features(network: WordNetwork) -> np.ndarray:
    """The 127-entry summary feature vector, all entries finite.

    Sentinels: girth 0 when acyclic, assortativity 0 when undefined,
    shrinking exponent 0 when |V| <= 1 or |E| = 0, alpha 0 when the fit is
    degenerate.
    """
    g = getattr(network, "graph", network)
    n, m = g.n, g.n_edges
    strong, n_scc = gm.strongly_connected(g)
    adhesion, cohesion = gm.connectivity(g)
    if n > 1 and m > 0:
        shrink = math.log(m) / math.log(n)
    else:
        shrink = 0.0
    girth_val = gm.girth(g)
    scalars = [
        float(n),
        float(m),
        1.0 if strong else 0.0,
        float(n_scc),
        float(gm.articulation_points(g)),
        gm.clustering_global(g),
        float(adhesion),
        float(cohesion),
        gm.assortativity_degree(g),
        gm.density(g, with_loops=True),
        gm.density(g, with_loops=False),
        shrink,
        0.0 if math.isinf(girth_val) else float(girth_val),
    ]
    recips = [
        gm.reciprocity(g, ratio_mode=False, ignore_loops=False),
        gm.reciprocity(g, ratio_mode=False, ignore_loops=True),
        gm.reciprocity(g, ratio_mode=True, ignore_loops=False),
        gm.reciprocity(g, ratio_mode=True, ignore_loops=True),
    ]
    dists = _distributions(g)
    stats: list[float] = []
    for name in DISTRIBUTION_NAMES:
        stats.extend(distribution_stats(dists[name]).as_tuple())
    vec = np.array(scalars + recips + stats, dtype=float)
    assert vec.shape == (N_SUMMARY_FEATURES,)
    return vec


def parse_family(spec: str) -> tuple[str, DegreeMode]:
    """Parse 'family' or 'family:mode' (mode in {in, out, all})."""
    name, _, mode = spec.partition(":")
    name = name.strip().lower()
    if name not in LOCAL_FAMILIES:
        raise ValueError(f"unknown local feature family {name!r}; choose from {LOCAL_FAMILIES}")
    return name, DegreeMode(mode.strip().lower()) if mode else DegreeMode.ALL


def local_features(network: WordNetwork, words: Sequence[str], family: str,
                   mode: DegreeMode | str = DegreeMode.ALL) -> np.ndarray:
    """Per-word feature values aligned with ``words``; absent words -> 0."""
    if not words:
        raise ValueError("word list must be non-empty")
    if family not in LOCAL_FAMILIES:
        raise ValueError(f"unknown local feature family {family!r}; choose from {LOCAL_FAMILIES}")
    if family == "term_frequency":
        per_vertex = np.array(
            [network.term_frequency[w] for w in network.words], dtype=float
        )
    elif family == "clustering_coefficient":
        per_vertex = gm.clustering_local(network)
    elif family == "degree":
        per_vertex = gm.degree(network, mode)
    elif family == "coreness":
        per_vertex = gm.coreness(network, mode)
    else:  # neighborhood_size
        per_vertex = gm.neighborhood_size(network, mode)
    out = np.zeros(len(words), dtype=float)
    for i, w in enumerate(words):
        j = network.word_index.get(w)
        if j is not None:
            out[i] = per_vertex[j]
    return out


def concat_features(vectors: Sequence[np.ndarray]) -> np.ndarray:
    """Join feature vectors in order (the 'mixture' representation)."""
    if not vectors:
        return np.zeros(0, dtype=float)
    return np.concatenate([np.asarray(v, dtype=float).ravel() for v in vectors])
