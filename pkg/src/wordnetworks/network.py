"""Directed word networks built from token sequences.

Vertices are a document's unique words (in order of first occurrence);
there is an edge A->B whenever A immediately precedes B at least once.
Edges are unweighted and deduplicated; self-loops (consecutive duplicate
tokens) are kept.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence


class DirectedGraph:
    """Immutable directed simple graph; self-loops allowed."""

    __slots__ = ("n", "edges", "successors", "predecessors")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        self.n = n
        edge_set = set(edges)
        for u, v in edge_set:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
        self.edges = tuple(sorted(edge_set))
        succ = [[] for _ in range(n)]
        pred = [[] for _ in range(n)]
        for u, v in self.edges:
            succ[u].append(v)
            pred[v].append(u)
        self.successors = tuple(tuple(s) for s in succ)
        self.predecessors = tuple(tuple(p) for p in pred)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.successors[u]

    def undirected_neighbors(self) -> tuple[frozenset[int], ...]:
        """Neighbor sets of the underlying undirected simple graph (loops dropped)."""
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if u != v:
                nbrs[u].add(v)
                nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)


class WordNetwork:
    """Word network of one document: graph + vocabulary + term frequencies."""

    __slots__ = ("words", "word_index", "term_frequency", "graph")

    def __init__(self, words: Sequence[str], edges: Iterable[tuple[int, int]],
                 term_frequency: dict[str, int]):
        self.words = tuple(words)
        self.word_index = {w: i for i, w in enumerate(self.words)}
        if len(self.word_index) != len(self.words):
            raise ValueError("duplicate words in vertex list")
        self.term_frequency = dict(term_frequency)
        for w in self.words:
            if self.term_frequency.get(w, 0) < 1:
                raise ValueError(f"vertex {w!r} has term frequency < 1")
        self.graph = DirectedGraph(len(self.words), edges)

    @property
    def n_vertices(self) -> int:
        return len(self.words)

    @property
    def n_edges(self) -> int:
        return self.graph.n_edges

    def word_edges(self) -> tuple[tuple[str, str], ...]:
        return tuple((self.words[u], self.words[v]) for u, v in self.graph.edges)


def build_word_network(tokens: Sequence[str]) -> WordNetwork:
    """Build the directed, unweighted word network of a token sequence."""
    words: list[str] = []
    index: dict[str, int] = {}
    tf: dict[str, int] = {}
    for t in tokens:
        if t not in index:
            index[t] = len(words)
            words.append(t)
            tf[t] = 0
        tf[t] += 1
    edges = {(index[a], index[b]) for a, b in zip(tokens, tokens[1:])}
    return WordNetwork(words, edges, tf)


def term_frequency_vector(network: WordNetwork, words: Sequence[str]) -> list[int]:
    """Raw occurrence counts aligned with ``words``; absent words map to 0."""
    if not words:
        raise ValueError("word list must be non-empty")
    return [network.term_frequency.get(w, 0) for w in words]


def export_edge_list(network: WordNetwork, edges_path, vertices_path) -> None:
    """Write edges as source<TAB>target lines and a word<TAB>term_frequency file."""
    lines = [f"{a}\t{b}" for a, b in network.word_edges()]
    Path(edges_path).write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")
    vlines = [f"{w}\t{network.term_frequency[w]}" for w in network.words]
    Path(vertices_path).write_text("\n".join(vlines) + ("\n" if vlines else ""), encoding="utf-8")
