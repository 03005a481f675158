"""Brute-force reference implementations used to check graph metrics.

Everything here works from first principles (reachability closures,
subset enumeration, definition-level counting) and deliberately shares no
code with the library's algorithms.
"""

from __future__ import annotations

import itertools
import math
from collections import deque

import numpy as np


def reachability(n, edges):
    """Boolean closure matrix via Floyd-Warshall; reach[u][u] is True."""
    reach = [[u == v for v in range(n)] for u in range(n)]
    for u, v in edges:
        reach[u][v] = True
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                row_i, row_k = reach[i], reach[k]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return reach


def scc_count(n, edges):
    reach = reachability(n, edges)
    seen = set()
    count = 0
    for v in range(n):
        if v in seen:
            continue
        comp = {u for u in range(n) if reach[v][u] and reach[u][v]}
        seen |= comp
        count += 1
    return count


def is_strongly_connected(n, edges):
    return n >= 1 and scc_count(n, edges) == 1


def undirected_adj(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    return adj


def undirected_components(n, adj, removed=frozenset()):
    seen = set(removed)
    count = 0
    for v in range(n):
        if v in seen:
            continue
        count += 1
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def articulation_count(n, edges):
    adj = undirected_adj(n, edges)
    base = undirected_components(n, adj)
    count = 0
    for v in range(n):
        if undirected_components(n, adj, removed=frozenset([v])) > base:
            count += 1
    return count


def mode_degree(n, edges, mode, vertices=None):
    """Degree under mode within an induced vertex subset; loop conventions:
    +1 in, +1 out, +2 all."""
    if vertices is None:
        vertices = set(range(n))
    deg = {v: 0 for v in vertices}
    for u, v in edges:
        if u in vertices and v in vertices:
            if mode in ("out", "all"):
                deg[u] += 1
            if mode in ("in", "all"):
                deg[v] += 1
    return deg


def coreness(n, edges, mode):
    """Definition-level: coreness(v) = max k with v inside the k-core."""
    core = [0] * n
    k = 0
    while True:
        k += 1
        vertices = set(range(n))
        while True:
            deg = mode_degree(n, edges, mode, vertices)
            drop = {v for v in vertices if deg[v] < k}
            if not drop:
                break
            vertices -= drop
        if not vertices:
            return core
        for v in vertices:
            core[v] = k


def girth(n, edges):
    """Min over undirected simple edges of (shortest alternate path + 1)."""
    adj = undirected_adj(n, edges)
    pairs = {(min(u, v), max(u, v)) for u, v in edges if u != v}
    best = math.inf
    for u, v in pairs:
        # shortest u..v path avoiding the direct edge
        dist = {u: 0}
        q = deque([u])
        while q:
            x = q.popleft()
            for w in adj[x]:
                if (min(x, w), max(x, w)) == (min(u, v), max(u, v)):
                    continue
                if w not in dist:
                    dist[w] = dist[x] + 1
                    q.append(w)
        if v in dist:
            best = min(best, dist[v] + 1)
    return best


def reciprocity(n, edges, ratio_mode, ignore_loops):
    edges = set(edges)
    if ignore_loops:
        edges = {(u, v) for u, v in edges if u != v}
    if not ratio_mode:
        if not edges:
            return 0.0
        return sum((v, u) in edges for u, v in edges) / len(edges)
    dyads = {(min(u, v), max(u, v)) for u, v in edges}
    if not dyads:
        return 0.0
    mutual = sum(
        1 for a, b in dyads
        if (a == b) or ((a, b) in edges and (b, a) in edges)
    )
    return mutual / len(dyads)


def adhesion_by_subsets(n, edges):
    """Min number of (non-loop) edge deletions destroying strong connectivity."""
    if n < 2 or not is_strongly_connected(n, edges):
        return 0
    simple = [(u, v) for u, v in edges if u != v]
    for size in range(0, len(simple) + 1):
        for subset in itertools.combinations(simple, size):
            remaining = [e for e in edges if e not in set(subset)]
            if not is_strongly_connected(n, remaining):
                return size
    return len(simple)


def _ek_max_flow(n, arcs, s, t):
    """Edmonds-Karp on a dict (u, v) -> capacity."""
    residual = {}
    for (u, v), c in arcs.items():
        residual[(u, v)] = residual.get((u, v), 0) + c
        residual.setdefault((v, u), 0)
    out = {}
    for (u, v) in residual:
        out.setdefault(u, []).append(v)
    flow = 0
    while True:
        prev = {s: s}
        q = deque([s])
        while q and t not in prev:
            u = q.popleft()
            for v in out.get(u, []):
                if residual[(u, v)] > 0 and v not in prev:
                    prev[v] = u
                    q.append(v)
        if t not in prev:
            return flow
        path = []
        v = t
        while v != s:
            path.append((prev[v], v))
            v = prev[v]
        aug = min(residual[e] for e in path)
        for u, v in path:
            residual[(u, v)] -= aug
            residual[(v, u)] += aug
        flow += aug


def adhesion_by_flow(n, edges):
    """All-ordered-pairs min max-flow with unit edge capacities."""
    if n < 2 or not is_strongly_connected(n, edges):
        return 0
    arcs = {(u, v): 1 for u, v in edges if u != v}
    return min(
        _ek_max_flow(n, arcs, s, t)
        for s in range(n) for t in range(n) if s != t
    )


def cohesion_by_subsets(n, edges):
    """Min vertex deletions destroying strong connectivity; complete -> n-1."""
    if n < 2 or not is_strongly_connected(n, edges):
        return 0
    vertices = list(range(n))
    for size in range(0, n - 1):
        for subset in itertools.combinations(vertices, size):
            removed = set(subset)
            keep = [v for v in vertices if v not in removed]
            relabel = {v: i for i, v in enumerate(keep)}
            sub_edges = [
                (relabel[u], relabel[v]) for u, v in edges
                if u not in removed and v not in removed
            ]
            if len(keep) >= 2 and not is_strongly_connected(len(keep), sub_edges):
                return size
    return n - 1


def pearson(xs, ys):
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if xs.std() == 0 or ys.std() == 0:
        return None
    return float(np.corrcoef(xs, ys)[0, 1])


def triangle_count_through(n, edges, v):
    adj = undirected_adj(n, edges)
    return sum(
        1 for a, b in itertools.combinations(sorted(adj[v]), 2) if b in adj[a]
    )


def local_clustering(n, edges, v):
    adj = undirected_adj(n, edges)
    d = len(adj[v])
    if d < 2:
        return 0.0
    return 2.0 * triangle_count_through(n, edges, v) / (d * (d - 1))


def random_digraph(seed, max_n=8, allow_loops=True):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, max_n + 1))
    p = float(rng.uniform(0.05, 0.6))
    edges = [
        (u, v) for u in range(n) for v in range(n)
        if (allow_loops or u != v) and rng.random() < p
    ]
    return n, edges


def all_digraphs(n, allow_loops=False):
    """Every labeled digraph on exactly n vertices."""
    slots = [(u, v) for u in range(n) for v in range(n) if allow_loops or u != v]
    for mask in range(2 ** len(slots)):
        yield n, [e for i, e in enumerate(slots) if mask >> i & 1]
