"""Graph-theoretic quantities of directed word networks.

All functions accept either a DirectedGraph or a WordNetwork (its
``graph`` attribute is used). Clustering, girth, and articulation points
are defined on the underlying undirected simple graph; everything else
respects edge directions. Self-loop conventions: a loop contributes 1 to
in-degree, 1 to out-degree, 2 to total degree.
"""

from __future__ import annotations

import heapq
import math
from enum import Enum

import numpy as np

from .network import DirectedGraph


class DegreeMode(Enum):
    IN = "in"
    OUT = "out"
    ALL = "all"


def _as_graph(network) -> DirectedGraph:
    return getattr(network, "graph", network)


def _mode(mode) -> DegreeMode:
    return mode if isinstance(mode, DegreeMode) else DegreeMode(str(mode).lower())


def degree(network, mode=DegreeMode.ALL) -> np.ndarray:
    g = _as_graph(network)
    mode = _mode(mode)
    indeg = np.array([len(p) for p in g.predecessors], dtype=float)
    outdeg = np.array([len(s) for s in g.successors], dtype=float)
    if mode is DegreeMode.IN:
        return indeg
    if mode is DegreeMode.OUT:
        return outdeg
    return indeg + outdeg


def strongly_connected(network) -> tuple[bool, int]:
    """(is_strongly_connected, number of SCCs), via iterative Tarjan."""
    g = _as_graph(network)
    n = g.n
    if n == 0:
        return (False, 0)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    n_components = 0
    for root in range(n):
        if index[root] != -1:
            continue
        # explicit DFS stack: (vertex, iterator position)
        work = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            succ = g.successors[v]
            while pi < len(succ):
                w = succ[pi]
                pi += 1
                if index[w] == -1:
                    work.append((v, pi))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                n_components += 1
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    if w == v:
                        break
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return (n_components == 1, n_components)


def articulation_points(network) -> int:
    """Number of cut vertices of the underlying undirected simple graph."""
    g = _as_graph(network)
    n = g.n
    nbrs = g.undirected_neighbors()
    disc = [-1] * n
    low = [0] * n
    is_cut = [False] * n
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        root_children = 0
        # stack entries: (vertex, parent, neighbor iterator index)
        nbr_lists = {root: sorted(nbrs[root])}
        work = [(root, -1, 0)]
        while work:
            v, parent, pi = work.pop()
            if pi == 0:
                disc[v] = low[v] = timer
                timer += 1
                nbr_lists[v] = sorted(nbrs[v])
            lst = nbr_lists[v]
            advanced = False
            while pi < len(lst):
                w = lst[pi]
                pi += 1
                if w == parent:
                    continue
                if disc[w] == -1:
                    if v == root:
                        root_children += 1
                    work.append((v, parent, pi))
                    work.append((w, v, 0))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if parent != root and low[v] >= disc[parent]:
                    is_cut[parent] = True
        if root_children >= 2:
            is_cut[root] = True
    return sum(is_cut)


def _triangles_per_vertex(nbrs) -> list[int]:
    tri = [0] * len(nbrs)
    for v, nv in enumerate(nbrs):
        count = 0
        for u in nv:
            count += len(nv & nbrs[u])
        tri[v] = count // 2
    return tri


def clustering_local(network) -> np.ndarray:
    """Local clustering coefficients on the undirected simple view; deg<2 -> 0."""
    g = _as_graph(network)
    nbrs = g.undirected_neighbors()
    tri = _triangles_per_vertex(nbrs)
    out = np.zeros(g.n, dtype=float)
    for v in range(g.n):
        d = len(nbrs[v])
        if d >= 2:
            out[v] = 2.0 * tri[v] / (d * (d - 1))
    return out


def clustering_global(network) -> float:
    """Transitivity: 3 * triangles / connected triples; 0 when no triples."""
    g = _as_graph(network)
    nbrs = g.undirected_neighbors()
    tri3 = sum(_triangles_per_vertex(nbrs))  # each triangle counted at 3 vertices
    triples = sum(len(nv) * (len(nv) - 1) // 2 for nv in nbrs)
    if triples == 0:
        return 0.0
    return tri3 / triples


def coreness(network, mode=DegreeMode.ALL) -> np.ndarray:
    """k-core numbers under the chosen degree mode (iterative peeling)."""
    g = _as_graph(network)
    mode = _mode(mode)
    n = g.n
    if n == 0:
        return np.zeros(0, dtype=float)
    deg = degree(g, mode).astype(int).tolist()
    core = [0] * n
    alive = [True] * n
    # always peel a vertex of minimum current degree (lazy heap)
    k = 0
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    while heap:
        d, v = heapq.heappop(heap)
        if not alive[v] or d != deg[v]:
            continue
        k = max(k, d)
        core[v] = k
        alive[v] = False
        # decrement neighbors per mode; each incident edge counts once
        if mode in (DegreeMode.OUT, DegreeMode.ALL):
            for u in g.predecessors[v]:  # edge u->v contributes to u's out-degree
                if alive[u] and u != v:
                    deg[u] -= 1
                    heapq.heappush(heap, (deg[u], u))
        if mode in (DegreeMode.IN, DegreeMode.ALL):
            for u in g.successors[v]:  # edge v->u contributes to u's in-degree
                if alive[u] and u != v:
                    deg[u] -= 1
                    heapq.heappush(heap, (deg[u], u))
    return np.array(core, dtype=float)


def neighborhood_size(network, mode=DegreeMode.ALL, order: int = 1) -> np.ndarray:
    """Distinct vertices within 1 step under the mode, the vertex itself included."""
    if order != 1:
        raise ValueError("only order-1 neighborhoods are supported")
    g = _as_graph(network)
    mode = _mode(mode)
    out = np.zeros(g.n, dtype=float)
    for v in range(g.n):
        nb = {v}
        if mode in (DegreeMode.IN, DegreeMode.ALL):
            nb.update(g.predecessors[v])
        if mode in (DegreeMode.OUT, DegreeMode.ALL):
            nb.update(g.successors[v])
        out[v] = len(nb)
    return out


def reciprocity(network, ratio_mode: bool = False, ignore_loops: bool = False) -> float:
    """Edge reciprocity; 4 variants = {default, ratio} x {loops kept, dropped}.

    Default: fraction of edges whose reverse also exists (a self-loop is its
    own reverse). Ratio: mutual dyads / connected dyads, where a kept
    self-loop counts as one mutual dyad. Degenerate inputs -> 0.
    """
    g = _as_graph(network)
    edges = set(g.edges)
    if ignore_loops:
        edges = {(u, v) for u, v in edges if u != v}
    if not ratio_mode:
        if not edges:
            return 0.0
        mutual = sum(1 for u, v in edges if (v, u) in edges)
        return mutual / len(edges)
    connected: set[tuple[int, int]] = set()
    mutual_dyads = 0
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key in connected:
            continue
        connected.add(key)
        if u == v or (v, u) in edges:
            mutual_dyads += 1
    if not connected:
        return 0.0
    return mutual_dyads / len(connected)


def girth(network) -> float:
    """Shortest cycle length of the undirected simple view, loops ignored.

    Acyclic graphs return math.inf.
    """
    g = _as_graph(network)
    nbrs = g.undirected_neighbors()
    n = g.n
    best = math.inf
    for root in range(n):
        if best == 3:  # loops ignored and graph simple, so 3 is minimal
            break
        dist = {root: 0}
        parent = {root: -1}
        frontier = [root]
        while frontier and 2 * dist[frontier[0]] < best:
            nxt = []
            for u in frontier:
                for w in nbrs[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif parent[u] != w:
                        best = min(best, dist[u] + dist[w] + 1)
            frontier = nxt
    return best


def assortativity_degree(network, with_flag: bool = False):
    """Pearson correlation over edges of (source out-degree, target in-degree).

    Zero variance on either side is undefined and encoded as 0 (flag False
    when ``with_flag``).
    """
    g = _as_graph(network)
    if g.n_edges < 2:
        return (0.0, False) if with_flag else 0.0
    indeg = degree(g, DegreeMode.IN)
    outdeg = degree(g, DegreeMode.OUT)
    xs = np.array([outdeg[u] for u, _ in g.edges])
    ys = np.array([indeg[v] for _, v in g.edges])
    sx = xs.std()
    sy = ys.std()
    if sx == 0.0 or sy == 0.0:
        return (0.0, False) if with_flag else 0.0
    r = float(np.mean((xs - xs.mean()) * (ys - ys.mean())) / (sx * sy))
    return (r, True) if with_flag else r


class _Dinic:
    """Dinic max flow on a fixed arc structure; capacities reset per query."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.base_cap: list[int] = []

    def add_arc(self, u: int, v: int, cap: int) -> int:
        idx = len(self.to)
        self.to.append(v)
        self.base_cap.append(cap)
        self.head[u].append(idx)
        self.to.append(u)
        self.base_cap.append(0)
        self.head[v].append(idx + 1)
        return idx

    def max_flow(self, s: int, t: int, limit: float = math.inf,
                 overrides: tuple[tuple[int, int], ...] = ()) -> int:
        cap = self.base_cap.copy()
        for idx, c in overrides:
            cap[idx] = c
        to, head = self.to, self.head
        flow = 0
        while flow < limit:
            level = [-1] * self.n
            level[s] = 0
            frontier = [s]
            while frontier and level[t] == -1:
                nxt = []
                for u in frontier:
                    for idx in head[u]:
                        v = to[idx]
                        if cap[idx] > 0 and level[v] == -1:
                            level[v] = level[u] + 1
                            nxt.append(v)
                frontier = nxt
            if level[t] == -1:
                return flow
            it = [0] * self.n
            # blocking flow via iterative DFS
            while flow < limit:
                path = []
                u = s
                while u != t:
                    advanced = False
                    while it[u] < len(head[u]):
                        idx = head[u][it[u]]
                        v = to[idx]
                        if cap[idx] > 0 and level[v] == level[u] + 1:
                            path.append(idx)
                            u = v
                            advanced = True
                            break
                        it[u] += 1
                    if not advanced:
                        if not path:
                            u = None
                            break
                        level[u] = -1  # dead end
                        u = to[path[-1] ^ 1]
                        path.pop()
                        it[u] += 1
                if u is None:
                    break
                aug = min(cap[idx] for idx in path)
                for idx in path:
                    cap[idx] -= aug
                    cap[idx ^ 1] += aug
                flow += aug
        return flow


def connectivity(network) -> tuple[int, int]:
    """(adhesion, cohesion) = edge and vertex connectivity of the digraph.

    Both 0 when the graph is not strongly connected or has < 2 vertices.
    Complete digraphs have cohesion |V| - 1.
    """
    g = _as_graph(network)
    n = g.n
    strong, _ = strongly_connected(g)
    if not strong or n < 2:
        return (0, 0)
    simple_edges = [(u, v) for u, v in g.edges if u != v]
    out_deg = [0] * n
    in_deg = [0] * n
    for u, v in simple_edges:
        out_deg[u] += 1
        in_deg[v] += 1

    dinic = _Dinic(n)
    for u, v in simple_edges:
        dinic.add_arc(u, v, 1)
    adhesion = min(min(out_deg), min(in_deg))
    for i in range(1, n):
        adhesion = min(adhesion, dinic.max_flow(0, i, limit=adhesion))
        adhesion = min(adhesion, dinic.max_flow(i, 0, limit=adhesion))

    # vertex connectivity via splitting: v_in = v, v_out = v + n
    inf_cap = n + 1
    split = _Dinic(2 * n)
    internal = [split.add_arc(v, v + n, 1) for v in range(n)]
    for u, v in simple_edges:
        split.add_arc(u + n, v, inf_cap)
    edge_set = set(simple_edges)
    cohesion = min(n - 1, min(out_deg), min(in_deg))
    # a min cut has cohesion vertices, so among the first cohesion + 1
    # candidates at least one lies outside it (Even-style reduction)
    i = 0
    while i < n and i <= cohesion:
        u = i
        lift_u = (internal[u], inf_cap)
        for v in range(n):
            if v == u:
                continue
            lift_v = (internal[v], inf_cap)
            if (u, v) not in edge_set:
                cohesion = min(cohesion, split.max_flow(
                    u + n, v, limit=cohesion, overrides=(lift_u, lift_v)))
            if (v, u) not in edge_set:
                cohesion = min(cohesion, split.max_flow(
                    v + n, u, limit=cohesion, overrides=(lift_u, lift_v)))
        i += 1
    return (adhesion, cohesion)


def density(network, with_loops: bool = False) -> float:
    g = _as_graph(network)
    n = g.n
    if n == 0:
        return 0.0
    if with_loops:
        return g.n_edges / (n * n)
    if n < 2:
        return 0.0
    m = sum(1 for u, v in g.edges if u != v)
    return m / (n * (n - 1))
