"""Independent brute-force reference implementations for the test suite.

These deliberately avoid the algorithms used by the package: distances
come from Floyd-Warshall instead of BFS, betweenness from explicit
shortest-path enumeration instead of accumulation, the eigenvector from
a dense numpy power method, and Spearman from scipy ranking.
"""

from __future__ import annotations

import itertools
from collections import deque

import numpy as np
from scipy import stats as scipy_stats

from skillnet.graph import BipartiteGraph, Side, UnipartiteGraph
from skillnet.lexicon import PatternKind


# ---------------------------------------------------------------- graphs


def random_unipartite(rng, max_nodes=30, p_low=0.1, p_high=0.5) -> UnipartiteGraph:
    n = rng.randint(2, max_nodes)
    p = rng.uniform(p_low, p_high)
    nodes = tuple(f"n{i:02d}" for i in range(n))
    edges = {
        (nodes[i], nodes[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    }
    return UnipartiteGraph(nodes=nodes, edges=frozenset(edges), side=Side.SKILLS)


def random_bipartite(rng, max_left=20, max_right=20, p_low=0.1, p_high=0.5) -> BipartiteGraph:
    nl = rng.randint(1, max_left)
    nr = rng.randint(1, max_right)
    p = rng.uniform(p_low, p_high)
    left = tuple(f"d{i:02d}" for i in range(nl))
    right = tuple(f"s{i:02d}" for i in range(nr))
    edges = {(d, s) for d in left for s in right if rng.random() < p}
    return BipartiteGraph(left_nodes=left, right_nodes=right, edges=frozenset(edges))


def brute_degree(g) -> dict[str, int]:
    adj = g.adjacency()
    counts = {v: 0 for v in adj}
    seen = set()
    for v, nbrs in adj.items():
        for w in nbrs:
            pair = tuple(sorted((v, w)))
            if pair in seen:
                continue
            seen.add(pair)
            counts[v] += 1
            counts[w] += 1
    return counts


def _distance_matrix(adj):
    nodes = sorted(adj)
    index = {v: i for i, v in enumerate(nodes)}
    n = len(nodes)
    dist = np.full((n, n), np.inf)
    np.fill_diagonal(dist, 0.0)
    for v, nbrs in adj.items():
        for w in nbrs:
            dist[index[v], index[w]] = 1.0
    for k in range(n):
        dist = np.minimum(dist, dist[:, k, None] + dist[None, k, :])
    return nodes, dist


def brute_closeness(g) -> dict[str, float]:
    nodes, dist = _distance_matrix(g.adjacency())
    result = {}
    for i, v in enumerate(nodes):
        finite = dist[i][np.isfinite(dist[i])]
        total = float(finite.sum())
        result[v] = 1.0 / total if total > 0 else 0.0
    return result


def _enumerate_shortest_paths(adj, s, t):
    dist = {s: 0}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    if t not in dist:
        return []
    paths = []

    def walk(path):
        v = path[-1]
        if v == t:
            paths.append(list(path))
            return
        for w in adj[v]:
            if dist.get(w) == dist[v] + 1 and dist[w] <= dist[t]:
                path.append(w)
                walk(path)
                path.pop()

    walk([s])
    return paths


def brute_betweenness(g) -> dict[str, float]:
    adj = g.adjacency()
    nodes = sorted(adj)
    bc = {v: 0.0 for v in nodes}
    for s, t in itertools.combinations(nodes, 2):
        paths = _enumerate_shortest_paths(adj, s, t)
        if not paths:
            continue
        weight = 1.0 / len(paths)
        for path in paths:
            for v in path[1:-1]:
                bc[v] += weight
    return bc


def dense_power_eigenvector(g, tol=1e-11, max_iters=200_000) -> dict[str, float]:
    """Dense (I + A) power method, max-normalized, all-ones start."""
    adj = g.adjacency()
    nodes = sorted(adj)
    index = {v: i for i, v in enumerate(nodes)}
    n = len(nodes)
    a = np.zeros((n, n))
    for v, nbrs in adj.items():
        for w in nbrs:
            a[index[v], index[w]] = 1.0
    x = np.ones(n)
    for _ in range(max_iters):
        nxt = x + a @ x
        nxt = nxt / nxt.max()
        if np.max(np.abs(nxt - x)) < tol:
            x = nxt
            break
        x = nxt
    return {v: float(x[index[v]]) for v in nodes}


def dense_eigh_eigenvector(g) -> dict[str, float]:
    """numpy symmetric eigendecomposition, max-normalized; connected graphs."""
    adj = g.adjacency()
    nodes = sorted(adj)
    index = {v: i for i, v in enumerate(nodes)}
    n = len(nodes)
    a = np.zeros((n, n))
    for v, nbrs in adj.items():
        for w in nbrs:
            a[index[v], index[w]] = 1.0
    w, vecs = np.linalg.eigh(a)
    vec = vecs[:, int(np.argmax(w))]
    vec = vec / vec[int(np.argmax(np.abs(vec)))]
    return {v: float(vec[index[v]]) for v in nodes}


def brute_projection(g: BipartiteGraph, side: Side) -> set[tuple[str, str]]:
    """Pairwise shared-neighbor check."""
    if side is Side.DOCUMENTS:
        nodes = g.left_nodes
        nbrs = {d: g.neighbors_of_left(d) for d in nodes}
    else:
        nodes = g.right_nodes
        nbrs = {s: g.neighbors_of_right(s) for s in nodes}
    edges = set()
    for u, v in itertools.combinations(sorted(nodes), 2):
        if nbrs[u] & nbrs[v]:
            edges.add((u, v))
    return edges


# ------------------------------------------------------------------ kwic


def brute_kwic_pairs(corpus, lexicon):
    """Every (doc_id, pattern_id, position) by direct slice comparison."""
    found = []
    for doc in corpus.documents:
        tokens = list(doc.tokens)
        for pattern in lexicon.patterns:
            for pos in range(len(tokens)):
                if pattern.kind is PatternKind.UNIGRAM:
                    hit = tokens[pos] == pattern.terms[0]
                elif pattern.kind is PatternKind.PREFIX_WILDCARD:
                    prefix = pattern.terms[0]
                    hit = tokens[pos][: len(prefix)] == prefix
                else:
                    size = len(pattern.terms)
                    hit = tokens[pos : pos + size] == list(pattern.terms) and (
                        pos + size <= len(tokens)
                    )
                if hit:
                    found.append((doc.doc_id, pos, pattern.pattern_id))
    return sorted(found)


# ------------------------------------------------------------------ stats


def reference_f_sf(f, df1, df2) -> float:
    return float(scipy_stats.f.sf(f, df1, df2))


def reference_t_two_sided(t, df) -> float:
    return float(2.0 * scipy_stats.t.sf(abs(t), df))


def rank_then_pearson(x, y) -> float:
    rx = scipy_stats.rankdata(x, method="average")
    ry = scipy_stats.rankdata(y, method="average")
    return float(np.corrcoef(rx, ry)[0, 1])
