"""The four node-centrality measures and the zero-preserving rescale.

All measures run on the symmetric adjacency mapping exposed by both
graph types, so bipartite graphs and projections are scored by the same
code. Conventions are pinned here once:

* closeness: inverse summed BFS distance within the node's connected
  component; singleton components score 0.
* betweenness: shortest-path accumulation equal to the unordered-pair
  path-enumeration definition, endpoints excluded, no (n-1)(n-2)/2
  normalization.
* eigenvector: dominant eigenvector of the adjacency structure by power
  iteration, all-ones start, max-normalized so the top score is 1. On
  disconnected graphs the dominant component wins; exact spectral ties
  resolve deterministically from the start vector.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import NoEdges, NonConvergence

EIGENVECTOR_TOL = 1e-10
EIGENVECTOR_MAX_ITERS = 10_000


def _adjacency(g) -> dict[str, set[str]]:
    return g.adjacency()


def degree_centrality(g) -> dict[str, int]:
    """Incident edge count per node."""
    return {n: len(nbrs) for n, nbrs in _adjacency(g).items()}


def _bfs_distances(adj: dict[str, set[str]], source: str) -> dict[str, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def closeness_centrality(g) -> dict[str, float]:
    """1 / sum of distances to the other nodes in the same component."""
    adj = _adjacency(g)
    result = {}
    for v in adj:
        dist = _bfs_distances(adj, v)
        total = sum(dist.values())  # dist[v] == 0 contributes nothing
        result[v] = 1.0 / total if total > 0 else 0.0
    return result


def betweenness_centrality(g) -> dict[str, float]:
    """Brandes-style accumulation over all sources, halved for undirected.

    Equals the sum over unordered pairs (s, t), both distinct from v, of
    the fraction of shortest s-t paths passing through v.
    """
    adj = _adjacency(g)
    bc = {v: 0.0 for v in adj}
    for s in adj:
        stack: list[str] = []
        preds: dict[str, list[str]] = {v: [] for v in adj}
        sigma = {v: 0.0 for v in adj}
        dist = {v: -1 for v in adj}
        sigma[s] = 1.0
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            stack.append(v)
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = {v: 0.0 for v in adj}
        while stack:
            w = stack.pop()
            for v in preds[w]:
                delta[v] += (sigma[v] / sigma[w]) * (1.0 + delta[w])
            if w != s:
                bc[w] += delta[w]
    # each unordered pair was counted from both endpoints
    return {v: x / 2.0 for v, x in bc.items()}


def eigenvector_centrality(
    g,
    tol: float = EIGENVECTOR_TOL,
    max_iters: int = EIGENVECTOR_MAX_ITERS,
) -> dict[str, float]:
    """Max-normalized dominant-eigenvector scores via power iteration.

    Iterates x <- (x + A x) / max, which has the same dominant eigenvector
    as A alone but cannot oscillate between the +/- spectral pair that
    bipartite adjacency matrices always carry. Converged when successive
    normalized iterates differ by less than ``tol`` in max-norm.
    """
    adj = _adjacency(g)
    if not any(adj.values()):
        raise NoEdges()
    nodes = sorted(adj)
    x = {v: 1.0 for v in nodes}
    for _ in range(max_iters):
        nxt = {v: x[v] + sum(x[w] for w in adj[v]) for v in nodes}
        top = max(nxt.values())
        nxt = {v: val / top for v, val in nxt.items()}
        if max(abs(nxt[v] - x[v]) for v in nodes) < tol:
            return nxt
        x = nxt
    raise NonConvergence(max_iters, x)


def rescale(values) -> list[float]:
    """Min-max map onto [0, 1]; raw zeros stay exactly zero.

    A constant vector maps to all ones unless the constant is zero, in
    which case presence semantics demand all zeros.
    """
    values = list(values)
    if not values:
        raise ValueError("rescale needs at least one value")
    lo, hi = min(values), max(values)
    if hi == lo:
        return [0.0 if v == 0 else 1.0 for v in values]
    return [0.0 if v == 0 else (v - lo) / (hi - lo) for v in values]


@dataclass(frozen=True)
class CentralityVector:
    node_ids: tuple[str, ...]
    degree: tuple[int, ...]
    closeness: tuple[float, ...]
    betweenness: tuple[float, ...]
    eigenvector: tuple[float, ...]
    degree_rescaled: tuple[float, ...]
    closeness_rescaled: tuple[float, ...]
    betweenness_rescaled: tuple[float, ...]
    eigenvector_rescaled: tuple[float, ...]

    def row(self, node_id: str) -> dict[str, float]:
        i = self.node_ids.index(node_id)
        return {
            "degree": self.degree[i],
            "closeness": self.closeness[i],
            "betweenness": self.betweenness[i],
            "eigenvector": self.eigenvector[i],
            "degree_rescaled": self.degree_rescaled[i],
            "closeness_rescaled": self.closeness_rescaled[i],
            "betweenness_rescaled": self.betweenness_rescaled[i],
            "eigenvector_rescaled": self.eigenvector_rescaled[i],
        }


def compute_centralities(g) -> CentralityVector:
    """All four measures plus their rescaled variants, nodes sorted by id.

    Rescaling runs across every node in this vector; callers wanting a
    different reference population (one side only, one stratum) should
    call :func:`rescale` on their own slice.
    """
    deg = degree_centrality(g)
    clo = closeness_centrality(g)
    bet = betweenness_centrality(g)
    eig = eigenvector_centrality(g)
    nodes = tuple(sorted(deg))
    deg_v = [deg[n] for n in nodes]
    clo_v = [clo[n] for n in nodes]
    bet_v = [bet[n] for n in nodes]
    eig_v = [eig[n] for n in nodes]
    return CentralityVector(
        node_ids=nodes,
        degree=tuple(deg_v),
        closeness=tuple(clo_v),
        betweenness=tuple(bet_v),
        eigenvector=tuple(eig_v),
        degree_rescaled=tuple(rescale(deg_v)),
        closeness_rescaled=tuple(rescale(clo_v)),
        betweenness_rescaled=tuple(rescale(bet_v)),
        eigenvector_rescaled=tuple(rescale(eig_v)),
    )
