"""Bipartite document-skill graph and its one-mode projections."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import NodeIdCollision
from .incidence import EdgeList


class Side(enum.Enum):
    DOCUMENTS = "documents"
    SKILLS = "skills"


@dataclass(frozen=True)
class BipartiteGraph:
    left_nodes: tuple[str, ...]  # documents
    right_nodes: tuple[str, ...]  # skills
    edges: frozenset[tuple[str, str]]

    def neighbors_of_left(self, doc_id: str) -> set[str]:
        return {p for d, p in self.edges if d == doc_id}

    def neighbors_of_right(self, pattern_id: str) -> set[str]:
        return {d for d, p in self.edges if p == pattern_id}

    def degree(self, node_id: str) -> int:
        return sum(1 for d, p in self.edges if node_id in (d, p))

    def adjacency(self) -> dict[str, set[str]]:
        """Symmetric adjacency over the union of both node sets."""
        adj: dict[str, set[str]] = {n: set() for n in self.left_nodes + self.right_nodes}
        for d, p in self.edges:
            adj[d].add(p)
            adj[p].add(d)
        return adj

    def node_side(self, node_id: str) -> Side:
        return Side.DOCUMENTS if node_id in set(self.left_nodes) else Side.SKILLS


@dataclass(frozen=True)
class UnipartiteGraph:
    nodes: tuple[str, ...]
    edges: frozenset[tuple[str, str]]  # stored with u < v; no self-loops
    side: Side

    def adjacency(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {n: set() for n in self.nodes}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree(self, node_id: str) -> int:
        return sum(1 for u, v in self.edges if node_id in (u, v))


def from_edge_list(e: EdgeList, keep_isolated_docs=()) -> BipartiteGraph:
    """Bipartite graph with sides inferred from edge-list columns.

    Bipartiteness holds by construction; the guard is against one id
    showing up in both columns, which would merge the two modes.
    Documents without a single match are dropped unless listed in
    ``keep_isolated_docs``.
    """
    left = sorted({d for d, _ in e.edges} | set(keep_isolated_docs))
    right = sorted({p for _, p in e.edges})
    collision = set(left) & set(right)
    if collision:
        raise NodeIdCollision(sorted(collision)[0])
    return BipartiteGraph(
        left_nodes=tuple(left),
        right_nodes=tuple(right),
        edges=frozenset(e.edges),
    )


def project(g: BipartiteGraph, side: Side) -> UnipartiteGraph:
    """One-mode projection: same-side nodes joined iff they share a neighbor.

    Unweighted and simple; the shared-neighbor count is discarded.
    """
    if side is Side.DOCUMENTS:
        nodes = g.left_nodes
        memberships: dict[str, list[str]] = {p: [] for p in g.right_nodes}
        for d, p in g.edges:
            memberships[p].append(d)
    else:
        nodes = g.right_nodes
        memberships = {d: [] for d in g.left_nodes}
        for d, p in g.edges:
            memberships[d].append(p)

    edges: set[tuple[str, str]] = set()
    for group in memberships.values():
        group = sorted(group)
        for i, u in enumerate(group):
            for v in group[i + 1 :]:
                if u != v:
                    edges.add((u, v))
    return UnipartiteGraph(nodes=tuple(nodes), edges=frozenset(edges), side=side)
