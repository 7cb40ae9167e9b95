"""Immutable unweighted graphs, hop distances, BFS layerings and disks."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

DistanceMatrix = tuple[tuple[int, ...], ...]


class GraphError(ValueError):
    pass


class DisconnectedGraphError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple, undirected, connected graph on vertices ``0..n-1``.

    Use :func:`build_graph` to construct one; it canonicalises the adjacency
    lists (sorted, deduplicated) and rejects invalid input.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return frozenset(self.adjacency[v]) | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjacency_sets[u]

    @cached_property
    def _adjacency_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in self.adjacency[u] if u < v)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def dist(self) -> DistanceMatrix:
        return all_pairs_distances(self)

    @cached_property
    def diameter(self) -> int:
        return max(max(row) for row in self.dist)

    @cached_property
    def radius(self) -> int:
        return min(max(row) for row in self.dist)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def build_graph(edges: Iterable[Sequence[int]], n: int) -> Graph:
    if n < 2:
        raise GraphError(f"graphs need at least 2 vertices, got n={n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for edge in edges:
        u, v = (int(x) for x in edge)
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphError(f"vertex id {x} out of range [0, {n})")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    g = Graph(n, tuple(tuple(sorted(a)) for a in adj))
    if -1 in bfs_distances(g, 0):
        raise DisconnectedGraphError("graph is disconnected")
    return g


def bfs_distances(g: Graph, sources: int | Iterable[int]) -> list[int]:
    """Hop distance from the nearest source; unreachable vertices get -1."""
    if isinstance(sources, int):
        sources = (sources,)
    dist = [-1] * g.n
    queue: deque[int] = deque()
    for s in sources:
        if dist[s] == -1:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] == -1:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    return tuple(tuple(bfs_distances(g, s)) for s in range(g.n))


@dataclass(frozen=True)
class Layering:
    start: int
    layers: tuple[frozenset[int], ...]

    @cached_property
    def level(self) -> tuple[int, ...]:
        level = [0] * sum(len(layer) for layer in self.layers)
        for i, layer in enumerate(self.layers):
            for v in layer:
                level[v] = i
        return tuple(level)

    def down_neighbors(self, g: Graph, v: int) -> frozenset[int]:
        """Neighbours of ``v`` in the previous layer."""
        i = self.level[v]
        return frozenset(w for w in g.adjacency[v] if self.level[w] == i - 1)


def bfs_layering(g: Graph, s: int) -> Layering:
    row = g.dist[s]
    layers: list[set[int]] = [set() for _ in range(max(row) + 1)]
    for v, d in enumerate(row):
        layers[d].add(v)
    return Layering(s, tuple(frozenset(layer) for layer in layers))


def graph_power(g: Graph, k: int) -> Graph:
    if k < 1:
        raise GraphError(f"power must be positive, got {k}")
    d = g.dist
    edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if d[u][v] <= k]
    return build_graph(edges, g.n)


def disk(g: Graph, center: int, r: int) -> frozenset[int]:
    row = g.dist[center]
    return frozenset(v for v in range(g.n) if row[v] <= r)


def component_labels(g: Graph, removed: Iterable[int]) -> list[int]:
    """Label connected components of ``g`` minus ``removed``; removed vertices get -1."""
    label = [-2] * g.n
    for v in removed:
        label[v] = -1
    current = 0
    for s in range(g.n):
        if label[s] != -2:
            continue
        label[s] = current
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if label[w] == -2:
                    label[w] = current
                    stack.append(w)
        current += 1
    return label


def disk_intercepts(g: Graph, center: int, r: int, u: int, w: int) -> bool:
    """True if every u,w-path meets the disk of radius ``r`` around ``center``."""
    if u == w:
        raise GraphError("disk_intercepts needs two distinct vertices")
    row = g.dist[center]
    if row[u] <= r or row[w] <= r:
        return True
    labels = component_labels(g, disk(g, center, r))
    return labels[u] != labels[w]
