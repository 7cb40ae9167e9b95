"""Non-contractive line embeddings and the dominating-path embedding."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .domination import DominatingPath, branch_sets, check_dominating_path
from .graph import Graph


class ContractionError(ValueError):
    def __init__(self, u: int, v: int, gap: int, distance: int):
        super().__init__(
            f"vertices {u} and {v} are {gap} apart on the line but {distance} apart in the graph"
        )
        self.pair = (u, v)


@dataclass(frozen=True)
class LineEmbedding:
    positions: tuple[int, ...]
    distortion: int

    @classmethod
    def from_positions(cls, g: Graph, positions: Sequence[int]) -> LineEmbedding:
        positions = tuple(int(x) for x in positions)
        return cls(positions, embedding_distortion(g, positions))

    @property
    def order(self) -> tuple[int, ...]:
        return tuple(sorted(range(len(self.positions)), key=self.positions.__getitem__))

    def certificate(self) -> dict:
        return {
            "positions": {str(v): x for v, x in enumerate(self.positions)},
            "distortion": self.distortion,
        }


def embedding_distortion(g: Graph, positions: Sequence[int] | Mapping[int, int]) -> int:
    """Distortion of a non-contractive embedding, i.e. its largest edge stretch.

    Checking neighbours on the line is enough for non-contractiveness: the
    graph metric obeys the triangle inequality, the line metric is additive.
    """
    if isinstance(positions, Mapping):
        positions = [positions[v] for v in range(g.n)]
    if len(positions) != g.n:
        raise ValueError(f"expected {g.n} positions, got {len(positions)}")
    if len(set(positions)) != g.n:
        raise ValueError("embedding is not injective")
    order = sorted(range(g.n), key=lambda v: positions[v])
    d = g.dist
    for u, v in zip(order, order[1:]):
        gap = positions[v] - positions[u]
        if gap < d[u][v]:
            raise ContractionError(u, v, gap, d[u][v])
    return max(abs(positions[u] - positions[v]) for u, v in g.edges)


def canonic_embedding(g: Graph, order: Sequence[int]) -> LineEmbedding:
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    positions = [0] * g.n
    for prev, v in zip(order, order[1:]):
        positions[v] = positions[prev] + g.dist[prev][v]
    return LineEmbedding.from_positions(g, positions)


def embed_connected_set(g: Graph, s: Iterable[int]) -> dict[int, int]:
    """Place a connected set on the line in DFS order at exact graph spacing.

    The span is at most 2|S| - 2: consecutive DFS discoveries are at most
    their tree distance apart, and the tour walks each tree edge twice.
    """
    members = set(s)
    if not members:
        raise ValueError("empty vertex set")
    root = min(members)
    seen = {root}
    visit = [root]
    stack = [iter(sorted(w for w in g.adjacency[root] if w in members))]
    while stack:
        w = next(stack[-1], None)
        if w is None:
            stack.pop()
            continue
        if w in seen:
            continue
        seen.add(w)
        visit.append(w)
        stack.append(iter(sorted(x for x in g.adjacency[w] if x in members)))
    if seen != members:
        raise ValueError("vertex set does not induce a connected subgraph")
    placement = {root: 0}
    for prev, v in zip(visit, visit[1:]):
        placement[v] = placement[prev] + g.dist[prev][v]
    return placement


def embedding_from_dominating_path(g: Graph, p: DominatingPath) -> LineEmbedding:
    """Branch sets of BFS(P,G) embedded one after another, 2k+1 apart."""
    check_dominating_path(g, p)
    gap = 2 * p.radius + 1
    positions = [0] * g.n
    offset = 0
    for i, block in enumerate(branch_sets(g, p.vertices)):
        try:
            local = embed_connected_set(g, block)
        except ValueError as exc:
            raise RuntimeError(f"branch {i} of the BFS tree is not connected") from exc
        for v, x in local.items():
            positions[v] = offset + x
        offset += max(local.values()) + gap
    return LineEmbedding.from_positions(g, positions)


def dominating_path_bound(k: int, ld: int) -> int:
    """(8k+4) ld + (2k)^2 + 2k + 1."""
    return (8 * k + 4) * ld + (2 * k) ** 2 + 2 * k + 1
