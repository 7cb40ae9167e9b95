"""Path-decompositions: validation, length/breadth, extended layerings."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .graph import DistanceMatrix, Graph, bfs_layering, build_graph


class InvalidDecompositionError(ValueError):
    pass


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violation: str | None = None
    witness: tuple[int, ...] = ()
    message: str = ""

    def __bool__(self) -> bool:
        return self.valid

    def as_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violation": self.violation,
            "witness": list(self.witness),
            "message": self.message,
        }


@dataclass(frozen=True)
class DecompositionMetrics:
    length: int
    breadth: int
    centers: tuple[int, ...]


@dataclass(frozen=True)
class PathDecomposition:
    graph: Graph
    bags: tuple[frozenset[int], ...]

    @classmethod
    def from_bags(cls, graph: Graph, bags: Iterable[Iterable[int]]) -> PathDecomposition:
        return cls(graph, tuple(frozenset(int(v) for v in bag) for bag in bags))

    @cached_property
    def metrics(self) -> DecompositionMetrics:
        return metrics(self)

    @property
    def length(self) -> int:
        return self.metrics.length

    @property
    def breadth(self) -> int:
        return self.metrics.breadth

    @property
    def width(self) -> int:
        return max(len(bag) for bag in self.bags) - 1

    def sorted_bags(self) -> list[list[int]]:
        return [sorted(bag) for bag in self.bags]

    def certificate(self) -> dict:
        m = self.metrics
        return {
            "bags": self.sorted_bags(),
            "length": m.length,
            "breadth": m.breadth,
            "centers": list(m.centers),
        }


def validate(pd: PathDecomposition) -> ValidationReport:
    """Check the three path-decomposition properties, reporting the first breach."""
    g = pd.graph
    for i, bag in enumerate(pd.bags):
        if not bag:
            return ValidationReport(False, "empty-bag", (i,), f"bag {i} is empty")
        for v in bag:
            if not 0 <= v < g.n:
                return ValidationReport(
                    False, "vertex-range", (i, v), f"bag {i} holds unknown vertex {v}"
                )
    covered = set().union(*pd.bags) if pd.bags else set()
    for v in range(g.n):
        if v not in covered:
            return ValidationReport(False, "coverage", (v,), f"vertex {v} is in no bag")
    for u, v in g.edges:
        if not any(u in bag and v in bag for bag in pd.bags):
            return ValidationReport(False, "edge", (u, v), f"edge {u}-{v} is in no bag")
    for v in range(g.n):
        hits = [i for i, bag in enumerate(pd.bags) if v in bag]
        if hits[-1] - hits[0] + 1 != len(hits):
            gap = next(i for i in range(hits[0], hits[-1]) if i not in hits)
            return ValidationReport(
                False,
                "contiguity",
                (v, gap),
                f"vertex {v} appears in bags {hits[0]} and {hits[-1]} but not in bag {gap}",
            )
    return ValidationReport(True)


def bag_diameter(bag: Iterable[int], d: DistanceMatrix) -> int:
    members = list(bag)
    return max((d[u][v] for u in members for v in members), default=0)


def bag_radius(bag: Iterable[int], d: DistanceMatrix) -> tuple[int, int]:
    """Return (radius, smallest-id center) of ``bag`` measured in the whole graph."""
    members = list(bag)
    best = (len(d) + 1, -1)
    for c in range(len(d)):
        row = d[c]
        r = max(row[u] for u in members)
        if r < best[0]:
            best = (r, c)
    return best


def metrics(pd: PathDecomposition, d: DistanceMatrix | None = None) -> DecompositionMetrics:
    report = validate(pd)
    if not report:
        raise InvalidDecompositionError(report.message)
    d = pd.graph.dist if d is None else d
    length = max(bag_diameter(bag, d) for bag in pd.bags)
    breadth = max(bag_radius(bag, d)[0] for bag in pd.bags)
    centers = []
    for bag in pd.bags:
        centers.append(
            next(c for c in range(pd.graph.n) if all(d[c][u] <= breadth for u in bag))
        )
    return DecompositionMetrics(length, breadth, tuple(centers))


def prune_bags(pd: PathDecomposition) -> PathDecomposition:
    """Drop bags contained in a neighbouring bag; the result stays valid."""
    kept: list[frozenset[int]] = []
    for bag in pd.bags:
        while kept and kept[-1] <= bag:
            kept.pop()
        if kept and bag <= kept[-1]:
            continue
        kept.append(bag)
    return PathDecomposition(pd.graph, tuple(kept))


def extended_layering(g: Graph, s: int) -> PathDecomposition:
    """Bags L_i plus the previous-layer vertices having a neighbour in L_i, for i >= 1."""
    layering = bfs_layering(g, s)
    bags = []
    for layer in layering.layers[1:]:
        down = set()
        for v in layer:
            down |= layering.down_neighbors(g, v)
        bags.append(layer | down)
    return PathDecomposition(g, tuple(bags))


def extended_layering_best(g: Graph, prune: bool = False) -> PathDecomposition:
    """Extended layering of minimum length over all start vertices (smallest start wins)."""
    best: PathDecomposition | None = None
    best_length = g.n + 1
    for s in range(g.n):
        pd = extended_layering(g, s)
        length = max(bag_diameter(bag, g.dist) for bag in pd.bags)
        if length < best_length:
            best, best_length = pd, length
    assert best is not None
    return prune_bags(best) if prune else best


def decomposition_from_embedding(
    g: Graph, f: Sequence[int] | Mapping[int, int], k: int, prune: bool = False
) -> PathDecomposition:
    """Window bags ``[f(v), f(v)+k]`` of a non-contractive line embedding.

    The embedding is first re-spaced so that consecutive vertices sit exactly
    their graph distance apart; this keeps the order and cannot raise the
    distortion.
    """
    from .distortion import canonic_embedding, embedding_distortion

    positions = _positions_list(g, f)
    distortion = embedding_distortion(g, positions)
    if distortion > k:
        raise ValueError(f"embedding has distortion {distortion} > k={k}")
    order = sorted(range(g.n), key=lambda v: positions[v])
    canon = canonic_embedding(g, order).positions
    bags = []
    for v in order:
        lo = canon[v]
        bags.append(frozenset(u for u in range(g.n) if lo <= canon[u] <= lo + k))
    pd = PathDecomposition(g, tuple(bags))
    return prune_bags(pd) if prune else pd


def _positions_list(g: Graph, f: Sequence[int] | Mapping[int, int]) -> list[int]:
    if hasattr(f, "positions"):
        f = f.positions  # LineEmbedding
    if isinstance(f, Mapping):
        return [int(f[v]) for v in range(g.n)]
    if len(f) != g.n:
        raise ValueError(f"expected {g.n} positions, got {len(f)}")
    return [int(x) for x in f]


def interval_completion(pd: PathDecomposition) -> Graph:
    """Join every pair of vertices sharing a bag."""
    report = validate(pd)
    if not report:
        raise InvalidDecompositionError(report.message)
    edges = set(pd.graph.edges)
    for bag in pd.bags:
        members = sorted(bag)
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                edges.add((u, v))
    return build_graph(edges, pd.graph.n)


def interval_ordering(pd: PathDecomposition) -> list[int]:
    """Vertices sorted by (last bag, first bag, id).

    For the completion of ``pd`` this order satisfies: a < b < c and ac an
    edge imply bc an edge.
    """
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for i, bag in enumerate(pd.bags):
        for v in bag:
            first.setdefault(v, i)
            last[v] = i
    return sorted(range(pd.graph.n), key=lambda v: (last[v], first[v], v))
