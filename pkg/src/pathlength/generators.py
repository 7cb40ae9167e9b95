"""Seeded graph families and random intersection models for the test corpus."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .atfree import convex_bipartite_graph, permutation_graph, trapezoid_graph
from .graph import DisconnectedGraphError, Graph, GraphError, build_graph

KINDS = (
    "cycle",
    "clique",
    "path",
    "star",
    "caterpillar",
    "random-connected",
    "complement-cycle",
)
MAX_ATTEMPTS = 1000


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int | None = None
    spine: int | None = None
    hair: int | None = None
    p: float | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise GraphError(f"unknown family {self.kind!r}; expected one of {', '.join(KINDS)}")
        if self.kind == "caterpillar":
            if not self.spine or self.spine < 1 or not self.hair or self.hair < 1:
                raise GraphError("caterpillar needs positive spine and hair lengths")
            return
        if self.n is None or self.n < 2:
            raise GraphError(f"{self.kind} needs n >= 2")
        if self.kind == "random-connected" and not (self.p is not None and 0 < self.p <= 1):
            raise GraphError("random-connected needs an edge probability 0 < p <= 1")


def generate(spec: FamilySpec) -> Graph:
    kind, n = spec.kind, spec.n
    if kind == "cycle":
        if n < 3:
            raise GraphError("a cycle needs n >= 3")
        return build_graph([(i, (i + 1) % n) for i in range(n)], n)
    if kind == "clique":
        return build_graph(itertools.combinations(range(n), 2), n)
    if kind == "path":
        return build_graph([(i, i + 1) for i in range(n - 1)], n)
    if kind == "star":
        return build_graph([(0, i) for i in range(1, n)], n)
    if kind == "complement-cycle":
        if n < 5:
            raise GraphError("the complement of a cycle is connected only for n >= 5")
        cycle = {frozenset((i, (i + 1) % n)) for i in range(n)}
        return build_graph(
            [e for e in itertools.combinations(range(n), 2) if frozenset(e) not in cycle], n
        )
    if kind == "caterpillar":
        return caterpillar(spec.spine, spec.hair)
    return random_connected(n, spec.p, spec.seed)


def caterpillar(spine: int, hair: int) -> Graph:
    """Spine ``0..spine-1``; each spine vertex carries one pendant path of ``hair`` vertices."""
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i in range(spine):
        prev = i
        for _ in range(hair):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(edges, nxt)


def _retry(build, rng: random.Random, what: str):
    for _ in range(MAX_ATTEMPTS):
        try:
            return build(rng)
        except DisconnectedGraphError:
            continue
    raise GraphError(f"no connected {what} within {MAX_ATTEMPTS} attempts")


def random_connected(n: int, p: float, seed: int) -> Graph:
    """G(n, p) conditioned on connectivity by rejection."""

    def build(rng: random.Random) -> Graph:
        return build_graph(
            [e for e in itertools.combinations(range(n), 2) if rng.random() < p], n
        )

    return _retry(build, random.Random(seed), f"G({n}, {p})")


def random_permutation_model(n: int, seed: int) -> list[int]:
    """A permutation of 1..n whose permutation graph is connected."""

    def build(rng: random.Random) -> list[int]:
        model = list(range(1, n + 1))
        rng.shuffle(model)
        permutation_graph(model)
        return model

    return _retry(build, random.Random(seed), f"permutation graph on {n} vertices")


def random_trapezoid_model(n: int, seed: int, span: int | None = None) -> list[tuple[int, int, int, int]]:
    """``n`` trapezoids with integer corners in ``1..span`` forming a connected graph."""
    span = 2 * n if span is None else span
    width = max(1, span // 4)

    def interval(rng: random.Random) -> tuple[int, int]:
        a = rng.randint(1, span)
        return a, min(span, a + rng.randint(0, width))

    def build(rng: random.Random) -> list[tuple[int, int, int, int]]:
        model = [interval(rng) + interval(rng) for _ in range(n)]
        trapezoid_graph(model)
        return model

    return _retry(build, random.Random(seed), f"trapezoid graph on {n} vertices")


def random_convex_bipartite_model(u_count: int, v_count: int, seed: int) -> tuple[int, list[tuple[int, int]]]:
    """``v_count`` random intervals over ``1..u_count`` giving a connected graph."""
    if u_count < 1 or v_count < 1:
        raise GraphError("both sides must be non-empty")

    def build(rng: random.Random) -> tuple[int, list[tuple[int, int]]]:
        intervals = []
        for _ in range(v_count):
            l = rng.randint(1, u_count)
            intervals.append((l, rng.randint(l, u_count)))
        convex_bipartite_graph(u_count, intervals)
        return u_count, intervals

    return _retry(build, random.Random(seed), f"convex bipartite graph with |U|={u_count}")


def random_interval_model(n: int, seed: int, span: int | None = None) -> list[tuple[int, int]]:
    span = 2 * n if span is None else span

    def build(rng: random.Random) -> list[tuple[int, int]]:
        model = []
        for _ in range(n):
            a = rng.randint(1, span)
            model.append((a, min(span, a + rng.randint(0, max(1, span // 3)))))
        interval_graph(model)
        return model

    return _retry(build, random.Random(seed), f"interval graph on {n} vertices")


def interval_graph(model: list[tuple[int, int]]) -> Graph:
    """Closed intervals; vertex ``i`` is ``model[i]``; touching intervals intersect."""
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(len(model)), 2)
        if model[i][0] <= model[j][1] and model[j][0] <= model[i][1]
    ]
    return build_graph(edges, len(model))
