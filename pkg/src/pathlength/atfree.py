"""AT-free graphs: LBFS, recognition, length-2 decompositions and the
8-approximate line embedding; breadth-1 decompositions from permutation,
trapezoid and convex bipartite models.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .bandwidth import Layout
from .decomposition import PathDecomposition, prune_bags
from .distortion import LineEmbedding, canonic_embedding
from .graph import Graph, Layering, bfs_layering, build_graph, component_labels


class NotATFreeError(ValueError):
    def __init__(self, triple: tuple[int, int, int]):
        super().__init__(f"graph has the asteroidal triple {triple}")
        self.triple = triple


class ConstructionError(RuntimeError):
    """A structural property the AT-free constructions rely on did not hold."""


class KkmConstructionError(ConstructionError):
    pass


class ModelError(ValueError):
    pass


# --------------------------------------------------------------------------- LBFS


@dataclass(frozen=True)
class LbfsOrder:
    """``numbering[v]`` runs from n (start vertex) down to 1; ``order`` is the visit sequence."""

    numbering: tuple[int, ...]
    order: tuple[int, ...]

    @property
    def last(self) -> int:
        return self.order[-1]


def lbfs(g: Graph, start: int) -> LbfsOrder:
    """Lexicographic BFS; ties between equal labels go to the smallest id."""
    n = g.n
    labels: list[list[int]] = [[] for _ in range(n)]
    numbering = [0] * n
    order = []
    current = start
    for number in range(n, 0, -1):
        if number < n:
            current = max(
                (v for v in range(n) if not numbering[v]),
                key=lambda v: (labels[v], -v),
            )
        numbering[current] = number
        order.append(current)
        for w in g.adjacency[current]:
            if not numbering[w]:
                labels[w].append(number)
    return LbfsOrder(tuple(numbering), tuple(order))


# ---------------------------------------------------------------------- recognition


def asteroidal_triple(g: Graph) -> tuple[int, int, int] | None:
    """Lexicographically first asteroidal triple, or None if ``g`` is AT-free."""
    labels = [component_labels(g, g.closed_neighborhood(z)) for z in range(g.n)]
    for a, b, c in itertools.combinations(range(g.n), 3):
        if g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c):
            continue
        if labels[a][b] == labels[a][c] and labels[b][a] == labels[b][c] and labels[c][a] == labels[c][b]:
            return a, b, c
    return None


def is_at_free(g: Graph) -> bool:
    return asteroidal_triple(g) is None


# ------------------------------------------------------------ length-2 decomposition


def down_neighborhood_violations(
    g: Graph, layering: Layering, sigma: LbfsOrder
) -> list[tuple[int, int]]:
    """Non-adjacent same-layer pairs (v, u), sigma(v) < sigma(u), where N_down(v) is not inside N_down(u)."""
    bad = []
    for layer in layering.layers[1:]:
        for u, v in itertools.permutations(sorted(layer), 2):
            if sigma.numbering[v] < sigma.numbering[u] and not g.has_edge(u, v):
                if not layering.down_neighbors(g, v) <= layering.down_neighbors(g, u):
                    bad.append((v, u))
    return bad


def atfree_completion(g: Graph, force: bool = False) -> tuple[Graph, LbfsOrder]:
    """Interval supergraph G+ of an AT-free graph inside its square, with the
    second LBFS ordering (an interval ordering of G+).
    """
    from .oracle import interval_closure, is_interval_ordering

    if not force:
        triple = asteroidal_triple(g)
        if triple is not None:
            raise NotATFreeError(triple)
    x = lbfs(g, 0).last
    sigma = lbfs(g, x)
    layering = bfs_layering(g, x)
    if not force:
        bad = down_neighborhood_violations(g, layering, sigma)
        if bad:
            raise ConstructionError(f"down-neighbourhoods not nested for AT-free input: {bad[0]}")
    num = sigma.numbering
    edges = set(g.edges)
    for layer in layering.layers:
        for u, v in itertools.combinations(sorted(layer), 2):
            edges.add((u, v))
    for u, v in g.edges:
        if layering.level[u] != layering.level[v]:
            continue
        if num[u] < num[v]:
            u, v = v, u
        for w in layering.down_neighbors(g, v):
            edges.add((min(u, w), max(u, w)))
    completion = build_graph(edges, g.n)
    order = sorted(range(g.n), key=num.__getitem__)
    if not is_interval_ordering(completion, order):
        if not force:
            raise ConstructionError("LBFS ordering is not an interval ordering of the completion")
        completion = interval_closure(completion, order)
    return completion, sigma


def atfree_decomposition(g: Graph, force: bool = False, prune: bool = False) -> PathDecomposition:
    """Length-2 path-decomposition of an AT-free graph.

    Bags are the closed neighbourhoods of each vertex in G+ restricted to
    vertices visited earlier by the second LBFS, listed in visit order.
    """
    completion, sigma = atfree_completion(g, force=force)
    num = sigma.numbering
    bags = []
    for v in sigma.order:
        bags.append(frozenset([v, *(u for u in completion.adjacency[v] if num[u] > num[v])]))
    pd = PathDecomposition(g, tuple(bags))
    return prune_bags(pd) if prune else pd


# ----------------------------------------------------------- dominating path layering


@dataclass(frozen=True)
class KkmStructure:
    path: tuple[int, ...]
    layering: Layering
    sigma: LbfsOrder


def check_kkm(g: Graph, kkm: KkmStructure) -> None:
    path, layers = kkm.path, kkm.layering.layers
    if len(path) != len(layers) or path[0] != kkm.layering.start:
        raise KkmConstructionError("path does not match the layering")
    for i, v in enumerate(path):
        if v not in layers[i]:
            raise KkmConstructionError(f"path vertex {v} is not in layer {i}")
        if i and not g.has_edge(path[i - 1], v):
            raise KkmConstructionError(f"{path[i - 1]}-{v} is not an edge")
    for i in range(1, len(layers)):
        for u in layers[i]:
            if u != path[i] and not (g.has_edge(u, path[i]) or g.has_edge(u, path[i - 1])):
                raise KkmConstructionError(
                    f"vertex {u} of layer {i} misses both {path[i - 1]} and {path[i]}"
                )


def kkm_layering_path(g: Graph) -> KkmStructure:
    """Path v_0..v_k with every u in layer i adjacent to v_i or v_{i-1}.

    v_0 is the last vertex of a double LBFS sweep. Each v_i is chosen among
    the neighbours of v_{i-1} in layer i that satisfy the condition,
    preferring the largest second-sweep number, then the smallest id;
    dead ends are backtracked (memoised per (layer, previous vertex)).
    """
    x = lbfs(g, 0).last
    sigma = lbfs(g, x)
    v0 = sigma.last
    layering = bfs_layering(g, v0)
    layers = [sorted(layer) for layer in layering.layers]
    depth = len(layers) - 1
    num = sigma.numbering
    failed: set[tuple[int, int]] = set()

    def candidates(i: int, prev: int) -> list[int]:
        out = []
        for w in g.adjacency[prev]:
            if layering.level[w] != i:
                continue
            if all(u == w or g.has_edge(u, w) or g.has_edge(u, prev) for u in layers[i]):
                out.append(w)
        return sorted(out, key=lambda w: (-num[w], w))

    def extend(path: list[int]) -> bool:
        i = len(path)
        if i > depth:
            return True
        if (i, path[-1]) in failed:
            return False
        for w in candidates(i, path[-1]):
            path.append(w)
            if extend(path):
                return True
            path.pop()
        failed.add((i, path[-1]))
        return False

    path = [v0]
    if not extend(path):
        raise KkmConstructionError(f"no dominating layering path from {v0}")
    kkm = KkmStructure(tuple(path), layering, sigma)
    check_kkm(g, kkm)
    return kkm


def atfree_order(g: Graph, force: bool = False) -> list[int]:
    """v_0, then per layer i: the rest of L_i, the neighbours of v_i in L_i, v_i."""
    if not force:
        triple = asteroidal_triple(g)
        if triple is not None:
            raise NotATFreeError(triple)
    kkm = kkm_layering_path(g)
    order = [kkm.path[0]]
    for i in range(1, len(kkm.path)):
        vi = kkm.path[i]
        near = [u for u in sorted(kkm.layering.layers[i]) if u != vi and g.has_edge(u, vi)]
        far = [u for u in sorted(kkm.layering.layers[i]) if u != vi and not g.has_edge(u, vi)]
        order += far + near + [vi]
    return order


def atfree_embedding(g: Graph, force: bool = False) -> LineEmbedding:
    return canonic_embedding(g, atfree_order(g, force=force))


def atfree_layout(g: Graph, force: bool = False) -> Layout:
    return Layout.from_order(g, atfree_order(g, force=force))


# ------------------------------------------------------------------ permutation models


def check_permutation(model: Sequence[int]) -> list[int]:
    model = [int(x) for x in model]
    if sorted(model) != list(range(1, len(model) + 1)):
        raise ModelError(f"not a permutation of 1..{len(model)}: {model}")
    return model


def permutation_graph(model: Sequence[int]) -> Graph:
    """Segments join label i at upper slot i to its slot in ``model`` on the lower line.

    Label ``i`` becomes vertex ``i - 1``; two vertices are adjacent iff their
    segments cross.
    """
    model = check_permutation(model)
    lower = {label: j for j, label in enumerate(model)}
    n = len(model)
    edges = [
        (i - 1, j - 1)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if lower[i] > lower[j]
    ]
    return build_graph(edges, n)


def permutation_decomposition(model: Sequence[int]) -> tuple[Graph, PathDecomposition]:
    """Closed neighbourhoods of the leftmost-first maximal independent set."""
    model = check_permutation(model)
    g = permutation_graph(model)
    lower = {label: j for j, label in enumerate(model)}
    chosen = [1]
    for label in range(2, len(model) + 1):
        if lower[label] > lower[chosen[-1]]:
            chosen.append(label)
    bags = tuple(g.closed_neighborhood(label - 1) for label in chosen)
    return g, PathDecomposition(g, bags)


# -------------------------------------------------------------------- trapezoid models

Trapezoid = tuple[int, int, int, int]


def check_trapezoids(model: Sequence[Sequence[int]]) -> list[Trapezoid]:
    out = []
    for i, t in enumerate(model):
        if len(t) != 4:
            raise ModelError(f"trapezoid {i} needs 4 coordinates, got {len(t)}")
        a, b, c, d = (int(x) for x in t)
        if a > b or c > d:
            raise ModelError(f"trapezoid {i} has an inverted interval: {t}")
        out.append((a, b, c, d))
    return out


def trapezoid_graph(model: Sequence[Sequence[int]]) -> Graph:
    """Trapezoid i spans [a,b] on the upper line and [c,d] on the lower line.

    Shared endpoints count as intersection.
    """
    ts = check_trapezoids(model)
    edges = []
    for i, j in itertools.combinations(range(len(ts)), 2):
        a1, b1, c1, d1 = ts[i]
        a2, b2, c2, d2 = ts[j]
        apart = (b1 < a2 and d1 < c2) or (b2 < a1 and d2 < c1)
        if not apart:
            edges.append((i, j))
    return build_graph(edges, len(ts))


def diagonal_model(model: Sequence[Sequence[int]]) -> tuple[list[int], list[int]]:
    """Permutation model of the 2n trapezoid diagonals.

    Returns (permutation, owner) where ``owner[label - 1]`` is the trapezoid
    of the diagonal with that label. Coordinate ties are broken so that
    touching diagonals still cross.
    """
    ts = check_trapezoids(model)
    segments = []  # (upper, lower, trapezoid)
    for t, (a, b, c, d) in enumerate(ts):
        segments.append((a, d, t))
        segments.append((b, c, t))
    idx = range(len(segments))
    upper = sorted(idx, key=lambda s: (segments[s][0], -segments[s][1], s))
    lower = sorted(idx, key=lambda s: (segments[s][1], -segments[s][0], -s))
    label = {s: r + 1 for r, s in enumerate(upper)}
    permutation = [label[s] for s in lower]
    owner = [segments[s][2] for s in upper]
    return permutation, owner


def trapezoid_decomposition(model: Sequence[Sequence[int]]) -> tuple[Graph, PathDecomposition]:
    """Breadth-1 decomposition of the diagonal permutation graph, contracted back."""
    g = trapezoid_graph(model)
    permutation, owner = diagonal_model(model)
    _, pd_h = permutation_decomposition(permutation)
    bags: list[frozenset[int]] = []
    for bag in pd_h.bags:
        contracted = frozenset(owner[v] for v in bag)
        if not bags or bags[-1] != contracted:
            bags.append(contracted)
    return g, PathDecomposition(g, tuple(bags))


# ----------------------------------------------------------- convex bipartite models


def convex_bipartite_graph(u_count: int, v_intervals: Sequence[Sequence[int]]) -> Graph:
    """U is ``0..q-1``; the j-th V vertex is ``q + j`` and sees U slots ``l..r`` (1-based)."""
    if u_count < 1:
        raise ModelError("U must be non-empty")
    edges = []
    for j, iv in enumerate(v_intervals):
        l, r = (int(x) for x in iv)
        if l > r:
            raise ModelError(f"interval {j} is inverted: [{l}, {r}]")
        if l < 1 or r > u_count:
            raise ModelError(f"interval {j} = [{l}, {r}] leaves 1..{u_count}")
        edges += [(u - 1, u_count + j) for u in range(l, r + 1)]
    return build_graph(edges, u_count + len(v_intervals))


def convex_bipartite_decomposition(
    u_count: int, v_intervals: Sequence[Sequence[int]]
) -> tuple[Graph, PathDecomposition]:
    g = convex_bipartite_graph(u_count, v_intervals)
    bags = tuple(g.closed_neighborhood(u) for u in range(u_count))
    return g, PathDecomposition(g, bags)
