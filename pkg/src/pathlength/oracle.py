"""Exponential-time exact references for small graphs.

Every quantity has two independent routes so the routes can check each
other: bandwidth (deadline search / plain enumeration), line-distortion
(canonic-order search / plain enumeration), path-length and path-breadth
(subset dynamic programme / interval closures of all orderings).
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Sequence

from .bandwidth import CapExceededError, Layout, local_density_bound, min_bandwidth_layout
from .decomposition import PathDecomposition
from .distortion import LineEmbedding, canonic_embedding
from .graph import Graph, build_graph

BANDWIDTH_ENUM_CAP = 12
BANDWIDTH_SEARCH_CAP = 24
DISTORTION_CAP = 9
PATH_CAP = 8


def _check_cap(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise CapExceededError(f"exact {what} capped at n <= {cap}, got n={g.n}")


# ---------------------------------------------------------------------- bandwidth


def optimal_layout(g: Graph, cap: int = BANDWIDTH_SEARCH_CAP) -> Layout:
    _check_cap(g, cap, "bandwidth")
    return min_bandwidth_layout(g, cap=cap)


def exact_bandwidth(g: Graph, method: str = "bnb", cap: int | None = None) -> int:
    if method == "bnb":
        return optimal_layout(g, cap=BANDWIDTH_SEARCH_CAP if cap is None else cap).bandwidth
    if method == "enumerate":
        _check_cap(g, BANDWIDTH_ENUM_CAP if cap is None else cap, "bandwidth enumeration")
        best = g.n - 1
        for order in itertools.permutations(range(g.n)):
            if order[0] > order[-1]:
                continue
            pos = [0] * g.n
            for i, v in enumerate(order):
                pos[v] = i
            best = min(best, max(abs(pos[u] - pos[v]) for u, v in g.edges))
        return best
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------- line-distortion


def optimal_line_embedding(g: Graph, cap: int = DISTORTION_CAP) -> LineEmbedding:
    """Minimum-distortion canonic embedding (lexicographically smallest order among optima)."""
    _check_cap(g, cap, "line-distortion")
    k = max(1, local_density_bound(g))
    while True:
        order = _order_with_distortion(g, k)
        if order is not None:
            return canonic_embedding(g, order)
        k += 1


def exact_line_distortion(g: Graph, method: str = "search", cap: int | None = None) -> int:
    if method == "search":
        return optimal_line_embedding(g, cap=DISTORTION_CAP if cap is None else cap).distortion
    if method == "enumerate":
        _check_cap(g, DISTORTION_CAP if cap is None else cap, "line-distortion")
        d = g.dist
        best = None
        for order in itertools.permutations(range(g.n)):
            if order[0] > order[-1]:
                continue
            pos = [0] * g.n
            for prev, v in zip(order, order[1:]):
                pos[v] = pos[prev] + d[prev][v]
            stretch = max(abs(pos[u] - pos[v]) for u, v in g.edges)
            best = stretch if best is None else min(best, stretch)
        assert best is not None
        return best
    raise ValueError(f"unknown method {method!r}")


def _order_with_distortion(g: Graph, k: int) -> list[int] | None:
    n, d = g.n, g.dist
    nbr_mask = [sum(1 << w for w in g.adjacency[v]) for v in range(n)]
    full = (1 << n) - 1
    pos = [0] * n
    order: list[int] = []
    dead: set = set()

    def search(placed: int) -> bool:
        if placed == full:
            return True
        last = order[-1]
        cur = pos[last]
        active = []
        for u in order:
            pending = nbr_mask[u] & ~placed
            if not pending:
                continue
            w = pending
            while w:
                low = w & -w
                if cur + d[last][low.bit_length() - 1] - pos[u] > k:
                    return False
                w ^= low
            active.append((u, cur - pos[u]))
        key = (placed, last, tuple(active))
        if key in dead:
            return False
        for v in range(n):
            if placed >> v & 1:
                continue
            p = cur + d[last][v]
            if any(p - pos[u] > k for u in g.adjacency[v] if placed >> u & 1):
                continue
            pos[v] = p
            order.append(v)
            if search(placed | 1 << v):
                return True
            order.pop()
        dead.add(key)
        return False

    for first in range(n):
        pos[first] = 0
        order.append(first)
        if search(1 << first):
            return order
        order.pop()
    return None


# ------------------------------------------------------------ interval closures


def interval_closure(g: Graph, order: Sequence[int]) -> Graph:
    """Smallest edge superset for which a < b < c and ac an edge imply bc an edge."""
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    order = list(order)
    rank = {v: i for i, v in enumerate(order)}
    edges = set(g.edges)
    changed = True
    while changed:
        changed = False
        left: dict[int, int] = {}
        for u, v in edges:
            a, c = (u, v) if rank[u] < rank[v] else (v, u)
            left[c] = min(left.get(c, rank[a]), rank[a])
        for c, lo in left.items():
            for b in order[lo + 1 : rank[c]]:
                e = (min(b, c), max(b, c))
                if e not in edges:
                    edges.add(e)
                    changed = True
    return build_graph(edges, g.n)


def is_interval_ordering(g: Graph, order: Sequence[int]) -> bool:
    """Every vertex's earlier neighbours form a block ending right before it."""
    rank = {v: i for i, v in enumerate(order)}
    for c in range(g.n):
        earlier = [rank[a] for a in g.adjacency[c] if rank[a] < rank[c]]
        if earlier and len(earlier) != rank[c] - min(earlier):
            return False
    return True


# ------------------------------------------------------- path-length and breadth


def exact_path_length(g: Graph, method: str = "dp", cap: int = PATH_CAP) -> int:
    _check_cap(g, cap, "path-length")
    if method == "dp":
        return _vertex_order_dp(g, "length")[0]
    if method == "closure":
        return _closure_minimum(g, "length")
    raise ValueError(f"unknown method {method!r}")


def exact_path_breadth(g: Graph, method: str = "dp", cap: int = PATH_CAP) -> int:
    _check_cap(g, cap, "path-breadth")
    if method == "dp":
        return _vertex_order_dp(g, "breadth")[0]
    if method == "closure":
        return _closure_minimum(g, "breadth")
    raise ValueError(f"unknown method {method!r}")


def optimal_decomposition(g: Graph, measure: str = "length", cap: int = PATH_CAP) -> PathDecomposition:
    """A path-decomposition attaining the exact path-length (or path-breadth)."""
    _check_cap(g, cap, f"path-{measure}")
    _, order = _vertex_order_dp(g, measure)
    return PathDecomposition(g, tuple(_introduction_bags(g, order)))


def _introduction_bags(g: Graph, order: Sequence[int]) -> list[frozenset[int]]:
    """Bag of v = v plus every earlier vertex with a neighbour at or after v."""
    bags = []
    placed: set[int] = set()
    for v in order:
        frontier = {u for u in placed if any(w not in placed for w in g.adjacency[u])}
        bags.append(frozenset(frontier | {v}))
        placed.add(v)
    return bags


def _set_cost(g: Graph, members: Sequence[int], measure: str) -> int:
    d = g.dist
    if measure == "length":
        return max(d[u][v] for u in members for v in members)
    return min(max(d[c][u] for u in members) for c in range(g.n))


def _vertex_order_dp(g: Graph, measure: str) -> tuple[int, list[int]]:
    """Minimise, over introduction orders, the worst bag cost.

    Any path-decomposition whose bags are visited in order of each vertex's
    first bag contains the introduction bags, and both diameter and radius
    are monotone under inclusion, so the optimum over orders is exact.
    """
    n = g.n
    nbr_mask = [sum(1 << w for w in g.adjacency[v]) for v in range(n)]
    full = (1 << n) - 1
    cost_cache: dict[int, int] = {}

    def cost(placed: int, v: int) -> int:
        bag = 1 << v
        for u in range(n):
            if placed >> u & 1 and nbr_mask[u] & ~placed:
                bag |= 1 << u
        if bag not in cost_cache:
            cost_cache[bag] = _set_cost(g, [u for u in range(n) if bag >> u & 1], measure)
        return cost_cache[bag]

    @lru_cache(maxsize=None)
    def best(placed: int) -> tuple[int, int]:
        if placed == full:
            return 0, -1
        result = (n + 1, -1)
        for v in range(n):
            if not placed >> v & 1:
                value = max(cost(placed, v), best(placed | 1 << v)[0])
                if value < result[0]:
                    result = (value, v)
        return result

    order = []
    placed = 0
    value = best(0)[0]
    while placed != full:
        v = best(placed)[1]
        order.append(v)
        placed |= 1 << v
    return value, order


def _closure_minimum(g: Graph, measure: str) -> int:
    d = g.dist
    best = None
    for order in itertools.permutations(range(g.n)):
        h = interval_closure(g, order)
        if measure == "length":
            value = max(d[u][v] for u, v in h.edges)
        else:
            rank = {v: i for i, v in enumerate(order)}
            value = max(
                _set_cost(g, [v, *(u for u in h.adjacency[v] if rank[u] > rank[v])], "breadth")
                for v in range(g.n)
            )
        best = value if best is None else min(best, value)
    assert best is not None
    return best
