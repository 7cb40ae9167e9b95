"""Layouts, bandwidth, the local-density lower bound and approximate layouts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .decomposition import PathDecomposition, interval_completion
from .domination import DominatingPath, branch_sets, check_dominating_path
from .graph import DistanceMatrix, Graph

DEFAULT_EXACT_CAP = 24


class CapExceededError(ValueError):
    pass


@dataclass(frozen=True)
class Layout:
    """Bijection V -> {1..n}; ``positions[v]`` is the slot of vertex ``v``."""

    positions: tuple[int, ...]
    bandwidth: int

    @classmethod
    def from_order(cls, g: Graph, order: Sequence[int]) -> Layout:
        positions = [0] * g.n
        for i, v in enumerate(order):
            positions[v] = i + 1
        return cls(tuple(positions), layout_bandwidth(g, positions))

    @property
    def order(self) -> tuple[int, ...]:
        return tuple(sorted(range(len(self.positions)), key=self.positions.__getitem__))

    def certificate(self) -> dict:
        return {"positions": list(self.positions), "bandwidth": self.bandwidth}


def layout_bandwidth(g: Graph, positions: Sequence[int]) -> int:
    if len(positions) != g.n or sorted(positions) != list(range(1, g.n + 1)):
        raise ValueError("positions must be a bijection onto 1..n")
    return max(abs(positions[u] - positions[v]) for u, v in g.edges)


def local_density_bound(g: Graph, d: DistanceMatrix | None = None) -> int:
    """max over v and r of ceil((|D(v, r)| - 1) / 2r), a lower bound on bw(G)."""
    d = g.dist if d is None else d
    best = 0
    for row in d:
        counts = [0] * (max(row) + 1)
        for x in row:
            counts[x] += 1
        size = counts[0]
        for r in range(1, len(counts)):
            size += counts[r]
            best = max(best, -(-(size - 1) // (2 * r)))
    return best


def layout_from_dominating_path(g: Graph, p: DominatingPath) -> Layout:
    """Branch sets of the BFS(P,G) tree, laid out in path order (ids ascending within)."""
    check_dominating_path(g, p)
    order = [v for block in branch_sets(g, p.vertices) for v in block]
    return Layout.from_order(g, order)


def layout_from_decomposition(
    g: Graph, pd: PathDecomposition, cap: int = DEFAULT_EXACT_CAP
) -> Layout:
    """Optimal layout of the interval completion of ``pd``, used as a layout of ``g``.

    Its bandwidth on ``g`` is at most length(pd) * bw(g).
    """
    completion = interval_completion(pd)
    best = min_bandwidth_layout(completion, cap=cap)
    return Layout.from_order(g, best.order)


def min_bandwidth_layout(g: Graph, cap: int = DEFAULT_EXACT_CAP) -> Layout:
    """Exact minimum-bandwidth layout by iterative deepening on the bandwidth.

    For each candidate value ``b`` (starting at the local-density bound) a
    depth-first search fills slots left to right, trying vertices in id
    order, so the first layout found is the lexicographically smallest
    vertex order of bandwidth ``b``.
    """
    if g.n > cap:
        raise CapExceededError(f"exact bandwidth capped at n <= {cap}, got n={g.n}")
    for b in range(max(1, local_density_bound(g)), g.n):
        order = _order_with_bandwidth(g, b)
        if order is not None:
            return Layout.from_order(g, order)
    raise AssertionError("every layout has bandwidth at most n - 1")


def _order_with_bandwidth(g: Graph, b: int) -> list[int] | None:
    n = g.n
    nbr_mask = [sum(1 << w for w in g.adjacency[v]) for v in range(n)]
    full = (1 << n) - 1
    pos = [-1] * n
    order: list[int] = []
    dead: set[tuple[int, tuple[int, ...]]] = set()

    def feasible(i: int, placed: int) -> bool:
        # i = next free slot; every placed vertex with unplaced neighbours imposes
        # a deadline pos+b on them, and deadlines must fit into the free slots.
        deadline: dict[int, int] = {}
        for u in order[max(0, i - b - 1) :]:
            pending = nbr_mask[u] & ~placed
            if not pending:
                continue
            limit = pos[u] + b
            if limit < i:
                return False
            w = pending
            while w:
                low = w & -w
                v = low.bit_length() - 1
                if deadline.get(v, n) > limit:
                    deadline[v] = limit
                w ^= low
        for j, limit in enumerate(sorted(deadline.values())):
            if limit < i + j:
                return False
        return True

    def search(i: int, placed: int) -> bool:
        if placed == full:
            return True
        key = (placed, tuple(order[max(0, i - b) :]))
        if key in dead:
            return False
        for v in range(n):
            if placed >> v & 1:
                continue
            pos[v] = i
            order.append(v)
            nxt = placed | 1 << v
            if feasible(i + 1, nxt) and search(i + 1, nxt):
                return True
            order.pop()
            pos[v] = -1
        dead.add(key)
        return False

    return order if search(0, 0) else None
