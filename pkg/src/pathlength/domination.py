"""k-dominating shortest paths and k-dominating pairs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, bfs_distances, component_labels, disk


class InvalidPathError(ValueError):
    pass


@dataclass(frozen=True)
class DominatingPath:
    vertices: tuple[int, ...]
    radius: int

    def certificate(self) -> dict:
        return {"path": list(self.vertices), "k": self.radius}


@dataclass(frozen=True)
class DominatingPair:
    x: int
    y: int
    k: int

    def certificate(self) -> dict:
        return {"pair": [self.x, self.y], "k": self.k}


def shortest_path(g: Graph, x: int, y: int) -> list[int]:
    """Shortest x,y-path; each step back from ``y`` takes the smallest-id predecessor."""
    row = g.dist[x]
    path = [y]
    while path[-1] != x:
        v = path[-1]
        path.append(next(w for w in g.adjacency[v] if row[w] == row[v] - 1))
    path.reverse()
    return path


def path_domination_radius(g: Graph, path: Sequence[int]) -> int:
    return max(bfs_distances(g, path))


def check_dominating_path(g: Graph, p: DominatingPath) -> None:
    """Raise :class:`InvalidPathError` unless ``p`` is a shortest path with the stated radius."""
    vs = p.vertices
    if not vs:
        raise InvalidPathError("empty path")
    for a, b in zip(vs, vs[1:]):
        if not g.has_edge(a, b):
            raise InvalidPathError(f"{a}-{b} is not an edge")
    if len(vs) - 1 != g.dist[vs[0]][vs[-1]]:
        raise InvalidPathError("path is not a shortest path between its endpoints")
    actual = path_domination_radius(g, vs)
    if actual != p.radius:
        raise InvalidPathError(f"stated radius {p.radius} but actual radius is {actual}")


def _farthest(g: Graph, s: int) -> int:
    row = g.dist[s]
    return row.index(max(row))


def double_bfs_dominating_path(g: Graph) -> DominatingPath:
    """Two BFS sweeps from vertex 0; the radius is at most twice the path-length."""
    x = _farthest(g, 0)
    y = _farthest(g, x)
    path = shortest_path(g, x, y)
    return DominatingPath(tuple(path), path_domination_radius(g, path))


def best_dominating_shortest_path(g: Graph) -> DominatingPath:
    """One shortest path per pair x < y; keep the smallest radius (first pair wins ties).

    The radius is at most the path-length of ``g``.
    """
    best: DominatingPath | None = None
    for x in range(g.n):
        for y in range(x + 1, g.n):
            path = shortest_path(g, x, y)
            k = path_domination_radius(g, path)
            if best is None or k < best.radius:
                best = DominatingPath(tuple(path), k)
                if k == 0:
                    return best
    assert best is not None
    return best


def separation_matrix(g: Graph, k: int) -> list[list[int]]:
    """Row ``w`` labels the components of ``g`` minus the disk of radius ``k`` around ``w``."""
    return [component_labels(g, disk(g, w, k)) for w in range(g.n)]


def is_dominating_pair(g: Graph, x: int, y: int, k: int, matrix: list[list[int]] | None = None) -> bool:
    """Every x,y-path is k-dominating iff each far vertex's k-disk separates x from y."""
    if matrix is None:
        matrix = separation_matrix(g, k)
    dx, dy = g.dist[x], g.dist[y]
    for w in range(g.n):
        if dx[w] > k and dy[w] > k and matrix[w][x] == matrix[w][y]:
            return False
    return True


def _first_dominating_pair(g: Graph, k: int) -> tuple[int, int] | None:
    matrix = separation_matrix(g, k)
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if is_dominating_pair(g, x, y, k, matrix):
                return x, y
    return None


def min_dominating_pair(g: Graph) -> DominatingPair:
    """Minimum k admitting a k-dominating pair, found by binary search on k."""
    lo, hi = 0, g.radius
    while lo < hi:
        mid = (lo + hi) // 2
        if _first_dominating_pair(g, mid) is not None:
            hi = mid
        else:
            lo = mid + 1
    pair = _first_dominating_pair(g, lo)
    assert pair is not None
    return DominatingPair(pair[0], pair[1], lo)


def branch_sets(g: Graph, path: Sequence[int]) -> list[list[int]]:
    """Partition V by the branch of the BFS(path) tree containing each vertex.

    Path vertices root their own branch; every other vertex hangs off its
    smallest-id neighbour one step closer to the path. Branch ``i`` belongs
    to ``path[i]`` and is returned sorted by id.
    """
    index = {v: i for i, v in enumerate(path)}
    dist = bfs_distances(g, path)
    root = [-1] * g.n
    for v in sorted(range(g.n), key=lambda v: (dist[v], v)):
        if v in index:
            root[v] = index[v]
        else:
            parent = next(w for w in g.adjacency[v] if dist[w] == dist[v] - 1)
            root[v] = root[parent]
    sets: list[list[int]] = [[] for _ in path]
    for v in range(g.n):
        sets[root[v]].append(v)
    return sets
