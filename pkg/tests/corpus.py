"""Shared graph corpus with memoised oracle values."""

from __future__ import annotations

import random
from functools import lru_cache

from pathlength import oracle
from pathlength.atfree import permutation_graph
from pathlength.generators import (
    FamilySpec,
    caterpillar,
    generate,
    random_connected,
    random_permutation_model,
)
from pathlength.graph import Graph

RANDOM_COUNT = 200
PERMUTATION_COUNT = 100


def named_graphs() -> dict[str, Graph]:
    out: dict[str, Graph] = {}
    for n in range(3, 9):
        out[f"C{n}"] = generate(FamilySpec("cycle", n))
    for n in range(2, 9):
        out[f"K{n}"] = generate(FamilySpec("clique", n))
        out[f"P{n}"] = generate(FamilySpec("path", n))
    for n in range(3, 9):
        out[f"star{n}"] = generate(FamilySpec("star", n))
    for n in (5, 6, 7, 8):
        out[f"co-C{n}"] = generate(FamilySpec("complement-cycle", n))
    for spine, hair in ((2, 1), (3, 1), (4, 1), (2, 2), (2, 3)):
        out[f"caterpillar{spine}x{hair}"] = caterpillar(spine, hair)
    return out


def random_graphs() -> list[Graph]:
    out = []
    for seed in range(RANDOM_COUNT):
        rng = random.Random(seed)
        n = rng.randint(4, 8)
        out.append(random_connected(n, rng.uniform(0.2, 0.7), seed))
    return out


def permutation_models(count: int = PERMUTATION_COUNT, low: int = 3, high: int = 8) -> list[list[int]]:
    out = []
    for seed in range(count):
        n = random.Random(10_000 + seed).randint(low, high)
        out.append(random_permutation_model(n, seed))
    return out


@lru_cache(maxsize=None)
def corpus() -> tuple[tuple[str, Graph], ...]:
    items = list(named_graphs().items())
    items += [(f"gnp{i}", g) for i, g in enumerate(random_graphs())]
    items += [(f"perm{i}", permutation_graph(m)) for i, m in enumerate(permutation_models())]
    return tuple(items)


def atfree_corpus() -> tuple[tuple[str, Graph], ...]:
    from pathlength.atfree import is_at_free

    return tuple((name, g) for name, g in corpus() if is_at_free(g))


@lru_cache(maxsize=None)
def pl(g: Graph) -> int:
    return oracle.exact_path_length(g)


@lru_cache(maxsize=None)
def pb(g: Graph) -> int:
    return oracle.exact_path_breadth(g)


@lru_cache(maxsize=None)
def ld(g: Graph) -> int:
    return oracle.exact_line_distortion(g)


@lru_cache(maxsize=None)
def bw(g: Graph) -> int:
    return oracle.exact_bandwidth(g)
