"""Shared graph builders for the test suite (all seeded, all deterministic)."""
from __future__ import annotations

import random

from farhyp import graph as graphmod


def random_connected_graph(seed: int, min_n: int = 2, max_n: int = 40,
                           max_m_factor: int = 3) -> graphmod.Graph:
    rng = random.Random(seed)
    n = rng.randrange(min_n, max_n + 1)
    m_hi = min(max_m_factor * n, n * (n - 1) // 2)
    m = rng.randrange(n - 1, m_hi + 1)
    return graphmod.random_connected(n, m, seed)


def random_tree(seed: int, n: int) -> graphmod.Graph:
    return graphmod.random_connected(n, n - 1, seed)


def random_block_graph(seed: int, max_vertices: int = 200) -> graphmod.Graph:
    """Cliques glued tree-like at shared vertices (exactly the 0-hyperbolic graphs)."""
    rng = random.Random(seed)
    size = rng.randrange(2, 6)
    edges = [(i, j) for i in range(size) for j in range(i + 1, size)]
    vertices = list(range(size))
    next_id = size
    while next_id < max_vertices - 6 and rng.random() < 0.9:
        k = rng.randrange(2, 6)
        anchor = rng.choice(vertices)
        members = [anchor] + list(range(next_id, next_id + k - 1))
        next_id += k - 1
        vertices.extend(members[1:])
        edges.extend((min(a, b), max(a, b))
                     for i, a in enumerate(members) for b in members[i + 1:])
    return graphmod.from_edges(next_id, edges)


def two_triangles_shared_vertex() -> graphmod.Graph:
    return graphmod.from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])


NAMED_FAMILIES = {
    "path3": lambda: graphmod.path(3),
    "path10": lambda: graphmod.path(10),
    "cycle4": lambda: graphmod.cycle(4),
    "cycle9": lambda: graphmod.cycle(9),
    "clique4": lambda: graphmod.clique(4),
    "clique8": lambda: graphmod.clique(8),
    "grid22": lambda: graphmod.grid(2, 2),
    "grid34": lambda: graphmod.grid(3, 4),
    "grid57": lambda: graphmod.grid(5, 7),
    "grid66": lambda: graphmod.grid(6, 6),
    "two_triangles": two_triangles_shared_vertex,
}
