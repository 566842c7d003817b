"""Brute-force reference implementations for cross-checking the fast paths.

Everything here favors being obviously correct over being fast: plain deque
BFS, exhaustive pair scans, full distance matrices. Guard thresholds keep
accidental use on large graphs from hanging a test run.
"""
from __future__ import annotations

import random
from collections import deque

import numpy as np

from .farpairs import FarPair
from .graph import Graph

#: brute_hyperbolicity refuses graphs larger than this unless overridden.
DEFAULT_SIZE_LIMIT = 500


def bfs_distances(g: Graph, s: int) -> list[int]:
    """Plain queue BFS; -1 for unreachable vertices."""
    dist = [-1] * g.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in g.neighbors(u):
            v = int(v)
            if dist[v] < 0:
                dist[v] = du + 1
                queue.append(v)
    return dist


def distance_matrix(g: Graph) -> np.ndarray:
    return np.array([bfs_distances(g, s) for s in range(g.n)], dtype=np.int64)


def _far_set(g: Graph, dist: list[int]) -> set[int]:
    """Vertices with no neighbor strictly farther from the BFS source."""
    out = set()
    for v in range(g.n):
        if dist[v] <= 0:
            continue
        if all(dist[int(w)] <= dist[v] for w in g.neighbors(v)):
            out.add(v)
    return out


def brute_far_pairs(g: Graph) -> list[FarPair]:
    """All far-apart pairs via one BFS per vertex (time O(nm), space O(n^2))."""
    far = []
    dists = []
    for u in range(g.n):
        dist = bfs_distances(g, u)
        if min(dist) < 0:
            raise ValueError("graph is not connected")
        dists.append(dist)
        far.append(_far_set(g, dist))
    pairs = []
    for u in range(g.n):
        for v in sorted(far[u]):
            if v > u and u in far[v]:
                pairs.append(FarPair(u, v, dists[u][v]))
    return pairs


def low_memory_far_pairs(g: Graph) -> list[FarPair]:
    """All far-apart pairs with O(n) working space (time O(m^2)).

    For each u, one BFS yields the u-far candidates; then each neighbor w of u
    gets its own BFS and eliminates candidates v with d(w,v) > d(u,v). The
    survivors are exactly the v where u is also v-far. Only two distance
    vectors are alive at any moment.
    """
    pairs = []
    for u in range(g.n):
        dist_u = bfs_distances(g, u)
        if min(dist_u) < 0:
            raise ValueError("graph is not connected")
        candidates = _far_set(g, dist_u)
        for w in g.neighbors(u):
            if not candidates:
                break
            dist_w = bfs_distances(g, int(w))
            candidates = {v for v in candidates if dist_w[v] <= dist_u[v]}
        for v in sorted(candidates):
            if v > u:
                pairs.append(FarPair(u, v, dist_u[v]))
    return pairs


def brute_hyperbolicity(g: Graph, size_limit: int = DEFAULT_SIZE_LIMIT):
    """Max four-point delta over all 4-subsets; returns (2*delta, witness).

    The witness is a tuple (u, v, x, y) of distinct vertices attaining the
    maximum, or None for n < 4.
    """
    n = g.n
    if n > size_limit:
        raise ValueError(f"refusing n={n} > {size_limit}; this oracle is for desk scale")
    if n < 4:
        return 0, None
    dm = distance_matrix(g)
    if dm.min() < 0:
        raise ValueError("graph is not connected")
    upper = np.triu(np.ones((n, n), dtype=bool), k=1)
    best = -1
    witness = None
    for u in range(n):
        for v in range(u + 1, n):
            s1 = dm[u, v] + dm
            s2 = dm[u][:, None] + dm[v][None, :]
            s3 = dm[u][None, :] + dm[v][:, None]
            mx = np.maximum(np.maximum(s1, s2), s3)
            mn = np.minimum(np.minimum(s1, s2), s3)
            delta2 = 2 * mx + mn - (s1 + s2 + s3)  # largest minus second largest
            valid = upper.copy()
            valid[[u, v], :] = False
            valid[:, [u, v]] = False
            delta2[~valid] = -1
            i = int(np.argmax(delta2))
            x, y = divmod(i, n)
            if delta2[x, y] > best:
                best = int(delta2[x, y])
                witness = (u, v, x, y)
    return best, witness


def random_sp_tree(g: Graph, root: int, seed: int) -> list[int]:
    """Parent array of a shortest-path tree with random parent choices."""
    dist = bfs_distances(g, root)
    rng = random.Random(seed)
    parent = [-1] * g.n
    for v in range(g.n):
        if v == root or dist[v] < 0:
            continue
        options = [int(w) for w in g.neighbors(v) if dist[int(w)] == dist[v] - 1]
        parent[v] = rng.choice(options)
    return parent
