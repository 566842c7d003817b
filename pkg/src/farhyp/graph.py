"""Immutable compressed-adjacency graphs, BFS variants, biconnected blocks, generators.

Vertices are dense ids ``0..n-1``. The adjacency is stored in compressed row
layout (``indptr``/``indices``) with every neighbor list sorted ascending, so
all traversals are deterministic and repeated runs are bit-reproducible.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

#: Sentinel for "not visited" in distance vectors (hop counts are uint32).
INF_DIST = int(np.iinfo(np.uint32).max)


class ParseError(ValueError):
    """Raised for malformed edge-list input."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph over vertex ids ``0..n-1`` in CSR layout."""

    n: int
    m: int
    indptr: np.ndarray   # int64, length n+1
    indices: np.ndarray  # int32, length 2m, sorted within each row

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def degrees(self) -> np.ndarray:
        return (self.indptr[1:] - self.indptr[:-1]).astype(np.int64)

    def edges(self):
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.neighbors(u):
                if u < v:
                    yield u, int(v)

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = int(np.searchsorted(row, v))
        return i < len(row) and row[i] == v

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edges(n: int, edges) -> Graph:
    """Build a Graph from an edge iterable, normalizing to a simple graph.

    Self-loops and duplicate edges are dropped; both directions are derived
    from each undirected edge. Vertex ids must lie in ``0..n-1``.
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                     dtype=np.int64)
    if arr.size == 0:
        arr = arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("edges must be (k, 2) shaped")
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        raise ValueError(f"edge endpoint out of range 0..{n - 1}")
    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    keep = lo < hi  # drops self-loops
    lo, hi = lo[keep], hi[keep]
    if lo.size:
        key = np.unique(lo * n + hi)  # dedupe
        lo, hi = key // n, key % n
    m = int(lo.size)
    src = np.concatenate([lo, hi])
    dst = np.concatenate([hi, lo])
    order = np.lexsort((dst, src))
    indices = dst[order].astype(np.int32)
    counts = np.bincount(src, minlength=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return Graph(n=n, m=m, indptr=indptr, indices=indices)


def parse_edge_list(text) -> tuple[Graph, list[str]]:
    """Parse whitespace-separated edge-list text into a graph plus label map.

    Labels are densely renumbered ``0..n-1`` in first-appearance order. Lines
    starting with ``#`` or ``%`` are comments; self-loops and duplicate edges
    are dropped. Returns ``(graph, labels)`` where ``labels[i]`` is the
    original label of vertex ``i``.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    ids: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    saw_data = False
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped[0] in "#%":
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two labels, got {len(parts)}")
        saw_data = True
        u = ids.setdefault(parts[0], len(ids))
        v = ids.setdefault(parts[1], len(ids))
        edges.append((u, v))
    if not saw_data:
        raise ParseError("empty edge list")
    g = from_edges(len(ids), edges)
    labels = [None] * len(ids)
    for label, i in ids.items():
        labels[i] = label
    return g, labels


def write_edge_list(g: Graph, labels: list[str] | None = None) -> str:
    """Serialize a graph to the edge-list text format (one 'u v' line per edge)."""
    out = [f"# n={g.n} m={g.m}"]
    for u, v in g.edges():
        if labels is not None:
            out.append(f"{labels[u]} {labels[v]}")
        else:
            out.append(f"{u} {v}")
    return "\n".join(out) + "\n"


# --------------------------------------------------------------------------
# Distance vectors and BFS
# --------------------------------------------------------------------------

@dataclass
class DistanceVector:
    """Hop distances from one source; INF_DIST marks unvisited vertices.

    The dist array is never mutated after construction, so the derived views
    below are computed once and cached.
    """

    source: int
    dist: np.ndarray  # uint32, length n
    visited_count: int

    def is_complete(self, n: int) -> bool:
        return self.visited_count == n

    def visited_ids(self) -> np.ndarray:
        """Ascending ids of visited vertices."""
        cached = getattr(self, "_visited_ids", None)
        if cached is None:
            cached = np.flatnonzero(self.dist != np.uint32(INF_DIST))
            self._visited_ids = cached
        return cached

    def dist64(self) -> np.ndarray:
        """The distances as int64 (INF_DIST stays a huge finite value)."""
        cached = getattr(self, "_dist64", None)
        if cached is None:
            cached = self.dist.astype(np.int64)
            self._dist64 = cached
        return cached


@dataclass
class EccVector:
    """Exact eccentricities plus the derived diameter and radius."""

    ecc: np.ndarray  # int32, length n
    diameter: int
    radius: int


def _gather_neighbors(g: Graph, frontier: np.ndarray) -> np.ndarray:
    starts = g.indptr[frontier]
    counts = g.indptr[frontier + 1] - starts
    total = int(counts.sum())
    if total == 0:
        return np.empty(0, dtype=np.int32)
    shift = np.concatenate(([0], np.cumsum(counts)[:-1]))
    gather = np.repeat(starts - shift, counts) + np.arange(total, dtype=np.int64)
    return g.indices[gather]


def bfs(g: Graph, s: int) -> DistanceVector:
    """Exact hop distances from s (level-synchronous frontier expansion)."""
    if not 0 <= s < g.n:
        raise ValueError(f"source {s} out of range")
    dist = np.full(g.n, INF_DIST, dtype=np.uint32)
    dist[s] = 0
    frontier = np.array([s], dtype=np.int64)
    visited = 1
    d = 0
    while frontier.size:
        neigh = _gather_neighbors(g, frontier)
        fresh = np.unique(neigh[dist[neigh] == np.uint32(INF_DIST)])
        if fresh.size == 0:
            break
        d += 1
        dist[fresh] = d
        visited += int(fresh.size)
        frontier = fresh
    return DistanceVector(source=s, dist=dist, visited_count=visited)


def pruned_bfs(g: Graph, x: int, ecc: EccVector, cutoff2: int) -> DistanceVector:
    """BFS from x restricted to vertices v with 2*ecc(v) - 2*d(x,v) >= cutoff2.

    ``cutoff2`` is the doubled half-integer cutoff (2c), keeping everything in
    integers. Only neighbors satisfying the inequality are enqueued, so the
    visited set is exactly the vertices reachable from x through satisfying
    vertices; their distances are exact. With cutoff2 <= -2*diameter the
    condition is vacuous and the result equals plain ``bfs``.
    """
    if not 0 <= x < g.n:
        raise ValueError(f"source {x} out of range")
    ecc2 = ecc.ecc.astype(np.int64) * 2
    dist = np.full(g.n, INF_DIST, dtype=np.uint32)
    dist[x] = 0
    frontier = np.array([x], dtype=np.int64)
    visited = 1
    d = 0
    while frontier.size:
        neigh = _gather_neighbors(g, frontier)
        cand = neigh[dist[neigh] == np.uint32(INF_DIST)]
        d += 1
        # enqueue rule: 2*ecc(v) - 2*d >= 2c
        fresh = np.unique(cand[ecc2[cand] - 2 * d >= cutoff2])
        if fresh.size == 0:
            break
        dist[fresh] = d
        visited += int(fresh.size)
        frontier = fresh
    return DistanceVector(source=x, dist=dist, visited_count=visited)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return bfs(g, 0).visited_count == g.n


# --------------------------------------------------------------------------
# Biconnected decomposition
# --------------------------------------------------------------------------

def biconnected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the biconnected components (blocks), iterative DFS.

    Every edge lies in exactly one block; cut vertices appear in several.
    Blocks are returned with sorted vertex ids, ordered by their smallest
    vertex id. Isolated vertices yield no block.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    indptr, indices = g.indptr, g.indices
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    timer = 0
    edge_stack: list[tuple[int, int]] = []
    blocks: list[list[int]] = []

    def pop_block(u: int, v: int) -> None:
        comp: set[int] = set()
        while True:
            a, b = edge_stack.pop()
            comp.add(a)
            comp.add(b)
            if (a, b) == (u, v):
                break
        blocks.append(sorted(comp))

    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [root]
        nxt = [int(indptr[root])]
        while stack:
            v = stack[-1]
            i = nxt[-1]
            if i < indptr[v + 1]:
                nxt[-1] = i + 1
                w = int(indices[i])
                if disc[w] == -1:
                    parent[w] = v
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append((v, w))
                    stack.append(w)
                    nxt.append(int(indptr[w]))
                elif w != parent[v] and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                nxt.pop()
                u = parent[v]
                if u != -1:
                    if low[v] < low[u]:
                        low[u] = low[v]
                    if low[v] >= disc[u]:
                        pop_block(u, v)
    blocks.sort(key=lambda b: b[0])
    return blocks


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, np.ndarray]:
    """Induced subgraph on `vertices`, renumbered 0..k-1 in ascending id order.

    Returns the subgraph and the array mapping new ids to original ids.
    """
    orig = np.asarray(sorted(vertices), dtype=np.int64)
    remap = {int(v): i for i, v in enumerate(orig)}
    edges = []
    for u in orig:
        for v in g.neighbors(int(u)):
            v = int(v)
            if u < v and v in remap:
                edges.append((remap[int(u)], remap[v]))
    return from_edges(len(orig), edges), orig


def largest_biconnected_component(g: Graph) -> tuple[Graph, np.ndarray]:
    """Induced subgraph of the block with most vertices, plus the id map.

    Ties go to the block with the smallest minimum original vertex id.
    """
    blocks = biconnected_components(g)
    if not blocks:
        raise ValueError("no biconnected component (graph has no edges)")
    best = min(blocks, key=lambda b: (-len(b), b[0]))
    return induced_subgraph(g, best)


# --------------------------------------------------------------------------
# Generators (all deterministic for a fixed seed)
# --------------------------------------------------------------------------

def path(k: int) -> Graph:
    if k < 1:
        raise ValueError("path needs k >= 1")
    return from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycle needs k >= 3")
    return from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def clique(k: int) -> Graph:
    if k < 1:
        raise ValueError("clique needs k >= 1")
    return from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def _grid_edges(p: int, q: int) -> list[tuple[int, int]]:
    edges = []
    for i in range(p):
        for j in range(q):
            v = i * q + j
            if j + 1 < q:
                edges.append((v, v + 1))
            if i + 1 < p:
                edges.append((v, v + q))
    return edges


def grid(p: int, q: int) -> Graph:
    """p x q grid; vertex (i, j) has id i*q + j."""
    if p < 1 or q < 1:
        raise ValueError("grid needs p, q >= 1")
    return from_edges(p * q, _grid_edges(p, q))


def grid_with_deletions(p: int, q: int, fraction: float, seed: int) -> Graph:
    """Grid with floor(fraction*m) uniformly chosen edges removed.

    The result may be disconnected; callers normally extract the largest
    biconnected component.
    """
    if not 0 <= fraction < 1:
        raise ValueError("fraction must be in [0, 1)")
    edges = _grid_edges(p, q)
    k = int(fraction * len(edges))
    rng = random.Random(seed)
    drop = set(rng.sample(range(len(edges)), k))
    kept = [e for i, e in enumerate(edges) if i not in drop]
    return from_edges(p * q, kept)


def random_connected(n: int, m: int, seed: int) -> Graph:
    """Random connected graph: a random spanning tree plus random extra edges."""
    if n < 1:
        raise ValueError("need n >= 1")
    max_m = n * (n - 1) // 2
    if not n - 1 <= m <= max_m:
        raise ValueError(f"need {n - 1} <= m <= {max_m} for n={n}")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        j = rng.randrange(i)
        a, b = order[i], order[j]
        edges.add((min(a, b), max(a, b)))
    while len(edges) < m:
        a = rng.randrange(n)
        b = rng.randrange(n)
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return from_edges(n, sorted(edges))
