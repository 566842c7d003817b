"""Lazy iterator over far-apart pairs in non-increasing distance order.

A vertex u is *v-far* when no neighbor of u is strictly farther from v;
a pair is *far-apart* when the relation holds both ways. The store keeps,
per distance d, a map from vertex u to the sorted list of u-far vertices at
distance d. Filling that map for a vertex costs one BFS and is postponed
until the sweep actually needs it: an unfilled vertex is represented by a
single empty sentinel bucket at its eccentricity level, which is where its
first far-apart partner must appear.

The sweep walks levels from the diameter downward, vertices in ascending id
order, partners in ascending id order, and emits each pair once (u < v).
Confirmed pairs of a finished level are kept in a compact per-level map so
`mates` queries stay cheap; everything else is dropped as soon as the cursor
passes it, which is what keeps memory far below the quadratic pair count.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

import numpy as np

from .graph import DistanceVector, EccVector, Graph, bfs


@dataclass(frozen=True, order=True)
class FarPair:
    u: int
    v: int
    d: int


def far_sets_from_distances(g: Graph, dv: DistanceVector) -> dict[int, list[int]]:
    """Bucket the source-far vertices of a complete distance vector by distance.

    ``bucket[d]`` is the ascending list of vertices at distance d from the
    source with no neighbor at distance d+1. Raises on pruned/incomplete
    vectors.
    """
    if dv.visited_count != g.n:
        raise ValueError("far sets require a complete (unpruned) distance vector")
    if g.n <= 1:
        return {}
    dist = dv.dist.astype(np.int64)
    neigh_dist = dist[g.indices]
    max_neigh = np.maximum.reduceat(neigh_dist, g.indptr[:-1])
    far_ids = np.flatnonzero(max_neigh <= dist)  # excludes the source (its max_neigh >= 1)
    buckets: dict[int, list[int]] = {}
    for v in far_ids:
        buckets.setdefault(int(dist[v]), []).append(int(v))
    return buckets


class FarApartStore:
    """State of the lazy far-apart pair enumeration (single-owner, not thread-safe)."""

    def __init__(self, g: Graph, ecc: EccVector, seed_bfs_results=()):
        self._g = g
        self._ecc = ecc
        # unswept levels: d -> {u: sorted partner list}; [] marks an unfilled sentinel
        self._pending: dict[int, dict[int, list[int]]] = {}
        # partners already reported at the cursor's level (cleared at each level)
        self._reported: dict[int, list[int]] = {}
        # append-only log of every emitted pair, both orientations, in emission
        # order; rows before _level_start are the confirmed finished levels
        self._log_v = np.empty(16, dtype=np.int64)
        self._log_w = np.empty(16, dtype=np.int64)
        self._log_d = np.empty(16, dtype=np.int64)
        self._log_n = 0
        self._level_start = 0
        self._filled = np.zeros(g.n, dtype=bool)
        self._floor = 0
        self._cur_d = ecc.diameter + 1
        self._started = False
        self._exhausted = ecc.diameter < 1
        self._keys: list[int] = []
        self._ki = 0
        self._bucket: list[int] | None = None
        self._pi = 0
        self.bfs_runs = 0
        self._entries = 0
        self.peak_entries = 0
        for u in range(g.n):
            e = int(ecc.ecc[u])
            if e >= 1:
                self._pending.setdefault(e, {})[u] = []
        for dv in seed_bfs_results:
            self.fill(dv)

    # -- observability ------------------------------------------------------

    @property
    def current_distance(self) -> int:
        """Level of the most recently emitted pair (diameter+1 before the first)."""
        return self._cur_d

    @property
    def floor(self) -> int:
        return self._floor

    @property
    def exhausted(self) -> bool:
        return self._exhausted

    @property
    def stored_entries(self) -> int:
        """Partner ids currently stored (each confirmed pair counts twice)."""
        return self._entries

    def retained_pairs(self) -> int:
        """Far-apart pairs retained so far for mates queries."""
        return self._log_n // 2

    # -- filling -------------------------------------------------------------

    def fill(self, dv: DistanceVector) -> None:
        """Insert the far sets of dv.source; no-op when already filled."""
        u = dv.source
        if self._filled[u]:
            return
        if dv.visited_count != self._g.n:
            raise ValueError("fill requires a complete distance vector")
        buckets = far_sets_from_distances(self._g, dv)
        e = int(self._ecc.ecc[u])
        sentinel_level = self._pending.get(e)
        if sentinel_level is not None and not sentinel_level.get(u, [0]):
            del sentinel_level[u]
        for d, lst in buckets.items():
            if self._started and d > self._cur_d:
                continue  # level already swept; its pairs were handled
            if d <= self._floor and not (self._started and d == self._cur_d):
                continue  # below the floor and not needed to finish the level
            self._pending.setdefault(d, {})[u] = lst
            self._entries += len(lst)
        self._filled[u] = True
        self._note_peak()

    def _fill_from_source(self, u: int) -> None:
        self.bfs_runs += 1
        self.fill(bfs(self._g, u))

    def _note_peak(self) -> None:
        if self._entries > self.peak_entries:
            self.peak_entries = self._entries

    # -- iteration -----------------------------------------------------------

    def next_pair(self) -> FarPair | None:
        """The next far-apart pair in the ordering, or None when exhausted."""
        if not self._started:
            self._started = True
            self._advance_level()
        while not self._exhausted:
            level = self._pending.get(self._cur_d, {})
            while self._ki < len(self._keys):
                u = self._keys[self._ki]
                if self._bucket is None:
                    if not self._filled[u]:
                        self._fill_from_source(u)
                    self._bucket = level.get(u, [])
                    self._pi = 0
                bucket = self._bucket
                while self._pi < len(bucket):
                    w = bucket[self._pi]
                    self._pi += 1
                    if w <= u:
                        continue  # (w, u) was decided during w's scan
                    if not self._filled[w]:
                        self._fill_from_source(w)
                    wb = level.get(w)
                    if wb and _contains(wb, u):
                        self._reported.setdefault(u, []).append(w)
                        self._reported.setdefault(w, []).append(u)
                        self._log_pair(u, w)
                        self._entries += 2
                        self._note_peak()
                        return FarPair(u, w, self._cur_d)
                self._ki += 1
                self._bucket = None
            self._advance_level()
        return None

    def __iter__(self):
        while (pair := self.next_pair()) is not None:
            yield pair

    def _log_pair(self, u: int, w: int) -> None:
        if self._log_n + 2 > self._log_v.size:
            grow = self._log_v.size
            self._log_v = np.concatenate([self._log_v, np.empty(grow, np.int64)])
            self._log_w = np.concatenate([self._log_w, np.empty(grow, np.int64)])
            self._log_d = np.concatenate([self._log_d, np.empty(grow, np.int64)])
        self._log_v[self._log_n] = u
        self._log_w[self._log_n] = w
        self._log_v[self._log_n + 1] = w
        self._log_w[self._log_n + 1] = u
        self._log_d[self._log_n:self._log_n + 2] = self._cur_d
        self._log_n += 2

    def _advance_level(self) -> None:
        if self._started and self._cur_d <= self._ecc.diameter:
            # the swept bucket level is dropped; the level's confirmed pairs
            # live on in the log (they are exactly the pairs emitted here)
            old = self._pending.pop(self._cur_d, None)
            if old is not None:
                self._entries -= sum(len(lst) for lst in old.values())
            self._reported = {}
            self._level_start = self._log_n
        d = self._cur_d - 1
        while True:
            if d < max(1, self._floor + 1):
                self._cur_d = d
                self._exhausted = True
                for spent in list(self._pending):
                    lvl = self._pending.pop(spent)
                    self._entries -= sum(len(lst) for lst in lvl.values())
                return
            level = self._pending.get(d)
            if level:
                self._cur_d = d
                self._keys = sorted(level)
                self._ki = 0
                self._bucket = None
                self._pi = 0
                return
            if level is not None:
                del self._pending[d]
            d -= 1

    # -- queries -------------------------------------------------------------

    def mates(self, v: int, d: int) -> list[int]:
        """Far-apart partners of v at distance d among pairs already emitted.

        Only d >= the current pair distance is answerable: lower levels were
        never guaranteed stored.
        """
        if d < self._cur_d:
            raise ValueError(f"mates below the current level {self._cur_d} were not kept")
        if d == self._cur_d:
            return list(self._reported.get(v, ()))
        head_v = self._log_v[:self._level_start]
        sel = (head_v == v) & (self._log_d[:self._level_start] == d)
        return [int(w) for w in self._log_w[:self._level_start][sel]]

    def mates_at_least(self, v: int, d: int) -> list[tuple[int, int]]:
        """(partner, distance) over all emitted far-apart pairs of v at distance >= d."""
        if d < self._cur_d:
            raise ValueError(f"mates below the current level {self._cur_d} were not kept")
        sel = self._log_v[:self._log_n] == v
        return [(int(w), int(dd)) for w, dd in
                zip(self._log_w[:self._log_n][sel], self._log_d[:self._log_n][sel])
                if dd >= d]

    def emitted_rows(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(vertex, partner, distance) rows of every pair emitted so far.

        Both orientations of each pair are present; rows are in emission
        order, so their distances are all >= the current pair's distance.
        """
        n = self._log_n
        return self._log_v[:n], self._log_w[:n], self._log_d[:n]

    def set_floor(self, d_min: int) -> None:
        """Stop storing (and eventually emitting) pairs at distance <= d_min.

        Raising the floor above the cursor's current level is an error; the
        current level always finishes. Unswept levels at or below the floor
        are freed immediately.
        """
        if self._started and d_min > self._cur_d:
            raise ValueError("cannot raise the floor above the current level")
        if d_min <= self._floor:
            return
        self._floor = d_min
        for d in [d for d in self._pending if d <= d_min and d != self._cur_d]:
            lvl = self._pending.pop(d)
            self._entries -= sum(len(lst) for lst in lvl.values())


def _contains(sorted_list: list[int], x: int) -> bool:
    i = bisect_left(sorted_list, x)
    return i < len(sorted_list) and sorted_list[i] == x


def vertices_at_distance_at_least(
    g: Graph, v: int, c: int, far_sets_of_v: dict[int, list[int]]
) -> dict[int, int]:
    """All vertices at distance >= c from v, with distances, without a BFS from v.

    Works backward from the far vertices of v: level L_d starts as the v-far
    vertices at distance d; sweeping levels from ecc(v) down to c+1, each
    vertex's neighbors not yet placed land one level below. Costs
    O(|F_v| + sum of degrees over the result).
    """
    if c <= 0:
        raise ValueError("cutoff must be positive")
    if not far_sets_of_v:
        return {}
    ecc_v = max(far_sets_of_v)
    if c > ecc_v:
        return {}
    level_of: dict[int, int] = {}
    levels: dict[int, list[int]] = {}
    for d in range(c, ecc_v + 1):
        for u in far_sets_of_v.get(d, ()):
            level_of[u] = d
            levels.setdefault(d, []).append(u)
    for d in range(ecc_v, c, -1):
        for u in levels.get(d, ()):
            for w in g.neighbors(u):
                w = int(w)
                if w not in level_of:
                    level_of[w] = d - 1
                    levels.setdefault(d - 1, []).append(w)
    return level_of
