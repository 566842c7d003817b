"""Hyperbolicity from the far-apart iterator, with pruning and a BFS cache.

All delta arithmetic uses the doubled value 2*delta, which is always an
integer for hop-count metrics, so every comparison below is exact integer
arithmetic. The half-integer constants of the pruning inequalities are
likewise doubled once and documented next to their use.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .eccentricity import all_eccentricities
from .farpairs import FarApartStore
from .graph import INF_DIST, DistanceVector, EccVector, Graph, bfs, pruned_bfs


def delta4_doubled(d_uv: int, d_xy: int, d_ux: int, d_vy: int, d_uy: int, d_vx: int) -> int:
    """2*delta of a 4-tuple: largest minus second largest of the three sums
    S1 = d(u,v)+d(x,y), S2 = d(u,x)+d(v,y), S3 = d(u,y)+d(v,x)."""
    dists = (d_uv, d_xy, d_ux, d_vy, d_uy, d_vx)
    if any(d < 0 or d >= INF_DIST for d in dists):
        raise ValueError("delta4 requires six finite distances")
    s = sorted((d_uv + d_xy, d_ux + d_vy, d_uy + d_vx))
    return s[2] - s[1]


class BfsCache:
    """Bounded map source -> distance vector with age-based LRU eviction.

    A counter tau advances on every cache hit and every insertion; each entry
    remembers the counter value of its last touch, and eviction removes the
    entry with the smallest one.
    """

    def __init__(self, capacity: int):
        if capacity < 0:
            raise ValueError("capacity must be >= 0")
        self.capacity = capacity
        self._entries: dict[int, list] = {}  # x -> [DistanceVector, age]
        self._tau = 0
        self.hits = 0
        self.misses = 0

    def __len__(self) -> int:
        return len(self._entries)

    def get(self, x: int) -> Optional[DistanceVector]:
        entry = self._entries.get(x)
        if entry is None:
            self.misses += 1
            return None
        self.hits += 1
        self._tau += 1
        entry[1] = self._tau
        return entry[0]

    def put(self, x: int, dv: DistanceVector) -> None:
        if self.capacity == 0:
            return
        self._tau += 1
        if len(self._entries) >= self.capacity and x not in self._entries:
            oldest = min(self._entries, key=lambda v: self._entries[v][1])
            del self._entries[oldest]
        self._entries[x] = [dv, self._tau]

    def ages(self) -> dict[int, int]:
        """Snapshot of entry ages (for tests and diagnostics)."""
        return {x: e[1] for x, e in self._entries.items()}


def cache_get_or_compute(
    cache: BfsCache,
    g: Graph,
    x: int,
    ecc: EccVector,
    cutoff2: int,
    use_pruning: bool = True,
) -> DistanceVector:
    """Cached distance vector from x, computing a pruned BFS on a miss.

    A hit is returned as-is: the loop only ever shrinks the required visited
    set (pair distances fall, the lower bound rises), so an earlier vector is
    always a superset of what the current pair needs.
    """
    dv = cache.get(x)
    if dv is not None:
        return dv
    dv = pruned_bfs(g, x, ecc, cutoff2) if use_pruning else bfs(g, x)
    cache.put(x, dv)
    return dv


@dataclass
class HyperbolicityOptions:
    cache_capacity: int = 1000
    use_heuristic: bool = True
    use_pruning: bool = True
    time_budget: Optional[float] = None
    check_invariants: bool = False


@dataclass
class HyperbolicityReport:
    delta2: int
    witness: Optional[tuple[int, int, int, int]]
    pairs_emitted: int = 0
    pairs_evaluated: int = 0
    tuples_tested: int = 0
    bfs_runs: int = 0
    cache_hits: int = 0
    cache_misses: int = 0
    peak_store_entries: int = 0
    retained_pairs: int = 0
    peak_memory_bytes: int = 0
    interrupted: bool = False
    bracket2: Optional[tuple[int, int]] = None  # (2*lower, 2*upper) when interrupted

    @property
    def delta(self) -> float:
        return self.delta2 / 2


def lower_bound_heuristic(
    g: Graph,
    ecc: EccVector,
    seed_bfs_results,
    on_bfs=None,
    cap: int = 64,
):
    """Cheap sound lower bound: delta4 over pairs of (source, farthest) pairs.

    Every BFS of the eccentricity pass contributes the pair (source, farthest
    vertex). The most distant `cap` pairs are kept; partners without a known
    distance vector get one extra BFS each (reported through on_bfs so the
    vectors can seed the far-apart store). Any 4-tuple evaluation is a valid
    lower bound, so this never overshoots.
    """
    vectors: dict[int, DistanceVector] = {dv.source: dv for dv in seed_bfs_results}
    if g.n < 4:
        return 0, None
    pairs = []
    seen_pairs = set()
    for src in sorted(vectors):
        dist = vectors[src].dist
        u = int(np.argmax(dist == dist.max()))  # smallest id among the farthest
        a, b = (src, u) if src < u else (u, src)
        if a != b and (a, b) not in seen_pairs:
            seen_pairs.add((a, b))
            pairs.append((int(dist[u]), a, b))
    pairs.sort(key=lambda t: (-t[0], t[1], t[2]))
    pairs = pairs[:cap]
    for _, a, b in pairs:
        for ep in (a, b):
            if ep not in vectors:
                dv = bfs(g, ep)
                vectors[ep] = dv
                if on_bfs is not None:
                    on_bfs(ep, dv)
    best = -1
    witness = None
    for i in range(len(pairs)):
        d_ab, a, b = pairs[i]
        da, db = vectors[a].dist, vectors[b].dist
        for j in range(i + 1, len(pairs)):
            d_cd, c, d = pairs[j]
            if c in (a, b) or d in (a, b):
                continue
            cand = delta4_doubled(
                d_ab, d_cd,
                int(da[c]), int(db[d]),
                int(da[d]), int(db[c]),
            )
            if cand > best:
                best = cand
                witness = (a, b, c, d)
    if best < 0:
        return 0, None
    return best, witness


def compute_acc_val(
    d_x: DistanceVector,
    d_y: DistanceVector,
    d_xy: int,
    ecc: EccVector,
    delta2_lower: int,
    seen: np.ndarray,
    dist_center: np.ndarray,
):
    """Classify vertices for the current pair (x, y) and lower bound.

    Candidates are taken from the smaller of the two visited sets (every
    vertex that can matter is visited by both pruned searches). With D2 the
    doubled lower bound, a vertex v is *skippable* when any of these holds,
    written in exact integer form (original inequalities use delta_L = D2/2):

      1. v never appeared in an earlier far-apart pair (seen[v] is false);
      2. 2*min(d(x,v), d(y,v)) <= D2;
      3. 2*ecc(v) - d(x,v) - d(y,v) <  2*D2 + 2 - d(x,y);
      4. 2*ecc(v) + 2*d(x,y) - 3*D2 - 3 < 2*max(d(x,v), d(y,v)).

    Acceptable = not skippable. An acceptable v is additionally *valuable*
    (worth an outer-loop slot) when 2*d(c,v) - D2 > d(x,v) + d(y,v) - d(x,y)
    for the fixed low-eccentricity center c.

    Returns (acceptable boolean mask over all vertices, ascending valuable ids).
    """
    if d_x.visited_count <= d_y.visited_count:
        cand = d_x.visited_ids()
    else:
        cand = d_y.visited_ids()
    dxv = d_x.dist64()[cand]
    dyv = d_y.dist64()[cand]
    eccv = ecc.ecc[cand].astype(np.int64)
    inf = np.int64(INF_DIST)
    lo = np.minimum(dxv, dyv)
    hi = np.maximum(dxv, dyv)
    ok = (
        seen[cand]
        & (dxv != inf)
        & (dyv != inf)
        & (2 * lo > delta2_lower)
        & (2 * eccv - dxv - dyv >= 2 * delta2_lower + 2 - d_xy)
        & (2 * eccv + 2 * d_xy - 3 * delta2_lower - 3 >= 2 * hi)
    )
    acceptable_ids = cand[ok]
    acceptable = np.zeros(len(seen), dtype=bool)
    acceptable[acceptable_ids] = True
    dc = dist_center[acceptable_ids].astype(np.int64)
    val = 2 * dc - delta2_lower > dxv[ok] + dyv[ok] - d_xy
    valuable = [int(v) for v in acceptable_ids[val]]
    return acceptable, valuable


def _pruning_cutoff2(delta2_lower: int, d_xy: int) -> int:
    # doubled form of c = 3*delta_L - 3/2 - d(x,y)
    return 3 * delta2_lower - 3 - 2 * d_xy


def run(g: Graph, options: Optional[HyperbolicityOptions] = None) -> HyperbolicityReport:
    """Exact 2*delta(G) of a connected graph via far-apart pair enumeration.

    Pipeline: eccentricity pass (seeding the far-apart store), optional
    heuristic lower bound, then the pair loop: stop once the pair distance is
    at most the doubled lower bound, otherwise classify vertices against the
    pair's (cached, pruned) distance vectors and test 4-tuples built from
    valuable vertices and their previously emitted mates. The store floor
    follows the lower bound so dead levels are never stored.

    With a time budget the report is a bracket [delta2/2, d/2] instead.
    """
    opts = options or HyperbolicityOptions()
    report = HyperbolicityReport(delta2=0, witness=None)
    if g.n < 4:
        return report

    seeds: list[DistanceVector] = []

    def hook(_source: int, dv: DistanceVector) -> None:
        seeds.append(dv)

    ecc = all_eccentricities(g, on_bfs=hook)
    delta2_lower = 0
    witness = None
    if opts.use_heuristic:
        delta2_lower, witness = lower_bound_heuristic(g, ecc, seeds, on_bfs=hook)

    store = FarApartStore(g, ecc, seeds)
    report.bfs_runs = len(seeds)
    if delta2_lower > 0:
        store.set_floor(delta2_lower)

    center = int(np.argmin(ecc.ecc))
    by_source = {dv.source: dv for dv in seeds}
    if center in by_source:
        dist_center = by_source[center].dist
    else:
        dist_center = bfs(g, center).dist
        report.bfs_runs += 1

    cache = BfsCache(opts.cache_capacity)
    seen = np.zeros(g.n, dtype=bool)
    started = time.monotonic()

    while True:
        pair = store.next_pair()
        if pair is None:
            break
        report.pairs_emitted += 1
        x, y, d_xy = pair.u, pair.v, pair.d
        if d_xy <= delta2_lower:
            break  # no remaining 4-tuple can beat the bound
        if opts.time_budget is not None and time.monotonic() - started > opts.time_budget:
            report.interrupted = True
            report.bracket2 = (delta2_lower, d_xy)
            break
        report.pairs_evaluated += 1
        cutoff2 = _pruning_cutoff2(delta2_lower, d_xy)
        d_x = cache_get_or_compute(cache, g, x, ecc, cutoff2, opts.use_pruning)
        d_y = cache_get_or_compute(cache, g, y, ecc, cutoff2, opts.use_pruning)
        acceptable, valuable = compute_acc_val(
            d_x, d_y, d_xy, ecc, delta2_lower, seen, dist_center
        )
        if opts.check_invariants:
            _assert_classification(g, x, y, d_xy, ecc, delta2_lower, seen,
                                   dist_center, d_x, d_y, acceptable)
        if valuable:
            dx64 = d_x.dist64()
            dy64 = d_y.dist64()
            val_mask = np.zeros(g.n, dtype=bool)
            val_mask[valuable] = True
            va, wa, da = store.emitted_rows()
            # one vector delta4 over all (valuable v, acceptable w) mate rows;
            # emission order guarantees d(v,w) >= d(x,y), acceptance guarantees
            # every distance below is finite
            keep = val_mask[va] & acceptable[wa]
            if keep.any():
                v_sel = va[keep]
                w_sel = wa[keep]
                d_vw = da[keep]
                report.tuples_tested += int(v_sel.size)
                s1 = d_xy + d_vw
                s2 = dx64[v_sel] + dy64[w_sel]
                s3 = dx64[w_sel] + dy64[v_sel]
                mx = np.maximum(np.maximum(s2, s3), s1)
                mn = np.minimum(np.minimum(s2, s3), s1)
                cands = 2 * mx + mn - (s1 + s2 + s3)  # largest minus second largest
                if opts.check_invariants:
                    s1_largest = (s1 >= s2) & (s1 >= s3)
                    bound = np.minimum(d_vw, d_xy)
                    assert np.all(cands[s1_largest] <= bound[s1_largest]), \
                        "delta exceeded the pair-distance bound"
                i = int(np.argmax(cands))
                if int(cands[i]) > delta2_lower:
                    delta2_lower = int(cands[i])
                    witness = (x, y, int(v_sel[i]), int(w_sel[i]))
        seen[x] = True
        seen[y] = True
        # the floor is a storage optimization only; cap it at the cursor so the
        # current level can always finish (the termination guard is authoritative)
        new_floor = min(delta2_lower, store.current_distance)
        if new_floor > store.floor:
            store.set_floor(new_floor)
        mem = store.stored_entries * 8 + len(cache) * g.n * 4
        if mem > report.peak_memory_bytes:
            report.peak_memory_bytes = mem

    report.delta2 = delta2_lower
    report.witness = witness
    report.bfs_runs += store.bfs_runs + cache.misses
    report.cache_hits = cache.hits
    report.cache_misses = cache.misses
    report.peak_store_entries = store.peak_entries
    report.retained_pairs = store.retained_pairs()
    return report


def _assert_classification(g, x, y, d_xy, ecc, delta2_lower, seen, dist_center,
                           d_x, d_y, acceptable) -> None:
    """Instrumented check: the classification from pruned vectors must equal
    the one computed from full BFS vectors, and every acceptable vertex must
    have been visited by both pruned searches."""
    full_x = bfs(g, x)
    full_y = bfs(g, y)
    ref_acceptable, _ = compute_acc_val(
        full_x, full_y, d_xy, ecc, delta2_lower, seen, dist_center
    )
    assert np.array_equal(acceptable, ref_acceptable), "classification drifted under pruning"
    ids = np.flatnonzero(ref_acceptable)
    assert np.all(d_x.dist[ids] != np.uint32(INF_DIST)), "acceptable vertex unvisited from x"
    assert np.all(d_y.dist[ids] != np.uint32(INF_DIST)), "acceptable vertex unvisited from y"
