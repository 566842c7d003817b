"""Acceptance suite: one test per criterion, each printing its PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s`. Criterion 10 needs real
dataset files (FARHYP_DATA_DIR) and, for the regenerated-grid percentage,
FARHYP_SLOW=1; it reports SKIP otherwise.
"""
from __future__ import annotations

import os
import random
import time
from contextlib import contextmanager

import numpy as np
import pytest

from farhyp import graph as G
from farhyp.eccentricity import all_eccentricities
from farhyp.farpairs import FarApartStore, far_sets_from_distances, vertices_at_distance_at_least
from farhyp.hyperbolicity import HyperbolicityOptions, run
from farhyp.oracle import (
    bfs_distances,
    brute_far_pairs,
    brute_hyperbolicity,
    low_memory_far_pairs,
    random_sp_tree,
)

from conftest import NAMED_FAMILIES, random_block_graph, random_connected_graph, random_tree


@contextmanager
def criterion(num: int, name: str):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        verdict = "SKIP" if exc.__class__.__name__ == "Skipped" else "FAIL"
        print(f"criterion {num:02d} ({name}): {verdict} [{time.perf_counter() - start:.1f}s]")
        raise
    print(f"criterion {num:02d} ({name}): PASS [{time.perf_counter() - start:.1f}s]")


def enumerate_far_pairs(g):
    store = FarApartStore(g, all_eccentricities(g))
    return list(store), store


def test_criterion_01_hyperbolicity_oracle_equivalence():
    with criterion(1, "oracle equivalence: hyperbolicity"):
        start = time.perf_counter()
        for seed in range(500):
            g = random_connected_graph(seed, min_n=4, max_n=40)
            got = run(g).delta2
            want, _ = brute_hyperbolicity(g)
            assert got == want, f"seed {seed}: {got} != {want}"
        assert time.perf_counter() - start < 120


def test_criterion_02_far_pairs_oracle_equivalence():
    with criterion(2, "oracle equivalence: far pairs"):
        start = time.perf_counter()
        for seed in range(500):
            g = random_connected_graph(seed, min_n=2, max_n=60)
            pairs, _ = enumerate_far_pairs(g)
            brute = brute_far_pairs(g)
            assert sorted(pairs) == sorted(brute), f"seed {seed}"
            assert sorted(pairs) == sorted(low_memory_far_pairs(g)), f"seed {seed}"
            dists = [p.d for p in pairs]
            assert dists == sorted(dists, reverse=True), f"seed {seed}: order"
        assert time.perf_counter() - start < 120


def test_criterion_03_structural_claims():
    with criterion(3, "structural claims: grids, cliques, diameter pairs"):
        start = time.perf_counter()
        for p in range(2, 13):
            for q in range(2, 13):
                pairs, _ = enumerate_far_pairs(G.grid(p, q))
                assert len(pairs) == 2, f"grid({p},{q}) gave {len(pairs)} pairs"
        for k in range(2, 21):
            pairs, _ = enumerate_far_pairs(G.clique(k))
            assert len(pairs) == k * (k - 1) // 2, f"clique({k})"
        for seed in range(25):
            g = random_connected_graph(seed, max_n=30)
            dm = [bfs_distances(g, s) for s in range(g.n)]
            diam = max(map(max, dm))
            want = {(u, v) for u in range(g.n) for v in range(u + 1, g.n)
                    if dm[u][v] == diam}
            pairs, _ = enumerate_far_pairs(g)
            assert want <= {(p.u, p.v) for p in pairs}, f"seed {seed}"
        assert time.perf_counter() - start < 10


def test_criterion_04_block_graphs_zero():
    with criterion(4, "trees and block graphs are 0-hyperbolic"):
        start = time.perf_counter()
        for seed in range(12):
            n = 20 + 15 * seed  # up to 185
            assert run(random_tree(seed, n)).delta2 == 0, f"tree seed {seed}"
        for seed in range(12):
            g = random_block_graph(seed, max_vertices=200)
            assert run(g).delta2 == 0, f"block graph seed {seed}"
        assert time.perf_counter() - start < 10


def test_criterion_05_grid_hyperbolicity():
    with criterion(5, "grid hyperbolicity small oracle + engineered 300x300"):
        for k in range(2, 7):
            g = G.grid(k, k)
            assert run(g).delta2 == brute_hyperbolicity(g)[0] == 2 * (k - 1)
        start = time.perf_counter()
        rep = run(G.grid(300, 300))
        elapsed = time.perf_counter() - start
        assert rep.delta2 == 2 * 299
        assert elapsed < 60, f"grid(300,300) took {elapsed:.1f}s"


def test_criterion_06_option_invariance():
    with criterion(6, "option invariance: heuristic x pruning x cache size"):
        import itertools
        configs = [
            HyperbolicityOptions(cache_capacity=cap, use_heuristic=h, use_pruning=p)
            for h, p, cap in itertools.product((True, False), (True, False), (2, 1000))
        ]
        for seed in range(100):
            g = random_connected_graph(seed, min_n=4, max_n=40)
            values = {run(g, o).delta2 for o in configs}
            assert len(values) == 1, f"seed {seed}: {values}"
        for name, make in NAMED_FAMILIES.items():
            g = make()
            values = {run(g, o).delta2 for o in configs}
            assert len(values) == 1, name


def test_criterion_07_pruned_bfs_properties():
    with criterion(7, "pruned BFS: filtered oracle, distances, acceptable subset"):
        from collections import deque

        def filtered_oracle(g, x, ecc, cutoff2):
            dist = {x: 0}
            queue = deque([x])
            while queue:
                u = queue.popleft()
                for v in g.neighbors(u):
                    v = int(v)
                    if v not in dist and 2 * int(ecc.ecc[v]) - 2 * (dist[u] + 1) >= cutoff2:
                        dist[v] = dist[u] + 1
                        queue.append(v)
            return dist

        rng = random.Random(0)
        for seed in range(200):
            g = random_connected_graph(seed, max_n=40)
            ecc = all_eccentricities(g)
            full = {}
            for x in {rng.randrange(g.n) for _ in range(3)}:
                full[x] = G.bfs(g, x).dist
                for cutoff2 in (-2 * ecc.diameter, -3, 0, 2, 5):
                    dv = G.pruned_bfs(g, x, ecc, cutoff2)
                    got = {int(v): int(dv.dist[v]) for v in dv.visited_ids()}
                    assert got == filtered_oracle(g, x, ecc, cutoff2), (seed, x, cutoff2)
                    for v, d in got.items():
                        assert d == int(full[x][v]), (seed, x, cutoff2, v)
        # acceptable must be contained in (and classified identically to) the
        # pruned visited sets: enforced per pair by the instrumented runs
        for seed in range(60):
            g = random_connected_graph(seed, min_n=4, max_n=30)
            run(g, HyperbolicityOptions(check_invariants=True))


def test_criterion_08_eccentricity_exactness():
    with criterion(8, "eccentricity equals the n-BFS oracle"):
        for seed in range(200):
            g = random_connected_graph(seed, max_n=200, max_m_factor=3)
            got = all_eccentricities(g).ecc.tolist()
            want = [max(bfs_distances(g, s)) for s in range(g.n)]
            assert got == want, f"seed {seed}"
        for name, make in NAMED_FAMILIES.items():
            g = make()
            got = all_eccentricities(g).ecc.tolist()
            assert got == [max(bfs_distances(g, s)) for s in range(g.n)], name


def test_criterion_09_reverse_distance_retrieval():
    with criterion(9, "reverse sweep from far vertices + leaf bound"):
        for seed in range(100):
            g = random_connected_graph(seed, max_n=60)
            rng = random.Random(seed)
            for v in range(g.n):
                dist = bfs_distances(g, v)
                sets = far_sets_from_distances(g, G.bfs(g, v))
                for c in range(1, max(dist) + 1):
                    want = {u: d for u, d in enumerate(dist) if d >= c}
                    got = vertices_at_distance_at_least(g, v, c, sets)
                    assert got == want, (seed, v, c)
            v = rng.randrange(g.n)
            far_total = sum(len(lst) for lst in
                            far_sets_from_distances(g, G.bfs(g, v)).values())
            for tree_seed in (0, 1):
                parent = random_sp_tree(g, v, tree_seed)
                internal = {p for p in parent if p >= 0}
                leaves = sum(1 for u in range(g.n) if u != v and u not in internal)
                assert leaves >= far_total, (seed, v, tree_seed)


def _load_dataset(data_dir: str, stem: str):
    for name in (stem, stem + ".txt", stem + ".edges"):
        path = os.path.join(data_dir, name)
        if os.path.exists(path):
            with open(path, "rb") as fh:
                g, _ = G.parse_edge_list(fh.read())
            return g
    return None


def test_criterion_10_dataset_spot_checks():
    with criterion(10, "dataset spot checks (optional)"):
        data_dir = os.environ.get("FARHYP_DATA_DIR", "data")
        expected = {
            "facebook_combined": 3,   # delta 1.5
            "p2p-Gnutella09": 6,      # delta 3.0
            "CAIDA_as_20000102": 5,   # delta 2.5
        }
        checked = 0
        for stem, delta2 in expected.items():
            g = _load_dataset(data_dir, stem)
            if g is None:
                continue
            sub, _ = G.largest_biconnected_component(g)
            if stem == "CAIDA_as_20000102":
                assert (sub.n, sub.m) == (4009, 10101)
            rep = run(sub)
            assert rep.delta2 == delta2, f"{stem}: {rep.delta2} != {delta2}"
            checked += 1

        slow = os.environ.get("FARHYP_SLOW") == "1"
        if slow:
            g = G.grid_with_deletions(301, 301, 0.10, 42)
            sub, _ = G.largest_biconnected_component(g)
            assert 80_000 <= sub.n <= 90_601  # magnitude only; exact count is seed-dependent
            pairs, _ = enumerate_far_pairs(sub)
            pct = 100 * len(pairs) / (sub.n * (sub.n - 1) / 2)
            assert 0.02 <= pct <= 0.08, f"far pair percentage {pct:.4f}"
            checked += 1
        if checked == 0:
            pytest.skip("no dataset files (FARHYP_DATA_DIR) and FARHYP_SLOW not set")


def test_criterion_11_memory_behavior():
    with criterion(11, "iterator memory stays O(1) on grids"):
        reports = {}
        for k in (60, 300):
            rep = run(G.grid(k, k), HyperbolicityOptions(use_heuristic=False))
            assert rep.delta2 == 2 * (k - 1)
            assert rep.retained_pairs == 2, f"grid({k},{k}) retained {rep.retained_pairs}"
            assert rep.pairs_emitted == 2
            assert rep.peak_store_entries <= 64
            reports[k] = rep
        # the peak is independent of the grid size: no quadratic (or even linear) growth
        assert reports[60].peak_store_entries == reports[300].peak_store_entries
