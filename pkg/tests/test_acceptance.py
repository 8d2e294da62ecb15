"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s``. Sample counts and
tolerances are fixed here; campaigns are zero-tolerance unless stated.
"""

import random
import time
from contextlib import contextmanager

import pytest

import pccycles as pc
from pccycles.constructions import (
    example1,
    example2,
    proper_complete,
    random_colored,
    random_multipartite_tournament,
)

from oracles import all_dicycles, dicycle_pack_exists, pack_exists


@contextmanager
def criterion(number, title, budget_s):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"CRITERION {number:>2} {title}: FAIL")
        raise
    elapsed = time.perf_counter() - start
    assert elapsed < budget_s, f"budget {budget_s}s exceeded: {elapsed:.1f}s"
    print(f"CRITERION {number:>2} {title}: PASS ({elapsed:.1f}s)")


def test_criterion_01_example1_reproduction():
    with criterion(1, "example1 reproduction", 1.0):
        g = example1()
        assert pc.max_mono_degree(g) == 2
        assert pc.max_pack(g) == 1


def test_criterion_02_example2_reproduction():
    with criterion(2, "example2 family reproduction", 10.0):
        for n in (6, 7, 8, 9, 10):
            g = example2(2, n)
            assert pc.max_mono_degree(g) == n - 3
            packs = pc.max_pack(g)
            assert packs <= 1
            # the mono bound n-3 <= n-2 guarantees at least one short PC cycle
            assert packs == 1


def test_criterion_03_proper_k5_boundary():
    with criterion(3, "proper K5 boundary", 1.0):
        g = proper_complete(5)
        assert pc.max_mono_degree(g) == 1
        assert pc.pack_exact(g, 2) is None


def test_criterion_04_theorem_k2_campaign():
    with criterion(4, "two-disjoint campaign, 10^4 samples", 300.0):
        report = pc.verify_theorem_k2(range(6, 10), 10_000, colors_values=(2, 3), master_seed=7)
        assert report.samples == 10_000
        assert report.passed, report.to_text()


def test_criterion_05_degree_bound_campaigns():
    with criterion(5, "short-cycle and greedy-pack campaigns", 120.0):
        r2 = pc.verify_short_cycle_bound(1000, master_seed=20)
        assert r2.passed, r2.to_text()
        r3 = pc.verify_greedy_bound(1000, master_seed=21)
        assert r3.passed, r3.to_text()


def test_criterion_06_exhaustive_tiny_sweep():
    with criterion(6, "exhaustive K4/K5 sweep", 300.0):
        for n in (4, 5):
            report = pc.exhaustive_tiny(n, 3)
            assert report.passed, report.to_text()


def test_criterion_07_bridge_roundtrip_and_bijection():
    with criterion(7, "bridge round-trip and cycle bijection", 120.0):
        shapes = [(1, 1, 1), (2, 2), (2, 2, 2), (1, 2, 3), (3, 3), (2, 2, 2, 2), (4, 4), (1,) * 7]
        rng = random.Random(1234)
        for i in range(100):
            mt = random_multipartite_tournament(shapes[i % len(shapes)], rng.getrandbits(32))
            bridge = pc.from_multipartite_tournament(mt)
            g = bridge.graph

            back = pc.to_multipartite_tournament(g, bridge.v0, bridge)
            assert back == mt  # arc-matrix identity, bit for bit

            # hub never on a PC cycle; no PC cycle uses a same-part edge
            assert pc.find_short_pc_cycle(g, through=bridge.v0) is None
            pc_cycles = pc.enumerate_pc_cycles(g)
            for cyc in pc_cycles:
                assert bridge.v0 not in cyc
                for j in range(len(cyc)):
                    u, v = cyc[j], cyc[(j + 1) % len(cyc)]
                    assert mt.part_of[u] != mt.part_of[v]

            # dicycle set equals the PC-cycle set, via the correspondence
            mapped = {pc.pc_to_dicycle(mt, bridge, cyc) for cyc in pc_cycles}
            assert mapped == set(all_dicycles(mt))


def test_criterion_08_dicycle_packing_slices():
    with criterion(8, "dicycle packing slices", 300.0):
        r1 = pc.verify_dicycle_packing("general", 1000, master_seed=81)
        assert r1.passed, r1.to_text()
        r2 = pc.verify_dicycle_packing("bipartite", 1000, master_seed=82)
        assert r2.passed, r2.to_text()


def test_criterion_09_oracle_equivalence():
    with criterion(9, "exact packers match naive oracles", 120.0):
        rng = random.Random(999)
        for _ in range(200):
            n = rng.randrange(5, 8)
            g = random_colored(n, rng.randrange(2, 5), rng.getrandbits(32))
            for k in (1, 2):
                assert (pc.pack_exact(g, k) is not None) == pack_exists(g, k)
        shapes = [(1,) * 6, (1,) * 7, (1,) * 8, (2, 2, 2), (3, 3), (2, 3, 3), (4, 4), (2, 2, 2, 2)]
        for i in range(200):
            mt = random_multipartite_tournament(shapes[i % len(shapes)], rng.getrandbits(32))
            for k in (1, 2):
                assert (pc.pack_disjoint_dicycles(mt, k) is not None) == dicycle_pack_exists(mt, k)


def test_criterion_10_structural_validators():
    with criterion(10, "partition validators hold everywhere", 120.0):
        rng = random.Random(4040)
        gallai_checked = 0
        anchored_checked = 0
        for trial in range(400):
            colors = rng.choice((1, 2, 2, 3))
            n = rng.randrange(3, 9)
            g = random_colored(n, colors, rng.getrandbits(32))
            gp = pc.gallai_partition(g)
            if gp is not None:
                assert pc.validate_gallai(g, gp) is None
                gallai_checked += 1
            mq = pc.gallai_partition(g, minimize_q=True)
            if mq is not None:
                assert pc.validate_gallai(g, mq) is None
        shapes = [(1, 1, 1), (2, 2), (2, 2, 2), (1, 2, 3), (3, 3), (1,) * 6]
        while anchored_checked < 100:
            mt = random_multipartite_tournament(
                shapes[anchored_checked % len(shapes)], rng.getrandbits(32)
            )
            bridge = pc.from_multipartite_tournament(mt)
            g = bridge.graph
            if pc.find_monochromatic_cut(g) is not None:
                continue
            ap = pc.anchored_partition(g, bridge.v0)
            assert pc.validate_anchored(g, ap) is None
            anchored_checked += 1
        assert gallai_checked >= 100


def test_criterion_11_conjecture_hunt_completes():
    with criterion(11, "open-conjecture hunt completes and replays", 300.0):
        report = pc.hunt_conjecture(range(9, 12), 3, 1000, master_seed=110)
        assert report.samples >= 1000
        # zero or more candidates; each must carry its structural checklist
        # and replay to a failure from its recorded spec
        for violation in report.violations:
            assert "checklist" in violation.detail
            assert pc.replay_violation(violation)
        record = report.to_json()
        assert record  # structured record serializes


def test_criterion_12_determinism_across_workers():
    with criterion(12, "byte-identical reports for any worker count", 120.0):
        campaigns = [
            lambda w: pc.verify_theorem_k2(range(7, 10), 200, master_seed=3, workers=w),
            lambda w: pc.verify_short_cycle_bound(200, master_seed=3, workers=w),
            lambda w: pc.verify_greedy_bound(200, master_seed=3, workers=w),
            lambda w: pc.hunt_conjecture(range(9, 12), 3, 100, master_seed=3, workers=w),
            lambda w: pc.verify_dicycle_packing("general", 100, master_seed=3, workers=w),
            lambda w: pc.verify_dicycle_packing("bipartite", 100, master_seed=3, workers=w),
        ]
        for run_campaign in campaigns:
            reference = run_campaign(1).to_json()
            for workers in (2, 3):
                assert run_campaign(workers).to_json() == reference
        # the enumerative and single-instance campaigns re-run identically too
        assert pc.exhaustive_tiny(4, 3).to_json() == pc.exhaustive_tiny(4, 3).to_json()
        mt = random_multipartite_tournament((1,) * 10, 12, min_out=4)
        assert (
            pc.verify_proposition_pair(mt, 4, 3, (), 2).to_json()
            == pc.verify_proposition_pair(mt, 4, 3, (), 2).to_json()
        )
