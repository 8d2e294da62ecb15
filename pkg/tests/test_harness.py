import json
import random

import pytest

from pccycles import (
    Violation,
    check_min_counterexample,
    verify_dicycle_packing,
    exhaustive_tiny,
    find_short_pc_cycle,
    from_multipartite_tournament,
    hunt_conjecture,
    max_mono_degree,
    pack_exact,
    replay_violation,
    serialize_ecg,
    verify_short_cycle_bound,
    verify_greedy_bound,
    verify_proposition_pair,
    verify_theorem_k2,
)
from pccycles.constructions import (
    cascade,
    example1,
    proper_complete,
    random_colored,
    random_multipartite_tournament,
)
from pccycles.harness import sample_seed


class TestSeedDerivation:
    def test_pure_and_distinct(self):
        a = [sample_seed(7, i) for i in range(100)]
        b = [sample_seed(7, i) for i in range(100)]
        assert a == b
        assert len(set(a)) == 100
        assert a != [sample_seed(8, i) for i in range(100)]


class TestTheoremK2:
    def test_small_campaign_passes(self):
        report = verify_theorem_k2(range(6, 10), 150, master_seed=1)
        assert report.passed
        assert report.samples == 150
        # n=6 is pigeonhole-infeasible for palettes 2 and 3
        assert any("n=6" in note for note in report.notes)

    def test_infeasible_everywhere_raises(self):
        with pytest.raises(ValueError, match="no feasible"):
            verify_theorem_k2([6], 10, colors_values=(1,), master_seed=0)

    def test_proper_k9_slice_passes(self):
        g = proper_complete(9)
        assert max_mono_degree(g) <= 4
        assert pack_exact(g, 2) is not None


class TestDegreeBounds:
    def test_short_cycle_bound_campaign(self):
        report = verify_short_cycle_bound(120, master_seed=5)
        assert report.passed

    def test_greedy_bound_campaign(self):
        report = verify_greedy_bound(120, master_seed=5)
        assert report.passed


class TestChecklist:
    def test_example1_fails_clause_a_for_k2(self):
        checklist = check_min_counterexample(example1(), 2)
        assert not checklist.k_at_least_3
        assert "a" in checklist.failed_clauses

    def test_rainbow_triangle_fails_clause_c(self):
        rng = random.Random(2)
        g = random_colored(6, 6, rng.getrandbits(32))
        from pccycles import find_rainbow_triangle

        assert find_rainbow_triangle(g) is not None
        checklist = check_min_counterexample(g, 3)
        assert "c" in checklist.failed_clauses

    def test_proper_k8_clause_e_exhaustive(self):
        checklist = check_min_counterexample(proper_complete(8), 3)
        # every triple in a proper coloring is rainbow, so clause c fails,
        # while clause e holds: any vertex has a PC C4 avoiding any 2 others
        assert checklist.pc_c4_cover
        assert not checklist.no_rainbow_triangle
        assert checklist.to_dict()["e_pc_c4_cover"] is True

    def test_monochromatic_fails_d_and_e(self):
        checklist = check_min_counterexample(cascade(6, 1), 3)
        assert not checklist.no_monochromatic_cut
        assert not checklist.pc_c4_cover


class TestHunt:
    def test_k3_slice_completes(self):
        report = hunt_conjecture(range(9, 12), 3, 60, master_seed=3)
        assert report.samples >= 60
        assert any("proper" in note for note in report.notes)

    def test_k2_finds_nothing(self):
        # the k=2 case is a proven statement, so the hunt must come back empty
        report = hunt_conjecture(range(6, 9), 2, 100, master_seed=9)
        assert report.passed

    def test_too_small_n_skipped(self):
        report = hunt_conjecture([5, 9], 3, 5, master_seed=0)
        assert any("n=5 skipped" in note for note in report.notes)

    def test_nothing_feasible_raises(self):
        with pytest.raises(ValueError, match="no feasible"):
            hunt_conjecture([5], 3, 5, master_seed=0)


class TestExhaustiveTiny:
    def test_k4_two_colors(self):
        report = exhaustive_tiny(4, 2)
        assert report.passed
        assert report.samples == 1 + 31  # set partitions of 6 edges into <= 2 classes

    def test_k4_three_colors(self):
        report = exhaustive_tiny(4, 3)
        assert report.passed

    def test_guard(self):
        with pytest.raises(ValueError, match="guard"):
            exhaustive_tiny(7, 2)
        with pytest.raises(ValueError, match="guard"):
            exhaustive_tiny(5, 4)

    def test_k6_two_color_proper_slice_is_vacuous(self):
        # two colors cannot reach max mono <= 1 on K6; nothing qualifies for
        # the two-disjoint check below n-5 = 1
        report = exhaustive_tiny(6, 2)
        note = [n for n in report.notes if n.startswith("two-disjoint")][0]
        assert note.endswith("=0")


class TestCorollaries:
    def test_general_slice(self):
        report = verify_dicycle_packing("general", 60, master_seed=2)
        assert report.passed

    def test_bipartite_slice(self):
        report = verify_dicycle_packing("bipartite", 60, master_seed=2)
        assert report.passed

    def test_few_parts_slice(self):
        report = verify_dicycle_packing("few-parts", 60, master_seed=2)
        assert report.passed

    def test_bad_slice(self):
        with pytest.raises(ValueError):
            verify_dicycle_packing("everything", 5)


class TestPropositionPair:
    def test_tournament_side(self):
        mt = random_multipartite_tournament((1,) * 10, 31, min_out=4)
        report = verify_proposition_pair(mt, 4, 3, (), 2)
        assert report.passed

    def test_tournament_hypothesis_skip(self):
        mt = random_multipartite_tournament((1,) * 5, 3)
        report = verify_proposition_pair(mt, 9, 2, (), 2)
        assert report.passed
        assert any("skipped" in n for n in report.notes)

    def test_graph_side_with_bridge(self):
        mt = random_multipartite_tournament((4, 4, 4), 7, min_out=3)
        g = from_multipartite_tournament(mt).graph
        report = verify_proposition_pair(g, 3, 3, (), 2)
        assert report.passed

    def test_forbidden_lengths_respected(self):
        mt = random_multipartite_tournament((7, 7), 11, min_out=3)
        # bipartite: no odd dicycles, so forbidding length 3 never skips
        report = verify_proposition_pair(mt, 3, 2, (3,), 2)
        assert not any("forbidden" in n for n in report.notes)

    def test_bad_params(self):
        mt = random_multipartite_tournament((3, 3), 1)
        with pytest.raises(ValueError, match="2k-1"):
            verify_proposition_pair(mt, 1, 2, (), 2)
        with pytest.raises(ValueError, match="l must"):
            verify_proposition_pair(mt, 3, 1, (), 2)


class TestReportsAndReplay:
    def test_json_excludes_elapsed_and_is_canonical(self):
        report = verify_short_cycle_bound(10, master_seed=1)
        record = json.loads(report.to_json())
        assert "elapsed" not in record
        assert record["campaign"] == "short-cycle-bound"
        assert report.to_json() == report.to_json()

    def test_worker_count_invariance(self):
        a = verify_theorem_k2(range(7, 10), 40, master_seed=17, workers=1)
        b = verify_theorem_k2(range(7, 10), 40, master_seed=17, workers=4)
        assert a.to_json() == b.to_json()
        c = verify_dicycle_packing("general", 30, master_seed=17, workers=1)
        d = verify_dicycle_packing("general", 30, master_seed=17, workers=3)
        assert c.to_json() == d.to_json()

    def test_violation_replay_from_genspec(self):
        # fabricate a violation against a predicate that genuinely fails
        g = cascade(6, 3)
        violation = Violation(
            0,
            "short-pc-cycle-exists",
            {},
            {"kind": "cascade", "n": 6, "colors": 3},
            serialize_ecg(g),
        )
        assert find_short_pc_cycle(g) is None
        assert replay_violation(violation)

    def test_violation_replay_from_instance_text(self):
        g = proper_complete(5)
        violation = Violation(0, "k-disjoint-short-pc-cycles", {"k": 2}, None, serialize_ecg(g))
        assert replay_violation(violation)  # K5 proper has no 2 disjoint cycles

    def test_replay_detects_fixed_instances(self):
        g = proper_complete(9)
        violation = Violation(0, "two-disjoint-short-pc-cycles", {"k": 2}, None, serialize_ecg(g))
        assert not replay_violation(violation)  # it actually packs fine

    def test_text_report_mentions_result(self):
        report = verify_short_cycle_bound(5, master_seed=0)
        text = report.to_text()
        assert "PASS" in text and "campaign: short-cycle-bound" in text
