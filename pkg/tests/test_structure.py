import random

import pytest

from pccycles import (
    ColoredCompleteGraph,
    anchored_partition,
    c4s_from_cut,
    color_degree,
    find_monochromatic_cut,
    find_rainbow_triangle,
    find_short_pc_cycle,
    gallai_partition,
    is_pc_cycle,
    is_rainbow,
    max_mono_degree,
    validate_anchored,
    validate_gallai,
)
from pccycles.constructions import (
    cascade,
    example1,
    random_colored,
    random_multipartite_tournament,
)
from pccycles.tournaments import MultipartiteTournament, from_multipartite_tournament

from oracles import mono_cut_exists


def rainbow_k(n):
    rows = [[-1] * n for _ in range(n)]
    c = 0
    for u in range(n):
        for v in range(u + 1, n):
            rows[u][v] = rows[v][u] = c
            c += 1
    return ColoredCompleteGraph(rows)


def two_cliques_joined(inner_n, cut_color_last=True):
    """Two rainbow-interior cliques joined completely by one fresh color."""
    n = 2 * inner_n
    rows = [[-1] * n for _ in range(n)]
    c = 1
    for base in (0, inner_n):
        for u in range(base, base + inner_n):
            for v in range(u + 1, base + inner_n):
                rows[u][v] = rows[v][u] = c
                c += 1
    for u in range(inner_n):
        for v in range(inner_n, n):
            rows[u][v] = rows[v][u] = 0
    return ColoredCompleteGraph(rows)


def gallai_blowup(rng, n, third_color=True):
    """No-rainbow-triangle coloring: a 2-colored template with one part's
    inside recolored by a third color (substitution keeps triangles dull)."""
    rows = [[-1] * n for _ in range(n)]
    split = rng.randrange(1, n)
    for u in range(n):
        for v in range(u + 1, n):
            rows[u][v] = rows[v][u] = rng.randrange(2)
    if third_color and split >= 2:
        for u in range(split):
            for v in range(u + 1, split):
                rows[u][v] = rows[v][u] = 2
    return ColoredCompleteGraph(rows)


class TestRainbowTriangle:
    def test_rainbow_k3(self):
        assert find_rainbow_triangle(rainbow_k(3)) == (0, 1, 2)

    def test_two_colored_has_none(self):
        rng = random.Random(3)
        for _ in range(20):
            g = random_colored(6, 2, rng.getrandbits(32))
            assert find_rainbow_triangle(g) is None

    def test_example1_has_one(self):
        tri = find_rainbow_triangle(example1())
        assert tri is not None
        assert is_rainbow(example1(), tri)

    def test_scan_agrees_with_brute_force(self):
        rng = random.Random(77)
        from itertools import combinations

        for _ in range(30):
            g = random_colored(7, rng.randrange(2, 5), rng.getrandbits(32))
            brute = [
                t
                for t in combinations(range(7), 3)
                if len({g.colors[t[0]][t[1]], g.colors[t[1]][t[2]], g.colors[t[0]][t[2]]}) == 3
            ]
            got = find_rainbow_triangle(g)
            assert (got is not None) == bool(brute)
            if brute:
                assert got == brute[0]


class TestMonochromaticCut:
    def test_monochromatic_k6(self):
        assert find_monochromatic_cut(cascade(6, 1)) == (frozenset({0}), 0)

    def test_rainbow_k4_has_none(self):
        assert find_monochromatic_cut(rainbow_k(4)) is None

    def test_two_joined_cliques(self):
        g = two_cliques_joined(4)
        side, color = find_monochromatic_cut(g)
        assert side == frozenset({0, 1, 2, 3})
        assert color == 0

    def test_agrees_with_bipartition_scan(self):
        rng = random.Random(4242)
        cases = [two_cliques_joined(3), two_cliques_joined(5), rainbow_k(5), cascade(6, 2), example1()]
        for _ in range(40):
            cases.append(random_colored(rng.randrange(4, 11), rng.randrange(2, 4), rng.getrandbits(32)))
        for g in cases:
            got = find_monochromatic_cut(g)
            brute = mono_cut_exists(g)
            assert (got is not None) == (brute is not None)
            if got is not None:
                side, color = got
                other = set(range(g.n)) - side
                assert {g.colors[u][v] for u in side for v in other} == {color}


class TestC4sFromCut:
    def test_two_rainbow_sides_k2(self):
        g = two_cliques_joined(4)
        cut = find_monochromatic_cut(g)
        assert max_mono_degree(g) == 4  # the cut color at each vertex: n-2k for k=2
        cycles = c4s_from_cut(g, cut, 2)
        assert len(cycles) == 2
        used = set()
        for cyc in cycles:
            assert is_pc_cycle(g, cyc)
            sides = [v < 4 for v in cyc]
            assert sides.count(True) == 2  # two vertices per side
            assert not used & set(cyc)
            used |= set(cyc)

    def test_single_cycle(self):
        g = two_cliques_joined(4)
        cut = find_monochromatic_cut(g)
        (cyc,) = c4s_from_cut(g, cut, 1)
        assert is_pc_cycle(g, cyc)

    def test_monochromatic_side_fails(self):
        g = cascade(4, 1)
        with pytest.raises(ValueError, match="cannot match"):
            c4s_from_cut(g, ({0, 1}, 0), 1)

    def test_rejects_fake_cut(self):
        g = rainbow_k(4)
        with pytest.raises(ValueError, match="breaks the monochromatic cut"):
            c4s_from_cut(g, ({0, 1}, 0), 1)


class TestGallai:
    def test_two_colored_always_has_one(self):
        rng = random.Random(11)
        for _ in range(25):
            g = random_colored(rng.randrange(3, 9), 2, rng.getrandbits(32))
            gp = gallai_partition(g)
            assert gp is not None
            assert validate_gallai(g, gp) is None

    def test_rainbow_k3_none_matches_partition_enumeration(self):
        g = rainbow_k(3)
        # brute force: all partitions of {0,1,2} into >= 2 parts fail
        candidates = [[[0], [1], [2]], [[0, 1], [2]], [[0, 2], [1]], [[1, 2], [0]]]
        for parts in candidates:
            cols = set()
            for i in range(len(parts)):
                for j in range(i + 1, len(parts)):
                    pair = {g.colors[u][v] for u in parts[i] for v in parts[j]}
                    if len(pair) != 1:
                        cols = None
                        break
                    cols |= pair
                if cols is None:
                    break
            assert cols is None or len(cols) > 2
        assert gallai_partition(g) is None

    def test_bridge_of_bipartite_tournament(self):
        mt = random_multipartite_tournament((3, 3), 5)
        g = from_multipartite_tournament(mt).graph
        gp = gallai_partition(g)
        assert gp is not None
        assert validate_gallai(g, gp) is None

    def test_minimize_q_not_larger(self):
        rng = random.Random(23)
        for _ in range(15):
            g = gallai_blowup(rng, 7)
            default = gallai_partition(g)
            smallest = gallai_partition(g, minimize_q=True)
            assert (default is None) == (smallest is None)
            if default is not None:
                assert len(smallest.partition) <= len(default.partition)
                assert validate_gallai(g, smallest) is None

    def test_existence_matches_set_partition_oracle(self):
        # ground truth: scan every partition of the vertex set with >= 2
        # parts and test the defining clauses directly
        def set_partitions(items):
            if not items:
                yield []
                return
            head, *rest = items
            for smaller in set_partitions(rest):
                for i in range(len(smaller)):
                    yield smaller[:i] + [[head] + smaller[i]] + smaller[i + 1 :]
                yield [[head]] + smaller

        def qualifies(g, parts):
            if len(parts) < 2:
                return False
            between = set()
            for i in range(len(parts)):
                for j in range(i + 1, len(parts)):
                    cols = {g.colors[u][v] for u in parts[i] for v in parts[j]}
                    if len(cols) != 1:
                        return False
                    between |= cols
            return len(between) <= 2

        rng = random.Random(515)
        for _ in range(40):
            n = rng.randrange(3, 6)
            g = random_colored(n, rng.randrange(2, 5), rng.getrandbits(32))
            truth = any(qualifies(g, parts) for parts in set_partitions(list(range(n))))
            assert (gallai_partition(g) is not None) == truth

    def test_no_rainbow_triangle_implies_partition(self):
        rng = random.Random(6021)
        hits = 0
        for _ in range(1000):
            n = rng.randrange(2, 9)
            colors = rng.choice((1, 2, 3))
            g = (
                gallai_blowup(rng, n)
                if colors == 3 and n >= 2
                else random_colored(n, colors, rng.getrandbits(32))
            )
            if g.n >= 3 and find_rainbow_triangle(g) is not None:
                continue
            hits += 1
            gp = gallai_partition(g)
            assert gp is not None
            assert validate_gallai(g, gp) is None
        assert hits >= 700


def no_cut_bridge_instances(count, seed, shapes=((1, 1, 1), (2, 2, 2), (1, 2, 3), (3, 3), (2, 2, 1, 1))):
    """Bridge graphs of random tournaments, filtered to the no-cut case."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        shape = shapes[rng.randrange(len(shapes))]
        mt = random_multipartite_tournament(shape, rng.getrandbits(32))
        bridge = from_multipartite_tournament(mt)
        if find_monochromatic_cut(bridge.graph) is None:
            out.append((mt, bridge))
    return out


class TestAnchoredPartition:
    def test_bridge_graphs_refine_tournament_parts(self):
        for mt, bridge in no_cut_bridge_instances(25, 917):
            g = bridge.graph
            ap = anchored_partition(g, bridge.v0)
            assert validate_anchored(g, ap) is None
            for part in ap.partition.parts[1:]:
                assert len({mt.part_of[v] for v in part}) == 1

    def test_planted_two_part_schema_gives_c4_witness(self):
        # anchor side {v0=0, u=1}; parts {2,3} (color 0) and {4,5} (color 1);
        # cross edges alternate so 2-4-3-5 is the planted PC 4-cycle
        rows = [[-1] * 6 for _ in range(6)]
        for x in (0, 1):
            for y in (2, 3):
                rows[x][y] = rows[y][x] = 0
            for y in (4, 5):
                rows[x][y] = rows[y][x] = 1
        rows[0][1] = rows[1][0] = 0
        rows[2][3] = rows[3][2] = 0
        rows[4][5] = rows[5][4] = 1
        for x, y, c in [(2, 4, 0), (2, 5, 1), (3, 4, 1), (3, 5, 0)]:
            rows[x][y] = rows[y][x] = c
        g = ColoredCompleteGraph(rows)
        assert find_short_pc_cycle(g, through=0) is None
        assert find_monochromatic_cut(g) is None
        ap = anchored_partition(g, 0)
        assert validate_anchored(g, ap) is None
        assert ap.witness_kind == "pc_c4"
        assert set(ap.witness) == {2, 3, 4, 5}

    def test_three_part_dicycle_gives_rainbow_witness(self):
        mt = MultipartiteTournament([0, 1, 2], [(0, 1), (1, 2), (2, 0)])
        bridge = from_multipartite_tournament(mt)
        ap = anchored_partition(bridge.graph, bridge.v0)
        assert ap.witness_kind == "rainbow_triangle"
        assert validate_anchored(bridge.graph, ap) is None
        idxs = {ap.partition.index_of(v) for v in ap.witness}
        assert len(idxs) == 3 and 0 not in idxs

    def test_precondition_errors_name_the_cause(self):
        g = two_cliques_joined(4)
        with pytest.raises(ValueError, match="monochromatic edge-cut"):
            anchored_partition(g, 0)
        mt, bridge = no_cut_bridge_instances(1, 5)[0]
        g = bridge.graph
        on_cycle = next(
            v for v in range(g.n) if find_short_pc_cycle(g, through=v) is not None
        )
        with pytest.raises(ValueError, match="short PC cycle"):
            anchored_partition(g, on_cycle)

    def test_part_count_bounded_by_color_degree(self):
        for _, bridge in no_cut_bridge_instances(15, 33):
            g = bridge.graph
            ap = anchored_partition(g, bridge.v0)
            assert 2 <= len(ap.partition) - 1 <= color_degree(g, bridge.v0)
