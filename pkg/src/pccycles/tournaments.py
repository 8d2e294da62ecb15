"""Multipartite tournaments and their colored-complete-graph bridge.

A multipartite tournament orients every pair of vertices from distinct
parts and none within a part. Dicycles here correspond exactly to the PC
cycles of a derived colored complete graph that avoid the hub vertex and
same-part edges, and the two constructions below are mutual inverses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .ecg import ColoredCompleteGraph, CycleSeq, VertexPartition
from .cycles import is_pc_cycle, pack_candidates

Dicycle = tuple[int, ...]


class MultipartiteTournament:
    """Part-labeled vertex set with exactly one arc per cross-part pair."""

    __slots__ = ("n", "part_of", "part_count", "out")

    def __init__(self, part_of: Sequence[int], arcs: Iterable[tuple[int, int]]):
        part_of = tuple(part_of)
        n = len(part_of)
        if n < 2:
            raise ValueError("need at least 2 vertices")
        pc = max(part_of) + 1
        if sorted(set(part_of)) != list(range(pc)):
            raise ValueError("part ids must be contiguous from 0 with no empty part")
        if pc < 2:
            raise ValueError("need at least 2 parts")
        out = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"bad arc ({u},{v})")
            if part_of[u] == part_of[v]:
                raise ValueError(f"arc within part: ({u},{v})")
            if (out[u] >> v) & 1:
                raise ValueError(f"duplicate arc ({u},{v})")
            if (out[v] >> u) & 1:
                raise ValueError(f"pair ({min(u, v)},{max(u, v)}) oriented twice")
            out[u] |= 1 << v
        for u in range(n):
            for v in range(u + 1, n):
                if part_of[u] != part_of[v] and not ((out[u] >> v) & 1 or (out[v] >> u) & 1):
                    raise ValueError(f"pair ({u},{v}) unoriented")
        self.n = n
        self.part_of = part_of
        self.part_count = pc
        self.out = tuple(out)

    def has_arc(self, u: int, v: int) -> bool:
        return bool((self.out[u] >> v) & 1)

    def out_degree(self, v: int) -> int:
        return self.out[v].bit_count()

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs sorted by (tail, head)."""
        return [
            (u, v)
            for u in range(self.n)
            for v in range(self.n)
            if (self.out[u] >> v) & 1
        ]

    def part_vertices(self, i: int) -> list[int]:
        return [v for v in range(self.n) if self.part_of[v] == i]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultipartiteTournament)
            and self.part_of == other.part_of
            and self.out == other.out
        )

    def __hash__(self) -> int:
        return hash((self.part_of, self.out))

    def __repr__(self) -> str:
        return f"MultipartiteTournament(n={self.n}, parts={self.part_count})"


def min_out_degree(mt: MultipartiteTournament) -> int:
    """Minimum out-degree over all vertices."""
    return min(bits.bit_count() for bits in mt.out)


def _directed_girth(mt: MultipartiteTournament) -> int | None:
    """Length of a shortest dicycle, or None in an acyclic tournament."""
    n = mt.n
    best: int | None = None
    for s in range(n):
        dist = {s: 0}
        frontier = [s]
        d = 0
        while frontier and (best is None or d + 1 < best):
            d += 1
            nxt = []
            for u in frontier:
                bits = mt.out[u]
                while bits:
                    v = (bits & -bits).bit_length() - 1
                    bits &= bits - 1
                    if v not in dist:
                        dist[v] = d
                        nxt.append(v)
            frontier = nxt
        for t, dt in dist.items():
            if dt >= 2 and mt.has_arc(t, s):
                length = dt + 1
                if best is None or length < best:
                    best = length
    return best


def _lex_dicycle_exact(mt: MultipartiteTournament, length: int) -> Dicycle | None:
    """Lex-least dicycle of exactly the given length (least vertex first)."""
    n = mt.n

    def extend(s: int, path: list[int], used: int) -> Dicycle | None:
        last = path[-1]
        if len(path) == length:
            return tuple(path) if mt.has_arc(last, s) else None
        bits = mt.out[last] >> (s + 1)
        u = s + 1
        while bits:
            if bits & 1 and not (used >> u) & 1:
                path.append(u)
                got = extend(s, path, used | (1 << u))
                path.pop()
                if got is not None:
                    return got
            bits >>= 1
            u += 1
        return None

    for s in range(n - length + 1):
        got = extend(s, [s], 1 << s)
        if got is not None:
            return got
    return None


def find_dicycle(
    mt: MultipartiteTournament, length: int | None = None
) -> Dicycle | None:
    """A dicycle, shortest then lexicographically least; or of an exact length.

    Length-2 dicycles cannot occur (one arc per pair), so ``length=2``
    returns None.
    """
    if length is not None:
        if length < 2:
            raise ValueError("dicycle length must be >= 2")
        if length == 2:
            return None
        return _lex_dicycle_exact(mt, length)
    girth = _directed_girth(mt)
    if girth is None:
        return None
    return _lex_dicycle_exact(mt, girth)


def enumerate_dicycles(
    mt: MultipartiteTournament, max_length: int | None = None
) -> list[Dicycle]:
    """All elementary dicycles up to max_length, least vertex first."""
    n = mt.n
    cap = max_length if max_length is not None else n
    out: list[Dicycle] = []

    def dfs(s: int, path: list[int], used: int) -> None:
        last = path[-1]
        if len(path) >= 3 and mt.has_arc(last, s):
            out.append(tuple(path))
        if len(path) == cap:
            return
        bits = mt.out[last]
        u = 0
        while bits:
            low = bits & -bits
            u = low.bit_length() - 1
            bits ^= low
            if u > s and not (used >> u) & 1:
                path.append(u)
                dfs(s, path, used | (1 << u))
                path.pop()

    for s in range(n):
        dfs(s, [s], 1 << s)
    out.sort(key=lambda t: (len(t), t))
    return out


def pack_disjoint_dicycles(
    mt: MultipartiteTournament, k: int
) -> list[Dicycle] | None:
    """k pairwise vertex-disjoint dicycles, or None when none exist.

    Exact. The candidate universe is the dicycles of length at most 4: in a
    multipartite tournament every dicycle's vertex set contains one of
    length 3 or 4 (seen through the bridge below), so the short universe
    decides packing in general.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    cands = enumerate_dicycles(mt, max_length=4)
    cands.sort(key=lambda c: (min(c), len(c), c))
    return pack_candidates(mt.n, cands, k, (1 << mt.n) - 1)


@dataclass
class BridgeResult:
    """Colored complete graph derived from a multipartite tournament.

    The hub ``v0`` is the extra, highest-numbered vertex; ``partition``
    lists {v0} first and then the tournament parts in order; ``color_map``
    sends each tournament part index to its spoke color (the identity by
    construction).
    """

    graph: ColoredCompleteGraph
    v0: int
    partition: VertexPartition
    color_map: dict[int, int]


def from_multipartite_tournament(mt: MultipartiteTournament) -> BridgeResult:
    """Build the colored K_{n+1} whose PC cycles mirror the dicycles of mt.

    Spokes at the hub take the part index of the other endpoint as color; a
    cross-part edge takes its arc head's part color; a same-part edge takes
    the shared part color. The result satisfies
    max_mono_degree <= (n+1) - min_out_degree(mt) - 1.
    """
    m = mt.n
    v0 = m
    rows = [[-1] * (m + 1) for _ in range(m + 1)]
    part_of = mt.part_of
    for u in range(m):
        pu = part_of[u]
        rows[u][v0] = pu
        rows[v0][u] = pu
        for v in range(u + 1, m):
            if part_of[v] == pu:
                c = pu
            elif mt.has_arc(u, v):
                c = part_of[v]
            else:
                c = pu
            rows[u][v] = c
            rows[v][u] = c
    g = ColoredCompleteGraph(rows)
    parts = [[v0]] + [mt.part_vertices(i) for i in range(mt.part_count)]
    vp = VertexPartition(parts, n=m + 1)
    return BridgeResult(g, v0, vp, {i: i for i in range(mt.part_count)})


def _partition_and_colors(partition, part_colors):
    if hasattr(partition, "part_colors"):  # AnchoredPartition
        return partition.partition, tuple(partition.part_colors)
    if hasattr(partition, "color_map"):  # BridgeResult
        vp = partition.partition
        cm = partition.color_map
        return vp, tuple(cm[i] for i in range(len(vp) - 1))
    if part_colors is None:
        raise ValueError("part_colors required when passing a bare VertexPartition")
    return partition, tuple(part_colors)


def to_multipartite_tournament(
    g: ColoredCompleteGraph,
    v0: int,
    partition,
    part_colors: Sequence[int] | None = None,
) -> MultipartiteTournament:
    """Inverse bridge: arc x -> y exactly when col(xy) is y's part color.

    ``partition`` may be an AnchoredPartition, a BridgeResult, or a bare
    VertexPartition plus explicit part colors; part 0 is the hub side and is
    dropped. The remaining vertices are relabeled in ascending id order. An
    edge colored outside its two part colors signals an invalid partition
    and raises.
    """
    vp, colors = _partition_and_colors(partition, part_colors)
    if v0 not in vp.parts[0]:
        raise ValueError("v0 must belong to part 0 of the partition")
    if len(vp) - 1 != len(colors):
        raise ValueError("one color per non-hub part required")
    verts = sorted(set(range(g.n)) - set(vp.parts[0]))
    relabel = {v: i for i, v in enumerate(verts)}
    part_of = [0] * len(verts)
    for idx, p in enumerate(vp.parts[1:]):
        for v in p:
            part_of[relabel[v]] = idx
    col = g.colors
    arcs: list[tuple[int, int]] = []
    for i, x in enumerate(verts):
        px = vp.index_of(x) - 1
        for y in verts[i + 1 :]:
            py = vp.index_of(y) - 1
            if px == py:
                continue
            cxy = col[x][y]
            if cxy == colors[py]:
                arcs.append((relabel[x], relabel[y]))
            elif cxy == colors[px]:
                arcs.append((relabel[y], relabel[x]))
            else:
                raise ValueError(
                    f"edge ({x},{y}) colored outside its part colors; partition invalid"
                )
    return MultipartiteTournament(part_of, arcs)


def pad_to_l_partite(mt: MultipartiteTournament, l: int) -> MultipartiteTournament:
    """Add dominating singleton parts until the tournament has l parts.

    New vertices send arcs to every original vertex and form a transitive
    order among themselves, so they lie on no dicycle and the minimum
    out-degree cannot drop.
    """
    p = mt.part_count
    if l < p:
        raise ValueError(f"cannot pad down from {p} to {l} parts")
    if l == p:
        return mt
    extra = l - p
    n = mt.n
    part_of = list(mt.part_of) + [p + i for i in range(extra)]
    arcs = mt.arcs()
    for i in range(extra):
        u = n + i
        arcs.extend((u, x) for x in range(n))
        arcs.extend((u, n + j) for j in range(i + 1, extra))
    return MultipartiteTournament(part_of, arcs)


def dicycle_to_pc(
    mt: MultipartiteTournament, bridge: BridgeResult, dicycle: Sequence[int]
) -> CycleSeq:
    """Map a dicycle of mt to the identical vertex sequence as a PC cycle."""
    cyc = tuple(dicycle)
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        raise ValueError("not an elementary dicycle")
    for i, u in enumerate(cyc):
        v = cyc[(i + 1) % len(cyc)]
        if not mt.has_arc(u, v):
            raise ValueError(f"({u},{v}) is not an arc; input is not a dicycle")
    if not is_pc_cycle(bridge.graph, cyc):
        raise RuntimeError("dicycle image is not a PC cycle; bridge invariant broken")
    return cyc


def pc_to_dicycle(
    mt: MultipartiteTournament, bridge: BridgeResult, cycle: Sequence[int]
) -> Dicycle:
    """Map a PC cycle of the bridge graph to its dicycle, fixing orientation.

    PC cycles through the hub or using a same-part edge have no dicycle
    image; encountering one raises, since the bridge construction forbids
    them.
    """
    cyc = tuple(cycle)
    if not is_pc_cycle(bridge.graph, cyc):
        raise ValueError("input is not a PC cycle of the bridge graph")
    if bridge.v0 in cyc:
        raise ValueError("PC cycle through the hub has no dicycle image")
    L = len(cyc)
    for i in range(L):
        u, v = cyc[i], cyc[(i + 1) % L]
        if mt.part_of[u] == mt.part_of[v]:
            raise ValueError("PC cycle uses a same-part edge; no dicycle image")
    if all(mt.has_arc(cyc[i], cyc[(i + 1) % L]) for i in range(L)):
        return cyc
    rev = (cyc[0],) + tuple(reversed(cyc[1:]))
    if all(mt.has_arc(rev[i], rev[(i + 1) % L]) for i in range(L)):
        return rev
    raise RuntimeError("PC cycle follows arcs in neither direction; bridge invariant broken")
