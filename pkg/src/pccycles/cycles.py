"""Properly colored cycles: predicates, search, shortening, and packing.

A cycle is properly colored (PC) when every two consecutive edges around it
carry distinct colors. In a complete graph every PC cycle contains, on its
own vertex set, a PC cycle of length 3 or 4 through any chosen vertex, so
short cycles decide existence and packing questions exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .ecg import ColoredCompleteGraph, CycleSeq


def _check_cycle(g: ColoredCompleteGraph, cycle: CycleSeq) -> None:
    if len(cycle) < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    seen: set[int] = set()
    for v in cycle:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
        if v in seen:
            raise ValueError(f"repeated vertex {v} in cycle")
        seen.add(v)


def is_pc_cycle(g: ColoredCompleteGraph, cycle: CycleSeq) -> bool:
    """True iff consecutive edge colors around the cycle always differ."""
    _check_cycle(g, cycle)
    col = g.colors
    length = len(cycle)
    for i in range(length):
        if col[cycle[i - 1]][cycle[i]] == col[cycle[i]][cycle[(i + 1) % length]]:
            return False
    return True


def is_rainbow(g: ColoredCompleteGraph, cycle: CycleSeq) -> bool:
    """True iff all edge colors around the cycle are pairwise distinct."""
    _check_cycle(g, cycle)
    col = g.colors
    length = len(cycle)
    return len({col[cycle[i - 1]][cycle[i]] for i in range(length)}) == length


def find_short_pc_cycle(
    g: ColoredCompleteGraph,
    through: int | None = None,
    avoid: Iterable[int] = (),
    lengths: tuple[int, ...] = (3, 4),
) -> CycleSeq | None:
    """Least PC cycle of length 3 or 4 in g minus ``avoid``.

    Triangles are scanned before 4-cycles; within a length the
    lexicographically least canonical tuple wins (least vertex first, and
    for 4-cycles second vertex less than fourth). With ``through`` set only
    cycles containing that vertex are considered. Returns None when no such
    cycle exists.
    """
    avoid_set = set(avoid)
    if through is not None:
        if not (0 <= through < g.n):
            raise ValueError(f"vertex {through} out of range")
        if through in avoid_set:
            raise ValueError("through vertex is excluded by avoid")
    verts = [v for v in range(g.n) if v not in avoid_set]
    col = g.colors
    if 3 in lengths:
        for a, b, c in combinations(verts, 3):
            if through is not None and through not in (a, b, c):
                continue
            x, y, z = col[a][b], col[b][c], col[a][c]
            if x != y and y != z and x != z:
                return (a, b, c)
    if 4 in lengths:
        for i0, v0 in enumerate(verts):
            rest = verts[i0 + 1 :]
            for v1 in rest:
                c01 = col[v0][v1]
                for v2 in rest:
                    if v2 == v1:
                        continue
                    c12 = col[v1][v2]
                    if c12 == c01:
                        continue
                    for v3 in rest:
                        if v3 <= v1 or v3 == v2:
                            continue
                        c23 = col[v2][v3]
                        if c23 == c12:
                            continue
                        c30 = col[v3][v0]
                        if c30 == c23 or c30 == c01:
                            continue
                        if through is None or through in (v0, v1, v2, v3):
                            return (v0, v1, v2, v3)
    return None


def enumerate_short_pc_cycles(
    g: ColoredCompleteGraph, avoid: Iterable[int] = ()
) -> list[CycleSeq]:
    """All PC cycles of length 3 and 4 as canonical tuples, triangles first."""
    avoid_set = set(avoid)
    verts = [v for v in range(g.n) if v not in avoid_set]
    col = g.colors
    out: list[CycleSeq] = []
    for a, b, c in combinations(verts, 3):
        x, y, z = col[a][b], col[b][c], col[a][c]
        if x != y and y != z and x != z:
            out.append((a, b, c))
    for i0, v0 in enumerate(verts):
        rest = verts[i0 + 1 :]
        for v1 in rest:
            c01 = col[v0][v1]
            for v2 in rest:
                if v2 == v1:
                    continue
                c12 = col[v1][v2]
                if c12 == c01:
                    continue
                for v3 in rest:
                    if v3 <= v1 or v3 == v2:
                        continue
                    c23 = col[v2][v3]
                    if c23 == c12:
                        continue
                    c30 = col[v3][v0]
                    if c30 != c23 and c30 != c01:
                        out.append((v0, v1, v2, v3))
    return out


def shorten_pc_cycle(g: ColoredCompleteGraph, cycle: CycleSeq, v: int) -> CycleSeq:
    """Shrink a PC cycle to one of length 3 or 4 through v inside its vertex set.

    Works by constructive descent: while the cycle has 5 or more vertices,
    inspect the chords from v to the third and fourth vertex and replace the
    cycle by a strictly shorter PC cycle through v. The output vertex set is
    contained in the input's.
    """
    _check_cycle(g, cycle)
    if not is_pc_cycle(g, cycle):
        raise ValueError("cycle is not properly colored")
    if v not in cycle:
        raise ValueError(f"vertex {v} not on cycle")
    i = cycle.index(v)
    cyc: CycleSeq = cycle[i:] + cycle[:i]
    col = g.colors
    while len(cyc) >= 5:
        v1, v2, v3, v4 = cyc[0], cyc[1], cyc[2], cyc[3]
        vr = cyc[-1]
        c12 = col[v1][v2]
        c1r = col[v1][vr]
        c34 = col[v3][v4]
        if c34 == c12:
            if col[v1][v4] != c12:
                cyc = (v1, v2, v3, v4)
            else:
                cyc = (v1,) + tuple(reversed(cyc[3:]))
        elif c34 == c1r:
            if col[v1][v3] != c1r:
                cyc = (v1,) + cyc[2:]
            else:
                cyc = (v1, v2, v3)
        else:
            # c34 is a third color beside c12 and c1r
            if col[v1][v3] == c34:
                cyc = (v1, v2, v3)
            elif col[v1][v4] == c34:
                cyc = (v1,) + cyc[3:]
            elif col[v1][v4] != c12:
                cyc = (v1, v2, v3, v4)
            elif col[v1][v3] != c1r:
                cyc = (v1,) + tuple(reversed(cyc[2:]))
            else:
                # forced colors make v1,v3,v4 a rainbow triangle
                cyc = (v1, v3, v4)
        if not is_pc_cycle(g, cyc):
            raise RuntimeError("descent produced a non-PC cycle; this is a bug")
    return cyc


def yeo_vertex(
    g: ColoredCompleteGraph, vertices: Iterable[int] | None = None
) -> int | None:
    """A vertex joined to each component of the rest in at most one color.

    Such a vertex always exists when the (induced) graph contains no PC
    cycle; the search itself is unconditional and returns the least
    qualifying vertex id, or None. Operates on induced subgraphs of a
    complete graph, where removing a vertex leaves a single component.
    """
    if vertices is None:
        verts = list(range(g.n))
    else:
        verts = sorted(set(vertices))
        for v in verts:
            g._check_vertex(v)
    if not verts:
        raise ValueError("empty vertex set")
    col = g.colors
    for v in verts:
        cols = {col[v][u] for u in verts if u != v}
        if len(cols) <= 1:
            return v
    return None


@dataclass(frozen=True)
class PackingResult:
    """Outcome of a greedy packing of short PC cycles."""

    cycles: tuple[CycleSeq, ...]
    requested_k: int
    achieved: int


def greedy_pack(g: ColoredCompleteGraph, k: int) -> PackingResult:
    """Repeatedly take the least short PC cycle and delete its vertices.

    Achieves k cycles whenever the maximum monochromatic degree is at most
    n - 4k + 2.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    removed: set[int] = set()
    cycles: list[CycleSeq] = []
    while len(cycles) < k:
        cyc = find_short_pc_cycle(g, avoid=removed)
        if cyc is None:
            break
        cycles.append(cyc)
        removed.update(cyc)
    return PackingResult(tuple(cycles), k, len(cycles))


def _vertex_mask(cycle: CycleSeq) -> int:
    m = 0
    for v in cycle:
        m |= 1 << v
    return m


def pack_candidates(
    n: int, candidates: list[tuple[int, ...]], k: int, free_mask: int
) -> list[tuple[int, ...]] | None:
    """Exact backtracking for k pairwise vertex-disjoint candidate cycles.

    Branches on the lowest vertex not yet covered or excluded: either some
    candidate through it joins the packing, or it is excluded outright.
    Prunes when fewer than 3k free vertices remain. Deterministic for a
    fixed candidate order.
    """
    by_vertex: list[list[tuple[tuple[int, ...], int]]] = [[] for _ in range(n)]
    for cyc in candidates:
        m = _vertex_mask(cyc)
        for v in cyc:
            by_vertex[v].append((cyc, m))

    def rec(used: int, excluded: int, need: int) -> tuple | None:
        if need == 0:
            return ()
        free = free_mask & ~used & ~excluded
        if free.bit_count() < 3 * need:
            return None
        v = (free & -free).bit_length() - 1
        blockers = used | excluded
        for cyc, m in by_vertex[v]:
            if m & blockers:
                continue
            rest = rec(used | m, excluded, need - 1)
            if rest is not None:
                return (cyc,) + rest
        return rec(used, excluded | (1 << v), need)

    found = rec(0, 0, k)
    return list(found) if found is not None else None


def pack_exact(
    g: ColoredCompleteGraph, k: int, avoid: Iterable[int] = ()
) -> list[CycleSeq] | None:
    """k pairwise disjoint short PC cycles avoiding ``avoid``, or None.

    Exact: returns a packing if and only if one exists. Restricting the
    candidate universe to lengths 3 and 4 loses nothing in complete graphs,
    since any PC cycle contains a short one on its own vertices.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    avoid_set = set(avoid)
    cands = enumerate_short_pc_cycles(g, avoid=avoid_set)
    cands.sort(key=lambda c: (min(c), len(c), c))
    free = 0
    for v in range(g.n):
        if v not in avoid_set:
            free |= 1 << v
    return pack_candidates(g.n, cands, k, free)


def max_pack(g: ColoredCompleteGraph) -> int:
    """Largest k admitting k disjoint short PC cycles (0..floor(n/3))."""
    cands = enumerate_short_pc_cycles(g)
    cands.sort(key=lambda c: (min(c), len(c), c))
    free = (1 << g.n) - 1
    best = 0
    for k in range(1, g.n // 3 + 1):
        if pack_candidates(g.n, cands, k, free) is None:
            break
        best = k
    return best


def enumerate_pc_cycles(
    g: ColoredCompleteGraph, avoid: Iterable[int] = ()
) -> list[CycleSeq]:
    """All PC cycles of any length, as canonical tuples.

    Canonical form: least vertex first, and the second vertex smaller than
    the last (one representative per traversal direction). Sorted by
    (length, tuple).
    """
    avoid_set = set(avoid)
    verts = [v for v in range(g.n) if v not in avoid_set]
    col = g.colors
    out: list[CycleSeq] = []

    def extend(s: int, pool: list[int], path: list[int], used: int, first_c: int, prev_c: int) -> None:
        last = path[-1]
        if len(path) >= 3:
            closing = col[last][s]
            if closing != prev_c and closing != first_c and path[1] < last:
                out.append(tuple(path))
        for u in pool:
            if used & (1 << u):
                continue
            c = col[last][u]
            if c == prev_c:
                continue
            path.append(u)
            extend(s, pool, path, used | (1 << u), first_c, c)
            path.pop()

    for i, s in enumerate(verts):
        pool = verts[i + 1 :]
        for u in pool:
            c = col[s][u]
            extend(s, pool, [s, u], (1 << s) | (1 << u), c, c)
    out.sort(key=lambda t: (len(t), t))
    return out


def find_pc_cycle(
    g: ColoredCompleteGraph, length: int, avoid: Iterable[int] = ()
) -> CycleSeq | None:
    """First PC cycle of exactly the given length in scan order, or None."""
    if length < 3:
        return None
    avoid_set = set(avoid)
    verts = [v for v in range(g.n) if v not in avoid_set]
    col = g.colors

    def extend(s: int, pool: list[int], path: list[int], used: int, first_c: int, prev_c: int) -> CycleSeq | None:
        last = path[-1]
        if len(path) == length:
            closing = col[last][s]
            if closing != prev_c and closing != first_c and path[1] < last:
                return tuple(path)
            return None
        for u in pool:
            if used & (1 << u):
                continue
            c = col[last][u]
            if c == prev_c:
                continue
            path.append(u)
            got = extend(s, pool, path, used | (1 << u), first_c, c)
            path.pop()
            if got is not None:
                return got
        return None

    for i, s in enumerate(verts):
        pool = verts[i + 1 :]
        if len(pool) + 1 < length:
            break
        for u in pool:
            c = col[s][u]
            got = extend(s, pool, [s, u], (1 << s) | (1 << u), c, c)
            if got is not None:
                return got
    return None
