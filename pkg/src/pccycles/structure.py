"""Structural decompositions of edge-colored complete graphs.

Covers rainbow-triangle detection, monochromatic edge-cuts together with
the constructive extraction of disjoint PC 4-cycles from a cut, Gallai
partitions (at most two colors between parts, exactly one per part pair),
and the anchored partition around a vertex lying on no PC cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .ecg import ColoredCompleteGraph, CycleSeq, VertexPartition, color_degree
from .cycles import find_short_pc_cycle, is_pc_cycle, is_rainbow


def find_rainbow_triangle(
    g: ColoredCompleteGraph, avoid: Iterable[int] = ()
) -> CycleSeq | None:
    """Lexicographically least triangle with three distinct edge colors."""
    if g.n < 3:
        return None
    avoid_set = set(avoid)
    verts = [v for v in range(g.n) if v not in avoid_set]
    col = g.colors
    for a, b, c in combinations(verts, 3):
        x, y, z = col[a][b], col[b][c], col[a][c]
        if x != y and y != z and x != z:
            return (a, b, c)
    return None


def find_monochromatic_cut(
    g: ColoredCompleteGraph,
) -> tuple[frozenset[int], int] | None:
    """A (side, color) whose cut edges all carry that color, or None.

    For each color c in ascending order, a cut exists exactly when the graph
    of edges not colored c is disconnected; the component of vertex 0 is
    returned as the side.
    """
    if g.n < 2:
        raise ValueError("cuts need at least 2 vertices")
    n = g.n
    col = g.colors
    for c in range(g.color_count):
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            row = col[u]
            for v in range(n):
                if v not in seen and v != u and row[v] != c:
                    seen.add(v)
                    stack.append(v)
        if len(seen) < n:
            return (frozenset(seen), c)
    return None


def _match_avoiding_color(
    g: ColoredCompleteGraph, verts: list[int], c: int, k: int
) -> list[tuple[int, int]]:
    """k disjoint edges inside verts with color != c, greedily by lex order."""
    avail = list(verts)
    col = g.colors
    out: list[tuple[int, int]] = []
    while len(out) < k:
        edge = None
        for i, x in enumerate(avail):
            for y in avail[i + 1 :]:
                if col[x][y] != c:
                    edge = (x, y)
                    break
            if edge:
                break
        if edge is None:
            raise ValueError(
                f"cannot match {k} disjoint non-cut edges inside one side; "
                "the max-mono-degree precondition does not hold"
            )
        out.append(edge)
        avail.remove(edge[0])
        avail.remove(edge[1])
    return out


def c4s_from_cut(
    g: ColoredCompleteGraph, cut: tuple[Iterable[int], int], k: int
) -> list[CycleSeq]:
    """k disjoint PC 4-cycles built from a monochromatic cut.

    Matches k disjoint non-cut-color edges inside each side and pairs them
    up: the i-th cycle uses the i-th matched edge of each side as opposite
    cycle edges, joined by two cut edges. Requires max mono degree at most
    n - 2k for the matchings to be guaranteed; a failed matching raises.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    side_iter, c = cut
    side = set(side_iter)
    other = set(range(g.n)) - side
    if not side or not other:
        raise ValueError("cut side must be a proper non-empty subset")
    col = g.colors
    for x in side:
        for y in other:
            if col[x][y] != c:
                raise ValueError(f"edge ({x},{y}) breaks the monochromatic cut")
    left = _match_avoiding_color(g, sorted(side), c, k)
    right = _match_avoiding_color(g, sorted(other), c, k)
    cycles: list[CycleSeq] = []
    for (x, x2), (y, y2) in zip(left, right):
        cyc = (x, x2, y, y2)
        if not is_pc_cycle(g, cyc):
            raise RuntimeError("cut construction produced a non-PC cycle; bug")
        cycles.append(cyc)
    return cycles


@dataclass
class GallaiPartition:
    """Partition with <= 2 colors between parts and one color per part pair."""

    partition: VertexPartition
    cut_colors: tuple[int, ...]
    between_color: dict[tuple[int, int], int]


def _components_outside(g: ColoredCompleteGraph, r: int, b: int) -> list[set[int]]:
    """Connected components of the graph of edges colored neither r nor b."""
    n = g.n
    col = g.colors
    unseen = set(range(n))
    comps: list[set[int]] = []
    while unseen:
        s = min(unseen)
        comp = {s}
        stack = [s]
        unseen.discard(s)
        while stack:
            u = stack.pop()
            row = col[u]
            for v in list(unseen):
                if v != u and row[v] != r and row[v] != b:
                    unseen.discard(v)
                    comp.add(v)
                    stack.append(v)
        comps.append(comp)
    return comps


def _colors_between(g: ColoredCompleteGraph, a: set[int], b: set[int], cap: int = 2) -> set[int]:
    cols: set[int] = set()
    mat = g.colors
    for x in a:
        row = mat[x]
        for y in b:
            cols.add(row[y])
            if len(cols) >= cap:
                return cols
    return cols


def _merge_multicolor_pairs(g: ColoredCompleteGraph, comps: list[set[int]]) -> list[set[int]]:
    parts = [set(p) for p in comps]
    changed = True
    while changed and len(parts) >= 2:
        changed = False
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                if len(_colors_between(g, parts[i], parts[j])) > 1:
                    parts[i] |= parts[j]
                    del parts[j]
                    changed = True
                    break
            if changed:
                break
    return parts


def _build_gallai(g: ColoredCompleteGraph, parts: list[frozenset[int]]) -> GallaiPartition:
    vp = VertexPartition(parts, n=g.n)
    between: dict[tuple[int, int], int] = {}
    cut: set[int] = set()
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            cols = _colors_between(g, set(parts[i]), set(parts[j]))
            if len(cols) != 1:
                raise RuntimeError("merge fixpoint left a multicolored pair; bug")
            c = next(iter(cols))
            between[(i, j)] = c
            cut.add(c)
    return GallaiPartition(vp, tuple(sorted(cut)), between)


def gallai_partition(
    g: ColoredCompleteGraph, minimize_q: bool = False
) -> GallaiPartition | None:
    """A Gallai partition of g, or None when no partition qualifies.

    For every unordered color pair (singles included) the components of the
    remaining colors seed the parts; parts joined by two colors are merged
    to a fixpoint and the result accepted when at least two parts survive.
    With ``minimize_q`` the accepted partition with fewest parts over all
    color pairs is returned, ties broken by the lexicographic color pair.
    """
    if g.n < 2:
        raise ValueError("partitions need at least 2 vertices")
    kc = max(g.color_count, 1)
    best: list[frozenset[int]] | None = None
    best_key: tuple[int, tuple[int, int]] | None = None
    for r in range(kc):
        for b in range(r, kc):
            comps = _components_outside(g, r, b)
            if len(comps) < 2:
                continue
            merged = _merge_multicolor_pairs(g, comps)
            if len(merged) < 2:
                continue
            parts = sorted((frozenset(p) for p in merged), key=min)
            if not minimize_q:
                return _build_gallai(g, parts)
            key = (len(parts), (r, b))
            if best_key is None or key < best_key:
                best, best_key = parts, key
    if best is None:
        return None
    return _build_gallai(g, best)


def validate_gallai(g: ColoredCompleteGraph, gp: GallaiPartition) -> str | None:
    """Check the Gallai partition clauses; return the first violation."""
    parts = gp.partition.parts
    if len(parts) < 2:
        return "fewer than 2 parts"
    all_between: set[int] = set()
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            cols = _colors_between(g, set(parts[i]), set(parts[j]), cap=3)
            if len(cols) != 1:
                return f"parts {i},{j} joined by {len(cols)} colors"
            c = next(iter(cols))
            if gp.between_color.get((i, j)) != c:
                return f"between_color wrong for parts {i},{j}"
            all_between.add(c)
    if len(all_between) > 2:
        return "more than 2 colors between parts"
    if tuple(sorted(all_between)) != gp.cut_colors:
        return "cut_colors field inconsistent"
    return None


@dataclass
class AnchoredPartition:
    """Partition around an anchor vertex that lies on no short PC cycle.

    Part 0 contains the anchor; every other part i sees the anchor side in
    its single color ``part_colors[i-1]``, colors between two parts stay
    within those parts' colors, and each part is internally monochromatic.
    ``witness`` is either a PC 4-cycle alternating between parts 1 and 2
    (when the graph has a Gallai partition) or a rainbow triangle meeting
    three distinct non-anchor parts (when it does not).
    """

    partition: VertexPartition
    v0: int
    part_colors: tuple[int, ...]
    witness: CycleSeq
    witness_kind: str  # "pc_c4" | "rainbow_triangle"


def _refine_around(
    g: ColoredCompleteGraph, v0: int, domain: frozenset[int]
) -> tuple[set[int], list[set[int]], list[int]]:
    """Color classes of v0 inside domain, refined until internally monochromatic.

    Vertices with an off-color edge inside their part migrate to the anchor
    side; one pass suffices but the loop runs to a fixpoint.
    """
    col = g.colors
    others = sorted(domain - {v0})
    if not others:
        raise ValueError("domain holds only the anchor")
    spoke_colors = sorted({col[v0][u] for u in others})
    if len(spoke_colors) < 2:
        raise RuntimeError(
            "anchor has color degree 1 in its domain; a monochromatic cut "
            "slipped past the precondition"
        )
    parts = [{u for u in others if col[v0][u] == c} for c in spoke_colors]
    colors = list(spoke_colors)
    anchor_side = {v0}
    changed = True
    while changed:
        changed = False
        kept_parts: list[set[int]] = []
        kept_colors: list[int] = []
        for part, c in zip(parts, colors):
            movers = {
                x for x in part if any(col[x][y] != c for y in part if y != x)
            }
            if movers:
                changed = True
                anchor_side |= movers
                part = part - movers
            if part:
                kept_parts.append(part)
                kept_colors.append(c)
        parts, colors = kept_parts, kept_colors
    if len(parts) < 2:
        raise RuntimeError("refinement collapsed below two parts; bug or bad input")
    return anchor_side, parts, colors


def _locate_cross_c4(
    g: ColoredCompleteGraph, p1: set[int], p2: set[int]
) -> CycleSeq:
    """The PC 4-cycle inside p1 ∪ p2, normalized to (x, y, z, w) with x,z in p1."""
    avoid = set(range(g.n)) - p1 - p2
    cyc = find_short_pc_cycle(g, avoid=avoid)
    if cyc is None or len(cyc) != 4:
        raise RuntimeError("expected a PC 4-cycle across the two parts; bug")
    if cyc[0] in p2:
        cyc = (cyc[1], cyc[2], cyc[3], cyc[0])
    if cyc[2] < cyc[0]:
        cyc = (cyc[2], cyc[3], cyc[0], cyc[1])
    if cyc[3] < cyc[1]:
        cyc = (cyc[0], cyc[3], cyc[2], cyc[1])
    if not (cyc[0] in p1 and cyc[2] in p1 and cyc[1] in p2 and cyc[3] in p2):
        raise RuntimeError("cross 4-cycle does not alternate the two parts; bug")
    return cyc


def anchored_partition(g: ColoredCompleteGraph, v0: int) -> AnchoredPartition:
    """Partition g around a vertex v0 lying on no short PC cycle.

    Preconditions: g has no monochromatic edge-cut and v0 is on no PC cycle
    of length at most 4 (equivalent to being on no PC cycle at all in a
    complete graph). Violations raise ValueError naming the failed one.

    When g has a Gallai partition the result has exactly two non-anchor
    parts and carries a PC 4-cycle witness across them; otherwise the
    witness is a rainbow triangle meeting three distinct non-anchor parts.
    """
    if g.n < 2:
        raise ValueError("need at least 2 vertices")
    g._check_vertex(v0)
    if find_monochromatic_cut(g) is not None:
        raise ValueError("precondition violated: graph has a monochromatic edge-cut")
    if find_short_pc_cycle(g, through=v0) is not None:
        raise ValueError("precondition violated: anchor vertex lies on a short PC cycle")

    gp = gallai_partition(g)
    if gp is not None:
        u0 = set(gp.partition.parts[gp.partition.index_of(v0)])
        domain = frozenset((set(range(g.n)) - u0) | {v0})
        anchor_side, parts, colors = _refine_around(g, v0, domain)
        if len(parts) != 2:
            raise RuntimeError("expected exactly two parts under a Gallai partition; bug")
        anchor_side |= u0
        witness = _locate_cross_c4(g, parts[0], parts[1])
        kind = "pc_c4"
    else:
        anchor_side, parts, colors = _refine_around(g, v0, frozenset(range(g.n)))
        witness = find_rainbow_triangle(g, avoid=anchor_side)
        if witness is None:
            raise RuntimeError("expected a rainbow triangle outside the anchor side; bug")
        kind = "rainbow_triangle"

    vp = VertexPartition([sorted(anchor_side)] + [sorted(p) for p in parts], n=g.n)
    result = AnchoredPartition(vp, v0, tuple(colors), witness, kind)
    if kind == "rainbow_triangle":
        idxs = {vp.index_of(x) for x in witness}
        if len(idxs) != 3 or 0 in idxs:
            raise RuntimeError("rainbow witness does not meet three non-anchor parts; bug")
    return result


def validate_anchored(
    g: ColoredCompleteGraph, ap: AnchoredPartition, check_witness_kind: bool = True
) -> str | None:
    """Check all anchored-partition clauses; return the first violation."""
    vp = ap.partition
    parts = vp.parts
    p = len(parts) - 1
    if ap.v0 not in parts[0]:
        return "anchor vertex not in part 0"
    if not (2 <= p <= color_degree(g, ap.v0)):
        return f"part count {p} outside 2..color_degree"
    if len(ap.part_colors) != p:
        return "part_colors length mismatch"
    if len(set(ap.part_colors)) != p:
        return "part colors not pairwise distinct"
    col = g.colors
    for i in range(1, p + 1):
        ci = ap.part_colors[i - 1]
        for x in parts[0]:
            for y in parts[i]:
                if col[x][y] != ci:
                    return f"edge ({x},{y}) breaks the single spoke color of part {i}"
    for i in range(1, p + 1):
        for j in range(i + 1, p + 1):
            allowed = {ap.part_colors[i - 1], ap.part_colors[j - 1]}
            for x in parts[i]:
                for y in parts[j]:
                    if col[x][y] not in allowed:
                        return f"edge ({x},{y}) colored outside parts {i},{j} colors"
    for i in range(1, p + 1):
        ci = ap.part_colors[i - 1]
        vs = sorted(parts[i])
        for a in range(len(vs)):
            for b in range(a + 1, len(vs)):
                if col[vs[a]][vs[b]] != ci:
                    return f"internal edge ({vs[a]},{vs[b]}) of part {i} off-color"
    if ap.witness_kind == "pc_c4":
        w = ap.witness
        if len(w) != 4 or not is_pc_cycle(g, w):
            return "witness is not a PC 4-cycle"
        if not (w[0] in parts[1] and w[2] in parts[1] and w[1] in parts[2] and w[3] in parts[2]):
            return "witness 4-cycle does not alternate parts 1 and 2"
    elif ap.witness_kind == "rainbow_triangle":
        w = ap.witness
        if len(w) != 3 or not is_rainbow(g, w):
            return "witness is not a rainbow triangle"
        idxs = {vp.index_of(x) for x in w}
        if len(idxs) != 3 or 0 in idxs:
            return "witness triangle does not meet three distinct non-anchor parts"
    else:
        return f"unknown witness kind {ap.witness_kind!r}"
    if check_witness_kind:
        has_gallai = gallai_partition(g) is not None
        if has_gallai != (ap.witness_kind == "pc_c4"):
            return "witness kind inconsistent with Gallai partition existence"
    return None
