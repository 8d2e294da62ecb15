"""Generators: extremal colorings, proper colorings, PC-cycle-free fixtures,
and seeded random instances.

Every generator is a deterministic function of its parameters (including
the seed), so any instance can be reproduced from its GenSpec.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, asdict
from typing import Sequence

from .ecg import ColoredCompleteGraph
from .tournaments import MultipartiteTournament

_DRAW_ATTEMPTS = 60
_MT_DRAW_ATTEMPTS = 20000


def walecki_hamilton_cycles(m: int) -> list[list[int]]:
    """Decompose K_m (m odd) into (m-1)/2 Hamilton cycles.

    Classical rotation construction: vertices 0..m-2 on a ring plus the
    center m-1; cycle j zigzags j, j+1, j-1, j+2, ... around the ring and
    closes through the center.
    """
    if m < 3 or m % 2 == 0:
        raise ValueError("need an odd m >= 3")
    ring = m - 1
    cycles: list[list[int]] = []
    for j in range(ring // 2):
        path = []
        for i in range(ring):
            off = (i + 1) // 2
            path.append((j + off) % ring if i % 2 == 1 else (j - off) % ring)
        cycles.append([m - 1] + path)
    return cycles


def proper_complete(n: int) -> ColoredCompleteGraph:
    """Proper edge coloring of K_n by the round-robin circle method.

    Even n uses n-1 colors (a one-factorization); odd n uses n colors with
    one idle vertex per round. Max mono degree is 1.
    """
    if n < 2:
        raise ValueError("need at least 2 vertices")
    rows = [[-1] * n for _ in range(n)]
    if n % 2 == 0:
        ring = n - 1
        for r in range(ring):
            rows[n - 1][r] = rows[r][n - 1] = r
            for i in range(1, n // 2):
                a = (r + i) % ring
                b = (r - i) % ring
                rows[a][b] = rows[b][a] = r
    else:
        for r in range(n):
            for i in range(1, (n + 1) // 2):
                a = (r + i) % n
                b = (r - i) % n
                rows[a][b] = rows[b][a] = r
    return ColoredCompleteGraph(rows)


def example1() -> ColoredCompleteGraph:
    """Six-vertex extremal coloring: max mono degree 2, packing number 1.

    Vertex 0 is a hub whose five spokes carry five fresh colors; the K_5 on
    vertices 1..5 splits into two Hamilton cycles colored with two more
    colors (7 colors in total).
    """
    rows = [[-1] * 6 for _ in range(6)]
    for v in range(1, 6):
        rows[0][v] = rows[v][0] = v - 1
    alpha, beta = 5, 6
    hams = walecki_hamilton_cycles(5)
    for cyc, c in zip(hams, (alpha, beta)):
        shifted = [v + 1 for v in cyc]
        for i, a in enumerate(shifted):
            b = shifted[(i + 1) % len(shifted)]
            rows[a][b] = rows[b][a] = c
    return ColoredCompleteGraph(rows)


def example2(k: int, n: int) -> ColoredCompleteGraph:
    """Extremal family on n vertices with max mono degree n - 3k/2.

    Requires even k >= 2 and n >= 9k/2 - 3. The first 3k-3 vertices carry a
    successor coloring along oriented Hamilton cycles (edge uv gets v's
    color when v follows u); the rest form a monochromatic clique, joined
    back by each front vertex's own color except for one fresh-colored
    spoke vertex. Contains at most k-1 disjoint PC cycles.
    """
    if k < 2 or k % 2 != 0:
        raise ValueError("k must be even and >= 2")
    if 2 * n < 9 * k - 6:
        raise ValueError(f"n must be at least {(9 * k - 6 + 1) // 2} for k={k}")
    m = 3 * k - 3
    alpha, beta = m, m + 1
    rows = [[-1] * n for _ in range(n)]
    for cyc in walecki_hamilton_cycles(m):
        for i, a in enumerate(cyc):
            b = cyc[(i + 1) % len(cyc)]
            rows[a][b] = rows[b][a] = b  # successor's color
    for u in range(m, n):
        for v in range(u + 1, n):
            rows[u][v] = rows[v][u] = alpha
    last = n - 1
    for v in range(m):
        rows[v][last] = rows[last][v] = beta
        for u in range(m, n - 1):
            rows[v][u] = rows[u][v] = v
    return ColoredCompleteGraph(rows)


def cascade(n: int, palette: int) -> ColoredCompleteGraph:
    """PC-cycle-free fixture: edge uv gets color min(u,v) mod palette.

    The least vertex of any cycle meets two equally colored cycle edges, so
    no PC cycle exists at any length.
    """
    if n < 2:
        raise ValueError("need at least 2 vertices")
    if palette < 1:
        raise ValueError("palette must be >= 1")
    rows = [[-1] * n for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            rows[u][v] = rows[v][u] = u % palette
    return ColoredCompleteGraph(rows)


def mono_bound_feasible(n: int, colors: int, bound: int) -> bool:
    """Whether some coloring of K_n with this palette meets the mono bound.

    Pigeonhole requires bound >= ceil((n-1)/colors). When colors*bound
    equals n-1 exactly, every color class must be bound-regular, which
    additionally needs n*bound even.
    """
    if bound < -(-(n - 1) // colors):
        return False
    if colors * bound == n - 1 and (n * bound) % 2 == 1:
        return False
    return True


def _repair_to_bound(
    rows: list[list[int]], n: int, colors: int, bound: int, rng: random.Random
) -> bool:
    """Recolor max-class edges toward the bound; True on success."""
    counts = [[0] * colors for _ in range(n)]
    totals = [0] * colors
    for u in range(n):
        for v in range(u + 1, n):
            c = rows[u][v]
            counts[u][c] += 1
            counts[v][c] += 1
            totals[c] += 2
    budget = 10 * n * n
    while budget > 0:
        worst, wv, wc = bound, -1, -1
        for v in range(n):
            row = counts[v]
            for c in range(colors):
                if row[c] > worst:
                    worst, wv, wc = row[c], v, c
        if wv < 0:
            return True
        neighbors = sorted(u for u in range(n) if u != wv and rows[wv][u] == wc)
        u = neighbors[rng.randrange(len(neighbors))]
        target = min(
            (c for c in range(colors) if c != wc), key=lambda c: (totals[c], c)
        )
        rows[wv][u] = rows[u][wv] = target
        for w in (wv, u):
            counts[w][wc] -= 1
            counts[w][target] += 1
        totals[wc] -= 2
        totals[target] += 2
        budget -= 1
    return max(max(row) for row in counts) <= bound


def random_colored(
    n: int, colors: int, seed: int, max_mono: int | None = None
) -> ColoredCompleteGraph:
    """Seeded uniform edge coloring, optionally repaired to a mono bound.

    With ``max_mono`` set, colorings are drawn and then repaired by
    recoloring an edge of the currently largest color class at a vertex to
    the globally least-used other color, up to 10 n^2 recolorings per draw.
    Raises ValueError when the bound is unreachable by pigeonhole and
    RuntimeError when the repair budget runs out.
    """
    if n < 2:
        raise ValueError("need at least 2 vertices")
    if colors < 1:
        raise ValueError("need at least 1 color")
    if max_mono is not None and not mono_bound_feasible(n, colors, max_mono):
        raise ValueError(
            f"max mono degree {max_mono} unreachable with {colors} colors on K_{n}"
        )
    rng = random.Random(seed)
    for _ in range(_DRAW_ATTEMPTS):
        rows = [[-1] * n for _ in range(n)]
        for u in range(n):
            for v in range(u + 1, n):
                c = rng.randrange(colors)
                rows[u][v] = rows[v][u] = c
        if max_mono is None or _repair_to_bound(rows, n, colors, max_mono, rng):
            return ColoredCompleteGraph(rows)
    raise RuntimeError(
        f"could not reach max mono degree {max_mono} on K_{n} with {colors} colors"
    )


def random_multipartite_tournament(
    part_sizes: Sequence[int],
    seed: int,
    min_out: int | None = None,
    triangle_free: bool = False,
) -> MultipartiteTournament:
    """Seeded uniform arc orientations over the given part sizes.

    With ``min_out`` set, draws are rejected until the minimum out-degree
    reaches it. ``triangle_free`` restricts to two parts, the supported
    family without directed triangles (no odd dicycles at all).
    """
    sizes = tuple(int(s) for s in part_sizes)
    if len(sizes) < 2 or min(sizes) < 1:
        raise ValueError("need at least 2 non-empty parts")
    if triangle_free and len(sizes) != 2:
        raise ValueError("triangle-free generation supports exactly 2 parts")
    n = sum(sizes)
    part_of = [i for i, s in enumerate(sizes) for _ in range(s)]
    cross = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if part_of[u] != part_of[v]
    ]
    if min_out is not None and min_out > len(cross) // n:
        raise ValueError(
            f"min out-degree {min_out} exceeds the average {len(cross)}/{n}"
        )
    rng = random.Random(seed)
    for _ in range(_MT_DRAW_ATTEMPTS):
        out = [0] * n
        for u, v in cross:
            if rng.getrandbits(1):
                out[u] |= 1 << v
            else:
                out[v] |= 1 << u
        if min_out is None or min(b.bit_count() for b in out) >= min_out:
            arcs = [
                (u, v) for u in range(n) for v in range(n) if (out[u] >> v) & 1
            ]
            return MultipartiteTournament(part_of, arcs)
    raise RuntimeError(
        f"min out-degree {min_out} not reached for sizes {sizes} after many draws"
    )


@dataclass(frozen=True)
class GenSpec:
    """Replayable description of a generated instance."""

    kind: str  # proper | example1 | example2 | cascade | random | random_tournament
    n: int | None = None
    k: int | None = None
    colors: int | None = None
    seed: int | None = None
    max_mono: int | None = None
    part_sizes: tuple[int, ...] | None = None
    min_out: int | None = None
    triangle_free: bool = False

    def to_dict(self) -> dict:
        return {key: val for key, val in asdict(self).items() if val not in (None, False)}

    @classmethod
    def from_dict(cls, d: dict) -> "GenSpec":
        d = dict(d)
        if "part_sizes" in d:
            d["part_sizes"] = tuple(d["part_sizes"])
        return cls(**d)


def build(spec: GenSpec):
    """Materialize a GenSpec into a graph or tournament."""
    kind = spec.kind
    if kind == "proper":
        return proper_complete(spec.n)
    if kind == "example1":
        return example1()
    if kind == "example2":
        return example2(spec.k, spec.n)
    if kind == "cascade":
        return cascade(spec.n, spec.colors)
    if kind == "random":
        return random_colored(spec.n, spec.colors, spec.seed, max_mono=spec.max_mono)
    if kind == "random_tournament":
        return random_multipartite_tournament(
            spec.part_sizes, spec.seed, min_out=spec.min_out, triangle_free=spec.triangle_free
        )
    raise ValueError(f"unknown generator kind {kind!r}")
