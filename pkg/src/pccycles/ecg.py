"""Data model for edge-colored complete graphs.

Vertices are the integers 0..n-1. An edge coloring assigns one small
nonnegative color id to every unordered pair; color ids are canonicalized
to the contiguous range 0..color_count-1 on construction. Instances are
immutable values and safe to share between threads.
"""

from __future__ import annotations

from typing import Iterable, Sequence

# A cycle is an ordered tuple of >= 3 distinct vertex ids, cyclically closed.
CycleSeq = tuple[int, ...]


def _shape_violation(rows: list[list[int]]) -> str | None:
    n = len(rows)
    if n < 1:
        return "empty matrix"
    for u, row in enumerate(rows):
        if len(row) != n:
            return f"row {u} has length {len(row)}, expected {n}"
    for u in range(n):
        for v in range(u + 1, n):
            c = rows[u][v]
            if isinstance(c, bool) or not isinstance(c, int) or c < 0:
                return f"bad color at ({u},{v})"
            if rows[v][u] != c:
                return f"asymmetry at ({u},{v})"
    return None


def validate(graph_or_matrix) -> str | None:
    """Check the colored-complete-graph invariants; return the first violation.

    Accepts either a ColoredCompleteGraph or a raw square matrix of color
    ids (diagonal entries are ignored). Returns None when everything holds,
    otherwise a short description such as ``"asymmetry at (0,2)"`` or
    ``"non-contiguous colors"``.
    """
    if isinstance(graph_or_matrix, ColoredCompleteGraph):
        rows = [list(r) for r in graph_or_matrix.colors]
        declared = graph_or_matrix.color_count
    else:
        rows = [list(r) for r in graph_or_matrix]
        declared = None
    bad = _shape_violation(rows)
    if bad:
        return bad
    n = len(rows)
    used = {rows[u][v] for u in range(n) for v in range(u + 1, n)}
    if used and used != set(range(len(used))):
        return "non-contiguous colors"
    if declared is not None and declared != len(used):
        return f"color_count {declared} does not match {len(used)} used colors"
    return None


class ColoredCompleteGraph:
    """Complete graph on 0..n-1 with one color id per unordered pair.

    ``colors`` is a full symmetric n x n tuple-of-tuples; diagonal entries
    are unused and stored as -1. Per-vertex per-color neighbor bitsets are
    precomputed so monochromatic degrees are O(1) popcounts.
    """

    __slots__ = ("n", "colors", "color_count", "_mono")

    def __init__(self, matrix: Sequence[Sequence[int]], *, canonicalize: bool = True):
        rows = [list(row) for row in matrix]
        bad = _shape_violation(rows)
        if bad:
            raise ValueError(bad)
        n = len(rows)
        used = sorted({rows[u][v] for u in range(n) for v in range(u + 1, n)})
        if canonicalize:
            remap = {c: i for i, c in enumerate(used)}
        else:
            if used != list(range(len(used))):
                raise ValueError("non-contiguous colors")
            remap = {c: c for c in used}
        for u in range(n):
            rows[u][u] = -1
            for v in range(u + 1, n):
                c = remap[rows[u][v]]
                rows[u][v] = c
                rows[v][u] = c
        self.n = n
        self.colors = tuple(tuple(r) for r in rows)
        self.color_count = len(used)
        mono = [[0] * self.color_count for _ in range(n)]
        for u in range(n):
            row = self.colors[u]
            for v in range(n):
                if v != u:
                    mono[u][row[v]] |= 1 << v
        self._mono = tuple(tuple(m) for m in mono)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int, int]]) -> "ColoredCompleteGraph":
        """Build from (u, v, color) triples covering every pair exactly once."""
        if n < 1:
            raise ValueError("need at least one vertex")
        rows = [[-1] * n for _ in range(n)]
        for u, v, c in pairs:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"bad pair ({u},{v})")
            if rows[u][v] != -1:
                raise ValueError(f"duplicate pair ({min(u, v)},{max(u, v)})")
            if c < 0:
                raise ValueError(f"negative color for pair ({u},{v})")
            rows[u][v] = c
            rows[v][u] = c
        for u in range(n):
            for v in range(u + 1, n):
                if rows[u][v] == -1:
                    raise ValueError(f"missing pair ({u},{v})")
        return cls(rows)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range 0..{self.n - 1}")

    def color(self, u: int, v: int) -> int:
        """Color of the edge uv."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError("complete graphs here have no loops")
        return self.colors[u][v]

    def mono_bits(self, v: int, c: int) -> int:
        """Bitset of neighbors joined to v by color c (0 for unused colors)."""
        self._check_vertex(v)
        if 0 <= c < self.color_count:
            return self._mono[v][c]
        return 0

    def __eq__(self, other) -> bool:
        return isinstance(other, ColoredCompleteGraph) and self.colors == other.colors

    def __hash__(self) -> int:
        return hash(self.colors)

    def __repr__(self) -> str:
        return f"ColoredCompleteGraph(n={self.n}, colors={self.color_count})"


def color_degree(g: ColoredCompleteGraph, v: int) -> int:
    """Number of distinct colors on edges at v."""
    if g.n < 2:
        raise ValueError("color degree needs at least 2 vertices")
    g._check_vertex(v)
    row = g.colors[v]
    return len({row[u] for u in range(g.n) if u != v})


def mono_degree(g: ColoredCompleteGraph, v: int, c: int) -> int:
    """Number of edges of color c at v."""
    g._check_vertex(v)
    if c < 0:
        raise ValueError("negative color")
    if c >= g.color_count:
        return 0
    return g._mono[v][c].bit_count()


def max_mono_degree(g: ColoredCompleteGraph) -> int:
    """Maximum over all vertices and colors of the monochromatic degree."""
    if g.n < 2:
        raise ValueError("max mono degree needs at least 2 vertices")
    return max(bits.bit_count() for row in g._mono for bits in row)


class VertexPartition:
    """Ordered family of disjoint non-empty vertex sets covering 0..n-1."""

    __slots__ = ("parts", "n", "_part_of")

    def __init__(self, parts: Iterable[Iterable[int]], n: int | None = None):
        ps = tuple(frozenset(p) for p in parts)
        if not ps:
            raise ValueError("need at least one part")
        if any(not p for p in ps):
            raise ValueError("parts must be non-empty")
        seen: set[int] = set()
        for p in ps:
            if seen & p:
                raise ValueError("parts overlap")
            seen |= p
        if n is None:
            n = max(seen) + 1
        if seen != set(range(n)):
            raise ValueError(f"parts do not cover 0..{n - 1}")
        self.parts = ps
        self.n = n
        self._part_of = {v: i for i, p in enumerate(ps) for v in p}

    def index_of(self, v: int) -> int:
        """Index of the part containing v."""
        return self._part_of[v]

    def __len__(self) -> int:
        return len(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, VertexPartition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        inner = ", ".join("{" + ",".join(map(str, sorted(p))) + "}" for p in self.parts)
        return f"VertexPartition([{inner}])"
