"""Text formats for colored complete graphs and multipartite tournaments.

ECG files: a header ``ecg <n> <colors>`` followed by one line ``u v c`` per
unordered pair with u < v, sorted by (u, v). MT files: a header
``mt <n> <parts>``, a line of n part indices, then one line ``u v`` per
arc, sorted by (tail, head). Lines starting with ``#`` are comments.
Serializing a parsed canonical file reproduces it byte for byte.
"""

from __future__ import annotations

from .ecg import ColoredCompleteGraph
from .tournaments import MultipartiteTournament


class ParseError(ValueError):
    """Malformed input text; the message names the line and the cause."""


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_ecg(text: str) -> ColoredCompleteGraph:
    """Parse an ECG file; colors are canonicalized on load."""
    lines = _data_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty input") from None
    fields = header.split()
    if len(fields) != 3 or fields[0] != "ecg":
        raise ParseError(f"line {lineno}: expected header 'ecg <n> <colors>'")
    try:
        n, colors = int(fields[1]), int(fields[2])
    except ValueError:
        raise ParseError(f"line {lineno}: non-numeric header fields") from None
    if n < 1 or colors < 0:
        raise ParseError(f"line {lineno}: bad sizes in header")
    rows = [[-1] * n for _ in range(n)]
    for lineno, line in lines:
        fields = line.split()
        if len(fields) != 3:
            raise ParseError(f"line {lineno}: expected 'u v c'")
        try:
            u, v, c = (int(f) for f in fields)
        except ValueError:
            raise ParseError(f"line {lineno}: non-numeric fields") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: vertex out of range")
        if u >= v:
            raise ParseError(f"line {lineno}: pairs must satisfy u < v")
        if not (0 <= c < colors):
            raise ParseError(f"line {lineno}: color {c} out of range 0..{colors - 1}")
        if rows[u][v] != -1:
            raise ParseError(f"line {lineno}: duplicate pair ({u},{v})")
        rows[u][v] = rows[v][u] = c
    for u in range(n):
        for v in range(u + 1, n):
            if rows[u][v] == -1:
                raise ParseError(f"missing pair ({u},{v})")
    return ColoredCompleteGraph(rows)


def serialize_ecg(g: ColoredCompleteGraph) -> str:
    """Canonical ECG text for a graph."""
    out = [f"ecg {g.n} {g.color_count}"]
    for u in range(g.n):
        row = g.colors[u]
        for v in range(u + 1, g.n):
            out.append(f"{u} {v} {row[v]}")
    return "\n".join(out) + "\n"


def parse_mt(text: str) -> MultipartiteTournament:
    """Parse an MT file, validating the tournament invariants."""
    lines = _data_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty input") from None
    fields = header.split()
    if len(fields) != 3 or fields[0] != "mt":
        raise ParseError(f"line {lineno}: expected header 'mt <n> <parts>'")
    try:
        n, part_count = int(fields[1]), int(fields[2])
    except ValueError:
        raise ParseError(f"line {lineno}: non-numeric header fields") from None
    try:
        lineno, parts_line = next(lines)
    except StopIteration:
        raise ParseError("missing part-index line") from None
    fields = parts_line.split()
    if len(fields) != n:
        raise ParseError(f"line {lineno}: expected {n} part indices")
    try:
        part_of = [int(f) for f in fields]
    except ValueError:
        raise ParseError(f"line {lineno}: non-numeric part index") from None
    if any(p < 0 or p >= part_count for p in part_of):
        raise ParseError(f"line {lineno}: part index out of range")
    arcs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, line in lines:
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-numeric fields") from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError(f"line {lineno}: bad arc ({u},{v})")
        if part_of[u] == part_of[v]:
            raise ParseError(f"line {lineno}: arc within part")
        if (u, v) in seen or (v, u) in seen:
            raise ParseError(f"line {lineno}: pair ({min(u, v)},{max(u, v)}) oriented twice")
        seen.add((u, v))
        arcs.append((u, v))
    for u in range(n):
        for v in range(u + 1, n):
            if part_of[u] != part_of[v] and (u, v) not in seen and (v, u) not in seen:
                raise ParseError(f"pair ({u},{v}) unoriented")
    try:
        return MultipartiteTournament(part_of, arcs)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def serialize_mt(mt: MultipartiteTournament) -> str:
    """Canonical MT text for a tournament."""
    out = [f"mt {mt.n} {mt.part_count}", " ".join(str(p) for p in mt.part_of)]
    out.extend(f"{u} {v}" for u, v in mt.arcs())
    return "\n".join(out) + "\n"


def sniff_kind(text: str) -> str:
    """'ecg' or 'mt' judging by the first data line."""
    for _, line in _data_lines(text):
        word = line.split(None, 1)[0]
        if word in ("ecg", "mt"):
            return word
        break
    raise ParseError("unrecognized format: expected an 'ecg' or 'mt' header")


def ecg_to_dot(g: ColoredCompleteGraph) -> str:
    """DOT rendering with edge colors as labels."""
    out = ["graph ecg {", "  node [shape=circle];"]
    for u in range(g.n):
        row = g.colors[u]
        for v in range(u + 1, g.n):
            out.append(f'  {u} -- {v} [label="{row[v]}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def mt_to_dot(mt: MultipartiteTournament) -> str:
    """DOT rendering with part indices on the nodes."""
    out = ["digraph mt {"]
    for v in range(mt.n):
        out.append(f'  {v} [label="{v} (p{mt.part_of[v]})"];')
    for u, v in mt.arcs():
        out.append(f"  {u} -> {v};")
    out.append("}")
    return "\n".join(out) + "\n"
