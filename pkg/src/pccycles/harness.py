"""Seeded verification campaigns over colored complete graphs and tournaments.

Campaigns draw per-sample seeds as a pure function of the master seed and
the sample index, so outcomes never depend on the degree of parallelism.
Every recorded violation embeds a replayable generator spec (or the full
serialized instance) and the name of the failed predicate.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .ecg import ColoredCompleteGraph, color_degree, max_mono_degree
from .cycles import (
    find_pc_cycle,
    find_short_pc_cycle,
    greedy_pack,
    pack_exact,
)
from .structure import (
    anchored_partition,
    find_monochromatic_cut,
    find_rainbow_triangle,
)
from .tournaments import (
    MultipartiteTournament,
    find_dicycle,
    from_multipartite_tournament,
    min_out_degree,
    pack_disjoint_dicycles,
    to_multipartite_tournament,
)
from .constructions import (
    GenSpec,
    build,
    mono_bound_feasible,
    proper_complete,
    random_colored,
    random_multipartite_tournament,
)
from .fileio import parse_ecg, parse_mt, serialize_ecg, serialize_mt, sniff_kind

_MASK64 = (1 << 64) - 1


def sample_seed(master_seed: int, index: int) -> int:
    """Per-sample seed: splitmix64 of the master seed and sample index."""
    x = (master_seed + 0x9E3779B97F4A7C15 * (index + 1)) & _MASK64
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & _MASK64
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & _MASK64
    x ^= x >> 31
    return x


@dataclass
class Violation:
    """One failed sample: what failed, and how to reproduce it."""

    index: int
    predicate: str
    params: dict
    genspec: dict | None
    instance: str
    detail: str = ""

    def to_record(self) -> dict:
        return {
            "index": self.index,
            "predicate": self.predicate,
            "params": self.params,
            "genspec": self.genspec,
            "instance": self.instance,
            "detail": self.detail,
        }


@dataclass
class VerificationReport:
    """Outcome of one campaign; empty violations means the campaign passed."""

    campaign: str
    params: dict
    master_seed: int
    samples: int
    violations: list[Violation] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_record(self) -> dict:
        # elapsed is intentionally excluded: structured records are
        # byte-identical across re-runs and worker counts.
        return {
            "campaign": self.campaign,
            "params": self.params,
            "master_seed": self.master_seed,
            "samples": self.samples,
            "passed": self.passed,
            "violations": [v.to_record() for v in self.violations],
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True, separators=(",", ":"))

    def to_text(self) -> str:
        lines = [
            f"campaign: {self.campaign}",
            f"params: {json.dumps(self.params, sort_keys=True)}",
            f"master_seed: {self.master_seed}",
            f"samples: {self.samples}",
            f"violations: {len(self.violations)}",
            f"result: {'PASS' if self.passed else 'FAIL'}",
            f"elapsed: {self.elapsed:.2f}s",
        ]
        for note in self.notes:
            lines.append(f"note: {note}")
        for v in self.violations:
            lines.append(f"violation[{v.index}] {v.predicate} {v.detail}".rstrip())
        return "\n".join(lines) + "\n"


# Predicates a violation can be replayed against (True = instance passes).
PREDICATES: dict[str, Callable] = {
    "short-pc-cycle-exists": lambda inst, p: find_short_pc_cycle(inst) is not None,
    "two-disjoint-short-pc-cycles": lambda inst, p: pack_exact(inst, 2) is not None,
    "k-disjoint-short-pc-cycles": lambda inst, p: pack_exact(inst, p["k"]) is not None,
    "greedy-pack-achieves-k": lambda inst, p: greedy_pack(inst, p["k"]).achieved == p["k"],
    "k-disjoint-dicycles": lambda inst, p: pack_disjoint_dicycles(inst, p["k"]) is not None,
}


def replay_violation(violation: Violation) -> bool:
    """Rebuild a recorded violation and re-run its predicate.

    Returns True when the instance still fails (the violation reproduces).
    """
    if violation.genspec:
        instance = build(GenSpec.from_dict(violation.genspec))
    else:
        kind = sniff_kind(violation.instance)
        instance = parse_ecg(violation.instance) if kind == "ecg" else parse_mt(violation.instance)
    check = PREDICATES[violation.predicate]
    return not check(instance, violation.params)


def _run_indexed(fn: Callable[[int], Violation | None], count: int, workers: int) -> list[Violation]:
    if workers <= 1:
        results = [fn(i) for i in range(count)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(fn, range(count)))
    return [r for r in results if r is not None]


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def verify_theorem_k2(
    n_values: Sequence[int],
    samples: int,
    colors_values: Sequence[int] = (2, 3),
    master_seed: int = 0,
    workers: int = 1,
) -> VerificationReport:
    """Campaign: max mono degree <= n-5 forces two disjoint short PC cycles.

    Samples rotate over the feasible (n, colors) combinations; combinations
    where the pigeonhole bound makes the constraint unreachable are skipped
    with a note. Violations would disprove a proven statement, so any hit
    is a bug.
    """
    t0 = time.perf_counter()
    notes: list[str] = []
    combos: list[tuple[int, int, int]] = []
    for n in n_values:
        bound = n - 5
        if bound < 1:
            notes.append(f"n={n} skipped: bound n-5 below 1")
            continue
        for c in colors_values:
            if mono_bound_feasible(n, c, bound):
                combos.append((n, c, bound))
            else:
                notes.append(f"(n={n}, colors={c}) skipped: max mono <= {bound} is unreachable")
    if not combos:
        raise ValueError("no feasible (n, colors) combination in the requested ranges")

    def one(i: int) -> Violation | None:
        n, c, bound = combos[i % len(combos)]
        seed = sample_seed(master_seed, i)
        g = random_colored(n, c, seed, max_mono=bound)
        if pack_exact(g, 2) is not None:
            return None
        spec = GenSpec("random", n=n, colors=c, seed=seed, max_mono=bound)
        return Violation(i, "two-disjoint-short-pc-cycles", {"k": 2}, spec.to_dict(), serialize_ecg(g))

    violations = _run_indexed(one, samples, workers)
    return VerificationReport(
        "theorem-k2",
        {"n_values": list(n_values), "samples": samples, "colors": list(colors_values)},
        master_seed,
        samples,
        violations,
        notes,
        time.perf_counter() - t0,
    )


def verify_short_cycle_bound(
    samples: int,
    master_seed: int = 0,
    n_values: Sequence[int] = (5, 6, 7, 8, 9, 10),
    colors_values: Sequence[int] = (2, 3, 4),
    workers: int = 1,
) -> VerificationReport:
    """Campaign: max mono degree <= n-2 forces a short PC cycle.

    Unconstrained random colorings are drawn and filtered to the degree
    hypothesis (redrawing with derived sub-seeds when the filter rejects).
    """
    t0 = time.perf_counter()
    nv = tuple(n_values)
    cv = tuple(colors_values)

    def one(i: int) -> Violation | None:
        n = nv[i % len(nv)]
        c = cv[(i // len(nv)) % len(cv)]
        base = sample_seed(master_seed, i)
        for t in range(500):
            seed = sample_seed(base, t)
            g = random_colored(n, c, seed)
            if max_mono_degree(g) <= n - 2:
                break
        else:
            raise RuntimeError(f"filter never accepted a sample for n={n}, colors={c}")
        if find_short_pc_cycle(g) is not None:
            return None
        spec = GenSpec("random", n=n, colors=c, seed=seed)
        return Violation(i, "short-pc-cycle-exists", {}, spec.to_dict(), serialize_ecg(g))

    violations = _run_indexed(one, samples, workers)
    return VerificationReport(
        "short-cycle-bound",
        {"n_values": list(nv), "samples": samples, "colors": list(cv)},
        master_seed,
        samples,
        violations,
        [],
        time.perf_counter() - t0,
    )


def verify_greedy_bound(
    samples: int,
    master_seed: int = 0,
    k: int = 2,
    n_values: Sequence[int] = (9, 10, 11, 12),
    workers: int = 1,
) -> VerificationReport:
    """Campaign: max mono degree <= n-4k+2 lets the greedy packing reach k."""
    t0 = time.perf_counter()
    nv = tuple(n_values)
    plans: list[tuple[int, int, int]] = []
    for n in nv:
        bound = n - 4 * k + 2
        if bound < 1:
            raise ValueError(f"n={n} leaves no feasible bound for k={k}")
        feasible = [c for c in range(2, n) if mono_bound_feasible(n, c, bound)]
        if not feasible:
            raise ValueError(f"no feasible palette for n={n}, k={k}")
        plans.append((n, feasible[0], bound))
        if len(feasible) > 1:
            plans.append((n, feasible[1], bound))

    def one(i: int) -> Violation | None:
        n, c, bound = plans[i % len(plans)]
        seed = sample_seed(master_seed, i)
        g = random_colored(n, c, seed, max_mono=bound)
        if greedy_pack(g, k).achieved == k:
            return None
        spec = GenSpec("random", n=n, colors=c, seed=seed, max_mono=bound)
        return Violation(i, "greedy-pack-achieves-k", {"k": k}, spec.to_dict(), serialize_ecg(g))

    violations = _run_indexed(one, samples, workers)
    return VerificationReport(
        "greedy-pack-bound",
        {"n_values": list(nv), "samples": samples, "k": k},
        master_seed,
        samples,
        violations,
        [],
        time.perf_counter() - t0,
    )


@dataclass
class CounterexampleChecklist:
    """Per-clause structural checks for a minimum-counterexample candidate."""

    k: int
    k_at_least_3: bool
    two_or_three_colors: bool
    no_rainbow_triangle: bool
    no_monochromatic_cut: bool
    pc_c4_cover: bool

    @property
    def failed_clauses(self) -> tuple[str, ...]:
        pairs = [
            ("a", self.k_at_least_3),
            ("b", self.two_or_three_colors),
            ("c", self.no_rainbow_triangle),
            ("d", self.no_monochromatic_cut),
            ("e", self.pc_c4_cover),
        ]
        return tuple(name for name, ok in pairs if not ok)

    @property
    def all_hold(self) -> bool:
        return not self.failed_clauses

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "a_k_at_least_3": self.k_at_least_3,
            "b_two_or_three_colors": self.two_or_three_colors,
            "c_no_rainbow_triangle": self.no_rainbow_triangle,
            "d_no_monochromatic_cut": self.no_monochromatic_cut,
            "e_pc_c4_cover": self.pc_c4_cover,
            "failed": list(self.failed_clauses),
        }


def _pc_c4_cover(g: ColoredCompleteGraph, k: int) -> bool:
    """Every vertex is on a PC 4-cycle after deleting any <= k-1 vertices."""
    for size in range(k):
        for S in combinations(range(g.n), size):
            s = set(S)
            for v in range(g.n):
                if v in s:
                    continue
                if find_short_pc_cycle(g, through=v, avoid=s, lengths=(4,)) is None:
                    return False
    return True


def check_min_counterexample(g: ColoredCompleteGraph, k: int) -> CounterexampleChecklist:
    """Evaluate the structural clauses a minimum counterexample must satisfy.

    A candidate failing any clause is thereby explained away; a candidate
    passing all of them deserves manual review.
    """
    return CounterexampleChecklist(
        k=k,
        k_at_least_3=k >= 3,
        two_or_three_colors=g.color_count in (2, 3),
        no_rainbow_triangle=find_rainbow_triangle(g) is None,
        no_monochromatic_cut=g.n >= 2 and find_monochromatic_cut(g) is None,
        pc_c4_cover=_pc_c4_cover(g, k),
    )


def hunt_conjecture(
    n_values: Sequence[int],
    k: int,
    samples: int,
    colors_values: Sequence[int] | None = None,
    master_seed: int = 0,
    workers: int = 1,
) -> VerificationReport:
    """Hunt for counterexamples: max mono <= n-3k+1 yet no k disjoint cycles.

    For each n the degree bound is n-3k+1; a bound of exactly 1 admits only
    proper colorings, so that slice contributes the canonical one. Without
    an explicit palette the two smallest feasible color counts are used.
    Any violation is a counterexample candidate: it is recorded with its
    structural checklist rather than treated as a bug.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    t0 = time.perf_counter()
    notes: list[str] = []
    proper_ns: list[int] = []
    random_plans: list[tuple[int, tuple[int, ...], int]] = []
    for n in n_values:
        if n < 3 * k:
            notes.append(f"n={n} skipped: fewer than {3 * k} vertices cannot host {k} cycles")
            continue
        bound = n - 3 * k + 1
        if bound < 1:
            notes.append(f"n={n} skipped: bound {bound} is unsatisfiable")
            continue
        if bound == 1:
            proper_ns.append(n)
            notes.append(f"n={n}: bound 1 admits only proper colorings; checking the canonical one")
            continue
        if colors_values is None:
            # bound 2 forces near-perfect-matching color classes, where the
            # random repair stalls; demand one extra unit of slack there
            floor = n + 1 if bound <= 2 else n
            cols = tuple(
                c for c in range(2, n)
                if mono_bound_feasible(n, c, bound) and c * bound >= floor
            )[:2]
            if not cols:
                cols = tuple(c for c in range(2, n) if mono_bound_feasible(n, c, bound))[:2]
        else:
            cols = tuple(c for c in colors_values if mono_bound_feasible(n, c, bound))
        if not cols:
            notes.append(f"n={n} skipped: no feasible palette")
            continue
        random_plans.append((n, cols, bound))
    if not proper_ns and not random_plans:
        raise ValueError("no feasible slice for the requested parameters")

    jobs: list[tuple[str, int, int | None, int | None]] = []
    for n in proper_ns:
        jobs.append(("proper", n, None, None))
    if random_plans:
        for i in range(samples):
            n, cols, bound = random_plans[i % len(random_plans)]
            jobs.append(("random", n, cols[i % len(cols)], bound))

    def one(i: int) -> Violation | None:
        mode, n, c, bound = jobs[i]
        if mode == "proper":
            g = proper_complete(n)
            spec = GenSpec("proper", n=n)
        else:
            seed = sample_seed(master_seed, i)
            g = random_colored(n, c, seed, max_mono=bound)
            spec = GenSpec("random", n=n, colors=c, seed=seed, max_mono=bound)
        if pack_exact(g, k) is not None:
            return None
        checklist = check_min_counterexample(g, k)
        return Violation(
            i,
            "k-disjoint-short-pc-cycles",
            {"k": k},
            spec.to_dict(),
            serialize_ecg(g),
            detail=f"checklist={json.dumps(checklist.to_dict(), sort_keys=True)}",
        )

    violations = _run_indexed(one, len(jobs), workers)
    return VerificationReport(
        "hunt-conjecture",
        {
            "n_values": list(n_values),
            "k": k,
            "samples": samples,
            "colors": list(colors_values) if colors_values is not None else None,
        },
        master_seed,
        len(jobs),
        violations,
        notes,
        time.perf_counter() - t0,
    )


def _iter_rgs(m: int, max_colors: int):
    """Restricted growth strings of length m over at most max_colors symbols.

    One canonical representative per coloring up to color relabeling.
    """
    a = [0] * m

    def rec(i: int, mx: int):
        if i == m:
            yield tuple(a)
            return
        for c in range(min(mx + 2, max_colors)):
            a[i] = c
            yield from rec(i + 1, mx if c <= mx else c)

    yield from rec(0, -1)


def exhaustive_tiny(n: int, max_colors: int) -> VerificationReport:
    """Exhaustively check every coloring of K_n (up to color relabeling).

    Guarded to n <= 6 and max_colors <= 3. Asserts the short-PC-cycle
    guarantee wherever max mono degree <= n-2 holds, and the two-disjoint
    guarantee wherever n >= 6 and max mono degree <= n-5.
    """
    if n > 6 or max_colors > 3:
        raise ValueError("guard: exhaustive sweep limited to n <= 6 and max_colors <= 3")
    if n < 3 or max_colors < 1:
        raise ValueError("nothing to enumerate below K_3 or 1 color")
    t0 = time.perf_counter()
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    total = 0
    checked_short = 0
    checked_pairs = 0
    violations: list[Violation] = []
    for rgs in _iter_rgs(len(edges), max_colors):
        total += 1
        rows = [[-1] * n for _ in range(n)]
        for (u, v), c in zip(edges, rgs):
            rows[u][v] = rows[v][u] = c
        g = ColoredCompleteGraph(rows)
        delta = max_mono_degree(g)
        if delta <= n - 2:
            checked_short += 1
            if find_short_pc_cycle(g) is None:
                violations.append(
                    Violation(total - 1, "short-pc-cycle-exists", {}, None, serialize_ecg(g))
                )
        if n >= 6 and delta <= n - 5:
            checked_pairs += 1
            if pack_exact(g, 2) is None:
                violations.append(
                    Violation(total - 1, "two-disjoint-short-pc-cycles", {"k": 2}, None, serialize_ecg(g))
                )
    notes = [
        f"colorings={total}",
        f"short-cycle-hypothesis-held={checked_short}",
        f"two-disjoint-hypothesis-held={checked_pairs}",
    ]
    return VerificationReport(
        "exhaustive-tiny",
        {"n": n, "max_colors": max_colors},
        0,
        total,
        violations,
        notes,
        time.perf_counter() - t0,
    )


_DICYCLE_SLICES: dict[str, list[tuple[int, ...]]] = {
    "general": [(1,) * 10, (1,) * 11, (1,) * 12, (1, 1, 1, 1, 1, 1, 1, 1, 1, 3)],
    "bipartite": [(7, 7), (8, 8)],
    "few-parts": [(7, 7), (4, 4, 4)],
}


def verify_dicycle_packing(
    slice_name: str,
    samples: int,
    master_seed: int = 0,
    k: int = 2,
    workers: int = 1,
) -> VerificationReport:
    """Disjoint-dicycle slices over random multipartite tournaments.

    ``general`` demands min out-degree 3k-2 on mixed shapes; ``bipartite``
    (the triangle-free family) and ``few-parts`` (2- and 3-partite shapes)
    demand 2k-1. All three bounds are proven to force k disjoint dicycles,
    so any violation is a bug.
    """
    if slice_name not in _DICYCLE_SLICES:
        raise ValueError(f"slice must be one of {sorted(_DICYCLE_SLICES)}")
    t0 = time.perf_counter()
    shapes = _DICYCLE_SLICES[slice_name]
    target = 3 * k - 2 if slice_name == "general" else 2 * k - 1
    bipartite_only = slice_name == "bipartite"

    def one(i: int) -> Violation | None:
        shape = shapes[i % len(shapes)]
        seed = sample_seed(master_seed, i)
        mt = random_multipartite_tournament(
            shape, seed, min_out=target, triangle_free=bipartite_only
        )
        if pack_disjoint_dicycles(mt, k) is not None:
            return None
        spec = GenSpec(
            "random_tournament",
            part_sizes=shape,
            seed=seed,
            min_out=target,
            triangle_free=bipartite_only,
        )
        return Violation(i, "k-disjoint-dicycles", {"k": k}, spec.to_dict(), serialize_mt(mt))

    violations = _run_indexed(one, samples, workers)
    return VerificationReport(
        f"dicycle-packing-{slice_name}",
        {"slice": slice_name, "samples": samples, "k": k, "min_out": target},
        master_seed,
        samples,
        violations,
        [],
        time.perf_counter() - t0,
    )


def verify_proposition_pair(
    instance,
    f_value: int,
    l: int,
    forbidden_lengths: Iterable[int] = (),
    k: int = 2,
) -> VerificationReport:
    """Check the paired packing statements on one tournament or one graph.

    Tournament side: min out-degree >= f and no forbidden-length dicycles
    must yield k disjoint dicycles. Graph side: max mono degree <= n-f-1
    and no forbidden-length PC cycles must yield k disjoint PC cycles or
    put every vertex of color degree <= l on some PC cycle. Each side is
    also cross-checked through the bridge transformation. Instances whose
    hypotheses fail are skipped with a note.
    """
    if f_value < 2 * k - 1:
        raise ValueError("f_value must be at least 2k-1")
    if l < 2:
        raise ValueError("l must be >= 2")
    t0 = time.perf_counter()
    lengths = tuple(sorted(set(forbidden_lengths)))
    params = {"f": f_value, "l": l, "forbidden_lengths": list(lengths), "k": k}
    notes: list[str] = []
    violations: list[Violation] = []

    def flag(predicate: str, instance_text: str, detail: str = "") -> None:
        violations.append(Violation(0, predicate, {"k": k}, None, instance_text, detail))

    if isinstance(instance, MultipartiteTournament):
        mt = instance
        text = serialize_mt(mt)
        if min_out_degree(mt) < f_value:
            notes.append(f"skipped: min out-degree {min_out_degree(mt)} below f={f_value}")
        elif any(find_dicycle(mt, length=i) is not None for i in lengths):
            notes.append("skipped: a forbidden-length dicycle is present")
        else:
            packed_mt = pack_disjoint_dicycles(mt, k) is not None
            if not packed_mt:
                flag("k-disjoint-dicycles", text)
            bridge = from_multipartite_tournament(mt)
            g = bridge.graph
            gtext = serialize_ecg(g)
            if max_mono_degree(g) > g.n - f_value - 1:
                flag("bridge-degree-transfer", gtext, "max mono degree exceeds n-f-1")
            if find_short_pc_cycle(g, through=bridge.v0) is not None:
                flag("bridge-hub-off-cycles", gtext, "hub vertex lies on a PC cycle")
            for i in lengths:
                if find_pc_cycle(g, i) is not None:
                    flag("bridge-length-transfer", gtext, f"PC cycle of forbidden length {i}")
            packed_g = pack_exact(g, k) is not None
            low = [v for v in range(g.n) if color_degree(g, v) <= l]
            uncovered = [v for v in low if find_short_pc_cycle(g, through=v) is None]
            if not packed_g and uncovered:
                flag("pc-side-disjunction", gtext, f"vertices {uncovered} of low color degree miss PC cycles")
            if packed_mt != packed_g:
                flag("bridge-pack-consistency", gtext, f"dicycle packing {packed_mt} vs PC packing {packed_g}")
    elif isinstance(instance, ColoredCompleteGraph):
        g = instance
        text = serialize_ecg(g)
        n = g.n
        if max_mono_degree(g) > n - f_value - 1:
            notes.append(f"skipped: max mono degree {max_mono_degree(g)} above n-f-1={n - f_value - 1}")
        elif any(find_pc_cycle(g, i) is not None for i in lengths):
            notes.append("skipped: a forbidden-length PC cycle is present")
        else:
            packed_g = pack_exact(g, k) is not None
            low = [v for v in range(n) if color_degree(g, v) <= l]
            uncovered = [v for v in low if find_short_pc_cycle(g, through=v) is None]
            if not packed_g and uncovered:
                flag("pc-side-disjunction", text, f"vertices {uncovered} of low color degree miss PC cycles")
            if find_monochromatic_cut(g) is not None:
                notes.append("bridge cross-check skipped: monochromatic edge-cut present")
            elif not uncovered:
                notes.append("bridge cross-check skipped: every low-color-degree vertex lies on a PC cycle")
            else:
                v0 = min(uncovered)
                ap = anchored_partition(g, v0)
                mt = to_multipartite_tournament(g, v0, ap)
                if min_out_degree(mt) < f_value:
                    flag("bridge-degree-transfer", text, "derived tournament misses the out-degree bound")
                if pack_disjoint_dicycles(mt, k) is not None and not packed_g:
                    flag("bridge-pack-consistency", text, "dicycle packing exists but PC packing does not")
    else:
        raise ValueError("instance must be a MultipartiteTournament or ColoredCompleteGraph")

    return VerificationReport(
        "proposition-pair",
        params,
        0,
        1,
        violations,
        notes,
        time.perf_counter() - t0,
    )
