"""Command-line interface.

Subcommands read and write the ECG/MT text formats on standard streams so
they compose through pipes. Exit codes: 0 success or campaign pass, 1 a
violation was found, 2 usage or input error. ``--json-lines`` switches the
analysis and verify commands to one-record-per-line structured output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import harness
from .constructions import GenSpec, build
from .cycles import (
    greedy_pack,
    is_pc_cycle,
    max_pack,
    pack_exact,
    shorten_pc_cycle,
)
from .ecg import ColoredCompleteGraph, color_degree, max_mono_degree
from .fileio import (
    ParseError,
    ecg_to_dot,
    mt_to_dot,
    parse_ecg,
    parse_mt,
    serialize_ecg,
    serialize_mt,
    sniff_kind,
)
from .structure import (
    anchored_partition,
    find_monochromatic_cut,
    find_rainbow_triangle,
    gallai_partition,
)
from .tournaments import (
    find_dicycle,
    from_multipartite_tournament,
    min_out_degree,
    pack_disjoint_dicycles,
    pad_to_l_partite,
    to_multipartite_tournament,
)


def _jsonline(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def _read_ecg() -> ColoredCompleteGraph:
    return parse_ecg(sys.stdin.read())


def _read_mt():
    return parse_mt(sys.stdin.read())


def _parse_range(text: str) -> list[int]:
    """'6..9' -> [6, 7, 8, 9]; '6,8' -> [6, 8]; '7' -> [7]."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(part) for part in text.split(",") if part]


def _parse_sizes(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.split(",") if part)


def _cmd_gen(args) -> int:
    spec = GenSpec(
        kind=args.kind,
        n=args.n,
        k=args.k,
        colors=args.colors,
        seed=args.seed,
        max_mono=args.max_mono,
        part_sizes=_parse_sizes(args.parts) if args.parts else None,
        min_out=args.min_out,
        triangle_free=args.triangle_free,
    )
    instance = build(spec)
    if isinstance(instance, ColoredCompleteGraph):
        sys.stdout.write(serialize_ecg(instance))
    else:
        sys.stdout.write(serialize_mt(instance))
    return 0


def _cmd_analyze(args) -> int:
    g = _read_ecg()
    triangle = find_rainbow_triangle(g)
    cut = find_monochromatic_cut(g) if g.n >= 2 else None
    degrees = [color_degree(g, v) for v in range(g.n)] if g.n >= 2 else []
    record = {
        "n": g.n,
        "colors": g.color_count,
        "max_mono_degree": max_mono_degree(g) if g.n >= 2 else 0,
        "color_degrees": degrees,
        "rainbow_triangle": list(triangle) if triangle else None,
        "mono_cut": {"side": sorted(cut[0]), "color": cut[1]} if cut else None,
    }
    if args.json_lines:
        print(_jsonline(record))
    else:
        print(f"n {record['n']}")
        print(f"colors {record['colors']}")
        print(f"max-mono-degree {record['max_mono_degree']}")
        print("color-degrees " + " ".join(map(str, degrees)))
        if triangle:
            print("rainbow-triangle " + " ".join(map(str, triangle)))
        else:
            print("rainbow-triangle none")
        if cut:
            print(f"mono-cut color={cut[1]} side=" + ",".join(map(str, sorted(cut[0]))))
        else:
            print("mono-cut none")
    return 0


def _cmd_pack(args) -> int:
    g = _read_ecg()
    if args.max:
        value = max_pack(g)
        print(_jsonline({"max_pack": value}) if args.json_lines else value)
        return 0
    if args.greedy:
        result = greedy_pack(g, args.k)
        record = {
            "requested_k": args.k,
            "achieved": result.achieved,
            "cycles": [list(c) for c in result.cycles],
        }
        if args.json_lines:
            print(_jsonline(record))
        else:
            print(f"achieved {result.achieved}")
            for cyc in result.cycles:
                print("cycle " + " ".join(map(str, cyc)))
        return 0
    found = pack_exact(g, args.k)
    if args.json_lines:
        print(_jsonline({"k": args.k, "cycles": [list(c) for c in found] if found else None}))
    elif found is None:
        print("none")
    else:
        for cyc in found:
            print("cycle " + " ".join(map(str, cyc)))
    return 0


def _cmd_partition(args) -> int:
    g = _read_ecg()
    if args.which == "gallai":
        gp = gallai_partition(g, minimize_q=args.minimize_q)
        if gp is None:
            print(_jsonline({"gallai": None}) if args.json_lines else "none")
            return 0
        record = {
            "gallai": {
                "parts": [sorted(p) for p in gp.partition.parts],
                "cut_colors": list(gp.cut_colors),
            }
        }
        if args.json_lines:
            print(_jsonline(record))
        else:
            for i, part in enumerate(gp.partition.parts):
                print(f"part {i} " + " ".join(map(str, sorted(part))))
            print("cut-colors " + " ".join(map(str, gp.cut_colors)))
        return 0
    ap = anchored_partition(g, args.v0)
    record = {
        "anchored": {
            "v0": ap.v0,
            "parts": [sorted(p) for p in ap.partition.parts],
            "part_colors": list(ap.part_colors),
            "witness": list(ap.witness),
            "witness_kind": ap.witness_kind,
        }
    }
    if args.json_lines:
        print(_jsonline(record))
    else:
        for i, part in enumerate(ap.partition.parts):
            print(f"part {i} " + " ".join(map(str, sorted(part))))
        print("part-colors " + " ".join(map(str, ap.part_colors)))
        print(f"witness {ap.witness_kind} " + " ".join(map(str, ap.witness)))
    return 0


def _cmd_bridge(args) -> int:
    if args.which == "from-mt":
        mt = _read_mt()
        bridge = from_multipartite_tournament(mt)
        sys.stdout.write(serialize_ecg(bridge.graph))
        print(f"hub vertex: {bridge.v0}", file=sys.stderr)
        return 0
    if args.which == "to-mt":
        g = _read_ecg()
        ap = anchored_partition(g, args.v0)
        mt = to_multipartite_tournament(g, args.v0, ap)
        sys.stdout.write(serialize_mt(mt))
        return 0
    mt = _read_mt()
    sys.stdout.write(serialize_mt(pad_to_l_partite(mt, args.l)))
    return 0


def _cmd_shorten(args) -> int:
    g = _read_ecg()
    cycle = tuple(int(part) for part in args.cycle.split(",") if part)
    if not is_pc_cycle(g, cycle):
        print("error: the given cycle is not properly colored", file=sys.stderr)
        return 2
    short = shorten_pc_cycle(g, cycle, args.v)
    print(" ".join(map(str, short)))
    return 0


def _cmd_tournament(args) -> int:
    mt = _read_mt()
    if args.which == "min-out":
        print(min_out_degree(mt))
        return 0
    if args.which == "dicycle":
        cyc = find_dicycle(mt, length=args.length)
        print("none" if cyc is None else " ".join(map(str, cyc)))
        return 0
    found = pack_disjoint_dicycles(mt, args.k)
    if found is None:
        print("none")
    else:
        for cyc in found:
            print("dicycle " + " ".join(map(str, cyc)))
    return 0


def _emit_report(report, json_lines: bool) -> int:
    if json_lines:
        print(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    return 0 if report.passed else 1


def _cmd_verify(args) -> int:
    if args.which == "theorem-k2":
        report = harness.verify_theorem_k2(
            _parse_range(args.n),
            args.samples,
            colors_values=_parse_range(args.colors),
            master_seed=args.seed,
            workers=args.workers,
        )
        return _emit_report(report, args.json_lines)
    if args.which == "bounds":
        r2 = harness.verify_short_cycle_bound(args.samples, master_seed=args.seed, workers=args.workers)
        r3 = harness.verify_greedy_bound(args.samples, master_seed=args.seed, workers=args.workers)
        code = max(_emit_report(r2, args.json_lines), _emit_report(r3, args.json_lines))
        return code
    if args.which == "hunt":
        report = harness.hunt_conjecture(
            _parse_range(args.n),
            args.k,
            args.samples,
            colors_values=_parse_range(args.colors) if args.colors else None,
            master_seed=args.seed,
            workers=args.workers,
        )
        return _emit_report(report, args.json_lines)
    if args.which == "tiny":
        report = harness.exhaustive_tiny(args.n_single, args.max_colors)
        return _emit_report(report, args.json_lines)
    if args.which == "propositions":
        report = harness.verify_dicycle_packing(
            args.slice, args.samples, master_seed=args.seed, k=args.k, workers=args.workers
        )
        return _emit_report(report, args.json_lines)
    # check-cex
    g = _read_ecg()
    checklist = harness.check_min_counterexample(g, args.k)
    if args.json_lines:
        print(_jsonline(checklist.to_dict()))
    else:
        for key, val in checklist.to_dict().items():
            print(f"{key} {val}")
    return 0


def _cmd_export_dot(args) -> int:
    text = sys.stdin.read()
    kind = sniff_kind(text)
    if kind == "ecg":
        sys.stdout.write(ecg_to_dot(parse_ecg(text)))
    else:
        sys.stdout.write(mt_to_dot(parse_mt(text)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pccycles",
        description="Properly colored cycles in edge-colored complete graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance to stdout")
    p.add_argument("--kind", required=True, choices=[
        "proper", "example1", "example2", "cascade", "random", "random_tournament",
    ])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--colors", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--max-mono", type=int, dest="max_mono")
    p.add_argument("--parts", help="comma-separated part sizes for random_tournament")
    p.add_argument("--min-out", type=int, dest="min_out")
    p.add_argument("--triangle-free", action="store_true")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("analyze", help="degree metrics, rainbow triangle, mono cut")
    p.add_argument("--json-lines", action="store_true")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("pack", help="pack disjoint short PC cycles")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--max", action="store_true", help="print the packing number")
    p.add_argument("--greedy", action="store_true")
    p.add_argument("--json-lines", action="store_true")
    p.set_defaults(func=_cmd_pack)

    p = sub.add_parser("partition", help="structural partitions")
    psub = p.add_subparsers(dest="which", required=True)
    pg = psub.add_parser("gallai")
    pg.add_argument("--minimize-q", action="store_true", dest="minimize_q")
    pg.add_argument("--json-lines", action="store_true")
    pg.set_defaults(func=_cmd_partition)
    pa = psub.add_parser("anchored")
    pa.add_argument("--v0", type=int, required=True)
    pa.add_argument("--json-lines", action="store_true")
    pa.set_defaults(func=_cmd_partition)

    p = sub.add_parser("bridge", help="tournament <-> colored graph transformations")
    bsub = p.add_subparsers(dest="which", required=True)
    bt = bsub.add_parser("to-mt")
    bt.add_argument("--v0", type=int, required=True)
    bt.set_defaults(func=_cmd_bridge)
    bf = bsub.add_parser("from-mt")
    bf.set_defaults(func=_cmd_bridge)
    bp = bsub.add_parser("pad")
    bp.add_argument("--l", type=int, required=True)
    bp.set_defaults(func=_cmd_bridge)

    p = sub.add_parser("shorten", help="shrink a PC cycle to length <= 4")
    p.add_argument("--cycle", required=True, help="comma-separated vertex ids")
    p.add_argument("--v", type=int, required=True)
    p.set_defaults(func=_cmd_shorten)

    p = sub.add_parser("tournament", help="dicycle queries on an MT file")
    tsub = p.add_subparsers(dest="which", required=True)
    tm = tsub.add_parser("min-out")
    tm.set_defaults(func=_cmd_tournament)
    td = tsub.add_parser("dicycle")
    td.add_argument("--length", type=int)
    td.set_defaults(func=_cmd_tournament)
    tp = tsub.add_parser("pack")
    tp.add_argument("--k", type=int, required=True)
    tp.set_defaults(func=_cmd_tournament)

    p = sub.add_parser("verify", help="verification campaigns")
    vsub = p.add_subparsers(dest="which", required=True)
    vt = vsub.add_parser("theorem-k2")
    vt.add_argument("--n", required=True, help="range like 6..9")
    vt.add_argument("--samples", type=int, required=True)
    vt.add_argument("--colors", default="2,3")
    vt.add_argument("--seed", type=int, default=0)
    vt.add_argument("--workers", type=int, default=1)
    vt.add_argument("--json-lines", action="store_true")
    vt.set_defaults(func=_cmd_verify)
    vo = vsub.add_parser("bounds")
    vo.add_argument("--samples", type=int, required=True)
    vo.add_argument("--seed", type=int, default=0)
    vo.add_argument("--workers", type=int, default=1)
    vo.add_argument("--json-lines", action="store_true")
    vo.set_defaults(func=_cmd_verify)
    vh = vsub.add_parser("hunt")
    vh.add_argument("--k", type=int, required=True)
    vh.add_argument("--n", required=True)
    vh.add_argument("--samples", type=int, required=True)
    vh.add_argument("--colors")
    vh.add_argument("--seed", type=int, default=0)
    vh.add_argument("--workers", type=int, default=1)
    vh.add_argument("--json-lines", action="store_true")
    vh.set_defaults(func=_cmd_verify)
    vy = vsub.add_parser("tiny")
    vy.add_argument("--n", type=int, required=True, dest="n_single")
    vy.add_argument("--max-colors", type=int, required=True, dest="max_colors")
    vy.add_argument("--json-lines", action="store_true")
    vy.set_defaults(func=_cmd_verify)
    vp = vsub.add_parser("propositions")
    vp.add_argument("--slice", required=True, choices=["general", "bipartite", "few-parts"])
    vp.add_argument("--samples", type=int, required=True)
    vp.add_argument("--seed", type=int, default=0)
    vp.add_argument("--k", type=int, default=2)
    vp.add_argument("--workers", type=int, default=1)
    vp.add_argument("--json-lines", action="store_true")
    vp.set_defaults(func=_cmd_verify)
    vc = vsub.add_parser("check-cex")
    vc.add_argument("--k", type=int, required=True)
    vc.add_argument("--json-lines", action="store_true")
    vc.set_defaults(func=_cmd_verify)

    p = sub.add_parser("export-dot", help="DOT rendering of an ECG or MT file")
    p.set_defaults(func=_cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed the usage diagnostic
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


def cli() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
