"""``kmeasure`` command line.

Exit codes: 0 success/pass, 1 verification failure, 2 usage error
(including partitions outside a map's domain).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from kmeasure import counting, verify
from kmeasure._parallel import resolve_workers
from kmeasure.bijection import STRATEGIES, MembershipError, phi_trace, psi_trace
from kmeasure.diagram import render_ferrers
from kmeasure.partition import PartitionError, format_partition, parse_partition
from kmeasure.statistics import (
    contains_km_polygon,
    durfee_polygon_order,
    durfee_side,
    k_measure,
    km_polygon_shape,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

STRATEGY_NAMES = [s.value for s in STRATEGIES]


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {value}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {value}")
    return value


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


# -- subcommands -----------------------------------------------------------

def cmd_stats(args) -> int:
    p = parse_partition(args.partition)
    order = durfee_polygon_order(p, args.k)
    record = {
        "partition": format_partition(p),
        "k": args.k,
        "k_measure": k_measure(p, args.k),
        "durfee_side": durfee_side(p),
        "durfee_polygon_order": order,
    }
    if args.format == "json":
        text = _dump(record)
    else:
        text = "".join(f"{key}: {value}\n" for key, value in record.items())
    if args.diagram:
        text += render_ferrers(p, km_polygon_shape(args.k, order))
    _emit(text, args.output)
    return EXIT_OK


def cmd_map(args) -> int:
    p = parse_partition(args.partition)
    trace = (psi_trace if args.inverse else phi_trace)(p, args.k, args.m, args.strategy)
    if args.inverse:
        in_target = k_measure(trace.image, args.k) >= args.m
        target = f"C_{{{args.k},{args.m}}}"
    else:
        in_target = contains_km_polygon(trace.image, args.k, args.m)
        target = f"D_{{{args.k},{args.m}}}"
    record = {
        "direction": "psi" if args.inverse else "phi",
        "k": args.k,
        "m": args.m,
        "strategy": args.strategy,
        "source": format_partition(trace.source),
        "image": format_partition(trace.image),
        "indices": list(trace.indices),
        "selected": list(trace.selected),
        "offsets": list(trace.offsets),
        "in_target": in_target,
    }
    if args.format == "json":
        text = _dump(record)
    else:
        text = (
            f"{record['image']}\n"
            f"selected indices: {format_partition(trace.indices) or '-'}"
            f" (values {format_partition(trace.selected) or '-'})\n"
            f"offsets: {','.join(f'{d:+d}' for d in trace.offsets) or '-'}\n"
        )
        if not in_target:
            text += f"warning: image lies outside {target}\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_polygon(args) -> int:
    shape = km_polygon_shape(args.k, args.m)
    record = {"k": args.k, "m": args.m, "row_lengths": list(shape.row_lengths), "nodes": shape.nodes}
    p = parse_partition(args.partition) if args.partition is not None else None
    if p is not None:
        record["partition"] = format_partition(p)
        record["contained"] = contains_km_polygon(p, args.k, args.m)
    if args.format == "json":
        text = _dump(record)
    else:
        text = shape.to_json() + "\n"
        if p is not None:
            text += f"contained: {str(record['contained']).lower()}\n"
            text += render_ferrers(p, shape)
    _emit(text, args.output)
    return EXIT_OK


def cmd_count(args) -> int:
    workers = resolve_workers(args.workers)
    if args.by_length:
        statistic = {"a": "k-measure", "c": "k-measure", "polygon-order": "polygon-order",
                     "d": "polygon-order", "b": "durfee"}[args.kind]
        table = counting.table_by_length(args.k, args.n_max, statistic, workers)
    elif args.kind == "a":
        table = counting.table_a(args.k, args.n_max, workers)
    elif args.kind == "b":
        table = counting.table_b_durfee(args.n_max, workers)
    elif args.kind == "c":
        table = counting.table_c(args.k, args.n_max, workers)
    elif args.kind == "d":
        table = counting.table_d(args.k, args.n_max, workers)
    else:
        table = counting.table_polygon_order(args.k, args.n_max, workers)
    text = table.to_json() if args.format == "json" else table.to_csv()
    _emit(text, args.output)
    return EXIT_OK


def cmd_excess(args) -> int:
    workers = resolve_workers(args.workers)
    excess = counting.signed_excess(args.n_max, workers)
    series = counting.distinct_odd_count(args.n_max)
    direct = counting.distinct_odd_enumerated(args.n_max, workers)
    rows = [(n, excess[n], series[n], direct[n]) for n in range(args.n_max + 1)]
    header = ("n", "signed_excess", "distinct_odd_series", "distinct_odd_enumerated")
    if args.format == "json":
        text = _dump([dict(zip(header, r)) for r in rows])
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        text = buf.getvalue()
    _emit(text, args.output)
    agree = all(r[1] == r[2] == r[3] for r in rows)
    return EXIT_OK if agree else EXIT_FAIL


def cmd_verify(args) -> int:
    workers = resolve_workers(args.workers)
    suites = args.suite or list(verify.SUITES)
    reports = [
        verify.run_suite(name, n_max=args.n_max, k_max=args.k_max,
                         strategies=args.strategy, workers=workers)
        for name in suites
    ]
    fatal = [r for r in reports if not r.passed
             and not (args.findings_ok and r.suite == "strategy-search")]
    status = "pass" if all(r.passed for r in reports) else "fail"
    if args.format == "text":
        text = "".join(
            f"{r.suite}: {r.status.upper()} ({r.checks_run} checks, {len(r.counterexamples)} counterexamples"
            + ("" if args.no_timing else f", {r.elapsed_ms:.0f} ms") + ")\n"
            for r in reports
        )
    else:
        text = _dump({"status": status,
                      "reports": [r.to_dict(timing=not args.no_timing) for r in reports]})
    _emit(text, args.output)
    return EXIT_FAIL if fatal else EXIT_OK


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kmeasure",
        description="k-measure, Durfee squares and (k,m)-Durfee polygons of integer partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats, default):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("-o", "--output", help="write to this file instead of stdout")

    def parallel(p):
        p.add_argument("--workers", type=_positive, default=None,
                       help="worker processes (default: CPU count; WORKBENCH_WORKERS overrides)")

    p = sub.add_parser("stats", help="k-measure, Durfee side and polygon order of one partition")
    p.add_argument("partition", help='parts in any order, e.g. "9,9,8,7,4,3,1" or "9+9+8+7+4+3+1"')
    p.add_argument("-k", type=_positive, default=2)
    p.add_argument("--diagram", action="store_true", help="append the Ferrers diagram with its Durfee polygon")
    common(p, ["text", "json"], "text")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("map", help="apply phi (or psi with --inverse)")
    p.add_argument("partition")
    p.add_argument("-k", type=_positive, required=True)
    p.add_argument("-m", type=_nonnegative, required=True)
    p.add_argument("--strategy", choices=STRATEGY_NAMES, default="greedy-top")
    p.add_argument("--inverse", action="store_true")
    common(p, ["text", "json"], "text")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("polygon", help="(k,m)-polygon row profile, optionally drawn inside a partition")
    p.add_argument("-k", type=_positive, required=True)
    p.add_argument("-m", type=_nonnegative, required=True)
    p.add_argument("--partition", default=None)
    common(p, ["text", "json"], "text")
    p.set_defaults(func=cmd_polygon)

    p = sub.add_parser("count", help="exact counting tables")
    p.add_argument("--kind", choices=["a", "b", "c", "d", "polygon-order"], required=True)
    p.add_argument("-k", type=_positive, default=2)
    p.add_argument("--n-max", type=_nonnegative, default=30)
    p.add_argument("--by-length", action="store_true")
    common(p, ["csv", "json"], "csv")
    parallel(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("excess", help="signed excess vs distinct-odd-part counts")
    p.add_argument("--n-max", type=_nonnegative, default=30)
    common(p, ["csv", "json"], "csv")
    parallel(p)
    p.set_defaults(func=cmd_excess)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", action="append", choices=verify.SUITES,
                   help="repeatable; default runs every suite")
    p.add_argument("--n-max", type=_nonnegative, default=30)
    p.add_argument("--k-max", type=_positive, default=5)
    p.add_argument("--strategy", action="append", choices=STRATEGY_NAMES,
                   help="repeatable; default all strategies")
    p.add_argument("--findings-ok", action="store_true",
                   help="strategy-search failures do not affect the exit code")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed_ms (byte-stable output)")
    common(p, ["json", "text"], "json")
    parallel(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PartitionError, MembershipError, ValueError) as exc:
        print(f"kmeasure {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
