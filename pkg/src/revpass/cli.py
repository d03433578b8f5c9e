"""
Command-line front-end.

Every capability is exposed as a subcommand with stable, scriptable output;
identical inputs produce byte-identical output for a fixed format, no matter
how many worker processes run the sweeps.  Exit codes: 0 success, 1 failed
verification, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import basis as basis_mod
from . import entringer as entringer_mod
from . import series as series_mod
from . import tables as tables_mod
from . import verify as verify_mod
from .parallel import WORKERS_ENV_VAR
from .pairs import rev_tier_by_pairs
from .permutation import PermutationError, format_permutation, parse_permutation
from .sorting import (
    machine_trace_json_dict,
    machine_trace_lines,
    rev_tier_by_simulation,
    series_machine_sort,
    trace_json_dict,
    trace_lines,
)

_SERIES_CHOICES = ("mu0", "mu1", "mu2", "tier0", "tier1", "tier2", "wilf")


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _emit_json(payload: dict) -> None:
    _emit(json.dumps(payload, indent=2, sort_keys=False))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="revpass",
        description="Reverse-pass stack sorting: tiers, bases, bijections, series.",
        epilog=f"Set {WORKERS_ENV_VAR} to change the default worker count.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_workers(p):
        p.add_argument(
            "--workers",
            type=int,
            default=None,
            help="worker processes for exhaustive sweeps (default: all cores)",
        )

    p = sub.add_parser("tier", help="rev-tier of a permutation")
    p.add_argument("permutation")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("trace", help="reverse-pass trace, one line per step")
    p.add_argument("permutation")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("machine", help="run the stacks-in-series machine")
    p.add_argument("permutation")
    p.add_argument("--stacks", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("table", help="count tables from the exhaustive sweep")
    p.add_argument("kind", choices=("exact", "cumulative", "refined"))
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument(
        "--allow-slow",
        action="store_true",
        help="permit sweeps beyond the default length cap (with progress)",
    )
    add_workers(p)

    p = sub.add_parser("basis", help="mine the basis of a bounded-tier class")
    p.add_argument("--tier", type=int, required=True)
    p.add_argument(
        "--max-len",
        type=int,
        default=None,
        help="search length bound (default: min(3*(tier+1), 9))",
    )
    p.add_argument(
        "--strategy", choices=("auto", "exhaustive", "extension"), default="auto"
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--allow-slow", action="store_true")
    add_workers(p)

    p = sub.add_parser("av-count", help="count an avoidance class by length")
    p.add_argument("patterns", nargs="+", metavar="pattern")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    add_workers(p)

    p = sub.add_parser("entringer", help="the Entringer triangle")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p = sub.add_parser("family", help="maximal-tier permutations by position of 1")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    add_workers(p)

    p = sub.add_parser("bijection", help="alternating <-> maximal-tier bijection")
    p.add_argument("direction", choices=("f", "finv"))
    p.add_argument("permutation")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("series", help="exact generating-function coefficients")
    p.add_argument("which", choices=_SERIES_CHOICES)
    p.add_argument("--order", type=int, default=12)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="run a named invariant suite")
    p.add_argument("suite", choices=verify_mod.suite_names())
    p.add_argument("--max-n", type=int, default=9)
    add_workers(p)

    return parser


def _parse_perm_arg(text: str):
    try:
        return parse_permutation(text)
    except PermutationError as exc:
        raise SystemExit(f"revpass: {exc}") from None


def _cmd_tier(args) -> int:
    perm = _parse_perm_arg(args.permutation)
    tier, _ = rev_tier_by_pairs(perm)
    if args.format == "json":
        _emit_json(
            {
                "schema": "revpass.tier/1",
                "permutation": format_permutation(perm),
                "tier": tier,
            }
        )
    else:
        _emit(str(tier))
    return 0


def _cmd_trace(args) -> int:
    perm = _parse_perm_arg(args.permutation)
    _, trace = rev_tier_by_simulation(perm, record_steps=True)
    if args.format == "json":
        _emit_json(trace_json_dict(perm, trace))
    else:
        _emit("\n".join(trace_lines(perm, trace)))
    return 0


def _cmd_machine(args) -> int:
    perm = _parse_perm_arg(args.permutation)
    if args.stacks < 1:
        raise SystemExit("revpass: --stacks must be at least 1")
    sorted_ok, states = series_machine_sort(perm, args.stacks)
    if args.format == "json":
        _emit_json(machine_trace_json_dict(perm, sorted_ok, states))
    else:
        _emit("\n".join(machine_trace_lines(perm, sorted_ok, states)))
    return 0


def _format_tier_table_text(table) -> str:
    width = max(table.max_n - 1, 1)
    header = ["n"] + [f"t={t}" for t in range(width)]
    rows = [header]
    for n in range(1, table.max_n + 1):
        row = table.rows[n - 1]
        rows.append(
            [str(n)] + [str(row[t]) if t < len(row) else "" for t in range(width)]
        )
    widths = [max(len(r[c]) for r in rows) for c in range(len(header))]
    return "\n".join(
        "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows
    )


def _cmd_table(args) -> int:
    try:
        if args.kind == "exact":
            table = tables_mod.exact_tier_table(
                args.max_n,
                workers=args.workers,
                allow_slow=args.allow_slow,
            )
        elif args.kind == "cumulative":
            table = tables_mod.cumulative_tier_table(
                args.max_n, workers=args.workers, allow_slow=args.allow_slow
            )
        else:
            refined = tables_mod.refined_counts_bruteforce(
                args.max_n, workers=args.workers, allow_slow=args.allow_slow
            )
    except ValueError as exc:
        raise SystemExit(f"revpass: {exc}") from None
    if args.kind in ("exact", "cumulative"):
        if args.format == "csv":
            _emit(tables_mod.tier_table_csv(table))
        elif args.format == "json":
            _emit_json(tables_mod.tier_table_json_dict(table))
        else:
            _emit(_format_tier_table_text(table))
    else:
        if args.format == "csv":
            _emit(tables_mod.refined_table_csv(refined))
        elif args.format == "json":
            _emit_json(tables_mod.refined_table_json_dict(refined))
        else:
            _emit(tables_mod.refined_table_csv(refined).replace(",", "  "))
    return 0


def _cmd_basis(args) -> int:
    max_len = args.max_len
    if max_len is None:
        max_len = min(3 * (args.tier + 1), 9)
    try:
        report = basis_mod.compute_basis(
            args.tier,
            max_len,
            strategy=args.strategy,
            workers=args.workers,
            allow_slow=args.allow_slow,
        )
    except ValueError as exc:
        raise SystemExit(f"revpass: {exc}") from None
    if args.format == "json":
        _emit_json(basis_mod.basis_report_json_dict(report))
    else:
        _emit(
            "\n".join(format_permutation(p) for p in report.elements)
            if report.elements
            else ""
        )
    return 0


def _cmd_av_count(args) -> int:
    patterns = [_parse_perm_arg(text) for text in args.patterns]
    try:
        counts = basis_mod.enumerate_av(patterns, args.max_n, workers=args.workers)
    except ValueError as exc:
        raise SystemExit(f"revpass: {exc}") from None
    if args.format == "json":
        _emit_json(
            {
                "schema": "revpass.avcount/1",
                "basis": [format_permutation(p) for p in patterns],
                "max_n": args.max_n,
                "counts": list(counts),
            }
        )
    elif args.format == "csv":
        lines = ["n,count"] + [
            f"{n},{c}" for n, c in enumerate(counts, start=1)
        ]
        _emit("\n".join(lines))
    else:
        _emit("\n".join(f"{n}: {c}" for n, c in enumerate(counts, start=1)))
    return 0


def _cmd_entringer(args) -> int:
    try:
        table = entringer_mod.entringer_table(args.max_n)
    except ValueError as exc:
        raise SystemExit(f"revpass: {exc}") from None
    if args.format == "json":
        _emit_json(
            {
                "schema": "revpass.entringer/1",
                "max_n": table.max_n,
                "rows": [list(row) for row in table.rows],
                "row_sums": list(table.row_sums),
            }
        )
    elif args.format == "csv":
        lines = ["n," + ",".join(f"k={k}" for k in range(1, table.max_n + 1)) + ",sum"]
        for n in range(1, table.max_n + 1):
            row = table.rows[n - 1]
            cells = [str(row[k]) if k < n else "" for k in range(table.max_n)]
            lines.append(f"{n}," + ",".join(cells) + f",{table.row_sums[n - 1]}")
        _emit("\n".join(lines))
    else:
        _emit(
            "\n".join(
                f"{n}: " + " ".join(str(v) for v in table.rows[n - 1])
                + f"  (sum {table.row_sums[n - 1]})"
                for n in range(1, table.max_n + 1)
            )
        )
    return 0


def _cmd_family(args) -> int:
    try:
        family = entringer_mod.maximal_tier_family(args.n, workers=args.workers)
    except ValueError as exc:
        raise SystemExit(f"revpass: {exc}") from None
    if args.format == "json":
        _emit_json(
            {
                "schema": "revpass.family/1",
                "n": family.n,
                "tier": family.n - 2,
                "members_by_k": {
                    str(k): [format_permutation(p) for p in members]
                    for k, members in family.members_by_k.items()
                },
                "total": family.total,
            }
        )
    else:
        lines = [f"length {family.n}, tier {family.n - 2}, total {family.total}"]
        for k, members in family.members_by_k.items():
            joined = " ".join(format_permutation(p) for p in members)
            lines.append(f"k={k} ({len(members)}): {joined}")
        _emit("\n".join(lines))
    return 0


def _cmd_bijection(args) -> int:
    perm = _parse_perm_arg(args.permutation)
    try:
        if args.direction == "f":
            image = entringer_mod.bijection_f(perm)
        else:
            image = entringer_mod.bijection_f_inverse(perm)
    except ValueError as exc:
        raise SystemExit(f"revpass: {exc}") from None
    if args.format == "json":
        _emit_json(
            {
                "schema": "revpass.bijection/1",
                "direction": args.direction,
                "input": format_permutation(perm),
                "output": format_permutation(image),
            }
        )
    else:
        _emit(format_permutation(image))
    return 0


def _cmd_series(args) -> int:
    which = args.which
    try:
        if which.startswith("mu"):
            result = series_mod.mu_u_series(int(which[2]), args.order)
        elif which.startswith("tier"):
            result = series_mod.tier_series(int(which[4]), args.order)
        else:
            result = series_mod.wilf_series(args.order)
        coeffs = result.integer_coefficients()
    except ValueError as exc:
        raise SystemExit(f"revpass: {exc}") from None
    if args.format == "json":
        _emit_json(
            {
                "schema": "revpass.series/1",
                "series": which,
                "order": args.order,
                "coefficients": list(coeffs),
            }
        )
    else:
        _emit("\n".join(f"{n}: {c}" for n, c in enumerate(coeffs)))
    return 0


def _cmd_verify(args) -> int:
    ok = verify_mod.run_suite(
        args.suite, max_n=args.max_n, workers=args.workers
    )
    return 0 if ok else 1


_HANDLERS = {
    "tier": _cmd_tier,
    "trace": _cmd_trace,
    "machine": _cmd_machine,
    "table": _cmd_table,
    "basis": _cmd_basis,
    "av-count": _cmd_av_count,
    "entringer": _cmd_entringer,
    "family": _cmd_family,
    "bijection": _cmd_bijection,
    "series": _cmd_series,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            sys.stderr.write(exc.code + "\n")
            return 2
        raise


if __name__ == "__main__":
    sys.exit(main())
