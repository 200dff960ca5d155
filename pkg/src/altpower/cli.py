"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence, TextIO

from . import cache
from .census import (
    classify_row,
    closed_form_counts,
    critical_primes,
    in_set_A,
    order_graph_verdict,
    two_connected,
)
from .errors import CapacityError
from .graphs import GRAPH_KINDS, components
from .perm import DEFAULT_BRUTE_FORCE_CEILING
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3
FORMATS = ("tsv", "json", "markdown")
LIST_COMPONENTS_LIMIT = 64


@dataclass
class RunConfig:
    command: str
    n_from: int | None = None
    n_to: int | None = None
    kind: str | None = None
    fmt: str = "tsv"
    cache_dir: Path | None = None
    ceiling: int | None = None
    seed: int = 0
    suite: str | None = None
    max_n: int | None = None
    brute_force: bool = False
    out: Path | None = None


class UsageError(Exception):
    pass


def _config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(
        command=args.command,
        cache_dir=cache.resolve_cache_dir(args.cache_dir),
        ceiling=args.ceiling,
        fmt=getattr(args, "format", "tsv"),
    )
    if args.command == "census":
        cfg.n_from, cfg.n_to, cfg.brute_force = args.n_from, args.n_to, args.brute_force
        if cfg.n_from < 3 or cfg.n_to < cfg.n_from:
            raise UsageError(f"need 3 <= --from <= --to, got {cfg.n_from}..{cfg.n_to}")
    elif args.command == "verify":
        cfg.suite, cfg.max_n, cfg.seed = args.suite, args.max_n, args.seed
    elif args.command == "graph":
        cfg.kind, cfg.n_from, cfg.out = args.kind, args.n, args.out
        if cfg.n_from < 3:
            raise UsageError("--n must be at least 3")
    elif args.command == "classify":
        cfg.n_from = args.n
        if cfg.n_from < 3:
            raise UsageError("--n must be at least 3")
    return cfg


def _census_rows(cfg: RunConfig) -> tuple[list[dict], bool]:
    ceiling = cfg.ceiling or DEFAULT_BRUTE_FORCE_CEILING
    if cfg.brute_force and cfg.n_to > ceiling:
        raise CapacityError("brute-force census", cfg.n_to, ceiling)
    rows, ok = [], True
    for n in range(cfg.n_from, cfg.n_to + 1):
        cf = closed_form_counts(n)
        row = {
            "n": n,
            "c0": str(cf.c0),
            "c0_ptype": cf.c0_ptype,
            "c0_order": cf.c0_order,
            "row": cf.row.value if cf.row else "small n",
            "two_connected": cf.two_connected,
            "source": cf.source,
        }
        if cf.expression:
            row["expression"] = cf.expression
        if cfg.brute_force:
            q = cache.get_graph("quotient", n, cfg.cache_dir, ceiling)
            brute = components(q).component_count
            row["c0_brute"] = str(brute)
            row["source"] = "both"
            ok = ok and brute == cf.c0
        rows.append(row)
    return rows, ok


def _render_census(rows: list[dict], fmt: str, brute: bool) -> str:
    cols = ["n", "c0"] + (["c0_brute"] if brute else []) + ["c0_ptype", "c0_order", "row", "two_connected"]
    if fmt == "json":
        return json.dumps({"rows": rows}, indent=2)
    if fmt == "tsv":
        lines = ["\t".join(cols)]
        lines += ["\t".join(str(r[c]).lower() if isinstance(r[c], bool) else str(r[c]) for c in cols) for r in rows]
        return "\n".join(lines)
    lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
    for r in rows:
        cells = []
        for c in cols:
            v = r[c]
            if c == "c0" and r.get("expression") and r["expression"] != "1":
                v = f"{v} ({r['expression']})"
            cells.append("yes" if v is True else "no" if v is False else str(v))
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines)


def cmd_census(cfg: RunConfig, out: TextIO) -> int:
    rows, ok = _census_rows(cfg)
    print(_render_census(rows, cfg.fmt, cfg.brute_force), file=out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(cfg: RunConfig, out: TextIO, err: TextIO) -> int:
    checks = run_suite(cfg.suite, cfg.max_n, cfg.seed, cfg.cache_dir)
    failed = 0
    for c in checks:
        print(f"{'PASS' if c.passed else 'FAIL'}  {c.name}: {c.detail}", file=out)
        print(f"  {c.name}: {c.seconds:.3f}s", file=err)
        failed += not c.passed
    verdict = "PASS" if failed == 0 else "FAIL"
    print(f"{verdict} {cfg.suite}: {len(checks) - failed}/{len(checks)} checks passed", file=out)
    return EXIT_OK if failed == 0 else EXIT_FAIL


def _format_label_set(labels: list) -> str:
    return "{" + ",".join(str(x) for x in labels) + "}"


def cmd_graph(cfg: RunConfig, out: TextIO, err: TextIO) -> int:
    g = cache.get_graph(cfg.kind, cfg.n_from, cfg.cache_dir, cfg.ceiling)
    census = components(g)
    if cfg.out is not None:
        cfg.out.write_text(cache.dumps(g))
    summary = out
    if cfg.fmt == "json":
        print(cache.dumps(g), file=out)
        summary = err
    print(f"kind={g.kind} n={g.n} vertices={g.num_vertices} edges={g.num_edges} "
          f"components={census.component_count}", file=summary)
    if g.num_vertices <= LIST_COMPONENTS_LIMIT:
        for members in census.members():
            print(_format_label_set([g.labels[i] for i in members]), file=summary)
    return EXIT_OK


def cmd_classify(cfg: RunConfig, out: TextIO) -> int:
    n = cfg.n_from
    cf = closed_form_counts(n)
    print(f"n={n}", file=out)
    print(f"in_A={str(in_set_A(n)).lower()}", file=out)
    if n >= 11:
        cls = classify_row(n)
        print(f"row={cls.row.value}", file=out)
        print(f"critical_primes={sorted(critical_primes(n))}", file=out)
    else:
        print("row=small n", file=out)
    print(f"c0={cf.c0}", file=out)
    if cf.expression:
        print(f"c0_expression={cf.expression}", file=out)
    print(f"c0_ptype={cf.c0_ptype}", file=out)
    print(f"c0_order={cf.c0_order}", file=out)
    print(f"order_graph_verdict={order_graph_verdict(n)}", file=out)
    print(f"two_connected={str(two_connected(n)).lower()}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="altpower", description="Power graphs of alternating groups.")
    parser.add_argument("--cache-dir", default=None, help=f"graph cache directory (default ${cache.CACHE_ENV})")
    parser.add_argument("--ceiling", type=int, default=None, help="override the brute-force size ceiling")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="component counts over a range of n")
    p.add_argument("--from", dest="n_from", type=int, required=True)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="tsv")
    p.add_argument("--brute-force", action="store_true", help="also count quotient components directly")

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("graph", help="build one graph and report its components")
    p.add_argument("--kind", choices=GRAPH_KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", type=Path, default=None, help="write the graph record here")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("classify", help="arithmetic classification of n")
    p.add_argument("--n", type=int, required=True)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = _config(args)
        if cfg.command == "census":
            return cmd_census(cfg, out)
        if cfg.command == "verify":
            return cmd_verify(cfg, out, err)
        if cfg.command == "graph":
            return cmd_graph(cfg, out, err)
        return cmd_classify(cfg, out)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=err)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
