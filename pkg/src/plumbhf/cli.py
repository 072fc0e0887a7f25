"""Command-line front end.

Subcommands: analyze (one graph file), brieskorn (one multiplicity
tuple), survey (family sweeps), s3 (two-ray property harness).  Exit
codes: 0 all rows computed, 2 some rows skipped, 1 invocation error or
failed computation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .errors import PlumbingError
from .graph import blow_down
from .report import (
    AnalysisReport,
    ResultCache,
    analyze,
    report_to_csv,
    reverify_cache,
    rows_to_csv,
    survey_all_minus_two,
    survey_brieskorn,
    s3_rows,
)
from .files import parse_graph_file
from .seifert import brieskorn, star_graph

CACHE_ENV = "PLUMB_HF_CACHE"


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; this front end reserves 2 for
    partially skipped runs, so usage errors exit 1 instead."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", metavar="PATH", help="write here instead of stdout")


def _add_scan_flags(p: argparse.ArgumentParser, default_early_stop: int | None) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument(
        "--early-stop",
        type=int,
        metavar="K",
        default=default_early_stop,
        help="stop scanning once K good initials are found",
    )
    g.add_argument(
        "--full",
        action="store_true",
        help="scan every initial association (no early stop)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="plumbhf", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze one plumbing graph file")
    p.add_argument("graph_file", metavar="FILE")
    _add_scan_flags(p, default_early_stop=None)
    p.add_argument("--emit-sequences", action="store_true")
    _add_output_flags(p)

    p = sub.add_parser("brieskorn", help="build and analyze one Brieskorn sphere")
    p.add_argument("multiplicities", metavar="A", type=int, nargs="+")
    _add_scan_flags(p, default_early_stop=None)
    p.add_argument("--emit-sequences", action="store_true")
    _add_output_flags(p)

    p = sub.add_parser("survey", help="sweep a family and emit one row per member")
    p.add_argument("--mode", choices=("brieskorn", "all-minus-two"), default="brieskorn")
    p.add_argument("--max-a", type=int, default=30, metavar="N")
    p.add_argument("--rays", type=int, default=3, metavar="N")
    p.add_argument("--max-p", type=int, default=12, metavar="N")
    _add_scan_flags(p, default_early_stop=2)
    p.add_argument(
        "--cache",
        metavar="PATH",
        help=f"JSONL result cache (overrides ${CACHE_ENV}; no cache otherwise)",
    )
    p.add_argument(
        "--reverify-sample",
        type=int,
        default=0,
        metavar="N",
        help="recompute N cached rows and fail on any mismatch",
    )
    _add_output_flags(p)

    p = sub.add_parser("s3", help="two-ray quadruple property harness")
    p.add_argument("--bound", type=int, default=20, metavar="N")
    _add_output_flags(p)

    return parser


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        Path(output).write_text(text if text.endswith("\n") else text + "\n")


def _emit_report(report: AnalysisReport, args, extra: dict | None = None) -> None:
    if args.format == "csv":
        _emit(report_to_csv(report), args.output)
        return
    obj = report.to_obj()
    if extra:
        obj.update(extra)
    _emit(json.dumps(obj, indent=2), args.output)


def _emit_rows(rows, args) -> None:
    if args.format == "csv":
        _emit(rows_to_csv(rows), args.output)
    else:
        _emit(json.dumps([r.to_obj() for r in rows], indent=2), args.output)


def _early_stop(args) -> int | None:
    return None if args.full else args.early_stop


def _cmd_analyze(args) -> int:
    graph = parse_graph_file(args.graph_file)
    report = analyze(
        graph,
        early_stop=_early_stop(args),
        emit_sequences=args.emit_sequences,
    )
    _emit_report(report, args)
    return 0


def _cmd_brieskorn(args) -> int:
    inv = brieskorn(args.multiplicities)
    name = "sigma" + str(tuple(args.multiplicities))
    graph = blow_down(star_graph(inv, name=name))
    report = analyze(
        graph,
        early_stop=_early_stop(args),
        emit_sequences=args.emit_sequences,
    )
    verdict = "nontrivial" if report.good_initial_count >= 2 else "trivial-rank"
    _emit_report(report, args, extra={"verdict": verdict})
    return 0


def _cmd_survey(args) -> int:
    cache_path = args.cache if args.cache is not None else os.environ.get(CACHE_ENV)
    cache = ResultCache(cache_path) if cache_path else None
    if args.mode == "all-minus-two":
        rows = survey_all_minus_two(max_p=args.max_p, rays=args.rays)
    else:
        rows = survey_brieskorn(
            max_a=args.max_a,
            rays=args.rays,
            early_stop=_early_stop(args),
            cache=cache,
        )
    _emit_rows(rows, args)
    if cache is not None and args.reverify_sample > 0:
        used = [r.graph_hash for r in rows if r.graph_hash]
        problems = reverify_cache(cache, used, args.reverify_sample)
        if problems:
            for line in problems:
                print(line, file=sys.stderr)
            return 1
    return 2 if any(r.verdict == "skipped" for r in rows) else 0


def _cmd_s3(args) -> int:
    rows = s3_rows(args.bound)
    _emit_rows(rows, args)
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {
        "analyze": _cmd_analyze,
        "brieskorn": _cmd_brieskorn,
        "survey": _cmd_survey,
        "s3": _cmd_s3,
    }[args.command]
    try:
        return handler(args)
    except (PlumbingError, ValueError, OSError) as exc:
        print(f"plumbhf: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
