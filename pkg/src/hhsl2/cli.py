"""Command line entry point: ``hhsl2 dims|verify|report``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .fieldpoly import is_prime
from .verify import SUITES, run_suites

VERIFY_SUITES = ("cocycles", "relations", "connecting", "span", "hilbert", "audit", "all")
FIELDS = ("table", "check", "params", "expected", "computed", "citation", "status")


class UsageError(Exception):
    pass


def _cell(v) -> str:
    if isinstance(v, str):
        return v
    return json.dumps(v, sort_keys=True, separators=(",", ":"))


def render_json(report) -> str:
    return json.dumps(report.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def render_csv(report, tables=None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(FIELDS)
    for t, recs in report.tables.items():
        if tables is not None and t not in tables:
            continue
        for r in recs:
            w.writerow([t, r.check, _cell(r.params), _cell(r.expected), _cell(r.computed),
                        r.citation, r.status])
    return buf.getvalue()


def render_text(report) -> str:
    lines = [f"p = {report.p}, max degree = {report.max_degree}"]
    for t, recs in report.tables.items():
        lines.append("")
        lines.append(f"[{t}]")
        for r in recs:
            params = " ".join(f"{k}={_cell(v)}" for k, v in r.params.items())
            lines.append(f"{r.status:<17} {r.check:<28} {params:<40} "
                         f"expected={_cell(r.expected)} computed={_cell(r.computed)}  ({r.citation})")
    lines.append("")
    lines.append(render_summary_line(report))
    return "\n".join(lines) + "\n"


def render_summary_line(report) -> str:
    c = report.counts()
    return f"summary: {c['pass']} pass, {c['fail']} fail, {c['paper-discrepancy']} paper-discrepancy"


def render_summary(report) -> str:
    """Human-readable digest: counts plus every record that is not a pass."""
    lines = [f"p = {report.p}, max degree = {report.max_degree}", render_summary_line(report), ""]
    for status in ("fail", "paper-discrepancy"):
        bad = [(t, r) for t, recs in report.tables.items() for r in recs if r.status == status]
        lines.append(f"{status}: {len(bad)}")
        for t, r in bad:
            params = ", ".join(f"{k}={_cell(v)}" for k, v in r.params.items())
            lines.append(f"  [{t}] {r.check} ({params}): claimed {_cell(r.expected)}, "
                         f"computed {_cell(r.computed)}; {r.citation}")
        lines.append("")
    return "\n".join(lines)


RENDER = {"json": render_json, "csv": render_csv, "text": render_text}


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}") from exc


def _write_report(report, fmt: str, out: str):
    try:
        os.makedirs(out, exist_ok=True)
        files = {"summary.txt": render_summary(report)}
        if fmt == "json":
            files["report.json"] = render_json(report)
        elif fmt == "text":
            files["report.txt"] = render_text(report)
        else:
            for t in report.tables:
                files[f"{t}.csv"] = render_csv(report, tables=(t,))
        for name, text in files.items():
            with open(os.path.join(out, name), "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write report to {out}: {exc}") from exc
    return sorted(files)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, required=True, help="odd prime characteristic")
    common.add_argument("--max-degree", type=int, default=None, help="largest degree n (default 4p)")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", default=None, help="output file (a directory for 'report')")

    ap = argparse.ArgumentParser(prog="hhsl2", description="Brute-force checks of Ext*_U(k, S) for sl2 over GF(p).")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("dims", parents=[common], help="brute-force Ext dimensions against the closed forms")
    v = sub.add_parser("verify", parents=[common], help="run one verification suite or all of them")
    v.add_argument("--suite", choices=VERIFY_SUITES, default="all")
    sub.add_parser("report", parents=[common], help="write every table plus a summary to a directory")
    return ap


def _validate(args):
    if args.p <= 2 or not is_prime(args.p):
        raise UsageError(f"--p must be an odd prime, got {args.p}")
    if args.max_degree is None:
        args.max_degree = 4 * args.p
    if args.max_degree < 0:
        raise UsageError(f"--max-degree must be non-negative, got {args.max_degree}")
    if args.max_degree < args.p:
        print(f"warning: max-degree {args.max_degree} < p = {args.p}; "
              "the generators in degrees p-1 and p are not reached", file=sys.stderr)


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _validate(args)
        if args.command == "dims":
            suites = ("dims",)
        elif args.command == "verify":
            suites = tuple(s for s in SUITES if s != "dims") if args.suite == "all" else (args.suite,)
        else:
            suites = SUITES
        report = run_suites(args.p, args.max_degree, suites)
        if args.command == "report":
            out = args.out or f"hhsl2-report-p{args.p}"
            written = _write_report(report, args.format, out)
            print(f"wrote {', '.join(written)} to {out}", file=sys.stderr)
            sys.stdout.write(render_summary(report))
        else:
            _emit(RENDER[args.format](report), args.out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return report.exit_code()


if __name__ == "__main__":
    sys.exit(main())
