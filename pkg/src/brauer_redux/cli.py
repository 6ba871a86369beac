"""Command line entry point ``brauer-redux``.

Exit codes: 0 success, 1 disagreement or expected-value mismatch, 2 input
error.  Set ``NO_COLOR`` to keep the text table free of ANSI colour.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .errors import ScenarioError
from .scenarios import (
    EXIT_INPUT,
    Report,
    Scenario,
    run_scenario,
    run_suite,
    verify_triangle,
)

# single-shot subcommand -> scenario kind
_SINGLE = {
    "genus1": "local-genus1",
    "iota": "iota",
    "general": "general",
    "global": "global",
    "rr": "rr",
    "hilbert": "hilbert",
    "fm-rank": "fm",
    "pi-check": "pi-check",
}


def _read_payload(arg: str):
    """Inline JSON, or a path to a JSON file."""
    text = arg.strip()
    if not text.startswith(("{", "[")):
        text = Path(arg).read_text()
    return json.loads(text)


def _emit(report: Report, as_json: bool) -> None:
    if as_json:
        sys.stdout.write(report.to_json())
        return
    text = report.to_text()
    if sys.stdout.isatty() and not os.environ.get("NO_COLOR"):
        text = text.replace("  NO  ", "  \x1b[31mNO\x1b[0m  ").replace("MISMATCH", "\x1b[31mMISMATCH\x1b[0m")
    sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brauer-redux",
        description="Index reduction of Brauer classes along function fields of curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a scenario file")
    run.add_argument("file")
    run.add_argument("--json", action="store_true", help="machine-readable output")
    run.add_argument("--bound", type=int, help="override enumeration bounds of genus-1 searches")

    tri = sub.add_parser("verify-triangle", help="min = gcd = closed form over a capacity grid")
    tri.add_argument("--pmax", type=int, default=5)
    tri.add_argument("--nmax", type=int, default=4)
    tri.add_argument("--cpcmax", type=int, default=5)
    tri.add_argument("--mmax", type=int, default=6)
    tri.add_argument("--json", action="store_true")

    for cmd, kind in _SINGLE.items():
        p = sub.add_parser(cmd, help=f"evaluate one '{kind}' payload")
        p.add_argument("payload", help="inline JSON object or path to a JSON file")
        p.add_argument("--json", action="store_true")
        if cmd == "genus1":
            p.add_argument("--bound", type=int)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            report, code = run_suite(args.file, args.bound)
        elif args.command == "verify-triangle":
            report = verify_triangle(args.pmax, args.nmax, args.cpcmax, args.mmax)
            code = report.exit_code
        else:
            payload = _read_payload(args.payload)
            s = Scenario(_SINGLE[args.command], payload, name=args.command)
            report = Report([run_scenario(s, 0, getattr(args, "bound", None))])
            code = report.exit_code
            if report.rows[0]["error"]:
                _emit(report, args.json)
                return EXIT_INPUT
    except (OSError, ScenarioError, json.JSONDecodeError) as exc:
        print(f"brauer-redux: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(report, args.json)
    return code


if __name__ == "__main__":
    sys.exit(main())
