"""Command-line front end.

Subcommands:
    enumerate   list the 30 labeled Fano planes with their tags and types
    tables      emit the five classification tables plus observations
    fragments   type-to-fragment correspondence and per-plane sub-geometries
    generic     labeling census of a built-in or file-based configuration
    verify      run every invariant suite (exit 1 on any failure)

Exit codes: 0 success, 1 verification failure, 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .configs import (
    BUILTIN_NAMES,
    InvalidConfigurationError,
    enumerate_labelings,
    load_builtin,
    load_configuration,
)
from .enumeration import build_catalog
from .report import (
    Report,
    enumerate_report,
    fragments_report,
    generic_report,
    render,
    tables_report,
)
from .verify import run_verify


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("md", "csv", "json"), default="md",
                        help="output format (default: md)")
    parser.add_argument("--out", metavar="PATH", default=None,
                        help="write to PATH instead of standard output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fanoplanes",
        description="Enumerate and classify labeled Fano planes and small "
                    "3-uniform configurations.",
    )
    parser.add_argument("--version", action="version", version=f"fanoplanes {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the 30 labeled planes")
    _add_output_flags(p)

    p = sub.add_parser("tables", help="emit the five classification tables")
    _add_output_flags(p)
    p.add_argument("--side", choices=("A", "B", "total"), default=None,
                   help="restrict the census table to one side")

    p = sub.add_parser("fragments", help="defective/ordinary sub-geometries")
    _add_output_flags(p)

    p = sub.add_parser("generic", help="labeling census of a 3-uniform configuration")
    _add_output_flags(p)
    p.add_argument("--config", required=True, metavar="NAME|PATH",
                   help=f"built-in name ({', '.join(BUILTIN_NAMES)}) or a block-list file")

    sub.add_parser("verify", help="run every invariant suite")
    return parser


def _load_config(spec: str):
    if spec in BUILTIN_NAMES:
        return load_builtin(spec)
    path = Path(spec)
    if not path.exists():
        raise InvalidConfigurationError(
            f"{spec!r} is neither a built-in ({', '.join(BUILTIN_NAMES)}) nor a file"
        )
    return load_configuration(path)


def _emit(report: Report, args: argparse.Namespace) -> int:
    text = render(report, args.format)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "enumerate":
            return _emit(enumerate_report(build_catalog()), args)
        if args.command == "tables":
            return _emit(tables_report(build_catalog(), side=args.side), args)
        if args.command == "fragments":
            return _emit(fragments_report(build_catalog()), args)
        if args.command == "generic":
            census = enumerate_labelings(_load_config(args.config))
            return _emit(generic_report(census), args)
        if args.command == "verify":
            return run_verify()
    except (InvalidConfigurationError, ValueError, OSError) as exc:
        print(f"fanoplanes: error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    raise SystemExit(main())
