"""Command-line interface.

Subcommands: validate, analyze, transfer, bench, serve. Exit codes:
0 success, 1 domain error (bad lexicon, failed analysis...), 2 usage.
The lexicon argument of `validate` and `serve` may be omitted, in which
case $PICTOSEM_LEXICON or the bundled demo lexicon is used.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .analyzer import AnalyzerConfig, analyze
from .bench import load_corpus, run_benchmark
from .errors import PictosemError
from .lexicon import load_lexicon, validate_lexicon
from .network import serialize_network
from .realizer import load_dictionary, load_templates, transfer
from . import defaults


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pictosem",
        description="Interpret unordered icon sequences and render French sentences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="lint a lexicon file")
    p_validate.add_argument("lexicon", nargs="?", default=None)

    p_analyze = sub.add_parser("analyze", help="print the semantic network")
    p_analyze.add_argument("lexicon")
    p_analyze.add_argument("sequence", nargs="+", metavar="symbol")
    p_analyze.add_argument("--threshold", type=float, default=None)
    p_analyze.add_argument("--locality", type=float, default=None)
    p_analyze.add_argument(
        "--format", choices=("graph-text", "json"), default="graph-text"
    )

    p_transfer = sub.add_parser("transfer", help="print the French sentence")
    p_transfer.add_argument("lexicon")
    p_transfer.add_argument("dictionary")
    p_transfer.add_argument("templates")
    p_transfer.add_argument("sequence", nargs="+", metavar="symbol")
    p_transfer.add_argument("--threshold", type=float, default=None)
    p_transfer.add_argument("--locality", type=float, default=None)

    p_bench = sub.add_parser("bench", help="run a gold corpus, report categories")
    p_bench.add_argument("lexicon")
    p_bench.add_argument("dictionary")
    p_bench.add_argument("templates")
    p_bench.add_argument("corpus")
    p_bench.add_argument("--threshold", type=float, default=None)
    p_bench.add_argument("--locality", type=float, default=None)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("lexicon", nargs="?", default=None)
    p_serve.add_argument("dictionary", nargs="?", default=None)
    p_serve.add_argument("templates", nargs="?", default=None)
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")

    return parser


def _config(args: argparse.Namespace) -> AnalyzerConfig:
    base = AnalyzerConfig()
    return AnalyzerConfig(
        threshold=base.threshold if args.threshold is None else args.threshold,
        locality=base.locality if args.locality is None else args.locality,
    )


def _cmd_validate(args: argparse.Namespace) -> int:
    lexicon = load_lexicon(defaults.resolve_lexicon_path(args.lexicon))
    report = validate_lexicon(lexicon)
    for message in report.errors:
        print(f"error: {message}")
    for message in report.warnings:
        print(f"warning: {message}")
    if report.ok:
        print(
            f"ok: {len(lexicon.symbols)} symbols, {len(lexicon.taxemes)} taxemes, "
            f"{len(lexicon.domains)} domains"
            + (f", {len(report.warnings)} warning(s)" if report.warnings else "")
        )
        return 0
    return 1


def _cmd_analyze(args: argparse.Namespace) -> int:
    lexicon = load_lexicon(args.lexicon)
    network = analyze(lexicon, args.sequence, _config(args))
    print(serialize_network(network, args.format))
    return 0


def _cmd_transfer(args: argparse.Namespace) -> int:
    lexicon = load_lexicon(args.lexicon)
    dictionary = load_dictionary(args.dictionary)
    templates = load_templates(args.templates)
    print(transfer(lexicon, dictionary, templates, args.sequence, _config(args)))
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    lexicon = load_lexicon(args.lexicon)
    dictionary = load_dictionary(args.dictionary)
    templates = load_templates(args.templates)
    corpus = load_corpus(args.corpus)
    report = run_benchmark(lexicon, dictionary, templates, corpus, _config(args))
    print(report.table(), file=sys.stderr)
    print(json.dumps(report.to_dict(), ensure_ascii=False, indent=2))
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    lexicon = load_lexicon(defaults.resolve_lexicon_path(args.lexicon))
    dictionary = load_dictionary(args.dictionary or defaults.demo_dictionary_path())
    templates = load_templates(args.templates or defaults.demo_templates_path())
    app = create_app(lexicon, dictionary, templates)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


_COMMANDS = {
    "validate": _cmd_validate,
    "analyze": _cmd_analyze,
    "transfer": _cmd_transfer,
    "bench": _cmd_bench,
    "serve": _cmd_serve,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except PictosemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry_point() -> None:
    raise SystemExit(main())
