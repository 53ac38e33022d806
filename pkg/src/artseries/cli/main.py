"""Command-line entry point: batch scripts and an interactive session."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from ..errors import ParseError, SeriesError
from ..serialize import to_json
from .evaluator import EvaluationError, Evaluator, SessionConfig, format_value
from .syntax import Assign, parse, parse_program

PROMPT = "art> "


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="artseries",
        description="Evaluate expressions over formal series with rational exponents.",
    )
    ap.add_argument("script", nargs="?", help="batch script; omit for an interactive session")
    ap.add_argument("--window", type=Fraction, default=Fraction(12), help="window bound, p/q")
    ap.add_argument("--tol", type=float, default=1e-9, help="comparison tolerance")
    ap.add_argument("--orientation", choices=("noetherian", "artinian"), default="noetherian")
    ap.add_argument("--exponents", choices=("Q", "N"), default="Q")
    ap.add_argument("--emit", choices=("text", "json"), default="text")
    ap.add_argument("--nvars", type=int, default=3, help="variables for symmetric series")
    ap.add_argument("--cutoff", type=Fraction, default=Fraction(5), help="symmetric degree cutoff")
    ap.add_argument("--bound", type=int, default=24, help="pseudointeger modulus bound")
    return ap


def config_from_args(args) -> SessionConfig:
    return SessionConfig(
        orientation=args.orientation,
        window=args.window,
        tol=args.tol,
        exponents=args.exponents,
        nvars=args.nvars,
        cutoff=args.cutoff,
        bound=args.bound,
    )


def render(node, value, emit: str) -> str:
    if emit == "json":
        return json.dumps(to_json(value), sort_keys=True)
    text = format_value(value)
    if isinstance(node, Assign):
        return f"{node.name} = {text}"
    return text


def diagnostic(exc: Exception, line: int, source: str) -> str:
    if isinstance(exc, ParseError):
        where = f"line {exc.line}, column {exc.column}"
        message = exc.message
    else:
        where = f"line {line}"
        message = str(exc)
    kind = type(exc).__name__
    return f"error: {where}: {kind}: {message}\n  in statement: {source}"


def run_batch(text: str, config: SessionConfig, emit: str = "text", out=None, err=None) -> int:
    """Run every statement; returns 0, or 1 at the first failing statement."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        program = parse_program(text)
    except ParseError as exc:
        source = text.splitlines()[exc.line - 1].strip()
        print(diagnostic(exc, exc.line, source), file=err)
        return 1
    evaluator = Evaluator(config)
    for line, source, node in program:
        try:
            value = evaluator.run(node)
        except Exception as exc:  # every failure becomes a diagnostic
            if isinstance(exc, SeriesError):
                exc.location = (line, 1)
            print(diagnostic(exc, line, source), file=err)
            return 1
        print(render(node, value, emit), file=out)
    return 0


def run_repl(config: SessionConfig, emit: str = "text", stdin=None, out=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    out = sys.stdout if out is None else out
    evaluator = Evaluator(config)
    interactive = stdin.isatty()
    line_no = 0
    while True:
        if interactive:
            out.write(PROMPT)
            out.flush()
        raw = stdin.readline()
        if not raw:
            break
        line_no += 1
        source = raw.strip()
        if not source or source.startswith("#"):
            continue
        if source in (":quit", ":q"):
            break
        try:
            node = parse(source, line_no)
            value = evaluator.run(node)
        except Exception as exc:
            print(diagnostic(exc, line_no, source), file=out)
            continue
        print(render(node, value, emit), file=out)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.script is None:
        return run_repl(config, args.emit)
    try:
        with open(args.script, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.script}: {exc.strerror}", file=sys.stderr)
        return 2
    return run_batch(text, config, args.emit)


__all__ = ["main", "run_batch", "run_repl", "EvaluationError"]
