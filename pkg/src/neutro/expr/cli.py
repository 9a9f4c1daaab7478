"""Command-line entry point: ``neutro eval|repl|batch|selftest|table|graph``."""

from __future__ import annotations

import argparse
import os
import sys
from importlib import resources
from typing import Optional, TextIO

from ..graph import validate_adjacency
from ..literal import (
    AND_VERSIONS,
    EQUIV_TABLE,
    IMPLIES_TABLE,
    NEG_TABLE,
    OR_TABLE,
    REFINED_AND,
    REFINED_NEG,
    REFINED_OR,
    SHEFFER_TABLE,
    XOR_TABLE,
)
from .session import EXIT_CONFIG, EXIT_EVAL, EXIT_OK, Outcome, Session, split_expected
from .tablefile import load_adjacency

TABLES = {
    "neg": NEG_TABLE,
    **{f"and-{k}": t for k, t in AND_VERSIONS.items()},
    "or": OR_TABLE,
    "xor": XOR_TABLE,
    "nand": SHEFFER_TABLE,
    "implies": IMPLIES_TABLE,
    "equiv": EQUIV_TABLE,
    "refined-neg": REFINED_NEG,
    "refined-and": REFINED_AND,
    "refined-or": REFINED_OR,
}


class _Out:
    def __init__(self, json_mode: bool, out: TextIO, err: TextIO):
        self.json = json_mode
        self.out, self.err = out, err
        self.color = err.isatty() and not os.environ.get("NO_COLOR")

    def error(self, text: str):
        if self.color:
            text = f"\033[31m{text}\033[0m"
        print(text, file=self.err)


def _session_from_args(args, out: _Out) -> Optional[Session]:
    s = Session()
    for key in ("order", "conj", "disj", "impl", "table"):
        value = getattr(args, key, None)
        if value is None:
            continue
        res = s.run_command(f":{key} {value}")
        if res.code:
            out.error(res.text)
            return None
    return s


def _report(session: Session, text: str, res: Outcome, out: _Out, echo: bool):
    if out.json:
        print(session.record(text, res), file=out.out)
    elif res.is_error:
        out.error(f"{text} => {res.text}" if echo else res.text)
    elif echo:
        print(f"{text} => {res.text}", file=out.out)
    elif res.text:
        print(res.text, file=out.out)


def cmd_eval(args, out: _Out) -> int:
    session = _session_from_args(args, out)
    if session is None:
        return EXIT_CONFIG
    res = session.evaluate(args.expr)
    _report(session, args.expr, res, out, echo=False)
    return res.code


def run_lines(lines, session: Session, out: _Out, keep_going: bool) -> int:
    """Run batch lines; returns the first nonzero exit code, or 0."""
    status = EXIT_OK
    passed = failed = 0
    for raw in lines:
        line = raw.rstrip("\n")
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith(":"):
            res = session.run_command(stripped)
            if res.code:
                out.error(f"{stripped} => {res.text}")
                status = status or res.code
                if not keep_going:
                    return status
            if res.quit:
                break
            continue
        expr, expected = split_expected(stripped)
        res = session.evaluate(expr)
        if not res.is_error and expected is not None and res.text != expected:
            res = Outcome(EXIT_EVAL, f"mismatch: got {res.text}, expected {expected}", is_error=True, error_kind="mismatch")
        _report(session, expr, res, out, echo=True)
        if res.code:
            failed += 1
            status = status or res.code
            if not keep_going:
                return status
        elif expected is not None:
            passed += 1
    if passed or failed:
        print(f"# {passed} checked, {failed} failed", file=out.err)
    return status


def cmd_batch(args, out: _Out) -> int:
    session = _session_from_args(args, out)
    if session is None:
        return EXIT_CONFIG
    try:
        if args.file == "-":
            return run_lines(sys.stdin, session, out, args.keep_going)
        with open(args.file, encoding="utf-8") as fh:
            return run_lines(fh.readlines(), session, out, args.keep_going)
    except OSError as exc:
        out.error(f"cannot read {args.file}: {exc}")
        return EXIT_CONFIG


def cmd_selftest(args, out: _Out) -> int:
    text = resources.files("neutro").joinpath("data/acceptance.nx").read_text(encoding="utf-8")
    return run_lines(text.splitlines(), Session(), out, keep_going=True)


def cmd_repl(args, out: _Out) -> int:
    session = _session_from_args(args, out)
    if session is None:
        return EXIT_CONFIG
    interactive = sys.stdin.isatty()
    if interactive:
        try:
            import readline  # noqa: F401  line editing where available
        except ImportError:
            pass
        print("neutro expression REPL; :help for commands, :quit to leave", file=out.out)
    while True:
        try:
            line = input("> " if interactive else "")
        except EOFError:
            break
        except KeyboardInterrupt:
            print(file=out.out)
            continue
        if not line.strip() or line.strip().startswith("#"):
            continue
        res = session.execute(line)
        if res.quit:
            break
        _report(session, line.strip(), res, out, echo=False)
    return EXIT_OK


def cmd_table(args, out: _Out) -> int:
    if args.name not in TABLES:
        out.error(f"unknown table {args.name!r}; choose from {', '.join(TABLES)}")
        return EXIT_CONFIG
    print(TABLES[args.name].render(), file=out.out)
    return EXIT_OK


def cmd_graph(args, out: _Out) -> int:
    try:
        m = load_adjacency(args.file, strict=not args.loose)
    except (OSError, ValueError) as exc:
        out.error(f"cannot load {args.file}: {exc}")
        return EXIT_CONFIG
    verdict = validate_adjacency(m)
    kind = "directed" if m.directed else "undirected"
    if verdict.valid:
        print(f"valid, {kind}, n={m.n}", file=out.out)
        return EXIT_OK
    print(f"invalid, {kind}, n={m.n}", file=out.out)
    for p in verdict.problems:
        print(f"  {p}", file=out.out)
    return EXIT_EVAL


def _common_flags(suppress: bool) -> argparse.ArgumentParser:
    # flags are accepted before or after the subcommand; the subcommand copy
    # suppresses its defaults so it never overwrites an earlier value
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", help="prevalence order chain or order file (default T>I>F)", **kw)
    common.add_argument("--conj", help="literal AND version v1|v2|v3, an order, or a numeric conjunction setting", **kw)
    common.add_argument("--disj", help="literal OR order or numeric disjunction setting", **kw)
    common.add_argument("--impl", help="implication setting, e.g. negor:swap_tf or in4:lukasiewicz", **kw)
    common.add_argument("--table", help="sub-indeterminacy table file", **kw)
    common.add_argument("--json", action="store_true", help="emit one JSON record per result", **kw)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags(suppress=True)
    p = argparse.ArgumentParser(
        prog="neutro",
        description="Evaluate neutrosophic logic and number expressions.",
        parents=[_common_flags(suppress=False)],
    )
    sub = p.add_subparsers(dest="command", required=True)
    e = sub.add_parser("eval", parents=[common], help="evaluate one expression")
    e.add_argument("expr")
    e.set_defaults(func=cmd_eval)
    r = sub.add_parser("repl", parents=[common], help="interactive session")
    r.set_defaults(func=cmd_repl)
    b = sub.add_parser("batch", parents=[common], help="evaluate one expression per line")
    b.add_argument("file", help="input file, or - for stdin")
    b.add_argument("--keep-going", action="store_true", help="continue after errors")
    b.set_defaults(func=cmd_batch)
    s = sub.add_parser("selftest", parents=[common], help="run the bundled example corpus")
    s.set_defaults(func=cmd_selftest)
    t = sub.add_parser("table", help="print a literal operator table")
    t.add_argument("name", help=", ".join(TABLES))
    t.set_defaults(func=cmd_table, json=False)
    g = sub.add_parser("graph", help="validate an adjacency matrix file")
    g.add_argument("file")
    g.add_argument("--loose", action="store_true", help="accept any a+bI entry")
    g.set_defaults(func=cmd_graph, json=False)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = _Out(getattr(args, "json", False), sys.stdout, sys.stderr)
    return args.func(args, out)


if __name__ == "__main__":
    sys.exit(main())
