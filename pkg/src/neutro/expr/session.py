"""Line-oriented command execution shared by the REPL, batch mode and selftest."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .config import ConfigError, EvalConfig, apply_setting
from .evaluator import EvalError, Value, evaluate
from .parser import ParseError, parse

EXIT_OK, EXIT_PARSE, EXIT_EVAL, EXIT_CONFIG = 0, 1, 2, 3

HELP = """\
expressions   (0.3,0.4,0.2) -> (0.7,0.1,0.4)   anti(I)   (2+5I)*(1+I)   (1+T)*(1+F)
:order <chain|file>        prevalence order, e.g. T>I>F or T1>T2>T3>I>F1>F2
:conj v1|v2|v3|<order>     literal AND table
:conj <shape[:norm:conorm]> numeric conjunction, e.g. norm-conorm-conorm:min:max
:disj <order|shape[:norm:conorm]>
:neg <variant>             swap_tf, swap_tf_flip_i, complement_all, complement_tf
:impl <form>               negor[:neg[:disj]] or in1..in4[:t-impl[:norm[:conorm]]]
:table <file|venn>         sub-indeterminacy multiplication table
:alphabet <lits|auto>      refined alphabet for Tj/Ik/Fl quadruples
:dual <family> [n]         nilpotent, idempotent or anti_idempotent
:dim <n>                   dimension for h units
:show config   :help   :quit"""


@dataclass
class Outcome:
    code: int
    text: str
    value: Optional[Value] = None
    quit: bool = False
    is_error: bool = False
    error_kind: str = ""


@dataclass
class Session:
    config: EvalConfig = field(default_factory=EvalConfig)

    def run_command(self, line: str) -> Outcome:
        body = line.strip()[1:]
        key, _, arg = body.partition(" ")
        if key in ("quit", "q", "exit"):
            return Outcome(EXIT_OK, "", quit=True)
        if key == "help":
            return Outcome(EXIT_OK, HELP)
        if key == "show":
            if arg.strip() not in ("", "config"):
                return _error(EXIT_CONFIG, "config", f"nothing to show for {arg.strip()!r}")
            return Outcome(EXIT_OK, self.config.describe())
        try:
            self.config = apply_setting(self.config, key, arg)
        except ConfigError as exc:
            return _error(EXIT_CONFIG, "config", str(exc))
        return Outcome(EXIT_OK, "")

    def evaluate(self, text: str) -> Outcome:
        try:
            tree = parse(text)
        except ParseError as exc:
            return _error(EXIT_PARSE, "parse", f"syntax error at {exc}")
        try:
            value = evaluate(tree, self.config)
        except EvalError as exc:
            return _error(EXIT_EVAL, "eval", f"error: {exc}")
        return Outcome(EXIT_OK, str(value), value)

    def execute(self, line: str) -> Outcome:
        if line.strip().startswith(":"):
            return self.run_command(line)
        return self.evaluate(line)

    def record(self, text: str, outcome: Outcome) -> str:
        if outcome.is_error:
            rec = {"input": text, "error_kind": outcome.error_kind, "message": outcome.text}
        else:
            v = outcome.value
            rec = {
                "input": text,
                "value_kind": v.kind if v else "none",
                "value": outcome.text,
                "config_fingerprint": self.config.fingerprint(),
            }
        return json.dumps(rec, ensure_ascii=False)


def _error(code: int, kind: str, text: str) -> Outcome:
    return Outcome(code, text, is_error=True, error_kind=kind)


def split_expected(line: str) -> tuple[str, Optional[str]]:
    """``expr => expected`` splits into both parts; a bare expression has no expectation."""
    if "=>" in line:
        expr, _, expected = line.partition("=>")
        return expr.strip(), expected.strip()
    return line.strip(), None
