"""Expression language: parser, evaluator, sessions and the command line."""

from .config import ConfigError, EvalConfig, apply_setting
from .evaluator import EvalError, Value, evaluate
from .nodes import to_source
from .parser import ParseError, parse, tokenize
from .session import Session

__all__ = [
    "ConfigError",
    "EvalConfig",
    "EvalError",
    "ParseError",
    "Session",
    "Value",
    "apply_setting",
    "evaluate",
    "parse",
    "to_source",
    "tokenize",
]
