"""Tokenizer and recursive-descent parser for the expression language."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .nodes import (
    BINARY_PREC,
    RIGHT_ASSOC,
    Binary,
    Call,
    Coef,
    Interval,
    Node,
    Num,
    Sym,
    Tuple_,
    Unary,
)

SYMBOL_RE = re.compile(r"[TIF][0-9]*|h[0-9]+|g[0-9]*|i[0-6]?|j|k")
KEYWORDS = {"neut", "anti", "non", "nand"}

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<num>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op><->|->|[-+*/&|^!(),\[\]])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # num, sym, name, kw, op, eof
    text: str
    line: int
    col: int

    def describe(self) -> str:
        return "end of input" if self.kind == "eof" else repr(self.text)


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int, expected=()):
        self.line, self.col = line, col
        self.expected = tuple(sorted(set(expected)))
        self.message = message
        detail = f"; expected one of: {', '.join(self.expected)}" if self.expected else ""
        super().__init__(f"{line}:{col}: {message}{detail}")


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind, value = m.lastgroup, m.group()
        col = pos - line_start + 1
        if kind == "nl":
            line, line_start = line + 1, m.end()
        elif kind == "ident":
            if value in KEYWORDS:
                out.append(Token("kw", value, line, col))
            elif SYMBOL_RE.fullmatch(value):
                out.append(Token("sym", value, line, col))
            else:
                out.append(Token("name", value, line, col))
        elif kind != "ws":
            out.append(Token(kind, value, line, col))
        pos = m.end()
    out.append(Token("eof", "", line, len(text) - line_start + 1))
    return out


def _number(text: str):
    if re.fullmatch(r"\d+", text):
        return int(text)
    return float(text)


_PRIMARY_START = ("number", "symbol", "name", "(", "[")
_UNARY_START = ("!", "-", "+", "neut", "anti", "non")


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.pos = 0

    @property
    def cur(self) -> Token:
        return self.toks[self.pos]

    def advance(self) -> Token:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected) -> ParseError:
        tok = self.cur
        return ParseError(f"unexpected {tok.describe()}", tok.line, tok.col, expected)

    def expect(self, text: str) -> Token:
        if self.cur.text == text and self.cur.kind in ("op", "kw"):
            return self.advance()
        raise self.fail([text])

    def at_op(self, *ops: str) -> bool:
        return self.cur.kind in ("op", "kw") and self.cur.text in ops

    # -- grammar
    def parse(self) -> Node:
        node = self.binary(1)
        if self.cur.kind != "eof":
            raise self.fail(["end of input", "operator"])
        return node

    def binary(self, level: int) -> Node:
        if level > max(BINARY_PREC.values()):
            return self.unary()
        ops = [op for op, p in BINARY_PREC.items() if p == level]
        left = self.binary(level + 1)
        if any(op in RIGHT_ASSOC for op in ops):
            if self.at_op(*ops):
                op = self.advance().text
                return Binary(op, left, self.binary(level))
            return left
        while self.at_op(*ops):
            op = self.advance().text
            left = Binary(op, left, self.binary(level + 1))
        return left

    def unary(self) -> Node:
        if self.at_op(*_UNARY_START):
            op = self.advance().text
            return Unary(op, self.unary())
        return self.primary()

    def primary(self) -> Node:
        tok = self.cur
        if tok.kind == "num":
            self.advance()
            num = Num(_number(tok.text))
            if self.cur.kind == "sym":
                return Coef(num, Sym(self.advance().text))
            return num
        if tok.kind == "sym":
            self.advance()
            return Sym(tok.text)
        if tok.kind == "name":
            self.advance()
            if not self.at_op("("):
                if tok.text in CONSTANTS:
                    return Sym(tok.text)
                raise ParseError(f"unknown symbol {tok.text!r}", tok.line, tok.col, ["symbol"])
            self.advance()
            args: list[Node] = []
            if not self.at_op(")"):
                args.append(self.binary(1))
                while self.at_op(","):
                    self.advance()
                    args.append(self.binary(1))
            if not self.at_op(")"):
                raise self.fail([",", ")"])
            self.advance()
            return Call(tok.text, tuple(args))
        if self.at_op("("):
            self.advance()
            items = [self.binary(1)]
            while self.at_op(","):
                self.advance()
                items.append(self.binary(1))
            if not self.at_op(")"):
                raise self.fail([",", ")"] if len(items) == 1 else [",", ")"])
            self.advance()
            return items[0] if len(items) == 1 else Tuple_(tuple(items))
        if self.at_op("["):
            self.advance()
            lo = self.binary(1)
            self.expect(",")
            hi = self.binary(1)
            self.expect("]")
            return Interval(lo, hi)
        raise self.fail(_PRIMARY_START + _UNARY_START)


CONSTANTS = {"pi", "e"}


def parse(text: str) -> Node:
    return _Parser(text).parse()
