"""Expression tree and its canonical printer.

The printer emits the fewest parentheses that still reparse to the same tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

# binding power per binary operator, loosest first
BINARY_PREC = {
    "<->": 1,
    "->": 2,
    "|": 3,
    "^": 4,
    "&": 5,
    "nand": 5,
    "+": 6,
    "-": 6,
    "*": 7,
    "/": 7,
}
RIGHT_ASSOC = {"->"}
UNARY_OPS = ("!", "-", "+", "neut", "anti", "non")
WORD_OPS = {"nand", "neut", "anti", "non"}
UNARY_PREC = 8
ATOM_PREC = 9


@dataclass(frozen=True)
class Num:
    value: Union[int, float]


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Coef:
    """A number written directly before a symbol, as in ``5I``; binds tighter than ``*``."""

    value: Num
    sym: Sym


@dataclass(frozen=True)
class Unary:
    op: str
    arg: "Node"


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple["Node", ...]


@dataclass(frozen=True)
class Tuple_:
    items: tuple["Node", ...]


@dataclass(frozen=True)
class Interval:
    lo: "Node"
    hi: "Node"


Node = Union[Num, Sym, Coef, Unary, Binary, Call, Tuple_, Interval]


def fmt_num(v) -> str:
    if isinstance(v, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(v, int):
        return str(v)
    return repr(float(v))


def _prec(node: Node) -> int:
    if isinstance(node, Binary):
        return BINARY_PREC[node.op]
    if isinstance(node, Unary):
        return UNARY_PREC
    return ATOM_PREC


def _wrap(node: Node, need: int) -> str:
    s = to_source(node)
    return "(" + s + ")" if _prec(node) < need else s


def to_source(node: Node) -> str:
    if isinstance(node, Num):
        return fmt_num(node.value)
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Coef):
        return fmt_num(node.value.value) + node.sym.name
    if isinstance(node, Unary):
        inner = _wrap(node.arg, UNARY_PREC)
        if node.op in WORD_OPS:
            return node.op + " " + inner
        # keep "- -x" from printing as a token other than two minuses
        return node.op + inner
    if isinstance(node, Binary):
        p = BINARY_PREC[node.op]
        if node.op in RIGHT_ASSOC:
            left, right = _wrap(node.left, p + 1), _wrap(node.right, p)
        else:
            left, right = _wrap(node.left, p), _wrap(node.right, p + 1)
        op = f" {node.op} " if node.op in WORD_OPS else node.op
        return left + op + right
    if isinstance(node, Call):
        return node.name + "(" + ",".join(to_source(a) for a in node.args) + ")"
    if isinstance(node, Tuple_):
        return "(" + ",".join(to_source(a) for a in node.items) + ")"
    if isinstance(node, Interval):
        return "[" + to_source(node.lo) + "," + to_source(node.hi) + "]"
    raise TypeError(f"not an expression node: {node!r}")
