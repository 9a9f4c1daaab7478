"""Symbolic logic over the literals T, I, F and their refinements T1, I2, ...

Truth values here are symbols rather than numbers.  Binary operators are
finite tables; the I-cells of a table are filled by a :class:`PrevalenceOrder`
(the prevailing operand wins), the {T, F} cells follow classical logic.
Results that leave the literal alphabet, such as ``T | F`` or ``T1 & T2``,
are kept as canonical :class:`Formula` trees.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Optional

from .errors import AlphabetError

KIND_RANK = {"T": 0, "I": 1, "F": 2}


class Formula:
    """Base of the canonical formula tree: :class:`Lit`, :class:`And`, :class:`Or`, :class:`Not`."""

    __slots__ = ()

    def sort_key(self) -> tuple:
        raise NotImplementedError

    def __and__(self, other):
        return conj(self, other)

    def __or__(self, other):
        return disj(self, other)

    def __invert__(self):
        return neg(self)

    def literals(self) -> frozenset["Lit"]:
        raise NotImplementedError


@dataclass(frozen=True)
class Lit(Formula):
    """``T``, ``I`` or ``F``, optionally refined by an index >= 1 (``index=0`` is unrefined)."""

    kind: str
    index: int = 0

    def __post_init__(self):
        if self.kind not in KIND_RANK:
            raise ValueError(f"literal kind must be T, I or F, not {self.kind!r}")
        if self.index < 0:
            raise ValueError("literal index must be >= 1 (0 for unrefined)")

    @classmethod
    def parse(cls, text: str) -> "Lit":
        m = re.fullmatch(r"\s*([TIF])(\d*)\s*", text)
        if not m:
            raise AlphabetError(f"not a literal: {text!r}")
        idx = int(m.group(2)) if m.group(2) else 0
        if m.group(2) and idx == 0:
            raise AlphabetError(f"refinement index must be >= 1: {text!r}")
        return cls(m.group(1), idx)

    @property
    def coarse(self) -> "Lit":
        return Lit(self.kind)

    @property
    def refined(self) -> bool:
        return self.index > 0

    def sort_key(self):
        return (0, (KIND_RANK[self.kind], self.index))

    def literals(self):
        return frozenset({self})

    def __str__(self):
        return self.kind + (str(self.index) if self.index else "")

    def __repr__(self):
        return f"Lit({self})"


@dataclass(frozen=True)
class And(Formula):
    args: tuple

    def sort_key(self):
        return (1, tuple(a.sort_key() for a in self.args))

    def literals(self):
        return frozenset().union(*(a.literals() for a in self.args))

    def __str__(self):
        return "&".join(_wrap(a, (Or,)) for a in self.args)


@dataclass(frozen=True)
class Or(Formula):
    args: tuple

    def sort_key(self):
        return (2, tuple(a.sort_key() for a in self.args))

    def literals(self):
        return frozenset().union(*(a.literals() for a in self.args))

    def __str__(self):
        return "|".join(str(a) for a in self.args)


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula

    def sort_key(self):
        return (3, (self.arg.sort_key(),))

    def literals(self):
        return self.arg.literals()

    def __str__(self):
        return "!" + _wrap(self.arg, (And, Or))


def _wrap(f: Formula, tight: tuple) -> str:
    return f"({f})" if isinstance(f, tight) else str(f)


def _nary(cls, items: Iterable[Formula]) -> Formula:
    flat: set[Formula] = set()
    for x in items:
        if not isinstance(x, Formula):
            raise TypeError(f"not a formula: {x!r}")
        flat.update(x.args if isinstance(x, cls) else (x,))
    if not flat:
        raise ValueError("empty connective")
    if len(flat) == 1:
        return flat.pop()
    return cls(tuple(sorted(flat, key=lambda f: f.sort_key())))


def conj(*xs: Formula) -> Formula:
    return _nary(And, xs)


def disj(*xs: Formula) -> Formula:
    return _nary(Or, xs)


def neg(x: Formula) -> Formula:
    if isinstance(x, Not):
        return x.arg
    if not isinstance(x, Formula):
        raise TypeError(f"not a formula: {x!r}")
    return Not(x)


def canonical(f: Formula) -> Formula:
    """Rebuild ``f`` bottom-up through the canonicalizing constructors."""
    if isinstance(f, Lit):
        return f
    if isinstance(f, Not):
        return neg(canonical(f.arg))
    build = conj if isinstance(f, And) else disj
    return build(*(canonical(a) for a in f.args))


def parse_formula(text: str) -> Formula:
    """Parse the printed form of a formula: literals, ``!``, ``&``, ``|`` and parentheses."""
    toks = re.findall(r"[TIF]\d*|[!&|()]|\S", text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else None

    def take(expect=None):
        nonlocal pos
        tok = peek()
        if tok is None or (expect and tok != expect):
            raise ValueError(f"bad formula {text!r}")
        pos += 1
        return tok

    def or_():
        xs = [and_()]
        while peek() == "|":
            take()
            xs.append(and_())
        return disj(*xs)

    def and_():
        xs = [unary()]
        while peek() == "&":
            take()
            xs.append(unary())
        return conj(*xs)

    def unary():
        if peek() == "!":
            take()
            return neg(unary())
        if peek() == "(":
            take()
            x = or_()
            take(")")
            return x
        return Lit.parse(take())

    out = or_()
    if pos != len(toks):
        raise ValueError(f"bad formula {text!r}")
    return out


T, I, F = Lit("T"), Lit("I"), Lit("F")
TIF = (T, I, F)


# -- prevalence orders -------------------------------------------------------


@dataclass(frozen=True)
class PrevalenceOrder:
    """Strict total order on a literal alphabet, strongest literal first."""

    chain: tuple[Lit, ...]

    def __post_init__(self):
        chain = tuple(self.chain)
        if len(set(chain)) != len(chain):
            raise ValueError(f"literal repeated in prevalence order {_chain_str(chain)}")
        if not chain:
            raise ValueError("empty prevalence order")
        object.__setattr__(self, "chain", chain)
        object.__setattr__(self, "_rank", {x: len(chain) - k for k, x in enumerate(chain)})

    @classmethod
    def parse(cls, text: str) -> "PrevalenceOrder":
        parts = re.split(r"\s*(?:>|≻)\s*", text.strip())
        return cls(tuple(Lit.parse(p) for p in parts))

    @property
    def alphabet(self) -> frozenset[Lit]:
        return frozenset(self.chain)

    def rank(self, x: Lit) -> int:
        try:
            return self._rank[x]
        except KeyError:
            raise AlphabetError(f"{x} not in the alphabet of {self}") from None

    def prevail(self, x: Lit, y: Lit) -> Lit:
        return x if self.rank(x) >= self.rank(y) else y

    def covers(self, lits: Iterable[Lit]) -> bool:
        return set(lits) <= self.alphabet

    def __str__(self):
        return _chain_str(self.chain)


def _chain_str(chain):
    return ">".join(str(x) for x in chain)


def prevail(order: PrevalenceOrder, x: Lit, y: Lit) -> Lit:
    """The order-maximal of ``x`` and ``y``; ``prevail(o, x, x) == x``."""
    return order.prevail(x, y)


# -- operator tables ---------------------------------------------------------


class OpKind(enum.Enum):
    NEG = "neg"
    AND = "and"
    OR = "or"
    XOR = "xor"
    SHEFFER = "sheffer"
    IMPLIES = "implies"
    EQUIV = "equiv"

    @property
    def arity(self) -> int:
        return 1 if self is OpKind.NEG else 2


_CLASSICAL: dict[OpKind, Callable[..., bool]] = {
    OpKind.NEG: lambda x: not x,
    OpKind.AND: lambda x, y: x and y,
    OpKind.OR: lambda x, y: x or y,
    OpKind.XOR: lambda x, y: x != y,
    OpKind.SHEFFER: lambda x, y: not (x and y),
    OpKind.IMPLIES: lambda x, y: (not x) or y,
    OpKind.EQUIV: lambda x, y: x == y,
}


def classical(kind: OpKind, *args: Lit) -> Lit:
    """Boolean truth table of ``kind`` on literals from {T, F}."""
    if any(a not in (T, F) for a in args):
        raise AlphabetError("classical tables are defined on {T, F} only")
    return T if _CLASSICAL[kind](*(a == T for a in args)) else F


@dataclass(frozen=True, eq=False)
class LiteralOpTable:
    """Total lookup table for one operator over a finite literal domain."""

    kind: OpKind
    domain: tuple[Lit, ...]
    cells: Mapping[tuple, Formula]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "cells", dict(self.cells))

    @property
    def arity(self) -> int:
        return self.kind.arity

    def get(self, *args: Formula) -> Optional[Formula]:
        return self.cells.get(tuple(args))

    def __call__(self, *args: Formula) -> Formula:
        if len(args) != self.arity:
            raise TypeError(f"{self.kind.value} takes {self.arity} operand(s)")
        out = self.cells.get(tuple(args))
        if out is None:
            raise AlphabetError(
                f"{self.kind.value} table has no cell for ({', '.join(map(str, args))})"
            )
        return out

    def __eq__(self, other):
        if not isinstance(other, LiteralOpTable):
            return NotImplemented
        return self.kind == other.kind and set(self.domain) == set(other.domain) and self.cells == other.cells

    __hash__ = None

    def is_symmetric(self) -> bool:
        return self.arity == 2 and all(self.cells[(x, y)] == self.cells[(y, x)] for x, y in self.cells)

    def render(self) -> str:
        if self.arity == 1:
            head = [self.kind.value] + [str(x) for x in self.domain]
            row = [""] + [str(self.cells[(x,)]) for x in self.domain]
            rows = [head, row]
        else:
            rows = [[self.kind.value] + [str(x) for x in self.domain]]
            for x in self.domain:
                rows.append([str(x)] + [str(self.cells[(x, y)]) for y in self.domain])
        width = max(len(c) for r in rows for c in r)
        return "\n".join(" ".join(c.ljust(width) for c in r).rstrip() for r in rows)


def generate_table(
    kind: OpKind,
    order: Optional[PrevalenceOrder] = None,
    overrides: Optional[Mapping[tuple, Formula]] = None,
) -> LiteralOpTable:
    """Build the {T, I, F} table for ``kind``.

    {T, F} cells are classical; cells involving I take the prevailing operand
    under ``order``; ``overrides`` then replace individual cells.  Negation
    needs no order: it maps I to I.
    """
    cells: dict[tuple, Formula] = {}
    if kind.arity == 1:
        for x in TIF:
            cells[(x,)] = I if x == I else classical(kind, x)
    else:
        if order is None or not order.covers(TIF):
            raise AlphabetError("binary literal tables need a prevalence order over T, I, F")
        for x in TIF:
            for y in TIF:
                if I in (x, y):
                    cells[(x, y)] = order.prevail(x, y)
                else:
                    cells[(x, y)] = classical(kind, x, y)
    for key, value in (overrides or {}).items():
        key = tuple(key)
        if key not in cells:
            raise AlphabetError(f"override cell {key} outside the {kind.value} table domain")
        cells[key] = value
    label = kind.value + (f" [{order}]" if order is not None and kind.arity == 2 else "")
    return LiteralOpTable(kind, TIF, cells, name=label)


def table_from_grid(kind: OpKind, grid: str, name: str = "") -> LiteralOpTable:
    """Read a table from a whitespace grid whose first row and column are the domain."""
    rows = [r.split() for r in grid.strip().splitlines()]
    header = [Lit.parse(x) for x in rows[0]]
    cells: dict[tuple, Formula] = {}
    if kind.arity == 1:
        for x, v in zip(header, rows[1]):
            cells[(x,)] = parse_formula(v)
    else:
        for row in rows[1:]:
            x = Lit.parse(row[0])
            for y, v in zip(header, row[1:]):
                cells[(x, y)] = parse_formula(v)
    return LiteralOpTable(kind, tuple(header), cells, name=name)


NEG_TABLE = generate_table(OpKind.NEG)
AND_V1 = generate_table(OpKind.AND, PrevalenceOrder((I, F, T)))
AND_V2 = generate_table(OpKind.AND, PrevalenceOrder((F, I, T)))
AND_V3 = generate_table(OpKind.AND, PrevalenceOrder((F, T, I)))
OR_TABLE = generate_table(OpKind.OR, PrevalenceOrder((T, F, I)))
XOR_TABLE = generate_table(OpKind.XOR, PrevalenceOrder((T, F, I)))
SHEFFER_TABLE = generate_table(OpKind.SHEFFER, PrevalenceOrder((T, I, F)))
# I-cells of implication and equivalence are a stated preference, not a prevalence
IMPLIES_TABLE = generate_table(
    OpKind.IMPLIES,
    PrevalenceOrder((T, F, I)),
    {(T, I): I, (I, I): T, (F, I): T},
)
EQUIV_TABLE = generate_table(OpKind.EQUIV, PrevalenceOrder((I, F, T)), {(I, I): T})

AND_VERSIONS = {"v1": AND_V1, "v2": AND_V2, "v3": AND_V3}


def literal_apply(table: LiteralOpTable, x: Formula, y: Formula) -> Formula:
    return table(x, y)


def literal_negate(x: Formula) -> Formula:
    return NEG_TABLE(x)


# -- neutrosophic actions ----------------------------------------------------


class Action(enum.Enum):
    NEUT = "neut"
    ANTI = "anti"
    NON = "non"


_ACTIONS = {
    Action.NEUT: {T: I, I: I, F: I},
    Action.ANTI: {T: F, I: disj(T, F), F: T},
    Action.NON: {T: disj(I, F), I: disj(T, F), F: disj(T, I)},
}


def act(action: Action, p: Lit) -> Formula:
    try:
        return _ACTIONS[action][p]
    except KeyError:
        raise AlphabetError(f"{action.value} is defined on T, I, F only, not {p}") from None


# -- refined literal logic (two sub-truths, two sub-indeterminacies, two sub-falsehoods)

T1, T2, I1, I2, F1, F2 = (Lit(k, n) for k in "TIF" for n in (1, 2))
REFINED_SPACE = (T1, T2, I1, I2, F1, F2)
T12 = conj(T1, T2)

REFINED_NEG = table_from_grid(
    OpKind.NEG,
    """
    T1 T2 I1    I2    F1 F2
    F1 F2 T1|F1 T2|F2 T1 T2
    """,
    name="refined neg",
)

REFINED_AND = table_from_grid(
    OpKind.AND,
    """
    T1    T2    I1 I2 F1 F2
    T1 T1    T1&T2 I1 I2 F1 F2
    T2 T1&T2 T2    I1 I2 F1 F2
    I1 I1    I1    I1 I  F1 F2
    I2 I2    I2    I  I2 F1 F2
    F1 F1    F1    F1 F1 F1 F
    F2 F2    F2    F2 F2 F  F2
    """,
    name="refined and",
)

REFINED_OR = table_from_grid(
    OpKind.OR,
    """
    T1 T2 I1 I2 F1    F2
    T1 T1 T  T1 T1 T1    T1
    T2 T  T2 T2 T2 T2    T2
    I1 T1 T2 I1 I  F1    F2
    I2 T1 T2 I  I2 F1    F2
    F1 T1 T2 F1 F1 F1    F1|F2
    F2 T1 T2 F2 F2 F1|F2 F2
    """,
    name="refined or",
)

_REFINED_BINARY = {OpKind.AND: REFINED_AND, OpKind.OR: REFINED_OR}


def refined_negate(x: Lit) -> Formula:
    return REFINED_NEG(x)


def refined_apply(op: OpKind, x: Lit, y: Lit) -> Formula:
    try:
        table = _REFINED_BINARY[op]
    except KeyError:
        raise ValueError(f"no refined table for {op.value}") from None
    return table(x, y)


def closure(
    space: Iterable[Formula],
    ops: Iterable[LiteralOpTable],
    max_rounds: int = 64,
) -> frozenset[Formula]:
    """Smallest superset of ``space`` closed under the table operators.

    Each round applies every operator to every tuple of current members that
    lies in its table domain and adds the results; members outside a table's
    domain are left alone by that table.  Stops at the fixed point or after
    ``max_rounds`` rounds.
    """
    ops = list(ops)
    current = frozenset(space)
    for _ in range(max_rounds):
        new = set()
        for op in ops:
            members = [x for x in current if x in op.domain]
            if op.arity == 1:
                new.update(op.cells[(x,)] for x in members if (x,) in op.cells)
            else:
                for x in members:
                    for y in members:
                        out = op.get(x, y)
                        if out is not None:
                            new.add(out)
        grown = current | new
        if grown == current:
            break
        current = grown
    return current
