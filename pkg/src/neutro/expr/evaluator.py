"""Evaluate expression trees against an :class:`EvalConfig`.

Bare symbols stay literals, so ``I & F`` goes to the literal tables.  Once a
literal meets arithmetic it becomes a number: ``I`` an ``a + bI`` number,
``T``/``F`` quadruples, ``Ik`` refined numbers over the active
sub-indeterminacy table, ``Tj``/``Fk`` refined quadruples over the active
alphabet.  Mixed operands are promoted along
scalar < a+bI < quadruple < refined quadruple.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from functools import reduce
from typing import Any, Callable

from ..errors import NeutroError, UndefinedError
from ..fmt import fmt_real
from ..hyper import (
    BasisAlgebra,
    DualLike,
    LinguisticNumber,
    NComplex,
    NeutroInterval,
    Octonion,
    Quaternion,
    ScaledIndet,
    ling_validate,
    ni_contains,
    neutro_lift_mul,
    quat_unit,
)
from ..indeterminacy import (
    IndetInterval,
    NeutroNumber,
    RefinedNeutroNumber,
    decompose_real,
    law_sharp,
)
from ..literal import (
    EQUIV_TABLE,
    IMPLIES_TABLE,
    NEG_TABLE,
    REFINED_AND,
    REFINED_NEG,
    REFINED_OR,
    SHEFFER_TABLE,
    TIF,
    XOR_TABLE,
    Action,
    Formula,
    Lit,
    PrevalenceOrder,
    act,
)
from ..quadruple import QuadNumber, RefinedQuadNumber, absorb_all, check_suborder, nq_mul, rnq_mul
from ..tif import (
    Member,
    TifIntervalTriple,
    TifTriple,
    UnitInterval,
    contradiction_degree,
    mul_conjoin,
    neutro_implies,
    semigroup_star,
    tif_conjoin,
    tif_disjoin,
    tif_negate,
)
from .config import EvalConfig
from .nodes import Binary, Call, Coef, Interval, Node, Num, Sym, Tuple_, Unary


class EvalError(ValueError):
    """Evaluation failed; the message is meant for the user."""


@dataclass(frozen=True)
class RawInterval:
    lo: float
    hi: float

    def __str__(self):
        return f"[{fmt_real(self.lo)},{fmt_real(self.hi)}]"


@dataclass(frozen=True)
class Decomposition:
    number: NeutroNumber
    interval: IndetInterval

    def __str__(self):
        return f"{self.number}, I in {self.interval}"


@dataclass(frozen=True)
class Verdict:
    ok: bool
    detail: str

    def __str__(self):
        return self.detail


@dataclass(frozen=True)
class Value:
    kind: str
    payload: Any

    def __str__(self):
        p = self.payload
        if self.kind == "real":
            return fmt_real(p)
        return str(p)


def value_kind(x) -> str:
    kinds = [
        (bool, "verdict"),
        (numbers.Number, "real"),
        (Formula, "literal"),
        (NeutroNumber, "neutro"),
        (RefinedNeutroNumber, "refined-neutro"),
        (QuadNumber, "quad"),
        (RefinedQuadNumber, "refined-quad"),
        (TifTriple, "triple"),
        (TifIntervalTriple, "interval-triple"),
        (RawInterval, "interval"),
        (NComplex, "hypercomplex"),
        (DualLike, "dual"),
        (Quaternion, "quaternion"),
        (Octonion, "octonion"),
        (Member, "member"),
        (Decomposition, "decomposition"),
        (Verdict, "verdict"),
    ]
    for cls, name in kinds:
        if isinstance(x, cls):
            return name
    raise TypeError(f"no value kind for {type(x).__name__}")


def evaluate(node: Node, config: EvalConfig) -> Value:
    try:
        out = _Evaluator(config).eval(node)
    except EvalError:
        raise
    except (NeutroError, ValueError, TypeError, ZeroDivisionError, IndexError, KeyError, OverflowError) as exc:
        msg = exc.args[0] if exc.args and isinstance(exc.args[0], str) else str(exc)
        raise EvalError(msg) from exc
    return Value(value_kind(out), out)


def _is_scalar(x) -> bool:
    return isinstance(x, numbers.Number) and not isinstance(x, bool)


def _is_num(x) -> bool:
    return _is_scalar(x) or isinstance(
        x, (NeutroNumber, RefinedNeutroNumber, QuadNumber, RefinedQuadNumber, BasisAlgebra)
    )


_RANK = {NeutroNumber: 1, QuadNumber: 2, RefinedQuadNumber: 3}


class _Evaluator:
    def __init__(self, config: EvalConfig):
        self.cfg = config

    def eval(self, node: Node):
        method = getattr(self, "_eval_" + type(node).__name__)
        return method(node)

    # -- atoms
    def _eval_Num(self, node: Num):
        return node.value

    def _eval_Sym(self, node: Sym):
        name = node.name
        if name == "pi":
            return math.pi
        if name == "e":
            return math.e
        if name[0] in "TIF":
            return Lit.parse(name)
        if name[0] == "h":
            n = self.cfg.hyper_dim
            if n is None:
                raise EvalError(f"{name} needs a hypercomplex dimension; set it with :dim <n>")
            return NComplex.unit(n, int(name[1:]))
        if name[0] == "g":
            k = int(name[1:]) if len(name) > 1 else 1
            n = self.cfg.dual_n
            if not 1 <= k <= n:
                raise EvalError(f"{name} outside g1..g{n}; widen with :dual <family> <n>")
            coeffs = tuple(1 if m == k else 0 for m in range(n + 1))
            return DualLike(coeffs, self.cfg.dual)
        if name in ("i", "j", "k"):
            return quat_unit(name)
        if name[0] == "i":
            return Octonion.unit(int(name[1:]))
        raise EvalError(f"unknown symbol {name!r}")

    def _eval_Coef(self, node: Coef):
        return self.mul(node.value.value, self.as_number(self.eval(node.sym)))

    def _eval_Tuple_(self, node: Tuple_):
        items = [self.eval(a) for a in node.items]
        if len(items) != 3:
            raise EvalError(f"a truth value needs three components (t,i,f), got {len(items)}")
        if all(_is_scalar(x) for x in items):
            return TifTriple(*items)
        if all(_is_scalar(x) or isinstance(x, RawInterval) for x in items):
            parts = [UnitInterval(x, x) if _is_scalar(x) else UnitInterval(x.lo, x.hi) for x in items]
            return TifIntervalTriple(*parts)
        raise EvalError("triple components must be numbers or intervals")

    def _eval_Interval(self, node: Interval):
        lo, hi = self.eval(node.lo), self.eval(node.hi)
        if not (_is_scalar(lo) and _is_scalar(hi)):
            raise EvalError("interval bounds must be real numbers")
        if lo > hi:
            raise EvalError(f"interval bounds out of order: [{fmt_real(lo)},{fmt_real(hi)}]")
        return RawInterval(lo, hi)

    # -- numbers
    def as_number(self, x):
        if isinstance(x, Lit):
            return self.lit_number(x)
        if _is_num(x):
            return x
        raise EvalError(f"{value_kind(x)} value {x} is not a number")

    def lit_number(self, x: Lit):
        if x.index == 0:
            if x == Lit("I"):
                return NeutroNumber(0, 1)
            return QuadNumber.from_terms({x: 1})
        if x.kind == "I":
            table = self.cfg.table
            if x.index > table.arity:
                raise EvalError(f"{x} outside the active sub-indeterminacy table (r={table.arity})")
            return RefinedNeutroNumber.unit(x.index, table.arity, table)
        return RefinedQuadNumber.of(0, {x: 1}, self.cfg.refined_alphabet())

    def to_refined_quad(self, x):
        alphabet = self.cfg.refined_alphabet()
        if _is_scalar(x):
            return RefinedQuadNumber.of(x, {}, alphabet)
        if isinstance(x, NeutroNumber):
            terms = {Lit("I"): x.b} if x.b != 0 else {}
            return RefinedQuadNumber.of(x.a, terms, alphabet)
        if isinstance(x, QuadNumber):
            terms = {lit: c for lit, c in zip(TIF, (x.b, x.c, x.d)) if c != 0}
            return RefinedQuadNumber.of(x.a, terms, alphabet)
        return x

    def unify(self, x, y):
        x, y = self.as_number(x), self.as_number(y)
        if _is_scalar(x) or _is_scalar(y) or type(x) is type(y):
            return x, y
        rx, ry = _RANK.get(type(x)), _RANK.get(type(y))
        if rx is not None and ry is not None and all(self._scalar_coeffs(v) for v in (x, y)):
            target = max(rx, ry)
            return self._promote(x, target), self._promote(y, target)
        if isinstance(x, BasisAlgebra) and isinstance(y, NeutroNumber):
            return NeutroNumber(x, x * 0), y
        if isinstance(y, BasisAlgebra) and isinstance(x, NeutroNumber):
            return x, NeutroNumber(y, y * 0)
        raise EvalError(f"type mismatch: cannot combine {value_kind(x)} with {value_kind(y)}")

    @staticmethod
    def _scalar_coeffs(v) -> bool:
        return not isinstance(v, NeutroNumber) or (_is_scalar(v.a) and _is_scalar(v.b))

    def _promote(self, x, rank: int):
        if _RANK[type(x)] == rank:
            return x
        if rank == 2:
            return QuadNumber(x.a, 0, x.b, 0)
        return self.to_refined_quad(x)

    def coarse_order(self) -> PrevalenceOrder:
        order = self.cfg.order
        if order.covers(TIF):
            return PrevalenceOrder(tuple(x for x in order.chain if x in TIF))
        return check_suborder(order)

    def add(self, x, y):
        x, y = self.unify(x, y)
        return x + y

    def sub(self, x, y):
        x, y = self.unify(x, y)
        return x - y

    def mul(self, x, y):
        x, y = self.unify(x, y)
        if _is_scalar(x) or _is_scalar(y):
            return x * y
        if isinstance(x, QuadNumber):
            return nq_mul(self.coarse_order(), x, y)
        if isinstance(x, RefinedQuadNumber):
            return rnq_mul(self.cfg.order, x, y)
        if isinstance(x, NeutroNumber):
            return neutro_lift_mul(x, y)
        return x * y

    def div(self, x, y):
        x, y = self.as_number(x), self.as_number(y)
        if not _is_scalar(y):
            raise UndefinedError(f"undefined: division by the {value_kind(y)} {y}")
        if y == 0:
            raise UndefinedError("undefined: division by zero")
        if _is_scalar(x):
            return x / y
        return self.mul(x, 1 / y)

    # -- operators
    def _eval_Unary(self, node: Unary):
        x = self.eval(node.arg)
        op = node.op
        if op in ("neut", "anti", "non"):
            if not isinstance(x, Lit):
                raise EvalError(f"{op} applies to the literals T, I, F, not to a {value_kind(x)}")
            return act(Action(op), x)
        if op == "!":
            return self.negate(x)
        if op == "-":
            return -self.as_number(x)
        return self.as_number(x)

    def negate(self, x):
        if isinstance(x, Formula):
            refined = any(lit.index for lit in x.literals())
            return (REFINED_NEG if refined else NEG_TABLE)(x)
        if isinstance(x, (TifTriple, TifIntervalTriple)):
            return tif_negate(self.cfg.neg, x)
        raise EvalError(f"! applies to literals and truth values, not to a {value_kind(x)}")

    def _eval_Binary(self, node: Binary):
        op = node.op
        x, y = self.eval(node.left), self.eval(node.right)
        if op == "+":
            return self.add(x, y)
        if op == "-":
            return self.sub(x, y)
        if op == "*":
            if _triple(x) and _triple(y):
                return mul_conjoin(x, y)
            return self.mul(x, y)
        if op == "/":
            return self.div(x, y)
        return self.logic(op, x, y)

    def logic(self, op: str, x, y):
        if isinstance(x, Formula) and isinstance(y, Formula):
            return self.literal_logic(op, x, y)
        if _triple(x) and _triple(y):
            return self.triple_logic(op, x, y)
        raise EvalError(f"type mismatch: {op} needs two literals or two truth values, got {value_kind(x)} and {value_kind(y)}")

    def literal_logic(self, op: str, x: Formula, y: Formula):
        refined = any(lit.index for lit in x.literals() | y.literals())
        if refined:
            tables = {"&": REFINED_AND, "|": REFINED_OR}
            if op not in tables:
                raise EvalError(f"{op} has no table for refined literals")
            return tables[op](x, y)
        tables = {
            "&": self.cfg.literal_and,
            "|": self.cfg.literal_or,
            "^": XOR_TABLE,
            "nand": SHEFFER_TABLE,
            "->": IMPLIES_TABLE,
            "<->": EQUIV_TABLE,
        }
        return tables[op](x, y)

    def triple_logic(self, op: str, a, b):
        cfg = self.cfg
        if op == "&":
            return tif_conjoin(cfg.conj, a, b)
        if op == "|":
            return tif_disjoin(cfg.disj, a, b)
        if op == "->":
            return neutro_implies(cfg.impl, a, b)
        if op == "nand":
            return tif_negate(cfg.neg, tif_conjoin(cfg.conj, a, b))
        if op == "<->":
            return tif_conjoin(cfg.conj, neutro_implies(cfg.impl, a, b), neutro_implies(cfg.impl, b, a))
        raise EvalError(f"{op} is not defined on truth values")

    # -- calls
    def _eval_Call(self, node: Call):
        fn = FUNCTIONS.get(node.name)
        if fn is None:
            raise EvalError(f"unknown function {node.name!r}; known: {', '.join(sorted(FUNCTIONS))}")
        arity, impl = fn
        args = [self.eval(a) for a in node.args]
        lo, hi = arity
        if not lo <= len(args) <= hi:
            want = str(lo) if lo == hi else f"{lo} to {hi}"
            raise EvalError(f"{node.name} takes {want} argument(s), got {len(args)}")
        return impl(self, *args)


def _triple(x) -> bool:
    return isinstance(x, (TifTriple, TifIntervalTriple))


def _real(x, what="argument") -> float:
    if not _is_scalar(x) or isinstance(x, complex):
        raise EvalError(f"{what} must be a real number, got {value_kind(x)}")
    return x


def _truth(x) -> TifTriple:
    if not _triple(x):
        raise EvalError(f"expected a truth value (t,i,f), got {value_kind(x)}")
    return x


def _nonneg_int(x, what) -> int:
    if not isinstance(x, int) or isinstance(x, bool) or x < 0:
        raise EvalError(f"{what} must be a non-negative integer")
    return x


def _decompose(ev, x, digits=0, scale=1):
    number, interval = decompose_real(_real(x), _nonneg_int(digits, "digits"), _real(scale, "scale"))
    return Decomposition(number, interval)


def _member(ev, x, t):
    return Member(_real(x), _truth(t))


def _star(ev, *ms):
    for m in ms:
        if not isinstance(m, Member):
            raise EvalError("star combines members built with member(x, (t,i,f))")
    return reduce(semigroup_star, ms)


def _absorb(ev, *xs):
    for x in xs:
        if not isinstance(x, Lit):
            raise EvalError("absorb takes literals")
    return absorb_all(ev.cfg.order, xs)


def _sharp(ev, x, y):
    x, y = ev.as_number(x), ev.as_number(y)
    x = NeutroNumber(x, 0) if _is_scalar(x) else x
    y = NeutroNumber(y, 0) if _is_scalar(y) else y
    if not (isinstance(x, NeutroNumber) and isinstance(y, NeutroNumber)):
        raise EvalError("sharp takes two a+bI numbers")
    return law_sharp(x, y)


def _ling(ev, p, j, a, indet):
    if not isinstance(indet, RawInterval):
        raise EvalError("ling(p, j, a, [lo,hi]) needs an interval for I")
    v = ling_validate(LinguisticNumber(_nonneg_int(p, "p"), _nonneg_int(j, "j"), _real(a), (indet.lo, indet.hi)))
    lo, hi = v.span
    if v.valid:
        return Verdict(True, f"valid, j+aI spans [{fmt_real(lo)},{fmt_real(hi)}]")
    return Verdict(False, f"invalid: {v.reason}")


def _nicontains(ev, det, *rest):
    if len(rest) == 2:
        c, (indet, x) = 1, rest
    else:
        c, indet, x = rest
    if not (isinstance(det, RawInterval) and isinstance(indet, RawInterval)):
        raise EvalError("nicontains([a,b], [c,] [lo,hi], x) takes two intervals")
    right = ScaledIndet(_real(c), IndetInterval(indet.lo, indet.hi))
    verdict = ni_contains(NeutroInterval(det.lo, det.hi, right=right), _real(x))
    return Verdict(verdict.value != "outside", verdict.value)


def _math(f: Callable[[float], float]):
    return lambda ev, x: f(_real(x))


def _op(op):
    return lambda ev, x, y: ev.logic(op, x, y)


def _norm(ev, x):
    x = ev.as_number(x)
    if not isinstance(x, BasisAlgebra) and not _is_scalar(x):
        raise EvalError("norm takes a real or hypercomplex number")
    return abs(x)


FUNCTIONS: dict[str, tuple[tuple[int, int], Callable]] = {
    "sqrt": ((1, 1), _math(math.sqrt)),
    "cbrt": ((1, 1), _math(lambda x: math.copysign(abs(x) ** (1 / 3), x))),
    "exp": ((1, 1), _math(math.exp)),
    "decompose": ((1, 3), _decompose),
    "neg": ((1, 1), lambda ev, x: ev.negate(x)),
    "conj": ((2, 2), _op("&")),
    "disj": ((2, 2), _op("|")),
    "implies": ((2, 2), _op("->")),
    "d2": ((2, 2), lambda ev, a, b: contradiction_degree(_truth(a), _truth(b))),
    "mulconj": ((2, 2), lambda ev, a, b: mul_conjoin(_truth(a), _truth(b))),
    "member": ((2, 2), _member),
    "star": ((2, 64), _star),
    "absorb": ((1, 64), _absorb),
    "sharp": ((2, 2), _sharp),
    "ling": ((4, 4), _ling),
    "nicontains": ((3, 4), _nicontains),
    "norm": ((1, 1), _norm),
}
