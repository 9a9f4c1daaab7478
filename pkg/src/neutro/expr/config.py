"""Evaluator configuration, its text specs, and the colon-command interpreter."""

from __future__ import annotations

import hashlib
import os
import re
from dataclasses import dataclass, field, replace
from typing import Optional

from ..hyper import DualFamily
from ..indeterminacy import VENN_TABLE, SubIndTable
from ..literal import (
    AND_V1,
    AND_VERSIONS,
    OR_TABLE,
    Lit,
    LiteralOpTable,
    OpKind,
    PrevalenceOrder,
    generate_table,
)
from ..tif import (
    IF_IMPLICATION,
    MAX_MIN_MIN,
    MIN_MAX_MAX,
    NEG_OR_DEFAULT,
    ConjShape,
    ConjVariant,
    DisjShape,
    DisjVariant,
    FuzzyConormKind,
    FuzzyImplKind,
    FuzzyNormKind,
    ImplClass,
    NegVariant,
    NeutroImplication,
)
from .tablefile import load_order, load_subind


class ConfigError(ValueError):
    """A colon command or flag with a value the evaluator cannot use."""


DEFAULT_ORDER = PrevalenceOrder.parse("T>I>F")

# short names accepted wherever a conjunction or disjunction is configured
CONJ_ALIASES = {"minmaxmax": MIN_MAX_MAX, "minminmax": ConjVariant(ConjShape.NORM_NORM_CONORM)}
DISJ_ALIASES = {"maxminmin": MAX_MIN_MIN, "maxmaxmin": DisjVariant(DisjShape.CONORM_CONORM_NORM)}


def _enum(enum_cls, text: str, what: str):
    for member in enum_cls:
        if member.value == text or member.name.lower() == text.lower():
            return member
    choices = ", ".join(m.value for m in enum_cls)
    raise ConfigError(f"unknown {what} {text!r}; choose from {choices}")


def parse_conj(text: str) -> ConjVariant:
    """``shape[:norm[:conorm]]`` such as ``norm-mean-conorm:product:probsum``, or an alias."""
    if text in CONJ_ALIASES:
        return CONJ_ALIASES[text]
    parts = text.split(":")
    if len(parts) > 3:
        raise ConfigError(f"bad conjunction setting {text!r}")
    shape = _enum(ConjShape, parts[0], "conjunction shape")
    norm = _enum(FuzzyNormKind, parts[1], "t-norm") if len(parts) > 1 else FuzzyNormKind.MIN
    conorm = _enum(FuzzyConormKind, parts[2], "t-conorm") if len(parts) > 2 else FuzzyConormKind.MAX
    return ConjVariant(shape, norm, conorm)


def parse_disj(text: str) -> DisjVariant:
    if text in DISJ_ALIASES:
        return DISJ_ALIASES[text]
    parts = text.split(":")
    if len(parts) > 3:
        raise ConfigError(f"bad disjunction setting {text!r}")
    shape = _enum(DisjShape, parts[0], "disjunction shape")
    norm = _enum(FuzzyNormKind, parts[1], "t-norm") if len(parts) > 1 else FuzzyNormKind.MIN
    conorm = _enum(FuzzyConormKind, parts[2], "t-conorm") if len(parts) > 2 else FuzzyConormKind.MAX
    return DisjVariant(shape, norm, conorm)


def parse_impl(text: str) -> NeutroImplication:
    """``negor[:neg[:disj]]`` or ``in1..in4[:t-impl[:norm[:conorm]]]``.

    The t-implication is a fuzzy implication name or ``if`` for the
    intuitionistic-fuzzy one.
    """
    parts = text.split(":")
    klass = _enum(ImplClass, parts[0], "implication class")
    if klass is ImplClass.NEG_OR:
        neg = _enum(NegVariant, parts[1], "negation") if len(parts) > 1 else NegVariant.SWAP_TF
        disj = parse_disj(":".join(parts[2:])) if len(parts) > 2 else MAX_MIN_MIN
        return NeutroImplication(klass, neg=neg, disj=disj)
    if len(parts) > 4:
        raise ConfigError(f"bad implication setting {text!r}")
    t_impl = FuzzyImplKind.FODOR
    if len(parts) > 1:
        t_impl = IF_IMPLICATION if parts[1] == IF_IMPLICATION else _enum(FuzzyImplKind, parts[1], "fuzzy implication")
    norm = _enum(FuzzyNormKind, parts[2], "t-norm") if len(parts) > 2 else FuzzyNormKind.MIN
    conorm = _enum(FuzzyConormKind, parts[3], "t-conorm") if len(parts) > 3 else FuzzyConormKind.MAX
    return NeutroImplication(klass, t_impl, norm, conorm)


def parse_order(text: str) -> PrevalenceOrder:
    """A chain such as ``T1>T2>I>F`` or the path of a one-line order file."""
    text = text.strip()
    try:
        if os.path.isfile(text):
            return load_order(text)
        return PrevalenceOrder.parse(text)
    except (ValueError, OSError) as exc:
        raise ConfigError(f"bad order {text!r}: {exc}") from exc


def parse_alphabet(text: str) -> tuple[Lit, ...]:
    try:
        return tuple(Lit.parse(p) for p in re.split(r"[\s,]+", text.strip()) if p)
    except ValueError as exc:
        raise ConfigError(f"bad alphabet {text!r}: {exc}") from exc


@dataclass(frozen=True)
class EvalConfig:
    order: PrevalenceOrder = DEFAULT_ORDER
    literal_and: LiteralOpTable = AND_V1
    literal_and_name: str = "v1"
    literal_or: LiteralOpTable = OR_TABLE
    literal_or_name: str = "T>F>I"
    conj: ConjVariant = MIN_MAX_MAX
    disj: DisjVariant = MAX_MIN_MIN
    neg: NegVariant = NegVariant.SWAP_TF
    impl: NeutroImplication = NEG_OR_DEFAULT
    table: SubIndTable = VENN_TABLE
    table_name: str = "venn"
    alphabet: Optional[tuple[Lit, ...]] = None
    dual: DualFamily = DualFamily.NILPOTENT
    dual_n: int = 1
    hyper_dim: Optional[int] = None

    def refined_alphabet(self) -> tuple[Lit, ...]:
        return self.alphabet if self.alphabet is not None else self.order.chain

    def describe(self) -> str:
        alpha = " ".join(map(str, self.alphabet)) if self.alphabet is not None else "(from order)"
        rows = [
            ("order", str(self.order)),
            ("literal and", self.literal_and_name),
            ("literal or", self.literal_or_name),
            ("conj", str(self.conj)),
            ("disj", str(self.disj)),
            ("neg", self.neg.value),
            ("impl", str(self.impl)),
            ("table", f"{self.table_name} (r={self.table.arity})"),
            ("alphabet", alpha),
            ("dual", f"{self.dual.name.lower()} n={self.dual_n}"),
            ("dim", str(self.hyper_dim) if self.hyper_dim else "unset"),
        ]
        return "\n".join(f"{k:<12}{v}" for k, v in rows)

    def fingerprint(self) -> str:
        text = self.describe() + "\n" + self.table.to_text()
        return hashlib.sha256(text.encode()).hexdigest()[:12]


def apply_setting(config: EvalConfig, key: str, arg: str) -> EvalConfig:
    """Return ``config`` with one setting changed; raises :class:`ConfigError`."""
    arg = arg.strip()
    if not arg:
        raise ConfigError(f":{key} needs an argument")
    if key == "order":
        return replace(config, order=parse_order(arg))
    if key == "conj":
        if arg in AND_VERSIONS:
            return replace(config, literal_and=AND_VERSIONS[arg], literal_and_name=arg)
        if ">" in arg:
            order = parse_order(arg)
            return replace(config, literal_and=_literal_table(OpKind.AND, order), literal_and_name=str(order))
        return replace(config, conj=parse_conj(arg))
    if key == "disj":
        if ">" in arg:
            order = parse_order(arg)
            return replace(config, literal_or=_literal_table(OpKind.OR, order), literal_or_name=str(order))
        return replace(config, disj=parse_disj(arg))
    if key == "neg":
        return replace(config, neg=_enum(NegVariant, arg, "negation"))
    if key == "impl":
        return replace(config, impl=parse_impl(arg))
    if key == "table":
        if arg == "venn":
            return replace(config, table=VENN_TABLE, table_name="venn")
        try:
            return replace(config, table=load_subind(arg), table_name=arg)
        except (OSError, ValueError) as exc:
            raise ConfigError(f"cannot load table {arg!r}: {exc}") from exc
    if key == "alphabet":
        if arg == "auto":
            return replace(config, alphabet=None)
        return replace(config, alphabet=parse_alphabet(arg))
    if key == "dual":
        bits = arg.split()
        try:
            family = DualFamily.parse(bits[0])
        except KeyError:
            raise ConfigError(f"unknown dual family {bits[0]!r}") from None
        n = _positive_int(bits[1], "dual dimension") if len(bits) > 1 else 1
        return replace(config, dual=family, dual_n=n)
    if key == "dim":
        n = _positive_int(arg, "dimension")
        if n < 2:
            raise ConfigError("hypercomplex dimension must be at least 2")
        return replace(config, hyper_dim=n)
    raise ConfigError(f"unknown setting :{key}")


def _positive_int(text: str, what: str) -> int:
    if not re.fullmatch(r"\d+", text) or int(text) < 1:
        raise ConfigError(f"{what} must be a positive integer, got {text!r}")
    return int(text)


def _literal_table(kind: OpKind, order: PrevalenceOrder) -> LiteralOpTable:
    try:
        return generate_table(kind, order)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
