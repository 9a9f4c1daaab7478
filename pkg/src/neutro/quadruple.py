"""Neutrosophic quadruple numbers ``a + bT + cI + dF`` and their refined form.

Products of literals follow the absorbance law: under a prevalence order the
stronger literal absorbs the weaker one, ``x*y = max(x, y)``.  The generic
term-by-term expansion in :func:`nq_mul` / :func:`rnq_mul` is the reference;
:func:`nq_mul_closed` holds the collected coefficient formulas for the two
orders ``T>I>F`` and ``F>I>T`` as an independent cross-check.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from functools import reduce
from typing import Any, Iterable, Mapping, Optional

from .errors import AlphabetError, SuborderViolation
from .fmt import fmt_combination
from .literal import TIF, F, I, Lit, PrevalenceOrder, T


def absorb(order: PrevalenceOrder, x: Lit, y: Lit) -> Lit:
    return order.prevail(x, y)


def absorb_all(order: PrevalenceOrder, xs: Iterable[Lit]) -> Lit:
    """Left fold of :func:`absorb`; equals the order-maximum of ``xs``."""
    return reduce(lambda p, q: absorb(order, p, q), xs)


def _expand(order: PrevalenceOrder, xs: Mapping, ys: Mapping) -> dict:
    """Distribute ``(sum xs)(sum ys)`` where key ``None`` is the scalar unit."""
    out: dict = {}
    for u, cu in xs.items():
        for v, cv in ys.items():
            if u is None:
                key = v
            elif v is None:
                key = u
            else:
                key = absorb(order, u, v)
            out[key] = out.get(key, 0) + cu * cv
    return out


@dataclass(frozen=True)
class QuadNumber:
    """Known part ``a`` plus unknown part ``bT + cI + dF``."""

    a: Any = 0
    b: Any = 0
    c: Any = 0
    d: Any = 0

    def terms(self) -> dict:
        return {None: self.a, T: self.b, I: self.c, F: self.d}

    @classmethod
    def from_terms(cls, terms: Mapping) -> "QuadNumber":
        extra = set(terms) - {None, T, I, F}
        if extra:
            raise AlphabetError(f"quadruple numbers have no {', '.join(map(str, extra))} part")
        return cls(terms.get(None, 0), terms.get(T, 0), terms.get(I, 0), terms.get(F, 0))

    def __iter__(self):
        return iter((self.a, self.b, self.c, self.d))

    def __add__(self, other):
        other = _as_quad(other)
        if other is NotImplemented:
            return NotImplemented
        return nq_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_quad(other)
        if other is NotImplemented:
            return NotImplemented
        return nq_sub(self, other)

    def __rsub__(self, other):
        other = _as_quad(other)
        if other is NotImplemented:
            return NotImplemented
        return nq_sub(other, self)

    def __neg__(self):
        return nq_scale(-1, self)

    def __mul__(self, alpha):
        if isinstance(alpha, numbers.Number):
            return nq_scale(alpha, self)
        return NotImplemented

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(x == 0 for x in self)

    def isclose(self, other: "QuadNumber", tol: float = 1e-12) -> bool:
        return all(abs(p - q) <= tol for p, q in zip(self, other))

    def __str__(self):
        return fmt_combination(self.a, [(self.b, "T"), (self.c, "I"), (self.d, "F")])


def _as_quad(x):
    if isinstance(x, QuadNumber):
        return x
    if isinstance(x, numbers.Number):
        return QuadNumber(x)
    return NotImplemented


def nq_add(x: QuadNumber, y: QuadNumber) -> QuadNumber:
    return QuadNumber(*(p + q for p, q in zip(x, y)))


def nq_sub(x: QuadNumber, y: QuadNumber) -> QuadNumber:
    return QuadNumber(*(p - q for p, q in zip(x, y)))


def nq_scale(alpha, x: QuadNumber) -> QuadNumber:
    return QuadNumber(*(alpha * p for p in x))


def nq_mul(order: PrevalenceOrder, x: QuadNumber, y: QuadNumber) -> QuadNumber:
    if not order.covers(TIF):
        raise AlphabetError(f"quadruple multiplication needs an order over T, I, F, got {order}")
    return QuadNumber.from_terms(_expand(order, x.terms(), y.terms()))


OPTIMISTIC = PrevalenceOrder((T, I, F))
PESSIMISTIC = PrevalenceOrder((F, I, T))


def nq_mul_closed(order: PrevalenceOrder, x: QuadNumber, y: QuadNumber) -> QuadNumber:
    """Collected coefficient formulas for ``T>I>F`` and ``F>I>T``.

    Under ``T>I>F`` the I coefficient carries the ``c1*c2`` term that
    ``I*I = I`` contributes.
    """
    a1, b1, c1, d1 = x
    a2, b2, c2, d2 = y
    if order == OPTIMISTIC:
        return QuadNumber(
            a1 * a2,
            a1 * b2 + a2 * b1 + b1 * b2 + b1 * c2 + c1 * b2 + b1 * d2 + d1 * b2,
            a1 * c2 + a2 * c1 + c1 * c2 + c1 * d2 + c2 * d1,
            a1 * d2 + a2 * d1 + d1 * d2,
        )
    if order == PESSIMISTIC:
        return QuadNumber(
            a1 * a2,
            a1 * b2 + a2 * b1 + b1 * b2,
            a1 * c2 + a2 * c1 + b1 * c2 + b2 * c1 + c1 * c2,
            a1 * d2 + a2 * d1 + b1 * d2 + b2 * d1 + c1 * d2 + c2 * d1 + d1 * d2,
        )
    raise ValueError(f"no closed form for order {order}")


# -- refined quadruples ------------------------------------------------------


def _canonical_alphabet(lits: Iterable[Lit]) -> tuple[Lit, ...]:
    return tuple(sorted(set(lits), key=lambda x: x.sort_key()))


def check_suborder(order: PrevalenceOrder, coarse: Optional[PrevalenceOrder] = None) -> PrevalenceOrder:
    """Return the coarse T/I/F order a refined order induces.

    Each kind must occupy one contiguous block of the chain (every Tj above
    every Ik above every Fl, or whatever the block order is); if ``coarse``
    is given the blocks must appear in its order.
    """
    kinds: list[str] = []
    for x in order.chain:
        if not kinds or kinds[-1] != x.kind:
            if x.kind in kinds:
                raise SuborderViolation(f"suborder violation: {x.kind}-literals are split in {order}")
            kinds.append(x.kind)
    induced = tuple(Lit(k) for k in kinds)
    if coarse is not None:
        expected = tuple(x for x in coarse.chain if x.kind in kinds)
        if tuple(Lit(x.kind) for x in expected) != induced:
            raise SuborderViolation(f"suborder violation: {order} is inconsistent with {coarse}")
    return PrevalenceOrder(induced)


@dataclass(frozen=True)
class RefinedQuadNumber:
    """``a + sum bj Tj + sum ck Ik + sum dl Fl`` over a fixed literal alphabet.

    ``alphabet`` is kept in canonical order (T's, then I's, then F's, by index)
    and ``coeffs`` is aligned with it.
    """

    a: Any
    alphabet: tuple[Lit, ...]
    coeffs: tuple

    def __post_init__(self):
        alpha = tuple(self.alphabet)
        if _canonical_alphabet(alpha) != alpha:
            raise ValueError("alphabet must be canonical; build with RefinedQuadNumber.of")
        if len(self.coeffs) != len(alpha):
            raise ValueError("one coefficient per alphabet literal")
        object.__setattr__(self, "alphabet", alpha)
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @classmethod
    def of(cls, a, terms: Mapping[Lit, Any], alphabet: Iterable[Lit]) -> "RefinedQuadNumber":
        alpha = _canonical_alphabet(alphabet)
        unknown = set(terms) - set(alpha)
        if unknown:
            raise AlphabetError(f"{', '.join(sorted(map(str, unknown)))} not in alphabet")
        return cls(a, alpha, tuple(terms.get(x, 0) for x in alpha))

    def terms(self) -> dict:
        out = {None: self.a}
        out.update(zip(self.alphabet, self.coeffs))
        return out

    def coef(self, x: Lit):
        return dict(zip(self.alphabet, self.coeffs))[x]

    def _same(self, other: "RefinedQuadNumber"):
        if self.alphabet != other.alphabet:
            raise AlphabetError("alphabet mismatch between refined quadruples")

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return rnq_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return rnq_sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return rnq_sub(other, self)

    def __neg__(self):
        return rnq_scale(-1, self)

    def __mul__(self, alpha):
        if isinstance(alpha, numbers.Number):
            return rnq_scale(alpha, self)
        return NotImplemented

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, RefinedQuadNumber):
            return other
        if isinstance(other, numbers.Number):
            return RefinedQuadNumber(other, self.alphabet, (0,) * len(self.alphabet))
        return NotImplemented

    def is_zero(self) -> bool:
        return self.a == 0 and all(c == 0 for c in self.coeffs)

    def __str__(self):
        return fmt_combination(self.a, [(c, str(x)) for x, c in zip(self.alphabet, self.coeffs)])


def rnq_add(x: RefinedQuadNumber, y: RefinedQuadNumber) -> RefinedQuadNumber:
    x._same(y)
    return RefinedQuadNumber(x.a + y.a, x.alphabet, tuple(p + q for p, q in zip(x.coeffs, y.coeffs)))


def rnq_sub(x: RefinedQuadNumber, y: RefinedQuadNumber) -> RefinedQuadNumber:
    x._same(y)
    return RefinedQuadNumber(x.a - y.a, x.alphabet, tuple(p - q for p, q in zip(x.coeffs, y.coeffs)))


def rnq_scale(alpha, x: RefinedQuadNumber) -> RefinedQuadNumber:
    return RefinedQuadNumber(alpha * x.a, x.alphabet, tuple(alpha * c for c in x.coeffs))


def rnq_mul(
    order: PrevalenceOrder,
    x: RefinedQuadNumber,
    y: RefinedQuadNumber,
    coarse: Optional[PrevalenceOrder] = None,
) -> RefinedQuadNumber:
    x._same(y)
    if not order.covers(x.alphabet):
        missing = set(x.alphabet) - order.alphabet
        raise AlphabetError(f"order {order} does not rank {', '.join(sorted(map(str, missing)))}")
    check_suborder(order, coarse)
    out = _expand(order, x.terms(), y.terms())
    a = out.pop(None, 0)
    return RefinedQuadNumber.of(a, out, x.alphabet)


def refined_order(coarse: PrevalenceOrder, alphabet: Iterable[Lit]) -> PrevalenceOrder:
    """Refine a coarse T/I/F order, ranking literals of one kind by ascending index."""
    alpha = _canonical_alphabet(alphabet)
    rank = {x.kind: n for n, x in enumerate(coarse.chain)}
    missing = {x.kind for x in alpha} - set(rank)
    if missing:
        raise AlphabetError(f"coarse order {coarse} does not rank {', '.join(sorted(missing))}")
    return PrevalenceOrder(tuple(sorted(alpha, key=lambda x: (rank[x.kind], x.index))))


__all__ = [
    "OPTIMISTIC",
    "PESSIMISTIC",
    "QuadNumber",
    "RefinedQuadNumber",
    "absorb",
    "absorb_all",
    "check_suborder",
    "nq_add",
    "nq_mul",
    "nq_mul_closed",
    "nq_scale",
    "nq_sub",
    "refined_order",
    "rnq_add",
    "rnq_mul",
    "rnq_scale",
    "rnq_sub",
]
