"""Neutrosophic numbers ``a + bI`` and refined numbers ``a + b1 I1 + ... + br Ir``.

Literal indeterminacy obeys ``I*I = I``.  Once I is refined, how two
sub-indeterminacies multiply is a property of the problem, so refined numbers
always carry a :class:`SubIndTable`.  :data:`VENN_TABLE` is the preset
obtained by reading six sub-indeterminacies as regions of the two-set
{T, F} Venn diagram and multiplying by intersection.
"""

from __future__ import annotations

import enum
import math
import numbers
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence

from ._ring import RingElement
from .errors import IndeterminateLawError, UndefinedError
from .fmt import fmt_combination, fmt_real
from .literal import And, F, Formula, Lit, Not, Or, T, conj, disj, neg


def _is_scalar(x) -> bool:
    return isinstance(x, numbers.Number)


def _zero_like(x):
    return 0 if _is_scalar(x) else x * 0


@dataclass(frozen=True)
class NeutroNumber:
    """``a + bI`` with ``I*I = I``.

    ``a`` and ``b`` are usually real or complex, but any ring element with
    ``+``, ``-`` and ``*`` works (quaternions, dual numbers, ...), which is how
    the hypercomplex families get their neutrosophic form.
    """

    a: Any = 0
    b: Any = 0

    def __add__(self, other):
        other = _as_nn(other)
        if other is NotImplemented:
            return NotImplemented
        return NeutroNumber(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return NeutroNumber(-self.a, -self.b)

    def __sub__(self, other):
        other = _as_nn(other)
        if other is NotImplemented:
            return NotImplemented
        return NeutroNumber(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = _as_nn(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_nn(other)
        if other is NotImplemented:
            return NotImplemented
        return nn_mul(self, other)

    def __rmul__(self, other):
        other = _as_nn(other)
        if other is NotImplemented:
            return NotImplemented
        return nn_mul(other, self)

    def __truediv__(self, other):
        if _is_scalar(other) and other != 0:
            return NeutroNumber(self.a / other, self.b / other)
        raise UndefinedError("undefined: division by an indeterminate or zero quantity (I/I is undefined)")

    def __rtruediv__(self, other):
        raise UndefinedError("undefined: division by an indeterminate quantity (I/I is undefined)")

    def is_zero(self) -> bool:
        return _coef_zero(self.a) and _coef_zero(self.b)

    def isclose(self, other: "NeutroNumber", tol: float = 1e-12) -> bool:
        return abs(self.a - other.a) <= tol and abs(self.b - other.b) <= tol

    def __str__(self):
        return fmt_combination(self.a, [(self.b, "I")])


def _coef_zero(c) -> bool:
    return c == 0 if _is_scalar(c) else c.is_zero()


def _as_nn(x):
    if isinstance(x, NeutroNumber):
        return x
    if _is_scalar(x) or isinstance(x, RingElement):
        return NeutroNumber(x, _zero_like(x))
    return NotImplemented


def nn_add(x: NeutroNumber, y: NeutroNumber) -> NeutroNumber:
    return x + y


def nn_sub(x: NeutroNumber, y: NeutroNumber) -> NeutroNumber:
    return x - y


def nn_scale(alpha, x: NeutroNumber) -> NeutroNumber:
    return NeutroNumber(alpha * x.a, alpha * x.b)


def nn_mul(x: NeutroNumber, y: NeutroNumber) -> NeutroNumber:
    """``(a1 + b1 I)(a2 + b2 I) = a1 a2 + (a1 b2 + b1 a2 + b1 b2) I``.

    Factor order is kept so non-commutative coefficient rings stay correct.
    """
    return NeutroNumber(x.a * y.a, x.a * y.b + x.b * y.a + x.b * y.b)


def law_sharp(x: NeutroNumber, y: NeutroNumber) -> NeutroNumber:
    """The partial law ``(x1 + x2 I) # (y1 + y2 I) = (x1 + x2)/y1 + y2 I`` on [0,1] coefficients."""
    for c in (x.a, x.b, y.a, y.b):
        if not 0 <= c <= 1:
            raise ValueError(f"law # is defined for coefficients in [0, 1], got {c}")
    if y.a == 0:
        raise IndeterminateLawError("indeterminate law: # is undefined when y1 = 0")
    return NeutroNumber((x.a + x.b) / y.a, y.b)


# -- sub-indeterminacy tables ------------------------------------------------


@dataclass(frozen=True)
class SubIndTable:
    """Total multiplication map on sub-indeterminacy indices 1..r.

    ``cells[j-1][k-1]`` is the index m with ``Ij * Ik = Im``.
    """

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cells = tuple(tuple(int(c) for c in row) for row in self.cells)
        r = len(cells)
        if r < 1 or any(len(row) != r for row in cells):
            raise ValueError("sub-indeterminacy table must be square")
        if any(not 1 <= c <= r for row in cells for c in row):
            raise ValueError(f"table entries must be indices in 1..{r}")
        object.__setattr__(self, "cells", cells)

    @property
    def arity(self) -> int:
        return len(self.cells)

    def mul(self, j: int, k: int) -> int:
        if not (1 <= j <= self.arity and 1 <= k <= self.arity):
            raise IndexError(f"sub-indeterminacy index outside 1..{self.arity}")
        return self.cells[j - 1][k - 1]

    def _indices(self):
        return range(1, self.arity + 1)

    def is_commutative(self) -> bool:
        r = self._indices()
        return all(self.mul(j, k) == self.mul(k, j) for j in r for k in r)

    def is_associative(self) -> bool:
        r = self._indices()
        return all(
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)) for a in r for b in r for c in r
        )

    def is_idempotent(self) -> bool:
        return all(self.mul(j, j) == j for j in self._indices())

    def to_text(self) -> str:
        lines = [f"subind r={self.arity}"]
        for j in self._indices():
            for k in self._indices():
                lines.append(f"I{j} I{k} -> I{self.mul(j, k)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SubIndTable":
        """Parse the ``subind r=<r>`` format; ``#`` starts a comment."""
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines:
            raise ValueError("empty sub-indeterminacy table file")
        m = re.fullmatch(r"subind\s+r\s*=\s*(\d+)", lines[0])
        if not m:
            raise ValueError(f"expected header 'subind r=<r>', got {lines[0]!r}")
        r = int(m.group(1))
        grid: dict[tuple[int, int], int] = {}
        for ln in lines[1:]:
            m = re.fullmatch(r"I(\d+)\s+I(\d+)\s*->\s*I(\d+)", ln)
            if not m:
                raise ValueError(f"bad table line {ln!r}")
            j, k, v = map(int, m.groups())
            if (j, k) in grid:
                raise ValueError(f"duplicate cell I{j} I{k}")
            grid[(j, k)] = v
        missing = [(j, k) for j in range(1, r + 1) for k in range(1, r + 1) if (j, k) not in grid]
        if missing or len(grid) != r * r:
            raise ValueError(f"table needs exactly {r * r} cells; missing {missing[:3]}")
        return cls(tuple(tuple(grid[(j, k)] for k in range(1, r + 1)) for j in range(1, r + 1)))

    def render(self) -> str:
        head = "*   " + " ".join(f"I{k:<2}" for k in self._indices())
        rows = [f"I{j:<2} " + " ".join(f"I{self.mul(j, k):<2}" for k in self._indices()) for j in self._indices()]
        return "\n".join([head] + rows)


IDEMPOTENT_1 = SubIndTable(((1,),))


# -- Venn-region semantics ---------------------------------------------------


class VennAtom(enum.Enum):
    """The four disjoint regions of the {T, F} Venn diagram."""

    T_AND_F = "T&F"
    T_AND_NOT_F = "T&!F"
    NOT_T_AND_F = "!T&F"
    NOT_T_AND_NOT_F = "!T&!F"

    @property
    def assignment(self) -> dict[Lit, bool]:
        t, f = {
            VennAtom.T_AND_F: (True, True),
            VennAtom.T_AND_NOT_F: (True, False),
            VennAtom.NOT_T_AND_F: (False, True),
            VennAtom.NOT_T_AND_NOT_F: (False, False),
        }[self]
        return {T: t, F: f}


VennRegionSet = frozenset  # of VennAtom


def _holds(formula: Formula, env: dict[Lit, bool]) -> bool:
    if isinstance(formula, Lit):
        if formula not in env:
            raise ValueError(f"Venn formulas use only the atoms T and F, not {formula}")
        return env[formula]
    if isinstance(formula, Not):
        return not _holds(formula.arg, env)
    if isinstance(formula, And):
        return all(_holds(a, env) for a in formula.args)
    if isinstance(formula, Or):
        return any(_holds(a, env) for a in formula.args)
    raise TypeError(formula)


def venn_region_set(formula: Formula) -> frozenset[VennAtom]:
    """Atoms of the {T, F} Venn diagram on which ``formula`` holds."""
    return frozenset(a for a in VennAtom if _holds(formula, a.assignment))


def _xor(x: Formula, y: Formula) -> Formula:
    return disj(conj(x, neg(y)), conj(neg(x), y))


VENN_DEFS: tuple[Formula, ...] = (
    conj(T, F),  # I1 contradiction
    disj(T, F),  # I2 uncertainty
    _xor(T, F),  # I3 unsureness
    conj(neg(T), neg(F)),  # I4 nihilness
    disj(neg(T), neg(F)),  # I5 vagueness
    conj(neg(T), T),  # I6 emptiness
)


def derive_subind_table(defs: Sequence[Formula]) -> SubIndTable:
    """Multiplication table whose cell (j, k) is the member whose regions are regions(Ij) & regions(Ik)."""
    regions = [venn_region_set(d) for d in defs]
    index_of: dict[frozenset, int] = {}
    for n, reg in enumerate(regions, start=1):
        index_of.setdefault(reg, n)
    cells = []
    for rj in regions:
        row = []
        for rk in regions:
            meet = rj & rk
            if meet not in index_of:
                raise ValueError("family not intersection-closed")
            row.append(index_of[meet])
        cells.append(tuple(row))
    return SubIndTable(tuple(cells))


VENN_TABLE = SubIndTable(
    (
        (1, 1, 6, 6, 6, 6),
        (1, 2, 3, 6, 3, 6),
        (6, 3, 3, 6, 3, 6),
        (6, 6, 6, 4, 4, 6),
        (6, 3, 3, 4, 5, 6),
        (6, 6, 6, 6, 6, 6),
    )
)


# -- refined numbers ---------------------------------------------------------


@dataclass(frozen=True)
class RefinedNeutroNumber:
    """``a + b1 I1 + ... + br Ir`` with products of sub-indeterminacies looked up in ``table``.

    ``table`` may be omitted for numbers that are only added or scaled.
    """

    a: Any
    coeffs: tuple
    table: Optional[SubIndTable] = None

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.table is not None and self.table.arity != len(self.coeffs):
            raise ValueError(f"{len(self.coeffs)} coefficients but table arity {self.table.arity}")

    @property
    def arity(self) -> int:
        return len(self.coeffs)

    @classmethod
    def unit(cls, k: int, arity: int, table: Optional[SubIndTable] = None) -> "RefinedNeutroNumber":
        return cls(0, tuple(1 if n == k else 0 for n in range(1, arity + 1)), table)

    def _check(self, other: "RefinedNeutroNumber"):
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")
        if self.table is not None and other.table is not None and self.table != other.table:
            raise ValueError("operands use different sub-indeterminacy tables")
        return self.table if self.table is not None else other.table

    def _coerce(self, other):
        if isinstance(other, RefinedNeutroNumber):
            return other
        if _is_scalar(other) or isinstance(other, RingElement):
            return RefinedNeutroNumber(other, (_zero_like(other),) * self.arity, self.table)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return rn_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return rn_sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return rn_sub(other, self)

    def __neg__(self):
        return rn_scale(-1, self)

    def __mul__(self, other):
        if _is_scalar(other):
            return rn_scale(other, self)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return rn_mul(self, other)

    def __rmul__(self, other):
        if _is_scalar(other):
            return rn_scale(other, self)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return rn_mul(other, self)

    def __truediv__(self, other):
        if _is_scalar(other) and other != 0:
            return rn_scale(1 / other, self)
        raise UndefinedError("undefined: division by an indeterminate or zero quantity (Ik/Ik is undefined)")

    def is_zero(self) -> bool:
        return _coef_zero(self.a) and all(_coef_zero(c) for c in self.coeffs)

    def isclose(self, other: "RefinedNeutroNumber", tol: float = 1e-12) -> bool:
        return (
            self.arity == other.arity
            and abs(self.a - other.a) <= tol
            and all(abs(p - q) <= tol for p, q in zip(self.coeffs, other.coeffs))
        )

    def __eq__(self, other):
        if not isinstance(other, RefinedNeutroNumber):
            return NotImplemented
        return self.a == other.a and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.a, self.coeffs))

    def __str__(self):
        return fmt_combination(self.a, [(c, f"I{k}") for k, c in enumerate(self.coeffs, start=1)])


def rn_add(x: RefinedNeutroNumber, y: RefinedNeutroNumber) -> RefinedNeutroNumber:
    table = x._check(y)
    return RefinedNeutroNumber(x.a + y.a, tuple(p + q for p, q in zip(x.coeffs, y.coeffs)), table)


def rn_sub(x: RefinedNeutroNumber, y: RefinedNeutroNumber) -> RefinedNeutroNumber:
    table = x._check(y)
    return RefinedNeutroNumber(x.a - y.a, tuple(p - q for p, q in zip(x.coeffs, y.coeffs)), table)


def rn_scale(alpha, x: RefinedNeutroNumber) -> RefinedNeutroNumber:
    return RefinedNeutroNumber(alpha * x.a, tuple(alpha * c for c in x.coeffs), x.table)


def rn_mul(x: RefinedNeutroNumber, y: RefinedNeutroNumber) -> RefinedNeutroNumber:
    """Distribute the product; each ``Ij * Ik`` is resolved through the table."""
    table = x._check(y)
    if table is None:
        raise ValueError("refined multiplication needs a sub-indeterminacy table")
    a0, b0 = x.a, y.a
    out = [a0 * bk + ak * b0 for ak, bk in zip(x.coeffs, y.coeffs)]
    for j, aj in enumerate(x.coeffs, start=1):
        if _coef_zero(aj):
            continue
        for k, bk in enumerate(y.coeffs, start=1):
            out[table.mul(j, k) - 1] = out[table.mul(j, k) - 1] + aj * bk
    return RefinedNeutroNumber(a0 * b0, tuple(out), table)


def neutro_complex(a, b, c, d, table: Optional[SubIndTable] = None) -> RefinedNeutroNumber:
    """``(a + b I1) + (c + d I2) i`` as a refined number over {I1, I2} with complex coefficients."""
    return RefinedNeutroNumber(complex(a, c), (complex(b), complex(0, d)), table)


# -- decomposition of reals --------------------------------------------------


@dataclass(frozen=True)
class IndetInterval:
    """Open real interval ``(lo, hi)`` known to contain the value of I."""

    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty open interval ({self.lo}, {self.hi})")

    def contains(self, x) -> bool:
        return self.lo < x < self.hi

    def __str__(self):
        return f"({fmt_real(self.lo)},{fmt_real(self.hi)})"


def _decade(q: Fraction) -> int:
    """Integer m with 10**m <= q < 10**(m+1), for q > 0."""
    m = math.floor(math.log10(q))
    while Fraction(10) ** m > q:
        m -= 1
    while Fraction(10) ** (m + 1) <= q:
        m += 1
    return m


def decompose_real(x: float, determinate_digits: int = 0, scale: float = 1) -> tuple[NeutroNumber, IndetInterval]:
    """Split a real into a truncated determinate part and a bracketed indeterminate part.

    Returns ``a + scale*I`` with ``a`` truncated toward -inf to
    ``determinate_digits`` decimals, and an open interval for I on a decimal
    grid one digit finer than ``scale`` resolves, widened outward so that
    ``a + scale*lo <= x <= a + scale*hi`` always holds.
    """
    if not scale > 0:
        raise ValueError("scale must be positive")
    if determinate_digits < 0:
        raise ValueError("determinate_digits must be >= 0")
    xq, sq = Fraction(x), Fraction(scale)
    unit = Fraction(1, 10**determinate_digits)
    a = math.floor(xq / unit) * unit
    rest = (xq - a) / sq
    grid_digits = determinate_digits + 1 + _decade(sq)
    step = Fraction(1, 10**grid_digits) if grid_digits >= 0 else Fraction(10 ** (-grid_digits))
    lo_k = math.floor(rest / step)
    hi_k = math.ceil(rest / step)
    if hi_k == lo_k:
        hi_k += 1
    lo, hi = lo_k * step, hi_k * step
    nd = max(grid_digits, 0)
    return (
        NeutroNumber(float(a) if determinate_digits else int(a), scale),
        IndetInterval(round(float(lo), nd), round(float(hi), nd)),
    )


def decompose_combination(
    constant, terms: Sequence[tuple[Any, float]], determinate_digits: int = 0
) -> tuple[RefinedNeutroNumber, tuple[IndetInterval, ...]]:
    """Decompose ``constant + sum(coef_k * x_k)`` giving each ``x_k`` its own ``I_k``.

    Each ``x_k`` becomes ``a_k + I_k`` via :func:`decompose_real`, so the
    result is ``(constant + sum coef_k a_k) + sum coef_k I_k`` together with
    the interval bracketing every ``I_k``.
    """
    a = constant
    coeffs, intervals = [], []
    for coef, x in terms:
        part, interval = decompose_real(x, determinate_digits)
        a = a + coef * part.a
        coeffs.append(coef * part.b)
        intervals.append(interval)
    return RefinedNeutroNumber(a, tuple(coeffs)), tuple(intervals)
