"""Hypercomplex families, their neutrosophic lift, neutrosophic intervals and linguistic numbers."""

from __future__ import annotations

import enum
import itertools
import math
import numbers
from dataclasses import dataclass
from typing import Any, Optional, Sequence

from ._ring import RingElement
from .errors import FamilyMismatch
from .fmt import fmt_combination, fmt_real
from .indeterminacy import IndetInterval, NeutroNumber, nn_mul


@dataclass(frozen=True)
class BasisAlgebra(RingElement):
    """A real algebra with a finite basis ``e0 = 1, e1, ..., e_{n-1}``.

    Subclasses provide :meth:`unit_product` returning ``(coef, index)`` with
    ``e_j e_k = coef * e_index``; multiplication is its bilinear extension.
    """

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) < 2:
            raise ValueError(f"{type(self).__name__} needs at least two coefficients")

    # -- structure, overridden per family
    def family(self) -> tuple:
        return (type(self).__name__, len(self.coeffs))

    def unit_names(self) -> Sequence[str]:
        raise NotImplementedError

    def unit_product(self, j: int, k: int) -> tuple[Any, int]:
        raise NotImplementedError

    def _new(self, coeffs) -> "BasisAlgebra":
        return type(self)(tuple(coeffs))

    # -- arithmetic
    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def _check(self, other: "BasisAlgebra"):
        if self.family() != other.family():
            raise FamilyMismatch(f"cannot combine {self.family()} with {other.family()}")

    def _lift(self, x):
        if isinstance(x, BasisAlgebra):
            self._check(x)
            return x
        if isinstance(x, numbers.Number):
            return self._new((x,) + (0,) * (self.dim - 1))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self._new(p + q for p, q in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self._new(p - q for p, q in zip(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return self._new(-p for p in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, numbers.Number):
            return self._new(other * p for p in self.coeffs)
        if isinstance(other, BasisAlgebra):
            self._check(other)
            return self._product(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Number):
            return self._new(other * p for p in self.coeffs)
        return NotImplemented

    def _product(self, other: "BasisAlgebra") -> "BasisAlgebra":
        out = [0] * self.dim
        for j, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for k, y in enumerate(other.coeffs):
                if y == 0:
                    continue
                c, m = self.unit_product(j, k)
                if c:
                    out[m] += c * x * y
        return self._new(out)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def isclose(self, other: "BasisAlgebra", tol: float = 1e-12) -> bool:
        self._check(other)
        return all(abs(p - q) <= tol for p, q in zip(self.coeffs, other.coeffs))

    def __abs__(self) -> float:
        return math.sqrt(sum(abs(c) ** 2 for c in self.coeffs))

    def __str__(self):
        names = self.unit_names()
        return fmt_combination(self.coeffs[0], list(zip(self.coeffs[1:], names[1:])))


# -- hypercomplex ``h`` units (cyclic group Z_n) -----------------------------


def hc_unit_mul(n: int, *indices: int) -> int:
    """Index of ``h_j1 h_j2 ... h_jp``, that is the sum of indices mod ``n``."""
    if n < 2:
        raise ValueError("dimension must be at least 2")
    for j in indices:
        if not 0 <= j < n:
            raise IndexError(f"unit index h{j} out of range for n={n}")
    return sum(indices) % n


@dataclass(frozen=True)
class NComplex(BasisAlgebra):
    """``x0 + x1 h1 + ... + x_{n-1} h_{n-1}`` with ``h_j h_k = h_{(j+k) mod n}``."""

    def unit_names(self):
        return ["1"] + [f"h{j}" for j in range(1, self.dim)]

    def unit_product(self, j, k):
        return 1, (j + k) % self.dim

    @classmethod
    def unit(cls, n: int, j: int) -> "NComplex":
        hc_unit_mul(n, j)
        return cls(tuple(1 if m == j else 0 for m in range(n)))


def hc_mul(u: NComplex, v: NComplex) -> NComplex:
    if u.dim != v.dim:
        raise FamilyMismatch(f"dimension mismatch: {u.dim} vs {v.dim}")
    return u * v


# -- dual-like numbers -------------------------------------------------------


class DualFamily(enum.Enum):
    """Value of ``eps`` in ``g^2 = eps * g``."""

    NILPOTENT = 0
    IDEMPOTENT = 1
    ANTI_IDEMPOTENT = -1

    @classmethod
    def parse(cls, name: str) -> "DualFamily":
        key = name.strip().lower().replace("-", "_")
        aliases = {"dual": "nilpotent", "tangent": "idempotent", "anti": "anti_idempotent"}
        return cls[aliases.get(key, key).upper()]


@dataclass(frozen=True)
class DualLike(BasisAlgebra):
    """``a + b1 g1 + ... + bn gn`` with ``g_j^2 = eps g_j`` and ``g_j g_k = 0`` for ``j != k``."""

    family_kind: DualFamily = DualFamily.NILPOTENT

    def family(self):
        return ("DualLike", self.family_kind, self.dim)

    def _new(self, coeffs):
        return DualLike(tuple(coeffs), self.family_kind)

    def unit_names(self):
        if self.dim == 2:
            return ["1", "g"]
        return ["1"] + [f"g{j}" for j in range(1, self.dim)]

    def unit_product(self, j, k):
        if j == 0:
            return 1, k
        if k == 0:
            return 1, j
        if j == k:
            return self.family_kind.value, j
        return 0, 0


def dual_mul(x: DualLike, y: DualLike) -> DualLike:
    return x * y


# -- quaternions and octonions -----------------------------------------------

_QUAT_NAMES = ("1", "i", "j", "k")


def _table_from_triplets(dim: int, triplets) -> dict:
    table = {}
    for j in range(dim):
        table[(0, j)] = (1, j)
        table[(j, 0)] = (1, j)
    for j in range(1, dim):
        table[(j, j)] = (-1, 0)
    for x, y, z in triplets:
        for p, q, r in ((x, y, z), (y, z, x), (z, x, y)):
            table[(p, q)] = (1, r)
            table[(q, p)] = (-1, r)
    assert len(table) == dim * dim, "triplets must cover every pair of imaginary units"
    return table


_QUAT_TABLE = _table_from_triplets(4, [(1, 2, 3)])

# triplets (i_a, i_b, i_c) with i_a i_b = i_c; octonion index 1 + a holds i_a
OCTONION_TRIPLETS = ((0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 0), (5, 6, 1), (6, 0, 2))
_OCT_TABLE = _table_from_triplets(8, [tuple(1 + a for a in t) for t in OCTONION_TRIPLETS])


@dataclass(frozen=True)
class Quaternion(BasisAlgebra):
    """``a + bi + cj + dk`` with ``i^2 = j^2 = k^2 = ijk = -1``."""

    def __post_init__(self):
        super().__post_init__()
        if self.dim != 4:
            raise ValueError("a quaternion has four coefficients")

    def unit_names(self):
        return _QUAT_NAMES

    def unit_product(self, j, k):
        return _QUAT_TABLE[(j, k)]

    def conjugate(self) -> "Quaternion":
        return Quaternion((self.coeffs[0],) + tuple(-c for c in self.coeffs[1:]))


@dataclass(frozen=True)
class Octonion(BasisAlgebra):
    """``a + b0 i0 + ... + b6 i6``; each listed triplet multiplies like ``(i, j, k)``."""

    def __post_init__(self):
        super().__post_init__()
        if self.dim != 8:
            raise ValueError("an octonion has eight coefficients")

    def unit_names(self):
        return ["1"] + [f"i{a}" for a in range(7)]

    def unit_product(self, j, k):
        return _OCT_TABLE[(j, k)]

    @classmethod
    def unit(cls, a: Optional[int]) -> "Octonion":
        """``1`` for ``None``, otherwise ``i_a``."""
        m = 0 if a is None else 1 + a
        return cls(tuple(1 if n == m else 0 for n in range(8)))


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    return p * q


def oct_mul(p: Octonion, q: Octonion) -> Octonion:
    return p * q


def quat_unit(name: str) -> Quaternion:
    m = _QUAT_NAMES.index(name)
    return Quaternion(tuple(1 if n == m else 0 for n in range(4)))


def find_nonassociative_triple() -> tuple[int, int, int]:
    """First ``(a, b, c)`` with ``(i_a i_b) i_c != i_a (i_b i_c)``."""
    for a, b, c in itertools.product(range(7), repeat=3):
        x, y, z = (Octonion.unit(n) for n in (a, b, c))
        if (x * y) * z != x * (y * z):
            return a, b, c
    raise AssertionError("octonion table is associative")


# -- neutrosophic lift u + vI ------------------------------------------------


def family_of(x) -> tuple:
    if isinstance(x, BasisAlgebra):
        return x.family()
    if isinstance(x, numbers.Number):
        return ("scalar",)
    raise TypeError(f"no number family for {type(x).__name__}")


def neutro_wrap(u, v) -> NeutroNumber:
    """``u + vI`` over the family of ``u`` and ``v``."""
    _common_family([u, v])
    return NeutroNumber(u, v)


def _common_family(values) -> tuple:
    fams = {family_of(c) for c in values} - {("scalar",)}
    if len(fams) > 1:
        raise FamilyMismatch("mixed number families: " + ", ".join(map(str, sorted(fams, key=str))))
    return fams.pop() if fams else ("scalar",)


def neutro_lift_mul(x: NeutroNumber, y: NeutroNumber) -> NeutroNumber:
    """``(u1 + v1 I)(u2 + v2 I) = u1 u2 + (u1 v2 + v1 u2 + v1 v2) I`` in one family.

    Real scalars embed into every family, so ``(2 + I) * (q + 0I)`` is fine;
    two different non-scalar families raise :class:`FamilyMismatch`.
    """
    _common_family([x.a, x.b, y.a, y.b])
    return nn_mul(x, y)


# -- neutrosophic intervals --------------------------------------------------


class Membership(enum.Enum):
    INSIDE_DETERMINATE = "inside-determinate"
    INSIDE_INDETERMINATE = "inside-indeterminate"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class ScaledIndet:
    """The set ``{c * x : x in I}`` for an open interval ``I``."""

    c: float
    interval: IndetInterval

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.c, self.interval.lo, self.interval.hi)):
            raise ValueError("indeterminate parts need finite bounds")

    def bounds(self) -> tuple[float, float]:
        p, q = self.c * self.interval.lo, self.c * self.interval.hi
        return (p, q) if p <= q else (q, p)

    def contains(self, x: float) -> bool:
        lo, hi = self.bounds()
        return lo < x < hi

    def __str__(self):
        body = "I" if self.c == 1 else fmt_real(self.c) + "I"
        return "{" + body + "}, I=" + str(self.interval)


@dataclass(frozen=True)
class NeutroInterval:
    """``{c1 I1} U [a, b] U {c2 I2}``; either indeterminate side may be absent."""

    a: float
    b: float
    left: Optional[ScaledIndet] = None
    right: Optional[ScaledIndet] = None

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)) or self.a > self.b:
            raise ValueError(f"bad determinate part [{self.a}, {self.b}]")

    def __str__(self):
        parts = []
        if self.left:
            parts.append(str(self.left))
        parts.append(f"[{fmt_real(self.a)},{fmt_real(self.b)}]")
        if self.right:
            parts.append(str(self.right))
        return " U ".join(parts)


def ni_contains(A: NeutroInterval, x: float) -> Membership:
    if A.a <= x <= A.b:
        return Membership.INSIDE_DETERMINATE
    if any(p is not None and p.contains(x) for p in (A.left, A.right)):
        return Membership.INSIDE_INDETERMINATE
    return Membership.OUTSIDE


# -- linguistic numbers ------------------------------------------------------


@dataclass(frozen=True)
class LinguisticNumber:
    """Label ``L_{j + aI}`` from ``{L0, ..., Lp}`` with ``I`` a real interval ``[lo, hi]``."""

    p: int
    j: int
    a: float
    indet: tuple[float, float]

    def span(self) -> tuple[float, float]:
        lo, hi = self.indet
        ends = (self.j + self.a * lo, self.j + self.a * hi)
        return min(ends), max(ends)

    def __str__(self):
        return f"L_{{{fmt_combination(self.j, [(self.a, 'I')])}}}"


@dataclass(frozen=True)
class LinguisticInterval:
    """``[L_{j + aI}, L_{k + bI}]``; both ends are checked like a single label."""

    lower: LinguisticNumber
    upper: LinguisticNumber


@dataclass(frozen=True)
class LingVerdict:
    valid: bool
    span: tuple[float, float]
    reason: str = ""


def ling_validate(N) -> LingVerdict:
    if isinstance(N, LinguisticInterval):
        if N.lower.p != N.upper.p:
            return LingVerdict(False, (math.nan, math.nan), "ends use different label sets")
        lo, hi = ling_validate(N.lower), ling_validate(N.upper)
        span = (lo.span[0], hi.span[1])
        if not lo.valid:
            return LingVerdict(False, span, "lower end: " + lo.reason)
        if not hi.valid:
            return LingVerdict(False, span, "upper end: " + hi.reason)
        return LingVerdict(True, span)
    if N.p < 1:
        return LingVerdict(False, (math.nan, math.nan), "label set needs p >= 1")
    if N.indet[0] > N.indet[1]:
        return LingVerdict(False, (math.nan, math.nan), "empty indeterminacy interval")
    lo, hi = N.span()
    if lo < 0:
        return LingVerdict(False, (lo, hi), f"min {fmt_real(lo)} < 0")
    if hi > N.p:
        return LingVerdict(False, (lo, hi), f"max {fmt_real(hi)} > {N.p}")
    return LingVerdict(True, (lo, hi))
