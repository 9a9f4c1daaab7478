"""Numerical (t, i, f) truth values and the operator families defined on them.

Every operator here is pure and acts on scalar triples.  Interval-valued
triples (:class:`TifIntervalTriple`) can be built and printed, but handing one
to an operator raises :class:`~neutro.errors.IntervalOperandError`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .errors import IntervalOperandError

TOL = 1e-12


def _unit(x: float, name: str) -> float:
    x = float(x)
    if x != x or x < -TOL or x > 1 + TOL:
        raise ValueError(f"{name}={x!r} outside [0, 1]")
    return min(1.0, max(0.0, x))


@dataclass(frozen=True)
class TifTriple:
    t: float
    i: float
    f: float

    def __post_init__(self):
        # results of float arithmetic can overshoot the unit interval by an ulp
        for name in ("t", "i", "f"):
            object.__setattr__(self, name, _unit(getattr(self, name), name))

    def __iter__(self):
        return iter((self.t, self.i, self.f))

    def isclose(self, other: "TifTriple", tol: float = TOL) -> bool:
        return all(abs(a - b) <= tol for a, b in zip(self, other))

    def __str__(self):
        from .fmt import fmt_real

        return "(" + ",".join(fmt_real(x) for x in self) + ")"


@dataclass(frozen=True)
class UnitInterval:
    """Closed sub-interval of [0, 1]."""

    lo: float
    hi: float

    def __post_init__(self):
        lo, hi = _unit(self.lo, "lo"), _unit(self.hi, "hi")
        if lo > hi:
            raise ValueError(f"interval bounds out of order: [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __str__(self):
        from .fmt import fmt_real

        return f"[{fmt_real(self.lo)},{fmt_real(self.hi)}]"


@dataclass(frozen=True)
class TifIntervalTriple:
    t: UnitInterval
    i: UnitInterval
    f: UnitInterval

    def __iter__(self):
        return iter((self.t, self.i, self.f))

    def __str__(self):
        return "(" + ",".join(str(x) for x in self) + ")"


AnyTriple = Union[TifTriple, TifIntervalTriple]


def _scalar(*triples: AnyTriple) -> None:
    for a in triples:
        if isinstance(a, TifIntervalTriple):
            raise IntervalOperandError()


# -- fuzzy building blocks ---------------------------------------------------


class FuzzyNormKind(enum.Enum):
    MIN = "min"
    PRODUCT = "product"
    LUKASIEWICZ = "lukasiewicz"


class FuzzyConormKind(enum.Enum):
    MAX = "max"
    PROBABILISTIC_SUM = "probsum"
    BOUNDED_SUM = "boundedsum"


def fuzzy_norm(kind: FuzzyNormKind, a: float, b: float) -> float:
    if kind is FuzzyNormKind.MIN:
        return min(a, b)
    if kind is FuzzyNormKind.PRODUCT:
        return a * b
    if kind is FuzzyNormKind.LUKASIEWICZ:
        return max(0.0, a + b - 1)
    raise ValueError(kind)


def fuzzy_conorm(kind: FuzzyConormKind, a: float, b: float) -> float:
    if kind is FuzzyConormKind.MAX:
        return max(a, b)
    if kind is FuzzyConormKind.PROBABILISTIC_SUM:
        return a + b - a * b
    if kind is FuzzyConormKind.BOUNDED_SUM:
        return min(1.0, a + b)
    raise ValueError(kind)


class FuzzyImplKind(enum.Enum):
    FODOR = "fodor"
    WEBER = "weber"
    YAGER = "yager"
    GOGUEN = "goguen"
    RESCHER = "rescher"
    KLEENE_DIENES = "kleenedienes"
    REICHENBACH = "reichenbach"
    GOEDEL = "goedel"
    LUKASIEWICZ = "lukasiewicz"


def fuzzy_implies(kind: FuzzyImplKind, x: float, y: float) -> float:
    """Fuzzy implication ``x -> y`` from the chosen family."""
    K = FuzzyImplKind
    if kind is K.FODOR:
        return 1.0 if x <= y else max(1 - x, y)
    if kind is K.WEBER:
        return 1.0 if x < 1 else y
    if kind is K.YAGER:
        return 1.0 if x == 0 and y == 0 else y**x
    if kind is K.GOGUEN:
        return 1.0 if x <= y else y / x
    if kind is K.RESCHER:
        return 1.0 if x <= y else 0.0
    if kind is K.KLEENE_DIENES:
        return max(1 - x, y)
    if kind is K.REICHENBACH:
        return 1 - x + x * y
    if kind is K.GOEDEL:
        return 1.0 if x <= y else y
    if kind is K.LUKASIEWICZ:
        return min(1.0, 1 - x + y)
    raise ValueError(kind)


def if_implies(
    a: tuple[float, float],
    b: tuple[float, float],
    norm: FuzzyNormKind = FuzzyNormKind.MIN,
    conorm: FuzzyConormKind = FuzzyConormKind.MAX,
) -> tuple[float, float]:
    """Intuitionistic fuzzy implication on (truth, falsehood) pairs."""
    (ta, fa), (tb, fb) = a, b
    t = fuzzy_norm(norm, fuzzy_conorm(conorm, 1 - ta, tb), fuzzy_conorm(conorm, 1 - fb, fa))
    f = fuzzy_norm(norm, fb, 1 - ta)
    return t, f


# -- negation, conjunction, disjunction --------------------------------------


class NegVariant(enum.Enum):
    SWAP_TF = "swap_tf"  # (f, i, t)
    SWAP_TF_FLIP_I = "swap_tf_flip_i"  # (f, 1-i, t)
    COMPLEMENT_ALL = "complement_all"  # (1-t, 1-i, 1-f)
    COMPLEMENT_TF = "complement_tf"  # (1-t, i, 1-f)


def tif_negate(variant: NegVariant, a: TifTriple) -> TifTriple:
    _scalar(a)
    t, i, f = a
    if variant is NegVariant.SWAP_TF:
        return TifTriple(f, i, t)
    if variant is NegVariant.SWAP_TF_FLIP_I:
        return TifTriple(f, 1 - i, t)
    if variant is NegVariant.COMPLEMENT_ALL:
        return TifTriple(1 - t, 1 - i, 1 - f)
    if variant is NegVariant.COMPLEMENT_TF:
        return TifTriple(1 - t, i, 1 - f)
    raise ValueError(variant)


class ConjShape(enum.Enum):
    """How the i- and f-slots of a conjunction combine; t always uses the norm."""

    NORM_CONORM_CONORM = "norm-conorm-conorm"
    NORM_NORM_CONORM = "norm-norm-conorm"
    NORM_NORM_NORM = "norm-norm-norm"
    NORM_MEAN_CONORM = "norm-mean-conorm"
    NORM_COMEAN_CONORM = "norm-comean-conorm"
    NORM_ABSDIFF_CONORM = "norm-absdiff-conorm"


class DisjShape(enum.Enum):
    """How the i- and f-slots of a disjunction combine; t always uses the conorm."""

    CONORM_NORM_NORM = "conorm-norm-norm"
    CONORM_CONORM_NORM = "conorm-conorm-norm"
    CONORM_CONORM_CONORM = "conorm-conorm-conorm"
    CONORM_MEAN_NORM = "conorm-mean-norm"
    CONORM_COMEAN_NORM = "conorm-comean-norm"
    CONORM_ABSDIFF_CONORM = "conorm-absdiff-conorm"


@dataclass(frozen=True)
class ConjVariant:
    shape: ConjShape = ConjShape.NORM_CONORM_CONORM
    norm: FuzzyNormKind = FuzzyNormKind.MIN
    conorm: FuzzyConormKind = FuzzyConormKind.MAX

    def __str__(self):
        return f"{self.shape.value}:{self.norm.value}:{self.conorm.value}"


@dataclass(frozen=True)
class DisjVariant:
    shape: DisjShape = DisjShape.CONORM_NORM_NORM
    norm: FuzzyNormKind = FuzzyNormKind.MIN
    conorm: FuzzyConormKind = FuzzyConormKind.MAX

    def __str__(self):
        return f"{self.shape.value}:{self.norm.value}:{self.conorm.value}"


MIN_MAX_MAX = ConjVariant()
MAX_MIN_MIN = DisjVariant()


def _mid_slot(kind: str, x: float, y: float, norm, conorm) -> float:
    if kind == "norm":
        return fuzzy_norm(norm, x, y)
    if kind == "conorm":
        return fuzzy_conorm(conorm, x, y)
    if kind == "mean":
        return (x + y) / 2
    if kind == "comean":
        return 1 - (x + y) / 2
    if kind == "absdiff":
        return abs(x - y)
    raise ValueError(kind)


def _combine(shape_value: str, a: TifTriple, b: TifTriple, norm, conorm) -> TifTriple:
    kt, ki, kf = shape_value.split("-")
    return TifTriple(
        _mid_slot(kt, a.t, b.t, norm, conorm),
        _mid_slot(ki, a.i, b.i, norm, conorm),
        _mid_slot(kf, a.f, b.f, norm, conorm),
    )


def tif_conjoin(variant: ConjVariant, a: TifTriple, b: TifTriple) -> TifTriple:
    _scalar(a, b)
    return _combine(variant.shape.value, a, b, variant.norm, variant.conorm)


def tif_disjoin(variant: DisjVariant, a: TifTriple, b: TifTriple) -> TifTriple:
    _scalar(a, b)
    return _combine(variant.shape.value, a, b, variant.norm, variant.conorm)


# -- implication -------------------------------------------------------------


class ImplClass(enum.Enum):
    IN1 = "in1"  # i: norm,   f: norm
    IN2 = "in2"  # i: conorm, f: norm
    IN3 = "in3"  # i: mean,   f: norm
    IN4 = "in4"  # i: mean,   f: mean
    NEG_OR = "negor"


IF_IMPLICATION = "if"
"""Marker for taking the t-slot from :func:`if_implies` instead of a fuzzy one."""


@dataclass(frozen=True)
class NeutroImplication:
    """A configured neutrosophic implication.

    ``klass`` picks the construction.  IN1..IN4 read ``t_impl`` (a
    :class:`FuzzyImplKind` or :data:`IF_IMPLICATION`) plus ``norm``/``conorm``;
    NEG_OR reads ``neg`` and ``disj`` and ignores the rest.
    """

    klass: ImplClass = ImplClass.NEG_OR
    t_impl: Union[FuzzyImplKind, str] = FuzzyImplKind.FODOR
    norm: FuzzyNormKind = FuzzyNormKind.MIN
    conorm: FuzzyConormKind = FuzzyConormKind.MAX
    neg: NegVariant = NegVariant.SWAP_TF
    disj: DisjVariant = MAX_MIN_MIN

    def __str__(self):
        if self.klass is ImplClass.NEG_OR:
            return f"negor:{self.neg.value}:{self.disj}"
        t = self.t_impl if isinstance(self.t_impl, str) else self.t_impl.value
        return f"{self.klass.value}:{t}:{self.norm.value}:{self.conorm.value}"


NEG_OR_DEFAULT = NeutroImplication()


def neutro_implies(impl: NeutroImplication, a: TifTriple, b: TifTriple) -> TifTriple:
    _scalar(a, b)
    if impl.klass is ImplClass.NEG_OR:
        return tif_disjoin(impl.disj, tif_negate(impl.neg, a), b)

    if impl.t_impl == IF_IMPLICATION:
        t, _ = if_implies((a.t, a.f), (b.t, b.f), impl.norm, impl.conorm)
    else:
        t = fuzzy_implies(impl.t_impl, a.t, b.t)

    norm, conorm = impl.norm, impl.conorm
    if impl.klass is ImplClass.IN1:
        i, f = fuzzy_norm(norm, a.i, b.i), fuzzy_norm(norm, a.f, b.f)
    elif impl.klass is ImplClass.IN2:
        i, f = fuzzy_conorm(conorm, a.i, b.i), fuzzy_norm(norm, a.f, b.f)
    elif impl.klass is ImplClass.IN3:
        i, f = (a.i + b.i) / 2, fuzzy_norm(norm, a.f, b.f)
    elif impl.klass is ImplClass.IN4:
        i, f = (a.i + b.i) / 2, (a.f + b.f) / 2
    else:
        raise ValueError(impl.klass)
    return TifTriple(t, i, f)


# -- multiplicative conjunction, contradiction, semigroup --------------------


def mul_conjoin(a: TifTriple, b: TifTriple) -> TifTriple:
    """Expand (tA+iA+fA)(tB+iB+fB) and bucket under truth < indeterminacy < falsity.

    Terms containing an f go to falsity (``fA*fB`` included), terms with an i
    and no f to indeterminacy, the pure ``tA*tB`` term to truth.  Each output
    component is bounded by the product of the input sums, so the operands must
    satisfy ``t + i + f <= 1`` for the result to stay in [0, 1].
    """
    _scalar(a, b)
    for x in (a, b):
        if x.t + x.i + x.f > 1 + TOL:
            raise ValueError(f"multiplicative conjunction needs t+i+f <= 1, got {x}")
    t = a.t * b.t
    i = a.i * b.i + a.t * b.i + b.t * a.i
    f = a.t * b.f + b.t * a.f + a.i * b.f + b.i * a.f + a.f * b.f
    return TifTriple(t, i, f)


def contradiction_degree(a: TifTriple, b: TifTriple) -> float:
    """Scaled L1 distance between two truth values, in [0, 1]."""
    _scalar(a, b)
    return (abs(a.t - b.t) + abs(a.i - b.i) + abs(a.f - b.f)) / 3


@dataclass(frozen=True)
class Member:
    """A carrier value tagged with its (t, i, f) membership, written x(t,i,f)."""

    x: float
    tif: TifTriple = TifTriple(1, 0, 0)

    def __str__(self):
        from .fmt import fmt_real

        return f"{fmt_real(self.x)}{self.tif}"


def semigroup_star(x1: Member, x2: Member) -> Member:
    """max on carriers, <min, max, max> on memberships."""
    return Member(max(x1.x, x2.x), tif_conjoin(MIN_MAX_MAX, x1.tif, x2.tif))
