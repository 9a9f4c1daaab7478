"""The eleven acceptance criteria, one check function each.

Run under pytest (a summary line per criterion is printed at the end of the
session) or directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import math
import random
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from oracles import absorbance_product, count_terms, d2 as d2_oracle, venn_table  # noqa: E402
from strategies import expressions  # noqa: E402

from neutro.expr import parse, to_source  # noqa: E402
from neutro.hyper import Octonion, find_nonassociative_triple, hc_unit_mul, quat_unit  # noqa: E402
from neutro.indeterminacy import (  # noqa: E402
    VENN_DEFS,
    VENN_TABLE,
    NeutroNumber,
    RefinedNeutroNumber,
    decompose_combination,
    derive_subind_table,
    rn_add,
    rn_mul,
)
from neutro.literal import (  # noqa: E402
    AND_V1,
    AND_V2,
    AND_V3,
    EQUIV_TABLE,
    IMPLIES_TABLE,
    OR_TABLE,
    REFINED_AND,
    REFINED_NEG,
    REFINED_OR,
    REFINED_SPACE,
    SHEFFER_TABLE,
    T12,
    TIF,
    XOR_TABLE,
    F,
    F1,
    F2,
    I,
    Lit,
    OpKind,
    PrevalenceOrder,
    T,
    T1,
    T2,
    closure,
    disj,
    generate_table,
    parse_formula,
)
from neutro.quadruple import (  # noqa: E402
    OPTIMISTIC,
    PESSIMISTIC,
    QuadNumber,
    RefinedQuadNumber,
    absorb,
    nq_mul,
    nq_mul_closed,
    rnq_mul,
)
from neutro.tif import (  # noqa: E402
    MAX_MIN_MIN,
    MIN_MAX_MAX,
    NEG_OR_DEFAULT,
    Member,
    NegVariant,
    TifTriple,
    contradiction_degree,
    neutro_implies,
    semigroup_star,
    tif_conjoin,
    tif_disjoin,
    tif_negate,
)

# -- 1 ------------------------------------------------------------------------

TABLE_2 = """
1 1 6 6 6 6
1 2 3 6 3 6
6 3 3 6 3 6
6 6 6 4 4 6
6 3 3 4 5 6
6 6 6 6 6 6
"""


def criterion_1():
    derived = derive_subind_table(VENN_DEFS)
    expected = [[int(c) for c in row.split()] for row in TABLE_2.strip().splitlines()]
    assert [list(r) for r in derived.cells] == expected
    assert [list(r) for r in VENN_TABLE.cells] == expected
    assert venn_table() == expected
    assert derived.mul(1, 2) == 1
    assert derived.mul(3, 4) == 6
    assert derived.mul(5, 5) == 5


# -- 2, 3 ---------------------------------------------------------------------


def criterion_2():
    out = neutro_implies(NEG_OR_DEFAULT, TifTriple(0.3, 0.4, 0.2), TifTriple(0.7, 0.1, 0.4))
    assert tuple(out) == (0.7, 0.1, 0.3)


def criterion_3():
    a1, a2 = TifTriple(0.6, 0.1, 0.2), TifTriple(0.7, 0.2, 0.3)
    g1 = TifTriple(0.6, 0.1, 0.2)
    d1, d2, d3 = TifTriple(0.1, 0.2, 0.9), TifTriple(0.6, 0.2, 0.4), TifTriple(0.3, 0.2, 0.7)
    conj = lambda x, y: tif_conjoin(MIN_MAX_MAX, x, y)  # noqa: E731
    assert tuple(conj(a1, a2)) == (0.6, 0.2, 0.3)
    assert tuple(conj(a1, tif_negate(NegVariant.SWAP_TF, a2))) == (0.3, 0.2, 0.7)
    assert tuple(conj(g1, tif_disjoin(MAX_MIN_MIN, d1, d2))) == (0.6, 0.2, 0.4)
    assert tuple(conj(g1, d3)) == (0.3, 0.2, 0.7)


# -- 4, 5 ---------------------------------------------------------------------


def criterion_4():
    rng = random.Random(20261014)
    for order in (OPTIMISTIC, PESSIMISTIC):
        chain = [str(x) for x in order.chain]
        for _ in range(1000):
            x = QuadNumber(*(rng.uniform(-10, 10) for _ in range(4)))
            y = QuadNumber(*(rng.uniform(-10, 10) for _ in range(4)))
            generic = nq_mul(order, x, y)
            closed = nq_mul_closed(order, x, y)
            assert generic.isclose(closed, 1e-12), (order, x, y)
            ref = absorbance_product(chain, _quad_terms(x), _quad_terms(y))
            want = [float(ref.get(k, 0)) for k in ("", "T", "I", "F")]
            assert all(abs(g - w) <= 1e-9 * max(1, abs(w)) for g, w in zip(generic, want))


def _quad_terms(q: QuadNumber) -> dict:
    return {"": q.a, "T": q.b, "I": q.c, "F": q.d}


EXERCISE_CHAIN = ["T1", "T2", "T3", "I", "F1", "F2"]
NA = {"": 2, "T1": -3, "T2": 2, "T3": 1, "I": -1, "F1": 5, "F2": -3}
NB = {"": 0, "T1": 1, "T2": -1, "T3": 0, "I": 5, "F1": -8, "F2": 5}
# frozen from oracles.absorbance_product(EXERCISE_CHAIN, NA, NB)
EXERCISE_PRODUCT = {"T2": -2, "T3": 2, "I": 18, "F1": -7, "F2": -5}


def criterion_5():
    order = PrevalenceOrder.parse(">".join(EXERCISE_CHAIN))

    def build(d):
        return RefinedQuadNumber.of(d[""], {Lit.parse(k): v for k, v in d.items() if k}, order.chain)

    got = rnq_mul(order, build(NA), build(NB))
    assert count_terms(NA, NB) == 49
    assert absorbance_product(EXERCISE_CHAIN, NA, NB) == EXERCISE_PRODUCT
    assert got.a == 0
    assert {str(k): v for k, v in zip(got.alphabet, got.coeffs) if v} == EXERCISE_PRODUCT
    assert str(got) == "-2T2+2T3+18I-7F1-5F2"


# -- 6, 7 ---------------------------------------------------------------------

# rows and columns in the order T I F
PREVALENCE_TABLES = {
    "9": (OpKind.AND, "I>F>T", AND_V1, "T I F / I I I / F I F"),
    "10": (OpKind.AND, "F>I>T", AND_V2, "T I F / I I F / F F F"),
    "11": (OpKind.AND, "F>T>I", AND_V3, "T T F / T I F / F F F"),
    "13": (OpKind.OR, "T>F>I", OR_TABLE, "T T T / T I F / T F F"),
    "15": (OpKind.XOR, "T>F>I", XOR_TABLE, "F T T / T I F / T F F"),
    "17": (OpKind.SHEFFER, "T>I>F", SHEFFER_TABLE, "F T T / T I I / T I T"),
}
TABLE_19 = "T I F / T T F / T T T"
TABLE_21 = "T I F / I T I / F I T"


def _grid(text: str) -> dict:
    rows = [r.split() for r in text.split("/")]
    return {(x, y): Lit.parse(rows[a][b]) for a, x in enumerate(TIF) for b, y in enumerate(TIF)}


def criterion_6():
    for name, (kind, order, preset, grid) in PREVALENCE_TABLES.items():
        table = generate_table(kind, PrevalenceOrder.parse(order))
        assert table.cells == _grid(grid), f"Table {name}"
        assert preset == table, f"Table {name} preset"
    assert IMPLIES_TABLE.cells == _grid(TABLE_19)
    assert EQUIV_TABLE.cells == _grid(TABLE_21)


def criterion_7():
    space = set(REFINED_SPACE)
    assert closure(REFINED_SPACE, [REFINED_AND]) - space == {T12, I, F}
    assert closure(REFINED_SPACE, [REFINED_OR]) - space == {T, I, disj(F1, F2)}
    assert closure(REFINED_SPACE, [REFINED_NEG]) - space == {disj(T1, F1), disj(T2, F2)}
    assert parse_formula("T1|F1") == disj(T1, F1)


# -- 8 ------------------------------------------------------------------------


def criterion_8():
    assert hc_unit_mul(5, 3, 4) == 2
    for n in range(2, 65):
        tab = [[hc_unit_mul(n, a, b) for b in range(n)] for a in range(n)]
        rows = range(n)
        assert all(tab[0][a] == a == tab[a][0] for a in rows)
        assert all(any(tab[a][b] == 0 for b in rows) for a in rows)
        for a in rows:
            ta = tab[a]
            for b in rows:
                tab_ab, tb = tab[ta[b]], tab[b]
                for c in rows:
                    if tab_ab[c] != ta[tb[c]]:
                        raise AssertionError(f"Z_{n} not associative at {a},{b},{c}")
    i, j, k = (quat_unit(c) for c in "ijk")
    assert i * j == k
    assert j * i == -k
    a, b, c = find_nonassociative_triple()
    x, y, z = (Octonion.unit(m) for m in (a, b, c))
    assert (x * y) * z != x * (y * z)


# -- 9, 10 --------------------------------------------------------------------


def criterion_9():
    number, (i1, i2, i3) = decompose_combination(-6, [(1, 59 ** (1 / 3)), (-2, math.e), (11, math.pi)])
    assert number == RefinedNeutroNumber(26, (1, -2, 11))
    assert str(number) == "26+I1-2I2+11I3"
    assert (i1.lo, i1.hi) == (0.8, 0.9)
    assert (i2.lo, i2.hi) == (0.7, 0.8)
    assert (i3.lo, i3.hi) == (0.1, 0.2)
    assert i1.contains(59 ** (1 / 3) - 3) and i2.contains(math.e - 2) and i3.contains(math.pi - 3)


COMPLEMENTARY = [((1, 0, 0), (0, 1, 1)), ((0, 1, 0), (1, 0, 1)), ((0, 0, 1), (1, 1, 0)), ((0, 0, 0), (1, 1, 1))]


def criterion_10():
    for p, q in COMPLEMENTARY:
        assert contradiction_degree(TifTriple(*p), TifTriple(*q)) == 1
    rng = random.Random(11)
    for _ in range(1000):
        a, b, c = (TifTriple(rng.random(), rng.random(), rng.random()) for _ in range(3))
        dab = contradiction_degree(a, b)
        assert contradiction_degree(a, a) == 0
        assert dab == contradiction_degree(b, a)
        assert 0 <= dab <= 1
        assert abs(dab - d2_oracle(tuple(a), tuple(b))) <= 1e-15
        assert dab <= contradiction_degree(a, c) + contradiction_degree(c, b) + 1e-12
        if dab == 0:
            assert a == b


# -- 11 -----------------------------------------------------------------------

_prop = settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
_ints = st.integers(-50, 50)


def criterion_11():
    Ii = NeutroNumber(0, 1)
    assert Ii * Ii == Ii

    @_prop
    @given(_ints, _ints)
    def sums(m, n):
        assert NeutroNumber(0, m) + NeutroNumber(0, n) == NeutroNumber(0, m + n)
        assert m * Ii + n * Ii == (m + n) * Ii

    chain = PrevalenceOrder.parse("T1>T2>T3>I>F1>F2")
    lit = st.sampled_from(chain.chain)

    @_prop
    @given(lit, lit, lit)
    def absorbance(x, y, z):
        assert absorb(chain, x, x) == x
        assert absorb(chain, x, y) == absorb(chain, y, x)
        assert absorb(chain, absorb(chain, x, y), z) == absorb(chain, x, absorb(chain, y, z))

    refined = st.builds(
        lambda a, cs: RefinedNeutroNumber(a, tuple(cs), VENN_TABLE), _ints, st.lists(_ints, min_size=6, max_size=6)
    )

    @_prop
    @given(refined, refined, refined)
    def distributive(x, y, z):
        assert rn_mul(x, rn_add(y, z)) == rn_add(rn_mul(x, y), rn_mul(x, z))
        assert rn_mul(rn_add(y, z), x) == rn_add(rn_mul(y, x), rn_mul(z, x))

    unit = st.floats(0, 1)
    member = st.builds(lambda x, t, i, f: Member(x, TifTriple(t, i, f)), st.integers(0, 20), unit, unit, unit)

    @_prop
    @given(member)
    def star_idempotent(m):
        assert semigroup_star(m, m) == m

    three, four, nine = Member(3), Member(4), Member(9, TifTriple(0.7, 0.1, 0.3))
    assert semigroup_star(three, nine) == nine and str(semigroup_star(three, nine)) == "9(0.7,0.1,0.3)"
    assert semigroup_star(three, four) == Member(4) and str(semigroup_star(three, four)) == "4(1,0,0)"

    @settings(max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(expressions())
    def round_trip(tree):
        assert parse(to_source(tree)) == tree
        assert parse(to_source(parse(to_source(tree)))) == parse(to_source(tree))

    for check in (sums, absorbance, distributive, star_idempotent, round_trip):
        check()


CRITERIA = [
    (1, "sub-indeterminacy table derived from Venn regions", criterion_1),
    (2, "worked implication via NegOr", criterion_2),
    (3, "deducibility chain conjunctions", criterion_3),
    (4, "quadruple closed forms agree with absorbance expansion", criterion_4),
    (5, "refined quadruple exercise product", criterion_5),
    (6, "literal tables from prevalence orders", criterion_6),
    (7, "refined literal closures", criterion_7),
    (8, "hypercomplex units, quaternions, octonions", criterion_8),
    (9, "decomposition reconstruction 26+I1-2I2+11I3", criterion_9),
    (10, "contradiction metric", criterion_10),
    (11, "property suites", criterion_11),
]


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"criterion-{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, check):
    check()


def main() -> int:
    failed = 0
    for number, title, check in CRITERIA:
        try:
            check()
        except Exception as exc:  # report every criterion, not just the first failure
            failed += 1
            print(f"criterion {number:>2} FAIL  {title}: {type(exc).__name__}: {exc}")
        else:
            print(f"criterion {number:>2} PASS  {title}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
