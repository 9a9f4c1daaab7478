import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from neutro.errors import IndeterminateLawError, UndefinedError
from neutro.indeterminacy import (
    IDEMPOTENT_1,
    VENN_DEFS,
    VENN_TABLE,
    IndetInterval,
    NeutroNumber,
    RefinedNeutroNumber,
    SubIndTable,
    VennAtom,
    decompose_combination,
    decompose_real,
    derive_subind_table,
    law_sharp,
    neutro_complex,
    nn_add,
    nn_mul,
    nn_scale,
    nn_sub,
    rn_add,
    rn_mul,
    rn_scale,
    venn_region_set,
)
from neutro.literal import F, T, conj, disj, neg

from oracles import venn_table

ints = st.integers(-50, 50)
fracs = st.fractions(min_value=-20, max_value=20, max_denominator=16)
nns = st.builds(NeutroNumber, fracs, fracs)


def rn(a, *coeffs, table=VENN_TABLE):
    return RefinedNeutroNumber(a, coeffs, table)


def rns(arity, table):
    return st.builds(lambda a, cs: RefinedNeutroNumber(a, tuple(cs), table), ints, st.lists(ints, min_size=arity, max_size=arity))


class TestNeutroNumber:
    def test_add_sub_scale(self):
        assert nn_add(NeutroNumber(2, 5), NeutroNumber(0, -1)) == NeutroNumber(2, 4)
        assert nn_sub(NeutroNumber(2, 5), NeutroNumber(2, 5)) == NeutroNumber(0, 0)
        assert nn_scale(0, NeutroNumber(0, 1)) == NeutroNumber(0, 0)

    @given(ints, ints)
    def test_like_terms(self, m, n):
        assert nn_add(NeutroNumber(0, m), NeutroNumber(0, n)) == NeutroNumber(0, m + n)

    def test_mul_examples(self):
        assert nn_mul(NeutroNumber(1, 1), NeutroNumber(1, 1)) == NeutroNumber(1, 3)
        assert nn_mul(NeutroNumber(2, 5), NeutroNumber(1, 1)) == NeutroNumber(2, 12)
        assert nn_mul(NeutroNumber(0, 1), NeutroNumber(0, 1)) == NeutroNumber(0, 1)

    @given(nns)
    def test_unit(self, x):
        assert nn_mul(x, NeutroNumber(1, 0)) == x

    @given(nns, nns, nns)
    def test_ring_laws(self, x, y, z):
        assert nn_mul(x, y) == nn_mul(y, x)
        assert nn_mul(nn_mul(x, y), z) == nn_mul(x, nn_mul(y, z))
        assert nn_mul(x, nn_add(y, z)) == nn_add(nn_mul(x, y), nn_mul(x, z))

    @given(fracs, fracs)
    def test_agrees_with_arity_one_refined(self, a, b):
        x = NeutroNumber(a, b)
        r = RefinedNeutroNumber(a, (b,), IDEMPOTENT_1)
        prod = rn_mul(r, r)
        assert (prod.a, prod.coeffs[0]) == tuple((nn_mul(x, x).a, nn_mul(x, x).b))

    def test_division_undefined(self):
        with pytest.raises(UndefinedError, match="undefined"):
            NeutroNumber(0, 1) / NeutroNumber(0, 1)

    def test_printing(self):
        assert str(NeutroNumber(2, 12)) == "2+12I"
        assert str(NeutroNumber(0, -1)) == "-I"
        assert str(NeutroNumber(3, 0)) == "3"


class TestLawSharp:
    def test_examples(self):
        out = law_sharp(NeutroNumber(0.5, 0.2), NeutroNumber(0.5, 0.1))
        assert out.a == pytest.approx(1.4) and out.b == pytest.approx(0.1)
        assert law_sharp(NeutroNumber(0, 0), NeutroNumber(1, 0)) == NeutroNumber(0, 0)

    def test_indeterminate(self):
        with pytest.raises(IndeterminateLawError, match="indeterminate law"):
            law_sharp(NeutroNumber(0.2, 0.2), NeutroNumber(0, 0.3))

    def test_domain(self):
        with pytest.raises(ValueError):
            law_sharp(NeutroNumber(2, 0), NeutroNumber(1, 0))


class TestVenn:
    def test_region_examples(self):
        assert venn_region_set(conj(T, F)) == {VennAtom.T_AND_F}
        assert venn_region_set(conj(neg(T), neg(F))) == {VennAtom.NOT_T_AND_NOT_F}
        assert venn_region_set(conj(T, neg(T))) == frozenset()
        assert len(venn_region_set(disj(T, neg(T)))) == 4

    def test_derivation_matches_oracle(self):
        assert derive_subind_table(VENN_DEFS) == VENN_TABLE
        assert VENN_TABLE.cells == tuple(map(tuple, venn_table()))

    def test_anchors(self):
        assert VENN_TABLE.mul(1, 2) == 1
        assert VENN_TABLE.mul(3, 4) == 6
        assert VENN_TABLE.mul(5, 5) == 5

    def test_family_laws(self):
        assert VENN_TABLE.is_commutative()
        assert VENN_TABLE.is_associative()
        assert VENN_TABLE.is_idempotent()

    def test_not_intersection_closed(self):
        with pytest.raises(ValueError, match="intersection-closed"):
            derive_subind_table([T, F])


class TestSubIndTable:
    def test_text_roundtrip(self):
        assert SubIndTable.from_text(VENN_TABLE.to_text()) == VENN_TABLE

    def test_comments_and_errors(self):
        assert SubIndTable.from_text("# one\nsubind r=1\nI1 I1 -> I1  # diag\n") == IDEMPOTENT_1
        with pytest.raises(ValueError):
            SubIndTable.from_text("subind r=2\nI1 I1 -> I1\n")
        with pytest.raises(ValueError):
            SubIndTable.from_text("r=1\nI1 I1 -> I1\n")
        with pytest.raises(ValueError):
            SubIndTable(((2,),))

    def test_index_range(self):
        with pytest.raises(IndexError):
            VENN_TABLE.mul(0, 1)


class TestRefined:
    def test_add_scale(self):
        assert rn_add(rn(1, 1, 0, 0, 0, 0, 0), rn(2, 0, 1, 0, 0, 0, 0)) == rn(3, 1, 1, 0, 0, 0, 0)
        assert rn_scale(0, RefinedNeutroNumber.unit(3, 6, VENN_TABLE)).is_zero()
        u = RefinedNeutroNumber.unit(2, 6, VENN_TABLE)
        assert rn_add(rn_scale(4, u), rn_scale(5, u)) == rn_scale(9, u)

    def test_mul_example(self):
        out = rn_mul(rn(1, 1, 0, 0, 0, 0, 0), rn(1, 0, 1, 0, 0, 0, 0))
        assert out == rn(1, 2, 1, 0, 0, 0, 0)
        assert str(out) == "1+2I1+I2"

    def test_scalars(self):
        assert rn_mul(rn(3, 0, 0, 0, 0, 0, 0), rn(4, 0, 0, 0, 0, 0, 0)) == rn(12, 0, 0, 0, 0, 0, 0)

    @pytest.mark.parametrize("k", range(1, 7))
    def test_idempotent_units(self, k):
        u = RefinedNeutroNumber.unit(k, 6, VENN_TABLE)
        assert rn_mul(u, u) == u

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            rn_add(RefinedNeutroNumber(0, (1,)), RefinedNeutroNumber(0, (1, 2)))

    def test_needs_table(self):
        with pytest.raises(ValueError):
            rn_mul(RefinedNeutroNumber(0, (1,)), RefinedNeutroNumber(0, (1,)))

    @settings(max_examples=300)
    @given(rns(6, VENN_TABLE), rns(6, VENN_TABLE), rns(6, VENN_TABLE))
    def test_ring_laws(self, x, y, z):
        assert rn_mul(x, y) == rn_mul(y, x)
        assert rn_mul(rn_mul(x, y), z) == rn_mul(x, rn_mul(y, z))
        assert rn_mul(x, rn_add(y, z)) == rn_add(rn_mul(x, y), rn_mul(x, z))

    def test_noncommutative_table(self):
        left = SubIndTable(((1, 1), (2, 2)))  # Ij*Ik = Ij
        x, y = RefinedNeutroNumber(0, (1, 0), left), RefinedNeutroNumber(0, (0, 1), left)
        assert rn_mul(x, y) != rn_mul(y, x)

    def test_neutro_complex(self):
        z = neutro_complex(1, 2, 3, 4, VENN_TABLE.__class__(((1, 2), (2, 2))))
        assert z.a == complex(1, 3)
        assert z.coeffs == (2, 4j)


class TestDecompose:
    def test_sqrt7(self):
        n, iv = decompose_real(math.sqrt(7))
        assert (n, iv) == (NeutroNumber(2, 1), IndetInterval(0.6, 0.7))
        n, iv = decompose_real(math.sqrt(7), 1, 3)
        assert n == NeutroNumber(2.6, 3)
        assert (iv.lo, iv.hi) == (0.01, 0.02)

    def test_exact_grid_value_widens(self):
        n, iv = decompose_real(2.5, 1, 1)
        assert n == NeutroNumber(2.5, 1)
        assert (iv.lo, iv.hi) == (0, 0.01)

    def test_negative(self):
        n, iv = decompose_real(-1.25)
        assert n.a == -2
        assert (iv.lo, iv.hi) == (0.7, 0.8)

    def test_combination(self):
        r, ivs = decompose_combination(-6, [(1, 59 ** (1 / 3)), (-2, math.e), (11, math.pi)])
        assert r == RefinedNeutroNumber(26, (1, -2, 11))
        assert [(v.lo, v.hi) for v in ivs] == [(0.8, 0.9), (0.7, 0.8), (0.1, 0.2)]

    @given(
        st.floats(-1e6, 1e6, allow_nan=False),
        st.integers(0, 4),
        st.sampled_from([1, 2, 3, 0.5, 10, 0.01]),
    )
    def test_containment(self, x, digits, scale):
        n, iv = decompose_real(x, digits, scale)
        # bounds are decimal grid points; compare their exact decimal values
        xq = Fraction(x)
        a, s = Fraction(repr(n.a)), Fraction(repr(scale))
        assert a <= xq
        assert a + s * Fraction(repr(iv.lo)) <= xq <= a + s * Fraction(repr(iv.hi))

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            decompose_real(1.0, 0, 0)
        with pytest.raises(ValueError):
            decompose_real(1.0, -1)
