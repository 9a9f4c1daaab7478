import pytest
from hypothesis import given
from hypothesis import strategies as st

from neutro.errors import MissingEdgeError
from neutro.graph import (
    INDET,
    SAMPLE_COGNITIVE_MAP,
    SAMPLE_UNDIRECTED,
    NeutroAdjacency,
    TifEdgeGraph,
    combine_paths,
    fmt_entry,
    parse_entry,
    path_value,
    validate_adjacency,
)
from neutro.indeterminacy import NeutroNumber
from neutro.tif import MAX_MIN_MIN, TifTriple

unit = st.floats(0, 1, allow_nan=False)
triples = st.builds(TifTriple, unit, unit, unit)


class TestEntries:
    @pytest.mark.parametrize(
        "text,value",
        [
            ("I", INDET),
            ("-I", NeutroNumber(0, -1)),
            ("2.5I", NeutroNumber(0, 2.5)),
            ("2+3I", NeutroNumber(2, 3)),
            ("1.5-2I", NeutroNumber(1.5, -2)),
            ("-1", -1),
            ("0", 0),
            ("0.25", 0.25),
        ],
    )
    def test_parse(self, text, value):
        assert parse_entry(text) == value

    def test_bad_entry(self):
        with pytest.raises(ValueError):
            parse_entry("x")

    def test_format_roundtrip(self):
        for text in ["I", "-1", "0", "2+3I"]:
            assert fmt_entry(parse_entry(text)) == text


class TestAdjacency:
    def test_samples_valid(self):
        v = validate_adjacency(SAMPLE_UNDIRECTED)
        assert v.valid and not v.directed
        v = validate_adjacency(SAMPLE_COGNITIVE_MAP)
        assert v.valid and v.directed

    def test_entry_outside_alphabet(self):
        m = NeutroAdjacency(((0, 2), (2, 0)))
        v = validate_adjacency(m)
        assert not v
        assert (v.problems[0].row, v.problems[0].col) == (0, 1)
        assert "outside alphabet" in v.problems[0].reason

    def test_loose_mode_accepts_combinations(self):
        m = NeutroAdjacency(((0, NeutroNumber(2, 1)), (NeutroNumber(2, 1), 0)), strict=False)
        assert validate_adjacency(m).valid

    def test_diagonal_and_symmetry(self):
        assert not validate_adjacency(NeutroAdjacency(((1, 0), (0, 0))))
        asym = NeutroAdjacency(((0, 1), (0, 0)))
        assert not validate_adjacency(asym)
        assert validate_adjacency(NeutroAdjacency(asym.rows, directed=True))

    def test_ragged(self):
        assert not validate_adjacency(NeutroAdjacency(((0, 1), (1,))))

    def test_text_roundtrip(self):
        for m in (SAMPLE_UNDIRECTED, SAMPLE_COGNITIVE_MAP):
            text = m.render()
            assert text.splitlines()[0] == f"adjacency n={m.n} {'directed' if m.directed else 'undirected'}"
            assert NeutroAdjacency.from_text(text) == m

    def test_from_text_errors(self):
        with pytest.raises(ValueError):
            NeutroAdjacency.from_text("adjacency n=2 undirected\n0 1\n")
        with pytest.raises(ValueError):
            NeutroAdjacency.from_text("matrix 2\n0 1\n1 0\n")


class TestPaths:
    G = TifEdgeGraph(
        {
            ("a", "b"): TifTriple(0.6, 0.1, 0.2),
            ("b", "c"): TifTriple(0.7, 0.2, 0.3),
            ("c", "d"): TifTriple(1, 0, 0),
            ("a", "c"): TifTriple(0.2, 0.5, 0.5),
        }
    )

    def test_composition(self):
        assert path_value(self.G, ["a", "b", "c"]) == TifTriple(0.6, 0.2, 0.3)

    def test_single_edge(self):
        assert path_value(self.G, ["b", "c"]) == TifTriple(0.7, 0.2, 0.3)

    def test_unit_edge(self):
        assert path_value(self.G, ["b", "c", "d"]) == TifTriple(0.7, 0.2, 0.3)

    def test_missing_edge(self):
        with pytest.raises(MissingEdgeError):
            path_value(self.G, ["c", "b"])
        with pytest.raises(ValueError):
            path_value(self.G, ["a"])

    def test_undirected_lookup(self):
        g = TifEdgeGraph(self.G.edges, directed=False)
        assert path_value(g, ["c", "b"]) == TifTriple(0.7, 0.2, 0.3)

    def test_combine_requires_explicit_disjunction(self):
        with pytest.raises(TypeError):
            combine_paths(self.G, [["a", "c"]])
        out = combine_paths(self.G, [["a", "b", "c"], ["a", "c"]], disj=MAX_MIN_MIN)
        assert out == TifTriple(0.6, 0.2, 0.3)

    @given(st.lists(triples, min_size=2, max_size=6), st.data())
    def test_concatenation_associative(self, labels, data):
        g = TifEdgeGraph({(k, k + 1): t for k, t in enumerate(labels)})
        path = list(range(len(labels) + 1))
        cut = data.draw(st.integers(1, len(labels) - 1))
        left = path_value(g, path[: cut + 1])
        right = path_value(g, path[cut:])
        joined = TifEdgeGraph({(0, 1): left, (1, 2): right})
        assert path_value(g, path) == path_value(joined, [0, 1, 2])
