"""Graphs whose connections may be indeterminate.

:class:`NeutroAdjacency` holds matrices over ``{0, 1, -1, I}`` (or general
``a + bI`` entries).  :class:`TifEdgeGraph` labels edges with (t, i, f)
triples and evaluates a path by folding a conjunction over its edges.  There
is deliberately no matrix power or reachability: no addition is defined for
entries such as ``1 + I`` in this setting.
"""

from __future__ import annotations

import numbers
import re
from dataclasses import dataclass, field
from functools import reduce
from typing import Hashable, Iterable, Mapping, Optional, Sequence

from .errors import MissingEdgeError
from .indeterminacy import NeutroNumber
from .tif import MIN_MAX_MAX, ConjVariant, DisjVariant, TifTriple, tif_conjoin, tif_disjoin

INDET = NeutroNumber(0, 1)
_ALPHABET = (0, 1, -1)


def parse_entry(text: str):
    s = text.strip()
    if s == "I":
        return INDET
    if re.fullmatch(r"[+-]?\d+", s):
        return int(s)
    if re.fullmatch(r"[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?", s):
        return float(s)
    num = r"(?:\d+(?:\.\d*)?|\.\d+)"
    m = re.fullmatch(rf"([+-]?{num}(?=[+-]))?([+-]?)({num})?I", s)
    if m:
        a = float(m.group(1)) if m.group(1) else 0.0
        b = float(m.group(3)) if m.group(3) else 1.0
        return NeutroNumber(a, -b if m.group(2) == "-" else b)
    raise ValueError(f"bad adjacency entry {text!r}")


def fmt_entry(x) -> str:
    return str(x)


@dataclass(frozen=True)
class AdjacencyProblem:
    row: int
    col: int
    reason: str

    def __str__(self):
        return f"cell ({self.row},{self.col}): {self.reason}"


@dataclass(frozen=True)
class AdjacencyVerdict:
    valid: bool
    directed: bool
    problems: tuple[AdjacencyProblem, ...] = ()

    def __bool__(self):
        return self.valid


@dataclass(frozen=True)
class NeutroAdjacency:
    """Square matrix of connection values.

    ``strict`` limits entries to ``0, 1, -1, I``; otherwise any ``a + bI``
    entry is accepted.  Symmetry is required only when ``directed`` is false.
    """

    rows: tuple[tuple, ...]
    directed: bool = False
    strict: bool = True

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, rc):
        r, c = rc
        return self.rows[r][c]

    def render(self) -> str:
        kind = "directed" if self.directed else "undirected"
        lines = [f"adjacency n={self.n} {kind}"]
        lines += [" ".join(fmt_entry(x) for x in row) for row in self.rows]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, strict: bool = True) -> "NeutroAdjacency":
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines:
            raise ValueError("empty adjacency file")
        m = re.fullmatch(r"adjacency\s+n=(\d+)\s+(directed|undirected)", lines[0])
        if not m:
            raise ValueError(f"bad adjacency header {lines[0]!r}")
        n = int(m.group(1))
        rows = [tuple(parse_entry(tok) for tok in ln.split()) for ln in lines[1:]]
        if len(rows) != n:
            raise ValueError(f"header says n={n} but {len(rows)} rows follow")
        return cls(tuple(rows), directed=m.group(2) == "directed", strict=strict)


def _allowed(x, strict: bool) -> bool:
    if isinstance(x, bool):
        return False
    if isinstance(x, NeutroNumber):
        return x == INDET or not strict
    if isinstance(x, numbers.Real):
        return x in _ALPHABET or not strict
    return False


def _is_zero(x) -> bool:
    return x.is_zero() if isinstance(x, NeutroNumber) else x == 0


def validate_adjacency(m: NeutroAdjacency) -> AdjacencyVerdict:
    problems: list[AdjacencyProblem] = []
    n = m.n
    for r, row in enumerate(m.rows):
        if len(row) != n:
            problems.append(AdjacencyProblem(r, len(row), f"row has {len(row)} entries, expected {n}"))
    if problems:
        return AdjacencyVerdict(False, m.directed, tuple(problems))
    for r in range(n):
        for c in range(n):
            x = m[r, c]
            if not _allowed(x, m.strict):
                problems.append(AdjacencyProblem(r, c, f"entry {fmt_entry(x)} outside alphabet"))
            elif r == c and not _is_zero(x):
                problems.append(AdjacencyProblem(r, c, "nonzero diagonal"))
            elif not m.directed and c > r and m[c, r] != x:
                problems.append(AdjacencyProblem(r, c, f"asymmetric: {fmt_entry(x)} vs {fmt_entry(m[c, r])}"))
    return AdjacencyVerdict(not problems, m.directed, tuple(problems))


@dataclass(frozen=True)
class TifEdgeGraph:
    """Edges labelled by (t, i, f); vertices may carry a (t, i, f) tag as metadata only."""

    edges: Mapping[tuple[Hashable, Hashable], TifTriple]
    directed: bool = True
    vertex_tif: Mapping[Hashable, TifTriple] = field(default_factory=dict)

    def edge(self, u, v) -> TifTriple:
        if (u, v) in self.edges:
            return self.edges[(u, v)]
        if not self.directed and (v, u) in self.edges:
            return self.edges[(v, u)]
        raise MissingEdgeError(f"no edge {u} -> {v}")


def path_value(g: TifEdgeGraph, path: Sequence[Hashable], conj: ConjVariant = MIN_MAX_MAX) -> TifTriple:
    if len(path) < 2:
        raise ValueError("a path needs at least two vertices")
    labels = [g.edge(u, v) for u, v in zip(path, path[1:])]
    return reduce(lambda a, b: tif_conjoin(conj, a, b), labels)


def combine_paths(
    g: TifEdgeGraph,
    paths: Iterable[Sequence[Hashable]],
    *,
    disj: DisjVariant,
    conj: ConjVariant = MIN_MAX_MAX,
) -> TifTriple:
    """Disjunction of several path values; the disjunction has no default on purpose."""
    values = [path_value(g, p, conj) for p in paths]
    if not values:
        raise ValueError("no paths to combine")
    return reduce(lambda a, b: tif_disjoin(disj, a, b), values)


SAMPLE_UNDIRECTED = NeutroAdjacency(
    (
        (0, 1, INDET, 0, INDET),
        (1, 0, INDET, 0, 0),
        (INDET, INDET, 0, 1, 1),
        (0, 0, 1, 0, 1),
        (INDET, 0, 1, 1, 0),
    ),
    directed=False,
)

SAMPLE_COGNITIVE_MAP = NeutroAdjacency(
    (
        (0, INDET, -1, 1, 1, 0, 0),
        (INDET, 0, INDET, 0, 0, 0, 0),
        (-1, INDET, 0, 0, INDET, 0, 0),
        (1, 0, 0, 0, 0, 0, 0),
        (1, 0, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, INDET, 0, -1),
        (-1, 0, 0, 0, 0, 0, 0),
    ),
    directed=True,
)
