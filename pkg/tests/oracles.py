"""Independent reference computations used to freeze expected values.

Nothing here imports the package; each oracle recomputes a result from first
principles with plain Python data (strings, sets, Fractions).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

# -- absorbance products ------------------------------------------------------


def absorbance_product(chain: list[str], x: dict, y: dict) -> dict:
    """Expand (sum x)(sum y); key '' is the scalar unit, literal products keep the earlier chain entry."""
    out: dict = {}
    for (u, cu), (v, cv) in product(x.items(), y.items()):
        if u == "":
            key = v
        elif v == "":
            key = u
        else:
            key = u if chain.index(u) <= chain.index(v) else v
        out[key] = out.get(key, 0) + Fraction(cu) * Fraction(cv)
    return {k: c for k, c in out.items() if c != 0}


def count_terms(x: dict, y: dict) -> int:
    return len(x) * len(y)


# -- Venn-region sub-indeterminacies --------------------------------------------

ATOMS = [(True, True), (True, False), (False, True), (False, False)]  # (T holds, F holds)

VENN_PREDICATES = [
    lambda t, f: t and f,
    lambda t, f: t or f,
    lambda t, f: t != f,
    lambda t, f: not t and not f,
    lambda t, f: not t or not f,
    lambda t, f: (not t) and t,
]


def venn_table() -> list[list[int]]:
    regions = [frozenset(a for a in ATOMS if p(*a)) for p in VENN_PREDICATES]
    table = []
    for rj in regions:
        row = []
        for rk in regions:
            meet = rj & rk
            row.append(1 + regions.index(meet))
        table.append(row)
    return table


# -- cyclic hypercomplex product ----------------------------------------------


def cyclic_convolution(u: list, v: list) -> list:
    n = len(u)
    return [sum(u[j] * v[(m - j) % n] for j in range(n)) for m in range(n)]


# -- contradiction degree -----------------------------------------------------


def d2(a, b) -> float:
    return sum(abs(p - q) for p, q in zip(a, b)) / 3
