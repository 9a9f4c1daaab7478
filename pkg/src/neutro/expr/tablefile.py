"""Plain-text files for sub-indeterminacy tables, prevalence orders and adjacency matrices."""

from __future__ import annotations

from pathlib import Path

from ..graph import NeutroAdjacency
from ..indeterminacy import SubIndTable
from ..literal import PrevalenceOrder


def load_subind(path) -> SubIndTable:
    return SubIndTable.from_text(Path(path).read_text())


def save_subind(path, table: SubIndTable) -> None:
    Path(path).write_text(table.to_text())


def load_order(path) -> PrevalenceOrder:
    lines = [ln.strip() for ln in Path(path).read_text().splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) != 1:
        raise ValueError("an order file holds exactly one chain line")
    return PrevalenceOrder.parse(lines[0])


def save_order(path, order: PrevalenceOrder) -> None:
    Path(path).write_text(str(order) + "\n")


def load_adjacency(path, strict: bool = True) -> NeutroAdjacency:
    return NeutroAdjacency.from_text(Path(path).read_text(), strict=strict)


def save_adjacency(path, m: NeutroAdjacency) -> None:
    Path(path).write_text(m.render())
