"""Built-in corpus of reference colorings plus small generators.

Each fixture is stored as PCG text together with its expected quotient
matrix and classification flags.  `get` returns the coloring with colors
renumbered in sorted-token order, so color i of the returned object
corresponds to row i of the stored quotient.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import Lattice, PeriodicColoring, parse

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Fixture:
    """One corpus entry: source text plus expected analysis results."""

    fixture_id: str
    text: str
    quotient: Matrix
    covering: bool
    orbit: bool
    twins: tuple[tuple[int, int], ...]

    @property
    def colors(self) -> int:
        return len(self.quotient)


def _text(p1: str, p2: str, rows: list[list[object]]) -> str:
    body = "\n".join(" ".join(str(c) for c in row) for row in rows)
    return f"# pcg v1\nperiods {p1} {p2}\n{body}\n"


_RAW: dict[str, str] = {
    "b": _text("(8,0)", "(4,4)", [
        [4, 7, 4, 2, 6, 8, 6, 3],
        [7, 9, 7, 5, 8, 10, 8, 5],
        [4, 7, 4, 3, 6, 8, 6, 2],
        [3, 5, 2, 1, 2, 5, 3, 1],
    ]),
    "c": _text("(4,0)", "(0,4)", [
        [5, 10, 5, 9],
        [1, 6, 2, 4],
        [3, 7, 3, 8],
        [2, 6, 1, 4],
    ]),
    "d": _text("(4,0)", "(0,8)", [
        [1, 7, 2, 8],
        [6, 3, 6, 3],
        [2, 8, 1, 7],
        [9, 5, 9, 4],
        [1, 8, 2, 7],
        [6, 3, 6, 3],
        [2, 7, 1, 8],
        [9, 4, 9, 5],
    ]),
    "e": _text("(6,0)", "(0,6)", [
        [6, 4, 7, 3, 8, 2],
        [4, 5, 4, 8, 1, 8],
        [7, 4, 6, 2, 8, 3],
        [2, 8, 3, 7, 4, 6],
        [8, 1, 8, 4, 5, 4],
        [3, 8, 2, 6, 4, 7],
    ]),
    "f": _text("(6,0)", "(0,6)", [
        [8, 5, 7, 3, 10, 2],
        [4, 6, 4, 9, 1, 9],
        [7, 5, 8, 2, 10, 3],
        [2, 10, 3, 7, 5, 8],
        [9, 1, 9, 4, 6, 4],
        [3, 10, 2, 8, 5, 7],
    ]),
    "g": _text("(6,0)", "(0,6)", [
        [10, 5, 10, 3, 8, 2],
        [5, 9, 5, 11, 1, 11],
        [10, 5, 10, 2, 8, 3],
        [2, 11, 3, 7, 4, 7],
        [8, 1, 8, 4, 6, 4],
        [3, 11, 2, 7, 4, 7],
    ]),
    "h": _text("(2,2)", "(2,-2)", [
        [1, 6, 3, 5],
        [7, 2, 8, 4],
    ]),
    "i": _text("(4,0)", "(0,4)", [
        [1, 4, 7, 5],
        [3, 2, 5, 7],
        [8, 6, 1, 4],
        [6, 8, 3, 2],
    ]),
    "II-base": _text("(4,0)", "(0,4)", [
        [4, 1, 4, 1],
        [2, 4, 3, 4],
        [4, 1, 4, 1],
        [3, 4, 2, 4],
    ]),
    "V-a": _text("(8,0)", "(4,4)", [
        [4, 6, 7, 5, 4, 5, 7, 6],
        [5, 8, 2, 9, 6, 8, 1, 9],
        [7, 1, 3, 1, 7, 2, 3, 2],
        [6, 9, 2, 8, 5, 9, 1, 8],
    ]),
    "V-b": _text("(8,0)", "(4,4)", [
        [6, 9, 6, 1, 8, 10, 8, 2],
        [9, 4, 9, 7, 10, 5, 10, 7],
        [6, 9, 6, 2, 8, 10, 8, 1],
        [2, 7, 1, 3, 1, 7, 2, 3],
    ]),
    "VIb-iii": _text("(6,0)", "(0,6)", [
        [9, 6, 9, 2, 8, 1],
        [5, 4, 5, 7, 3, 7],
        [9, 6, 9, 1, 8, 2],
        [1, 8, 2, 9, 6, 9],
        [7, 3, 7, 5, 4, 5],
        [2, 8, 1, 9, 6, 9],
    ]),
    "VIb-iv": _text("(6,0)", "(0,6)", [
        [10, 6, 9, 2, 8, 1],
        [5, 4, 5, 7, 3, 7],
        [9, 6, 10, 1, 8, 2],
        [1, 8, 2, 9, 6, 10],
        [7, 3, 7, 5, 4, 5],
        [2, 8, 1, 10, 6, 9],
    ]),
    "VIb-v": _text("(6,0)", "(0,6)", [
        [11, 7, 11, 2, 8, 1],
        [7, 5, 7, 9, 3, 9],
        [11, 7, 11, 1, 8, 2],
        [1, 9, 2, 10, 6, 10],
        [8, 3, 8, 6, 4, 6],
        [2, 9, 1, 10, 6, 10],
    ]),
    "L1-a": _text("(4,0)", "(0,4)", [
        ["7", "G", "5", "H"],
        ["E", "4", "B", "1"],
        ["6", "A", "0", "C"],
        ["F", "3", "D", "2"],
    ]),
    "L1-b": _text("(4,0)", "(0,8)", [
        ["7", "H", "5", "G"],
        ["E", "4", "B", "1"],
        ["6", "A", "0", "C"],
        ["F", "3", "D", "2"],
        ["7", "G", "5", "H"],
        ["E", "1", "B", "4"],
        ["6", "C", "0", "A"],
        ["F", "2", "D", "3"],
    ]),
    "3-17-2": _text("(4,0)", "(0,6)", [
        [1, 3, 3, 2],
        [1, 3, 3, 2],
        [2, 2, 1, 1],
        [3, 1, 2, 3],
        [3, 1, 2, 3],
        [2, 2, 1, 1],
    ]),
    "3-17-3": _text("(4,0)", "(0,6)", [
        [1, 3, 3, 2],
        [1, 2, 1, 2],
        [3, 2, 1, 3],
        [3, 1, 2, 3],
        [2, 1, 2, 1],
        [2, 3, 3, 1],
    ]),
    "8-150-1": _text("(4,0)", "(0,4)", [
        [1, 6, 6, 7],
        [5, 7, 1, 5],
        [4, 2, 8, 4],
        [8, 3, 3, 2],
    ]),
    "8-150-2": _text("(4,0)", "(0,4)", [
        [1, 7, 2, 8],
        [5, 5, 4, 4],
        [7, 1, 8, 2],
        [6, 6, 3, 3],
    ]),
}

_QUOTIENTS: dict[str, Matrix] = {
    "b": (
        (0, 2, 2, 0, 0, 0, 0, 0, 0, 0),
        (1, 0, 0, 1, 1, 1, 0, 0, 0, 0),
        (1, 0, 0, 1, 1, 1, 0, 0, 0, 0),
        (0, 1, 1, 0, 0, 0, 2, 0, 0, 0),
        (0, 1, 1, 0, 0, 0, 1, 1, 0, 0),
        (0, 1, 1, 0, 0, 0, 0, 2, 0, 0),
        (0, 0, 0, 2, 1, 0, 0, 0, 1, 0),
        (0, 0, 0, 0, 1, 2, 0, 0, 0, 1),
        (0, 0, 0, 0, 0, 0, 4, 0, 0, 0),
        (0, 0, 0, 0, 0, 0, 0, 4, 0, 0),
    ),
    "c": (
        (0, 0, 1, 1, 1, 1, 0, 0, 0, 0),
        (0, 0, 1, 1, 1, 1, 0, 0, 0, 0),
        (1, 1, 0, 0, 0, 0, 1, 1, 0, 0),
        (1, 1, 0, 0, 0, 0, 0, 1, 1, 0),
        (1, 1, 0, 0, 0, 0, 0, 0, 1, 1),
        (1, 1, 0, 0, 0, 0, 1, 0, 0, 1),
        (0, 0, 2, 0, 0, 2, 0, 0, 0, 0),
        (0, 0, 2, 2, 0, 0, 0, 0, 0, 0),
        (0, 0, 0, 2, 2, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 2, 2, 0, 0, 0, 0),
    ),
    "d": (
        (0, 0, 0, 0, 0, 1, 1, 1, 1),
        (0, 0, 0, 0, 0, 1, 1, 1, 1),
        (0, 0, 0, 0, 0, 2, 1, 1, 0),
        (0, 0, 0, 0, 0, 0, 2, 0, 2),
        (0, 0, 0, 0, 0, 0, 0, 2, 2),
        (1, 1, 2, 0, 0, 0, 0, 0, 0),
        (1, 1, 1, 1, 0, 0, 0, 0, 0),
        (1, 1, 1, 0, 1, 0, 0, 0, 0),
        (1, 1, 0, 1, 1, 0, 0, 0, 0),
    ),
    "e": (
        (0, 0, 0, 0, 0, 0, 0, 4),
        (0, 0, 0, 0, 0, 1, 1, 2),
        (0, 0, 0, 0, 0, 1, 1, 2),
        (0, 0, 0, 0, 1, 1, 1, 1),
        (0, 0, 0, 4, 0, 0, 0, 0),
        (0, 1, 1, 2, 0, 0, 0, 0),
        (0, 1, 1, 2, 0, 0, 0, 0),
        (1, 1, 1, 1, 0, 0, 0, 0),
    ),
    "f": (
        (0, 0, 0, 0, 0, 0, 0, 0, 2, 2),
        (0, 0, 0, 0, 0, 0, 1, 1, 1, 1),
        (0, 0, 0, 0, 0, 0, 1, 1, 1, 1),
        (0, 0, 0, 0, 0, 1, 1, 1, 1, 0),
        (0, 0, 0, 0, 0, 1, 1, 1, 0, 1),
        (0, 0, 0, 2, 2, 0, 0, 0, 0, 0),
        (0, 1, 1, 1, 1, 0, 0, 0, 0, 0),
        (0, 1, 1, 1, 1, 0, 0, 0, 0, 0),
        (1, 1, 1, 1, 0, 0, 0, 0, 0, 0),
        (1, 1, 1, 0, 1, 0, 0, 0, 0, 0),
    ),
    "g": (
        (0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 2),
        (0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1),
        (0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1),
        (0, 0, 0, 0, 0, 1, 2, 1, 0, 0, 0),
        (0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 1),
        (0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0),
        (0, 1, 1, 2, 0, 0, 0, 0, 0, 0, 0),
        (1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0),
        (0, 1, 1, 0, 2, 0, 0, 0, 0, 0, 0),
        (1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0),
    ),
    "h": (
        (0, 0, 0, 0, 1, 1, 1, 1),
        (0, 0, 0, 0, 1, 1, 1, 1),
        (0, 0, 0, 0, 1, 1, 1, 1),
        (0, 0, 0, 0, 1, 1, 1, 1),
        (1, 1, 1, 1, 0, 0, 0, 0),
        (1, 1, 1, 1, 0, 0, 0, 0),
        (1, 1, 1, 1, 0, 0, 0, 0),
        (1, 1, 1, 1, 0, 0, 0, 0),
    ),
    "i": (
        (0, 0, 1, 1, 1, 1, 0, 0),
        (0, 0, 1, 1, 1, 1, 0, 0),
        (1, 1, 0, 0, 0, 0, 1, 1),
        (1, 1, 0, 0, 0, 0, 1, 1),
        (1, 1, 0, 0, 0, 0, 2, 0),
        (1, 1, 0, 0, 0, 0, 0, 2),
        (0, 0, 1, 1, 2, 0, 0, 0),
        (0, 0, 1, 1, 0, 2, 0, 0),
    ),
    "II-base": (
        (0, 0, 0, 4),
        (0, 0, 0, 4),
        (0, 0, 0, 4),
        (2, 1, 1, 0),
    ),
    "V-a": (
        (0, 0, 1, 0, 0, 0, 1, 1, 1),
        (0, 0, 1, 0, 0, 0, 1, 1, 1),
        (2, 2, 0, 0, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 2, 2, 0, 0, 0),
        (0, 0, 0, 1, 0, 0, 1, 1, 1),
        (0, 0, 0, 1, 0, 0, 1, 1, 1),
        (1, 1, 0, 0, 1, 1, 0, 0, 0),
        (1, 1, 0, 0, 1, 1, 0, 0, 0),
        (1, 1, 0, 0, 1, 1, 0, 0, 0),
    ),
    "V-b": (
        (0, 0, 1, 0, 0, 1, 1, 1, 0, 0),
        (0, 0, 1, 0, 0, 1, 1, 1, 0, 0),
        (2, 2, 0, 0, 0, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 0, 0, 0, 0, 4, 0),
        (0, 0, 0, 0, 0, 0, 0, 0, 0, 4),
        (1, 1, 0, 0, 0, 0, 0, 0, 2, 0),
        (1, 1, 0, 0, 0, 0, 0, 0, 1, 1),
        (1, 1, 0, 0, 0, 0, 0, 0, 0, 2),
        (0, 0, 0, 1, 0, 2, 1, 0, 0, 0),
        (0, 0, 0, 0, 1, 0, 1, 2, 0, 0),
    ),
    "VIb-iii": (
        (0, 0, 0, 0, 0, 0, 1, 1, 2),
        (0, 0, 0, 0, 0, 0, 1, 1, 2),
        (0, 0, 0, 0, 0, 0, 2, 2, 0),
        (0, 0, 0, 0, 2, 2, 0, 0, 0),
        (0, 0, 0, 1, 0, 0, 1, 0, 2),
        (0, 0, 0, 1, 0, 0, 0, 1, 2),
        (1, 1, 1, 0, 1, 0, 0, 0, 0),
        (1, 1, 1, 0, 0, 1, 0, 0, 0),
        (1, 1, 0, 0, 1, 1, 0, 0, 0),
    ),
    "VIb-iv": (
        (0, 0, 0, 0, 0, 0, 1, 1, 1, 1),
        (0, 0, 0, 0, 0, 0, 1, 1, 1, 1),
        (0, 0, 0, 0, 0, 0, 2, 2, 0, 0),
        (0, 0, 0, 0, 2, 2, 0, 0, 0, 0),
        (0, 0, 0, 1, 0, 0, 1, 0, 1, 1),
        (0, 0, 0, 1, 0, 0, 0, 1, 1, 1),
        (1, 1, 1, 0, 1, 0, 0, 0, 0, 0),
        (1, 1, 1, 0, 0, 1, 0, 0, 0, 0),
        (1, 1, 0, 0, 1, 1, 0, 0, 0, 0),
        (1, 1, 0, 0, 1, 1, 0, 0, 0, 0),
    ),
    "VIb-v": (
        (0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1),
        (0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1),
        (0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0),
        (0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0),
        (0, 0, 0, 1, 0, 0, 0, 1, 0, 2, 0),
        (0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 2),
        (1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0),
        (1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0),
        (1, 1, 0, 0, 0, 2, 0, 0, 0, 0, 0),
        (1, 1, 0, 0, 0, 0, 2, 0, 0, 0, 0),
    ),
    "L1-a": (
        (0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0),
        (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 1),
        (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1),
        (0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1, 0),
        (0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 0),
        (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1),
        (0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 0, 0),
        (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1),
        (1, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
        (1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
        (1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
        (1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
        (0, 1, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0),
        (0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0),
        (0, 0, 0, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
        (0, 1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    ),
    "L1-b": (
        (0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0),
        (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1, 0),
        (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1),
        (0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1, 0),
        (0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 0, 1),
        (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1),
        (0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 0, 0),
        (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1),
        (1, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
        (1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
        (1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
        (1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
        (0, 1, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0),
        (0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0),
        (0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
        (0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    ),
    "3-17-2": ((1, 2, 1), (2, 1, 1), (1, 1, 2)),
    "3-17-3": ((1, 2, 1), (2, 1, 1), (1, 1, 2)),
    "8-150-1": (
        (0, 0, 0, 0, 1, 1, 1, 1),
        (0, 0, 1, 1, 0, 0, 1, 1),
        (0, 1, 1, 0, 0, 1, 0, 1),
        (0, 1, 0, 1, 1, 0, 0, 1),
        (1, 0, 0, 1, 1, 0, 1, 0),
        (1, 0, 1, 0, 0, 1, 1, 0),
        (1, 1, 0, 0, 1, 1, 0, 0),
        (1, 1, 1, 1, 0, 0, 0, 0),
    ),
    "8-150-2": (
        (0, 0, 0, 0, 1, 1, 1, 1),
        (0, 0, 1, 1, 0, 0, 1, 1),
        (0, 1, 1, 0, 0, 1, 0, 1),
        (0, 1, 0, 1, 1, 0, 0, 1),
        (1, 0, 0, 1, 1, 0, 1, 0),
        (1, 0, 1, 0, 0, 1, 1, 0),
        (1, 1, 0, 0, 1, 1, 0, 0),
        (1, 1, 1, 1, 0, 0, 0, 0),
    ),
}

# covering flag, orbit flag, twin pairs (sorted-token color space)
_FLAGS: dict[str, tuple[bool, bool, tuple[tuple[int, int], ...]]] = {
    "b": (False, True, ((2, 3),)),
    "c": (False, True, ((1, 2),)),
    "d": (False, True, ((1, 2),)),
    "e": (False, False, ((2, 3), (6, 7))),
    "f": (False, True, ((2, 3), (7, 8))),
    "g": (False, True, ((2, 3),)),
    "h": (True, True, ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
                      (5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8))),
    "i": (False, False, ((1, 2), (3, 4))),
    "II-base": (False, True, ((1, 2), (1, 3), (2, 3))),
    "V-a": (False, True, ((1, 2), (5, 6), (7, 8), (7, 9), (8, 9))),
    "V-b": (False, True, ((1, 2),)),
    "VIb-iii": (False, False, ((1, 2),)),
    "VIb-iv": (False, True, ((1, 2), (9, 10))),
    "VIb-v": (False, True, ((1, 2),)),
    "L1-a": (True, True, ()),
    "L1-b": (True, True, ()),
    "3-17-2": (False, False, ((1, 2),)),
    "3-17-3": (False, False, ((1, 2),)),
    "8-150-1": (False, False, ()),
    "8-150-2": (False, True, ()),
}

FIXTURES: dict[str, Fixture] = {
    fid: Fixture(fid, _RAW[fid], _QUOTIENTS[fid], *_FLAGS[fid]) for fid in _RAW
}


def fixture_ids() -> tuple[str, ...]:
    return tuple(FIXTURES)


def info(fixture_id: str) -> Fixture:
    try:
        return FIXTURES[fixture_id]
    except KeyError:
        raise KeyError(f"unknown fixture {fixture_id!r}") from None


def get(fixture_id: str) -> PeriodicColoring:
    """Parse a fixture, with colors renumbered in sorted-token order."""
    return parse(info(fixture_id).text).relabel_sorted_tokens()


def checkerboard() -> PeriodicColoring:
    return PeriodicColoring(Lattice(2, 1, 1), ((1, 2),))


def constant() -> PeriodicColoring:
    return PeriodicColoring(Lattice(1, 0, 1), ((1,),))


def stripes(k: int) -> PeriodicColoring:
    """Vertical one-wide stripes, k colors cyclic in x."""
    if k < 1:
        raise ValueError("k must be positive")
    return PeriodicColoring(Lattice(k, 0, 1), (tuple(range(1, k + 1)),))


def sheared_stripes(alpha: int) -> PeriodicColoring:
    """F(x, y) = ((x - 3y) mod alpha) + 1 with periods (alpha,0) and (3,1).

    Small alpha make the four neighbor offsets collide modulo alpha, which
    collapses distinct rows, so those parameters are rejected.
    """
    if alpha < 5 or alpha == 6:
        raise ValueError("alpha must be 5 or at least 7")
    return PeriodicColoring(
        Lattice(alpha, 3 % alpha, 1), (tuple(range(1, alpha + 1)),)
    )
