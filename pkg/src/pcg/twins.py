"""Twin colors, covering quotients, and the covering dichotomy.

Colors a, b are twins when S[a][j] = S[b][j] for every j outside
{a, b}; merging twins preserves perfectness. A covering is a perfect
coloring whose quotient is a symmetric {0,1}-matrix with zero
diagonal, i.e. the adjacency matrix of a simple target graph. For
coverings, either some pair of colors is twin or the coloring is an
orbit coloring; `dichotomy_audit` checks that alternative on a
concrete coloring.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .coloring import PeriodicColoring
from .grid import Vec2
from .perfect import QuotientMatrix, quotient

# Offsets at which a covering without equal rows never repeats a color:
# distance 1 and 2 along rows/columns/diagonals.
NEAR_OFFSETS: tuple[Vec2, ...] = (
    (0, 1), (0, -1), (1, 0), (-1, 0),
    (1, 1), (1, -1), (-1, 1), (-1, -1),
    (0, 2), (0, -2), (2, 0), (-2, 0),
    (2, 2), (2, -2), (-2, 2), (-2, -2),
)


@dataclass(frozen=True)
class TargetGraph:
    """The simple graph a covering maps onto; vertices are the colors."""

    adjacency: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.adjacency)

    def degree(self, v: int) -> int:
        return sum(self.adjacency[v - 1])


class TwinMergeError(ValueError):
    def __init__(self, a: int, b: int, column: int):
        self.column = column
        super().__init__(
            f"colors {a} and {b} are not twins: rows differ in column {column}"
        )


def twin_pairs(S: QuotientMatrix) -> tuple[tuple[int, int], ...]:
    """All pairs {a,b} with S[a][j] = S[b][j] for every j outside {a,b}."""
    n = len(S)
    out = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if all(
                S[a - 1][j - 1] == S[b - 1][j - 1]
                for j in range(1, n + 1)
                if j not in (a, b)
            ):
                out.append((a, b))
    return tuple(out)


def equal_rows(S: QuotientMatrix) -> tuple[tuple[int, int], ...]:
    n = len(S)
    return tuple(
        (a, b)
        for a in range(1, n + 1)
        for b in range(a + 1, n + 1)
        if S[a - 1] == S[b - 1]
    )


def merge(F: PeriodicColoring, a: int, b: int) -> PeriodicColoring:
    """Recolor b-nodes to a and renumber; valid only for twin colors."""
    S = quotient(F)
    n = F.n
    if not (1 <= a <= n and 1 <= b <= n) or a == b:
        raise ValueError(f"need two distinct colors in 1..{n}")
    lo, hi = min(a, b), max(a, b)
    for j in range(1, n + 1):
        if j not in (a, b) and S[a - 1][j - 1] != S[b - 1][j - 1]:
            raise TwinMergeError(a, b, j)

    def renum(c: int) -> int:
        if c == hi:
            c = lo
        return c - 1 if c > hi else c

    rows = tuple(tuple(renum(c) for c in row) for row in F.rows)
    tokens = tuple(t for i, t in enumerate(F.tokens, start=1) if i != hi)
    return PeriodicColoring(F.lattice, rows, tokens)


def covering_failure(S: QuotientMatrix) -> Optional[str]:
    """Why S is not a covering quotient, or None if it is one."""
    n = len(S)
    for i in range(n):
        if S[i][i]:
            return f"diagonal entry at color {i + 1}"
        for j in range(n):
            if S[i][j] > 1:
                return f"entry {S[i][j]} > 1 at ({i + 1},{j + 1})"
    for i in range(n):
        for j in range(n):
            if S[i][j] != S[j][i]:
                return f"support is not symmetric at ({i + 1},{j + 1})"
    return None


def covering_target(S: QuotientMatrix) -> Optional[TargetGraph]:
    """The target graph when S is its adjacency matrix, else None."""
    if covering_failure(S) is not None:
        return None
    return TargetGraph(tuple(tuple(row) for row in S))


class NearDistinctnessPreconditionError(ValueError):
    """The coloring is not a covering without equal rows."""


def near_distinctness(
    F: PeriodicColoring,
) -> tuple[bool, Optional[tuple[Vec2, Vec2]]]:
    """Whether no node shares its color with any node at a NEAR_OFFSETS shift.

    Only meaningful for coverings without equal rows, where it always
    holds; the precondition is enforced. Returns (True, None) or
    (False, (node, offset)) with the first counterexample.
    """
    S = quotient(F)
    if covering_target(S) is None:
        raise NearDistinctnessPreconditionError("quotient is not a covering")
    if equal_rows(S):
        raise NearDistinctnessPreconditionError("quotient has equal rows")
    for v, c in F.cells():
        for dx, dy in NEAR_OFFSETS:
            if F.color_at((v[0] + dx, v[1] + dy)) == c:
                return False, (v, (dx, dy))
    return True, None


@dataclass(frozen=True)
class DichotomyReport:
    is_covering: bool
    twin_pairs: tuple[tuple[int, int], ...]
    is_orbit: bool
    dichotomy_holds: bool

    def to_json_dict(self) -> dict:
        return {
            "covering": self.is_covering,
            "twins": [list(p) for p in self.twin_pairs],
            "orbit": self.is_orbit,
            "dichotomy": self.dichotomy_holds,
        }


def dichotomy_audit(F: PeriodicColoring) -> DichotomyReport:
    """For coverings: either twins exist or the coloring is orbit.

    Other perfect colorings satisfy the dichotomy vacuously; the report
    still carries their twin pairs and orbit-ness.
    """
    from .orbits import is_orbit  # local import, orbits also uses this module's types

    S = quotient(F)
    covering = covering_target(S) is not None
    twins = twin_pairs(S)
    orbit = is_orbit(F)
    return DichotomyReport(
        is_covering=covering,
        twin_pairs=twins,
        is_orbit=orbit,
        dichotomy_holds=(not covering) or orbit or bool(twins),
    )
