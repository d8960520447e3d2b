"""The perfect-coloring predicate and the invariants of its quotient matrix.

A coloring F is perfect when every node of color i has the same number
S[i][j] of neighbors of color j, for all i, j. S is the quotient
matrix; its rows sum to 4. `check` decides the property, and the rest
of the module computes quantities that are forced once S is known:
walk counts, the stationary vector, node types, and the parity
refinement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional, Union

from .coloring import Lattice, PeriodicColoring, WindowColoring
from .grid import Vec2, neighbors, parity

QuotientMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Violation:
    """One node whose neighborhood contradicts the expected profile."""

    node: Vec2
    color: int
    expected: Optional[tuple[int, ...]]  # row of S, or None if no row applies
    observed: tuple[int, int, int, int]  # sorted colors of the 4 neighbors


class NotPerfectError(ValueError):
    def __init__(self, violation: Violation):
        self.violation = violation
        super().__init__(
            f"not a perfect coloring: node {violation.node} of color "
            f"{violation.color} sees {violation.observed}"
        )


class DetailedBalanceError(ValueError):
    """S admits no positive stationary vector (so S is not a grid quotient)."""


def profile(F: PeriodicColoring, v: Vec2) -> tuple[int, int, int, int]:
    """Colors of the 4 neighbors of v, sorted, with multiplicity."""
    a, b, c, d = (F.color_at(u) for u in neighbors(v))
    return tuple(sorted((a, b, c, d)))


def _counts(colors: tuple[int, ...], n: int) -> tuple[int, ...]:
    row = [0] * n
    for c in colors:
        row[c - 1] += 1
    return tuple(row)


@lru_cache(maxsize=None)
def check(F: PeriodicColoring) -> Union[QuotientMatrix, Violation]:
    """The quotient matrix of F, or the first violation in row-major order."""
    seen: dict[int, tuple[int, int, int, int]] = {}
    for v, c in F.cells():
        p = profile(F, v)
        ref = seen.setdefault(c, p)
        if p != ref:
            return Violation(node=v, color=c, expected=_counts(ref, F.n), observed=p)
    return tuple(_counts(seen[i], F.n) for i in range(1, F.n + 1))


def is_perfect(F: PeriodicColoring) -> bool:
    return not isinstance(check(F), Violation)


def quotient(F: PeriodicColoring) -> QuotientMatrix:
    """Like `check` but raises NotPerfectError instead of returning a Violation."""
    out = check(F)
    if isinstance(out, Violation):
        raise NotPerfectError(out)
    return out


def path_count(F: PeriodicColoring, v: Vec2, colors: tuple[int, ...]) -> int:
    """Number of walks v=v0,v1,..,vk with F(vi) = colors[i-1].

    For perfect F this equals the product of S entries along the color
    sequence, independently of which starting node of its color is
    picked.
    """
    if not colors:
        raise ValueError("need at least one step color")
    S = quotient(F)  # raises if not perfect
    del S

    def walk(u: Vec2, rest: tuple[int, ...]) -> int:
        if not rest:
            return 1
        want = rest[0]
        return sum(walk(w, rest[1:]) for w in neighbors(u) if F.color_at(w) == want)

    return walk(v, tuple(colors))


def _mat_mul(a: QuotientMatrix, b: QuotientMatrix) -> QuotientMatrix:
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def dk(S: QuotientMatrix, b: int, b2: int, k: int) -> int:
    """(S^k)[b][b2]: walks of length k from any b-node to b2-nodes."""
    if k < 0:
        raise ValueError("k must be >= 0")
    n = len(S)
    power: QuotientMatrix = tuple(
        tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
    )
    for _ in range(k):
        power = _mat_mul(power, S)
    return power[b - 1][b2 - 1]


def stationary(S: QuotientMatrix) -> tuple[Fraction, ...]:
    """The positive rationals P with S[i][j] P[i] = S[j][i] P[j], sum 1.

    Ratios propagate over a spanning tree of the color graph; every
    remaining edge is then checked, so an S that did not come from a
    perfect coloring of the grid is rejected rather than mis-solved.
    """
    n = len(S)
    for i in range(n):
        for j in range(n):
            if (S[i][j] > 0) != (S[j][i] > 0):
                raise DetailedBalanceError(
                    f"support is not symmetric at ({i + 1},{j + 1})"
                )
    weight: dict[int, Fraction] = {0: Fraction(1)}
    queue = [0]
    while queue:
        i = queue.pop()
        for j in range(n):
            if S[i][j] == 0:
                continue
            w = weight[i] * Fraction(S[i][j], S[j][i])
            if j not in weight:
                weight[j] = w
                queue.append(j)
            elif weight[j] != w:
                raise DetailedBalanceError(
                    f"inconsistent balance on edge ({i + 1},{j + 1})"
                )
    if len(weight) != n:
        missing = min(set(range(n)) - set(weight))
        raise DetailedBalanceError(f"color graph is disconnected at {missing + 1}")
    total = sum(weight.values())
    return tuple(weight[i] / total for i in range(n))


class NodeType(NamedTuple):
    """How many neighbors of two distinguished colors a node has."""

    k: int
    l: int


def node_type(F: PeriodicColoring, v: Vec2, a: int, b: int) -> NodeType:
    if a == b:
        raise ValueError("the two distinguished colors must differ")
    p = profile(F, v)
    return NodeType(p.count(a), p.count(b))


def is_bipartite(F: PeriodicColoring) -> bool:
    """True when each color lives entirely on one parity class."""
    lat = F.lattice
    # an odd-sum period drags every color class across both parities
    if (lat.w & 1) or ((lat.s + lat.h) & 1):
        return False
    par: dict[int, int] = {}
    for v, c in F.cells():
        p = parity(v)
        if par.setdefault(c, p) != p:
            return False
    return True


def _even_sublattice(lat: Lattice) -> Lattice:
    """The index-1-or-2 sublattice of even-coordinate-sum vectors."""
    b1, b2 = lat.basis
    p1 = (b1[0] + b1[1]) & 1
    p2 = (b2[0] + b2[1]) & 1
    if (p1, p2) == (0, 0):
        return lat
    if (p1, p2) == (1, 0):
        return Lattice.from_vectors((2 * b1[0], 2 * b1[1]), b2)
    if (p1, p2) == (0, 1):
        return Lattice.from_vectors(b1, (2 * b2[0], 2 * b2[1]))
    return Lattice.from_vectors((b1[0] + b2[0], b1[1] + b2[1]), (2 * b2[0], 2 * b2[1]))


def refine_bipartite(F: PeriodicColoring) -> PeriodicColoring:
    """Split every mixed-parity color into an even and an odd subcolor.

    Already-bipartite colorings come back unchanged. Otherwise the
    lattice may double, since odd-sum periods cannot survive the split.
    """
    if is_bipartite(F):
        return F
    base = F.rebase(_even_sublattice(F.lattice))
    mixed = set()
    par: dict[int, int] = {}
    for v, c in base.cells():
        p = parity(v)
        if par.setdefault(c, p) != p:
            mixed.add(c)
    ids: dict[tuple[int, int], int] = {}
    tokens: list[str] = []
    rows = []
    for y in range(base.lattice.h):
        row = []
        for x in range(base.lattice.w):
            c = base.rows[y][x]
            key = (c, parity((x, y)) if c in mixed else 0)
            if key not in ids:
                ids[key] = len(ids) + 1
                t = base.tokens[c - 1]
                tokens.append(t + ("_o" if key[1] else "_e") if c in mixed else t)
            row.append(ids[key])
        rows.append(tuple(row))
    if len(set(tokens)) != len(tokens):  # token clash, e.g. "1_e" already taken
        tokens = [str(i) for i in range(1, len(tokens) + 1)]
    return PeriodicColoring(base.lattice, tuple(rows), tuple(tokens))


def verify_window(W: WindowColoring, S: QuotientMatrix) -> tuple[Violation, ...]:
    """All interior nodes of W whose neighborhood contradicts S.

    A node counts as interior when itself and all 4 neighbors are
    inside the window and unmasked.
    """
    if W.width < 3 or W.height < 3:
        raise ValueError("window must be at least 3x3")
    n = len(S)
    out = []
    for v in W.nodes():
        c = W.get(v)
        if c is None:
            continue
        around = [W.get(u) for u in neighbors(v)]
        if any(a is None for a in around):
            continue
        observed = tuple(sorted(around))
        m = max(n, observed[-1])
        want = tuple(S[c - 1]) + (0,) * (m - n) if c <= n else None
        if want != _counts(observed, m):
            out.append(Violation(node=v, color=c, expected=want, observed=observed))
    return tuple(out)
