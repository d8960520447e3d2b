"""Periodic colorings of the square grid and their normal forms.

A coloring is stored as a period lattice in Hermite normal form
``[[w,0],[s,h]]`` together with the colors of its w x h fundamental
domain. Colors are integers 1..n; the token each color wore in its
source text is kept alongside so files round-trip.

The text format (PCG v1):

    # pcg v1
    periods (p1x,p1y) (p2x,p2y)
    <h rows of w whitespace-separated tokens, [A-Za-z0-9_]+>

Row r, column c of the cell block is node (c, r): x grows rightward,
y grows downward, the first row is y=0. Lines starting with ``#``
after the first are comments.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional

from .grid import GridAutomorphism, Mat2, Vec2, d4_elements, mat_apply

TOKEN_RE = re.compile(r"[A-Za-z0-9_]+\Z")
_HEADER = "# pcg v1"
_PERIODS_RE = re.compile(
    r"periods\s+\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s+\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*\Z"
)


class PcgParseError(ValueError):
    """Raised when PCG text is malformed."""


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True, order=True)
class Lattice:
    """A rank-2 sublattice of Z^2 in Hermite normal form.

    Basis vectors are (w, 0) and (s, h) with w > 0, h > 0, 0 <= s < w.
    The index in Z^2 is w*h and the fundamental domain is the block
    {(x, y) : 0 <= x < w, 0 <= y < h}.
    """

    w: int
    s: int
    h: int

    def __post_init__(self) -> None:
        if self.w < 1 or self.h < 1 or not 0 <= self.s < self.w:
            raise ValueError(f"not a normal form: w={self.w} s={self.s} h={self.h}")

    @classmethod
    def from_vectors(cls, *vectors: Vec2) -> Lattice:
        """The lattice generated by the given vectors (must span rank 2)."""
        # Carrier (cx, g): a member of the lattice whose y-part is the
        # running gcd of all y-parts seen so far.
        cx, g = 0, 0
        for x, y in vectors:
            g2, u, v = _ext_gcd(g, y)
            cx, g = u * cx + v * x, g2
        if g == 0:
            raise ValueError("degenerate lattice: rank < 2")
        w = 0
        for x, y in vectors:
            k = y // g  # exact: g divides every y
            w = _ext_gcd(w, x - k * cx)[0]
        if w == 0:
            raise ValueError("degenerate lattice: rank < 2")
        return cls(w=w, s=cx % w, h=g)

    @property
    def index(self) -> int:
        return self.w * self.h

    @property
    def basis(self) -> tuple[Vec2, Vec2]:
        return ((self.w, 0), (self.s, self.h))

    def contains(self, v: Vec2) -> bool:
        x, y = v
        if y % self.h:
            return False
        return (x - (y // self.h) * self.s) % self.w == 0

    def reduce(self, v: Vec2) -> Vec2:
        """The fundamental-domain representative of v's coset."""
        x, y = v
        k = y // self.h
        return ((x - k * self.s) % self.w, y - k * self.h)

    def domain(self) -> Iterator[Vec2]:
        for y in range(self.h):
            for x in range(self.w):
                yield (x, y)

    def transform(self, m: Mat2) -> Lattice:
        b1, b2 = self.basis
        return Lattice.from_vectors(mat_apply(m, b1), mat_apply(m, b2))


@dataclass(frozen=True)
class PeriodicColoring:
    """A coloring of Z^2 fixed by every translation in `lattice`.

    `rows[y][x]` is the color of node (x, y) of the fundamental domain;
    colors are exactly 1..n with every color used. `tokens[i-1]` is the
    spelling of color i in text form (defaults to "1".."n").
    """

    lattice: Lattice
    rows: tuple[tuple[int, ...], ...]
    tokens: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        lat = self.lattice
        if len(self.rows) != lat.h or any(len(r) != lat.w for r in self.rows):
            raise ValueError("cell block does not match the lattice dimensions")
        used = set()
        for row in self.rows:
            used.update(row)
        n = max(used)
        if min(used) < 1 or len(used) != n:
            raise ValueError("colors must be exactly 1..n, all used")
        tokens = self.tokens or tuple(str(i) for i in range(1, n + 1))
        if len(tokens) != n or len(set(tokens)) != n:
            raise ValueError(f"need {n} distinct tokens, got {tokens!r}")
        if not all(TOKEN_RE.match(t) for t in tokens):
            raise ValueError("tokens must match [A-Za-z0-9_]+")
        object.__setattr__(self, "tokens", tokens)

    @property
    def n(self) -> int:
        return len(self.tokens)

    def color_at(self, v: Vec2) -> int:
        x, y = v
        lat = self.lattice
        k = y // lat.h
        return self.rows[y - k * lat.h][(x - k * lat.s) % lat.w]

    def token_at(self, v: Vec2) -> str:
        return self.tokens[self.color_at(v) - 1]

    def cells(self) -> Iterator[tuple[Vec2, int]]:
        """Fundamental-domain nodes with their colors, row-major."""
        for y, row in enumerate(self.rows):
            for x, c in enumerate(row):
                yield (x, y), c

    def counts(self) -> tuple[int, ...]:
        out = [0] * self.n
        for row in self.rows:
            for c in row:
                out[c - 1] += 1
        return tuple(out)

    def densities(self) -> tuple[Fraction, ...]:
        """Fraction of the plane in each color; exact, sums to 1."""
        idx = self.lattice.index
        return tuple(Fraction(k, idx) for k in self.counts())

    def translate(self, t: Vec2) -> PeriodicColoring:
        """The coloring v -> F(v - t) (the picture moved by +t)."""
        tx, ty = t
        rows = tuple(
            tuple(self.color_at((x - tx, y - ty)) for x in range(self.lattice.w))
            for y in range(self.lattice.h)
        )
        return PeriodicColoring(self.lattice, rows, self.tokens)

    def transform(self, aut: GridAutomorphism) -> PeriodicColoring:
        """The coloring v -> F(aut^-1(v)); the lattice follows the point part."""
        b1, b2 = self.lattice.basis
        lat = Lattice.from_vectors(mat_apply(aut.point, b1), mat_apply(aut.point, b2))
        inv = aut.inverse()
        rows = tuple(
            tuple(self.color_at(inv.apply((x, y))) for x in range(lat.w))
            for y in range(lat.h)
        )
        return PeriodicColoring(lat, rows, self.tokens)

    def relabel(self, perm: dict[int, int]) -> PeriodicColoring:
        """Apply a color permutation; tokens travel with their colors."""
        n = self.n
        if sorted(perm) != list(range(1, n + 1)) or sorted(perm.values()) != list(
            range(1, n + 1)
        ):
            raise ValueError("perm must be a bijection on 1..n")
        rows = tuple(tuple(perm[c] for c in row) for row in self.rows)
        tokens = [""] * n
        for old, new in perm.items():
            tokens[new - 1] = self.tokens[old - 1]
        return PeriodicColoring(self.lattice, rows, tuple(tokens))

    def relabel_first_occurrence(self) -> PeriodicColoring:
        perm: dict[int, int] = {}
        for _, c in self.cells():
            if c not in perm:
                perm[c] = len(perm) + 1
        return self.relabel(perm)

    def relabel_sorted_tokens(self) -> PeriodicColoring:
        """Renumber colors into sorted token order, numerals first by value."""

        def key(t: str) -> tuple[int, int, str]:
            return (0, int(t), t) if t.isdigit() else (1, 0, t)

        ranked = sorted(self.tokens, key=key)
        perm = {self.tokens.index(t) + 1: i + 1 for i, t in enumerate(ranked)}
        return self.relabel(perm)

    def rebase(self, lat: Lattice) -> PeriodicColoring:
        """Re-express on another lattice whose basis vectors are periods."""
        cells = tuple(self.cells())
        for bx, by in lat.basis:
            for (x, y), c in cells:
                if self.color_at((x + bx, y + by)) != c:
                    raise ValueError(f"({bx},{by}) is not a period of the coloring")
        rows = tuple(
            tuple(self.color_at((x, y)) for x in range(lat.w)) for y in range(lat.h)
        )
        return PeriodicColoring(lat, rows, self.tokens)

    def window(self, origin: Vec2, width: int, height: int) -> WindowColoring:
        if width < 1 or height < 1:
            raise ValueError("window must be at least 1x1")
        ox, oy = origin
        cells = tuple(
            tuple(self.color_at((ox + c, oy + r)) for c in range(width))
            for r in range(height)
        )
        return WindowColoring(origin, width, height, cells)

    def to_json_dict(self) -> dict:
        return {
            "periods": [list(b) for b in self.lattice.basis],
            "rows": [[self.tokens[c - 1] for c in row] for row in self.rows],
        }


@dataclass(frozen=True)
class WindowColoring:
    """A finite rectangle of colors; None marks an unknown cell.

    Used for experiments that break periodicity, where only nodes whose
    whole neighborhood is known can be verified.
    """

    origin: Vec2
    width: int
    height: int
    cells: tuple[tuple[Optional[int], ...], ...]

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1:
            raise ValueError("window must be at least 1x1")
        if len(self.cells) != self.height or any(
            len(r) != self.width for r in self.cells
        ):
            raise ValueError("cell block does not match the window dimensions")

    def get(self, v: Vec2) -> Optional[int]:
        """Color at v, or None outside the window or on a masked cell."""
        c = v[0] - self.origin[0]
        r = v[1] - self.origin[1]
        if 0 <= c < self.width and 0 <= r < self.height:
            return self.cells[r][c]
        return None

    def nodes(self) -> Iterator[Vec2]:
        for r in range(self.height):
            for c in range(self.width):
                yield (self.origin[0] + c, self.origin[1] + r)


def parse(text: str) -> PeriodicColoring:
    """Read PCG text; colors become 1..n by first occurrence, row-major."""
    lines = text.splitlines()
    if not lines or lines[0].strip() != _HEADER:
        raise PcgParseError(f"line 1 must be exactly {_HEADER!r}")
    content = [
        (no, ln)
        for no, ln in enumerate(lines[1:], start=2)
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not content:
        raise PcgParseError("missing periods line")
    no, ln = content[0]
    m = _PERIODS_RE.match(ln.strip())
    if not m:
        raise PcgParseError(f"line {no}: expected 'periods (a,b) (c,d)'")
    p1 = (int(m.group(1)), int(m.group(2)))
    p2 = (int(m.group(3)), int(m.group(4)))
    try:
        lat = Lattice.from_vectors(p1, p2)
    except ValueError:
        raise PcgParseError(
            f"line {no}: periods {p1} {p2} have zero determinant"
        ) from None
    row_lines = content[1:]
    if len(row_lines) != lat.h:
        raise PcgParseError(
            f"expected {lat.h} rows for these periods, found {len(row_lines)}"
        )
    ids: dict[str, int] = {}
    tokens: list[str] = []
    rows = []
    for no, ln in row_lines:
        toks = ln.split()
        if len(toks) != lat.w:
            raise PcgParseError(f"line {no}: expected {lat.w} tokens, found {len(toks)}")
        row = []
        for t in toks:
            if not TOKEN_RE.match(t):
                raise PcgParseError(f"line {no}: bad token {t!r}")
            if t not in ids:
                ids[t] = len(ids) + 1
                tokens.append(t)
            row.append(ids[t])
        rows.append(tuple(row))
    return PeriodicColoring(lat, tuple(rows), tuple(tokens))


def render(F: PeriodicColoring, ids: bool = False) -> str:
    """PCG text for F; with ids=True tokens are the numeric color ids."""
    lat = F.lattice
    toks = tuple(str(i) for i in range(1, F.n + 1)) if ids else F.tokens
    width = max(len(t) for t in toks)
    lines = [_HEADER, f"periods ({lat.w},0) ({lat.s},{lat.h})"]
    for row in F.rows:
        lines.append(" ".join(toks[c - 1].ljust(width) for c in row).rstrip())
    return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def maximal_periods(F: PeriodicColoring) -> Lattice:
    """The lattice of ALL translations fixing F; contains F.lattice.

    Every period is congruent mod F.lattice to a fundamental-domain
    vector, so testing the domain representatives finds them all.
    """
    cells = tuple(F.cells())
    vecs = list(F.lattice.basis)
    for tx, ty in F.lattice.domain():
        if (tx, ty) == (0, 0):
            continue
        if all(F.color_at((x + tx, y + ty)) == c for (x, y), c in cells):
            vecs.append((tx, ty))
    return Lattice.from_vectors(*vecs)


@lru_cache(maxsize=None)
def canonical(F: PeriodicColoring) -> str:
    """Least PCG rendering of F over point transforms, translations,
    and first-occurrence relabeling, on the maximal period lattice.

    Two colorings are related by a grid automorphism plus a color
    permutation exactly when their canonical strings are equal. The
    inner loop builds each candidate string directly rather than
    through coloring objects; it must stay byte-equivalent to
    ``render(T.translate(t).relabel_first_occurrence(), ids=True)``.
    """
    base = F.rebase(maximal_periods(F))
    n = base.n
    toks = tuple(str(i) for i in range(1, n + 1))
    width = max(len(t) for t in toks)
    padded = tuple(t.ljust(width) for t in toks)
    best: Optional[str] = None
    for g in d4_elements():
        T = base.transform(GridAutomorphism(g, (0, 0)))
        lat = T.lattice
        w, s, h = lat.w, lat.s, lat.h
        flat = [c for row in T.rows for c in row]
        header = f"{_HEADER}\nperiods ({w},0) ({s},{h})\n"
        for ty in range(h):
            for tx in range(w):
                perm = [0] * (n + 1)
                next_id = 1
                lines = []
                for y in range(h):
                    k = (y - ty) // h
                    rowbase = (y - ty - k * h) * w
                    shift = tx + k * s
                    line = []
                    for x in range(w):
                        c = flat[rowbase + (x - shift) % w]
                        p = perm[c]
                        if p == 0:
                            perm[c] = p = next_id
                            next_id += 1
                        line.append(padded[p - 1])
                    lines.append(" ".join(line).rstrip())
                cand = header + "\n".join(lines) + "\n"
                if best is None or cand < best:
                    best = cand
    assert best is not None
    return best


def equivalent(F: PeriodicColoring, G: PeriodicColoring) -> bool:
    return canonical(F) == canonical(G)
