"""Exhaustive search for perfect colorings on a fixed torus.

`enumerate_colorings` walks the cells of the fundamental domain in
row-major order assigning colors, maintaining for every color the
entrywise maximum of the partial neighbor profiles seen so far.  A
color's row becomes established the first time one of its nodes has
all four neighbors assigned; after that every node of the color must
match the row exactly.  Before establishment the partial maxima must
stay dominated by SOME row summing to 4, which gives the prune
``sum of maxima <= 4``.  Symmetry is broken by forcing the first cell
to color 1 and introducing new colors in increasing order; full
deduplication happens afterwards through canonical forms, so point
symmetries need no special treatment during search.

`brute_oracle` re-derives the same answer with no pruning at all, by
filtering every possible assignment through the real perfectness
check; it exists to keep the fast path honest.
"""

from __future__ import annotations

import itertools
import multiprocessing
from dataclasses import dataclass
from typing import Optional

from .coloring import Lattice, PeriodicColoring, canonical, maximal_periods, parse
from .diagonals import DiagonalClass, find_special_diagonals
from .grid import neighbors
from .orbits import is_orbit
from .perfect import QuotientMatrix, Violation, check, is_bipartite
from .twins import covering_target, twin_pairs


@dataclass(frozen=True)
class SearchSpec:
    """What to enumerate: a torus, a color budget, optional quotient."""

    lattice: Lattice
    max_colors: int
    quotient: Optional[QuotientMatrix] = None
    surjective: bool = True

    def __post_init__(self) -> None:
        if not 1 <= self.max_colors <= self.lattice.index:
            raise ValueError("max_colors must be between 1 and the cell count")
        if self.quotient is not None:
            q = tuple(tuple(row) for row in self.quotient)
            if any(len(row) != len(q) for row in q):
                raise ValueError("quotient must be square")
            if len(q) > self.max_colors:
                raise ValueError("quotient size exceeds max_colors")
            object.__setattr__(self, "quotient", q)


def matrices_conjugate(A: QuotientMatrix, B: QuotientMatrix) -> bool:
    """Is B = P A P^-1 for a simultaneous row/column permutation P?"""
    n = len(A)
    if n != len(B):
        return False

    def sig(M: QuotientMatrix, i: int) -> tuple:
        return (M[i][i], tuple(sorted(M[i])), tuple(sorted(row[i] for row in M)))

    sa = [sig(A, i) for i in range(n)]
    sb = [sig(B, j) for j in range(n)]
    if sorted(sa) != sorted(sb):
        return False
    cand = [[j for j in range(n) if sb[j] == sa[i]] for i in range(n)]
    perm = [-1] * n
    used = [False] * n

    def place(i: int) -> bool:
        if i == n:
            return True
        for j in cand[i]:
            if used[j]:
                continue
            if any(
                A[i][k] != B[j][perm[k]] or A[k][i] != B[perm[k]][j] for k in range(i)
            ):
                continue
            perm[i], used[j] = j, True
            if place(i + 1):
                return True
            perm[i], used[j] = -1, False
        return False

    return place(0)


class _Engine:
    """Backtracking state for one torus; undo-logged, reusable."""

    def __init__(self, spec: SearchSpec):
        self.spec = spec
        lat = spec.lattice
        self.cells = list(lat.domain())
        self.N = len(self.cells)
        pos = {v: i for i, v in enumerate(self.cells)}
        self.nbr = [
            tuple(pos[lat.reduce(u)] for u in neighbors(v)) for v in self.cells
        ]
        m = spec.max_colors
        self.color = [0] * self.N
        self.partial = [[0] * m for _ in range(self.N)]
        self.assigned_nbrs = [0] * self.N
        self.estab: list[Optional[tuple[int, ...]]] = [None] * (m + 1)
        self.lmax = [[0] * m for _ in range(m + 1)]
        self.lsum = [0] * (m + 1)
        self.num_used = 0
        self.log: list[tuple] = []
        # Leaves deduplicated by a translation-only key first; the full
        # canonical form runs once per representative afterwards.
        self.seen: set[tuple[int, ...]] = set()
        self.reps: list[tuple[tuple[int, ...], ...]] = []

    # -- undo machinery ------------------------------------------------

    def mark(self) -> int:
        return len(self.log)

    def undo_to(self, mark: int) -> None:
        while len(self.log) > mark:
            entry = self.log.pop()
            kind = entry[0]
            if kind == "p":
                _, u, d = entry
                self.partial[u][d] -= 1
                self.assigned_nbrs[u] -= 1
            elif kind == "m":
                _, c, d, old = entry
                self.lsum[c] += old - self.lmax[c][d]
                self.lmax[c][d] = old
            elif kind == "e":
                self.estab[entry[1]] = None
            elif kind == "c":
                self.color[entry[1]] = 0
            else:  # "k"
                self.num_used -= 1

    # -- constraint propagation ---------------------------------------

    def _touch(self, u: int) -> bool:
        """Re-check cell u after one of its edges got a color."""
        c = self.color[u]
        if c == 0:
            return True
        row = self.estab[c]
        p = self.partial[u]
        if row is not None:
            if self.assigned_nbrs[u] == 4:
                return tuple(p) == row
            return all(a <= b for a, b in zip(p, row))
        changed = False
        for d, v in enumerate(p):
            if v > self.lmax[c][d]:
                self.log.append(("m", c, d, self.lmax[c][d]))
                self.lsum[c] += v - self.lmax[c][d]
                self.lmax[c][d] = v
                changed = True
        if changed and self.lsum[c] > 4:
            return False
        if self.assigned_nbrs[u] == 4:
            row = tuple(p)
            if any(a > b for a, b in zip(self.lmax[c], row)):
                return False
            self.estab[c] = row
            self.log.append(("e", c))
        return True

    def assign(self, i: int, x: int) -> bool:
        """Try coloring cell i with x; on False the caller must undo."""
        if x == self.num_used + 1:
            self.num_used += 1
            self.log.append(("k",))
        self.color[i] = x
        self.log.append(("c", i))
        for u in self.nbr[i]:
            self.partial[u][x - 1] += 1
            self.assigned_nbrs[u] += 1
            self.log.append(("p", u, x - 1))
            if not self._touch(u):
                return False
        return self._touch(i)

    # -- search --------------------------------------------------------

    def run(
        self,
        forced: tuple[int, ...] = (),
        stop: Optional[int] = None,
        prefixes: Optional[list[tuple[int, ...]]] = None,
    ) -> None:
        self._search(0, forced, stop, prefixes)

    def _search(
        self,
        depth: int,
        forced: tuple[int, ...],
        stop: Optional[int],
        prefixes: Optional[list[tuple[int, ...]]],
    ) -> None:
        if stop is not None and depth == stop:
            assert prefixes is not None
            prefixes.append(tuple(self.color[:depth]))
            return
        if depth == self.N:
            self._leaf()
            return
        spec = self.spec
        if spec.surjective and self.num_used + (self.N - depth) < spec.max_colors:
            return
        if depth < len(forced):
            candidates = (forced[depth],)
        elif depth == 0:
            candidates = (1,)
        else:
            candidates = range(1, min(self.num_used + 1, spec.max_colors) + 1)
        for x in candidates:
            m = self.mark()
            if self.assign(depth, x):
                self._search(depth + 1, forced, stop, prefixes)
            self.undo_to(m)

    def _translation_key(self) -> tuple[int, ...]:
        """Least first-occurrence relabeling over torus translations."""
        lat = self.spec.lattice
        w, s, h = lat.w, lat.s, lat.h
        flat = self.color
        n = self.num_used
        best: Optional[tuple[int, ...]] = None
        for ty in range(h):
            for tx in range(w):
                perm = [0] * (n + 1)
                next_id = 1
                out = []
                for y in range(h):
                    k = (y - ty) // h
                    rowbase = (y - ty - k * h) * w
                    shift = tx + k * s
                    for x in range(w):
                        c = flat[rowbase + (x - shift) % w]
                        p = perm[c]
                        if p == 0:
                            perm[c] = p = next_id
                            next_id += 1
                        out.append(p)
                key = tuple(out)
                if best is None or key < best:
                    best = key
        assert best is not None
        return best

    def _leaf(self) -> None:
        spec = self.spec
        k = self.num_used
        if spec.surjective and k != spec.max_colors:
            return
        if spec.quotient is not None:
            S = tuple(tuple(self.estab[c][:k]) for c in range(1, k + 1))
            if not matrices_conjugate(S, spec.quotient):
                return
        key = self._translation_key()
        if key in self.seen:
            return
        self.seen.add(key)
        lat = spec.lattice
        self.reps.append(
            tuple(
                tuple(self.color[y * lat.w + x] for x in range(lat.w))
                for y in range(lat.h)
            )
        )

    def canonicals(self) -> set[str]:
        lat = self.spec.lattice
        return {canonical(PeriodicColoring(lat, rows)) for rows in self.reps}


def _finish(strings: set[str]) -> tuple[PeriodicColoring, ...]:
    return tuple(parse(s) for s in sorted(strings))


def _run_prefix(args: tuple) -> list[str]:
    w, s, h, max_colors, quotient, surjective, prefix = args
    spec = SearchSpec(Lattice(w=w, s=s, h=h), max_colors, quotient, surjective)
    eng = _Engine(spec)
    eng.run(forced=prefix)
    return sorted(eng.canonicals())


def enumerate_colorings(
    spec: SearchSpec, jobs: int = 1
) -> tuple[PeriodicColoring, ...]:
    """All perfect colorings of the torus, in canonical form, sorted.

    With surjective=True exactly max_colors colors must be used,
    otherwise up to max_colors. A quotient constraint accepts a
    coloring when its matrix equals the given one up to a simultaneous
    permutation of the colors. jobs > 1 splits the search tree across
    processes; the result is identical either way.
    """
    if jobs <= 1:
        eng = _Engine(spec)
        eng.run()
        return _finish(eng.canonicals())
    depth = 1
    prefixes: list[tuple[int, ...]] = []
    eng = _Engine(spec)
    while True:
        prefixes = []
        eng.run(stop=depth, prefixes=prefixes)
        if not prefixes:
            return ()
        if len(prefixes) >= 4 * jobs or depth >= spec.lattice.index:
            break
        depth += 1
    lat = spec.lattice
    args = [
        (lat.w, lat.s, lat.h, spec.max_colors, spec.quotient, spec.surjective, p)
        for p in prefixes
    ]
    with multiprocessing.Pool(jobs) as pool:
        chunks = pool.map(_run_prefix, args)
    merged: set[str] = set()
    for chunk in chunks:
        merged.update(chunk)
    return _finish(merged)


def brute_oracle(spec: SearchSpec) -> tuple[PeriodicColoring, ...]:
    """The same answer as enumerate_colorings, computed the slow way."""
    cells = spec.lattice.index
    if cells > 12 or spec.max_colors > 4:
        raise ValueError("oracle guard: at most 12 cells and 4 colors")
    lat = spec.lattice
    out: set[str] = set()
    for assignment in itertools.product(
        range(1, spec.max_colors + 1), repeat=cells
    ):
        used = set(assignment)
        if max(used) != len(used):  # colors must be 1..k for a valid coloring
            continue
        if spec.surjective and len(used) != spec.max_colors:
            continue
        rows = tuple(
            tuple(assignment[y * lat.w + x] for x in range(lat.w))
            for y in range(lat.h)
        )
        F = PeriodicColoring(lat, rows)
        S = check(F)
        if isinstance(S, Violation):
            continue
        if spec.quotient is not None and not matrices_conjugate(S, spec.quotient):
            continue
        out.add(canonical(F))
    return _finish(out)


@dataclass(frozen=True)
class ClassificationReport:
    """Everything the library can say about one coloring, in one place."""

    perfect: bool
    violation: Optional[Violation]
    quotient: Optional[QuotientMatrix]
    bipartite: Optional[bool]
    twin_pairs: tuple[tuple[int, int], ...]
    covering: Optional[bool]
    special_diagonals: tuple[DiagonalClass, ...]
    orbit: Optional[bool]
    maximal: Lattice
    canonical: str
    tokens: tuple[str, ...]

    def to_json_dict(self) -> dict:
        toks = self.tokens
        v = self.violation
        return {
            "perfect": self.perfect,
            "violation": None
            if v is None
            else {
                "node": list(v.node),
                "color": toks[v.color - 1],
                "expected": list(v.expected) if v.expected is not None else None,
                "observed": [toks[c - 1] for c in v.observed],
            },
            "quotient": [list(r) for r in self.quotient] if self.quotient else None,
            "bipartite": self.bipartite,
            "twins": [[toks[a - 1], toks[b - 1]] for a, b in self.twin_pairs],
            "covering": self.covering,
            "diagonals": [d.to_json_dict(toks) for d in self.special_diagonals],
            "orbit": self.orbit,
            "maximal_periods": [list(b) for b in self.maximal.basis],
            "canonical": self.canonical,
        }


def classify(F: PeriodicColoring) -> ClassificationReport:
    """Run the whole pipeline on one coloring."""
    S = check(F)
    if isinstance(S, Violation):
        return ClassificationReport(
            perfect=False,
            violation=S,
            quotient=None,
            bipartite=None,
            twin_pairs=(),
            covering=None,
            special_diagonals=(),
            orbit=None,
            maximal=maximal_periods(F),
            canonical=canonical(F),
            tokens=F.tokens,
        )
    return ClassificationReport(
        perfect=True,
        violation=None,
        quotient=S,
        bipartite=is_bipartite(F),
        twin_pairs=twin_pairs(S),
        covering=covering_target(S) is not None,
        special_diagonals=find_special_diagonals(F),
        orbit=is_orbit(F),
        maximal=maximal_periods(F),
        canonical=canonical(F),
        tokens=F.tokens,
    )
