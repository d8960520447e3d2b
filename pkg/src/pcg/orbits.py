"""Orbit colorings: are the color classes the orbits of a symmetry group?

The relevant group for a periodic coloring F is its full stabilizer:
all grid automorphisms g.v + t with F(g.v + t) = F(v) everywhere.
Because conjugating a translation by a stabilizer element must land in
the translation stabilizer again, the point part g has to preserve the
maximal period lattice; that makes the stabilizer finite modulo
periods and the orbit computation exact. If ANY group of color-
preserving automorphisms has the color classes as orbits, the full
stabilizer does too, so checking the full stabilizer decides the
property.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .coloring import Lattice, PeriodicColoring, maximal_periods
from .grid import GridAutomorphism, Vec2, ball, d4_elements


@dataclass(frozen=True)
class StabilizerGroup:
    """Color-preserving automorphisms of F, modulo the period lattice."""

    lattice: Lattice
    elements: tuple[GridAutomorphism, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, aut: GridAutomorphism) -> bool:
        return (aut.point, self.lattice.reduce(aut.shift)) in {
            (e.point, e.shift) for e in self.elements
        }


@lru_cache(maxsize=None)
def stabilizer(F: PeriodicColoring) -> StabilizerGroup:
    """All (point, shift mod periods) fixing F; verified group-closed."""
    lat = maximal_periods(F)
    base = F.rebase(lat)
    cells = tuple(base.cells())
    elements = []
    for g in d4_elements():
        try:
            if lat.transform(g) != lat:
                continue
        except ValueError:
            continue
        for t in lat.domain():
            aut = GridAutomorphism(g, t)
            if all(base.color_at(aut.apply(v)) == c for v, c in cells):
                elements.append(aut)
    elements.sort(key=lambda a: (a.point, a.shift))
    group = StabilizerGroup(lat, tuple(elements))
    keys = {(e.point, e.shift) for e in elements}
    for a in elements:
        inv = a.inverse()
        if (inv.point, lat.reduce(inv.shift)) not in keys:
            raise RuntimeError(f"stabilizer not closed under inverse at {a}")
        for b in elements:
            ab = a.compose(b)
            if (ab.point, lat.reduce(ab.shift)) not in keys:
                raise RuntimeError(f"stabilizer not closed under product at {a}, {b}")
    return group


@lru_cache(maxsize=None)
def orbits(F: PeriodicColoring) -> tuple[tuple[Vec2, ...], ...]:
    """Orbits of the stabilizer on the cells of the maximal-period torus.

    Each orbit is sorted row-major and orbits are listed by their least
    cell; every orbit is monochromatic, so they always refine colors.
    """
    group = stabilizer(F)
    lat = group.lattice
    parent: dict[Vec2, Vec2] = {v: v for v in lat.domain()}

    def find(v: Vec2) -> Vec2:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for aut in group.elements:
        for v in lat.domain():
            a, b = find(v), find(lat.reduce(aut.apply(v)))
            if a != b:
                parent[a] = b
    buckets: dict[Vec2, list[Vec2]] = {}
    for v in lat.domain():
        buckets.setdefault(find(v), []).append(v)
    groups = [tuple(sorted(vs, key=lambda v: (v[1], v[0]))) for vs in buckets.values()]
    groups.sort(key=lambda orb: (orb[0][1], orb[0][0]))
    return tuple(groups)


def is_orbit(F: PeriodicColoring) -> bool:
    """True when color classes coincide exactly with stabilizer orbits."""
    return len(orbits(F)) == F.n


@dataclass(frozen=True)
class OrbitReport:
    is_orbit: bool
    num_orbits: int
    stabilizer_order: int
    counterexample_pair: Optional[tuple[Vec2, Vec2]]

    def to_json_dict(self) -> dict:
        pair = self.counterexample_pair
        return {
            "orbit": self.is_orbit,
            "num_orbits": self.num_orbits,
            "stabilizer_order": self.stabilizer_order,
            "counterexample_pair": [list(v) for v in pair] if pair else None,
        }


def orbit_report(F: PeriodicColoring) -> OrbitReport:
    """Orbit decision plus the first same-color pair no symmetry joins."""
    group = stabilizer(F)
    parts = orbits(F)
    base = F.rebase(group.lattice)
    owner: dict[Vec2, int] = {}
    for i, orb in enumerate(parts):
        for v in orb:
            owner[v] = i
    pair = None
    by_color: dict[int, list[Vec2]] = {}
    for v, c in base.cells():
        by_color.setdefault(c, []).append(v)
    for c in range(1, base.n + 1):
        vs = by_color[c]
        first = vs[0]
        for v in vs[1:]:
            if owner[v] != owner[first]:
                pair = (first, v)
                break
        if pair:
            break
    return OrbitReport(
        is_orbit=pair is None,
        num_orbits=len(parts),
        stabilizer_order=group.order,
        counterexample_pair=pair,
    )


def find_automorphism(
    F: PeriodicColoring, x: Vec2, y: Vec2
) -> Optional[GridAutomorphism]:
    """A stabilizer element sending x exactly to y, if one exists."""
    if F.color_at(x) != F.color_at(y):
        raise ValueError("nodes must share a color")
    group = stabilizer(F)
    lat = group.lattice
    for aut in group.elements:
        gx = aut.apply(x)
        if lat.reduce(gx) == lat.reduce(y):
            dx, dy = y[0] - gx[0], y[1] - gx[1]
            return GridAutomorphism(aut.point, (aut.shift[0] + dx, aut.shift[1] + dy))
    return None


def ball_similar(
    F: PeriodicColoring, radius: int
) -> tuple[bool, Optional[tuple[Vec2, Vec2]]]:
    """Can every same-color pair be matched on an L1 ball of this radius?

    For each ordered pair of same-color cells (x, y) an affine map
    g.v + t with g in the point group and t = y - g.x must copy F on
    the whole ball around x. Weaker than orbit-ness: the map need not
    respect the coloring globally.
    """
    if radius < 1:
        raise ValueError("radius must be >= 1")
    lat = maximal_periods(F)
    base = F.rebase(lat)
    cells_by_color: dict[int, list[Vec2]] = {}
    for v, c in base.cells():
        cells_by_color.setdefault(c, []).append(v)
    points = d4_elements()
    for c in range(1, base.n + 1):
        vs = cells_by_color[c]
        for x in vs:
            for y in vs:
                if x == y:
                    continue
                ok = False
                for g in points:
                    aut = GridAutomorphism(g, (0, 0))
                    gx = aut.apply(x)
                    t = (y[0] - gx[0], y[1] - gx[1])
                    cand = GridAutomorphism(g, t)
                    if all(
                        base.color_at(cand.apply(u)) == base.color_at(u)
                        for u in ball(x, radius)
                    ):
                        ok = True
                        break
                if not ok:
                    return False, (x, y)
    return True, None
