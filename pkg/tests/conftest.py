"""Shared fixtures: the corpus plus a cached small-torus enumeration sweep."""

import pytest

from pcg import fixtures
from pcg.coloring import Lattice
from pcg.search import SearchSpec, enumerate_colorings

ALL_IDS = fixtures.fixture_ids()


@pytest.fixture(scope="session", params=ALL_IDS)
def fixture_id(request):
    return request.param


@pytest.fixture(scope="session")
def corpus():
    return {fid: fixtures.get(fid) for fid in ALL_IDS}


def _lattices_up_to_index(max_index):
    out = []
    for w in range(1, max_index + 1):
        for h in range(1, max_index // w + 1):
            for s in range(w):
                out.append(Lattice(w, s, h))
    return out


@pytest.fixture(scope="session")
def small_sweep():
    """All perfect colorings with <= 5 colors on every lattice of index <= 16.

    Computed once per session; several acceptance criteria and property
    tests quantify over this pool.
    """
    pool = []
    for lat in _lattices_up_to_index(16):
        colors = min(5, lat.index)
        spec = SearchSpec(lattice=lat, max_colors=colors, surjective=False)
        pool.extend(enumerate_colorings(spec))
    return pool
