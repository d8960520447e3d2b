"""Lattices, the PCG text format, and coloring normal forms."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcg import fixtures
from pcg.coloring import (
    Lattice,
    PcgParseError,
    PeriodicColoring,
    canonical,
    equivalent,
    maximal_periods,
    parse,
    render,
)
from pcg.grid import GridAutomorphism, d4_elements


def small_lattices():
    return st.builds(
        lambda w, s, h: Lattice(w, s % w, h),
        st.integers(1, 3),
        st.integers(0, 2),
        st.integers(1, 3),
    )


@st.composite
def colorings(draw):
    lat = draw(small_lattices())
    cells = draw(
        st.lists(
            st.integers(1, 4), min_size=lat.index, max_size=lat.index
        )
    )
    # squash the palette down to 1..k so the constructor accepts it
    relabel = {}
    for c in cells:
        relabel.setdefault(c, len(relabel) + 1)
    it = iter(cells)
    rows = tuple(
        tuple(relabel[next(it)] for _ in range(lat.w)) for _ in range(lat.h)
    )
    return PeriodicColoring(lat, rows)


vecs = st.tuples(st.integers(-9, 9), st.integers(-9, 9))
auts = st.builds(GridAutomorphism, st.sampled_from(d4_elements()), vecs)


# lattice normal form


def test_lattice_rejects_bad_normal_form():
    for w, s, h in [(0, 0, 1), (1, 0, 0), (2, 2, 1), (2, -1, 1)]:
        with pytest.raises(ValueError):
            Lattice(w, s, h)


def test_from_vectors_examples():
    assert Lattice.from_vectors((2, 0), (1, 1)) == Lattice(2, 1, 1)
    assert Lattice.from_vectors((4, 0), (0, 4)) == Lattice(4, 0, 4)
    assert Lattice.from_vectors((2, 2), (2, -2)) == Lattice(4, 2, 2)
    assert Lattice.from_vectors((8, 0), (4, 4)) == Lattice(8, 4, 4)
    # redundant generators collapse to the same lattice
    assert Lattice.from_vectors((2, 0), (1, 1), (3, 1)) == Lattice(2, 1, 1)


def test_from_vectors_rejects_rank_deficient():
    with pytest.raises(ValueError):
        Lattice.from_vectors((2, 0), (3, 0))
    with pytest.raises(ValueError):
        Lattice.from_vectors((0, 0), (0, 0))


@given(small_lattices(), vecs)
def test_reduce_lands_in_domain_and_same_coset(lat, v):
    r = lat.reduce(v)
    assert 0 <= r[0] < lat.w and 0 <= r[1] < lat.h
    assert lat.contains((v[0] - r[0], v[1] - r[1]))


@given(small_lattices())
def test_domain_size_is_index(lat):
    dom = list(lat.domain())
    assert len(dom) == lat.index
    assert len(set(lat.reduce(v) for v in dom)) == lat.index


@given(small_lattices(), vecs, vecs)
def test_contains_is_a_subgroup(lat, a, b):
    for bv in lat.basis:
        assert lat.contains(bv)
    if lat.contains(a) and lat.contains(b):
        assert lat.contains((a[0] + b[0], a[1] + b[1]))
        assert lat.contains((-a[0], -a[1]))


# text format


def test_parse_render_roundtrip_on_corpus():
    # parse renumbers by first occurrence, so compare token semantics
    for fid in fixtures.fixture_ids():
        F = fixtures.get(fid)
        G = parse(render(F))
        assert G.lattice == F.lattice
        assert all(G.token_at(v) == F.token_at(v) for v in G.lattice.domain())
        assert G.relabel_sorted_tokens() == F


def test_parse_renumbers_by_first_occurrence():
    F = parse("# pcg v1\nperiods (3,0) (0,1)\nb a b\n")
    assert F.rows == ((1, 2, 1),)
    assert F.tokens == ("b", "a")


def test_parse_accepts_comments_and_blank_lines():
    text = "# pcg v1\n\n# a comment\nperiods (2,0) (0,1)\n# another\nx y\n\n"
    F = parse(text)
    assert F.rows == ((1, 2),)


def test_parse_normalizes_periods():
    F = parse("# pcg v1\nperiods (2,2) (2,-2)\n1 6 3 5\n7 2 8 4\n")
    assert F.lattice == Lattice(4, 2, 2)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "periods (2,0) (0,1)\n1 2\n",
        "# pcg v2\nperiods (2,0) (0,1)\n1 2\n",
        "# pcg v1\n1 2\n",
        "# pcg v1\nperiods (2,0)\n1 2\n",
        "# pcg v1\nperiods (2,0) (4,0)\n1 2\n",
        "# pcg v1\nperiods (2,0) (0,1)\n1\n",
        "# pcg v1\nperiods (2,0) (0,1)\n1 2\n3 4\n",
        "# pcg v1\nperiods (2,0) (0,1)\n1 2!\n",
    ],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(PcgParseError):
        parse(text)


@given(colorings())
def test_render_roundtrip(F):
    assert parse(render(F)) == F
    assert parse(render(F, ids=True)).rows == F.rows


# coloring transforms


@given(colorings(), vecs)
def test_translate_moves_colors(F, t):
    G = F.translate(t)
    assert G.color_at((t[0], t[1])) == F.color_at((0, 0))
    assert G.translate((-t[0], -t[1])) == F


@given(colorings(), auts, vecs)
def test_transform_moves_colors(F, a, v):
    assert F.transform(a).color_at(a.apply(v)) == F.color_at(v)


@given(colorings())
def test_relabel_first_occurrence_is_stable(F):
    G = F.relabel_first_occurrence()
    assert G.relabel_first_occurrence() == G
    seen = []
    for _, c in G.cells():
        if c not in seen:
            seen.append(c)
    assert seen == list(range(1, G.n + 1))


def test_relabel_sorted_tokens_orders_numerals_by_value():
    F = parse("# pcg v1\nperiods (3,0) (0,1)\n10 2 b\n")
    G = F.relabel_sorted_tokens()
    assert G.tokens == ("2", "10", "b")
    assert G.rows == ((2, 1, 3),)


def test_relabel_rejects_non_bijections():
    F = parse("# pcg v1\nperiods (2,0) (0,1)\n1 2\n")
    with pytest.raises(ValueError):
        F.relabel({1: 1, 2: 3})
    with pytest.raises(ValueError):
        F.relabel({1: 1})


def test_rebase_requires_periods():
    F = fixtures.checkerboard()
    with pytest.raises(ValueError):
        F.rebase(Lattice(3, 0, 1))
    G = F.rebase(Lattice(2, 0, 2))
    assert G.lattice.index == 4
    assert all(G.color_at(v) == F.color_at(v) for v in G.lattice.domain())


def test_window_contents_and_mask():
    F = fixtures.checkerboard()
    W = F.window((0, 0), 3, 2)
    assert W.get((0, 0)) == F.color_at((0, 0))
    assert W.get((2, 1)) == F.color_at((2, 1))
    assert W.get((3, 0)) is None
    assert len(list(W.nodes())) == 6


# maximal periods and canonical forms


def test_maximal_periods_frozen_cases():
    assert maximal_periods(fixtures.checkerboard()) == Lattice(2, 1, 1)
    assert maximal_periods(fixtures.get("II-base")) == Lattice(4, 2, 2)
    assert maximal_periods(fixtures.get("h")) == Lattice(4, 2, 2)
    assert maximal_periods(fixtures.get("b")) == Lattice(8, 4, 4)


def test_maximal_periods_of_constant_is_unit():
    assert maximal_periods(fixtures.constant()) == Lattice(1, 0, 1)


@given(colorings())
@settings(max_examples=60)
def test_maximal_periods_contains_declared_lattice(F):
    lat = maximal_periods(F)
    for b in F.lattice.basis:
        assert lat.contains(b)
    # every basis vector of the maximal lattice really is a period
    for bx, by in lat.basis:
        assert all(
            F.color_at((x + bx, y + by)) == c for (x, y), c in F.cells()
        )


def test_canonical_frozen_examples():
    assert canonical(fixtures.checkerboard()) == (
        "# pcg v1\nperiods (2,0) (1,1)\n1 2\n"
    )
    assert canonical(fixtures.get("h")) == (
        "# pcg v1\nperiods (4,0) (2,2)\n1 2 3 4\n5 6 7 8\n"
    )


@given(colorings(), vecs)
@settings(max_examples=60)
def test_canonical_invariant_under_translation(F, t):
    assert canonical(F.translate(t)) == canonical(F)


@given(colorings(), st.sampled_from(d4_elements()))
@settings(max_examples=60)
def test_canonical_invariant_under_point_maps(F, g):
    assert canonical(F.transform(GridAutomorphism(g, (0, 0)))) == canonical(F)


@given(colorings(), st.randoms())
@settings(max_examples=60)
def test_canonical_invariant_under_relabeling(F, rng):
    ids = list(range(1, F.n + 1))
    shuffled = ids[:]
    rng.shuffle(shuffled)
    assert canonical(F.relabel(dict(zip(ids, shuffled)))) == canonical(F)


def test_canonical_parses_to_an_equivalent_coloring():
    for fid in ("c", "h", "II-base", "3-17-2"):
        F = fixtures.get(fid)
        assert equivalent(parse(canonical(F)), F)


def test_equivalent_separates_different_colorings():
    assert not equivalent(fixtures.get("8-150-1"), fixtures.get("8-150-2"))
    assert not equivalent(fixtures.get("3-17-2"), fixtures.get("3-17-3"))
    assert equivalent(fixtures.stripes(2), fixtures.checkerboard()) is False


def test_json_dict_shape():
    F = fixtures.get("h")
    d = F.to_json_dict()
    assert d["periods"] == [[4, 0], [2, 2]]
    assert d["rows"] == [["1", "6", "3", "5"], ["7", "2", "8", "4"]]
