import xml.etree.ElementTree as ET
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from sppqtc import paths as Pa

words = st.text(alphabet="EN", min_size=0, max_size=10)


def test_count_C():
    # the 2-subsets of 4 positions
    assert Pa.count_C(4, 2) == len(list(combinations(range(4), 2))) == 6
    assert Pa.count_C(3, 5) == 0
    assert all(Pa.count_C(n, 0) == 1 for n in range(6))
    assert Pa.enumerate_C(3, 5) == []
    for u in range(6):
        for v in range(u + 1):
            ws = Pa.enumerate_C(u, v)
            assert len(ws) == len(set(ws)) == comb(u, v)
            assert all(w.count("N") == v for w in ws)


def test_words_between():
    assert sorted(Pa.words_between((0, 0), (2, 1))) == ["EEN", "ENE", "NEE"]
    assert Pa.words_between((0, 0), (-1, 1)) == []
    assert sorted(Pa.words_between((0, 0), (1, -2), Pa.DOWN)) == ["ESS", "SES", "SSE"]


def test_perm_sign():
    assert Pa.perm_sign((1, 2, 3)) == 1
    assert Pa.perm_sign((2, 1, 3)) == -1
    assert Pa.perm_sign((2, 3, 1)) == 1


@given(words)
def test_transpose_and_rotation_are_involutions(w):
    assert Pa.transpose_word(Pa.transpose_word(w)) == w
    assert Pa.transpose_word(w).count("N") == w.count("E")
    assert Pa.trailing_run(Pa.transpose_word(w), "E") == Pa.leading_run(w, "N")
    r = Pa.rotate180(w)
    assert Pa.rotate180(r) == w
    assert Pa.end_point((0, 0), r) == Pa.end_point((0, 0), w)


def test_rotation_fixes_straight_paths():
    assert Pa.rotate180("EEEE") == "EEEE"
    assert Pa.rotate180("SSS") == "SSS"


def test_tail_swap_single_vertex():
    starts = ((0, 0), (1, -1))
    ws = ("EN", "NE")  # only (1, 0) is shared
    v = Pa.shared_vertex(starts, ws)
    assert v[0] == (1, 0)
    s2, w2, (k, l) = Pa.tail_swap(starts, ws)
    assert (k, l) == (0, 1) and w2 == ("EE", "NN")
    assert Pa.tail_swap(s2, w2)[1] == ws


def test_tail_swap_rejects_nonintersecting():
    with pytest.raises(Pa.PathError):
        Pa.tail_swap(((0, 0), (2, 0)), ("NN", "NN"))


@settings(max_examples=300, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(-3, 0)), min_size=2, max_size=3, unique=True),
       st.lists(st.text(alphabet="EN", min_size=2, max_size=6), min_size=3, max_size=3),
       st.sampled_from(["prefix", "suffix"]))
def test_tail_swap_involution_and_edges(starts, ws, keep):
    ws = tuple(ws[:len(starts)])
    starts = tuple(starts)
    if Pa.is_nonintersecting(starts, ws):
        return
    s2, w2, kl = Pa.tail_swap(starts, ws, keep=keep)
    assert Pa.tail_swap(s2, w2, keep=keep)[:2] == (starts, ws)
    assert Pa.edge_multiset(starts, ws) == Pa.edge_multiset(s2, w2)
    assert sorted(Pa.end_point(a, w) for a, w in zip(starts, ws)) == \
        sorted(Pa.end_point(a, w) for a, w in zip(s2, w2))


def test_mirror_reflect_figure_shape():
    # three east and three north steps; the last visit to x - y = 2 is at (3, 1)
    start, w = (0, 0), "EEENNN"
    a2, w2 = Pa.mirror_reflect(start, w, 2)
    assert a2 == (2, -2)
    assert w2 == "NNNENN"
    assert Pa.end_point(a2, w2) == Pa.end_point(start, w)
    assert Pa.mirror_reflect(a2, w2, 2) == (start, w)


def test_mirror_reflect_touch_at_start():
    a2, w2 = Pa.mirror_reflect((2, 0), "NNN", 2)
    assert a2 == (2, 0) and w2 == "NNN"
    with pytest.raises(Pa.PathError):
        Pa.mirror_reflect((0, 0), "NNN", 2)


def test_reflection_count_identity():
    # paths in the region x - y <= c, counted by subtracting paths from the mirrored start
    n, m = 3, 2
    c = 2 * m + 2
    for i in range(1, m + 1):
        a = (i, -i)
        a2 = Pa.reflect_point(a, c)
        for j in range(1, m + 1):
            b = (j + n, n - j)
            inside = [w for w in Pa.words_between(a, b) if Pa.within(a, w, c - 1)]
            assert len(inside) == len(Pa.words_between(a, b)) - len(Pa.words_between(a2, b))


def test_path_family_lgv_signed_count():
    fam = Pa.PathFamily([(0, 0), (1, -1)], [(2, 1), (3, 0)], Pa.UP)
    S = fam.signed_set()
    ni = [c for c in S.elements() if fam.is_ni(c)]
    assert S.signed_count() == len(ni)
    for c in S.elements():
        if not fam.is_ni(c):
            c2 = fam.lgv(c)
            assert fam.sign(c2) == -fam.sign(c)
            assert fam.lgv(c2) == c


def test_svg_is_wellformed():
    text = Pa.svg([(0, 0), (1, -1)], ["ENE", "NNE"], lines=[(1, "bar")])
    root = ET.fromstring(text)
    assert root.tag.endswith("svg")
    assert len([e for e in root if e.tag.endswith("polyline")]) == 2
