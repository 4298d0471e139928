import pytest
from hypothesis import given, settings, strategies as st

import oracle
from sppqtc import pp_core as P
from sppqtc import tableaux as T

U = ((4, 4, 4, 2), (3, 3, 3), (2, 1, 1), ())
BASE = ((4, 4, 3, 1), (3, 3), (2, 1), ())
SPP_EX = ((4, 4, 3, 3), (3, 3, 3), (3, 1), (0,))
ESPP_EX = ((4, 3, 3, 2), (2, 2, 2), (2, 1), (0,))

SMALL_TABLEAUX = [t for n in (1, 2, 3) for t in oracle.all_tableaux(n, 5, 3)]


def test_conj_example():
    assert T.conj(SPP_EX) == U
    assert T.shape(T.conj(SPP_EX)) == (4, 3, 3, 0)
    assert T.conj(P.zeros(4)) == T.empty(4)


def test_conj_roundtrip_spp33():
    for pi in P.enumerate_class(P.make_tag("SPP", 3, 3)):
        t = T.conj(pi)
        assert T.is_tableau(t)
        assert T.shape(t) == tuple(row[0] for row in pi)
        assert T.conj_inv(t) == pi


def test_conj_inv_rejects_bad_tableau():
    with pytest.raises(T.TableauError):
        T.conj_inv(((1, 2), ()))


def test_row_insert_examples():
    trace = []
    out, pos = T.row_insert(((4, 4, 3, 2), (3, 3, 1), (2, 1), ()), 4, trace)
    assert out == U and pos == (3, 3)
    assert trace[-1] == (3, None)
    out, pos = T.row_insert(BASE, 2)
    assert out == ((4, 4, 3, 2), (3, 3, 1), (2, 1), ()) and pos == (2, 3)
    assert T.row_insert(T.empty(3), 2) == (((2,), (), ()), (1, 1))
    with pytest.raises(T.TableauError):
        T.row_insert(T.empty(2), 3)


def test_row_extract_inverts_insert_exhaustively():
    for t in SMALL_TABLEAUX:
        n = len(t)
        for x in range(1, n + 1):
            try:
                out, pos = T.row_insert(t, x)
            except T.TableauError:
                continue
            assert T.is_tableau(out)
            assert T.row_extract(out, pos) == (t, x)


def test_multi_extract_example():
    rec = T.multi_extract(U, (4, 2, 2))
    assert rec.base == BASE and rec.letters == (2, 4)
    assert T.multi_extract(U, T.shape(U)) == (U, ())
    assert T.multi_insert(BASE, (2, 4)) == U


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL_TABLEAUX), st.data())
def test_multi_extract_then_insert(t, data):
    sh = T.shape(t)
    n = len(t)
    # remove one box from a random subset of rows whose removal keeps a partition
    lam = list(sh)
    for r in data.draw(st.permutations(range(n))):
        if lam[r] > 0 and (r == n - 1 or lam[r] - 1 >= lam[r + 1]) and lam[r] == sh[r]:
            if data.draw(st.booleans()):
                lam[r] -= 1
    try:
        rec = T.multi_extract(t, lam)
    except T.TableauError:
        return
    assert T.shape(rec.base) == tuple(lam)
    assert T.multi_insert(rec.base, rec.letters) == t


def test_odd_split_example_and_trivial():
    assert T.ssyt_odd_split(U) == (BASE, (0, 1, 0, 1))
    even = ((4, 4, 3, 1), (3, 3), (), ())
    assert T.ssyt_odd_split(even) == (even, (0, 0, 0, 0))


def test_odd_split_bijective_small():
    # all U with letters in 1..2 and shape inside (3, 3)
    tabs = [t for t in oracle.all_tableaux(2, 6, 3)]
    seen = {}
    for u in tabs:
        base, t = T.ssyt_odd_split(u)
        assert all(v % 2 == 0 for v in T.shape(base))
        assert T.ssyt_odd_join(base, t) == u
        assert (base, t) not in seen
        seen[(base, t)] = u


def test_stat_S_tableau():
    assert T.stat_S_tableau(BASE, 2, 4) == {2, 3, 4}
    assert T.stat_S_tableau(((3, 2), ()), 2, 2) == {1, 2}
    for n in range(1, 4):
        for m in range(3):
            for pi in P.enumerate_class(P.make_tag("eSPP", n, m)):
                t = T.conj(pi)
                assert T.stat_S_tableau(t, m, n) == P.stat_S(P.make_tag("eSPP", n, m), pi)


def test_spp_split_example():
    assert T.spp_split(SPP_EX, 4) == (ESPP_EX, (0, 1, 0, 1), frozenset({2, 3, 4}))
    assert T.spp_join(ESPP_EX, (0, 1, 0, 1), 4) == SPP_EX
    e = P.enumerate_class(P.make_tag("eSPP", 3, 2))[7]
    assert T.spp_split(e, 4)[:2] == (e, (0, 0, 0))


@pytest.mark.parametrize("n,M", [(3, 4), (3, 5), (4, 4), (4, 5), (2, 3)])
def test_spp_split_bijective(n, M):
    m = M // 2
    images = set()
    for pi in P.enumerate_class(P.make_tag("SPP", n, M)):
        base, t, dom = T.spp_split(pi, M)
        assert P.validate(P.make_tag("eSPP", n, m), base)
        assert all(t[i - 1] == 0 for i in range(1, n + 1) if i not in dom)
        if M % 2 == 0:
            assert dom == P.stat_S(P.make_tag("eSPP", n, m), base)
        assert T.spp_join(base, t, M) == pi
        images.add((base, t))
    # every (base, marks on the domain) pair is hit
    total = 0
    for base in P.enumerate_class(P.make_tag("eSPP", n, m)):
        k = n if M % 2 else len(P.stat_S(P.make_tag("eSPP", n, m), base))
        total += 2 ** k
    assert len(images) == total


def test_spp_join_rejects_marks_off_domain():
    with pytest.raises(T.TableauError):
        T.spp_join(ESPP_EX, (1, 0, 0, 0), 4)
