import pytest
from hypothesis import given, settings, strategies as st

from sppqtc import pipeline as PL
from sppqtc import pp_core as P
from sppqtc import signed as sj
from sppqtc.stair_chain import ChainError

SPP_EX = ((4, 4, 3, 3), (3, 3, 3), (3, 1), (0,))


def test_f_n1_m1():
    assert PL.f_espp_stair(((2,),), 1, 1) == ((0,),)
    assert PL.f_espp_stair(((0,),), 1, 1) == ((1,),)
    assert PL.f_espp_stair(((1,),), 1, 1, "backward") == ((0,),)


def test_f_m0():
    for n in range(1, 5):
        assert PL.f_espp_stair(P.zeros(n), n, 0) == P.zeros(n)


@pytest.mark.parametrize("n,m", [(n, m) for n in range(1, 5) for m in range(1, 3)])
def test_f_bijective_and_S_preserving(n, m):
    fwd, bwd = PL.f_table(n, m)
    stair = P.enumerate_class(P.make_tag("stairPP", n, m))
    assert sorted(fwd.values()) == stair
    assert all(bwd[v] == k for k, v in fwd.items())
    assert PL.verify_stat_ledger(n, m) == []


def test_f_chain_valid_small():
    for n, m in [(1, 1), (2, 1), (2, 2), (3, 2)]:
        assert sj.check_valid(PL.f_chain(n, m)) == (True, None)


def test_factor_transfer_valid():
    for n, m in [(1, 2), (2, 2), (2, 3)]:
        assert sj.check_valid(PL.factor_transfer(n, m)) == (True, None)


def test_traced_chain_agrees_with_table():
    n, m = 3, 2
    fwd, _ = PL.f_table(n, m)
    for pi, img in list(fwd.items())[::7]:
        log = []
        assert PL.f_espp_stair(pi, n, m, "forward", log) == img
        assert log and len(log[0]) == 7
        names = {entry[0] for entry in log}
        assert {"transfer", "rot", "mirror"} <= names


def test_g_refine():
    assert PL.g_refine(set(), set()) == {}
    assert PL.g_refine({2, 3, 4}, {1, 2, 4}) == {2: 1, 3: 2, 4: 4}
    with pytest.raises(ChainError):
        PL.g_refine({1}, {1, 2})


def test_g_involutive_espp32():
    n, m = 3, 2
    te, ts = P.make_tag("eSPP", n, m), P.make_tag("stairPP", n, m)
    for pi, img in PL.f_table(n, m)[0].items():
        g = PL.g_for(pi, n, m)
        back = PL.g_refine(P.stat_S(ts, img), P.stat_S(te, pi))
        assert {back[v]: k for k, v in g.items()} == {k: k for k in g}
        assert sorted(g) == sorted(P.stat_S(te, pi))


def test_spp_example():
    q = PL.spp_qtcpp(SPP_EX, 4, 4)
    assert P.validate(P.make_tag("QTCPP", 4, 4), q)
    assert PL.spp_qtcpp(q, 4, 4, "backward") == SPP_EX


def test_n1_is_a_permutation():
    for M in range(6):
        img = [PL.spp_qtcpp(((k,),), 1, M)[0][0] for k in range(M + 1)]
        assert sorted(img) == list(range(M + 1))


def test_rejects_non_members():
    with pytest.raises(ChainError):
        PL.spp_qtcpp(((9,),), 1, 4)
    with pytest.raises(ChainError):
        PL.f_espp_stair(((1,),), 1, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_roundtrip_grid(n):
    for M in range(6):
        r = PL.verify_roundtrip(n, M)
        assert r.failures == [] and r.stat_failures == []
        assert r.domain == r.codomain


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(0, 5), st.data())
def test_roundtrip_property(n, M, data):
    pi = data.draw(st.sampled_from(P.enumerate_class(P.make_tag("SPP", n, M))))
    q = PL.spp_qtcpp(pi, n, M)
    assert P.validate(P.make_tag("QTCPP", n, M), q)
    assert PL.spp_qtcpp(q, n, M, "backward") == pi
