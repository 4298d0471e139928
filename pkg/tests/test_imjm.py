import random
from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from sppqtc import imjm as J
from sppqtc import signed as sj
from sppqtc.paths import perm_sign

# |eta|-fiber signed counts of I_m[m..1; m..1], frozen from a direct sum over I_m
FIBERS_I = {
    1: {(0, ()): 1, (2, ()): -1},
    2: {(0, (0,)): 1, (0, (2,)): -1, (1, (1,)): -1, (1, (3,)): 1, (3, (1,)): 1, (3, (3,)): -1,
        (4, (0,)): -1, (4, (2,)): 1},
}


def fibers_direct(m):
    """Signed counts of I_m keyed by (|eta_1|, sorted rest), computed from the definitions."""
    a = b = tuple(range(m, 0, -1))
    out = {}
    for sigma in permutations(range(1, m + 1)):
        for t in product((0, 1), repeat=m):
            eta = [abs(a[i] - (-1) ** t[i] * b[sigma[i] - 1]) for i in range(m)]
            key = (eta[0], tuple(sorted(eta[1:])))
            out[key] = out.get(key, 0) + perm_sign(sigma) * (-1) ** sum(t)
    return out


def nonzero(d):
    return {k: v for k, v in d.items() if v}


def test_fibers_m1_m2():
    for m in (1, 2):
        assert nonzero(fibers_direct(m)) == nonzero(FIBERS_I[m])
        assert nonzero(J.fiber_counts_I(m)) == nonzero(FIBERS_I[m])


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_fibers_agree(m):
    assert nonzero(J.fiber_counts_I(m)) == nonzero(J.fiber_counts_J(m))
    assert nonzero(J.fiber_counts_I(m)) == nonzero(fibers_direct(m))


def test_s_prime_sizes():
    # (2m)! / (2^m m!) * 2^m = (2m)! / m!
    assert [len(J.s_prime(m)) for m in (1, 2, 3)] == [2, 12, 120]
    assert all(J.is_block_sorted(s) for s in J.s_prime(3))


@settings(max_examples=200)
@given(st.permutations(range(1, 7)))
def test_block_sort(s):
    out, p, tags = J.block_sort(tuple(s), tags=("a", "b", "c"))
    assert J.is_block_sorted(out)
    assert perm_sign(out) == perm_sign(s)
    for k in range(3):
        assert {out[2 * p[k]], out[2 * p[k] + 1]} == {s[2 * k], s[2 * k + 1]}
        assert tags[p[k]] == "abc"[k]


def test_translation():
    assert J.c7_1_translate((1, 2), (1, 3), -1) == ((1, 2), (0, 2))
    assert J.eta_J((1, 2), (1, 3)) == J.eta_J((1, 2), (0, 2)) == (1,)
    rng = random.Random(3)
    for _ in range(50):
        d = rng.randint(-3, 3)
        x = tuple(rng.randint(-3, 3) for _ in range(4))
        for s in J.s_prime(2):
            s2, x2 = J.c7_1_translate(s, x, d)
            assert J.eta_J(s2, x2) == J.eta_J(s, x)
    assert J.c7_1_translate((2, 1), (4, 5), 0) == ((2, 1), (4, 5))


def test_decompose_examples():
    assert J.c7_2_decompose((1, 2, 3, 4)) == (2, J.ID2, (1, 2))
    i, rho, rest = J.c7_2_decompose((2, 1, 3, 4))
    assert (i, rho, rest) == (2, J.SWAP2, (1, 2))
    x = (5, 1, 7, 2)
    head, tail = J.c7_2_params(x, i)
    assert J.eta_J(rho, head)[0] == J.eta_J((2, 1, 3, 4), x)[0] == x[0] - x[1] - 1


@pytest.mark.parametrize("m", [2, 3])
def test_decompose_bijective_with_sign_ledger(m):
    seen = set()
    for s in J.s_prime(m):
        i, rho, rest = J.c7_2_decompose(s)
        assert rest in J.s_prime(m - 1)
        assert J.c7_2_join(i, rho, rest) == s
        assert perm_sign(s) == perm_sign(rho) * perm_sign(rest) * (-1) ** i
        seen.add((i, rho, rest))
    assert len(seen) == len(J.s_prime(m))


def test_telescope_examples():
    t = J.c7_3_telescope(0, 1)
    assert t.apply(0, (1, J.ID2)) == (1, 0)
    assert t.apply(0, (1, J.SWAP2)) == (1, 1)
    src, dst = J.c7_3_eta(0, 1)
    assert (dst(0), dst(1)) == (0, 2)
    t = J.c7_3_telescope(2, 2)
    src, _ = J.c7_3_eta(2, 2)
    # the inner pair sits at |eta| = 4, the survivors at 2 and 6
    assert t.apply(0, (1, J.SWAP2)) == (0, (2, J.ID2))
    assert src((1, J.SWAP2)) == src((2, J.ID2)) == 4
    assert J.c7_3_telescope(3, 0).apply(1, 0) == (1, 1)


@pytest.mark.parametrize("b", range(-4, 5))
def test_telescope_grid(b):
    for x in range(-4, 5):
        t = J.c7_3_telescope(x, b)
        assert sj.check_valid(t) == (True, None)
        assert sj.check_compatibility(t, *J.c7_3_eta(x, b)) == (True, None)
        if b >= 1:
            u = J.c7_3_via_union(x, b)
            for side, pool in ((0, t.src.elements()), (1, t.dst.elements())):
                for e in pool:
                    assert u.apply(side, e) == t.apply(side, e)


def test_c7_4_examples():
    inv = J.c7_4_involution(1, 1, 0)
    e = (1, 1, J.ID2)
    assert inv(e) == (1, 1, J.SWAP2)
    c = J.c7_4_cancel(2, 1, 0)
    assert len(c.src.elements()) == 4 and c.src.signed_count() == 0


def test_c7_4_grid():
    for b1, b2, y in product(range(-3, 4), range(-3, 4), range(-2, 3)):
        c = J.c7_4_cancel(b1, b2, y)
        assert sj.check_valid(c)[0], (b1, b2, y)
        eta = lambda e: abs(J.eta_J(e[2], J.c7_4_params(b1, b2, y, e[0], e[1]))[0])
        assert sj.check_compatibility(c, eta, lambda e: 0)[0]


@pytest.mark.parametrize("M,K,bs,xs,y", [
    (2, 0, (2, 1), (), 0),
    (3, 1, (1, 1, 1), (0,), 0),
    (4, 0, (1, 1, 1, 1), (), 0),
    (4, 2, (1, 2, 1, 1), (1, 0), 1),
    (3, 1, (2, -1, 3), (2,), -1),
])
def test_c7_5_cases(M, K, bs, xs, y):
    c = J.c7_5_cancel(M, K, bs, xs, y)
    assert c.src.signed_count() == 0
    assert sj.check_valid(c) == (True, None)
    eta = lambda e: tuple(abs(v) for v in J.eta_J(e[1], J.c7_5_params(M, K, bs, xs, y, e[0])))
    assert sj.check_compatibility(c, lambda e: sorted(eta(e)), lambda e: 0)[0]


def test_c7_5_delegates_at_base():
    inv = J.c7_5_involution(2, 0, (2, 3), (), 1)
    base = J.c7_4_involution(3, 2, 1)
    for u1, u2, rho in J.c7_4_elements(3, 2):
        v1, v2, r2 = base((u1, u2, rho))
        assert inv(((u2, u1), rho)) == ((v2, v1), r2)


def test_c7_5_rejects_bad_parameters():
    with pytest.raises(ValueError):
        J.c7_5_involution(3, 0, (1, 1, 1), (), 0)


def test_c7_7_example():
    x = (1, 2, 1, 4)
    i, j = J.first_equal_pair(x)
    assert (i, j) == (1, 3)
    inv = J.c7_7_involution(i, j)
    images = set()
    for s in J.s_prime(2):
        out, p = inv(s)
        assert inv(out) == (s, sj.invert_perm(p))
        assert perm_sign(out) == -perm_sign(s)
        images.add(out)
    assert images == set(J.s_prime(2))
    assert sum(perm_sign(s) for s in J.s_prime(2)) == 0


def test_c7_7_all_equal_pairs():
    for x in product((1, 2, 3), repeat=4):
        pair = J.first_equal_pair(x)
        if pair is None:
            continue
        inv = J.c7_7_involution(*pair)
        for s in J.s_prime(2):
            out, p = inv(s)
            assert inv(out)[0] == s and out != s
            e1, e2 = J.eta_J(s, x), J.eta_J(out, x)
            assert all(abs(e1[k]) == abs(e2[p[k]]) for k in range(2))


def test_psi_base_case():
    p = J.psi((1,), (1,))
    assert sj.check_valid(p)[0]
    assert [J.eta_I(e, (1,), (1,)) for e in J.I_elements(1)] == [(0,), (2,)]


@pytest.mark.parametrize("m", [2, 3])
def test_psi_stair_parameters(m):
    a = b = J.stair_params(m)
    p = J.psi(a, b)
    assert sj.check_valid(p) == (True, None)
    ea = lambda e: tuple(abs(v) for v in J.U_eta(a, b)(e))
    eb = lambda e: tuple(abs(v) for v in J.eta_I(e, a, b))
    assert sj.check_compatibility(p, ea, eb) == (True, None)


def test_psi_random_parameters():
    rng = random.Random(11)
    for _ in range(25):
        m = rng.choice((1, 2))
        a = tuple(rng.randint(-1, 2) for _ in range(m))
        b = tuple(rng.randint(-1, 2) for _ in range(m))
        p = J.psi(a, b)
        assert sj.check_valid(p)[0], (a, b)


def test_main_m1():
    s = J.c7_8_assemble(1)
    assert s.src.signed_count() == s.dst.signed_count() == 0
    assert sj.check_valid(s)[0]
    assert sorted(J.eta_abs_J(1)(e) for e in s.dst.elements()) == [(0,), (2,)]
    for e in s.src.elements():
        assert J.sigma_s(1, 0, e) == (0,)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_main_slot_conditions(m):
    s = J.c7_8_assemble(m)
    if m <= 3:
        assert sj.check_valid(s) == (True, None)
    eI, eJ = J.eta_abs_I(m), J.eta_abs_J(m)
    ident = tuple(range(m))
    for side, pool in ((0, s.src.elements()), (1, s.dst.elements())):
        for x in pool:
            s2, y = s.apply(side, x)
            p = J.sigma_s(m, side, x)
            q = J.sigma_s(m, s2, y)
            assert p[0] == 0
            assert sj.compose_perm(p, q) == ident
            ex = eI(x) if side == 0 else eJ(x)
            ey = eI(y) if s2 == 0 else eJ(y)
            assert all(ex[k] == ey[p[k]] for k in ident)


def test_json_helpers():
    assert J.I_to_json(((2, 1), (0, 1)))
    assert J.J_to_json((1, 2, 3, 4))
