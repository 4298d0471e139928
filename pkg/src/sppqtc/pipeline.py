"""End-to-end assembly: the #S-compatible bijection f between even SPPs and
staircase partitions, its order-preserving refinement g, and SPP <-> QTCPP."""

from collections import namedtuple
from functools import lru_cache

from . import signed as sj
from .corr import (MarkedStair, qtcpp_to_stair_even, qtcpp_to_stair_odd,
                   stair_to_qtcpp_even, stair_to_qtcpp_odd)
from .espp_chain import (concat_set, concatenate, espp_chain_forward, espp_lgv, extend_starts,
                         normalize, reindex)
from .imjm import c7_8_assemble
from .pp_core import enumerate_class, freeze, make_tag, stat_S, validate, zeros
from .stair_chain import (ChainError, column_lgv, factored_set, level_lgv, mirror_expand,
                          recode_factored, rotation, s_to_s_tilde, stair_chain_forward)
from .tableaux import spp_join, spp_split

BijectionReport = namedtuple("BijectionReport", "domain codomain failures stat_failures")


def factor_transfer(n, m):
    """Move the index across the I/J sijection and permute the path factors so
    that factor k lands in the slot carrying the same |eta|."""
    main = c7_8_assemble(m)
    src = factored_set(n, m)
    dst = concat_set(n, m, "XJ(%d,%d)" % (n, m), True)

    def step(side, x):
        alpha, words = x
        s, beta, p = main.step(side, alpha)
        if p is None:
            return s, (beta, words), None
        out = [None] * m
        for k, w in enumerate(words):
            out[p[k]] = w
        return s, (beta, tuple(out)), p

    return sj.Sijection(src, dst, step, "transfer")


def f_stages(n, m):
    """The atomic sijections of f, in order from stairPP to eSPP."""
    lgv = column_lgv(n, m)
    espp = [espp_lgv(n, m), reindex(n, m), extend_starts(n, m), concatenate(n, m), normalize(n, m)]
    return ([lgv, rotation(n, m), lgv.inverse(), level_lgv(n, m), mirror_expand(n, m),
             recode_factored(n, m), factor_transfer(n, m)]
            + [s.inverse() for s in reversed(espp)])


def f_chain(n, m, log=None):
    """(stairPP, S) => (eSPP, S) as one zig-zag composite.

    With a log, the composite is built from traced atomic stages instead.
    """
    if log is not None:
        return sj.compose_all(*[sj.traced(p, log) for p in f_stages(n, m)])
    return sj.compose_all(s_to_s_tilde(n, m), stair_chain_forward(n, m), factor_transfer(n, m),
                          espp_chain_forward(n, m).inverse())


def _f_one(pi, n, m, direction, log=None):
    if m == 0:
        return zeros(n)
    side = 1 if direction == "forward" else 0
    s, y = f_chain(n, m, log).apply(side, pi)
    if s == side:
        raise ChainError("chain returned to its own side; the composite is not a bijection")
    return y


@lru_cache(maxsize=None)
def f_table(n, m):
    """The full table of f: eSPP(n, m) -> stairPP(n, m), with its inverse."""
    fwd = {pi: _f_one(pi, n, m, "forward") for pi in enumerate_class(make_tag("eSPP", n, m))}
    bwd = {v: k for k, v in fwd.items()}
    if len(bwd) != len(fwd):
        raise ChainError("f is not injective at n=%d, m=%d" % (n, m))
    return fwd, bwd


def f_espp_stair(pi, n, m, direction="forward", trace=None):
    """f on eSPP(n, m) (forward) or its inverse on stairPP(n, m) (backward).

    With a trace list, the chain is run afresh and every hop is recorded.
    """
    pi = freeze(pi)
    name = "eSPP" if direction == "forward" else "stairPP"
    if not validate(make_tag(name, n, m), pi):
        raise ChainError("not an element of %s(%d,%d)" % (name, n, m))
    if trace is not None:
        return _f_one(pi, n, m, direction, trace)
    fwd, bwd = f_table(n, m)
    return fwd[pi] if direction == "forward" else bwd[pi]


def g_refine(s_in, s_out):
    """The order-preserving bijection between two equal-size index sets."""
    a, b = sorted(s_in), sorted(s_out)
    if len(a) != len(b):
        raise ChainError("statistic sets differ in size: %s vs %s" % (a, b))
    return dict(zip(a, b))


def g_for(pi, n, m):
    """g_pi : S(pi) -> S(f(pi)) for pi in eSPP(n, m)."""
    img = f_espp_stair(pi, n, m)
    return g_refine(stat_S(make_tag("eSPP", n, m), pi), stat_S(make_tag("stairPP", n, m), img))


def spp_qtcpp(pi, n, M, direction="forward"):
    """SPP(n, M) -> QTCPP(n, M) (forward) or back."""
    pi = freeze(pi)
    m = M // 2
    if direction == "forward":
        if not validate(make_tag("SPP", n, M), pi):
            raise ChainError("not an element of SPP(%d,%d)" % (n, M))
        base, t, dom = spp_split(pi, M)
        img = f_espp_stair(base, n, m)
        if M % 2:
            return stair_to_qtcpp_odd(img, t, M)
        g = g_refine(dom, stat_S(make_tag("stairPP", n, m), img))
        marks = [0] * n
        for i, j in g.items():
            marks[j - 1] = t[i - 1]
        return stair_to_qtcpp_even(MarkedStair(img, tuple(marks), frozenset(g.values())), M)

    if not validate(make_tag("QTCPP", n, M), pi):
        raise ChainError("not an element of QTCPP(%d,%d)" % (n, M))
    if M % 2:
        stair, t = qtcpp_to_stair_odd(pi, M)
        return spp_join(f_espp_stair(stair, n, m, "backward"), t, M)
    marked = qtcpp_to_stair_even(pi, M)
    base = f_espp_stair(marked.base, n, m, "backward")
    g = g_refine(stat_S(make_tag("eSPP", n, m), base), marked.domain)
    t = [0] * n
    for i, j in g.items():
        t[i - 1] = marked.t[j - 1]
    return spp_join(base, tuple(t), M)


def verify_roundtrip(n, M):
    """Run spp_qtcpp over all of SPP(n, M) and back; also check onto QTCPP(n, M)."""
    spp = enumerate_class(make_tag("SPP", n, M))
    qtc = set(enumerate_class(make_tag("QTCPP", n, M)))
    failures, images = [], set()
    for pi in spp:
        try:
            q = spp_qtcpp(pi, n, M)
            back = spp_qtcpp(q, n, M, "backward")
        except (ChainError, ValueError) as e:
            failures.append({"input": pi, "error": str(e)})
            continue
        images.add(q)
        if back != pi or q not in qtc:
            failures.append({"input": pi, "image": q, "back": back})
    if images != qtc and not failures:
        failures.append({"error": "image misses %d QTCPPs" % len(qtc - images)})
    stat_failures = []
    if M % 2 == 0:
        stat_failures = verify_stat_ledger(n, M // 2)
    return BijectionReport(len(spp), len(qtc), failures, stat_failures)


def verify_stat_ledger(n, m):
    """Elements of eSPP(n, m) where #S is not preserved by f."""
    fwd, _ = f_table(n, m)
    te, ts = make_tag("eSPP", n, m), make_tag("stairPP", n, m)
    return [pi for pi, img in fwd.items() if len(stat_S(te, pi)) != len(stat_S(ts, img))]
