"""Lattice paths for even symmetric plane partitions and the chain to the
J_m-indexed union of binomial path sets.

Each level h of a shifted plane partition gives one up/east path of length n
whose j-th step is north iff j is a row length of {pi >= h}.  Its start on the
line x + y = n records how many rows the level has.
"""

from collections import namedtuple
from itertools import combinations, permutations, product as iproduct

from . import signed as sj
from .imjm import block_sort, eta_J, is_block_sorted, s_prime
from .paths import (UP, enumerate_C, is_nonintersecting, leading_run, lgv_sijection,
                    perm_sign, swap_letters, tail_swap, trailing_run, transpose_word,
                    words_between)
from .pp_core import enumerate_class, freeze, make_tag, validate
from .stair_chain import ChainError, class_set

EsppFactored = namedtuple("EsppFactored", "sigma factors")
TauConfig = namedtuple("TauConfig", "tau sigma words")

# level of path k when the largest allowed entry is top
LEVELS = {
    "top": lambda k, top: top + 1 - k,
    "bottom": lambda k, top: k,
}
DEFAULT_ORIENTATION = "top"


def source(i, n):
    return i, n - i


def sink(i, n):
    return i + n, n - i


def full_tau(tt):
    """(t_1, t_1+1, t_2, t_2+1, ...) from the block starts."""
    out = []
    for t in tt:
        out.extend((t, t + 1))
    return tuple(out)


def level_word(pi, h, n):
    parts = {sum(1 for v in row if v >= h) for row in pi}
    return "".join("N" if j in parts else "E" for j in range(1, n + 1))


def spp_to_level_paths(pi, top, orientation=DEFAULT_ORIENTATION):
    """Shifted partition with entries <= top -> (tau, words), one path per level."""
    pi = freeze(pi)
    n = len(pi)
    theta = LEVELS[orientation]
    words = tuple(level_word(pi, theta(k, top), n) for k in range(1, top + 1))
    tau = tuple(k + w.count("N") for k, w in enumerate(words, 1))
    return tau, words


def _levels_to_spp(levels, n):
    lengths = [sorted(parts, reverse=True) for parts in levels]
    rows = []
    for r in range(n):
        rows.append(tuple(sum(1 for p in lengths if len(p) > r and p[r] >= c)
                          for c in range(1, n - r + 1)))
    return tuple(rows)


def espp_to_paths(pi, m, orientation=DEFAULT_ORIENTATION):
    """eSPP(n, m) -> TauConfig with paired starts, sigma = identity."""
    pi = freeze(pi)
    tau, words = spp_to_level_paths(pi, 2 * m, orientation)
    tt = tau[0::2]
    if full_tau(tt) != tau:
        raise ChainError("starts are not paired: %r" % (tau,))
    return TauConfig(tt, tuple(range(1, 2 * m + 1)), words)


def paths_to_espp(config, n, m, orientation=DEFAULT_ORIENTATION):
    tt, sigma, words = config
    tau = full_tau(tt)
    if sigma != tuple(range(1, 2 * m + 1)):
        raise ChainError("a non-intersecting configuration has sigma = id")
    if any(tau[k] >= tau[k + 1] for k in range(len(tau) - 1)):
        raise ChainError("starts must be strictly increasing")
    starts = [source(t, n) for t in tau]
    if not is_nonintersecting(starts, words):
        raise ChainError("configuration is intersecting")
    theta = LEVELS[orientation]
    order = sorted(range(2 * m), key=lambda k: theta(k + 1, 2 * m))
    levels = [{j for j, c in enumerate(words[k], 1) if c == "N"} for k in order]
    pi = _levels_to_spp(levels, n)
    if not validate(make_tag("eSPP", n, m), pi) or espp_to_paths(pi, m, orientation) != tuple(config):
        raise ChainError("configuration is not the image of an even SPP")
    return pi


# ---------------------------------------------------------------------------
# stages

def _block_words(tt, sigma, n):
    tau = full_tau(tt)
    return [words_between(source(t, n), sink(s, n)) for t, s in zip(tau, sigma)]


def _stage_set(name, n, m, tts, sigmas):
    def elements():
        out = []
        for tt in tts():
            for sigma in sigmas():
                out.extend(TauConfig(tt, sigma, ws) for ws in iproduct(*_block_words(tt, sigma, n)))
        return out

    return sj.SignedSet(name, lambda x: perm_sign(x.sigma), elements)


def increasing_stage(n, m):
    """Block starts strictly increasing, sigma anywhere in S_2m."""
    return _stage_set("X6a(%d,%d)" % (n, m), n, m,
                      lambda: combinations(range(1, n + 2 * m + 1), m),
                      lambda: permutations(range(1, 2 * m + 1)))


def distinct_stage(n, m):
    """Block starts pairwise distinct, sigma in S'_2m."""
    return _stage_set("X6b(%d,%d)" % (n, m), n, m,
                      lambda: permutations(range(1, n + 2 * m + 1), m),
                      lambda: s_prime(m))


def free_stage(n, m):
    """Block starts arbitrary in 1..n+2m, sigma in S'_2m."""
    return _stage_set("X6c(%d,%d)" % (n, m), n, m,
                      lambda: iproduct(range(1, n + 2 * m + 1), repeat=m),
                      lambda: s_prime(m))


def lgv_step(config, n):
    tt, sigma, words = config
    starts = [source(t, n) for t in full_tau(tt)]
    _, words2, (k, l) = tail_swap(starts, words, UP, keep="prefix")
    sigma = list(sigma)
    sigma[k], sigma[l] = sigma[l], sigma[k]
    return TauConfig(tt, tuple(sigma), words2)


def is_ni(config, n):
    starts = [source(t, n) for t in full_tau(config.tau)]
    return is_nonintersecting(starts, config.words)


def espp_lgv(n, m, orientation=DEFAULT_ORIENTATION):
    return lgv_sijection(class_set(make_tag("eSPP", n, m)), increasing_stage(n, m),
                         lambda pi: espp_to_paths(pi, m, orientation),
                         lambda c: paths_to_espp(c, n, m, orientation),
                         lambda c: is_ni(c, n), lambda c: lgv_step(c, n), name="lgv-espp")


def tau_sigma_reindex(config, direction="forward"):
    """Move along the block action: forward sorts blocks by sigma minima,
    backward sorts them by their start."""
    tt, sigma, words = config
    m = len(tt)
    tags = [(tt[i], words[2 * i], words[2 * i + 1]) for i in range(m)]
    if direction == "forward":
        if len(set(tt)) != m:
            raise ChainError("block starts must be distinct")
        s2, _, tags2 = block_sort(sigma, tags)
    else:
        if not is_block_sorted(sigma):
            raise ChainError("sigma must be block sorted")
        order = sorted(range(m), key=lambda i: tt[i])
        s2 = tuple(v for i in order for v in (sigma[2 * i], sigma[2 * i + 1]))
        tags2 = [tags[i] for i in order]
    tt2 = tuple(t for t, _, _ in tags2)
    words2 = tuple(w for _, w1, w2 in tags2 for w in (w1, w2))
    return TauConfig(tt2, s2, words2)


def reindex(n, m):
    return sj.recode(increasing_stage(n, m), distinct_stage(n, m),
                     lambda x: tau_sigma_reindex(x, "forward"),
                     lambda y: tau_sigma_reindex(y, "backward"), name="reindex")


def duplicate_pair(config):
    tt, sigma = config.tau, config.sigma
    best = None
    for j, k in combinations(range(len(tt)), 2):
        if tt[j] == tt[k]:
            a, b = sorted((sigma[2 * j], sigma[2 * k]))
            key = (tt[j], a, b)
            if best is None or key < best[0]:
                best = (key, j, k)
    return None if best is None else best[1:]


def duplicate_tau_cancel(config):
    """Swap the second path (and its sink) between the first two blocks with equal
    start, then re-sort the blocks."""
    hit = duplicate_pair(config)
    if hit is None:
        raise ChainError("block starts are distinct")
    j, k = hit
    tt, sigma, words = config
    sigma, words = list(sigma), list(words)
    sigma[2 * j + 1], sigma[2 * k + 1] = sigma[2 * k + 1], sigma[2 * j + 1]
    words[2 * j + 1], words[2 * k + 1] = words[2 * k + 1], words[2 * j + 1]
    tags = [(tt[i], words[2 * i], words[2 * i + 1]) for i in range(len(tt))]
    s2, _, tags2 = block_sort(tuple(sigma), tags)
    return TauConfig(tuple(t for t, _, _ in tags2), s2,
                     tuple(w for _, w1, w2 in tags2 for w in (w1, w2)))


def extend_starts(n, m):
    """Distinct starts => arbitrary starts; repeated starts cancel."""
    def step(side, x):
        if side == 0:
            return 1, x, None
        if len(set(x.tau)) == len(x.tau):
            return 0, x, None
        return 1, duplicate_tau_cancel(x), None

    return sj.Sijection(distinct_stage(n, m), free_stage(n, m), step, "extend")


def _reflect_back(word):
    # reflection across x + y = n reverses the path and swaps its letters
    return swap_letters(word[::-1])


def concat_block(tt_i, w1, w2):
    return _reflect_back(w2) + w1


def split_block(q, s, n):
    """Inverse of concat_block for a factor starting at (s, -s)."""
    head, tail = q[:n], q[n:]
    return s + head.count("E"), tail, _reflect_back(head)


def concat_set(n, m, name=None, normalized=False):
    x = tuple(range(1, 2 * m + 1))

    def elements():
        out = []
        for sigma in s_prime(m):
            eta = eta_J(sigma, x)
            if normalized:
                lists = [enumerate_C(2 * n, n + abs(v)) for v in eta]
            else:
                lists = [enumerate_C(2 * n, n + v) for v in eta]
            out.extend((sigma, ws) for ws in iproduct(*lists))
        return out

    return sj.SignedSet(name or "XJ0(%d,%d)" % (n, m), lambda e: perm_sign(e[0]), elements)


def concatenate(n, m):
    def fwd(c):
        tt, sigma, words = c
        return sigma, tuple(concat_block(tt[i], words[2 * i], words[2 * i + 1]) for i in range(m))

    def bwd(e):
        sigma, qs = e
        tt, words = [], []
        for i, q in enumerate(qs):
            t, w1, w2 = split_block(q, sigma[2 * i + 1] - 1, n)
            tt.append(t)
            words.extend((w1, w2))
        return TauConfig(tuple(tt), sigma, tuple(words))

    return sj.recode(free_stage(n, m), concat_set(n, m), fwd, bwd, name="concat")


def normalize(n, m):
    x = tuple(range(1, 2 * m + 1))

    def flip(e):
        sigma, qs = e
        eta = eta_J(sigma, x)
        return sigma, tuple(transpose_word(q) if v < 0 else q for q, v in zip(qs, eta))

    return sj.recode(concat_set(n, m), concat_set(n, m, "XJ(%d,%d)" % (n, m), True), flip, flip,
                     name="abs")


def espp_chain_forward(n, m, orientation=DEFAULT_ORIENTATION):
    """eSPP(n, m) => union over J_m<1..2m> of products of C(2n, n+|eta_i|)."""
    return sj.compose_all(espp_lgv(n, m, orientation), reindex(n, m), extend_starts(n, m),
                          concatenate(n, m), normalize(n, m))


# ---------------------------------------------------------------------------
# the statistic S along the chain

def config_S(config):
    """Final east run of the path into b_1."""
    k = config.sigma.index(1)
    return trailing_run(config.words[k], "E")


def stat_S_factored(element, normalized=True):
    """Edge set (as step indices) of factor 1 carrying S.

    On the normalized form this is the final east run.  Before normalization,
    when sigma_2 = 1 the factor is stored untransposed and S sits in its
    initial north run instead.
    """
    sigma, qs = element
    if not qs:
        return frozenset()
    q = qs[0]
    if not normalized and sigma[1] == 1:
        return frozenset(range(leading_run(q, "N")))
    k = trailing_run(q, "E")
    return frozenset(range(len(q) - k, len(q)))


# ---------------------------------------------------------------------------
# calibration

CALIBRATION_EXAMPLE = ((6, 4, 3, 3), (4, 2, 1), (2, 0), (0,))


def calibrate(orientation, max_n=3, max_m=2):
    """Evenness criterion and non-intersection on SPP(n, 2m), plus the worked example."""
    try:
        espp_to_paths(CALIBRATION_EXAMPLE, 3, orientation)
    except ChainError:
        return False
    for n in range(1, max_n + 1):
        for m in range(0, max_m + 1):
            for pi in enumerate_class(make_tag("SPP", n, 2 * m)):
                tau, words = spp_to_level_paths(pi, 2 * m, orientation)
                if any(tau[k] >= tau[k + 1] for k in range(len(tau) - 1)):
                    return False
                if not all(1 <= t <= n + 2 * m for t in tau):
                    return False
                if not is_nonintersecting([source(t, n) for t in tau], words):
                    return False
                paired = all(tau[2 * i + 1] == tau[2 * i] + 1 for i in range(m))
                if paired != validate(make_tag("eSPP", n, m), pi):
                    return False
    return True


def calibrated_orientations():
    return [o for o in LEVELS if calibrate(o)]


def factored_to_json(element):
    sigma, qs = element
    return {"sigma": list(sigma), "factors": list(qs)}


def factored_from_json(obj):
    return tuple(obj["sigma"]), tuple(obj["factors"])
