"""Lattice-path models of staircase plane partitions.

Two models are used.  The column model (down/east steps, one path per column)
turns S into S~ by rotating every path.  The level model (up/east steps, one
path per level) leads through the tail swap and the mirror expansion to a
signed union of binomial path sets indexed by I_m[m..1; m..1].
"""

from collections import namedtuple
from itertools import product as iproduct

from . import signed as sj
from .imjm import I_elements, eta_I, sign_I, stair_params
from .paths import (DOWN, UP, PathError, PathFamily, enumerate_C, lgv_sijection,
                    mirror_reflect, trailing_run, transpose_word, within, words_between)
from .pp_core import enumerate_class, freeze, make_tag, stat_S, validate

StairFactored = namedtuple("StairFactored", "sigma t factors")


class ChainError(ValueError):
    pass


def class_set(tag):
    """An all-positive signed set holding one class."""
    name = "%s(%d,%d)" % tag
    return sj.SignedSet(name, lambda x: 1, lambda: enumerate_class(tag),
                        contains=lambda x: validate(tag, x))


def _check(tag, pi):
    pi = freeze(pi)
    if not validate(tag, pi):
        raise ChainError("not an element of %s(%d,%d)" % tag)
    return pi


# ---------------------------------------------------------------------------
# column model: S <=> S~

def column_family(n, m):
    sources = [(-i, -i) for i in range(1, n + 1)]
    sinks = [(n + 1 - 2 * j, -m - j) for j in range(1, n + 1)]
    return PathFamily(sources, sinks, DOWN, "source", name="cols(%d,%d)" % (n, m))


def column_paths(pi, m):
    """Path i walks down column i: before row r's east step the depth is m - pi[r][i]."""
    n = len(pi)
    words = []
    for i in range(n):
        depth, w = 0, []
        for r in range(n - i):
            target = m - pi[r][i]
            w.append("S" * (target - depth) + "E")
            depth = target
        w.append("S" * (m - depth))
        words.append("".join(w))
    return tuple(range(n)), tuple(words)


def column_paths_inverse(config, n, m):
    perm, words = config
    cols = []
    for w in words:
        depth, col = 0, []
        for c in w:
            if c == "S":
                depth += 1
            else:
                col.append(m - depth)
        cols.append(col)
    return tuple(tuple(cols[j][i] for j in range(n - i)) for i in range(n))


def column_lgv(n, m):
    tag = make_tag("stairPP", n, m)
    fam = column_family(n, m)
    return lgv_sijection(class_set(tag), fam.signed_set(), lambda pi: column_paths(pi, m),
                         lambda c: column_paths_inverse(c, n, m), fam.is_ni, fam.lgv,
                         name="lgv-cols")


def rotation(n, m):
    """Rotate each path a half turn about the midpoint of its endpoints."""
    P = column_family(n, m).signed_set()

    def step(side, x):
        perm, words = x
        return 1 - side, (perm, tuple(w[::-1] for w in words)), None

    return sj.Sijection(P, P, step, "rot")


def column_S(config):
    """Number of paths entering their sink vertically; matches #S."""
    return sum(1 for w in config[1] if w.endswith("S"))


def column_S_tilde(config):
    """Number of paths leaving their source vertically; matches #S~."""
    return sum(1 for w in config[1] if w.startswith("S"))


def s_to_s_tilde(n, m):
    """(stairPP, S) => (stairPP, S~)."""
    lgv = column_lgv(n, m)
    return sj.compose_all(lgv, rotation(n, m), lgv.inverse())


# ---------------------------------------------------------------------------
# level model

LEVELS = {
    "top": lambda i, m: m + 1 - i,
    "bottom": lambda i, m: i,
}
DEFAULT_ORIENTATION = "top"


def level_family(n, m):
    sources = [(i, -i) for i in range(1, m + 1)]
    sinks = [(i + n, n - i) for i in range(1, m + 1)]
    bound = 2 * m + 1
    return PathFamily(sources, sinks, UP, "sink", region=lambda v: v[0] - v[1] <= bound,
                      name="levels(%d,%d)" % (n, m))


def level_word(pi, h):
    """Boundary of {pi >= h}: bottom row first, E up to the row's length, then N."""
    n = len(pi)
    x, w = 0, []
    for r in range(n - 1, -1, -1):
        lam = sum(1 for v in pi[r] if v >= h)
        w.append("E" * (lam - x) + "N")
        x = lam
    w.append("E" * (n - x))
    return "".join(w)


def _word_levels(word, n):
    """Inverse of level_word: row lengths lam[r] for r = 0..n-1."""
    lam = [0] * n
    east, k = 0, 0
    for c in word:
        if c == "E":
            east += 1
        else:
            lam[n - 1 - k] = east
            k += 1
    return lam


def stair_to_paths(pi, m, orientation=DEFAULT_ORIENTATION):
    pi = freeze(pi)
    theta = LEVELS[orientation]
    return tuple(range(m)), tuple(level_word(pi, theta(i, m)) for i in range(1, m + 1))


def paths_to_stair(config, n, m, orientation=DEFAULT_ORIENTATION):
    fam = level_family(n, m)
    if not fam.is_member(config):
        raise ChainError("configuration is not in the region or misses its anchors")
    if not fam.is_ni(config):
        raise ChainError("configuration is intersecting")
    theta = LEVELS[orientation]
    levels = {theta(i + 1, m): _word_levels(w, n) for i, w in enumerate(config[1])}
    rows = []
    for r in range(n):
        rows.append(tuple(sum(1 for h in levels if levels[h][r] >= c) for c in range(1, n - r + 1)))
    pi = tuple(rows)
    if not validate(make_tag("stairPP", n, m), pi) or stair_to_paths(pi, m, orientation) != tuple(config):
        raise ChainError("configuration is not the image of a staircase partition")
    return pi


def level_lgv(n, m, orientation=DEFAULT_ORIENTATION):
    tag = make_tag("stairPP", n, m)
    fam = level_family(n, m)
    P = fam.signed_set("X5a(%d,%d)" % (n, m))
    return lgv_sijection(class_set(tag), P, lambda pi: stair_to_paths(pi, m, orientation),
                         lambda c: paths_to_stair(c, n, m, orientation), fam.is_ni, fam.lgv,
                         name="lgv-levels")


def mirror_start(i, m, e):
    """Source a_i, or its mirror image across x - y = 2m+2 when e = 1 (i is 1-based)."""
    return (i, -i) if e == 0 else (-i + 2 * m + 2, i - 2 * m - 2)


def mirror_set(n, m):
    sinks = [(i + n, n - i) for i in range(1, m + 1)]

    def sign(x):
        perm, e, words = x
        return sign_I((tuple(p + 1 for p in perm), e))

    def elements():
        out = []
        for alpha in I_elements(m):
            sigma, e = alpha
            perm = tuple(s - 1 for s in sigma)
            lists = [words_between(mirror_start(sigma[i], m, e[i]), sinks[i]) for i in range(m)]
            out.extend((perm, e, ws) for ws in iproduct(*lists))
        return out

    return sj.SignedSet("X5b(%d,%d)" % (n, m), sign, elements)


def mirror_expand(n, m):
    """Paths kept left of x - y = 2m+1 => all paths from a_i minus all paths from a_i'."""
    src = level_family(n, m).signed_set("X5a(%d,%d)" % (n, m))
    dst = mirror_set(n, m)
    bound, line = 2 * m + 1, 2 * m + 2

    def step(side, x):
        if side == 0:
            perm, words = x
            return 1, (perm, (0,) * m, words), None
        perm, e, words = x
        for i in range(m):
            start = mirror_start(perm[i] + 1, m, e[i])
            if e[i] == 1 or not within(start, words[i], bound):
                _, w = mirror_reflect(start, words[i], line)
                e2 = e[:i] + (1 - e[i],) + e[i + 1:]
                return 1, (perm, e2, words[:i] + (w,) + words[i + 1:]), None
        return 0, (perm, words), None

    return sj.Sijection(src, dst, step, "mirror")


def factored_set(n, m):
    a = b = stair_params(m)

    def sign(x):
        return sign_I(x[0])

    def elements():
        out = []
        for alpha in I_elements(m):
            eta = eta_I(alpha, a, b)
            lists = [enumerate_C(2 * n, n + abs(v)) for v in eta]
            out.extend((alpha, ws) for ws in iproduct(*lists))
        return out

    return sj.SignedSet("XI(%d,%d)" % (n, m), sign, elements)


def _normalize(words, eta):
    return tuple(transpose_word(w) if v < 0 else w for w, v in zip(words, eta))


def recode_factored(n, m):
    """Read each mirror-stage path as a word of C(2n, n+eta_i), transposed when eta_i < 0."""
    a = b = stair_params(m)

    def fwd(x):
        perm, e, words = x
        alpha = (tuple(p + 1 for p in perm), tuple(e))
        return alpha, _normalize(words, eta_I(alpha, a, b))

    def bwd(y):
        alpha, words = y
        perm = tuple(s - 1 for s in alpha[0])
        return perm, alpha[1], _normalize(words, eta_I(alpha, a, b))

    return sj.recode(mirror_set(n, m), factored_set(n, m), fwd, bwd, name="recode-I")


def stair_chain_forward(n, m, orientation=DEFAULT_ORIENTATION):
    """stairPP(n, m) => union over I_m of products of C(2n, n+|eta_i|)."""
    return sj.compose_all(level_lgv(n, m, orientation), mirror_expand(n, m), recode_factored(n, m))


def stat_S_tilde_factored(element, n=None):
    """Step indices of the final east run of factor 1."""
    alpha, words = element
    if not words:
        return frozenset()
    w = words[0]
    k = trailing_run(w, "E")
    return frozenset(range(len(w) - k, len(w)))


def level_S_tilde(config):
    """Trailing east run of the path into b_1, for path and mirror stages."""
    words = config[-1]
    return trailing_run(words[0], "E") if words else 0


# ---------------------------------------------------------------------------
# calibration

CALIBRATION_EXAMPLE = ((6, 4, 3, 3), (4, 2, 1), (3, 0), (1,))


def calibrate(orientation, max_n=3, max_m=2):
    """True iff the orientation passes both calibration conditions.

    The worked example must give a non-intersecting configuration in the
    region, and the final east run of the path into b_1 must count S~ on
    every staircase partition up to the given size.
    """
    n, m = 4, 6
    try:
        config = stair_to_paths(CALIBRATION_EXAMPLE, m, orientation)
    except (KeyError, PathError):
        return False
    fam = level_family(n, m)
    if not (fam.is_member(config) and fam.is_ni(config)):
        return False
    for n in range(1, max_n + 1):
        for m in range(0, max_m + 1):
            tag = make_tag("stairPP", n, m)
            for pi in enumerate_class(tag):
                config = stair_to_paths(pi, m, orientation)
                if m and trailing_run(config[1][0]) != len(stat_S(tag, pi, "S~")):
                    return False
    return True


def calibrated_orientations():
    return [o for o in LEVELS if calibrate(o)]


def factored_to_json(element):
    (sigma, t), words = element
    return {"sigma": list(sigma), "t": list(t), "factors": list(words)}


def factored_from_json(obj):
    return (tuple(obj["sigma"]), tuple(obj["t"])), tuple(obj["factors"])
