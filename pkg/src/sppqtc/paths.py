"""Monotone lattice paths stored as step words, path families with a signed
permutation label, the tail-swap involution, rotation and reflection.

A path is a start point plus a word over a two-letter alphabet.  The alphabet
is fixed by a step table: UP uses E=(1,0), N=(0,1); DOWN uses E=(1,0),
S=(0,-1).
"""

from itertools import combinations, permutations
from math import comb

UP = {"E": (1, 0), "N": (0, 1)}
DOWN = {"E": (1, 0), "S": (0, -1)}


class PathError(ValueError):
    pass


def perm_sign(p):
    """Sign of a permutation given as a sequence of distinct comparable items."""
    p = list(p)
    s = 1
    seen = [False] * len(p)
    pos = {v: i for i, v in enumerate(sorted(p))}
    q = [pos[v] for v in p]
    for i in range(len(q)):
        if not seen[i]:
            j, k = i, 0
            while not seen[j]:
                seen[j] = True
                j = q[j]
                k += 1
            if k % 2 == 0:
                s = -s
    return s


def vertices(start, word, steps=UP):
    x, y = start
    out = [(x, y)]
    for c in word:
        dx, dy = steps[c]
        x += dx
        y += dy
        out.append((x, y))
    return out


def end_point(start, word, steps=UP):
    x, y = start
    for c in word:
        dx, dy = steps[c]
        x += dx
        y += dy
    return x, y


def words_between(a, b, steps=UP):
    """All words from a to b, ordered by where the second letter sits; empty if unreachable."""
    (l1, (d1x, d1y)), (l2, (d2x, d2y)) = sorted(steps.items())
    dx, dy = b[0] - a[0], b[1] - a[1]
    # solve i*d1 + j*d2 = (dx, dy) for non-negative integers i, j
    det = d1x * d2y - d1y * d2x
    i_num = dx * d2y - dy * d2x
    j_num = d1x * dy - d1y * dx
    if i_num % det or j_num % det:
        return []
    i, j = i_num // det, j_num // det
    if i < 0 or j < 0:
        return []
    return [_word(l1, l2, i + j, pos) for pos in combinations(range(i + j), j)]


def _word(l1, l2, length, pos):
    w = [l1] * length
    for p in pos:
        w[p] = l2
    return "".join(w)


def count_C(u, v):
    """Number of words of length u with v letters N (0 outside 0 <= v <= u)."""
    if not 0 <= v <= u:
        return 0
    return comb(u, v)


def enumerate_C(u, v):
    if u < 0:
        raise PathError("length must be non-negative")
    if not 0 <= v <= u:
        return []
    return [_word("E", "N", u, pos) for pos in combinations(range(u), v)]


def transpose_word(word):
    """Reflect a path of C(u, v) to one of C(u, u-v): reverse and swap E/N.

    The initial N-run becomes a final E-run, which keeps the top-row statistic
    in place.
    """
    return word[::-1].translate(_SWAP)


_SWAP = str.maketrans("EN", "NE")


def swap_letters(word):
    return word.translate(_SWAP)


def trailing_run(word, letter="E"):
    k = 0
    for c in reversed(word):
        if c != letter:
            break
        k += 1
    return k


def leading_run(word, letter="N"):
    k = 0
    for c in word:
        if c != letter:
            break
        k += 1
    return k


def rotate180(word):
    """Rotate a path about the midpoint of its endpoints; the endpoints stay put."""
    return word[::-1]


def edges(start, word, steps=UP):
    vs = vertices(start, word, steps)
    return [(vs[k], vs[k + 1]) for k in range(len(word))]


# ---------------------------------------------------------------------------
# intersections and the tail swap

def shared_vertex(starts, words, steps=UP):
    """The maximal vertex (by x+y, then x) visited by two or more paths.

    Returns (v, [(path index, step index), ...]) or None.
    """
    seen = {}
    best = None
    for k, (a, w) in enumerate(zip(starts, words)):
        for s, v in enumerate(vertices(a, w, steps)):
            hit = seen.get(v)
            if hit is None:
                seen[v] = [(k, s)]
            else:
                hit.append((k, s))
                key = (v[0] + v[1], v[0])
                if best is None or key > best:
                    best = key
    if best is None:
        return None
    v = (best[1], best[0] - best[1])
    return v, seen[v]


def is_nonintersecting(starts, words, steps=UP):
    seen = set()
    for a, w in zip(starts, words):
        for v in vertices(a, w, steps):
            if v in seen:
                return False
            seen.add(v)
    return True


def tail_swap(starts, words, steps=UP, keep="prefix"):
    """One application of the tail-swap involution.

    The two paths of smallest index through the selected vertex exchange the
    parts after it.  With keep="prefix" each index keeps its start, with
    keep="suffix" each index keeps its end.  Returns (starts, words, (k, l)).
    """
    hit = shared_vertex(starts, words, steps)
    if hit is None:
        raise PathError("configuration is non-intersecting")
    _, where = hit
    (k, sk), (l, sl) = sorted(where)[:2]
    starts, words = list(starts), list(words)
    wk, wl = words[k], words[l]
    if keep == "prefix":
        words[k] = wk[:sk] + wl[sl:]
        words[l] = wl[:sl] + wk[sk:]
    else:
        words[k] = wl[:sl] + wk[sk:]
        words[l] = wk[:sk] + wl[sl:]
        starts[k], starts[l] = starts[l], starts[k]
    return tuple(starts), tuple(words), (k, l)


# ---------------------------------------------------------------------------
# reflection across x - y = c (used with c = 2m + 2)

def reflect_point(p, c):
    return p[1] + c, p[0] - c


def last_touch(start, word, c, steps=UP):
    """Step index of the last vertex on x - y = c, or None."""
    last = None
    for s, (x, y) in enumerate(vertices(start, word, steps)):
        if x - y == c:
            last = s
    return last


def mirror_reflect(start, word, c):
    """Reflect the part of an up-path before its last visit to x - y = c.

    An involution between paths from a that touch the line and paths from the
    reflected start.
    """
    s = last_touch(start, word, c)
    if s is None:
        raise PathError("path does not meet the line x - y = %d" % c)
    return reflect_point(start, c), swap_letters(word[:s]) + word[s:]


def within(start, word, bound, steps=UP):
    """True iff every vertex satisfies x - y <= bound."""
    return all(x - y <= bound for x, y in vertices(start, word, steps))


# ---------------------------------------------------------------------------
# path families

class PathFamily:
    """Signed set of path tuples between fixed sources and sinks.

    order="source": path k starts at sources[k] and ends at sinks[perm[k]].
    order="sink":   path k ends at sinks[k] and starts at sources[perm[k]].
    A configuration is (perm, words) with sign sgn(perm).  An optional vertex
    predicate restricts the graph.
    """

    def __init__(self, sources, sinks, steps=UP, order="source", region=None, name="paths"):
        if len(sources) != len(sinks):
            raise PathError("need as many sources as sinks")
        self.sources = tuple(sources)
        self.sinks = tuple(sinks)
        self.steps = steps
        self.order = order
        self.region = region
        self.name = name

    def endpoints(self, perm):
        if self.order == "source":
            return [(self.sources[k], self.sinks[p]) for k, p in enumerate(perm)]
        return [(self.sources[p], self.sinks[k]) for k, p in enumerate(perm)]

    def starts(self, perm):
        return [a for a, _ in self.endpoints(perm)]

    def sign(self, config):
        return perm_sign(config[0])

    def allowed(self, start, word):
        if self.region is None:
            return True
        return all(self.region(v) for v in vertices(start, word, self.steps))

    def is_member(self, config):
        perm, words = config
        if sorted(perm) != list(range(len(self.sources))) or len(words) != len(perm):
            return False
        for (a, b), w in zip(self.endpoints(perm), words):
            if end_point(a, w, self.steps) != b or not self.allowed(a, w):
                return False
        return True

    def factor_words(self, a, b):
        return [w for w in words_between(a, b, self.steps) if self.allowed(a, w)]

    def configs(self):
        """All configurations, permutations in lexicographic order."""
        n = len(self.sources)
        out = []
        for perm in permutations(range(n)):
            lists = [self.factor_words(a, b) for a, b in self.endpoints(perm)]
            for words in _product(lists):
                out.append((perm, words))
        return out

    def is_ni(self, config):
        perm, words = config
        return is_nonintersecting(self.starts(perm), words, self.steps)

    def lgv(self, config):
        """Tail-swap involution; the permutation label changes by a transposition."""
        perm, words = config
        starts, new_words, (k, l) = tail_swap(
            self.starts(perm), words, self.steps,
            keep="prefix" if self.order == "source" else "suffix")
        perm = list(perm)
        perm[k], perm[l] = perm[l], perm[k]
        return tuple(perm), new_words

    def signed_set(self, name=None):
        from .signed import SignedSet

        return SignedSet(name or self.name, self.sign, self.configs, contains=self.is_member)


def lgv_sijection(objects, family, encode, decode, is_ni, swap, name="lgv"):
    """objects => family: objects go to their non-intersecting configurations,
    intersecting configurations are paired by the tail swap."""
    from .signed import Sijection

    def step(side, x):
        if side == 0:
            return 1, encode(x), None
        if is_ni(x):
            return 0, decode(x), None
        return 1, swap(x), None

    return Sijection(objects, family, step, name)


def _product(lists):
    out = [()]
    for lst in lists:
        out = [t + (w,) for t in out for w in lst]
    return out


def edge_multiset(starts, words, steps=UP):
    out = {}
    for a, w in zip(starts, words):
        for e in edges(a, w, steps):
            out[e] = out.get(e, 0) + 1
    return out


def svg(starts, words, steps=UP, lines=(), scale=24):
    """Minimal SVG drawing of a path tuple; lines are (c, label) for x - y = c."""
    pts = [v for a, w in zip(starts, words) for v in vertices(a, w, steps)]
    if not pts:
        pts = [(0, 0)]
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    x0, x1, y0, y1 = min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1

    def tx(p):
        return (p[0] - x0) * scale, (y1 - p[1]) * scale

    width, height = (x1 - x0) * scale, (y1 - y0) * scale
    parts = ['<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d">' % (width, height)]
    for gx in range(x0, x1 + 1):
        a, b = tx((gx, y0)), tx((gx, y1))
        parts.append('<line x1="%d" y1="%d" x2="%d" y2="%d" stroke="#eee"/>' % (a + b))
    for gy in range(y0, y1 + 1):
        a, b = tx((x0, gy)), tx((x1, gy))
        parts.append('<line x1="%d" y1="%d" x2="%d" y2="%d" stroke="#eee"/>' % (a + b))
    for c, label in lines:
        lo = max(x0, y0 + c)
        hi = min(x1, y1 + c)
        if lo <= hi:
            a, b = tx((lo, lo - c)), tx((hi, hi - c))
            parts.append('<line x1="%d" y1="%d" x2="%d" y2="%d" stroke="orange" '
                         'stroke-dasharray="4"><title>%s</title></line>' % (a + b + (label,)))
    colours = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22"]
    for k, (a, w) in enumerate(zip(starts, words)):
        pp = " ".join("%d,%d" % tx(v) for v in vertices(a, w, steps))
        parts.append('<polyline points="%s" fill="none" stroke="%s" stroke-width="2"/>'
                     % (pp, colours[k % len(colours)]))
        parts.append('<circle cx="%d" cy="%d" r="3" fill="red"/>' % tx(a))
    parts.append("</svg>")
    return "\n".join(parts)
