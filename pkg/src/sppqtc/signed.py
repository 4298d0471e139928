"""Signed sets and sijections.

A sijection S => T is stored as a fixed-point-free involution on the disjoint
union supp S + supp T.  Points are addressed as (side, x) with side 0 for S and
1 for T.  The effective sign of a point is its sign in S, or minus its sign in
T; the involution must pair points of opposite effective sign.  Restricted to
S+ and T- this is the usual bijection S+ u T- -> S- u T+.

Each step may also report a slot permutation p (a tuple, p[k] is where slot k
of the input goes in the output), used to track which statistic of one side
corresponds to which statistic of the other.  None means the identity.
"""

import itertools

HOP_CAP = 10 ** 7


class SijectionError(RuntimeError):
    pass


class SignedSet:
    """A named signed set.

    sign(x) gives +1 or -1 for x in the support.  elements(), when available,
    yields the support; size is the support size when known.
    """

    def __init__(self, name, sign, elements=None, size=None, contains=None):
        self.name = name
        self.sign = sign
        self._elements = elements
        self.size = size
        self._contains = contains

    def elements(self):
        if self._elements is None:
            raise SijectionError("signed set %r is not materializable" % self.name)
        return self._elements()

    @property
    def materializable(self):
        return self._elements is not None

    def __contains__(self, x):
        if self._contains is not None:
            return self._contains(x)
        return x in set(self.elements())

    def signed_count(self):
        return sum(self.sign(x) for x in self.elements())

    def parts(self):
        pos = [x for x in self.elements() if self.sign(x) > 0]
        neg = [x for x in self.elements() if self.sign(x) < 0]
        return pos, neg

    def __repr__(self):
        return "SignedSet(%r)" % self.name


def finite_set(name, pos, neg=()):
    pos, neg = list(pos), list(neg)
    table = {x: 1 for x in pos}
    for x in neg:
        if x in table:
            raise ValueError("positive and negative parts must be disjoint")
        table[x] = -1
    return SignedSet(name, table.__getitem__, lambda: pos + neg, len(table), table.__contains__)


def interval(name, a, b):
    """The signed range of u in a union running from a to b.

    ({a..b}, {}) when a <= b; ({}, {b+1..a-1}) when a > b + 1; empty when a = b + 1.
    """
    if a <= b:
        return finite_set(name, range(a, b + 1))
    return finite_set(name, (), range(b + 1, a))


def compose_perm(p, q):
    """Slot k goes to p[k], then to q[p[k]]."""
    if p is None:
        return q
    if q is None:
        return p
    return tuple(q[v] for v in p)


def invert_perm(p):
    if p is None:
        return None
    inv = [0] * len(p)
    for k, v in enumerate(p):
        inv[v] = k
    return tuple(inv)


class Sijection:
    """step(side, x) -> (side', y, perm-or-None); an involution on S + T."""

    def __init__(self, src, dst, step, name=None):
        self.src = src
        self.dst = dst
        self.step = step
        self.name = name or "%s=>%s" % (src.name, dst.name)

    @classmethod
    def from_rule(cls, src, dst, rule, slots=None, name=None):
        if slots is None:
            def step(side, x):
                s, y = rule(side, x)
                return s, y, None
        else:
            def step(side, x):
                s, y = rule(side, x)
                return s, y, slots(side, x)
        return cls(src, dst, step, name)

    def apply(self, side, x):
        s, y, _ = self.step(side, x)
        return s, y

    def __call__(self, x):
        """Image of a point of S."""
        return self.apply(0, x)

    def inverse(self):
        st = self.step

        def step(side, x):
            s, y, p = st(1 - side, x)
            return 1 - s, y, p

        return Sijection(self.dst, self.src, step, "inv(%s)" % self.name)

    def effective_sign(self, side, x):
        return self.src.sign(x) if side == 0 else -self.dst.sign(x)

    def __repr__(self):
        return "Sijection(%s)" % self.name


def identity(S, name=None):
    return Sijection(S, S, lambda side, x: (1 - side, x, None), name or "id(%s)" % S.name)


def recode(S, T, fwd, bwd, slots=None, name=None):
    """Sign-preserving bijection S -> T given as a pair of inverse maps."""
    if slots is None:
        def step(side, x):
            return (1, fwd(x), None) if side == 0 else (0, bwd(x), None)
    else:
        def step(side, x):
            if side == 0:
                return 1, fwd(x), slots(0, x)
            return 0, bwd(x), slots(1, x)
    return Sijection(S, T, step, name)


def cancellation(S, involution, slots=None, name=None):
    """S => (empty) from a sign-reversing fixed-point-free involution on S."""
    empty = finite_set("empty", ())

    def step(side, x):
        if side != 0:
            raise SijectionError("the empty signed set has no points")
        return 0, involution(x), (slots(x) if slots else None)

    return Sijection(S, empty, step, name)


def _stage_size(S):
    return S.size if S.size is not None else None


def compose(phi, psi, check_names=True):
    """Zig-zag composite S => U of phi: S => T and psi: T => U."""
    if check_names and phi.dst.name != psi.src.name:
        raise SijectionError("cannot compose: %r vs %r" % (phi.dst.name, psi.src.name))
    size = _stage_size(phi.dst)
    bound = 2 * size + 1 if size is not None else HOP_CAP
    fst, snd = phi.step, psi.step

    def step(side, x):
        perm = None
        hops = 0
        if side == 0:
            s, y, p = fst(0, x)
            perm = compose_perm(perm, p)
            if s == 0:
                return 0, y, perm
            where = "T_from_phi"
        else:
            s, y, p = snd(1, x)
            perm = compose_perm(perm, p)
            if s == 1:
                return 1, y, perm
            where = "T_from_psi"
        while True:
            hops += 1
            if hops > bound:
                raise SijectionError("hop bound %d exceeded in %s" % (bound, phi.dst.name))
            if where == "T_from_phi":
                s, y, p = snd(0, y)
                perm = compose_perm(perm, p)
                if s == 1:
                    return 1, y, perm
                where = "T_from_psi"
            else:
                s, y, p = fst(1, y)
                perm = compose_perm(perm, p)
                if s == 0:
                    return 0, y, perm
                where = "T_from_phi"

    return Sijection(phi.src, psi.dst, step, "(%s);(%s)" % (phi.name, psi.name))


def compose_all(*sijs):
    out = sijs[0]
    for s in sijs[1:]:
        out = compose(out, s)
    return out


def product_set(name, sets):
    def sign(x):
        s = 1
        for f, v in zip(sets, x):
            s *= f.sign(v)
        return s

    size = None
    if all(S.size is not None for S in sets):
        size = 1
        for S in sets:
            size *= S.size
    elements = None
    if all(S.materializable for S in sets):
        def elements():
            return list(itertools.product(*[list(S.elements()) for S in sets]))
    return SignedSet(name, sign, elements, size)


def product(sijs, slot_counts=None, src=None, dst=None):
    """Cartesian product of sijections; the first factor that can stay on its side acts."""
    k = len(sijs)
    src = src or product_set("x".join(s.src.name for s in sijs), [s.src for s in sijs])
    dst = dst or product_set("x".join(s.dst.name for s in sijs), [s.dst for s in sijs])
    offsets = None
    if slot_counts is not None:
        offsets = list(itertools.accumulate([0] + list(slot_counts)))
        total = offsets[-1]

    def block_perm(i, p):
        if offsets is None or p is None:
            return None
        full = list(range(total))
        for a, v in enumerate(p):
            full[offsets[i] + a] = offsets[i] + v
        return tuple(full)

    steps = [s.step for s in sijs]

    def step(side, x):
        images = []
        for i in range(k):
            s, y, p = steps[i](side, x[i])
            if s == side:
                out = x[:i] + (y,) + x[i + 1:]
                return side, out, block_perm(i, p)
            images.append((y, p))
        out = tuple(y for y, _ in images)
        perm = None
        if offsets is not None and any(p is not None for _, p in images):
            full = list(range(total))
            for i, (_, p) in enumerate(images):
                if p is not None:
                    for a, v in enumerate(p):
                        full[offsets[i] + a] = offsets[i] + v
            perm = tuple(full)
        return 1 - side, out, perm

    return Sijection(src, dst, step, "prod(%s)" % ",".join(s.name for s in sijs))


def indexed_union_set(name, index, fiber):
    """Union over t in the signed index set of fiber(t); points are (s, t)."""
    def sign(x):
        s, t = x
        return index.sign(t) * fiber(t).sign(s)

    elements = None
    if index.materializable:
        def elements():
            out = []
            for t in index.elements():
                out.extend((s, t) for s in fiber(t).elements())
            return out
    return SignedSet(name, sign, elements)


def disjoint_union_with_index(psi, fam, src_fiber, dst_fiber, src=None, dst=None):
    """Union over a signed index, glued along psi: T => T~.

    fam(side, t) is the sijection S_t => S_{t'} for every effectively positive
    index point (side, t) of psi, where (side', t') is its partner.  Points of the
    result are pairs (s, t).
    """
    src = src or indexed_union_set("U(%s)" % psi.src.name, psi.src, src_fiber)
    dst = dst or indexed_union_set("U(%s)" % psi.dst.name, psi.dst, dst_fiber)
    pstep = psi.step

    def step(side, x):
        s, t = x
        tside, t2, _ = pstep(side, t)
        if psi.effective_sign(side, t) > 0:
            sub = fam(side, t)
            s2side, s2, p = sub.step(0, s)
            if s2side == 0:
                return side, (s2, t), p
            return tside, (s2, t2), p
        sub = fam(tside, t2)
        s2side, s2, p = sub.step(1, s)
        if s2side == 1:
            return side, (s2, t), p
        return tside, (s2, t2), p

    return Sijection(src, dst, step, "dis(%s)" % psi.name)


def check_valid(sij, src_elems=None, dst_elems=None):
    """Check the involution axioms on materialized supports.

    Returns (True, None) or (False, witness-string).
    """
    src_elems = list(sij.src.elements()) if src_elems is None else list(src_elems)
    dst_elems = list(sij.dst.elements()) if dst_elems is None else list(dst_elems)
    members = ({(0, x) for x in src_elems} | {(1, y) for y in dst_elems})
    for side, pool in ((0, src_elems), (1, dst_elems)):
        for x in pool:
            try:
                s, y = sij.apply(side, x)
            except SijectionError as e:
                return False, "error at %r: %s" % ((side, x), e)
            if (s, y) not in members:
                return False, "%r maps outside the supports to %r" % ((side, x), (s, y))
            if (s, y) == (side, x):
                return False, "fixed point %r" % ((side, x),)
            if sij.effective_sign(s, y) != -sij.effective_sign(side, x):
                return False, "sign mismatch %r -> %r" % ((side, x), (s, y))
            if sij.apply(s, y) != (side, x):
                return False, "not an involution at %r" % ((side, x),)
    return True, None


def check_compatibility(sij, eta_src, eta_dst=None, src_elems=None, dst_elems=None, setwise=None):
    """eta(partner) == eta(point) on every point; set values compared by size."""
    eta_dst = eta_src if eta_dst is None else eta_dst
    src_elems = list(sij.src.elements()) if src_elems is None else src_elems
    dst_elems = list(sij.dst.elements()) if dst_elems is None else dst_elems

    def value(side, x):
        v = eta_src(x) if side == 0 else eta_dst(x)
        if setwise or (setwise is None and isinstance(v, (set, frozenset))):
            return len(v)
        return v

    for side, pool in ((0, src_elems), (1, dst_elems)):
        for x in pool:
            s, y = sij.apply(side, x)
            if value(s, y) != value(side, x):
                return False, ((side, x), (s, y), value(side, x), value(s, y))
    return True, None


def from_pairing(S, T, pairs, name=None):
    """Sijection from an explicit list of ((side, x), (side, y)) pairs."""
    table = {}
    for a, b in pairs:
        table[a] = b
        table[b] = a

    def step(side, x):
        s, y = table[(side, x)]
        return s, y, None

    return Sijection(S, T, step, name)


def traced(sij, log):
    """The same sijection, appending (name, side, x, side', y, perm, sign of y) to log on every step."""
    st = sij.step

    def step(side, x):
        s, y, p = st(side, x)
        log.append((sij.name, side, x, s, y, p, sij.effective_sign(s, y)))
        return s, y, p

    return Sijection(sij.src, sij.dst, step, sij.name)


def random_sijection(S, T, rng, classes=None, name=None):
    """A uniformly shuffled valid sijection S => T.

    classes(side, x) optionally partitions the points; pairing then stays inside
    each class, which makes the result compatible with that statistic.
    """
    key = classes or (lambda side, x: None)
    pos, neg = {}, {}
    for side, pool in ((0, S.elements()), (1, T.elements())):
        for x in pool:
            eff = S.sign(x) if side == 0 else -T.sign(x)
            (pos if eff > 0 else neg).setdefault(key(side, x), []).append((side, x))
    pairs = []
    for k in set(pos) | set(neg):
        a, b = pos.get(k, []), list(neg.get(k, []))
        if len(a) != len(b):
            raise SijectionError("signed sizes differ in class %r" % (k,))
        rng.shuffle(b)
        pairs.extend(zip(a, b))
    return from_pairing(S, T, pairs, name)
