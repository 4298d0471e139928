"""The signed index sets I_m[a; b] and J_m<x>, their eta statistics, and the
sijection between I_m[m..1; m..1] and J_m<1..2m> with slot tracking.

Element encodings (permutations are 1-based tuples):
  I element   (sigma, t)      sigma in S_m, t in {0,1}^m
  J element   sigma           sigma in S'_2m (block minima increasing)
  U element   (u, sigma)      u = (u_1..u_m), sigma in S'_2m
  telescope source element (u, rho) with rho in {(1,2), (2,1)}; its target is
  the two-point set {0: +|x|, 1: -|x+2b|}.
"""

from functools import lru_cache
from itertools import permutations, product as iproduct

from . import signed as sj
from .paths import perm_sign

ID2 = (1, 2)
SWAP2 = (2, 1)


# ---------------------------------------------------------------------------
# index sets

def s_prime(m):
    """S'_2m in lexicographic order."""
    return [s for s in permutations(range(1, 2 * m + 1)) if is_block_sorted(s)]


def is_block_sorted(s):
    mins = [min(s[2 * k], s[2 * k + 1]) for k in range(len(s) // 2)]
    return all(mins[k] < mins[k + 1] for k in range(len(mins) - 1))


def block_sort(s, tags=None):
    """Sort the pairs of s by their minimum; returns (sorted s, slot perm, sorted tags).

    slot perm p has p[k] = new position of block k.
    """
    m = len(s) // 2
    order = sorted(range(m), key=lambda k: min(s[2 * k], s[2 * k + 1]))
    out = []
    for k in order:
        out.extend((s[2 * k], s[2 * k + 1]))
    p = [0] * m
    for new, old in enumerate(order):
        p[old] = new
    new_tags = None if tags is None else tuple(tags[k] for k in order)
    return tuple(out), tuple(p), new_tags


def eta_I(alpha, a, b):
    sigma, t = alpha
    return tuple(a[i] - (-1) ** t[i] * b[sigma[i] - 1] for i in range(len(sigma)))


def eta_J(sigma, x):
    return tuple(x[sigma[2 * i + 1] - 1] - x[sigma[2 * i] - 1] - 1 for i in range(len(sigma) // 2))


def sign_I(alpha):
    sigma, t = alpha
    return perm_sign(sigma) * (-1) ** sum(t)


def I_elements(m):
    return [(s, t) for s in permutations(range(1, m + 1)) for t in iproduct((0, 1), repeat=m)]


def I_set(a, b, name=None):
    m = len(a)
    return sj.SignedSet(name or "I%d[%s;%s]" % (m, a, b), sign_I, lambda: I_elements(m), 2 ** m * _fact(m))


def J_set(x, name=None):
    m = len(x) // 2
    return sj.SignedSet(name or "J%d<%s>" % (m, x), perm_sign, lambda: s_prime(m))


def _fact(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def interval_sign(b):
    """Sign of every index of the union u = 1..b (b >= 1: +; b < 0: -)."""
    return 1 if b >= 1 else -1


def interval_range(b):
    return range(1, b + 1) if b >= 1 else range(b + 1, 1)


# ---------------------------------------------------------------------------
# translation and decomposition

def c7_1_translate(sigma, x, d):
    """Translation of all parameters by d: the element itself is unchanged."""
    return sigma, tuple(v + d for v in x)


def c7_2_decompose(sigma):
    """sigma in S'_2m -> (i, rho, sigma') with i the partner of 1 in the first block."""
    i = max(sigma[0], sigma[1])
    rho = ID2 if sigma[0] == 1 else SWAP2
    rest = tuple(v - 1 if v < i else v - 2 for v in sigma[2:])
    return i, rho, rest


def c7_2_join(i, rho, rest):
    head = (1, i) if rho == ID2 else (i, 1)
    return head + tuple(v + 1 if v + 1 < i else v + 2 for v in rest)


def c7_2_params(x, i):
    """Parameters of the two factors: (x_1, x_i) and x without positions 1, i."""
    return (x[0], x[i - 1]), tuple(v for p, v in enumerate(x, 1) if p not in (1, i))


# ---------------------------------------------------------------------------
# telescoping

def c7_3_source(x, b):
    def sign(e):
        u, rho = e
        return interval_sign(b) * (1 if rho == ID2 else -1)

    def elements():
        return [(u, rho) for u in interval_range(b) for rho in (ID2, SWAP2)]

    return sj.SignedSet("T3src(%d,%d)" % (x, b), sign, elements, 2 * abs(b) if b >= 0 else 2 * (-b))


def c7_3_target(x, b):
    return sj.finite_set("T3dst(%d,%d)" % (x, b), [0], [1])


def c7_3_eta(x, b):
    """|eta_1| on source and target points."""
    def src(e):
        u, rho = e
        return abs(x + 2 * u - 2) if rho == ID2 else abs(x + 2 * u)

    def dst(bit):
        return abs(x) if bit == 0 else abs(x + 2 * b)

    return src, dst


def c7_3_step(x, b):
    def step(side, e):
        if side == 0:
            u, rho = e
            if b >= 1:
                if rho == ID2:
                    return (1, 0, None) if u == 1 else (0, (u - 1, SWAP2), None)
                return (1, 1, None) if u == b else (0, (u + 1, ID2), None)
            if rho == SWAP2:
                return (1, 0, None) if u == 0 else (0, (u + 1, ID2), None)
            return (1, 1, None) if u == b + 1 else (0, (u - 1, SWAP2), None)
        if b == 0:
            return 1, 1 - e, None
        if e == 0:
            return 0, ((1, ID2) if b >= 1 else (0, SWAP2)), None
        return 0, ((b, SWAP2) if b >= 1 else (b + 1, ID2)), None

    return step


def c7_3_telescope(x, b):
    """Union over u = 1..b of J_1<1, x+2u>  =>  ({|x|}, {|x+2b|})."""
    return sj.Sijection(c7_3_source(x, b), c7_3_target(x, b), c7_3_step(x, b), "c73(%d,%d)" % (x, b))


def c7_3_via_union(x, b):
    """The same telescope assembled from the generic indexed-union rule (b >= 1).

    Index points (u, 0) carry the identity block and (u, 1) the swapped block;
    the gluing pairs (u, 1) with (u+1, 0) and sends the ends to the target.
    """
    assert b >= 1
    idx = sj.finite_set("T3idx", [(u, 0) for u in range(1, b + 1)], [(u, 1) for u in range(1, b + 1)])
    tgt = sj.finite_set("T3tgt", ["first"], ["last"])

    def pstep(side, t):
        if side == 0:
            u, k = t
            if k == 1:
                return (1, "last", None) if u == b else (0, (u + 1, 0), None)
            return (1, "first", None) if u == 1 else (0, (u - 1, 1), None)
        return (0, (1, 0), None) if t == "first" else (0, (b, 1), None)

    psi = sj.Sijection(idx, tgt, pstep)
    point = sj.finite_set("pt", ["*"])
    single = sj.identity(point)
    union = sj.disjoint_union_with_index(psi, lambda side, t: single, lambda t: point, lambda t: point)

    def to_union(e):
        u, rho = e
        return "*", (u, 0 if rho == ID2 else 1)

    def from_union(side, z):
        s, t = z
        if side == 1:
            return 0 if t == "first" else 1
        u, k = t
        return u, (ID2 if k == 0 else SWAP2)

    def step(side, e):
        if side == 0:
            s, z = union.apply(0, to_union(e))
        else:
            s, z = union.apply(1, ("*", "first" if e == 0 else "last"))
        return s, from_union(s, z), None

    return sj.Sijection(c7_3_source(x, b), c7_3_target(x, b), step, "c73u(%d,%d)" % (x, b))


# ---------------------------------------------------------------------------
# cancellations

def c7_4_params(b1, b2, y, u1, u2):
    return (y - b1 + 2 * u1, y - b2 + 2 * u2)


def c7_4_elements(b1, b2):
    return [(u1, u2, rho) for u1 in interval_range(b1) for u2 in interval_range(b2) for rho in (ID2, SWAP2)]


def c7_4_sign(b1, b2):
    def sign(e):
        u1, u2, rho = e
        return interval_sign(b1) * interval_sign(b2) * (1 if rho == ID2 else -1)
    return sign


def c7_4_involution(b1, b2, y):
    """Sign-reversing involution on the double union of J_1<y-b1+2u1, y-b2+2u2>."""
    def x_of(u1):
        return b1 - 2 * u1 - b2 + 1

    def inv(e):
        u1, u2, rho = e
        side, z, _ = c7_3_step(x_of(u1), b2)(0, (u2, rho))
        if side == 0:
            return u1, z[0], z[1]
        u1b = b1 + 1 - u1
        side, z, _ = c7_3_step(x_of(u1b), b2)(1, 1 - z)
        assert side == 0
        return u1b, z[0], z[1]

    return inv


def c7_4_cancel(b1, b2, y):
    S = sj.SignedSet("C4(%d,%d,%d)" % (b1, b2, y), c7_4_sign(b1, b2), lambda: c7_4_elements(b1, b2))
    return sj.cancellation(S, c7_4_involution(b1, b2, y), name="c74")


def c7_5_params(M, K, bs, xs, y, u):
    return tuple(xs) + tuple(y - bs[j - 1] + 2 * u[j - 1] for j in range(M, 0, -1))


def c7_5_involution(M, K, bs, xs, y):
    """Sign-reversing involution on the union over u of J_{(M+K)/2}<xs, y-b_M+2u_M, ..., y-b_1+2u_1>.

    Points are (u, sigma).
    """
    if M < 2 or K >= M or (M - K) % 2:
        raise ValueError("need M >= 2, K < M, K = M mod 2")
    bs, xs = tuple(bs), tuple(xs)
    if M == 2 and K == 0:
        base = c7_4_involution(bs[1], bs[0], y)

        def inv(e):
            u, sigma = e
            v1, v2, rho = base((u[1], u[0], sigma))
            return (v2, v1), rho

        return inv

    total = M + K

    def inv(e):
        u, sigma = e
        i, rho, rest = c7_2_decompose(sigma)
        keep_x = [xs[p - 1] for p in range(2, K + 1) if p != i]
        # y-parameter positions K+1..total map to b indices M+K+1-p
        keep_j = sorted(total + 1 - p for p in range(max(K + 1, 2), total + 1) if p != i)
        sub = _c7_5_cached(len(keep_j), len(keep_x), tuple(bs[j - 1] for j in keep_j), tuple(keep_x), y)
        u_sub = tuple(u[j - 1] for j in keep_j)
        v_sub, rest2 = sub((u_sub, rest))
        u2 = list(u)
        for j, v in zip(keep_j, v_sub):
            u2[j - 1] = v
        return tuple(u2), c7_2_join(i, rho, rest2)

    return inv


@lru_cache(maxsize=None)
def _c7_5_cached(M, K, bs, xs, y):
    return c7_5_involution(M, K, bs, xs, y)


def c7_5_elements(M, K, bs):
    m = (M + K) // 2
    out = []
    for u in iproduct(*[interval_range(b) for b in bs]):
        for s in s_prime(m):
            out.append((tuple(u), s))
    return out


def c7_5_sign(bs):
    def sign(e):
        u, sigma = e
        s = perm_sign(sigma)
        for b in bs:
            s *= interval_sign(b)
        return s
    return sign


def c7_5_cancel(M, K, bs, xs, y):
    S = sj.SignedSet("C5", c7_5_sign(bs), lambda: c7_5_elements(M, K, bs))
    return sj.cancellation(S, c7_5_involution(M, K, bs, xs, y), name="c75")


def c7_7_involution(i, j):
    """sigma -> [(i j) o sigma] with the induced slot permutation."""
    def inv(sigma):
        swapped = tuple(j if v == i else i if v == j else v for v in sigma)
        out, p, _ = block_sort(swapped)
        return out, p
    return inv


def first_equal_pair(x):
    for i in range(len(x)):
        for j in range(i + 1, len(x)):
            if x[i] == x[j]:
                return i + 1, j + 1
    return None


# ---------------------------------------------------------------------------
# the expansion of I_m[a; b] into a union of J_m

def U_params(a, b, u):
    m = len(a)
    fixed = (1,) + tuple(1 + a[0] - a[p] for p in range(1, m))
    return fixed + tuple(a[0] - b[j - 1] + 2 * u[j - 1] for j in range(m, 0, -1))


def U_set(a, b):
    a, b = tuple(a), tuple(b)
    m = len(a)

    def elements():
        return [(tuple(u), s) for u in iproduct(*[interval_range(v) for v in b]) for s in s_prime(m)]

    return sj.SignedSet("U%d[%s;%s]" % (m, a, b), c7_5_sign(b), elements)


def U_eta(a, b):
    def eta(e):
        u, sigma = e
        return eta_J(sigma, U_params(a, b, u))
    return eta


@lru_cache(maxsize=None)
def psi(a, b):
    """Sijection U_m(a, b) => I_m[a; b]; slots are carried identically."""
    a, b = tuple(a), tuple(b)
    m = len(a)
    U = U_set(a, b)
    I = I_set(a, b)
    if m == 1:
        tel = c7_3_telescope(a[0] - b[0], b[0])
        tstep = tel.step

        def step(side, e):
            if side == 0:
                (u1,), sigma = e
                s, z, _ = tstep(0, (u1, sigma))
                if s == 0:
                    return 0, ((z[0],), z[1]), None
                return 1, ((1,), (z,)), None
            sigma, t = e
            s, z, _ = tstep(1, t[0])
            if s == 1:
                return 1, ((1,), (z,)), None
            return 0, ((z[0],), z[1]), None

        return sj.Sijection(U, I, step, "psi1")

    a1 = a[0]
    sub_a = a[1:]
    subs = {}

    def sub_of(j):
        if j not in subs:
            sub_b = b[:j - 1] + b[j:]
            subs[j] = (psi(sub_a, sub_b), c7_3_step(a1 - b[j - 1], b[j - 1]))
        return subs[j]

    # cancellations of the strata where 1 pairs with a fixed parameter
    fixed_params = (1,) + tuple(1 + a1 - a[p] for p in range(1, m))

    def cancel(i, u, rest):
        xs = tuple(fixed_params[p - 1] for p in range(2, m + 1) if p != i)
        inv = _c7_5_cached(m, m - 2, b, xs, a1)
        return inv((u, rest))

    def from_u(e):
        """One application starting from a U point; returns (side, point)."""
        u, sigma = e
        i, rho, rest = c7_2_decompose(sigma)
        if i <= m:
            u2, rest2 = cancel(i, u, rest)
            return 0, (u2, c7_2_join(i, rho, rest2))
        j = 2 * m + 1 - i
        sub, tel = sub_of(j)
        u_sub = u[:j - 1] + u[j:]
        return _walk_product(j, (u[j - 1], rho), (u_sub, rest), 0, sub, tel, b)

    def from_i(e):
        sigma, t = e
        j = sigma[0]
        sub, tel = sub_of(j)
        # re-index the remaining sigma values to positions in b without b_j
        rest = tuple(v if v < j else v - 1 for v in sigma[1:])
        return _walk_product(j, t[0], (rest, t[1:]), 1, sub, tel, b)

    def step(side, e):
        if side == 0:
            s, z = from_u(e)
        else:
            s, z = from_i(e)
        return s, z, None

    return sj.Sijection(U, I, step, "psi%d" % m)


def _walk_product(j, first, second, side, sub, tel, b):
    """The product rule for telescope x psi_{m-1}, run from one side and recoded.

    On the U side, first = (u_j, rho) and second = (u without u_j, sigma');
    on the I side, first = t_1 and second = (sigma'', t'').
    """
    s1, z1, _ = tel(side, first)
    if s1 == side:
        return side, _assemble(j, z1, second, side, b)
    s2, z2, _ = sub.step(side, second)
    if s2 == side:
        return side, _assemble(j, first, z2, side, b)
    return 1 - side, _assemble(j, z1, z2, 1 - side, b)


def _assemble(j, first, second, side, b):
    if side == 0:
        (uj, rho), (u_sub, rest) = first, second
        u = u_sub[:j - 1] + (uj,) + u_sub[j - 1:]
        m = len(b)
        i = 2 * m + 1 - j
        return u, c7_2_join(i, rho, rest)
    t1, (sig, t) = first, second
    sigma = (j,) + tuple(v if v < j else v + 1 for v in sig)
    return sigma, (t1,) + tuple(t)


# ---------------------------------------------------------------------------
# the main sijection I_m[m..1; m..1] => J_m<1..2m>

def stair_params(m):
    return tuple(range(m, 0, -1))


def U_to_J(m):
    """Keep the stratum u = b as the identity onto J_m<1..2m>; cancel the rest."""
    a = b = stair_params(m)
    U = U_set(a, b)
    J = J_set(tuple(range(1, 2 * m + 1)), "J%d" % m)

    def step(side, e):
        if side == 1:
            return 0, (b, e), None
        u, sigma = e
        if u == b:
            return 1, sigma, None
        i, j = first_equal_pair(U_params(a, b, u))
        out, p = c7_7_involution(i, j)(sigma)
        return 0, (u, out), p

    return sj.Sijection(U, J, step, "UJ%d" % m)


@lru_cache(maxsize=None)
def c7_8_assemble(m):
    """The sijection I_m[m..1; m..1] => J_m<1..2m>, slot perms on every step."""
    a = b = stair_params(m)
    return sj.compose(psi(a, b).inverse(), U_to_J(m))


def eta_abs_I(m):
    a = b = stair_params(m)
    return lambda alpha: tuple(abs(v) for v in eta_I(alpha, a, b))


def eta_abs_J(m):
    x = tuple(range(1, 2 * m + 1))
    return lambda sigma: tuple(abs(v) for v in eta_J(sigma, x))


def sigma_s(m, side, e):
    """Slot permutation (0-based tuple) of the main sijection at a point."""
    s, y, p = c7_8_assemble(m).step(side, e)
    return p if p is not None else tuple(range(m))


def fiber_counts_I(m):
    """Signed counts keyed by (|eta_1|, sorted |eta_2..m|)."""
    a = b = stair_params(m)
    out = {}
    for al in I_elements(m):
        e = [abs(v) for v in eta_I(al, a, b)]
        key = (e[0], tuple(sorted(e[1:])))
        out[key] = out.get(key, 0) + sign_I(al)
    return {k: v for k, v in out.items() if v}


def fiber_counts_J(m):
    x = tuple(range(1, 2 * m + 1))
    out = {}
    for s in s_prime(m):
        e = [abs(v) for v in eta_J(s, x)]
        key = (e[0], tuple(sorted(e[1:])))
        out[key] = out.get(key, 0) + perm_sign(s)
    return {k: v for k, v in out.items() if v}


def I_to_json(alpha, a=None, b=None):
    obj = {"sigma": list(alpha[0]), "t": list(alpha[1])}
    if a is not None:
        obj["params"] = {"a": list(a), "b": list(b)}
    return obj


def J_to_json(sigma, x=None):
    obj = {"sigma": list(sigma)}
    if x is not None:
        obj["params"] = list(x)
    return obj
