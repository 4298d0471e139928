"""Decreasing semistandard tableaux, conjugation of shifted partitions, and
row insertion.

Tableaux here have weakly decreasing rows and strictly decreasing columns.
A tableau of size n is a tuple of exactly n row tuples (trailing rows may be
empty), so shape sequences always have length n.
"""

from collections import namedtuple

from .pp_core import check_shape, freeze


class TableauError(ValueError):
    pass


InsertionRecord = namedtuple("InsertionRecord", "base letters")


def shape(T):
    return tuple(len(r) for r in T)


def is_tableau(T, n=None):
    n = len(T) if n is None else n
    if len(T) != n:
        return False
    sh = shape(T)
    if any(sh[i] < sh[i + 1] for i in range(n - 1)):
        return False
    for i, row in enumerate(T):
        for k, v in enumerate(row):
            if not 1 <= v <= n:
                return False
            if k and row[k - 1] < v:
                return False
            if i and T[i - 1][k] <= v:
                return False
    return True


def empty(n):
    return ((),) * n


def conj(pi):
    """Shifted staircase partition -> tableau; row i reads off the conjugate of row i."""
    pi = freeze(pi)
    n = len(pi)
    check_shape(pi, n)
    rows = []
    for row in pi:
        top = row[0]
        rows.append(tuple(sum(1 for v in row if v >= j) for j in range(1, top + 1)))
    return tuple(rows)


def conj_inv(T):
    T = freeze(T)
    n = len(T)
    if not is_tableau(T, n):
        raise TableauError("not a decreasing tableau of size %d" % n)
    out = []
    for i, row in enumerate(T):
        # shifted row i+1 covers columns i+1..n; offset j-i counts from 1
        out.append(tuple(sum(1 for v in row if v >= d) for d in range(1, n - i + 1)))
    return tuple(out)


def row_insert(T, x, trace=None):
    """Insert x; returns (new tableau, 1-based position of the new box).

    If trace is a list, (row, bumped entry) pairs are appended to it.
    """
    n = len(T)
    if not 1 <= x <= n:
        raise TableauError("letter %d out of range 1..%d" % (x, n))
    rows = [list(r) for r in T]
    for i in range(n):
        row = rows[i]
        k = next((k for k, v in enumerate(row) if v < x), None)
        if k is None:
            row.append(x)
            if trace is not None:
                trace.append((i + 1, None))
            return tuple(map(tuple, rows)), (i + 1, len(row))
        row[k], x = x, row[k]
        if trace is not None:
            trace.append((i + 1, x))
    raise TableauError("insertion fell off the bottom: not a size-%d tableau" % n)


def is_corner(T, r, c):
    sh = shape(T)
    if not 1 <= r <= len(T) or sh[r - 1] != c or c == 0:
        return False
    return r == len(T) or sh[r] < c


def row_extract(T, corner):
    """Reverse bumping from a removable corner; returns (tableau, letter)."""
    r, c = corner
    if not is_corner(T, r, c):
        raise TableauError("(%d,%d) is not a removable corner" % (r, c))
    rows = [list(row) for row in T]
    y = rows[r - 1].pop()
    for i in range(r - 2, -1, -1):
        row = rows[i]
        k = max(k for k, v in enumerate(row) if v > y)
        row[k], y = y, row[k]
    return tuple(map(tuple, rows)), y


def multi_extract(U, lam):
    """Undo insertion of an increasing letter sequence whose boxes form sh(U)/lam."""
    U = freeze(U)
    mu = shape(U)
    lam = tuple(lam) + (0,) * (len(U) - len(lam))
    if len(lam) != len(U) or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise TableauError("lam must be a partition with at most %d parts" % len(U))
    if any(not 0 <= mu[i] - lam[i] <= 1 for i in range(len(U))):
        raise TableauError("skew shape must have at most one box in each row")
    T = U
    letters = []
    for r in range(len(U), 0, -1):
        if mu[r - 1] > lam[r - 1]:
            T, x = row_extract(T, (r, mu[r - 1]))
            letters.append(x)
    letters.reverse()
    if any(letters[i] >= letters[i + 1] for i in range(len(letters) - 1)):
        raise TableauError("extracted letters are not strictly increasing")
    return InsertionRecord(T, tuple(letters))


def multi_insert(T, letters):
    for x in sorted(letters):
        T, _ = row_insert(T, x)
    return T


def even_floor(mu):
    return tuple(v - (v % 2) for v in mu)


def ssyt_odd_split(U):
    """U -> (T of even shape, t) with t[i-1] = 1 iff letter i was extracted."""
    U = freeze(U)
    n = len(U)
    rec = multi_extract(U, even_floor(shape(U)))
    t = tuple(1 if i in rec.letters else 0 for i in range(1, n + 1))
    return rec.base, t


def ssyt_odd_join(T, t):
    T = freeze(T)
    if any(v % 2 for v in shape(T)):
        raise TableauError("base tableau must have even shape")
    return multi_insert(T, [i + 1 for i, v in enumerate(t) if v])


def stat_S_tableau(T, m, n=None):
    n = len(T) if n is None else n
    if m == 0:
        return frozenset()
    first = T[0] if T else ()
    top = first[2 * m - 1] if len(first) >= 2 * m else 0
    return frozenset(range(top + 1, n + 1))


def spp_split(pi, M):
    """SPP(n,M) -> (eSPP(n,M//2) element, total t, domain of t).

    For odd M the domain is {1..n}; for even M it is S of the base and t vanishes
    off it.
    """
    pi = freeze(pi)
    n = len(pi)
    T, t = ssyt_odd_split(conj(pi))
    base = conj_inv(T)
    if M % 2:
        dom = frozenset(range(1, n + 1))
    else:
        dom = stat_S_tableau(T, M // 2, n)
        assert all(i in dom for i in range(1, n + 1) if t[i - 1]), "marks outside S"
    return base, t, dom


def spp_join(base, t, M):
    base = freeze(base)
    n = len(base)
    t = tuple(t)
    if len(t) != n:
        raise TableauError("t must have length n")
    T = conj(base)
    if M % 2 == 0:
        dom = stat_S_tableau(T, M // 2, n)
        if any(t[i - 1] for i in range(1, n + 1) if i not in dom):
            raise TableauError("marks must lie inside S of the base")
    return conj_inv(ssyt_odd_join(T, t))
