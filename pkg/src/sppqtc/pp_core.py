"""Staircase and shifted-staircase plane partitions and the five classes.

A partition of size n is stored as a tuple of n row tuples with lengths
n, n-1, ..., 1.  For the plane (staircase) kind, row i covers columns
1..n+1-i.  For the shifted kind, row i covers columns i..n.  Indices in the
public helpers are 1-based to match the usual matrix notation.
"""

from collections import namedtuple
from functools import lru_cache
import json

CLASS_NAMES = ("SPP", "eSPP", "stairPP", "pstairPP", "QTCPP")
KIND = {
    "SPP": "shifted",
    "eSPP": "shifted",
    "stairPP": "plane",
    "pstairPP": "plane",
    "QTCPP": "plane",
}

MAX_N = 6
MAX_BOUND = 8


class ShapeError(ValueError):
    """Input does not have the (shifted) staircase shape the class needs."""


class GuardError(ValueError):
    """Enumeration parameters exceed the desk-scale guard."""


ClassTag = namedtuple("ClassTag", "name n bound")
ClassTag.__doc__ = """Class name plus size n and bound (M, or m for eSPP/stairPP)."""


def make_tag(name, n, bound):
    if name not in KIND:
        raise ValueError("unknown class %r" % (name,))
    if n < 1:
        raise ValueError("n must be positive")
    if bound < 0:
        raise ValueError("bound must be non-negative")
    return ClassTag(name, int(n), int(bound))


def top_value(tag):
    """Largest entry allowed in the class."""
    return 2 * tag.bound if tag.name == "eSPP" else tag.bound


def check_shape(rows, n):
    if n < 1 or len(rows) != n:
        raise ShapeError("expected %d rows, got %d" % (n, len(rows)))
    for i, row in enumerate(rows):
        if len(row) != n - i:
            raise ShapeError("row %d has length %d, expected %d" % (i + 1, len(row), n - i))


def freeze(rows):
    return tuple(tuple(int(v) for v in row) for row in rows)


def entry(rows, kind, i, j):
    """pi_{i,j} with 1-based (row, column) in the given kind."""
    if kind == "shifted":
        return rows[i - 1][j - i]
    return rows[i - 1][j - 1]


def zeros(n):
    return tuple((0,) * (n - i) for i in range(n))


def is_monotone(rows, kind):
    n = len(rows)
    for i in range(n):
        row = rows[i]
        for k in range(len(row) - 1):
            if row[k] < row[k + 1]:
                return False
        if i + 1 < n:
            below = rows[i + 1]
            # plane: same list index is the same column; shifted: shift by one
            off = 1 if kind == "shifted" else 0
            for k in range(len(below)):
                if below[k] > row[k + off]:
                    return False
    return True


def _qtc_ok(rows, M):
    n = len(rows)
    for i in range(1, n + 1):
        j = n + 1 - i
        v = rows[i - 1][j - 1]
        if i >= 2 and v < M - rows[i - 2][j - 1]:
            return False
        if j >= 2 and v < M - rows[i - 1][j - 2]:
            return False
    return True


def validate(tag, rows):
    """True iff rows lies in the class; ShapeError on a wrong shape."""
    rows = freeze(rows)
    check_shape(rows, tag.n)
    kind = KIND[tag.name]
    if any(v < 0 for row in rows for v in row):
        return False
    if not is_monotone(rows, kind):
        return False
    if rows[0][0] > top_value(tag):
        return False
    n = tag.n
    if tag.name == "eSPP":
        return all(row[0] % 2 == 0 for row in rows)
    if tag.name == "pstairPP":
        for i in range(n):
            for j in range(n - i - 1):
                if (rows[i][j] - tag.bound) % 2:
                    return False
        return True
    if tag.name == "QTCPP":
        return _qtc_ok(rows, tag.bound)
    return True


def _guard(tag):
    if tag.n > MAX_N or tag.bound > MAX_BOUND:
        raise GuardError("enumeration limited to n <= %d, bound <= %d" % (MAX_N, MAX_BOUND))


def _cell_range(tag, rows_so_far, cur, i, k):
    """Admissible values for cell (row i, list index k), 0-based, in increasing order."""
    kind = KIND[tag.name]
    n = tag.n
    hi = top_value(tag)
    if k > 0:
        hi = min(hi, cur[k - 1])
    if i > 0:
        above = rows_so_far[i - 1]
        hi = min(hi, above[k + 1] if kind == "shifted" else above[k])
    lo = 0
    step = 1
    name = tag.name
    if name == "eSPP" and k == 0:
        step = 2
    elif name == "pstairPP" and k < n - i - 1:
        lo = tag.bound % 2
        step = 2
    elif name == "QTCPP":
        M = tag.bound
        if k == n - i - 1:
            if i > 0:
                lo = max(lo, M - rows_so_far[i - 1][k])
            if k > 0:
                lo = max(lo, M - cur[k - 1])
        else:
            lo = (M + 1) // 2
    return range(lo, hi + 1, step)


def enumerate_class(tag):
    """All members in lexicographic order of the row-major entry sequence."""
    _guard(tag)
    n = tag.n
    out = []
    done = []

    def rec(i, cur):
        if len(cur) == n - i:
            done.append(tuple(cur))
            if i + 1 == n:
                out.append(tuple(done))
            else:
                rec(i + 1, [])
            done.pop()
            return
        for v in _cell_range(tag, done, cur, i, len(cur)):
            cur.append(v)
            rec(i, cur)
            cur.pop()

    rec(0, [])
    return out


def _rows_below(tag, i, prev):
    """Admissible rows with index i (0-based) given the row above (or None)."""
    n = tag.n
    length = n - i
    kind = KIND[tag.name]
    res = []

    def rec(row):
        k = len(row)
        if k == length:
            res.append(tuple(row))
            return
        hi = top_value(tag)
        if row:
            hi = min(hi, row[-1])
        if prev is not None:
            hi = min(hi, prev[k + 1] if kind == "shifted" else prev[k])
        for v in range(hi + 1):
            if tag.name == "eSPP" and k == 0 and v % 2:
                continue
            if tag.name == "pstairPP" and k < length - 1 and (v - tag.bound) % 2:
                continue
            if tag.name == "QTCPP":
                M = tag.bound
                if k < length - 1 and 2 * v < M:
                    continue
                if k == length - 1:
                    if prev is not None and v < M - prev[k]:
                        continue
                    if k > 0 and v < M - row[-1]:
                        continue
            row.append(v)
            rec(row)
            row.pop()

    rec([])
    return res


def count_by_rows(tag):
    """Independent count: row-by-row transfer with memoisation on the previous row."""
    _guard(tag)

    @lru_cache(maxsize=None)
    def ways(i, prev):
        if i == tag.n:
            return 1
        return sum(ways(i + 1, r) for r in _rows_below(tag, i, prev))

    return ways(0, None)


def count_class(tag):
    return len(enumerate_class(tag))


def stat_S(tag, rows, variant="S"):
    """Set-valued statistic S (or S-tilde for stairPP) as a frozenset of 1-based indices."""
    n = tag.n
    if variant == "S~":
        if tag.name != "stairPP":
            raise ValueError("S~ is only defined for stairPP")
        return frozenset(j for j in range(1, n + 1) if rows[0][j - 1] != tag.bound)
    if variant != "S":
        raise ValueError("unknown variant %r" % (variant,))
    if tag.name == "eSPP":
        return frozenset(j for j in range(1, n + 1) if rows[0][j - 1] != 2 * tag.bound)
    if tag.name in ("stairPP", "QTCPP", "pstairPP"):
        return frozenset(i for i in range(1, n + 1) if rows[i - 1][n - i] != 0)
    raise ValueError("S is not defined for %s" % tag.name)


def to_json_obj(rows, kind):
    rows = freeze(rows)
    return {"kind": kind, "shape": [len(r) for r in rows], "rows": [list(r) for r in rows]}


def from_json_obj(obj, kind=None):
    if isinstance(obj, str):
        obj = json.loads(obj)
    if isinstance(obj, list):
        rows = obj
        got_kind = kind
    else:
        rows = obj["rows"]
        got_kind = obj.get("kind", kind)
    if kind is not None and got_kind != kind:
        raise ShapeError("expected kind %r, got %r" % (kind, got_kind))
    return freeze(rows)


def square_from_qtcpp(rows, M):
    """Display helper: the full n x n array of a QTCPP stored in staircase form."""
    n = len(rows)
    sq = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i + j <= n + 1:
                sq[i - 1][j - 1] = rows[i - 1][j - 1]
            else:
                sq[i - 1][j - 1] = M - rows[n - j][n - i]
    return sq
