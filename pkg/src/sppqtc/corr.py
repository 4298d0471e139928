"""Parity staircase <-> QTCPP, and the 1:2^#S correspondences between QTCPP and
staircase partitions for odd and even bound.

All functions work on the staircase-stored form: row i (1-based) holds
columns 1..n+1-i, and the anti-diagonal cell of row i is its last entry.
"""

from collections import namedtuple

from .pp_core import freeze, make_tag, stat_S, to_json_obj

MarkedStair = namedtuple("MarkedStair", "base t domain")
MarkedStair.__doc__ = """A staircase partition with marks t (length n, zero off domain)."""


def _neighbour_min(rows, i, j):
    """min of the cells above and to the left of (i, j), 1-based; None for n=1."""
    vals = []
    if i > 1:
        vals.append(rows[i - 2][j - 1])
    if j > 1:
        vals.append(rows[i - 1][j - 2])
    return min(vals) if vals else None


def pstair_to_qtcpp(pi, M):
    pi = freeze(pi)
    n = len(pi)
    out = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 2 - i):
            v = pi[i - 1][j - 1]
            if i + j < n + 1:
                assert (v + M) % 2 == 0, "parity violation"
                row.append((v + M) // 2)
            else:
                mij = _neighbour_min(pi, i, j)
                if mij is None:
                    row.append(v)
                else:
                    assert (M - mij) % 2 == 0
                    row.append(v + (M - mij) // 2)
        out.append(tuple(row))
    return tuple(out)


def qtcpp_to_pstair(pi, M):
    pi = freeze(pi)
    n = len(pi)
    out = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 2 - i):
            v = pi[i - 1][j - 1]
            if i + j < n + 1:
                row.append(2 * v - M)
            else:
                mij = _neighbour_min(pi, i, j)
                row.append(v if mij is None else v - M + mij)
        out.append(tuple(row))
    return tuple(out)


def qtcpp_to_stair_odd(pi, M):
    """QTCPP(n, 2m+1) -> (stairPP(n, m) element, t in {0,1}^n)."""
    assert M % 2 == 1
    m = M // 2
    pi = freeze(pi)
    n = len(pi)
    rows, t = [], []
    for i in range(n):
        row = [v - m - 1 for v in pi[i][:-1]]
        d = pi[i][-1]
        row.append(max(d - m - 1, m - d))
        t.append(0 if d >= m + 1 else 1)
        rows.append(tuple(row))
    return tuple(rows), tuple(t)


def stair_to_qtcpp_odd(base, t, M):
    assert M % 2 == 1
    m = M // 2
    base = freeze(base)
    rows = []
    for i, r in enumerate(base):
        row = [v + m + 1 for v in r[:-1]]
        d = r[-1]
        row.append(m - d if t[i] else m + 1 + d)
        rows.append(tuple(row))
    return tuple(rows)


def qtcpp_to_stair_even(pi, M):
    """QTCPP(n, 2m) -> MarkedStair over stairPP(n, m) with marks on S(base)."""
    assert M % 2 == 0
    m = M // 2
    pi = freeze(pi)
    n = len(pi)
    rows, t = [], []
    for i in range(n):
        row = [v - m for v in pi[i][:-1]]
        d = pi[i][-1]
        row.append(max(d - m, m - d))
        t.append(1 if d < m else 0)
        rows.append(tuple(row))
    base = tuple(rows)
    dom = stat_S(make_tag("stairPP", n, m), base)
    return MarkedStair(base, tuple(t), dom)


def stair_to_qtcpp_even(marked, M):
    assert M % 2 == 0
    m = M // 2
    base = freeze(marked.base)
    n = len(base)
    dom = stat_S(make_tag("stairPP", n, m), base)
    if marked.domain is not None and frozenset(marked.domain) != dom:
        raise ValueError("mark domain %s differs from S(base) %s" % (sorted(marked.domain), sorted(dom)))
    rows = []
    for i, r in enumerate(base):
        row = [v + m for v in r[:-1]]
        d = r[-1]
        if i + 1 in dom:
            row.append(m - d if marked.t[i] else m + d)
        else:
            if marked.t[i]:
                raise ValueError("mark set outside S(base)")
            row.append(m)
        rows.append(tuple(row))
    return tuple(rows)


def marked_to_json(marked):
    dom = sorted(marked.domain)
    return {
        "base": to_json_obj(marked.base, "plane"),
        "marks": {"domain": dom, "values": [marked.t[i - 1] for i in dom]},
    }


def marked_from_json(obj):
    from .pp_core import from_json_obj

    base = from_json_obj(obj["base"], "plane")
    dom = obj["marks"]["domain"]
    t = [0] * len(base)
    for i, v in zip(dom, obj["marks"]["values"]):
        t[i - 1] = int(v)
    return MarkedStair(base, tuple(t), frozenset(dom))
