"""Command-line front end.

    sppqtc count --class SPP --n 2 --M 1
    sppqtc enumerate --class eSPP --n 2 --m 1
    echo '[[8,6,6,3],[4,4,0],[4,2],[1]]' | sppqtc map --class pstairPP --n 4 --M 8
    sppqtc verify --suite examples
    sppqtc render --class stairPP --n 4 --m 6 --in pi.json --out pi.svg
"""

import hashlib
import json
import random
import sys
import time
from itertools import product as iproduct
from concurrent.futures import ProcessPoolExecutor

import click

from . import corr, espp_chain, imjm, pipeline, pp_core, signed, stair_chain, tableaux
from .paths import UP, edge_multiset, svg

# forward direction of each map; backward reads the partner class
PARTNER = {"SPP": "QTCPP", "eSPP": "stairPP", "pstairPP": "QTCPP"}
SUITES = ("examples", "counts", "roundtrip", "compat", "lgv-counts", "imjm-fibers",
          "sij-kernel", "calibration")


def jsonable(x):
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (frozenset, set)):
        return sorted(jsonable(v) for v in x)
    if isinstance(x, (tuple, list)):
        return [jsonable(v) for v in x]
    return x


def dump(obj):
    return json.dumps(jsonable(obj), sort_keys=True)


def _bound(name, M, m):
    """Pick the class bound: m for eSPP/stairPP, M for the rest."""
    want_m = name in ("eSPP", "stairPP")
    val = m if want_m else M
    if val is None:
        raise click.UsageError("--%s is required for class %s" % ("m" if want_m else "M", name))
    return val


def _tag(name, n, M, m):
    try:
        return pp_core.make_tag(name, n, _bound(name, M, m))
    except ValueError as e:
        raise click.UsageError(str(e))


def _table(rows, kind="plane"):
    lines = []
    for i, row in enumerate(rows):
        pad = "   " * i if kind == "shifted" else ""
        lines.append(pad + " ".join("%2d" % v for v in row))
    return "\n".join(lines)


def _read_partition(path):
    text = open(path).read() if path else sys.stdin.read()
    try:
        obj = json.loads(text)
        if isinstance(obj, dict) and "input" in obj:
            obj = obj["input"]
        return pp_core.from_json_obj(obj)
    except (ValueError, KeyError, TypeError) as e:
        raise click.UsageError("could not read a partition: %s" % e)


@click.group()
def main():
    """Symmetric plane partitions and QTCPPs: enumeration, maps and checks."""


def _class_options(f):
    f = click.option("--m", "m", type=int, default=None, help="bound m (eSPP, stairPP)")(f)
    f = click.option("--M", "M", type=int, default=None, help="bound M (SPP, QTCPP, pstairPP)")(f)
    f = click.option("--n", "n", type=int, required=True)(f)
    f = click.option("--class", "cls", type=click.Choice(pp_core.CLASS_NAMES), required=True)(f)
    return f


def _enumerate(tag):
    try:
        return pp_core.enumerate_class(tag)
    except pp_core.GuardError as e:
        raise click.UsageError(str(e))


@main.command("count")
@_class_options
def count_cmd(cls, n, M, m):
    """Print the number of elements of a class."""
    try:
        click.echo(pp_core.count_class(_tag(cls, n, M, m)))
    except pp_core.GuardError as e:
        raise click.UsageError(str(e))


@main.command("enumerate")
@_class_options
@click.option("--format", "fmt", type=click.Choice(["json", "table"]), default="json")
def enumerate_cmd(cls, n, M, m, fmt):
    """List a class in canonical (lexicographic) order, one element per line."""
    tag = _tag(cls, n, M, m)
    kind = pp_core.KIND[cls]
    for pi in _enumerate(tag):
        click.echo(dump(pi) if fmt == "json" else _table(pi, kind) + "\n")


def digest(x):
    return hashlib.sha1(dump(x).encode()).hexdigest()[:12]


def hop(entry):
    name, side, _, side2, y, p, sign = entry
    return {"stage": name, "from": side, "to": side2, "sign": sign, "digest": digest(y),
            "slots": p}


def _map_one(cls, n, bound, pi, direction, trace):
    """Returns (output, ledger) for one partition."""
    src = cls if direction == "forward" else PARTNER[cls]
    if not pp_core.validate(pp_core.make_tag(src, n, bound), pi):
        raise click.UsageError("input is not an element of %s(%d,%d)" % (src, n, bound))
    ledger = None
    if cls == "pstairPP":
        out = corr.pstair_to_qtcpp(pi, bound) if direction == "forward" else corr.qtcpp_to_pstair(pi, bound)
    elif cls == "eSPP":
        out = pipeline.f_espp_stair(pi, n, bound, direction, trace)
        dst = PARTNER[cls] if direction == "forward" else cls
        ledger = {"S_in": pp_core.stat_S(pp_core.make_tag(src, n, bound), pi),
                  "S_out": pp_core.stat_S(pp_core.make_tag(dst, n, bound), out)}
    else:
        out = pipeline.spp_qtcpp(pi, n, bound, direction)
        spp = pi if direction == "forward" else out
        base, _, dom = tableaux.spp_split(spp, bound)
        img = pipeline.f_espp_stair(base, n, bound // 2)
        ledger = {"S_in": pp_core.stat_S(pp_core.make_tag("eSPP", n, bound // 2), base),
                  "S_out": pp_core.stat_S(pp_core.make_tag("stairPP", n, bound // 2), img)}
        if trace is not None:
            pipeline.f_espp_stair(base, n, bound // 2, "forward", trace)
    return out, ledger


@main.command("map")
@click.option("--class", "cls", type=click.Choice(sorted(PARTNER)), required=True,
              help="domain class of the forward map")
@click.option("--n", "n", type=int, required=True)
@click.option("--M", "M", type=int, default=None)
@click.option("--m", "m", type=int, default=None)
@click.option("--direction", type=click.Choice(["forward", "backward"]), default="forward")
@click.option("--in", "in_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--trace", is_flag=True, help="record every hop of the chain")
@click.option("--format", "fmt", type=click.Choice(["json", "table"]), default="json")
def map_cmd(cls, n, M, m, direction, in_path, trace, fmt):
    """Map one partition (JSON rows on stdin or --in) to its image."""
    bound = _bound(cls, M, m)
    pi = _read_partition(in_path)
    try:
        pp_core.check_shape(pi, n)
    except pp_core.ShapeError as e:
        raise click.UsageError(str(e))
    log = [] if trace else None
    out, ledger = _map_one(cls, n, bound, pi, direction, log)
    if fmt == "table":
        click.echo(_table(out, "shifted" if (cls == "SPP" and direction == "backward")
                          or (cls == "eSPP" and direction == "backward") else "plane"))
        return
    record = {"input": pi, "output": out}
    if ledger is not None:
        record["stat_ledger"] = ledger
    if log is not None:
        record["trace"] = [hop(entry) for entry in log]
    click.echo(dump(record))


@main.command("render")
@click.option("--class", "cls", type=click.Choice(["stairPP", "eSPP"]), required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--m", "m", type=int, required=True)
@click.option("--model", type=click.Choice(["levels", "columns"]), default="levels")
@click.option("--in", "in_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None)
@click.option("--format", "fmt", type=click.Choice(["svg", "table"]), default="svg")
def render_cmd(cls, n, m, model, in_path, out_path, fmt):
    """Draw the lattice paths of a partition."""
    pi = _read_partition(in_path)
    tag = pp_core.make_tag(cls, n, m)
    try:
        ok = pp_core.validate(tag, pi)
    except pp_core.ShapeError as e:
        raise click.UsageError(str(e))
    if not ok:
        raise click.UsageError("input is not an element of %s(%d,%d)" % tag)
    if fmt == "table":
        text = _table(pi, pp_core.KIND[cls])
    elif cls == "eSPP":
        c = espp_chain.espp_to_paths(pi, m)
        starts = [espp_chain.source(t, n) for t in espp_chain.full_tau(c.tau)]
        text = svg(starts, c.words)
    elif model == "columns":
        fam = stair_chain.column_family(n, m)
        perm, words = stair_chain.column_paths(pi, m)
        text = svg(fam.starts(perm), words, fam.steps)
    else:
        fam = stair_chain.level_family(n, m)
        perm, words = stair_chain.stair_to_paths(pi, m)
        text = svg(fam.starts(perm), words, lines=[(2 * m + 1, "region"), (2 * m + 2, "mirror")])
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)


# ---------------------------------------------------------------------------
# verification suites

GOLDEN = {
    "pstair": (((8, 6, 6, 3), (4, 4, 0), (4, 2), (1,)), 8, ((8, 7, 7, 4), (6, 6, 2), (6, 4), (3,))),
    "odd": (((7, 6, 4, 3), (5, 5, 3), (5, 2), (4,)), 7, ((3, 2, 0, 0), (1, 1, 0), (1, 1), (0,)), (1, 1, 1, 0)),
    "even": (((8, 7, 5, 3), (6, 6, 4), (6, 2), (5,)), 8, ((4, 3, 1, 1), (2, 2, 0), (2, 2), (1,)),
             (1, 0, 1, 0), {1, 3, 4}),
    "conj": (((4, 4, 3, 3), (3, 3, 3), (3, 1), (0,)), ((4, 4, 4, 2), (3, 3, 3), (2, 1, 1), ())),
    "extract": (((4, 4, 4, 2), (3, 3, 3), (2, 1, 1), ()), ((4, 4, 3, 1), (3, 3), (2, 1), ()), (2, 4)),
    "composite": (((4, 4, 3, 3), (3, 3, 3), (3, 1), (0,)), 4, ((4, 3, 3, 2), (2, 2, 2), (2, 1), (0,)),
                  (0, 1, 0, 1), {2, 3, 4}),
}


def suite_examples(args):
    fails = []
    pi, M, q = GOLDEN["pstair"]
    if corr.pstair_to_qtcpp(pi, M) != q or corr.qtcpp_to_pstair(q, M) != pi:
        fails.append("pstair->QTCPP")
    q, M, base, t = GOLDEN["odd"]
    if corr.qtcpp_to_stair_odd(q, M) != (base, t):
        fails.append("odd split")
    q, M, base, t, dom = GOLDEN["even"]
    mk = corr.qtcpp_to_stair_even(q, M)
    if mk.base != base or mk.domain != frozenset(dom) or any(mk.t[i - 1] != t[i - 1] for i in dom):
        fails.append("even split")
    pi, T = GOLDEN["conj"]
    if tableaux.conj(pi) != T:
        fails.append("conjugation")
    U, T, letters = GOLDEN["extract"]
    rec = tableaux.multi_extract(U, tableaux.even_floor(tableaux.shape(U)))
    if (rec.base, rec.letters) != (T, letters):
        fails.append("double extraction")
    pi, M, base, t, dom = GOLDEN["composite"]
    if tableaux.spp_split(pi, M) != (base, t, frozenset(dom)):
        fails.append("composite")
    return fails


def suite_counts(args):
    fails = []
    for n in range(1, 5):
        for M in range(0, 6):
            c = {k: pp_core.count_class(pp_core.make_tag(k, n, M)) for k in ("SPP", "QTCPP", "pstairPP")}
            r = {k: pp_core.count_by_rows(pp_core.make_tag(k, n, M)) for k in c}
            if len(set(c.values()) | set(r.values())) != 1:
                fails.append({"n": n, "M": M, "enum": c, "rows": r})
        for m in range(0, 3):
            c = [pp_core.count_class(pp_core.make_tag(k, n, m)) for k in ("eSPP", "stairPP")]
            r = [pp_core.count_by_rows(pp_core.make_tag(k, n, m)) for k in ("eSPP", "stairPP")]
            if len(set(c + r)) != 1:
                fails.append({"n": n, "m": m, "enum": c, "rows": r})
    return fails


def _roundtrip_task(nm):
    n, M = nm
    r = pipeline.verify_roundtrip(n, M)
    return [{"n": n, "M": M, **f} for f in r.failures] + [{"n": n, "M": M, "stat": p} for p in r.stat_failures]


def suite_roundtrip(args):
    grid = [(n, M) for n in range(1, 5) for M in range(0, 6)]
    if args.get("jobs", 1) > 1:
        with ProcessPoolExecutor(args["jobs"]) as ex:
            parts = list(ex.map(_roundtrip_task, grid))
    else:
        parts = [_roundtrip_task(nm) for nm in grid]
    return [f for p in parts for f in p]


def suite_compat(args):
    fails = []
    for n in range(1, 5):
        for m in range(0, 3):
            fails.extend({"n": n, "m": m, "pi": p} for p in pipeline.verify_stat_ledger(n, m))
            te, ts = pp_core.make_tag("eSPP", n, m), pp_core.make_tag("stairPP", n, m)
            for pi, img in pipeline.f_table(n, m)[0].items() if m else ():
                s_in, s_out = pp_core.stat_S(te, pi), pp_core.stat_S(ts, img)
                g = pipeline.g_refine(s_in, s_out)
                back = pipeline.g_refine(s_out, s_in)
                if set(g) != s_in or set(g.values()) != s_out or any(back[v] != k for k, v in g.items()):
                    fails.append({"n": n, "m": m, "pi": pi, "g": g})
    # stage by stage: S -> S~ on the column model, S~ and S along the two chains
    for n in range(1, 4):
        for m in range(1, 3):
            ts, te = pp_core.make_tag("stairPP", n, m), pp_core.make_tag("eSPP", n, m)
            checks = [
                ("S->S~", stair_chain.s_to_s_tilde(n, m),
                 lambda x: pp_core.stat_S(ts, x), lambda x: pp_core.stat_S(ts, x, "S~")),
                ("stair", stair_chain.stair_chain_forward(n, m),
                 lambda x: pp_core.stat_S(ts, x, "S~"), stair_chain.stat_S_tilde_factored),
                ("espp", espp_chain.espp_chain_forward(n, m),
                 lambda x: pp_core.stat_S(te, x), espp_chain.stat_S_factored),
            ]
            for name, sij, e_src, e_dst in checks:
                ok, w = signed.check_compatibility(sij, e_src, e_dst, setwise=True)
                if not ok:
                    fails.append({"chain": name, "n": n, "m": m, "witness": repr(w)})
    return fails


def _lgv_cases(n, m):
    """(name, sijection, starts-of-config) for the three path configurations."""
    cols = stair_chain.column_family(n, m)
    out = [("columns", stair_chain.column_lgv(n, m), lambda c: (cols.starts(c[0]), c[1], cols.steps))]
    if m:
        lev = stair_chain.level_family(n, m)
        out.append(("levels", stair_chain.level_lgv(n, m), lambda c: (lev.starts(c[0]), c[1], lev.steps)))
        out.append(("espp", espp_chain.espp_lgv(n, m),
                    lambda c: ([espp_chain.source(t, n) for t in espp_chain.full_tau(c.tau)], c.words, UP)))
    return out


def suite_lgv(args):
    fails = []
    for n in range(1, 4):
        for m in range(0, 3):
            count = len(pp_core.enumerate_class(pp_core.make_tag("stairPP", n, m)))
            for name, sij, geom in _lgv_cases(n, m):
                where = {"config": name, "n": n, "m": m}
                ok, w = signed.check_valid(sij)
                if not ok:
                    fails.append(dict(where, witness=w))
                if sij.dst.signed_count() != count:
                    fails.append(dict(where, signed=sij.dst.signed_count(), ni=count))
                for c in sij.dst.elements():
                    side, c2 = sij.apply(1, c)
                    if side == 1 and edge_multiset(*geom(c)) != edge_multiset(*geom(c2)):
                        fails.append(dict(where, edges=repr(c)))
    return fails


def _cancels(sij):
    ok, w = signed.check_valid(sij)
    return ok and sij.src.signed_count() == 0, w


def suite_imjm(args):
    fails = []
    for x in range(-4, 5):
        for b in range(-4, 5):
            t = imjm.c7_3_telescope(x, b)
            ok, w = signed.check_valid(t)
            if ok:
                ok, w = signed.check_compatibility(t, *imjm.c7_3_eta(x, b))
            if not ok:
                fails.append({"c7_3": (x, b), "witness": repr(w)})
    r = range(-3, 4)
    for b1, b2, y in iproduct(r, r, r):
        ok, w = _cancels(imjm.c7_4_cancel(b1, b2, y))
        if not ok:
            fails.append({"c7_4": (b1, b2, y), "witness": w})
    for M, K in ((2, 0), (3, 1), (4, 0)):
        for bs in iproduct(range(-1, 4), repeat=M):
            for y in (-1, 0, 2):
                xs = tuple(range(1, K + 1))
                ok, w = _cancels(imjm.c7_5_cancel(M, K, bs, xs, y))
                if not ok:
                    fails.append({"c7_5": (M, K, bs, xs, y), "witness": w})
    for m in range(1, 5):
        if imjm.fiber_counts_I(m) != imjm.fiber_counts_J(m):
            fails.append({"m": m, "fibers": "differ"})
    for m in range(1, 4):
        s = imjm.c7_8_assemble(m)
        ok, w = signed.check_valid(s)
        if not ok:
            fails.append({"m": m, "witness": w})
        eI, eJ = imjm.eta_abs_I(m), imjm.eta_abs_J(m)
        ident = tuple(range(m))
        for side, pool in ((0, s.src.elements()), (1, s.dst.elements())):
            for x in pool:
                s2, y, p = s.step(side, x)
                _, _, q = s.step(s2, y)
                p, q = p or ident, q or ident
                ex = eI(x) if side == 0 else eJ(x)
                ey = eI(y) if s2 == 0 else eJ(y)
                if p[0] != 0 or signed.compose_perm(p, q) != ident or any(ex[k] != ey[p[k]] for k in ident):
                    fails.append({"m": m, "point": (side, x)})
    return fails


def random_chain(rng, max_size=4, classes=3):
    """Three random signed sets with a common statistic and two compatible sijections."""
    sets = []
    counts = [rng.randint(-2, 2) for _ in range(classes)]
    for name in "STU":
        pos, neg = [], []
        for c, target in enumerate(counts):
            extra = rng.randint(0, max_size)
            p, q = max(target, 0) + extra, max(-target, 0) + extra
            for k in range(p):
                pos.append((name, c, "+", k))
            for k in range(q):
                neg.append((name, c, "-", k))
        sets.append(signed.finite_set(name, pos, neg))
    key = lambda side, x: x[1]
    phi = signed.random_sijection(sets[0], sets[1], rng, key)
    psi = signed.random_sijection(sets[1], sets[2], rng, key)
    return phi, psi


def suite_kernel(args):
    rng = random.Random(args.get("seed", 0))
    fails = []
    for n, m in ((1, 1), (2, 1), (2, 2), (3, 1)):
        for stage in pipeline.f_stages(n, m) + [pipeline.f_chain(n, m)]:
            ok, w = signed.check_valid(stage)
            if not ok:
                fails.append({"stage": stage.name, "n": n, "m": m, "witness": w})
    for k in range(args.get("instances", 10000)):
        phi, psi = random_chain(rng)
        try:
            chi = signed.compose(phi, psi)
            ok, w = signed.check_valid(chi)
        except signed.SijectionError as e:
            ok, w = False, str(e)
        if not ok:
            fails.append({"instance": k, "witness": w})
            continue
        ok, w = signed.check_compatibility(chi, lambda x: x[1])
        if not ok:
            fails.append({"instance": k, "compat": repr(w)})
    return fails


def suite_calibration(args):
    fails = []
    for name, mod in (("stair", stair_chain), ("espp", espp_chain)):
        passing = mod.calibrated_orientations()
        if len(passing) != 1:
            fails.append({"chain": name, "passing": passing})
    return fails


SUITE_FUNCS = {
    "examples": suite_examples,
    "counts": suite_counts,
    "roundtrip": suite_roundtrip,
    "compat": suite_compat,
    "lgv-counts": suite_lgv,
    "imjm-fibers": suite_imjm,
    "sij-kernel": suite_kernel,
    "calibration": suite_calibration,
}


@main.command("verify")
@click.option("--suite", type=click.Choice(SUITES + ("all",)), required=True)
@click.option("--seed", type=int, default=0, help="seed for the kernel fuzz suite")
@click.option("--jobs", type=click.IntRange(1, 64), default=1)
def verify_cmd(suite, seed, jobs):
    """Run a verification suite; exit 1 with a JSON failure report on any failure."""
    names = SUITES if suite == "all" else (suite,)
    bad = False
    for name in names:
        t = time.perf_counter()
        fails = SUITE_FUNCS[name]({"seed": seed, "jobs": jobs})
        report = {"suite": name, "ok": not fails, "failures": fails[:50],
                  "failure_count": len(fails), "seconds": round(time.perf_counter() - t, 3)}
        click.echo(dump(report))
        bad = bad or bool(fails)
    sys.exit(1 if bad else 0)


if __name__ == "__main__":
    main()
